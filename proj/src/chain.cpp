#include "punctual/chain.hpp"

#include "punctual/error.hpp"

namespace punctual {

void IdealChain::validate() const {
  if (entries.empty()) throw Error(ErrorCode::ChainInvariantViolated, "empty chain");
  const int N = trunc_order();
  for (const auto& j : entries)
    if (j.trunc_order() != N)
      throw Error(ErrorCode::ChainInvariantViolated, "chain entries have different truncation orders");
  for (int i = 1; i < length(); ++i)
    if (!at(i).contains(at(i + 1)))
      throw Error(ErrorCode::ChainInvariantViolated, "chain is not decreasing",
                  "J_" + std::to_string(i) + " does not contain J_" + std::to_string(i + 1));
  const CommIdeal u_j1 = ideal_times(TruncSeries::monomial(N, 1, 0), at(1));
  if (!at(length()).contains(u_j1))
    throw Error(ErrorCode::ChainInvariantViolated, "last entry does not contain u J_1",
                "J_" + std::to_string(length()));
}

bool IdealChain::all_equal() const {
  for (const auto& j : entries)
    if (j != entries.front()) return false;
  return true;
}

int IdealChain::colength_sum() const {
  int total = 0;
  for (const auto& j : entries) total += j.colength();
  return total;
}

int circulant_index(int e, int i, int j) { return i <= j ? e - (j - i) : i - j; }

Subspace grid_subspace(const Algebra& algebra, const std::vector<std::vector<CommIdeal>>& grid) {
  const int n = algebra.matrix_size();
  Subspace s(algebra.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [p, row] : grid[i][j].basis().rows()) {
        SparseVec v;
        for (const auto& t : row) v.push_back({algebra.index(i, j, 0, 0, t.index), t.value});
        s.insert(v);
      }
  return s;
}

namespace {

void require_smooth(const AlgebraSpec& spec) {
  if (spec.kind != AlgebraKind::SmoothRam)
    throw Error(ErrorCode::SpecMismatch, "ideal chains describe SmoothRam ideals", spec.describe());
}

std::vector<std::vector<CommIdeal>> circulant_grid(const IdealChain& chain) {
  const int e = chain.length();
  std::vector<std::vector<CommIdeal>> grid;
  for (int i = 0; i < e; ++i) {
    grid.emplace_back();
    for (int j = 0; j < e; ++j) grid.back().push_back(chain.at(circulant_index(e, i, j)));
  }
  return grid;
}

// Coordinate ideal at (i, j) of a two-sided ideal: e_ii I e_jj lies in I.
CommIdeal projected_ideal(const LeftIdeal& ideal, int i, int j) {
  const Algebra& alg = ideal.algebra();
  const int N = ideal.spec().N;
  Subspace s(monomial_count(N));
  for (const auto& [p, row] : ideal.basis().rows()) {
    SparseVec v;
    for (const auto& t : row) {
      const auto& l = alg.label(t.index);
      if (l.row == i && l.col == j) v.push_back({l.mono, t.value});
    }
    if (!v.empty()) s.insert(v);
  }
  return CommIdeal(N, std::move(s));
}

} // namespace

LeftIdeal chain_compose(const IdealChain& chain, const std::shared_ptr<const Algebra>& algebra) {
  const AlgebraSpec& spec = algebra->spec();
  require_smooth(spec);
  chain.validate();
  if (chain.length() != spec.e)
    throw Error(ErrorCode::SpecMismatch, "chain length differs from the ramification index",
                spec.describe());
  if (chain.trunc_order() != spec.N)
    throw Error(ErrorCode::TruncMismatch, "chain truncation differs from the algebra");
  if (spec.f > 1) return block_lift(chain_compose(chain, Algebra::make(spec.with_f(1))), algebra);
  return LeftIdeal::assume_closed(algebra, grid_subspace(*algebra, circulant_grid(chain)));
}

IdealChain chain_decompose(const LeftIdeal& ideal) {
  const AlgebraSpec& spec = ideal.spec();
  require_smooth(spec);
  if (!ideal.saturated()) throw Error(ErrorCode::NotSaturated, "chain decomposition needs a saturated ideal");
  if (spec.f > 1) {
    LeftIdeal corner = block_corner(ideal);
    if (block_lift(corner, ideal.algebra_ptr()) != ideal)
      throw Error(ErrorCode::NotCirculant, "ideal is not of the form M_f(J)", "block structure");
    return chain_decompose(corner);
  }
  auto dc = dual_containment_check(ideal);
  if (!dc.holds)
    throw Error(ErrorCode::NotCirculant, "ideal fails dual containment, so it has no circulant decomposition",
                "dual containment witness");
  const int e = spec.e;
  IdealChain chain;
  for (int i = 0; i < e; ++i) chain.entries.push_back(projected_ideal(ideal, i, e - 1));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      const int k = circulant_index(e, i, j);
      if (projected_ideal(ideal, i, j) != chain.at(k))
        throw Error(ErrorCode::NotCirculant, "coordinate ideals are not circulant",
                    "J_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} != J_{" +
                        std::to_string(k) + "," + std::to_string(e) + "}");
    }
  chain.validate();
  return chain;
}

bool has_chain_shape(const LeftIdeal& ideal) {
  const AlgebraSpec& spec = ideal.spec();
  require_smooth(spec);
  if (spec.f > 1) {
    LeftIdeal corner = block_corner(ideal);
    return block_lift(corner, ideal.algebra_ptr()) == ideal && has_chain_shape(corner);
  }
  const int e = spec.e;
  IdealChain chain;
  for (int i = 0; i < e; ++i) chain.entries.push_back(position_ideal(ideal, i, e - 1));
  try {
    chain.validate();
  } catch (const Error&) {
    return false;
  }
  return grid_subspace(ideal.algebra(), circulant_grid(chain)) == ideal.basis();
}

} // namespace punctual
