#include "punctual/deformations.hpp"

#include "punctual/error.hpp"

namespace punctual {

std::string_view to_string(DeformationBranch branch) {
  switch (branch) {
  case DeformationBranch::NoOp: return "no-op";
  case DeformationBranch::AllEqual: return "all-equal";
  case DeformationBranch::Adjacent: return "adjacent";
  case DeformationBranch::Unramified: return "unramified";
  }
  return "?";
}

DeformationCertificate deform_unramified(const std::shared_ptr<const Algebra>& algebra,
                                         const std::vector<CommIdeal>& summands) {
  const AlgebraSpec& spec = algebra->spec();
  if (spec.kind != AlgebraKind::Unramified)
    throw Error(ErrorCode::SpecMismatch, "unramified deformation needs an unramified algebra",
                spec.describe());
  if (spec.f < 2) throw Error(ErrorCode::RequiresFGreaterOne, "needs f > 1", spec.describe());
  const RowModule module = RowModule::direct_sum(summands);
  if (module.f != spec.f || module.N != spec.N)
    throw Error(ErrorCode::SpecMismatch, "expected f summands at the algebra truncation",
                spec.describe());
  const int l = module.colength();
  if (l == 0) throw Error(ErrorCode::ImproperIdeal, "the submodule is all of R^f");

  std::vector<CommIdeal> target{staircase_ideal(l, spec.N)};
  for (int k = 1; k < spec.f; ++k) target.push_back(CommIdeal::unit(spec.N));

  DeformationCertificate cert{.before = morita_lift(algebra, module), .after = morita_lift(algebra, target)};
  cert.colength = cert.after.colength();
  cert.dual_containment_before = check_dual_containment(cert.before);
  cert.dual_containment_after = check_dual_containment(cert.after);
  cert.branch = DeformationBranch::Unramified;
  cert.endpoint_only = true;
  cert.first_row = std::move(target);
  return cert;
}

DeformationCertificate deform_smooth_ram(const LeftIdeal& ideal) {
  const AlgebraSpec& spec = ideal.spec();
  if (spec.kind != AlgebraKind::SmoothRam)
    throw Error(ErrorCode::NotSmoothRam, "deformation needs a SmoothRam algebra", spec.describe());
  if (!ideal.saturated())
    throw Error(ErrorCode::UnsaturatedInput, "input ideal is not saturated", spec.describe());
  if (ideal.is_whole()) throw Error(ErrorCode::ImproperIdeal, "input is the whole algebra");

  DeformationCertificate cert{.before = ideal, .after = ideal};
  cert.colength = ideal.colength();
  cert.dual_containment_before = check_dual_containment(ideal);
  if (!cert.dual_containment_before) {
    cert.chain_shape_after = has_chain_shape(ideal);
    return cert;
  }

  if (spec.f > 1) {
    DeformationCertificate inner = deform_smooth_ram(block_corner(ideal));
    inner.before = ideal;
    inner.after = block_lift(inner.after, ideal.algebra_ptr());
    inner.colength = inner.after.colength();
    inner.dual_containment_after = check_dual_containment(inner.after);
    inner.chain_shape_after = has_chain_shape(inner.after);
    return inner;
  }

  const IdealChain chain = chain_decompose(ideal);
  const int e = chain.length();
  std::vector<CommIdeal> primed = chain.entries;
  if (chain.all_equal()) {
    cert.branch = DeformationBranch::AllEqual;
    primed[e - 1] = nakayama_corank1_pick(chain.at(e));
    primed[0] = socle_pick(chain.at(1));
  } else {
    int m = 1;
    while (chain.at(m) == chain.at(m + 1)) ++m;
    cert.branch = DeformationBranch::Adjacent;
    cert.branch_index = m;
    IdealPair pair = socle_and_cosocle_picks(chain.at(m + 1), chain.at(m));
    primed[m - 1] = std::move(pair.smaller);
    primed[m] = std::move(pair.larger);
  }

  std::vector<std::vector<CommIdeal>> grid;
  for (int i = 0; i < e; ++i) {
    grid.emplace_back();
    for (int j = 0; j < e; ++j) {
      const int k = circulant_index(e, i, j);
      grid.back().push_back(i == 0 ? primed[k - 1] : chain.at(k));
    }
  }
  for (int j = 0; j < e; ++j) cert.first_row.push_back(grid[0][j]);
  // The checked constructor verifies closure under every generator.
  cert.after = LeftIdeal(ideal.algebra_ptr(), grid_subspace(ideal.algebra(), grid));
  cert.colength = cert.after.colength();
  cert.dual_containment_after = check_dual_containment(cert.after);
  cert.chain_shape_after = has_chain_shape(cert.after);
  cert.chain = chain;
  return cert;
}

namespace {

CycScalar pivot_ratio(const SparseVec& image, const SparseVec& w) {
  const CycScalar* c = find_coeff(image, w.front().index);
  return c ? *c : CycScalar(0);
}

} // namespace

LeftIdeal family_fiber(const LeftIdeal& first, const LeftIdeal& second, const CycScalar& a,
                       const CycScalar& b) {
  if (first.spec() != second.spec())
    throw Error(ErrorCode::TruncMismatch, "family endpoints live in different algebras");
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPoint, "[0:0] is not a point of P^1");
  if (first.spec().f > 1 && first.spec().kind == AlgebraKind::SmoothRam) {
    LeftIdeal c1 = block_corner(first);
    LeftIdeal c2 = block_corner(second);
    if (block_lift(c1, first.algebra_ptr()) != first || block_lift(c2, second.algebra_ptr()) != second)
      throw Error(ErrorCode::NotCosimple, "endpoints are not of the form M_f(J)");
    return block_lift(family_fiber(c1, c2, a, b), first.algebra_ptr());
  }

  const Algebra& alg = first.algebra();
  const Subspace meet = intersection(first.basis(), second.basis());
  const auto q1 = quotient_basis(first.basis(), meet);
  const auto q2 = quotient_basis(second.basis(), meet);
  if (q1.size() != 1 || q2.size() != 1)
    throw Error(ErrorCode::NotCosimple, "quotients by the intersection are not one-dimensional",
                std::to_string(q1.size()) + " and " + std::to_string(q2.size()));
  const SparseVec& w1 = q1.front();
  const SparseVec& w2 = q2.front();
  for (const auto& g : alg.generators()) {
    const SparseVec r1 = meet.reduce(alg.multiply(g, w1));
    const SparseVec r2 = meet.reduce(alg.multiply(g, w2));
    const CycScalar l1 = pivot_ratio(r1, w1);
    const CycScalar l2 = pivot_ratio(r2, w2);
    SparseVec s1 = w1;
    SparseVec s2 = w2;
    scale(s1, l1);
    scale(s2, l2);
    if (r1 != s1 || r2 != s2 || l1 != l2)
      throw Error(ErrorCode::NotCosimple, "the two quotients are not the same simple module");
  }
  Subspace fiber = meet;
  SparseVec combo = w1;
  scale(combo, a);
  fiber.insert(axpy(combo, b, w2));
  return LeftIdeal(first.algebra_ptr(), std::move(fiber));
}

std::vector<std::pair<CycScalar, CycScalar>> default_family_points(int count) {
  std::vector<std::pair<CycScalar, CycScalar>> out;
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    for (const Rational& t : {Rational(k), Rational(-k), Rational(1, k + 1), Rational(-1, k + 1)}) {
      if (static_cast<int>(out.size()) == count) break;
      out.emplace_back(CycScalar(1), CycScalar(t));
    }
  }
  return out;
}

void sample_family(DeformationCertificate& certificate,
                   const std::vector<std::pair<CycScalar, CycScalar>>& points) {
  certificate.family_samples.clear();
  if (certificate.endpoint_only || certificate.branch == DeformationBranch::NoOp) return;
  std::vector<std::pair<CycScalar, CycScalar>> all{{CycScalar(1), CycScalar(0)},
                                                   {CycScalar(0), CycScalar(1)}};
  all.insert(all.end(), points.begin(), points.end());
  for (const auto& [a, b] : all) {
    LeftIdeal fiber = family_fiber(certificate.before, certificate.after, a, b);
    const int c = fiber.colength();
    certificate.family_samples.push_back({a, b, std::move(fiber), c});
  }
}

namespace {

// Rows of `v` inside the first diagonal block row band (E v for E the first
// block unit).
SparseVec first_block_rows(const Algebra& alg, const SparseVec& v) {
  const int k = alg.spec().block();
  SparseVec out;
  for (const auto& t : v)
    if (alg.label(t.index).row < k) out.push_back(t);
  return out;
}

// Every simple module of B = A_{e,e',1} is one-dimensional, checked by
// exhibiting the characters and showing the intersection of their kernels is
// nilpotent modulo m. Returns the number of characters.
int certify_simple_modules(const AlgebraSpec& spec, std::size_t max_dim, std::string& argument) {
  const AlgebraSpec b_spec = spec.with_f(1).with_truncation(2);
  const auto chars = find_codim_one_quotients(b_spec, max_dim);
  auto b = Algebra::make(b_spec);
  Subspace k = LeftIdeal::whole(b).basis();
  for (const auto& c : chars) k = intersection(k, c.basis());
  if (k.codim() != chars.size())
    throw std::logic_error("characters of the reduced algebra are not independent");
  // Reduce modulo m B: keep monomial-free coordinates only.
  auto constant_part = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& t : v)
      if (t.index < b->rank()) out.push_back(t);
    return out;
  };
  std::vector<SparseVec> radical;
  for (const auto& [p, row] : k.rows()) {
    SparseVec c = constant_part(row);
    if (!c.empty()) radical.push_back(std::move(c));
  }
  Subspace power = Subspace::span(b->dim(), radical);
  for (std::uint32_t step = 0; power.dim() > 0; ++step) {
    if (step > b->rank()) throw std::logic_error("intersection of character kernels is not nilpotent");
    std::vector<SparseVec> next;
    for (const auto& [p, row] : power.rows())
      for (const auto& r : radical) {
        SparseVec prod = constant_part(b->multiply(row, r));
        if (!prod.empty()) next.push_back(std::move(prod));
      }
    power = Subspace::span(b->dim(), next);
  }
  argument = std::to_string(chars.size()) +
             " characters of the reduced algebra; the intersection of their kernels is nilpotent "
             "modulo m, so every simple module has length f = " +
             std::to_string(spec.f);
  return static_cast<int>(chars.size());
}

} // namespace

DivisibilityResult divisibility_probe(const AlgebraSpec& spec, int l, std::size_t max_dim) {
  spec.validate();
  if (l < 1) throw Error(ErrorCode::ImproperIdeal, "colength must be positive");
  if (l > 8) throw Error(ErrorCode::DimensionBound, "colength probe is limited to l <= 8", std::to_string(l));
  DivisibilityResult result;
  result.simple_count = certify_simple_modules(spec, max_dim, result.argument);
  if (l % spec.f != 0) {
    result.exists = false;
    result.argument += "; f does not divide l";
    return result;
  }

  auto alg = Algebra::make(spec.with_truncation(std::max(spec.N, l + 2)));
  if (alg->dim() > max_dim)
    throw Error(ErrorCode::DimensionBound, "truncated algebra exceeds the dimension bound",
                std::to_string(alg->dim()) + " > " + std::to_string(max_dim));
  auto b = Algebra::make(alg->spec().with_f(1));
  // Generators of B acting on the first block row band of A.
  std::vector<SparseVec> ops;
  std::vector<bool> idempotent;
  for (std::size_t g = 0; g < b->generators().size(); ++g) {
    SparseVec v;
    for (const auto& t : b->generators()[g]) {
      const auto& lb = b->label(t.index);
      v.push_back({alg->index(lb.row, lb.col, lb.xpow, lb.ypow, lb.mono), t.value});
    }
    ops.push_back(normalize_terms(std::move(v)));
    idempotent.push_back(b->generator_types()[g] == Algebra::GeneratorType::Idempotent);
  }
  std::vector<std::size_t> idem;
  for (std::size_t g = 0; g < ops.size(); ++g)
    if (idempotent[g]) idem.push_back(g);

  LeftIdeal current = LeftIdeal::whole(alg);
  for (int step = 0; step < l / spec.f; ++step) {
    std::vector<SparseVec> rows;
    for (const auto& [p, row] : current.basis().rows()) {
      SparseVec r = first_block_rows(*alg, row);
      if (!r.empty()) rows.push_back(std::move(r));
    }
    const Subspace band = Subspace::span(alg->dim(), rows);
    bool advanced = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idem.size()) && !advanced; ++mask) {
      Subspace u(alg->dim());
      for (const auto& [p, m] : band.rows()) {
        u.insert(alg->shift(m, 1, 0));
        u.insert(alg->shift(m, 0, 1));
        std::size_t bit = 0;
        for (std::size_t g = 0; g < ops.size(); ++g) {
          SparseVec img = alg->multiply(ops[g], m);
          if (bit < idem.size() && idem[bit] == g) {
            if ((mask >> bit) & 1) img = axpy(img, CycScalar(-1), m);
            ++bit;
          }
          u.insert(img);
        }
      }
      if (u.dim() >= band.dim()) continue;
      const auto q = quotient_basis(band, u);
      for (std::size_t k = 1; k < q.size(); ++k) u.insert(q[k]);
      current = close_left_ideal(alg, u.basis());
      advanced = true;
    }
    if (!advanced) throw std::logic_error("no simple quotient found for a nonzero module");
  }
  if (current.colength() != l) throw std::logic_error("witness colength differs from the target");
  result.exists = true;
  result.witness = std::move(current);
  result.argument += "; witness built from " + std::to_string(l / spec.f) + " simple quotients";
  return result;
}

} // namespace punctual
