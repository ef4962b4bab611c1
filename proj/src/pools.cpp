#include "punctual/pools.hpp"

#include "punctual/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace punctual {

std::string_view to_string(PoolKind kind) {
  switch (kind) {
  case PoolKind::Left: return "left";
  case PoolKind::LeftSigma: return "left+sigma";
  case PoolKind::TwoSided: return "two-sided";
  case PoolKind::TwoSidedSigma: return "two-sided+sigma";
  }
  return "?";
}

std::uint64_t instance_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  std::uint64_t h = 14695981039346656037ull ^ seed;
  auto mix = [&h](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (unsigned char c : label) mix(c);
  mix(index);
  // splitmix64 finalizer
  h += 0x9e3779b97f4a7c15ull;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

namespace {

std::string fingerprint(const Subspace& s) {
  std::string out;
  for (const auto& [p, row] : s.rows()) {
    out += std::to_string(p) + ":";
    for (const auto& t : row) out += std::to_string(t.index) + "=" + t.value.to_string() + ";";
    out += "|";
  }
  return out;
}

const std::vector<Rational>& slopes() {
  static const std::vector<Rational> t = {Rational(1),  Rational(-1),   Rational(2),     Rational(-2),
                                          Rational(3),  Rational(-3),   Rational(1, 2),  Rational(-1, 2)};
  return t;
}

SparseVec random_low_degree(const Algebra& alg, const std::vector<std::vector<std::uint32_t>>& by_degree,
                            std::mt19937_64& rng) {
  // Terms from degrees d and d + 1.
  std::uniform_int_distribution<std::size_t> lowest(0, by_degree.size() - 1);
  const std::size_t d = lowest(rng);
  std::vector<std::uint32_t> low = by_degree[d];
  if (d + 1 < by_degree.size()) low.insert(low.end(), by_degree[d + 1].begin(), by_degree[d + 1].end());
  std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<int> terms(1, 3);
  std::vector<Term> out;
  for (int t = terms(rng); t > 0; --t) {
    CycScalar c(coeff(rng));
    const int s = alg.skew_order();
    if (s > 1 && rng() % 3 == 0) c *= CycScalar::zeta(s, static_cast<long>(rng() % s));
    if (!c.is_zero()) out.push_back({low[pick(rng)], c});
  }
  return normalize_terms(std::move(out));
}

} // namespace

std::vector<LeftIdeal> random_ideal_pool(const AlgebraSpec& spec, PoolKind kind, int count, std::uint64_t seed) {
  auto alg = Algebra::make(spec);
  const int N = spec.N;
  if (N < 2) throw Error(ErrorCode::InvalidSpec, "pools need N >= 2");
  std::vector<std::vector<std::uint32_t>> by_degree(std::max(2, N - 2) + 1);
  for (std::uint32_t i = 0; i < alg->dim(); ++i)
    if (alg->degree(i) < static_cast<int>(by_degree.size())) by_degree[alg->degree(i)].push_back(i);

  ClosureSides sides;
  sides.right = kind == PoolKind::TwoSided || kind == PoolKind::TwoSidedSigma;
  sides.dual_conjugation = kind == PoolKind::LeftSigma || kind == PoolKind::TwoSidedSigma;
  if (sides.dual_conjugation && spec.kind != AlgebraKind::SmoothRam && spec.kind != AlgebraKind::Unramified)
    throw Error(ErrorCode::SpecMismatch, "conjugation pools need SmoothRam or Unramified", spec.describe());

  const std::string label = spec.describe() + "/" + std::string(to_string(kind));
  std::vector<LeftIdeal> out;
  std::set<std::string> seen;
  for (std::uint64_t attempt = 0; static_cast<int>(out.size()) < count && attempt < 20ull * count; ++attempt) {
    std::mt19937_64 rng(instance_seed(seed, label, attempt));
    std::uniform_int_distribution<int> split(1, N - 1);
    std::vector<SparseVec> seeds;
    if (N > 2 && rng() % 2 == 0) {
      std::uniform_int_distribution<int> power(2, N - 1);
      const int k = power(rng);
      for (int a = 0; a <= k; ++a) seeds.push_back(alg->central(TruncSeries::monomial(N, a, k - a)));
    } else {
      const int p = split(rng);
      const int q = std::max(1, N - p - static_cast<int>(rng() % 2));
      seeds = {alg->central(TruncSeries::monomial(N, p, 0)), alg->central(TruncSeries::monomial(N, 0, q))};
    }
    std::uniform_int_distribution<int> extra(1, 3);
    for (int g = extra(rng); g > 0; --g) seeds.push_back(random_low_degree(*alg, by_degree, rng));
    Subspace s = close_subspace(*alg, seeds, sides);
    LeftIdeal ideal = LeftIdeal::assume_closed(alg, std::move(s));
    if (!ideal.saturated() || ideal.is_whole()) continue;
    if (!seen.insert(fingerprint(ideal.basis())).second) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<CommIdeal> comm_ideal_pool(int max_colength, int N) {
  std::vector<CommIdeal> out;
  // Staircases: partitions lambda_0 >= lambda_1 >= ... of n, ideal spanned by
  // u^i v^j with j >= lambda_i.
  std::vector<int> parts;
  auto emit = [&]() {
    std::vector<TruncSeries> gens;
    for (std::size_t i = 0; i < parts.size(); ++i) gens.push_back(TruncSeries::monomial(N, static_cast<int>(i), parts[i]));
    gens.push_back(TruncSeries::monomial(N, static_cast<int>(parts.size()), 0));
    out.push_back(ideal_from_generators(gens, N));
  };
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  for (int n = 1; n <= max_colength; ++n) recurse(recurse, n, n);

  const TruncSeries u = TruncSeries::monomial(N, 1, 0);
  const TruncSeries v = TruncSeries::monomial(N, 0, 1);
  for (const Rational& t : slopes()) {
    const CycScalar c(t);
    for (int k = 2; k <= max_colength; ++k)
      out.push_back(ideal_from_generators({v - c * u, TruncSeries::monomial(N, k, 0)}, N));
    if (max_colength >= 3)
      out.push_back(ideal_from_generators({u - c * TruncSeries::monomial(N, 0, 2), TruncSeries::monomial(N, 0, 3)}, N));
  }
  return out;
}

std::vector<IdealChain> chain_pool(int e, int max_colength, bool tight_truncation) {
  const int base_N = max_colength + 2;
  std::vector<CommIdeal> pool = comm_ideal_pool(max_colength / e, base_N);
  pool.insert(pool.begin(), CommIdeal::unit(base_N));
  std::vector<IdealChain> out;
  std::vector<std::size_t> idx(e, 0);
  for (;;) {
    IdealChain chain;
    for (std::size_t k : idx) chain.entries.push_back(pool[k]);
    const int total = e * chain.colength_sum();
    if (total >= 1 && total <= max_colength) {
      try {
        chain.validate();
        if (tight_truncation && total + 2 != base_N)
          for (auto& j : chain.entries) j = retruncate(j, total + 2);
        out.push_back(std::move(chain));
      } catch (const Error&) {
      }
    }
    int pos = e - 1;
    while (pos >= 0 && ++idx[pos] == pool.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

} // namespace punctual
