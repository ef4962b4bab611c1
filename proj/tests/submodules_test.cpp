#include "oracles.hpp"

#include "punctual/chain.hpp"
#include "punctual/submodules.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace punctual;
using oracle::expect_code;

namespace {

std::shared_ptr<const Algebra> smooth(int e, int f, int N) {
  return Algebra::make(AlgebraSpec::smooth_ram(e, f, N));
}

LeftIdeal closure(const std::vector<AlgebraElement>& gens) { return close_left_ideal(gens); }

TruncSeries mono(int N, int i, int j) { return TruncSeries::monomial(N, i, j); }

// Random sparse element with small integer coefficients.
SparseVec random_element(const Algebra& alg, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<std::uint32_t> pick(0, alg.dim() - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    const long c = coeff(rng);
    if (c != 0) out.push_back({pick(rng), CycScalar(c)});
  }
  return normalize_terms(std::move(out));
}

// Random left ideal that is saturated because it contains u^p and v^q with
// p + q = N. The extra generators live in degree at most one so that they
// survive truncation.
LeftIdeal random_saturated(const std::shared_ptr<const Algebra>& alg, std::mt19937_64& rng) {
  const int N = alg->spec().N;
  std::uniform_int_distribution<int> split(1, N - 1);
  const int p = split(rng);
  std::vector<SparseVec> gens = {alg->central(mono(N, p, 0)), alg->central(mono(N, 0, N - p))};
  std::vector<std::uint32_t> low;
  for (std::uint32_t i = 0; i < alg->dim(); ++i)
    if (alg->degree(i) <= 1) low.push_back(i);
  std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<int> count(1, 2);
  for (int g = count(rng); g > 0; --g) {
    std::vector<Term> terms;
    for (int t = 0; t < 3; ++t)
      if (const long c = coeff(rng); c != 0) terms.push_back({low[pick(rng)], CycScalar(c)});
    gens.push_back(normalize_terms(std::move(terms)));
  }
  return close_left_ideal(alg, gens);
}

} // namespace

TEST(LeftIdeal, WholeAndClosureOfOne) {
  auto alg = smooth(2, 1, 3);
  LeftIdeal whole = LeftIdeal::whole(alg);
  EXPECT_TRUE(whole.is_whole());
  EXPECT_EQ(whole.colength(), 0);
  EXPECT_EQ(closure({AlgebraElement::one(alg)}), whole);
}

TEST(LeftIdeal, MaximalIdealsHaveColengthOne) {
  for (int e : {2, 3, 4}) {
    auto alg = smooth(e, 1, 3);
    for (int i = 1; i <= e; ++i) {
      LeftIdeal m = closure(maximal_ideal(alg, i));
      EXPECT_TRUE(m.saturated());
      EXPECT_EQ(m.colength(), 1) << "e=" << e << " i=" << i;
      EXPECT_TRUE(is_two_sided(m));
    }
  }
  auto sing = Algebra::make(AlgebraSpec::singular_ram(2, 1, 3));
  LeftIdeal n = closure(maximal_ideal(sing, 1));
  EXPECT_EQ(n.colength(), 1);
  EXPECT_TRUE(is_two_sided(n));
}

TEST(LeftIdeal, MaximalIdealFromSpelledOutGenerators) {
  // m_1 of B for e = 2: u b_11, v b_11, b_12, b_21, b_22.
  auto alg = smooth(2, 1, 4);
  const int N = 4;
  LeftIdeal m = closure({basis_times(alg, 1, 1, mono(N, 1, 0)), basis_times(alg, 1, 1, mono(N, 0, 1)),
                         standard_basis(alg, 1, 2),
                         standard_basis(alg, 2, 1), standard_basis(alg, 2, 2)});
  EXPECT_EQ(m.colength(), 1);
  EXPECT_EQ(m, closure(maximal_ideal(alg, 1)));
}

TEST(LeftIdeal, IntersectionOfTwoMaximals) {
  auto alg = smooth(2, 1, 3);
  LeftIdeal m1 = closure(maximal_ideal(alg, 1));
  LeftIdeal m2 = closure(maximal_ideal(alg, 2));
  LeftIdeal both(alg, intersection(m1.basis(), m2.basis()));
  EXPECT_EQ(both.colength(), 2);
}

TEST(LeftIdeal, CheckedConstructorRejectsNonIdeals) {
  auto alg = smooth(2, 1, 3);
  Subspace s = Subspace::span(alg->dim(), {standard_basis(alg, 1, 1).coords()});
  try {
    LeftIdeal bad(alg, s);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotAnIdeal);
    EXPECT_FALSE(err.offending().empty());
  }
}

TEST(LeftIdeal, UnsaturatedColengthThrows) {
  auto alg = smooth(2, 1, 3);
  LeftIdeal principal = close_left_ideal(alg, {alg->central(mono(3, 1, 0))});
  EXPECT_FALSE(principal.saturated());
  expect_code([&] { (void)principal.colength(); }, ErrorCode::NotSaturated);
  expect_code([&] { (void)is_two_sided(principal); }, ErrorCode::NotSaturated);
}

TEST(LeftIdeal, ClosureMatchesBruteForce) {
  std::mt19937_64 rng(11);
  const std::vector<AlgebraSpec> specs = {
      AlgebraSpec::smooth_ram(2, 1, 3), AlgebraSpec::smooth_ram(3, 1, 3),
      AlgebraSpec::singular_ram(2, 1, 3), AlgebraSpec::singular_ram(3, 1, 3),
      AlgebraSpec::unramified(2, 3), AlgebraSpec::make(4, 2, 1, 3)};
  for (const auto& spec : specs) {
    auto alg = Algebra::make(spec);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<SparseVec> gens = {random_element(*alg, rng, 3), random_element(*alg, rng, 2)};
      const LeftIdeal fast = close_left_ideal(alg, gens);
      EXPECT_EQ(fast.basis(), oracle::brute_closure(*alg, gens, true, false)) << spec.describe();
    }
  }
}

TEST(LeftIdeal, TwoSidedMatchesBruteForce) {
  std::mt19937_64 rng(12);
  int two_sided = 0;
  for (const auto& spec : {AlgebraSpec::smooth_ram(2, 1, 3), AlgebraSpec::singular_ram(2, 1, 3),
                           AlgebraSpec::unramified(2, 3), AlgebraSpec::smooth_ram(2, 2, 3)}) {
    auto alg = Algebra::make(spec);
    for (int trial = 0; trial < 10; ++trial) {
      LeftIdeal ideal = random_saturated(alg, rng);
      const bool fast = is_two_sided(ideal);
      EXPECT_EQ(fast, oracle::brute_two_sided(ideal)) << spec.describe();
      two_sided += fast;
      auto check = two_sided_check(ideal);
      if (!check.holds) {
        ASSERT_TRUE(check.witness.has_value());
        EXPECT_FALSE(ideal.contains(*check.witness));
      }
    }
  }
  EXPECT_GT(two_sided, 0);
  EXPECT_LT(two_sided, 40);
}

TEST(LeftIdeal, TwoSidedClosureIsTwoSided) {
  std::mt19937_64 rng(13);
  auto alg = smooth(3, 1, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<SparseVec> seed = {random_element(*alg, rng, 3), alg->central(mono(3, 1, 0)),
                                   alg->central(mono(3, 0, 1))};
    Subspace s = close_subspace(*alg, seed, {true, true, false});
    EXPECT_EQ(s, oracle::brute_closure(*alg, seed, true, true));
    LeftIdeal ideal(alg, s);
    EXPECT_TRUE(is_two_sided(ideal));
  }
}

TEST(DualContainment, Examples) {
  auto alg = smooth(2, 1, 4);
  // rad(B) = m_1 cap m_2 holds; m_1 alone fails.
  LeftIdeal m1 = closure(maximal_ideal(alg, 1));
  LeftIdeal m2 = closure(maximal_ideal(alg, 2));
  LeftIdeal rad(alg, intersection(m1.basis(), m2.basis()));
  EXPECT_TRUE(check_dual_containment(rad));
  auto check = dual_containment_check(m1);
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_FALSE(m1.contains(*check.witness));
  EXPECT_TRUE(check_dual_containment(LeftIdeal::whole(alg)));

  auto unr = Algebra::make(AlgebraSpec::unramified(2, 4));
  LeftIdeal lifted = morita_lift(unr, {CommIdeal::maximal(4), CommIdeal::unit(4)});
  EXPECT_FALSE(check_dual_containment(lifted));
  EXPECT_FALSE(is_two_sided(lifted));
}

TEST(DualContainment, SpecMismatchOutsideSmoothAndUnramified) {
  auto alg = Algebra::make(AlgebraSpec::singular_ram(2, 1, 3));
  LeftIdeal n = closure(maximal_ideal(alg, 1));
  expect_code([&] { (void)check_dual_containment(n); }, ErrorCode::SpecMismatch);
}

TEST(DualContainment, MatchesLiteralTest) {
  std::mt19937_64 rng(14);
  int held = 0;
  for (const auto& spec : {AlgebraSpec::smooth_ram(2, 1, 3), AlgebraSpec::smooth_ram(3, 1, 3),
                           AlgebraSpec::smooth_ram(2, 2, 3), AlgebraSpec::unramified(2, 3)}) {
    auto alg = Algebra::make(spec);
    for (int trial = 0; trial < 10; ++trial) {
      LeftIdeal ideal = random_saturated(alg, rng);
      const bool fast = check_dual_containment(ideal);
      EXPECT_EQ(fast, oracle::brute_dual_containment(ideal)) << spec.describe();
      held += fast;
    }
  }
  EXPECT_GT(held, 0);
  EXPECT_LT(held, 40);
}

TEST(DualContainment, UnramifiedAgreesWithTwoSided) {
  std::mt19937_64 rng(15);
  auto alg = Algebra::make(AlgebraSpec::unramified(3, 3));
  for (int trial = 0; trial < 8; ++trial) {
    LeftIdeal ideal = random_saturated(alg, rng);
    EXPECT_EQ(check_dual_containment(ideal), is_two_sided(ideal));
  }
}

TEST(DualGenerator, NormalizesTheOrder) {
  for (int e : {2, 3, 4}) {
    auto alg = smooth(e, 1, 4);
    const SparseVec c = alg->dual_generator();
    Subspace all(alg->dim());
    for (const auto& b : oracle::full_basis(*alg)) all.insert(b);
    const Subspace cB = oracle::times(*alg, c, all, false);
    const Subspace Bc = oracle::times(*alg, c, all, true);
    EXPECT_EQ(cB, Bc) << "e=" << e;

    // c B = u B*: coordinate ideal uR on the diagonal, R elsewhere.
    std::vector<std::vector<CommIdeal>> grid(e);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        grid[i].push_back(i != j ? CommIdeal::unit(4) : ideal_from_generators({mono(4, 1, 0)}, 4));
    EXPECT_EQ(cB, grid_subspace(*alg, grid));
  }
}

TEST(Morita, LiftAndDropRoundTrip) {
  const int N = 4;
  auto alg = Algebra::make(AlgebraSpec::unramified(2, N));
  const std::vector<std::vector<CommIdeal>> cases = {
      {CommIdeal::maximal(N), CommIdeal::unit(N)},
      {CommIdeal::maximal(N), CommIdeal::maximal(N)},
      {staircase_ideal(3, N), CommIdeal::maximal(N)},
      {CommIdeal::unit(N), CommIdeal::unit(N)}};
  for (const auto& summands : cases) {
    const RowModule m = RowModule::direct_sum(summands);
    LeftIdeal lifted = morita_lift(alg, m);
    EXPECT_EQ(lifted.colength(), 2 * m.colength());
    EXPECT_EQ(morita_drop(lifted), m);
    auto split = morita_drop(lifted).summands();
    ASSERT_TRUE(split.has_value());
    EXPECT_EQ(*split, summands);
  }
  EXPECT_TRUE(morita_lift(alg, {CommIdeal::unit(N), CommIdeal::unit(N)}).is_whole());
  LeftIdeal m_plus_r = morita_lift(alg, {CommIdeal::maximal(N), CommIdeal::unit(N)});
  EXPECT_EQ(m_plus_r.colength(), 2);
  EXPECT_FALSE(is_two_sided(m_plus_r));
  // M_2(m) is two-sided.
  EXPECT_TRUE(is_two_sided(morita_lift(alg, {CommIdeal::maximal(N), CommIdeal::maximal(N)})));
}

TEST(Morita, NonSplitModules) {
  const int N = 3;
  auto alg = Algebra::make(AlgebraSpec::unramified(2, N));
  // M = {(a, b) : a = b mod m} + m^2 R^2.
  const std::uint32_t stride = monomial_count(N);
  std::vector<SparseVec> gens = {normalize_terms({{0, CycScalar(1)}, {stride, CycScalar(1)}})};
  for (std::uint32_t c = 0; c < 2; ++c)
    for (std::uint32_t m = 1; m < stride; ++m) gens.push_back(unit_vector(c * stride + m));
  RowModule module{2, N, Subspace::span(2 * stride, gens)};
  EXPECT_EQ(module.colength(), 1);
  EXPECT_FALSE(module.summands().has_value());
  LeftIdeal lifted = morita_lift(alg, module);
  EXPECT_EQ(lifted.colength(), 2);
  EXPECT_EQ(morita_drop(lifted), module);
}

TEST(Morita, RejectsOtherKinds) {
  auto alg = smooth(2, 1, 3);
  expect_code([&] { (void)morita_lift(alg, {CommIdeal::unit(3)}); }, ErrorCode::SpecMismatch);
  expect_code([&] { (void)morita_drop(LeftIdeal::whole(alg)); }, ErrorCode::SpecMismatch);
}

TEST(BlockCorner, LiftRoundTrip) {
  auto b = smooth(2, 1, 3);
  auto mb = smooth(2, 2, 3);
  LeftIdeal m1 = closure(maximal_ideal(b, 1));
  LeftIdeal lifted = block_lift(m1, mb);
  EXPECT_EQ(lifted.colength(), 4);
  EXPECT_EQ(block_corner(lifted), m1);
  EXPECT_TRUE(is_two_sided(lifted));
  EXPECT_EQ(lifted, closure(maximal_ideal(mb, 1)));
}

TEST(PositionIdeal, ReadsCoordinateIdeals) {
  const int N = 4;
  auto alg = smooth(2, 1, N);
  LeftIdeal m1 = closure(maximal_ideal(alg, 1));
  EXPECT_EQ(position_ideal(m1, 0, 0), CommIdeal::maximal(N));
  EXPECT_EQ(position_ideal(m1, 0, 1), CommIdeal::unit(N));
  EXPECT_EQ(position_ideal(m1, 1, 0), CommIdeal::unit(N));
  EXPECT_EQ(position_ideal(m1, 1, 1), CommIdeal::unit(N));
}

TEST(CodimOne, Counts) {
  for (int e : {2, 3, 4}) {
    auto spec = AlgebraSpec::smooth_ram(e, 1, 2);
    auto found = find_codim_one_quotients(spec);
    ASSERT_EQ(found.size(), static_cast<std::size_t>(e)) << "e=" << e;
    auto alg = Algebra::make(spec);
    for (int i = 1; i <= e; ++i) {
      LeftIdeal m = closure(maximal_ideal(alg, i));
      EXPECT_EQ(std::count(found.begin(), found.end(), m), 1) << "m_" << i;
    }
  }
  for (int e : {2, 3}) {
    auto spec = AlgebraSpec::singular_ram(e, 1, 2);
    auto found = find_codim_one_quotients(spec);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], closure(maximal_ideal(Algebra::make(spec), 1)));
  }
  EXPECT_EQ(find_codim_one_quotients(AlgebraSpec::unramified(1, 3)).size(), 1u);
  EXPECT_TRUE(find_codim_one_quotients(AlgebraSpec::smooth_ram(2, 2, 2)).empty());
  EXPECT_TRUE(find_codim_one_quotients(AlgebraSpec::unramified(2, 2)).empty());
  EXPECT_TRUE(find_codim_one_quotients(AlgebraSpec::singular_ram(2, 2, 2)).empty());
}

TEST(CodimOne, DimensionBound) {
  expect_code([] { (void)find_codim_one_quotients(AlgebraSpec::smooth_ram(3, 1, 4), 10); },
              ErrorCode::DimensionBound);
}

TEST(Retruncate, RaiseAndLowerPreserveColength) {
  std::mt19937_64 rng(16);
  for (const auto& spec : {AlgebraSpec::smooth_ram(2, 1, 3), AlgebraSpec::singular_ram(2, 1, 3),
                           AlgebraSpec::unramified(2, 3)}) {
    auto alg = Algebra::make(spec);
    for (int trial = 0; trial < 5; ++trial) {
      LeftIdeal ideal = random_saturated(alg, rng);
      LeftIdeal up = retruncate(ideal, 4);
      EXPECT_TRUE(up.saturated());
      EXPECT_EQ(up.colength(), ideal.colength());
      EXPECT_EQ(retruncate(up, 3), ideal);
      EXPECT_EQ(is_two_sided(up), is_two_sided(ideal));
    }
  }
  const CommIdeal j = staircase_ideal(3, 4);
  EXPECT_EQ(retruncate(j, 6).colength(), 3);
  EXPECT_EQ(retruncate(retruncate(j, 6), 4), j);
}
