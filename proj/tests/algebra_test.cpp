#include "punctual/algebra.hpp"
#include "punctual/error.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace punctual;

namespace {

// Matrix over the skew ring with unbounded normal-ordered monomials x^A y^B.
// Products are computed by literally rewriting the word x^A1 y^B1 x^A2 y^B2,
// swapping each "yx" into "xy" at the cost of one factor zeta.
using SkewPoly = std::map<std::pair<int, int>, CycScalar>;
using SkewMatrix = std::vector<std::vector<SkewPoly>>;

struct Oracle {
  std::shared_ptr<const Algebra> alg;
  int n;
  int s;

  explicit Oracle(const AlgebraSpec& spec)
      : alg(Algebra::make(spec)), n(spec.matrix_size()), s(spec.skew_order()) {}

  // Exponents of the actual entry, folding u -> x^s and v -> y^s.
  SkewMatrix to_matrix(const SparseVec& v) const {
    SkewMatrix m(n, std::vector<SkewPoly>(n));
    for (const auto& t : v) {
      const auto& l = alg->label(t.index);
      auto [i, j] = monomial_exponents(l.mono);
      const int delta = alg->below_pattern(l.row, l.col) ? 1 : 0;
      auto& slot = m[l.row][l.col][{delta + l.xpow + s * i, l.ypow + s * j}];
      slot += t.value;
    }
    return m;
  }

  SparseVec from_matrix(const SkewMatrix& m) const {
    std::vector<Term> out;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (const auto& [exps, value] : m[r][c]) {
          if (value.is_zero()) continue;
          const int delta = alg->below_pattern(r, c) ? 1 : 0;
          const int A = exps.first - delta;
          if (A < 0) throw std::runtime_error("entry violates the block pattern");
          const int i = A / s;
          const int j = exps.second / s;
          if (i + j >= alg->spec().N) continue;
          out.push_back({alg->index(r, c, A % s, exps.second % s, monomial_index(i, j)), value});
        }
    return normalize_terms(std::move(out));
  }

  CycScalar word_product(std::vector<char>& word) const {
    CycScalar coeff = CycScalar::one(s);
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t k = 0; k + 1 < word.size(); ++k)
        if (word[k] == 'y' && word[k + 1] == 'x') {
          std::swap(word[k], word[k + 1]);
          coeff *= CycScalar::zeta(s);
          swapped = true;
        }
    }
    return coeff;
  }

  SkewMatrix mul(const SkewMatrix& a, const SkewMatrix& b) const {
    SkewMatrix out(n, std::vector<SkewPoly>(n));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k)
        for (int c = 0; c < n; ++c)
          for (const auto& [ea, va] : a[r][k])
            for (const auto& [eb, vb] : b[k][c]) {
              std::vector<char> word;
              word.insert(word.end(), ea.first, 'x');
              word.insert(word.end(), ea.second, 'y');
              word.insert(word.end(), eb.first, 'x');
              word.insert(word.end(), eb.second, 'y');
              const CycScalar z = word_product(word);
              out[r][c][{ea.first + eb.first, ea.second + eb.second}] += va * vb * z;
            }
    return out;
  }
};

SparseVec random_element(std::mt19937_64& rng, const Algebra& alg, int terms, int max_mono_deg) {
  std::uniform_int_distribution<std::uint32_t> pos(0, alg.rank() - 1);
  std::uniform_int_distribution<std::uint32_t> monos(0, monomial_count(max_mono_deg + 1) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    const std::uint32_t m = monos(rng);
    if (monomial_degree(m) >= alg.spec().N) continue;
    CycScalar c(coeff(rng));
    if (alg.skew_order() > 1 && k % 2 == 1) c = c * CycScalar::zeta(alg.skew_order(), k);
    out.push_back({m * alg.rank() + pos(rng), c});
  }
  return normalize_terms(std::move(out));
}

std::vector<AlgebraSpec> kinds() {
  return {AlgebraSpec::unramified(1, 4),   AlgebraSpec::unramified(2, 3),
          AlgebraSpec::smooth_ram(2, 1, 4), AlgebraSpec::smooth_ram(3, 1, 3),
          AlgebraSpec::smooth_ram(2, 2, 3), AlgebraSpec::singular_ram(2, 1, 4),
          AlgebraSpec::singular_ram(3, 1, 3), AlgebraSpec::singular_ram(2, 2, 3),
          AlgebraSpec::make(4, 2, 1, 3)};
}

SparseVec entry(const std::shared_ptr<const Algebra>& alg, int r, int c, int a, int b, int i, int j) {
  return SparseVec{{alg->index(r, c, a, b, monomial_index(i, j)), CycScalar(1)}};
}

} // namespace

TEST(AlgebraSpec, Validation) {
  EXPECT_EQ(AlgebraSpec::make(1, 1, 2, 3).kind, AlgebraKind::Unramified);
  EXPECT_EQ(AlgebraSpec::make(3, 1, 1, 3).kind, AlgebraKind::SmoothRam);
  EXPECT_EQ(AlgebraSpec::make(3, 3, 1, 3).kind, AlgebraKind::SingularRam);
  for (auto bad : {std::array{2, 3, 1, 3}, std::array{2, 1, 0, 3}, std::array{2, 1, 1, 1},
                   std::array{0, 1, 1, 3}}) {
    try {
      (void)AlgebraSpec::make(bad[0], bad[1], bad[2], bad[3]);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::InvalidSpec);
    }
  }
  AlgebraSpec s = AlgebraSpec::make(2, 1, 1, 3);
  s.kind = AlgebraKind::SingularRam;
  EXPECT_THROW(s.validate(), Error);
  EXPECT_EQ(parse_algebra_kind("SmoothRam"), AlgebraKind::SmoothRam);
  EXPECT_THROW((void)parse_algebra_kind("Ramified"), Error);
}

TEST(Algebra, Dimensions) {
  EXPECT_EQ(Algebra::make(AlgebraSpec::smooth_ram(2, 1, 3))->dim(), 4u * 6u);
  EXPECT_EQ(Algebra::make(AlgebraSpec::singular_ram(3, 2, 2))->dim(), 36u * 3u);
  EXPECT_EQ(Algebra::make(AlgebraSpec::unramified(2, 4))->rank(), 4u);
}

TEST(AlgebraMul, SmoothRamBasisProduct) {
  auto alg = Algebra::make(AlgebraSpec::smooth_ram(2, 1, 4));
  const auto b12 = standard_basis(alg, 1, 2);
  const auto b21 = standard_basis(alg, 2, 1);
  const AlgebraElement u_b11(alg, entry(alg, 0, 0, 0, 0, 1, 0));
  EXPECT_EQ(alg_mul(b12, b21), u_b11);
  Oracle o(alg->spec());
  auto m = o.to_matrix(b21.coords());
  EXPECT_EQ(m[1][0].size(), 1u);
  EXPECT_EQ(m[1][0].begin()->first, (std::pair{1, 0}));
  EXPECT_EQ(o.to_matrix(b12.coords())[0][1].begin()->first, (std::pair{0, 0}));
}

TEST(AlgebraMul, SingularRamRelations) {
  auto alg = Algebra::make(AlgebraSpec::singular_ram(2, 1, 4));
  const AlgebraElement x(alg, alg->diagonal_skew(1, 0));
  const AlgebraElement y(alg, alg->diagonal_skew(0, 1));
  EXPECT_EQ(y * x, CycScalar(-1) * (x * y));
  const AlgebraElement u(alg, alg->central(TruncSeries::monomial(4, 1, 0)));
  const AlgebraElement v(alg, alg->central(TruncSeries::monomial(4, 0, 1)));
  EXPECT_EQ((x + y) * (x + y), u + v);
  EXPECT_EQ(x * x, u);
}

TEST(AlgebraMul, SingularRamOrderThree) {
  auto alg = Algebra::make(AlgebraSpec::singular_ram(3, 1, 3));
  const AlgebraElement x(alg, alg->diagonal_skew(1, 0));
  const AlgebraElement y(alg, alg->diagonal_skew(0, 1));
  EXPECT_EQ(y * x, CycScalar::zeta(3) * (x * y));
  EXPECT_EQ(x * x * x, AlgebraElement(alg, alg->central(TruncSeries::monomial(3, 1, 0))));
  EXPECT_EQ(y * y * y, AlgebraElement(alg, alg->central(TruncSeries::monomial(3, 0, 1))));
}

TEST(AlgebraMul, TruncationMismatch) {
  auto a = AlgebraElement::one(Algebra::make(AlgebraSpec::smooth_ram(2, 1, 3)));
  auto b = AlgebraElement::one(Algebra::make(AlgebraSpec::smooth_ram(2, 1, 4)));
  try {
    (void)alg_mul(a, b);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::TruncMismatch);
  }
}

TEST(StandardBasis, IdentityAndRange) {
  auto alg = Algebra::make(AlgebraSpec::smooth_ram(3, 1, 3));
  AlgebraElement sum = AlgebraElement::zero(alg);
  for (int i = 1; i <= 3; ++i) sum += standard_basis(alg, i, i);
  EXPECT_EQ(sum, AlgebraElement::one(alg));
  try {
    (void)standard_basis(alg, 0, 4);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::OutOfRange);
  }
  // b_{1,i} = b_{1,2} b_{2,i} and b_{i,1} = b_{i,3} b_{3,1}
  for (int i = 2; i <= 3; ++i) {
    EXPECT_EQ(standard_basis(alg, 1, i), standard_basis(alg, 1, 2) * standard_basis(alg, 2, i));
    EXPECT_EQ(standard_basis(alg, i, 1), standard_basis(alg, i, 3) * standard_basis(alg, 3, 1));
  }
}

TEST(DualShift, Shape) {
  auto alg = Algebra::make(AlgebraSpec::smooth_ram(2, 1, 4));
  const auto c = dual_shift_element(alg);
  EXPECT_EQ(c, standard_basis(alg, 1, 2) + standard_basis(alg, 2, 1));
  const AlgebraElement u(alg, alg->central(TruncSeries::monomial(4, 1, 0)));
  EXPECT_EQ(c * c, u);

  auto alg3 = Algebra::make(AlgebraSpec::smooth_ram(3, 1, 4));
  const auto c3 = dual_shift_element(alg3);
  EXPECT_EQ(c3, standard_basis(alg3, 1, 2) + standard_basis(alg3, 2, 3) + standard_basis(alg3, 3, 1));
  EXPECT_EQ(c3 * c3 * c3, AlgebraElement(alg3, alg3->central(TruncSeries::monomial(4, 1, 0))));
  EXPECT_THROW((void)dual_shift_element(Algebra::make(AlgebraSpec::singular_ram(2, 1, 3))), Error);
}

TEST(DualShift, ConjugationUndoesShift) {
  std::mt19937_64 rng(17);
  for (auto spec : {AlgebraSpec::smooth_ram(2, 1, 4), AlgebraSpec::smooth_ram(3, 2, 3),
                    AlgebraSpec::unramified(2, 3)}) {
    auto alg = Algebra::make(spec);
    const SparseVec c = alg->dual_generator();
    for (int trial = 0; trial < 20; ++trial) {
      const SparseVec w = random_element(rng, *alg, 6, spec.N - 1);
      const SparseVec sw = alg->conjugate_by_dual(w);
      // c * sigma(w) = w * c holds modulo the lost top degree.
      SparseVec lhs = alg->multiply(c, sw);
      SparseVec rhs = alg->multiply(w, c);
      SparseVec diff = axpy(lhs, CycScalar(-1), rhs);
      for (const auto& t : diff) EXPECT_EQ(alg->degree(t.index), spec.N - 1);
    }
  }
}

TEST(Generators, TypesAndGeneration) {
  for (const auto& spec : kinds()) {
    auto alg = Algebra::make(spec);
    const auto& gens = alg->generators();
    ASSERT_EQ(gens.size(), alg->generator_types().size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const SparseVec sq = alg->multiply(gens[k], gens[k]);
      if (alg->generator_types()[k] == Algebra::GeneratorType::Idempotent)
        EXPECT_EQ(sq, gens[k]);
      else
        EXPECT_NE(sq, gens[k]);
    }
    // The right orbit of 1 under the generators spans the algebra.
    Subspace span(alg->dim());
    std::vector<SparseVec> queue{alg->one()};
    span.insert(alg->one());
    while (!queue.empty()) {
      SparseVec w = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : gens) {
        SparseVec p = alg->multiply(w, g);
        SparseVec r;
        if (span.insert(p, &r)) queue.push_back(std::move(r));
      }
    }
    EXPECT_EQ(span.dim(), alg->dim()) << spec.describe();
  }
}

TEST(AlgebraProperty, MatchesWordRewritingOracle) {
  std::mt19937_64 rng(23);
  for (const auto& spec : kinds()) {
    Oracle o(spec);
    for (int trial = 0; trial < 25; ++trial) {
      const SparseVec a = random_element(rng, *o.alg, 5, spec.N - 1);
      const SparseVec b = random_element(rng, *o.alg, 5, spec.N - 1);
      ASSERT_EQ(o.from_matrix(o.to_matrix(a)), a);
      EXPECT_EQ(o.alg->multiply(a, b), o.from_matrix(o.mul(o.to_matrix(a), o.to_matrix(b))))
          << spec.describe();
    }
  }
}

TEST(AlgebraProperty, Associativity) {
  std::mt19937_64 rng(29);
  for (const auto& spec : kinds()) {
    auto alg = Algebra::make(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const SparseVec a = random_element(rng, *alg, 5, spec.N - 1);
      const SparseVec b = random_element(rng, *alg, 5, spec.N - 1);
      const SparseVec c = random_element(rng, *alg, 5, spec.N - 1);
      EXPECT_EQ(alg->multiply(alg->multiply(a, b), c), alg->multiply(a, alg->multiply(b, c)))
          << spec.describe();
    }
  }
}

TEST(AlgebraProperty, CentralElements) {
  std::mt19937_64 rng(31);
  for (const auto& spec : kinds()) {
    auto alg = Algebra::make(spec);
    const SparseVec u = alg->central(TruncSeries::monomial(spec.N, 1, 0));
    const SparseVec v = alg->central(TruncSeries::monomial(spec.N, 0, 1));
    EXPECT_EQ(alg->diagonal_skew(spec.skew_order(), 0), u);
    for (int trial = 0; trial < 20; ++trial) {
      const SparseVec s = random_element(rng, *alg, 6, spec.N - 1);
      EXPECT_EQ(alg->multiply(u, s), alg->multiply(s, u));
      EXPECT_EQ(alg->multiply(v, s), alg->multiply(s, v));
      EXPECT_EQ(alg->multiply(u, s), alg->shift(s, 1, 0));
    }
  }
}
