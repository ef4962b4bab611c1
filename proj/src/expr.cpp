#include "punctual/expr.hpp"

#include "punctual/error.hpp"

#include <cctype>
#include <map>

namespace punctual {

namespace {

constexpr long kMaxExponent = 4096;

// Normal-ordered x^A y^B with u and v folded in as x^s, y^s.
using SkewPoly = std::map<std::pair<int, int>, CycScalar>;

struct Ring {
  int s = 1;
  // Terms with floor(A/s) + floor(B/s) >= bound vanish; that set is a
  // two-sided ideal, so truncating mid-computation is harmless.
  int bound = 1;
  bool allow_xy = true;
  bool allow_uv = true;
  bool allow_z = true;

  bool alive(int A, int B) const { return A / s + B / s < bound; }

  SkewPoly constant(CycScalar c) const {
    SkewPoly p;
    if (!c.is_zero() && alive(0, 0)) p.emplace(std::pair{0, 0}, std::move(c));
    return p;
  }

  SkewPoly monomial(int A, int B) const {
    SkewPoly p;
    if (alive(A, B)) p.emplace(std::pair{A, B}, CycScalar::one(s));
    return p;
  }

  void add_into(SkewPoly& acc, const SkewPoly& p, const CycScalar& sign) const {
    for (const auto& [k, c] : p) {
      auto [it, fresh] = acc.emplace(k, sign * c);
      if (!fresh) {
        it->second += sign * c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }

  SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const {
    SkewPoly out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        const int A = ka.first + kb.first;
        const int B = ka.second + kb.second;
        if (!alive(A, B)) continue;
        // y^B1 x^A2 = zeta^(B1 A2) x^A2 y^B1
        CycScalar c = ca * cb;
        if (s > 1) c *= CycScalar::zeta(s, (static_cast<long>(ka.second) * kb.first) % s);
        SkewPoly term;
        term.emplace(std::pair{A, B}, std::move(c));
        add_into(out, term, CycScalar(1));
      }
    return out;
  }
};

class Parser {
public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  SkewPoly parse() {
    SkewPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

private:
  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_), std::string(text_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SkewPoly expr() {
    SkewPoly acc = term();
    for (;;) {
      if (eat('+')) {
        ring_.add_into(acc, term(), CycScalar(1));
      } else if (eat('-')) {
        ring_.add_into(acc, term(), CycScalar(-1));
      } else {
        return acc;
      }
    }
  }

  SkewPoly term() {
    SkewPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = ring_.mul(acc, unary());
      } else if (eat('/')) {
        const std::size_t at = pos_;
        SkewPoly d = unary();
        if (d.size() > 1 || (d.size() == 1 && d.begin()->first != std::pair{0, 0})) {
          pos_ = at;
          fail("division by a non-scalar");
        }
        if (d.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero", std::string(text_));
        const CycScalar inv = d.begin()->second.inverse();
        for (auto& [k, c] : acc) c *= inv;
      } else {
        return acc;
      }
    }
  }

  SkewPoly unary() {
    if (eat('-')) {
      SkewPoly p = unary();
      for (auto& [k, c] : p) c = -c;
      return p;
    }
    if (eat('+')) return unary();
    return power();
  }

  SkewPoly power() {
    SkewPoly base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    if (pos_ - start > 5) fail("exponent too large");
    const long k = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (k > kMaxExponent) fail("exponent too large");
    SkewPoly result = ring_.constant(CycScalar::one(ring_.s));
    for (long e = k; e > 0; e >>= 1) {
      if (e & 1) result = ring_.mul(result, base);
      if (e > 1) base = ring_.mul(base, base);
    }
    return result;
  }

  SkewPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SkewPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.constant(CycScalar(Rational(std::string(text_.substr(start, pos_ - start))), ring_.s));
    }
    ++pos_;
    const int s = ring_.s;
    switch (c) {
    case 'u':
    case 'v':
      if (!ring_.allow_uv) break;
      return c == 'u' ? ring_.monomial(s, 0) : ring_.monomial(0, s);
    case 'x':
    case 'y':
      if (!ring_.allow_xy) break;
      return c == 'x' ? ring_.monomial(1, 0) : ring_.monomial(0, 1);
    case 'z':
      if (!ring_.allow_z) break;
      return ring_.constant(CycScalar::zeta(s));
    default:
      break;
    }
    --pos_;
    fail(std::string("unknown symbol '") + c + "'");
  }
};

CycScalar constant_term(const SkewPoly& p) {
  auto it = p.find({0, 0});
  return it == p.end() ? CycScalar() : it->second;
}

} // namespace

CycScalar parse_scalar(std::string_view text, int order) {
  Ring ring{order, 1, false, false, true};
  SkewPoly p = Parser(text, ring).parse();
  return constant_term(p);
}

TruncSeries parse_series(std::string_view text, int N) {
  Ring ring{1, N, false, true, false};
  SkewPoly p = Parser(text, ring).parse();
  std::vector<Term> terms;
  for (const auto& [k, c] : p) terms.push_back({monomial_index(k.first, k.second), c});
  return TruncSeries(N, normalize_terms(std::move(terms)));
}

SparseVec parse_entry(const Algebra& algebra, int row, int col, std::string_view text) {
  const AlgebraSpec& spec = algebra.spec();
  const int n = algebra.matrix_size();
  if (row < 0 || col < 0 || row >= n || col >= n)
    throw Error(ErrorCode::OutOfRange, "entry position outside the matrix");
  const int s = algebra.skew_order();
  // One extra order of precision so that dividing by x loses nothing.
  Ring ring{s, spec.N + 1, true, true, true};
  const SkewPoly p = Parser(text, ring).parse();
  const int delta = algebra.below_pattern(row, col) ? 1 : 0;
  std::vector<Term> terms;
  for (const auto& [k, c] : p) {
    const int A = k.first - delta;
    if (A < 0)
      throw Error(ErrorCode::PatternViolation, "entry below the diagonal must be divisible by x",
                  "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "): " + std::string(text));
    const int i = A / s;
    const int j = k.second / s;
    if (i + j >= spec.N) continue;
    terms.push_back({algebra.index(row, col, A % s, k.second % s, monomial_index(i, j)), c});
  }
  return normalize_terms(std::move(terms));
}

SparseVec parse_element(const Algebra& algebra, const EntryGrid& entries) {
  const int n = algebra.matrix_size();
  if (static_cast<int>(entries.size()) != n)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " rows");
  SparseVec out;
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(entries[r].size()) != n)
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " entries in row " + std::to_string(r + 1));
    for (int c = 0; c < n; ++c) out = axpy(out, CycScalar(1), parse_entry(algebra, r, c, entries[r][c]));
  }
  return out;
}

SparseVec parse_central(const Algebra& algebra, std::string_view text) {
  SparseVec out;
  for (int r = 0; r < algebra.matrix_size(); ++r) out = axpy(out, CycScalar(1), parse_entry(algebra, r, r, text));
  return out;
}

EntryGrid render_element(const Algebra& algebra, const SparseVec& v) {
  const int n = algebra.matrix_size();
  const int s = algebra.skew_order();
  std::vector<std::vector<SparseVec>> split(n, std::vector<SparseVec>(n));
  for (const auto& t : v) {
    const auto& l = algebra.label(t.index);
    split[l.row][l.col].push_back(t);
  }
  EntryGrid grid(n, std::vector<std::string>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int delta = algebra.below_pattern(r, c) ? 1 : 0;
      grid[r][c] = render_terms(split[r][c], [&](std::uint32_t index) {
        const auto& l = algebra.label(index);
        auto [i, j] = monomial_exponents(l.mono);
        const int A = delta + l.xpow + s * i;
        const int B = l.ypow + s * j;
        if (s == 1) return monomial_string(A, B);
        std::string out;
        auto add = [&out](const char* var, int power) {
          if (power == 0) return;
          if (!out.empty()) out += "*";
          out += var;
          if (power > 1) out += "^" + std::to_string(power);
        };
        add("x", A % s);
        add("y", B % s);
        add("u", A / s);
        add("v", B / s);
        return out.empty() ? std::string("1") : out;
      });
    }
  return grid;
}

} // namespace punctual
