#include "punctual/subspace.hpp"

#include "punctual/error.hpp"

#include <algorithm>

namespace punctual {

SparseVec axpy(const SparseVec& x, const CycScalar& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  auto xi = x.begin();
  auto yi = y.begin();
  while (xi != x.end() || yi != y.end()) {
    if (yi == y.end() || (xi != x.end() && xi->index < yi->index)) {
      out.push_back(*xi++);
    } else if (xi == x.end() || yi->index < xi->index) {
      CycScalar s = a * yi->value;
      if (!s.is_zero()) out.push_back({yi->index, std::move(s)});
      ++yi;
    } else {
      CycScalar s = xi->value + a * yi->value;
      if (!s.is_zero()) out.push_back({xi->index, std::move(s)});
      ++xi;
      ++yi;
    }
  }
  return out;
}

void scale(SparseVec& x, const CycScalar& a) {
  if (a.is_zero()) {
    x.clear();
    return;
  }
  for (auto& t : x) t.value *= a;
}

SparseVec normalize_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().value += t.value;
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  return out;
}

SparseVec unit_vector(std::uint32_t index) { return SparseVec{{index, CycScalar(1)}}; }

const CycScalar* find_coeff(const SparseVec& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  if (it == v.end() || it->index != index) return nullptr;
  return &it->value;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::vector<SparseVec> Subspace::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec r = v;
  // Rows are fully reduced, so eliminating one pivot never creates another.
  std::vector<std::pair<std::uint32_t, CycScalar>> hits;
  for (const auto& t : v) {
    if (t.index >= ambient_)
      throw Error(ErrorCode::OutOfRange, "vector index exceeds ambient dimension");
    if (is_pivot_[t.index]) hits.emplace_back(t.index, t.value);
  }
  for (const auto& [p, c] : hits) r = axpy(r, -c, rows_.at(p));
  return r;
}

bool Subspace::insert(const SparseVec& v, SparseVec* reduced) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  scale(r, r.front().value.inverse());
  if (reduced) *reduced = r;
  const std::uint32_t p = r.front().index;
  for (auto& [q, row] : rows_) {
    if (q > p) break;
    if (const CycScalar* c = find_coeff(row, p)) row = axpy(row, -*c, r);
  }
  is_pivot_[p] = true;
  rows_.emplace(p, std::move(r));
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& [p, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  for (const auto& [p, row] : b.rows()) s.insert(row);
  return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // Zassenhaus: rows (x | x) for x in a and (y | 0) for y in b; rows whose
  // first half vanishes carry a basis of the intersection in the second half.
  const auto n = static_cast<std::uint32_t>(a.ambient_dim());
  Subspace z(2 * n);
  auto doubled = [n](const SparseVec& x) {
    SparseVec out = x;
    for (const auto& t : x) out.push_back({t.index + n, t.value});
    return out;
  };
  for (const auto& [p, row] : a.rows()) z.insert(doubled(row));
  for (const auto& [p, row] : b.rows()) z.insert(row);
  Subspace out(n);
  for (const auto& [p, row] : z.rows()) {
    if (p < n) continue;
    SparseVec tail;
    for (const auto& t : row) tail.push_back({t.index - n, t.value});
    out.insert(tail);
  }
  return out;
}

std::vector<SparseVec> quotient_basis(const Subspace& outer, const Subspace& inner) {
  Subspace q(outer.ambient_dim());
  for (const auto& [p, row] : outer.rows()) {
    SparseVec r = inner.reduce(row);
    if (!r.empty()) q.insert(r);
  }
  // Combinations of vectors vanishing on inner's pivots still vanish there.
  return q.basis();
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, std::size_t codomain_dim) {
  const auto n = static_cast<std::uint32_t>(codomain_dim);
  Subspace z(codomain_dim + images.size());
  for (std::uint32_t i = 0; i < images.size(); ++i) {
    SparseVec row = images[i];
    row.push_back({n + i, CycScalar(1)});
    z.insert(row);
  }
  std::vector<SparseVec> out;
  for (const auto& [p, row] : z.rows()) {
    if (p < n) continue;
    SparseVec tail;
    for (const auto& t : row) tail.push_back({t.index - n, t.value});
    out.push_back(std::move(tail));
  }
  return out;
}

} // namespace punctual
