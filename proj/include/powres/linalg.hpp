// Copyright 2026 The powres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact linear algebra over F_q: dense matrices, reduced row-echelon form,
// subspaces in canonical RREF form, and enumeration of every d-dimensional
// subspace of F_q^n.

#ifndef POWRES_LINALG_HPP_
#define POWRES_LINALG_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "powres/field.hpp"

namespace powres {

/// Dense row-major matrix over F_q.
class FqMatrix {
 public:
  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (cols == 0) throw Error("FqMatrix: column count must be at least 1");
  }

  /// Builds a matrix from explicit rows; every row must have `cols` entries
  /// already reduced into [0, q-1].
  static FqMatrix from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows) {
    FqMatrix m(field, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  static FqMatrix identity(PrimeField field, std::size_t n) {
    FqMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> r) {
    if (r.size() != cols_) {
      throw Error("FqMatrix: row has " + std::to_string(r.size()) + " entries, expected " +
                  std::to_string(cols_));
    }
    for (Scalar v : r) {
      if (!field_.is_valid(v)) throw Error("FqMatrix: entry out of range for F_q");
    }
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  std::vector<Vector> to_rows() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
  }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  FqMatrix reduced;                  // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
inline RrefResult rref(const FqMatrix& m) {
  const PrimeField& f = m.field();
  FqMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    }
    const Scalar inv = f.inv(a(lead, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Scalar factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {lead, std::move(a), std::move(pivots)};
}

inline std::size_t rank(const FqMatrix& m) { return rref(m).rank; }

/// Row vector times matrix: v * m.
inline Vector multiply(std::span<const Scalar> v, const FqMatrix& m) {
  if (v.size() != m.rows()) throw Error("multiply: vector length does not match matrix rows");
  const PrimeField& f = m.field();
  Vector out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

inline FqMatrix multiply(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw Error("multiply: inner dimensions differ");
  if (!(a.field() == b.field())) throw Error("multiply: matrices over different fields");
  FqMatrix out(a.field(), 0, b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(multiply(a.row(i), b));
  return out;
}

/// Inverse of a square matrix, or nullopt when it is singular.
inline std::optional<FqMatrix> inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse: matrix is not square");
  const std::size_t n = m.rows();
  FqMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  FqMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

class Subspace;

namespace detail {
struct SubspaceAccess;
}

/// A linear subspace of F_q^n held as its canonical RREF basis. Two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  /// The row space of `rows`.
  static Subspace from_rows(const FqMatrix& rows) {
    RrefResult r = rref(rows);
    FqMatrix basis(rows.field(), 0, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) basis.append_row(r.reduced.row(i));
    return Subspace(std::move(basis), std::move(r.pivots));
  }

  static Subspace zero(PrimeField field, std::size_t n) {
    return Subspace(FqMatrix(field, 0, n), {});
  }

  static Subspace full(PrimeField field, std::size_t n) {
    std::vector<std::size_t> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
    return Subspace(FqMatrix::identity(field, n), std::move(pivots));
  }

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FqMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Membership by reduction against the RREF basis: the residual
  /// v - sum_i v[pivot_i] * row_i vanishes iff v lies in the span.
  bool contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw Error("contains: vector length does not match subspace");
    const PrimeField& f = field();
    for (std::size_t j = 0; j < v.size(); ++j) {
      Scalar expected = 0;
      for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (pivots_[i] > j) break;
        const Scalar c = v[pivots_[i]];
        if (c != 0) expected = f.add(expected, f.mul(c, basis_(i, j)));
      }
      if (expected != v[j]) return false;
    }
    return true;
  }

  /// Smallest subspace containing both.
  Subspace join(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw Error("join: ambient dimensions differ");
    FqMatrix rows = basis_;
    for (std::size_t i = 0; i < other.dim(); ++i) rows.append_row(other.basis_.row(i));
    return from_rows(rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  friend struct detail::SubspaceAccess;

  Subspace(FqMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace subspace_from_rows(const FqMatrix& rows) { return Subspace::from_rows(rows); }

inline bool contains(const Subspace& s, std::span<const Scalar> v) { return s.contains(v); }

namespace detail {

struct SubspaceAccess {
  static Subspace make(FqMatrix basis, std::vector<std::size_t> pivots) {
    return Subspace(std::move(basis), std::move(pivots));
  }
  static FqMatrix& basis(Subspace& s) { return s.basis_; }
};

// Invokes a visitor that may return void (never stops) or bool (false stops).
template <class Visitor, class... Args>
bool visit_continue(Visitor& visitor, Args&&... args) {
  if constexpr (std::is_void_v<std::invoke_result_t<Visitor&, Args...>>) {
    visitor(std::forward<Args>(args)...);
    return true;
  } else {
    return static_cast<bool>(visitor(std::forward<Args>(args)...));
  }
}

}  // namespace detail

/// Every d-subset of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> pivot_sets(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  if (d > n) return out;
  std::vector<std::size_t> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Visits every subspace whose RREF basis has exactly the given pivot
/// columns. The free entries run through an odometer, so each subspace is
/// produced once. Returns false if the visitor asked to stop.
template <class Visitor>
bool for_each_subspace_with_pivots(PrimeField field, std::size_t n,
                                   const std::vector<std::size_t>& pivots, Visitor&& visitor) {
  const std::size_t d = pivots.size();
  const Scalar q = field.order();
  FqMatrix basis(field, d, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < d; ++i) {
    basis(i, pivots[i]) = 1;
    is_pivot[pivots[i]] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = pivots[i] + 1; j < n; ++j) {
      if (!is_pivot[j]) free.emplace_back(i, j);
    }
  }
  Subspace s = detail::SubspaceAccess::make(std::move(basis), pivots);
  FqMatrix& b = detail::SubspaceAccess::basis(s);
  while (true) {
    if (!detail::visit_continue(visitor, std::as_const(s))) return false;
    std::size_t k = 0;
    for (; k < free.size(); ++k) {
      Scalar& e = b(free[k].first, free[k].second);
      if (++e < q) break;
      e = 0;
    }
    if (k == free.size()) return true;
  }
}

/// Visits every d-dimensional subspace of F_q^n exactly once, grouped by
/// pivot-column set in lexicographic order.
template <class Visitor>
bool for_each_subspace(PrimeField field, std::size_t n, std::size_t d, Visitor&& visitor) {
  if (d > n) throw Error("enumerate_subspaces: dimension exceeds ambient dimension");
  for (const auto& pivots : pivot_sets(n, d)) {
    if (!for_each_subspace_with_pivots(field, n, pivots, visitor)) return false;
  }
  return true;
}

inline std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t d, PrimeField field) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, d, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

/// Number of d-dimensional subspaces of F_q^n, via the recurrence
/// [n, d] = [n-1, d-1] + q^d [n-1, d]. Throws on 64-bit overflow.
inline std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
  if (d > n) throw Error("gaussian_binomial: d exceeds n");
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, d); j >= 1; --j) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(checked_pow(q, static_cast<std::uint32_t>(j)), row[j], &term) ||
          __builtin_add_overflow(row[j - 1], term, &row[j])) {
        throw Error("gaussian_binomial: result overflows 64 bits");
      }
    }
  }
  return row[d];
}

/// Visits the canonical (first nonzero coordinate 1) representative of
/// every projective point of PG(s). With an RREF basis these are exactly
/// the combinations whose leading coefficient is 1.
template <class Visitor>
bool for_each_projective_vector(const Subspace& s, Visitor&& visitor) {
  const PrimeField& f = s.field();
  const std::size_t d = s.dim();
  const std::size_t n = s.ambient_dim();
  const FqMatrix& b = s.basis();
  Vector v(n);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::vector<Scalar> coeff(d - lead - 1, 0);
    while (true) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar x = b(lead, j);
        for (std::size_t t = 0; t < coeff.size(); ++t) {
          if (coeff[t] != 0) x = f.add(x, f.mul(coeff[t], b(lead + 1 + t, j)));
        }
        v[j] = x;
      }
      if (!detail::visit_continue(visitor, std::as_const(v))) return false;
      std::size_t k = 0;
      for (; k < coeff.size(); ++k) {
        if (++coeff[k] < f.order()) break;
        coeff[k] = 0;
      }
      if (k == coeff.size()) break;
    }
  }
  return true;
}

}  // namespace powres

#endif  // POWRES_LINALG_HPP_
