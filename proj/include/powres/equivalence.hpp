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

// PGL(n, q) acting on point sets, and geometric q-equivalence of integer
// sets: both sets are embedded over the union of their supports and a
// projectivity carrying one point set onto the other is searched for.

#ifndef POWRES_EQUIVALENCE_HPP_
#define POWRES_EQUIVALENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "powres/bridge.hpp"
#include "powres/field.hpp"
#include "powres/geometry.hpp"
#include "powres/linalg.hpp"

namespace powres {

/// An element of PGL(n, q), represented by an invertible matrix acting on
/// row vectors (v -> v M). Matrices differing by a nonzero scalar give the
/// same map.
class ProjectiveMap {
 public:
  static ProjectiveMap from_matrix(FqMatrix m) {
    if (m.rows() != m.cols()) throw Error("ProjectiveMap: matrix is not square");
    if (rank(m) != m.rows()) throw Error("ProjectiveMap: matrix is singular");
    return ProjectiveMap(std::move(m));
  }

  static ProjectiveMap identity(PrimeField field, std::size_t n) {
    return ProjectiveMap(FqMatrix::identity(field, n));
  }

  static ProjectiveMap diagonal(PrimeField field, std::span<const Scalar> entries) {
    FqMatrix m(field, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = field.reduce(entries[i]);
    return from_matrix(std::move(m));
  }

  const FqMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

  ProjectivePoint image(const ProjectivePoint& p) const {
    return ProjectivePoint::from_vector(m_.field(), multiply(p.coords(), m_));
  }

  ProjectiveMap inverse() const { return ProjectiveMap(*powres::inverse(m_)); }

  /// Equality as projective maps: proportional matrices.
  friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) {
    if (a.dim() != b.dim() || !(a.m_.field() == b.m_.field())) return false;
    const PrimeField& f = a.m_.field();
    for (Scalar c = 1; c < f.order(); ++c) {
      bool same = true;
      for (std::size_t i = 0; i < a.dim() && same; ++i) {
        for (std::size_t j = 0; j < a.dim() && same; ++j) same = f.mul(c, a.m_(i, j)) == b.m_(i, j);
      }
      if (same) return true;
    }
    return false;
  }

 private:
  explicit ProjectiveMap(FqMatrix m) : m_(std::move(m)) {}
  FqMatrix m_;
};

inline PointSet apply(const ProjectiveMap& m, const PointSet& ps) {
  if (m.dim() != ps.ambient_dim() || !(m.matrix().field() == ps.field())) {
    throw Error("apply: map and point set have different dimensions or fields");
  }
  PointSet out(ps.field(), ps.ambient_dim());
  for (const auto& p : ps) out.insert(m.image(p));
  return out;
}

/// Both sets mapped into PG(F_q^n) over the sorted union of their
/// supports; primes missing from one set become zero coordinates.
inline std::pair<PointSet, PointSet> common_embedding(const ResidueSet& a, const ResidueSet& b) {
  if (a.q != b.q) throw Error("common_embedding: the sets use different moduli q");
  std::vector<std::uint64_t> primes = a.support;
  primes.insert(primes.end(), b.support.begin(), b.support.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return {pi_q(a, primes), pi_q(b, primes)};
}

namespace detail {

inline FqMatrix rows_of(const PointSet& ps) {
  FqMatrix m(ps.field(), 0, ps.ambient_dim());
  for (const auto& p : ps) m.append_row(p.coords());
  return m;
}

// Sorted list of |H cap ps| over all hyperplanes H; a PGL invariant.
inline std::vector<std::size_t> hyperplane_profile(const PointSet& ps) {
  const PrimeField& f = ps.field();
  std::vector<std::size_t> profile;
  for_each_projective_vector(Subspace::full(f, ps.ambient_dim()), [&](const Vector& h) {
    std::size_t count = 0;
    for (const auto& p : ps) {
      Scalar dot = 0;
      for (std::size_t i = 0; i < h.size(); ++i) dot = f.add(dot, f.mul(h[i], p.coords()[i]));
      if (dot == 0) ++count;
    }
    profile.push_back(count);
  });
  std::sort(profile.begin(), profile.end());
  return profile;
}

// Extends independent rows to a basis of F_q^n with unit vectors.
inline FqMatrix complete_basis(FqMatrix rows) {
  const std::size_t n = rows.cols();
  for (std::size_t i = 0; i < n && rows.rows() < n; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    if (!Subspace::from_rows(rows).contains(e)) rows.append_row(e);
  }
  return rows;
}

class FrameSearch {
 public:
  FrameSearch(const PointSet& a, const PointSet& b) : a_(a), b_(b), f_(a.field()), n_(a.ambient_dim()) {}

  std::optional<ProjectiveMap> run() {
    // Greedy independent subset of A in lexicographic order.
    FqMatrix basis(f_, 0, n_);
    for (const auto& p : a_) {
      FqMatrix trial = basis;
      trial.append_row(p.coords());
      if (rank(trial) > basis.rows()) basis = std::move(trial);
    }
    r_ = basis.rows();
    frame_ = complete_basis(basis);
    const FqMatrix frame_inv = *inverse(frame_);
    by_level_.assign(r_, {});
    for (const auto& p : a_) {
      Vector c = multiply(p.coords(), frame_inv);
      std::size_t level = 0;
      for (std::size_t i = 0; i < r_; ++i) {
        if (c[i] != 0) level = i;
      }
      c.resize(r_);
      by_level_[level].push_back(std::move(c));
    }
    images_ = FqMatrix(f_, 0, n_);
    if (!assign(0)) return std::nullopt;
    FqMatrix target = complete_basis(images_);
    return ProjectiveMap::from_matrix(multiply(*inverse(frame_), target));
  }

 private:
  bool assign(std::size_t j) {
    if (j == r_) return true;
    for (const auto& candidate : b_) {
      if (j > 0 && Subspace::from_rows(images_).contains(candidate.coords())) continue;
      const Scalar max_scale = j == 0 ? 1 : f_.order() - 1;
      for (Scalar lambda = 1; lambda <= max_scale; ++lambda) {
        Vector img(n_);
        for (std::size_t t = 0; t < n_; ++t) img[t] = f_.mul(lambda, candidate.coords()[t]);
        images_.append_row(img);
        if (level_maps_into_b(j) && assign(j + 1)) return true;
        FqMatrix shrunk(f_, 0, n_);
        for (std::size_t i = 0; i < j; ++i) shrunk.append_row(images_.row(i));
        images_ = std::move(shrunk);
      }
    }
    return false;
  }

  // Every point of A whose top frame coordinate is j lands in B.
  bool level_maps_into_b(std::size_t j) const {
    for (const auto& c : by_level_[j]) {
      Vector v(n_, 0);
      for (std::size_t i = 0; i <= j; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t t = 0; t < n_; ++t) v[t] = f_.add(v[t], f_.mul(c[i], images_(i, t)));
      }
      if (!b_.contains(ProjectivePoint::from_vector(f_, std::move(v)))) return false;
    }
    return true;
  }

  const PointSet& a_;
  const PointSet& b_;
  PrimeField f_;
  std::size_t n_;
  std::size_t r_ = 0;
  FqMatrix frame_{f_, 0, 1};
  FqMatrix images_{f_, 0, 1};
  std::vector<std::vector<Vector>> by_level_;
};

}  // namespace detail

/// A projectivity carrying A onto B, or nullopt if none exists. Cheap
/// invariants (size, rank, hyperplane-intersection profile) are compared
/// first; then images of a frame of A are assigned to points of B with
/// all scalings, checking each point of A as soon as its image is fixed.
/// The search order is deterministic, so witnesses are reproducible.
inline std::optional<ProjectiveMap> are_pgl_equivalent(const PointSet& a, const PointSet& b) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim()) {
    throw Error("are_pgl_equivalent: point sets live in different spaces");
  }
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return ProjectiveMap::identity(a.field(), a.ambient_dim());
  if (rank(detail::rows_of(a)) != rank(detail::rows_of(b))) return std::nullopt;
  if (detail::hyperplane_profile(a) != detail::hyperplane_profile(b)) return std::nullopt;
  auto map = detail::FrameSearch(a, b).run();
  if (map && !(apply(*map, a) == b)) throw Error("are_pgl_equivalent: internal error, witness does not map A onto B");
  return map;
}

/// Geometric q-equivalence of two integer sets.
inline std::optional<ProjectiveMap> geometric_q_equivalent(const ResidueSet& a, const ResidueSet& b) {
  auto [pa, pb] = common_embedding(a, b);
  return are_pgl_equivalent(pa, pb);
}

}  // namespace powres

#endif  // POWRES_EQUIVALENCE_HPP_
