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

// Points and point sets of the projective space PG(F_q^n), the k-blocking
// test, minimality, k-space containment, and the extremal constructions:
// k-spaces, the projective triangle, and cones over planar blocking sets.

#ifndef POWRES_GEOMETRY_HPP_
#define POWRES_GEOMETRY_HPP_

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powres/field.hpp"
#include "powres/linalg.hpp"

namespace powres {

/// A point <v> of PG(F_q^n), stored as the representative whose first
/// nonzero coordinate is 1.
class ProjectivePoint {
 public:
  static ProjectivePoint from_vector(const PrimeField& field, Vector v) {
    auto lead = std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; });
    if (lead == v.end()) throw Error("not a projective point: zero vector");
    for (Scalar x : v) {
      if (!field.is_valid(x)) throw Error("not a projective point: coordinate out of range");
    }
    if (*lead != 1) {
      const Scalar inv = field.inv(*lead);
      for (auto it = lead; it != v.end(); ++it) *it = field.mul(*it, inv);
    }
    return ProjectivePoint(std::move(v));
  }

  const Vector& coords() const noexcept { return coords_; }
  std::size_t ambient_dim() const noexcept { return coords_.size(); }

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  explicit ProjectivePoint(Vector v) : coords_(std::move(v)) {}
  Vector coords_;
};

inline ProjectivePoint point_from_vector(const PrimeField& field, Vector v) {
  return ProjectivePoint::from_vector(field, std::move(v));
}

/// A finite set of points of PG(F_q^n), kept sorted and free of duplicates.
class PointSet {
 public:
  using const_iterator = std::vector<ProjectivePoint>::const_iterator;

  PointSet(PrimeField field, std::size_t n) : field_(field), n_(n) {
    if (n == 0) throw Error("PointSet: ambient dimension must be at least 1");
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const_iterator begin() const noexcept { return points_.begin(); }
  const_iterator end() const noexcept { return points_.end(); }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }

  /// Returns false if the point was already present.
  bool insert(const ProjectivePoint& p) {
    if (p.ambient_dim() != n_) {
      throw Error("PointSet: point of dimension " + std::to_string(p.ambient_dim()) +
                  " in a set of dimension " + std::to_string(n_));
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it != points_.end() && *it == p) return false;
    points_.insert(it, p);
    return true;
  }

  /// Normalizes an arbitrary nonzero vector and inserts it.
  bool insert_vector(Vector v) { return insert(ProjectivePoint::from_vector(field_, std::move(v))); }

  bool erase(const ProjectivePoint& p) {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p)) return false;
    points_.erase(it);
    return true;
  }

  bool contains(const ProjectivePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  bool is_subset_of(const PointSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  PrimeField field_;
  std::size_t n_;
  std::vector<ProjectivePoint> points_;
};

inline PointSet unite(const PointSet& a, const PointSet& b) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim()) {
    throw Error("unite: point sets live in different spaces");
  }
  PointSet out = a;
  for (const auto& p : b) out.insert(p);
  return out;
}

/// (q^(k+1) - 1) / (q - 1): the number of points of a k-space, and the
/// minimum size of a k-blocking set.
inline std::uint64_t k_space_size(std::uint64_t k, std::uint64_t q) {
  return gaussian_binomial(k + 1, 1, q);
}

inline std::uint64_t bose_burton_bound(std::uint64_t k, std::uint64_t q) { return k_space_size(k, q); }

/// Size of a minimal k-blocking set with no k-space:
/// (q^(k+1) - 1)/(q - 1) + q^(k-1) (q + 1)/2.
inline std::uint64_t second_smallest_size(std::uint64_t k, std::uint64_t q) {
  if (k < 1) throw Error("second_smallest_size: k must be at least 1");
  return k_space_size(k, q) + checked_pow(q, static_cast<std::uint32_t>(k - 1)) * (q + 1) / 2;
}

namespace detail {

// Index from normalized coordinates to a position in a PointSet. Dense
// table when q^n is small, hash map otherwise.
class PointIndex {
 public:
  explicit PointIndex(const PointSet& ps) : q_(ps.field().order()) {
    const std::size_t n = ps.ambient_dim();
    std::uint64_t space = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
      if (__builtin_mul_overflow(space, std::uint64_t{q_}, &space) || space > kDenseLimit) small = false;
    }
    dense_ = small;
    if (dense_) table_.assign(space, -1);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::uint64_t id = encode(ps[i].coords());
      if (dense_) {
        table_[id] = static_cast<std::int32_t>(i);
      } else {
        map_.emplace(id, static_cast<std::int32_t>(i));
      }
    }
  }

  // Position of the normalized vector v in the set, or -1.
  std::int32_t find(std::span<const Scalar> v) const {
    const std::uint64_t id = encode(v);
    if (dense_) return table_[id];
    auto it = map_.find(id);
    return it == map_.end() ? -1 : it->second;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

  std::uint64_t encode(std::span<const Scalar> v) const {
    std::uint64_t id = 0;
    for (Scalar x : v) id = id * q_ + x;
    return id;
  }

  std::uint64_t q_;
  bool dense_ = false;
  std::vector<std::int32_t> table_;
  std::unordered_map<std::uint64_t, std::int32_t> map_;
};

// Visits the indices of points of ps lying in s; stops when the visitor
// returns false. Walks whichever side is smaller: the points of PG(s)
// looked up in the index, or the set tested against s.
template <class Visitor>
void for_each_hit(const Subspace& s, const PointSet& ps, const PointIndex& index, Visitor&& visitor) {
  const std::uint64_t subspace_points =
      s.dim() == 0 ? 0 : gaussian_binomial(s.dim(), 1, s.field().order());
  if (subspace_points <= ps.size()) {
    for_each_projective_vector(s, [&](const Vector& v) {
      const std::int32_t i = index.find(v);
      return i < 0 || visitor(static_cast<std::size_t>(i));
    });
  } else {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (s.contains(ps[i].coords()) && !visitor(i)) return;
    }
  }
}

inline std::size_t resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  return threads;
}

inline void check_codimension(const PointSet& ps, std::size_t k) {
  if (k < 1 || k >= ps.ambient_dim()) {
    throw Error("codimension out of range: need 1 <= k < n, got k=" + std::to_string(k) +
                ", n=" + std::to_string(ps.ambient_dim()));
  }
}

}  // namespace detail

/// A codimension-k subspace meeting no point of ps, if one exists. The
/// search runs over pivot-column sets; with several threads each worker
/// takes whole pivot sets and the hit in the lowest pivot set wins, so the
/// result is the same for every thread count.
inline std::optional<Subspace> find_unblocked_subspace(const PointSet& ps, std::size_t k,
                                                       unsigned threads = 1) {
  detail::check_codimension(ps, k);
  const std::size_t n = ps.ambient_dim();
  const std::size_t d = n - k;
  const detail::PointIndex index(ps);
  const auto sets = pivot_sets(n, d);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{sets.size()};
  std::mutex mu;
  std::optional<Subspace> found;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sets.size() || i > best.load()) return;
      std::optional<Subspace> local;
      for_each_subspace_with_pivots(ps.field(), n, sets[i], [&](const Subspace& s) {
        bool hit = false;
        detail::for_each_hit(s, ps, index, [&](std::size_t) {
          hit = true;
          return false;
        });
        if (!hit) {
          local = s;
          return false;
        }
        return i <= best.load();
      });
      if (local) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          found = std::move(local);
        }
      }
    }
  };

  const std::size_t workers = std::min(detail::resolve_threads(threads), sets.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return found;
}

/// True iff every codimension-k subspace of F_q^n meets ps.
inline bool is_k_blocking(const PointSet& ps, std::size_t k, unsigned threads = 1) {
  return !find_unblocked_subspace(ps, k, threads).has_value();
}

/// For a k-blocking set: true iff no point can be removed. A point is
/// essential exactly when some codimension-k subspace meets ps in that
/// point alone, so one pass over the subspaces decides every point.
inline bool is_minimal_blocking(const PointSet& ps, std::size_t k) {
  detail::check_codimension(ps, k);
  const std::size_t n = ps.ambient_dim();
  const detail::PointIndex index(ps);
  std::vector<bool> essential(ps.size(), false);
  std::size_t remaining = ps.size();
  bool blocking = true;
  for_each_subspace(ps.field(), n, n - k, [&](const Subspace& s) {
    std::size_t hits = 0;
    std::size_t first = 0;
    detail::for_each_hit(s, ps, index, [&](std::size_t i) {
      if (hits++ == 0) first = i;
      return hits < 2;
    });
    if (hits == 0) {
      blocking = false;
      return false;
    }
    if (hits == 1 && !essential[first]) {
      essential[first] = true;
      --remaining;
    }
    return true;
  });
  if (!blocking) throw Error("not a blocking set");
  return remaining == 0;
}

/// True iff some (k+1)-dimensional subspace has all of its points in ps.
inline bool contains_k_space(const PointSet& ps, std::size_t k) {
  const std::size_t n = ps.ambient_dim();
  if (k >= n) throw Error("contains_k_space: need k < n");
  const std::uint64_t needed = k_space_size(k, ps.field().order());
  if (needed > ps.size()) return false;
  const detail::PointIndex index(ps);
  bool found = false;
  for_each_subspace(ps.field(), n, k + 1, [&](const Subspace& s) {
    found = for_each_projective_vector(s, [&](const Vector& v) { return index.find(v) >= 0; });
    return !found;
  });
  return found;
}

/// All points of PG(s). Empty for the zero subspace.
inline PointSet k_space_points(const Subspace& s) {
  PointSet out(s.field(), s.ambient_dim());
  for_each_projective_vector(s, [&](const Vector& v) {
    out.insert(ProjectivePoint::from_vector(s.field(), v));
  });
  return out;
}

/// All points of PG(F_q^n).
inline PointSet full_space_points(PrimeField field, std::size_t n) {
  return k_space_points(Subspace::full(field, n));
}

/// The projective triangle {<(0,1,-s)>, <(-s,0,1)>, <(1,-s,0)> : s in Q_0}
/// of PG(F_q^3), Q_0 the squares of F_q together with 0. Has 3(q+1)/2
/// points and blocks every line.
inline PointSet projective_triangle(std::uint64_t q) {
  const PrimeField f(q);
  PointSet out(f, 3);
  for (Scalar s : f.squares_with_zero()) {
    const Scalar m = f.neg(s);
    out.insert_vector({0, 1, m});
    out.insert_vector({m, 0, 1});
    out.insert_vector({1, m, 0});
  }
  return out;
}

/// Copies ps into PG(F_q^n), n >= ps.ambient_dim(), padding trailing zeros.
inline PointSet embed_leading(const PointSet& ps, std::size_t n) {
  if (n < ps.ambient_dim()) throw Error("embed_leading: target dimension too small");
  PointSet out(ps.field(), n);
  for (const auto& p : ps) {
    Vector v = p.coords();
    v.resize(n, 0);
    out.insert(ProjectivePoint::from_vector(ps.field(), std::move(v)));
  }
  return out;
}

/// The cone with the given vertex over base: PG(vertex) together with
/// PG(<vertex, P>) for every P in base.
inline PointSet cone(const Subspace& vertex, const PointSet& base) {
  if (!(vertex.field() == base.field()) || vertex.ambient_dim() != base.ambient_dim()) {
    throw Error("cone: vertex and base live in different spaces");
  }
  PointSet out = k_space_points(vertex);
  for (const auto& p : base) {
    if (vertex.contains(p.coords())) throw Error("degenerate cone: base point lies in the vertex");
    FqMatrix rows = vertex.basis();
    rows.append_row(p.coords());
    out = unite(out, k_space_points(Subspace::from_rows(rows)));
  }
  return out;
}

/// The minimal k-blocking set of second smallest size in PG(F_q^n): the
/// cone whose vertex is spanned by e_4, ..., e_{k+2} and whose base is the
/// projective triangle in the first three coordinates.
inline PointSet second_smallest_blocking(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k < 2) throw Error("second_smallest_blocking: k must be at least 2 (use projective_triangle for k = 1)");
  if (n < k + 2) throw Error("second_smallest_blocking: need n >= k + 2");
  const PrimeField f(q);
  FqMatrix vertex_rows(f, 0, n);
  for (std::size_t i = 3; i < k + 2; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    vertex_rows.append_row(e);
  }
  return cone(Subspace::from_rows(vertex_rows), embed_leading(projective_triangle(q), n));
}

}  // namespace powres

#endif  // POWRES_GEOMETRY_HPP_
