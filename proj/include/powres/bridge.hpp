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

// From integer sets to point sets and back.
//
// An integer s is identified with the exponent vector of its q-free part
// over the sorted list of primes dividing the set ("support"), read in F_q.
// Since -1 is a q-th power for odd q, and multiplying by a q-th power does
// not change residuosity at primes coprime to it, only rad_q(|s|) matters.

#ifndef POWRES_BRIDGE_HPP_
#define POWRES_BRIDGE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powres/field.hpp"
#include "powres/geometry.hpp"
#include "powres/number_theory.hpp"

namespace powres {

/// A q-free natural number by its factorization; every exponent lies in
/// [1, q-1]. The empty factorization is 1.
class QFreeInteger {
 public:
  QFreeInteger() = default;

  /// Reduces exponents mod q and drops the ones that vanish.
  static QFreeInteger from_factorization(std::span<const PrimePower> factors, std::uint32_t q) {
    QFreeInteger out;
    for (const auto& f : factors) {
      const std::uint32_t e = f.exponent % q;
      if (e != 0) out.factors_.push_back({f.prime, e});
    }
    std::sort(out.factors_.begin(), out.factors_.end());
    return out;
  }

  const std::vector<PrimePower>& factorization() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::uint32_t exponent_of(std::uint64_t p) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const PrimePower& f, std::uint64_t x) { return f.prime < x; });
    return it != factors_.end() && it->prime == p ? it->exponent : 0;
  }

  BigInt value() const {
    BigInt v = 1;
    for (const auto& f : factors_) v *= boost::multiprecision::pow(BigInt(f.prime), f.exponent);
    return v;
  }

  friend auto operator<=>(const QFreeInteger&, const QFreeInteger&) = default;
  friend bool operator==(const QFreeInteger&, const QFreeInteger&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// The q-free part of r: exponents reduced mod q. Equals 1 exactly when r
/// is a perfect q-th power.
inline QFreeInteger rad_q(const BigInt& r, std::uint64_t q) {
  const PrimeField f(q);
  if (r <= 0) throw Error("rad_q: argument must be a positive integer");
  return QFreeInteger::from_factorization(factorize(r), f.order());
}

/// A finite integer set together with everything derived from it for a
/// fixed odd prime q.
struct ResidueSet {
  std::uint32_t q = 3;
  std::vector<BigInt> raw_elements;
  /// Distinct q-free parts other than 1, in order of first appearance.
  std::vector<QFreeInteger> reduced;
  /// Some raw element is a perfect q-th power (up to sign).
  bool contains_perfect_power = false;
  /// Increasing primes dividing some reduced element.
  std::vector<std::uint64_t> support;
  /// q times the product of the reduced elements.
  BigInt delta = 0;

  std::size_t n() const noexcept { return support.size(); }

  /// Exponent vector of reduced element j over the given prime list.
  Vector exponent_vector(std::size_t j, std::span<const std::uint64_t> primes) const {
    Vector v(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i) v[i] = reduced[j].exponent_of(primes[i]);
    return v;
  }
};

inline ResidueSet build_residue_set(std::span<const BigInt> elements, std::uint64_t q) {
  const PrimeField f(q);
  if (elements.empty()) throw Error("build_residue_set: the element list is empty");
  ResidueSet rs;
  rs.q = f.order();
  rs.raw_elements.assign(elements.begin(), elements.end());
  for (const auto& s : elements) {
    if (s == 0) throw Error("build_residue_set: 0 is not allowed as an element");
    QFreeInteger r = rad_q(boost::multiprecision::abs(s), q);
    if (r.is_one()) {
      rs.contains_perfect_power = true;
      continue;
    }
    if (std::find(rs.reduced.begin(), rs.reduced.end(), r) == rs.reduced.end()) {
      rs.reduced.push_back(std::move(r));
    }
  }
  rs.delta = rs.q;
  for (const auto& r : rs.reduced) {
    for (const auto& pp : r.factorization()) rs.support.push_back(pp.prime);
    rs.delta *= r.value();
  }
  std::sort(rs.support.begin(), rs.support.end());
  rs.support.erase(std::unique(rs.support.begin(), rs.support.end()), rs.support.end());
  return rs;
}

inline ResidueSet build_residue_set(std::initializer_list<long long> elements, std::uint64_t q) {
  std::vector<BigInt> v(elements.begin(), elements.end());
  return build_residue_set(v, q);
}

/// Image of the reduced elements in PG(F_q^n) over an explicit prime list,
/// which must cover the support. Extra primes become zero coordinates.
inline PointSet pi_q(const ResidueSet& rs, std::span<const std::uint64_t> primes) {
  if (rs.contains_perfect_power) {
    throw Error("trivial membership; pi_q undefined at 0 (the set contains a perfect q-th power)");
  }
  if (rs.reduced.empty()) throw Error("pi_q: the set has no reduced elements");
  for (std::uint64_t p : rs.support) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
      throw Error("pi_q: prime " + std::to_string(p) + " of the support is missing from the embedding");
    }
  }
  const PrimeField f(rs.q);
  PointSet out(f, primes.size());
  for (std::size_t j = 0; j < rs.reduced.size(); ++j) out.insert_vector(rs.exponent_vector(j, primes));
  return out;
}

/// The point set associated with rs: one point per reduced element over
/// its own sorted support.
inline PointSet pi_q(const ResidueSet& rs) { return pi_q(rs, rs.support); }

namespace detail {

inline void check_distinct_primes(std::span<const std::uint64_t> primes) {
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("prime list contains a repeated prime");
  }
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  }
}

inline BigInt product_of_powers(std::span<const std::uint64_t> primes, std::span<const Scalar> exps) {
  BigInt v = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (exps[i] != 0) v *= boost::multiprecision::pow(BigInt(primes[i]), exps[i]);
  }
  return v;
}

}  // namespace detail

/// Inverse of pi_q: each point becomes prod primes[i]^coords[i] using its
/// normalized representative.
inline std::vector<BigInt> realize(const PointSet& ps, std::span<const std::uint64_t> primes) {
  if (primes.size() != ps.ambient_dim()) {
    throw Error("realize: need " + std::to_string(ps.ambient_dim()) + " primes, got " +
                std::to_string(primes.size()));
  }
  detail::check_distinct_primes(primes);
  std::vector<BigInt> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(detail::product_of_powers(primes, p.coords()));
  return out;
}

/// Raises the j-th reduced element to a[j] (a[j] in [1, q-1]).
inline ResidueSet exponentiate(const ResidueSet& rs, std::span<const std::uint32_t> a) {
  if (a.size() != rs.reduced.size()) throw Error("exponentiate: need one exponent per reduced element");
  std::vector<BigInt> elements;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] % rs.q == 0) throw Error("exponentiate: exponent divisible by q");
    elements.push_back(boost::multiprecision::pow(rs.reduced[j].value(), a[j]));
  }
  if (rs.contains_perfect_power) elements.push_back(1);
  return build_residue_set(elements, rs.q);
}

/// Replaces support prime i by new_primes[i] in every reduced element.
inline ResidueSet switch_primes(const ResidueSet& rs, std::span<const std::uint64_t> new_primes) {
  if (new_primes.size() != rs.support.size()) throw Error("switch_primes: need one prime per support prime");
  detail::check_distinct_primes(new_primes);
  std::vector<BigInt> elements;
  for (std::size_t j = 0; j < rs.reduced.size(); ++j) {
    elements.push_back(detail::product_of_powers(new_primes, rs.exponent_vector(j, rs.support)));
  }
  if (rs.contains_perfect_power) elements.push_back(1);
  return build_residue_set(elements, rs.q);
}

/// Multiplies the exponent of support prime i by b[i] (mod q) in every
/// reduced element; on point sets this is the diagonal map diag(b).
inline ResidueSet scale_prime_exponents(const ResidueSet& rs, std::span<const std::uint32_t> b) {
  if (b.size() != rs.support.size()) throw Error("scale_prime_exponents: need one scalar per support prime");
  for (std::uint32_t x : b) {
    if (x % rs.q == 0) throw Error("scale_prime_exponents: scalar divisible by q");
  }
  const PrimeField f(rs.q);
  std::vector<BigInt> elements;
  for (std::size_t j = 0; j < rs.reduced.size(); ++j) {
    Vector v = rs.exponent_vector(j, rs.support);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(v[i], f.reduce(b[i]));
    elements.push_back(detail::product_of_powers(rs.support, v));
  }
  if (rs.contains_perfect_power) elements.push_back(1);
  return build_residue_set(elements, rs.q);
}

/// Membership needs at least k+1 primes in the support; false certifies
/// non-membership for sets without perfect q-th powers.
inline bool min_support_check(const ResidueSet& rs, std::size_t k) { return rs.support.size() >= k + 1; }

}  // namespace powres

#endif  // POWRES_BRIDGE_HPP_
