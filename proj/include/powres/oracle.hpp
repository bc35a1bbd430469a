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

// The number-theoretic side: q-th power residues modulo primes and
// composites, enumeration of moduli N with Omega(N) <= k coprime to Delta,
// numerical verification and witness search, and the membership decision
// through the blocking-set criterion.

#ifndef POWRES_ORACLE_HPP_
#define POWRES_ORACLE_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powres/bridge.hpp"
#include "powres/field.hpp"
#include "powres/geometry.hpp"
#include "powres/number_theory.hpp"

namespace powres {

/// Whether x^q = s (mod p) is solvable, for a prime p coprime to q*s.
/// When p != 1 (mod q), x -> x^q permutes the units, so every unit is a
/// q-th power; otherwise s is one iff s^((p-1)/q) = 1 (mod p). The sign of
/// s is irrelevant since -1 = (-1)^q.
inline bool is_qth_residue_mod_p(const BigInt& s, std::uint64_t p, std::uint64_t q) {
  if (p == q) throw Error("p = q is excluded by Delta");
  const std::uint64_t r = static_cast<std::uint64_t>(boost::multiprecision::abs(s) % p);
  if (r == 0) throw Error("power residue symbol undefined: p divides s");
  if (p % q != 1) return true;
  return powmod(r, (p - 1) / q, p) == 1;
}

namespace detail {

// Bit j set iff reduced element j is a q-th power residue at a prime.
using ResidueMask = std::vector<std::uint64_t>;

// Per-prime residue masks of a ResidueSet. For p = 1 (mod q) the map
// s -> s^((p-1)/q) is a character, so it is enough to evaluate it on the
// support primes and multiply according to each exponent vector.
class ResidueTable {
 public:
  explicit ResidueTable(const ResidueSet& rs) : q_(rs.q), support_(rs.support) {
    words_ = (rs.reduced.size() + 63) / 64;
    exponents_.reserve(rs.reduced.size());
    for (std::size_t j = 0; j < rs.reduced.size(); ++j) {
      exponents_.push_back(rs.exponent_vector(j, support_));
    }
    all_.assign(words_, ~std::uint64_t{0});
    if (const std::size_t tail = rs.reduced.size() % 64; tail != 0 && words_ > 0) {
      all_.back() = (std::uint64_t{1} << tail) - 1;
    }
  }

  std::size_t size() const noexcept { return exponents_.size(); }

  const ResidueMask& mask(std::uint64_t p) {
    if (p % q_ != 1) return all_;
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    const std::uint64_t e = (p - 1) / q_;
    std::vector<std::vector<std::uint64_t>> power(support_.size(), std::vector<std::uint64_t>(q_));
    for (std::size_t i = 0; i < support_.size(); ++i) {
      const std::uint64_t chi = powmod(support_[i] % p, e, p);
      power[i][0] = 1;
      for (std::uint32_t t = 1; t < q_; ++t) power[i][t] = mulmod(power[i][t - 1], chi, p);
    }
    ResidueMask m(words_, 0);
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
      std::uint64_t value = 1;
      for (std::size_t i = 0; i < support_.size(); ++i) {
        if (exponents_[j][i] != 0) value = mulmod(value, power[i][exponents_[j][i]], p);
      }
      if (value == 1) m[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return cache_.emplace(p, std::move(m)).first->second;
  }

  // Some reduced element is a residue at every prime factor of n.
  bool has_common_residue(const FactoredModulus& n) {
    ResidueMask acc = all_;
    for (const auto& f : n.factors) {
      const ResidueMask& m = mask(f.prime);
      for (std::size_t w = 0; w < words_; ++w) acc[w] &= m[w];
    }
    return std::any_of(acc.begin(), acc.end(), [](std::uint64_t w) { return w != 0; });
  }

 private:
  std::uint32_t q_;
  std::vector<std::uint64_t> support_;
  std::vector<Vector> exponents_;
  std::size_t words_ = 0;
  ResidueMask all_;
  std::unordered_map<std::uint64_t, ResidueMask> cache_;
};

inline bool divides_delta(const ResidueSet& rs, std::uint64_t p) {
  return p == rs.q || std::binary_search(rs.support.begin(), rs.support.end(), p);
}

inline std::size_t resolve_workers(unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace detail

/// gcd(N, Delta) = 1 for this set, i.e. N avoids q and every support prime.
inline bool is_admissible(const ResidueSet& rs, const FactoredModulus& n) {
  return std::none_of(n.factors.begin(), n.factors.end(),
                      [&](const PrimePower& f) { return detail::divides_delta(rs, f.prime); });
}

/// Whether some element of S is a q-th power modulo N. By the Chinese
/// remainder theorem and Hensel lifting (N is coprime to q and to every
/// element) this holds iff one element is a residue at every prime of N.
/// The q-free representatives are tested; a perfect q-th power in the set
/// makes the answer trivially true.
inline bool set_has_qth_residue_mod(const ResidueSet& rs, const FactoredModulus& n) {
  if (!is_admissible(rs, n)) {
    throw Error("excluded modulus: gcd(" + std::to_string(n.value) + ", Delta) != 1");
  }
  if (rs.contains_perfect_power) return true;
  for (const auto& r : rs.reduced) {
    const BigInt s = r.value();
    const bool everywhere = std::all_of(n.factors.begin(), n.factors.end(), [&](const PrimePower& f) {
      return is_qth_residue_mod_p(s, f.prime, rs.q);
    });
    if (everywhere) return true;
  }
  return false;
}

/// Visits every N <= bound with 1 <= Omega(N) <= k built from the given
/// increasing primes, each exactly once (nondecreasing prime sequences).
/// Visitor order is depth-first, not numeric.
template <class Visitor>
void for_each_modulus(std::size_t k, std::span<const std::uint64_t> primes, std::uint64_t bound,
                      Visitor&& visitor) {
  FactoredModulus cur{1, {}};
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t depth) {
    if (depth == k) return;
    for (std::size_t i = start; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (cur.value > bound / p) break;
      const std::uint64_t saved = cur.value;
      cur.value *= p;
      if (!cur.factors.empty() && cur.factors.back().prime == p) {
        ++cur.factors.back().exponent;
      } else {
        cur.factors.push_back({p, 1});
      }
      visitor(std::as_const(cur));
      extend(i, depth + 1);
      if (cur.factors.back().exponent > 1) {
        --cur.factors.back().exponent;
      } else {
        cur.factors.pop_back();
      }
      cur.value = saved;
    }
  };
  extend(0, 0);
}

namespace detail {

inline std::vector<FactoredModulus> sorted_moduli(std::size_t k, std::span<const std::uint64_t> primes,
                                                  std::uint64_t bound) {
  std::vector<FactoredModulus> out;
  for_each_modulus(k, primes, bound, [&](const FactoredModulus& n) { out.push_back(n); });
  std::sort(out.begin(), out.end(),
            [](const FactoredModulus& a, const FactoredModulus& b) { return a.value < b.value; });
  return out;
}

}  // namespace detail

/// Every N <= bound with 1 <= Omega(N) <= k and gcd(N, delta) = 1, in
/// increasing order, with factorizations.
inline std::vector<FactoredModulus> enumerate_moduli(std::size_t k, const BigInt& delta,
                                                     std::uint64_t bound) {
  if (k < 1) throw Error("enumerate_moduli: k must be at least 1");
  if (bound < 2) throw Error("enumerate_moduli: bound must be at least 2");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (delta % p != 0) primes.push_back(p);
  }
  return detail::sorted_moduli(k, primes, bound);
}

/// Outcome of a numerical check of S over all admissible moduli up to a
/// bound.
struct WitnessReport {
  enum class Verdict { kVerified, kCounterexample };

  Verdict verdict = Verdict::kVerified;
  std::uint64_t bound = 0;
  std::optional<FactoredModulus> counterexample;
  /// Moduli tested, in increasing order, up to and including the
  /// counterexample if there is one.
  std::uint64_t checked = 0;
  std::chrono::duration<double> elapsed{0};

  bool verified() const noexcept { return verdict == Verdict::kVerified; }
};

namespace detail {

// First index in `moduli` at which S has no common residue, or moduli.size().
// Workers claim fixed-size chunks in order; a chunk past the best failure
// seen so far is skipped, and the minimum over workers is returned.
inline std::size_t first_failure(const ResidueSet& rs, const std::vector<FactoredModulus>& moduli,
                                 unsigned threads) {
  if (rs.contains_perfect_power) return moduli.size();
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (moduli.size() + kChunk - 1) / kChunk;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{moduli.size()};
  auto worker = [&] {
    ResidueTable table(rs);
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks || c * kChunk >= best.load()) return;
      const std::size_t end = std::min(moduli.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) {
        if (!table.has_common_residue(moduli[i])) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };
  const std::size_t workers = std::min(resolve_workers(threads), std::max<std::size_t>(chunks, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

inline std::vector<std::uint64_t> admissible_primes(const ResidueSet& rs, std::uint64_t bound,
                                                    bool only_one_mod_q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (divides_delta(rs, p)) continue;
    if (only_one_mod_q && p % rs.q != 1) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace detail

/// Checks every admissible N <= bound with Omega(N) <= k in increasing
/// order; reports the first N at which no element of S is a q-th power.
inline WitnessReport verify_membership(const ResidueSet& rs, std::size_t k, std::uint64_t bound,
                                       unsigned threads = 1) {
  if (k < 1) throw Error("verify_membership: k must be at least 1");
  if (bound < 2) throw Error("verify_membership: bound must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  const auto moduli = detail::sorted_moduli(k, detail::admissible_primes(rs, bound, false), bound);
  const std::size_t fail = detail::first_failure(rs, moduli, threads);
  WitnessReport report;
  report.bound = bound;
  if (fail < moduli.size()) {
    report.verdict = WitnessReport::Verdict::kCounterexample;
    report.counterexample = moduli[fail];
    report.checked = fail + 1;
  } else {
    report.checked = moduli.size();
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// The smallest admissible N <= bound with Omega(N) <= k at which no
/// element of S is a q-th power, or nullopt if there is none below the
/// bound (inconclusive). Only primes = 1 (mod q) are used: any other prime
/// factor accepts every unit, so dropping it gives a smaller witness.
inline std::optional<FactoredModulus> find_witness(const ResidueSet& rs, std::size_t k,
                                                   std::uint64_t bound, unsigned threads = 1) {
  if (k < 1) throw Error("find_witness: k must be at least 1");
  if (bound < 2) throw Error("find_witness: bound must be at least 2");
  if (rs.contains_perfect_power) return std::nullopt;
  const auto moduli = detail::sorted_moduli(k, detail::admissible_primes(rs, bound, true), bound);
  const std::size_t fail = detail::first_failure(rs, moduli, threads);
  if (fail == moduli.size()) return std::nullopt;
  return moduli[fail];
}

enum class Verdict { kTriviallyMember, kMember, kNonMember };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTriviallyMember:
      return "trivially_member";
    case Verdict::kMember:
      return "member";
    case Verdict::kNonMember:
      return "non_member";
  }
  return "unknown";
}

/// Membership verdict with its certificate.
struct Decision {
  Verdict verdict = Verdict::kNonMember;
  std::size_t k = 1;
  std::string reason;
  /// The associated point set, when it is defined.
  std::optional<PointSet> points;
  /// A codimension-k subspace missed by the point set (non-members with
  /// enough primes).
  std::optional<Subspace> unblocked;

  bool is_member() const noexcept { return verdict != Verdict::kNonMember; }
};

/// Decides whether S contains a q-th power modulo almost every N with
/// Omega(N) <= k: trivially if S has a perfect q-th power; never if fewer
/// than k+1 primes are involved; otherwise exactly when the associated
/// point set is k-blocking.
inline Decision decide(const ResidueSet& rs, std::size_t k, unsigned threads = 1) {
  if (k < 1) throw Error("decide: k must be at least 1");
  Decision d;
  d.k = k;
  if (rs.contains_perfect_power) {
    d.verdict = Verdict::kTriviallyMember;
    d.reason = "the set contains a perfect q-th power";
    return d;
  }
  d.points = pi_q(rs);
  if (!min_support_check(rs, k)) {
    d.verdict = Verdict::kNonMember;
    d.reason = "support too small: " + std::to_string(rs.support.size()) + " primes, need at least " +
               std::to_string(k + 1);
    return d;
  }
  d.unblocked = find_unblocked_subspace(*d.points, k, threads);
  if (d.unblocked) {
    d.verdict = Verdict::kNonMember;
    d.reason = "the point set misses a subspace of codimension " + std::to_string(k);
  } else {
    d.verdict = Verdict::kMember;
    d.reason = "the point set is " + std::to_string(k) + "-blocking";
  }
  return d;
}

}  // namespace powres

#endif  // POWRES_ORACLE_HPP_
