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

// 64-bit integer primitives: modular arithmetic, deterministic primality,
// factorization, and a prime sieve. Everything else in powres builds on
// these.

#ifndef POWRES_NUMBER_THEORY_HPP_
#define POWRES_NUMBER_THEORY_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace powres {

/// Arbitrary-precision integer used for set elements and for Delta.
using BigInt = boost::multiprecision::cpp_int;

/// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One factor p^e of a factorization.
struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Deterministic Miller-Rabin. The first twelve primes as witnesses are
/// sufficient for every n < 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  const std::uint64_t n1 = n - 1;
  const int s = std::countr_zero(n1);
  const std::uint64_t d = n1 >> s;
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Sieve of Eratosthenes; primes in [2, limit] in increasing order.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return primes;
}

/// A natural number N >= 2 together with its prime factorization.
struct FactoredModulus {
  std::uint64_t value = 0;
  std::vector<PrimePower> factors;  // increasing primes

  /// Number of prime factors counted with multiplicity.
  std::uint32_t omega() const {
    std::uint32_t total = 0;
    for (const auto& f : factors) total += f.exponent;
    return total;
  }

  friend bool operator==(const FactoredModulus&, const FactoredModulus&) = default;
};

namespace detail {

// Pollard-Brent for a composite n with no factor below the trial limit.
inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr std::uint64_t m = 128;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_prime_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_prime_factors(d, out);
  split_prime_factors(n / d, out);
}

inline std::vector<PrimePower> collect(std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> result;
  for (std::uint64_t p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

inline constexpr std::uint64_t kTrialLimit = 1U << 16;

}  // namespace detail

/// Complete factorization of 2 <= n < 2^64. Trial division up to sqrt(n)
/// with an early exit once the cofactor is prime; cofactors that survive
/// trial division past 2^16 go to Pollard-Brent.
inline FactoredModulus factorize(std::uint64_t n) {
  if (n <= 1) throw Error("factorize: n must be at least 2, got " + std::to_string(n));
  FactoredModulus result{n, {}};
  std::vector<std::uint64_t> found;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= detail::kTrialLimit && p <= rest / p; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      found.push_back(p);
      rest /= p;
    }
    if (rest > 1 && p > 64 && is_prime(rest)) break;
  }
  detail::split_prime_factors(rest, found);
  result.factors = detail::collect(std::move(found));
  return result;
}

/// Factorization of an arbitrary-precision n >= 1. Small primes are divided
/// out first; whatever remains must fit in 64 bits.
inline std::vector<PrimePower> factorize(const BigInt& n) {
  if (n < 1) throw Error("factorize: n must be positive");
  if (n == 1) return {};
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return factorize(static_cast<std::uint64_t>(n)).factors;
  }
  static const std::vector<std::uint64_t> kSmallPrimes = primes_up_to(1U << 20);
  std::vector<std::uint64_t> found;
  BigInt rest = n;
  for (std::uint64_t p : kSmallPrimes) {
    if (rest <= std::numeric_limits<std::uint64_t>::max()) break;
    while (rest % p == 0) {
      found.push_back(p);
      rest /= p;
    }
  }
  if (rest > std::numeric_limits<std::uint64_t>::max()) {
    throw Error("factorize: cofactor " + rest.str() + " exceeds 64 bits after trial division");
  }
  if (rest > 1) {
    for (const auto& f : factorize(static_cast<std::uint64_t>(rest)).factors) {
      found.insert(found.end(), f.exponent, f.prime);
    }
  }
  return detail::collect(std::move(found));
}

/// p^e with overflow detection; throws if the result exceeds 64 bits.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw Error("integer power overflows 64 bits");
    }
  }
  return result;
}

}  // namespace powres

#endif  // POWRES_NUMBER_THEORY_HPP_
