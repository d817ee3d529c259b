// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wdist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for parameter combinations that violate a documented precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested computation exceeds the configured work budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace num {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    for (std::uint64_t sp = 2; sp < 1000 && sp * sp <= n; ++sp) {
        while (n % sp == 0) {
            out.push_back(sp);
            n /= sp;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Distinct prime divisors of n in ascending order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> all;
    detail::factor_into(n, all);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

/// All positive divisors of n in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> result{1};
    std::vector<std::uint64_t> all;
    detail::factor_into(n, all);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        const std::size_t before = result.size();
        std::uint64_t pk = 1;
        for (std::size_t k = i; k < j; ++k) {
            pk *= all[i];
            for (std::size_t t = 0; t < before; ++t) result.push_back(result[t] * pk);
        }
        i = j;
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// base^exp, or nullopt if the result does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

/// Decomposes q = p^s with p prime; nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto primes = prime_divisors(q);
    if (primes.size() != 1) return std::nullopt;
    unsigned s = 0;
    while (q % primes[0] == 0) {
        q /= primes[0];
        ++s;
    }
    return std::pair{primes[0], s};
}

inline BigInt big_pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// Exact integer square root when n is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt root = boost::multiprecision::sqrt(n);
    if (root * root == n) return root;
    return std::nullopt;
}

/// Converts a rational known to be integral; throws std::logic_error otherwise.
inline BigInt to_integer(const Rational& value, const char* what) {
    if (boost::multiprecision::denominator(value) != 1) {
        throw std::logic_error(std::string(what) + " is not an integer: " + value.str());
    }
    return boost::multiprecision::numerator(value);
}

}  // namespace num
}  // namespace wdist
