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

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "number.hpp"

namespace wdist {

namespace detail {

/// Integer coefficients of the M-th cyclotomic polynomial, constant term first.
inline const std::vector<BigInt>& cyclotomic_poly(std::uint64_t M) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<BigInt>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(M); it != cache.end()) return it->second;
    }
    std::vector<BigInt> phi;
    if (M == 1) {
        phi = {-1, 1};
    } else if (num::is_prime(M)) {
        phi.assign(M, 1);
    } else {
        // (x^M - 1) / prod_{d | M, d < M} Phi_d, by exact long division.
        std::vector<BigInt> rem(M + 1, 0);
        rem[0] = -1;
        rem[M] = 1;
        for (std::uint64_t d : num::divisors(M)) {
            if (d == M) continue;
            const auto& div = cyclotomic_poly(d);
            const std::size_t dd = div.size() - 1;
            std::vector<BigInt> quot(rem.size() - dd, 0);
            for (std::size_t k = rem.size(); k-- > dd;) {
                const BigInt c = rem[k];
                if (c == 0) continue;
                quot[k - dd] = c;
                for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= c * div[i];
            }
            rem = std::move(quot);
        }
        phi = std::move(rem);
    }
    std::lock_guard lock(mu);
    return cache.emplace(M, std::move(phi)).first->second;
}

}  // namespace detail

/**
 * An element of Z[zeta_M], kept in the normal form obtained by reducing
 * modulo the M-th cyclotomic polynomial. For prime M this is the power basis
 * zeta^0..zeta^(M-2); in general it has phi(M) coefficients. Equality is
 * coefficient-wise on the normal form.
 */
class CycInt {
public:
    CycInt() = default;

    /// The constant k in Z[zeta_M].
    CycInt(std::uint64_t order, const BigInt& k) : order_(checked_order(order)), coeffs_(basis_size(order), 0) {
        coeffs_[0] = k;
    }

    static CycInt zero(std::uint64_t order) { return CycInt(order, 0); }

    /// zeta_M^(j mod M).
    static CycInt zeta_pow(std::uint64_t order, std::int64_t j) {
        checked_order(order);
        const auto m = static_cast<std::int64_t>(order);
        std::vector<BigInt> raw(order, 0);
        raw[static_cast<std::size_t>(((j % m) + m) % m)] = 1;
        return from_powers(order, std::move(raw));
    }

    /// Sum of counts[j] * zeta^j over j in [0, M); counts may have any length, indices taken mod M.
    template <class Int>
    static CycInt from_histogram(std::uint64_t order, const std::vector<Int>& counts) {
        checked_order(order);
        std::vector<BigInt> raw(order, 0);
        for (std::size_t j = 0; j < counts.size(); ++j) raw[j % order] += BigInt(counts[j]);
        return from_powers(order, std::move(raw));
    }

    std::uint64_t order() const { return order_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        require_same(a, b);
        CycInt out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        return out;
    }
    friend CycInt operator-(const CycInt& a) {
        CycInt out = a;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    friend CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }
    CycInt& operator+=(const CycInt& b) { return *this = *this + b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        require_same(a, b);
        const std::uint64_t M = a.order_;
        std::vector<BigInt> raw(M, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                raw[(i + j) % M] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_powers(M, std::move(raw));
    }
    friend CycInt operator*(const BigInt& k, const CycInt& a) {
        CycInt out = a;
        for (auto& c : out.coeffs_) c *= k;
        return out;
    }
    CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

    /// The rational integer this element equals, if it is one.
    std::optional<BigInt> as_rational_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return std::nullopt;
        }
        return coeffs_.empty() ? BigInt(0) : coeffs_[0];
    }

    /// "c0 + c1*z + c2*z^2 (order M)"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i != 0) out += " + ";
            out += coeffs_[i].str();
            if (i == 1) out += "*z";
            if (i > 1) out += "*z^" + std::to_string(i);
        }
        return out + " (order " + std::to_string(order_) + ")";
    }

private:
    static std::uint64_t checked_order(std::uint64_t order) {
        if (order == 0) throw ParameterError("root-of-unity order must be positive");
        return order;
    }

    static std::size_t basis_size(std::uint64_t order) { return detail::cyclotomic_poly(order).size() - 1; }

    static void require_same(const CycInt& a, const CycInt& b) {
        if (a.order_ != b.order_) throw ParameterError("mismatched cyclotomic orders");
    }

    /// Reduces sum raw[j] zeta^j (j < M) to normal form.
    static CycInt from_powers(std::uint64_t order, std::vector<BigInt> raw) {
        const auto& phi = detail::cyclotomic_poly(order);
        const std::size_t deg = phi.size() - 1;
        if (num::is_prime(order)) {
            // zeta^(M-1) = -(1 + zeta + ... + zeta^(M-2))
            const BigInt top = raw[order - 1];
            raw.resize(order - 1);
            if (top != 0) {
                for (auto& c : raw) c -= top;
            }
        } else {
            for (std::size_t k = raw.size(); k-- > deg;) {
                const BigInt c = raw[k];
                if (c == 0) continue;
                for (std::size_t i = 0; i <= deg; ++i) raw[k - deg + i] -= c * phi[i];
            }
            raw.resize(deg);
        }
        CycInt out;
        out.order_ = order;
        out.coeffs_ = std::move(raw);
        return out;
    }

    std::uint64_t order_ = 1;
    std::vector<BigInt> coeffs_{BigInt(0)};
};

inline CycInt zeta_pow(std::uint64_t order, std::int64_t j) { return CycInt::zeta_pow(order, j); }

inline std::optional<BigInt> as_rational_integer(const CycInt& x) { return x.as_rational_integer(); }

}  // namespace wdist
