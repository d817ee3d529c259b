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

/**
 * @file curve.hpp
 * @brief Point counts of E: y^2 = x^3 + 4x over GF(p^n).
 *
 * #E(GF(p^n)) = 1 + p^n - (pi^n + conj(pi)^n), where pi is a primary Gaussian
 * prime of norm p (pi = 1 mod 2+2i) when p = 1 mod 4, and pi = i*sqrt(p)
 * when p = 3 mod 4.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chars.hpp"
#include "ffield.hpp"
#include "number.hpp"

namespace wdist {

struct GaussInt {
    BigInt re = 0;
    BigInt im = 0;

    friend bool operator==(const GaussInt&, const GaussInt&) = default;
    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    /// Exact quotient a / b if it is a Gaussian integer.
    friend std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b) {
        const BigInt nb = b.norm();
        if (nb == 0) return std::nullopt;
        const GaussInt num = a * b.conj();
        if (num.re % nb != 0 || num.im % nb != 0) return std::nullopt;
        return GaussInt{num.re / nb, num.im / nb};
    }

    std::string to_string() const {
        std::string out = re.str();
        out += im < 0 ? "-" : "+";
        out += BigInt(abs(im)).str() + "i";
        return out;
    }
};

/// Whether pi = 1 (mod 2+2i).
inline bool is_primary(const GaussInt& pi) { return exact_div(pi - GaussInt{1, 0}, GaussInt{2, 2}).has_value(); }

/**
 * Writes p = a^2 + b^2 (p = 1 mod 4) by Cornacchia's algorithm. The square
 * root of -1 is c^((p-1)/4) for the smallest quadratic non-residue c.
 */
inline std::pair<std::uint64_t, std::uint64_t> sum_of_two_squares(std::uint64_t p) {
    if (!num::is_prime(p) || p % 4 != 1) throw ParameterError("p must be a prime = 1 mod 4");
    std::uint64_t c = 2;
    while (num::powmod(c, (p - 1) / 2, p) != p - 1) ++c;
    std::uint64_t x = num::powmod(c, (p - 1) / 4, p);
    if (2 * x < p) x = p - x;
    std::uint64_t a = p, b = x;
    while (static_cast<unsigned __int128>(b) * b > p) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    const std::uint64_t rest = p - b * b;
    const auto root = num::exact_sqrt(BigInt(rest));
    if (!root) throw std::logic_error("Cornacchia failed");
    return {b, static_cast<std::uint64_t>(*root)};
}

/**
 * A primary Gaussian integer of norm p, chosen among the associates and
 * conjugates of a+bi; ties go to the candidate with nonnegative imaginary part.
 */
inline GaussInt primary_pi(std::uint64_t p) {
    const auto [a, b] = sum_of_two_squares(p);
    const GaussInt base{BigInt(a), BigInt(b)};
    const std::array<GaussInt, 4> units{GaussInt{1, 0}, GaussInt{0, 1}, GaussInt{-1, 0}, GaussInt{0, -1}};
    std::optional<GaussInt> fallback;
    for (const GaussInt& z : {base, base.conj()}) {
        for (const auto& u : units) {
            const GaussInt cand = u * z;
            if (!is_primary(cand)) continue;
            if (cand.im >= 0) return cand;
            if (!fallback) fallback = cand;
        }
    }
    if (fallback) return *fallback;
    throw std::logic_error("no primary associate found");
}

/**
 * pi^n + conj(pi)^n. For p = 1 mod 4 via t_k = (pi + conj pi) t_{k-1} - p t_{k-2};
 * for p = 3 mod 4 it is 0 for odd n and 2(-p)^(n/2) for even n.
 */
inline BigInt trace_power(std::uint64_t p, unsigned n) {
    if (p % 2 == 0) throw ParameterError("trace_power needs an odd prime");
    if (n == 0) return 2;
    if (p % 4 == 3) {
        if (!num::is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
        if (n % 2 == 1) return 0;
        return 2 * num::big_pow(BigInt(-static_cast<std::int64_t>(p)), n / 2);
    }
    const GaussInt pi = primary_pi(p);
    const BigInt t1 = 2 * pi.re;
    BigInt prev = 2, cur = t1;
    for (unsigned k = 2; k <= n; ++k) {
        BigInt next = t1 * cur - BigInt(p) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline BigInt count_points_closed(std::uint64_t p, unsigned n) {
    return 1 + num::big_pow(BigInt(p), n) - trace_power(p, n);
}

/// Which cubic to count: the Weierstrass form x^3 + 4x, or (x+r1)(x+r2)(x+r3).
struct CubicCurve {
    std::optional<std::array<FieldElem, 3>> shifts;  ///< nullopt selects x^3 + 4x

    static CubicCurve weierstrass() { return {}; }
    static CubicCurve with_roots(FieldElem r1, FieldElem r2, FieldElem r3) {
        return CubicCurve{std::array<FieldElem, 3>{std::move(r1), std::move(r2), std::move(r3)}};
    }
};

/// Points on y^2 = cubic(x) by looping over x, optionally counting the point at infinity.
inline BigInt count_points_brute(const FieldCtx& ctx, const CubicCurve& curve = CubicCurve::weierstrass(),
                                 bool with_infinity = true) {
    if (ctx.characteristic() == 2) throw ParameterError("curve counting needs odd characteristic");
    const bool tables = ctx.card() <= kMaxTableCard;
    const FieldElem four = ctx.constant(4);
    BigInt total = with_infinity ? 1 : 0;
    for (ElemIndex xi = 0; xi < ctx.card(); ++xi) {
        const FieldElem x = ctx.from_index(xi);
        FieldElem v;
        if (curve.shifts) {
            const auto& s = *curve.shifts;
            v = ctx.mul(ctx.mul(ctx.add(x, s[0]), ctx.add(x, s[1])), ctx.add(x, s[2]));
        } else {
            v = ctx.mul(x, ctx.add(ctx.mul(x, x), four));
        }
        const int chi = tables ? quadratic_char_table(ctx.tables(), ctx.index(v)) : quadratic_char(ctx, v);
        total += 1 + chi;
    }
    return total;
}

}  // namespace wdist
