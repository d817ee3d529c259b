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
#include <utility>
#include <vector>

#include "cyclo.hpp"
#include "ffield.hpp"

namespace wdist {

/// The canonical additive character x -> zeta_p^Tr(x).
inline CycInt psi(const FieldCtx& ctx, const FieldElem& x) {
    return CycInt::zeta_pow(ctx.characteristic(), static_cast<std::int64_t>(ctx.trace_p(x)));
}

/// chi_j(gen^k) = zeta_N^(j*k), chi_j(0) = 0.
struct MultChar {
    FieldCtx ctx;
    std::uint64_t order_divisor;
    std::uint64_t index;

    MultChar(FieldCtx field, std::uint64_t n, std::uint64_t j) : ctx(std::move(field)), order_divisor(n), index(j % n) {
        if (n == 0 || (ctx.card() - 1) % n != 0) throw ParameterError("character order must divide card - 1");
    }

    bool is_principal() const { return index == 0; }

    /// Exponent e with chi(x) = zeta_N^e, for nonzero x given by its discrete log.
    std::uint64_t exponent_at_log(std::uint64_t log) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(index) * (log % order_divisor)) % order_divisor);
    }
};

inline CycInt char_value(const MultChar& chi, const FieldElem& x) {
    if (chi.ctx.is_zero(x)) return CycInt::zero(chi.order_divisor);
    return CycInt::zeta_pow(chi.order_divisor, static_cast<std::int64_t>(chi.exponent_at_log(chi.ctx.dlog(x))));
}

/// Quadratic character as an integer: 1 on squares, -1 on non-squares, 0 at 0.
inline int quadratic_char(const FieldCtx& ctx, const FieldElem& x) {
    if (ctx.is_zero(x)) return 0;
    return ctx.is_square(x) ? 1 : -1;
}

/// Same, through the discrete-log table.
inline int quadratic_char_table(const FieldTables& t, ElemIndex x) {
    if (x == 0) return 0;
    return (t.log[x] & 1U) == 0 ? 1 : -1;
}

/**
 * Sum of psi(z*u) over the N-th powers z in GF(r)^*, as an exact cyclotomic
 * integer of order p. Call as_rational_integer() on the result; for N = 2 and
 * an even extension degree it is always rational.
 */
inline CycInt gaussian_period_direct(const FieldCtx& ctx, std::uint64_t N, const FieldElem& u) {
    const std::uint64_t order = ctx.card() - 1;
    if (N == 0 || order % N != 0) throw ParameterError("N must divide card - 1");
    std::vector<std::uint64_t> hist(ctx.characteristic(), 0);
    if (ctx.card() <= kMaxTableCard) {
        const auto& t = ctx.tables();
        if (ctx.is_zero(u)) {
            hist[0] = order / N;
        } else {
            const std::uint64_t lu = t.log[ctx.index(u)];
            for (std::uint64_t k = 0; k < order; k += N) ++hist[t.trace_p[t.exp[(k + lu) % order]]];
        }
    } else {
        const FieldElem step = ctx.pow(ctx.gen(), N);
        FieldElem z = u;
        for (std::uint64_t k = 0; k < order / N; ++k) {
            ++hist[ctx.trace_p(z)];
            z = ctx.mul(z, step);
        }
    }
    return CycInt::from_histogram(ctx.characteristic(), hist);
}

/**
 * Closed-form quadratic Gaussian periods (eta_1, eta_alpha) of GF(p^(s*m)) for
 * odd p and even m: eta_1 = (-1 - sigma * p^(sm/2)) / 2 with sigma = 1 for
 * p = 1 mod 4 and sigma = (-1)^(sm/2) for p = 3 mod 4; eta_alpha = -1 - eta_1.
 */
inline std::pair<BigInt, BigInt> periods_closed_N2(std::uint64_t p, unsigned s, unsigned m) {
    if (p % 2 == 0) throw ParameterError("closed quadratic periods need odd p");
    if (m % 2 != 0) throw ParameterError("closed quadratic periods need even m");
    const unsigned sm = s * m;
    const BigInt root = num::big_pow(BigInt(p), sm / 2);
    int sigma = 1;
    if (p % 4 == 3 && (sm / 2) % 2 == 1) sigma = -1;
    const BigInt eta1 = (-1 - sigma * root) / 2;
    return {eta1, -1 - eta1};
}

/// Gaussian periods of one field, indexed by the coset of GF(r)^*/C^(N,r) (coset k holds gen^k).
struct PeriodTable {
    std::uint64_t N = 1;
    BigInt eta0;
    std::vector<BigInt> by_coset;

    /// Direct summation; throws if some period is not a rational integer.
    static PeriodTable direct(const FieldCtx& ctx, std::uint64_t N) {
        PeriodTable t;
        t.N = N;
        t.eta0 = BigInt((ctx.card() - 1) / N);
        FieldElem u = ctx.one();
        for (std::uint64_t k = 0; k < N; ++k) {
            auto v = gaussian_period_direct(ctx, N, u).as_rational_integer();
            if (!v) throw ParameterError("Gaussian period is not a rational integer for this N");
            t.by_coset.push_back(*v);
            u = ctx.mul(u, ctx.gen());
        }
        return t;
    }

    static PeriodTable closed_N2(std::uint64_t p, unsigned s, unsigned m) {
        auto [eta1, eta_alpha] = periods_closed_N2(p, s, m);
        PeriodTable t;
        t.N = 2;
        t.eta0 = (num::big_pow(BigInt(p), s * m) - 1) / 2;
        t.by_coset = {eta1, eta_alpha};
        return t;
    }
};

}  // namespace wdist
