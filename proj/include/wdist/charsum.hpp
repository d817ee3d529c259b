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
 * @file charsum.hpp
 * @brief Counting the pairs (a,b) in a class pattern.
 *
 * For c = (c_1..c_e) with every c_i nonzero, F(c) is the set of (a,b) with
 * (a + beta^i b) g^i c_i an N-th power for every i (this excludes the lines
 * a = -beta^i b). Its size f(c) depends on c only through the cosets of the
 * c_i modulo N-th powers, so patterns of coset indices are the currency here.
 * Three independent routes compute f: direct counting, the character-sum
 * formula over tuples of order-N characters, and (for e = 4, N = 2) the
 * closed expression in terms of the Frobenius trace of y^2 = x^3 + 4x.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "code.hpp"
#include "cyclo.hpp"

namespace wdist {

/// Coset index of each c_i modulo N-th powers; c_i is represented by gen^classes[i].
struct ClassPattern {
    std::vector<std::uint64_t> classes;

    friend bool operator==(const ClassPattern&, const ClassPattern&) = default;
    friend auto operator<=>(const ClassPattern&, const ClassPattern&) = default;
};

/// All N^e patterns in lexicographic order.
inline std::vector<ClassPattern> all_patterns(std::uint64_t N, std::uint64_t e) {
    std::vector<ClassPattern> out;
    std::vector<std::uint64_t> cur(e, 0);
    while (true) {
        out.push_back(ClassPattern{cur});
        std::size_t i = e;
        while (i > 0) {
            --i;
            if (++cur[i] < N) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (e == 0) return out;
    }
}

inline std::vector<FieldElem> representatives(const CodeParams& cp, const ClassPattern& pattern) {
    if (pattern.classes.size() != cp.e) throw ParameterError("pattern length must equal e");
    std::vector<FieldElem> c;
    for (auto k : pattern.classes) c.push_back(cp.field.pow(cp.field.gen(), k));
    return c;
}

/// gamma_i = beta^i / (1 - beta^i), i = 1..e-1.
inline std::vector<FieldElem> gamma_constants(const CodeParams& cp) {
    const auto& f = cp.field;
    std::vector<FieldElem> gammas;
    FieldElem bi = f.one();
    for (std::uint64_t i = 1; i < cp.e; ++i) {
        bi = f.mul(bi, cp.beta);
        gammas.push_back(f.div(bi, f.sub(f.one(), bi)));
    }
    return gammas;
}

/// Sum over x in GF(r) of chi((x+a)(x+b)) for the quadratic character chi, by direct summation.
inline std::int64_t quad_pair_sum(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b) {
    if (ctx.characteristic() == 2) throw ParameterError("quadratic character needs odd characteristic");
    std::int64_t sum = 0;
    if (ctx.card() <= kMaxTableCard) {
        const auto& t = ctx.tables();
        const ElemIndex ia = ctx.index(a), ib = ctx.index(b);
        for (ElemIndex x = 0; x < ctx.card(); ++x) {
            const ElemIndex u = ctx.index_add(x, ia), v = ctx.index_add(x, ib);
            if (u == 0 || v == 0) continue;
            sum += ((t.log[u] + t.log[v]) & 1U) == 0 ? 1 : -1;
        }
        return sum;
    }
    for (ElemIndex x = 0; x < ctx.card(); ++x) {
        const FieldElem xe = ctx.from_index(x);
        sum += quadratic_char(ctx, ctx.mul(ctx.add(xe, a), ctx.add(xe, b)));
    }
    return sum;
}

namespace detail {

inline void require_desk_scale(const CodeParams& cp) {
    if (cp.r > (std::uint64_t{1} << 16)) throw BudgetError("pattern counting is limited to r <= 2^16");
}

}  // namespace detail

/**
 * f(c) by enumerating all (a,b) for explicit nonzero c_1..c_e (any
 * representatives of their cosets).
 */
inline std::uint64_t count_F_brute(const CodeParams& cp, const std::vector<FieldElem>& c) {
    detail::require_desk_scale(cp);
    const auto& f = cp.field;
    const auto& t = f.tables();
    const std::uint64_t ord = cp.r - 1;
    if (c.size() != cp.e) throw ParameterError("need e class representatives");
    std::vector<std::uint64_t> shift(cp.e);  // log(g^i c_i), i = 1..e
    for (std::uint64_t i = 0; i < cp.e; ++i) {
        if (f.is_zero(c[i])) throw ParameterError("class representatives must be nonzero");
        shift[i] = ((i + 1) * cp.g_exp + t.log[f.index(c[i])]) % ord;
    }
    std::uint64_t count = 0;
    for (ElemIndex a = 0; a < cp.r; ++a) {
        for (std::uint64_t lb = 0; lb < ord; ++lb) {  // b = 0 puts (a,0) on every line or outside F
            bool in = true;
            for (std::uint64_t i = 0; i < cp.e && in; ++i) {
                const ElemIndex bib = t.exp[(lb + (i + 1) * cp.beta_exp) % ord];
                const ElemIndex u = f.index_add(a, bib);
                in = u != 0 && (t.log[u] + shift[i]) % cp.N == 0;
            }
            count += in;
        }
        // b = 0: (a + beta^i * 0) = a for every i
        if (a != 0) {
            bool in = true;
            for (std::uint64_t i = 0; i < cp.e && in; ++i) in = (t.log[a] + shift[i]) % cp.N == 0;
            count += in;
        }
    }
    return count;
}

inline std::uint64_t count_F_brute(const CodeParams& cp, const ClassPattern& pattern) {
    return count_F_brute(cp, representatives(cp, pattern));
}

/**
 * f(c) for every pattern in one pass: each non-degenerate (a,b) lies in
 * exactly one F(c), the one with class_i = -log((a + beta^i b) g^i) mod N.
 */
inline std::map<ClassPattern, std::uint64_t> count_F_all(const CodeParams& cp) {
    detail::require_desk_scale(cp);
    const auto& f = cp.field;
    const auto& t = f.tables();
    const std::uint64_t ord = cp.r - 1;
    std::map<ClassPattern, std::uint64_t> counts;
    for (const auto& pat : all_patterns(cp.N, cp.e)) counts[pat] = 0;
    ClassPattern pat{std::vector<std::uint64_t>(cp.e)};
    for (ElemIndex a = 0; a < cp.r; ++a) {
        for (std::uint64_t slot = 0; slot < cp.r; ++slot) {
            bool degenerate = false;
            for (std::uint64_t i = 0; i < cp.e && !degenerate; ++i) {
                const ElemIndex bib = slot == 0 ? 0 : t.exp[(slot - 1 + (i + 1) * cp.beta_exp) % ord];
                const ElemIndex u = f.index_add(a, bib);
                if (u == 0) {
                    degenerate = true;
                    break;
                }
                const std::uint64_t lu = (t.log[u] + (i + 1) * cp.g_exp) % cp.N;
                pat.classes[i] = (cp.N - lu) % cp.N;
            }
            if (!degenerate) ++counts[pat];
        }
    }
    return counts;
}

/**
 * f(c) from the character-sum formula
 *   (r-1)/N^e * sum over chi_1..chi_{e-1} of order dividing N of
 *   prod_i chi_i(g^i (1 - beta^i) c_i / c_e) * sum_b prod_i chi_i(b + gamma_i),
 * evaluated exactly in Z[zeta_N] with chi(0) = 0.
 *
 * @throws std::logic_error if the result is not a rational integer.
 */
inline BigInt f_character_formula(const CodeParams& cp, const ClassPattern& pattern) {
    detail::require_desk_scale(cp);
    const auto& f = cp.field;
    const auto& t = f.tables();
    const std::uint64_t N = cp.N, ord = cp.r - 1, k = cp.e - 1;
    const auto c = representatives(cp, pattern);
    const auto gammas = gamma_constants(cp);

    // Discrete logs of the prefactor arguments g^i (1 - beta^i) c_i c_e^{-1}.
    std::vector<std::uint64_t> pre_log(k);
    {
        const FieldElem ce_inv = f.inv(c[k]);
        FieldElem gi = f.one(), bi = f.one();
        for (std::uint64_t i = 0; i < k; ++i) {
            gi = f.mul(gi, cp.g);
            bi = f.mul(bi, cp.beta);
            pre_log[i] = f.dlog(f.mul(f.mul(gi, f.sub(f.one(), bi)), f.mul(c[i], ce_inv)));
        }
    }
    // logs of b + gamma_i for every b (ord marks zero)
    std::vector<std::vector<std::uint64_t>> shifted_log(k, std::vector<std::uint64_t>(cp.r));
    for (std::uint64_t i = 0; i < k; ++i) {
        const ElemIndex gidx = f.index(gammas[i]);
        for (ElemIndex b = 0; b < cp.r; ++b) {
            const ElemIndex u = f.index_add(b, gidx);
            shifted_log[i][b] = u == 0 ? ord : t.log[u];
        }
    }

    CycInt total = CycInt::zero(N);
    std::vector<std::uint64_t> js(k, 0);
    while (true) {
        std::uint64_t pre_exp = 0;
        for (std::uint64_t i = 0; i < k; ++i) pre_exp += js[i] * (pre_log[i] % N);
        std::vector<std::uint64_t> hist(N, 0);
        for (ElemIndex b = 0; b < cp.r; ++b) {
            std::uint64_t ex = 0;
            bool vanishes = false;
            for (std::uint64_t i = 0; i < k; ++i) {
                // chi(0) = 0 for every character, the principal one included
                if (shifted_log[i][b] == ord) {
                    vanishes = true;
                    break;
                }
                ex += js[i] * (shifted_log[i][b] % N);
            }
            if (!vanishes) ++hist[ex % N];
        }
        total += CycInt::zeta_pow(N, static_cast<std::int64_t>(pre_exp % N)) * CycInt::from_histogram(N, hist);

        std::size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            if (++js[i] < N) {
                done = false;
                break;
            }
            js[i] = 0;
        }
        if (done) break;
    }
    const auto value = total.as_rational_integer();
    if (!value) throw std::logic_error("character formula did not reduce to an integer: " + total.to_string());
    return num::to_integer(Rational(BigInt(cp.r - 1) * *value, num::big_pow(BigInt(N), static_cast<unsigned>(cp.e))),
                           "f(c) from the character formula");
}

/**
 * Closed f(c) for e = 4, N = 2:
 *   (r-1)/16 * ( r - 3 - 2chi(c2c4) - 2chi(c1c3) - chi(c1c2c3c4) * T
 *                - 2chi(g(beta+1)) * [chi(c3c4) + chi(c1c4) + chi(c2c3) + chi(c1c2)] )
 * where T = pi^(ms) + conj(pi)^(ms).
 */
inline BigInt f_closed_e4N2(const CodeParams& cp, const ClassPattern& pattern, const BigInt& pi_trace) {
    if (cp.e != 4 || cp.N != 2) throw ParameterError("closed form requires e=4, N=2");
    if (pattern.classes.size() != 4) throw ParameterError("pattern length must equal e");
    auto chi = [&](int i) { return pattern.classes[static_cast<std::size_t>(i - 1)] == 0 ? 1 : -1; };
    const int chi_gb1 = cp.field.is_square(cp.field.mul(cp.g, cp.field.add(cp.beta, cp.field.one()))) ? 1 : -1;
    const BigInt inner = BigInt(cp.r) - 3 - 2 * chi(2) * chi(4) - 2 * chi(1) * chi(3) -
                         chi(1) * chi(2) * chi(3) * chi(4) * pi_trace -
                         2 * chi_gb1 * (chi(3) * chi(4) + chi(1) * chi(4) + chi(2) * chi(3) + chi(1) * chi(2));
    return num::to_integer(Rational(BigInt(cp.r - 1) * inner, 16), "closed f(c)");
}

struct WeilAudit {
    Rational gap;            ///< |f(c) - (r-1)(r-e+1)/N^e|
    Rational bound_squared;  ///< ((e-2)(r-1)sqrt(r)/N)^2
    std::optional<Rational> bound;  ///< exact bound when r is a perfect square
    bool holds = false;
};

/// Compares f(c) against its main term, squaring both sides to stay in exact arithmetic.
inline WeilAudit weil_gap(const CodeParams& cp, const BigInt& f_value) {
    WeilAudit audit;
    const BigInt r = cp.r;
    const Rational main = Rational((r - 1) * (r - cp.e + 1), num::big_pow(BigInt(cp.N), static_cast<unsigned>(cp.e)));
    audit.gap = abs(Rational(f_value) - main);
    const Rational scale(BigInt(cp.e - 2) * (r - 1), BigInt(cp.N));
    audit.bound_squared = scale * scale * r;
    if (auto root = num::exact_sqrt(r)) audit.bound = scale * Rational(*root);
    audit.holds = audit.gap * audit.gap <= audit.bound_squared;
    return audit;
}

inline WeilAudit weil_gap(const CodeParams& cp, const ClassPattern& pattern) {
    return weil_gap(cp, BigInt(count_F_brute(cp, pattern)));
}

}  // namespace wdist
