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
 * @file closedform.hpp
 * @brief Weight distribution of C(q,m,h,4) with N = 2 without enumeration.
 *
 * The weight of c(a,b) is n - h(r-1)/(q(q-1)) - lambda(a,b). The pairs with
 * every a + beta^t b nonzero take five lambda values whose frequencies follow
 * from the pattern counts; the 4(r-1) pairs on one of the lines a = -beta^t b
 * take two lambda values with frequency 2(r-1) each; (0,0) gives weight 0.
 * Which frequency table applies depends only on whether g(beta+1) is a square.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "charsum.hpp"
#include "chars.hpp"
#include "code.hpp"
#include "curve.hpp"

namespace wdist {

struct LambdaRow {
    Rational lambda;
    BigInt frequency;

    friend bool operator==(const LambdaRow&, const LambdaRow&) = default;
};

struct CaseSelector {
    bool gb1_square = false;

    friend bool operator==(const CaseSelector&, const CaseSelector&) = default;
};

namespace detail {

inline void require_e4_n2(const CodeParams& cp) {
    if (cp.e != 4 || cp.N != 2 || cp.p % 2 == 0) throw ParameterError("closed form requires e=4, N=2");
}

/// Sums frequencies of equal lambdas; result ordered by lambda.
inline std::vector<LambdaRow> merge_rows(const std::vector<LambdaRow>& rows) {
    std::map<Rational, BigInt> acc;
    for (const auto& row : rows) acc[row.lambda] += row.frequency;
    std::vector<LambdaRow> out;
    for (auto& [lambda, freq] : acc) out.push_back({lambda, freq});
    return out;
}

}  // namespace detail

/// Whether g(beta+1) is a square in GF(r). Needs e = 4 so that beta + 1 != 0.
inline CaseSelector select_case(const CodeParams& cp) {
    if (cp.e != 4) throw ParameterError("case selection requires e=4");
    const auto& f = cp.field;
    return CaseSelector{f.is_square(f.mul(cp.g, f.add(cp.beta, f.one())))};
}

/**
 * Lambda values of the degenerate pairs (-beta^t b, b), b != 0, evaluated from
 *   lambda = (hN/(eq)) * ( (r-1)/N + sum_{i != t} eta_{b g^i (beta^i - beta^t)} )
 * for each t and each square class of b ((r-1)/2 values of b apiece), then merged.
 */
inline std::vector<LambdaRow> degenerate_lambdas(const CodeParams& cp, const PeriodTable& periods) {
    detail::require_e4_n2(cp);
    const auto& f = cp.field;
    const Rational coef(BigInt(cp.h * cp.N), BigInt(cp.e * cp.q));
    const BigInt half = BigInt((cp.r - 1) / 2);
    std::vector<FieldElem> beta_pows{f.one()}, g_pows{f.one()};
    for (std::uint64_t i = 1; i <= cp.e; ++i) {
        beta_pows.push_back(f.mul(beta_pows.back(), cp.beta));
        g_pows.push_back(f.mul(g_pows.back(), cp.g));
    }
    std::vector<LambdaRow> rows;
    for (std::uint64_t t = 1; t <= cp.e; ++t) {
        for (const FieldElem& b : {f.one(), f.gen()}) {
            BigInt sum = periods.eta0;
            for (std::uint64_t i = 1; i <= cp.e; ++i) {
                if (i == t) continue;
                const FieldElem u = f.mul(f.mul(b, g_pows[i]), f.sub(beta_pows[i], beta_pows[t]));
                sum += periods.by_coset[f.is_square(u) ? 0 : 1];
            }
            rows.push_back({coef * Rational(sum), half});
        }
    }
    return detail::merge_rows(rows);
}

/**
 * The five non-degenerate lambda rows. With T = pi^(ms) + conj(pi)^(ms):
 *   2h eta_1/q and 2h eta_alpha/q          : (r-1)(r-15-T)/16  [square]  or (r-1)(r+1-T)/16
 *   2h(3eta_1+eta_alpha)/4q, 2h(eta_1+3eta_alpha)/4q : (r-1)(r-3+T)/4 each
 *   -h/q                                    : 3(r-1)(r+1-T)/8   [square]  or (r-1)(3r-13-3T)/8
 */
inline std::vector<LambdaRow> nondegenerate_lambdas(const CodeParams& cp, const PeriodTable& periods,
                                                    const BigInt& pi_trace, CaseSelector sel) {
    detail::require_e4_n2(cp);
    const BigInt r = cp.r, h = cp.h, q = cp.q;
    const BigInt& e1 = periods.by_coset[0];
    const BigInt& ea = periods.by_coset[1];
    const BigInt& T = pi_trace;
    auto freq = [](const BigInt& numer, int denom) { return num::to_integer(Rational(numer, denom), "frequency"); };

    const BigInt pure = sel.gb1_square ? freq((r - 1) * (r - 15 - T), 16) : freq((r - 1) * (r + 1 - T), 16);
    const BigInt mixed = freq((r - 1) * (r - 3 + T), 4);
    const BigInt balanced = sel.gb1_square ? freq(3 * (r - 1) * (r + 1 - T), 8) : freq((r - 1) * (3 * r - 13 - 3 * T), 8);
    return detail::merge_rows({
        {Rational(2 * h * e1, q), pure},
        {Rational(2 * h * ea, q), pure},
        {Rational(2 * h * (3 * e1 + ea), 4 * q), mixed},
        {Rational(2 * h * (e1 + 3 * ea), 4 * q), mixed},
        {Rational(-h, q), balanced},
    });
}

/**
 * The same rows obtained by grouping the closed pattern counts f(c) of all
 * 16 class patterns by lambda = (2h/4q) * sum_i eta_{c_i}.
 */
inline std::vector<LambdaRow> nondegenerate_lambdas_from_patterns(const CodeParams& cp, const PeriodTable& periods,
                                                                  const BigInt& pi_trace) {
    detail::require_e4_n2(cp);
    std::vector<LambdaRow> rows;
    for (const auto& pat : all_patterns(2, 4)) {
        BigInt sum = 0;
        for (auto k : pat.classes) sum += periods.by_coset[k];
        rows.push_back({Rational(BigInt(2 * cp.h) * sum, BigInt(4 * cp.q)), f_closed_e4N2(cp, pat, pi_trace)});
    }
    return detail::merge_rows(rows);
}

/// Everything the closed route computes, for reporting.
struct ClosedFormResult {
    BigInt eta1;
    BigInt eta_alpha;
    std::optional<GaussInt> pi;  ///< nullopt means pi = i*sqrt(p)
    BigInt pi_trace;
    CaseSelector selector;
    std::vector<LambdaRow> nondegenerate;
    std::vector<LambdaRow> degenerate;
    WeightDistribution distribution;
};

/// n - h(r-1)/(q(q-1)) - lambda; throws std::logic_error unless it is an integer in [0, n].
inline std::uint64_t weight_from_lambda(const CodeParams& cp, const Rational& lambda) {
    const Rational w = Rational(BigInt(cp.n)) - Rational(BigInt(cp.h) * (cp.r - 1), BigInt(cp.q) * (cp.q - 1)) - lambda;
    const BigInt weight = num::to_integer(w, "converted weight");
    if (weight < 0 || weight > cp.n) throw std::logic_error("converted weight " + weight.str() + " outside [0, n]");
    return static_cast<std::uint64_t>(weight);
}

inline ClosedFormResult closed_form(const CodeParams& cp) {
    detail::require_e4_n2(cp);
    if (cp.h % 4 != 0 || (cp.q - 1) % cp.h != 0) throw ParameterError("closed form requires 4 | h | q-1");
    ClosedFormResult res;
    const PeriodTable periods = PeriodTable::closed_N2(cp.p, cp.s, cp.m);
    res.eta1 = periods.by_coset[0];
    res.eta_alpha = periods.by_coset[1];
    if (cp.p % 4 == 1) res.pi = primary_pi(cp.p);
    res.pi_trace = trace_power(cp.p, cp.s * cp.m);
    res.selector = select_case(cp);
    res.nondegenerate = nondegenerate_lambdas(cp, periods, res.pi_trace, res.selector);
    res.degenerate = degenerate_lambdas(cp, periods);

    res.distribution.n = cp.n;
    res.distribution.q = cp.q;
    res.distribution.add(0, 1);
    for (const auto* rows : {&res.nondegenerate, &res.degenerate}) {
        for (const auto& row : *rows) {
            if (row.frequency < 0) throw std::logic_error("negative frequency " + row.frequency.str());
            res.distribution.add(weight_from_lambda(cp, row.lambda), row.frequency);
        }
    }
    return res;
}

inline WeightDistribution closed_weight_distribution(const CodeParams& cp) { return closed_form(cp).distribution; }

}  // namespace wdist
