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
 * @file oracles.hpp
 * @brief Exhaustive desk-scale checks of the identities the closed form rests on.
 *
 * Each suite returns pass/fail counts; the CLI "oracles" command and the
 * acceptance binary both run these.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charsum.hpp"
#include "chars.hpp"
#include "closedform.hpp"
#include "code.hpp"
#include "curve.hpp"

namespace wdist::oracles {

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> failures;  ///< first few failure descriptions

    bool ok() const { return failed == 0 && passed > 0; }

    void check(bool cond, const std::string& what) {
        if (cond) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < 20) failures.push_back(what);
    }

    void merge(const SuiteResult& other) {
        passed += other.passed;
        failed += other.failed;
        for (const auto& f : other.failures) {
            if (failures.size() < 20) failures.push_back(other.name + ": " + f);
        }
    }
};

/// (p, d) for every prime power p^d in [lo, hi], ascending; odd characteristic only if requested.
inline std::vector<std::pair<std::uint64_t, unsigned>> prime_powers(std::uint64_t lo, std::uint64_t hi, bool odd_only) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= hi; ++v) {
        if (auto pp = num::as_prime_power(v); pp && (!odd_only || pp->first != 2)) out.push_back(*pp);
    }
    return out;
}

/// Sum_x chi((x+a)(x+b)) = -1 for all distinct a, b in every odd field with min_r <= r <= max_r.
inline SuiteResult lemma31(std::uint64_t max_r = 169, std::uint64_t min_r = 9) {
    SuiteResult res;
    res.name = "lemma31";
    for (auto [p, d] : prime_powers(min_r, max_r, true)) {
        const FieldCtx f = make_field(p, d);
        const auto& t = f.tables();
        const std::uint64_t r = f.card();
        std::uint64_t bad = 0, pairs = 0;
        // sum over x with tables inline; equivalent to quad_pair_sum but avoids rebuilding elements
        for (ElemIndex a = 0; a < r; ++a) {
            for (ElemIndex b = 0; b < r; ++b) {
                if (a == b) continue;
                std::int64_t sum = 0;
                for (ElemIndex x = 0; x < r; ++x) {
                    const ElemIndex u = f.index_add(x, a), v = f.index_add(x, b);
                    if (u == 0 || v == 0) continue;
                    sum += ((t.log[u] + t.log[v]) & 1U) == 0 ? 1 : -1;
                }
                ++pairs;
                bad += sum != -1;
            }
        }
        res.check(bad == 0, "GF(" + std::to_string(r) + "): " + std::to_string(bad) + " of " + std::to_string(pairs) +
                                " pairs differ from -1");
        res.check(quad_pair_sum(f, f.one(), f.one()) == static_cast<std::int64_t>(r - 1),
                  "GF(" + std::to_string(r) + "): a = b does not give r - 1");
    }
    return res;
}

/// Closed point count of y^2 = x^3 + 4x equals the brute count for every odd prime power up to max_card.
inline SuiteResult lemma32(std::uint64_t max_card = 10000) {
    SuiteResult res;
    res.name = "lemma32";
    for (auto [p, d] : prime_powers(3, max_card, true)) {
        const FieldCtx f = make_field(p, d);
        const BigInt closed = count_points_closed(p, d);
        const BigInt brute = count_points_brute(f);
        const std::string tag = std::to_string(p) + "^" + std::to_string(d);
        res.check(closed == brute, tag + ": closed " + closed.str() + " vs brute " + brute.str());
        const BigInt t = trace_power(p, d);
        res.check(t * t <= 4 * num::big_pow(BigInt(p), d), tag + ": Hasse bound violated");
    }
    return res;
}

struct Instance {
    std::uint64_t p;
    unsigned s, m;
    std::uint64_t h, e;
};

/// The e = 4, N = 2 instances with r in {25, 81}.
inline std::vector<Instance> small_e4_instances() { return {{5, 1, 2, 4, 4}, {3, 2, 2, 4, 4}, {3, 2, 2, 8, 4}}; }

/// count_F_brute = f_character_formula = f_closed_e4N2 on every class pattern.
inline SuiteResult lemma33(const std::vector<Instance>& instances = small_e4_instances()) {
    SuiteResult res;
    res.name = "lemma33";
    for (const auto& in : instances) {
        const CodeParams cp = derive_params(in.p, in.s, in.m, in.h, in.e);
        const BigInt pi_trace = trace_power(cp.p, cp.s * cp.m);
        const auto one_pass = count_F_all(cp);
        for (const auto& pat : all_patterns(cp.N, cp.e)) {
            const BigInt brute = count_F_brute(cp, pat);
            const BigInt formula = f_character_formula(cp, pat);
            const BigInt closed = f_closed_e4N2(cp, pat, pi_trace);
            res.check(brute == formula && formula == closed && one_pass.at(pat) == brute,
                      "r=" + std::to_string(cp.r) + " h=" + std::to_string(cp.h) + ": brute " + brute.str() +
                          ", formula " + formula.str() + ", closed " + closed.str());
        }
    }
    return res;
}

/// |f(c) - (r-1)(r-e+1)/N^e| <= (e-2)(r-1)sqrt(r)/N on every pattern.
inline SuiteResult weil(const std::vector<Instance>& instances = small_e4_instances()) {
    SuiteResult res;
    res.name = "weil";
    for (const auto& in : instances) {
        const CodeParams cp = derive_params(in.p, in.s, in.m, in.h, in.e);
        for (const auto& [pat, count] : count_F_all(cp)) {
            const auto audit = weil_gap(cp, BigInt(count));
            res.check(audit.holds, "r=" + std::to_string(cp.r) + ": gap " + audit.gap.str() + " exceeds bound");
        }
    }
    return res;
}

/**
 * Direct quadratic periods equal the closed form on the listed fields, the two
 * periods sum to -1, and for every field up to max_r and every N | r-1 with
 * N <= max_N the periods sum to 0 over u and are constant on cosets.
 */
inline SuiteResult periods(std::uint64_t max_r = 1000, std::uint64_t max_N = 4,
                           const std::vector<std::pair<std::uint64_t, unsigned>>& closed_fields = {
                               {3, 2}, {5, 2}, {3, 4}, {13, 2}, {17, 2}}) {
    SuiteResult res;
    res.name = "periods";
    for (auto [p, d] : closed_fields) {
        const FieldCtx f = make_field(p, d);
        const auto eta1 = gaussian_period_direct(f, 2, f.one()).as_rational_integer();
        const auto eta_a = gaussian_period_direct(f, 2, f.gen()).as_rational_integer();
        const auto [c1, ca] = periods_closed_N2(p, 1, d);
        const std::string tag = "GF(" + std::to_string(f.card()) + ")";
        res.check(eta1 && eta_a && *eta1 == c1 && *eta_a == ca, tag + ": direct periods differ from closed form");
        res.check(c1 + ca == -1 && eta1 && eta_a && *eta1 + *eta_a == -1, tag + ": eta_1 + eta_alpha != -1");
    }
    for (auto [p, d] : prime_powers(2, max_r, false)) {
        const FieldCtx f = make_field(p, d);
        const std::uint64_t r = f.card();
        const auto& t = f.tables();
        for (std::uint64_t N = 1; N <= max_N; ++N) {
            if ((r - 1) % N != 0) continue;
            CycInt total = CycInt::zero(p);
            std::vector<CycInt> per_coset(N);
            bool coset_ok = true;
            for (ElemIndex u = 0; u < r; ++u) {
                const CycInt eta = gaussian_period_direct(f, N, f.from_index(u));
                total += eta;
                if (u == 0) continue;
                const std::uint64_t k = t.log[u] % N;
                if (per_coset[k].order() != p) {
                    per_coset[k] = eta;
                } else if (!(per_coset[k] == eta)) {
                    coset_ok = false;
                }
            }
            const std::string tag = "GF(" + std::to_string(r) + "), N=" + std::to_string(N);
            res.check(total.as_rational_integer() == BigInt(0), tag + ": periods do not sum to 0");
            res.check(coset_ok, tag + ": period not constant on a coset");
        }
    }
    return res;
}

}  // namespace wdist::oracles
