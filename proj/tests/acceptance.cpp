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


// Runs the ten acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wdist/oracles.hpp"
#include "wdist/report.hpp"
#include "wdist/wdist.hpp"

using namespace wdist;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

const char* const kExample1 = "1+576x^48+576x^54+5472x^64+18432x^66+34560x^68+18432x^70+5472x^72";
const char* const kExample2 = "1+336x^38+336x^40+1680x^48+7392x^50+9744x^52+7392x^54+1680x^56";
const char* const kExample3 = "1+160x^24+160x^30+240x^32+1920x^34+1920x^36+1920x^38+240x^40";
const char* const kExample4 = "1+160x^52+160x^56+320x^64+1920x^68+1760x^72+1920x^76+320x^80";

Outcome reproduce(std::uint64_t p, unsigned s, std::uint64_t h, const char* want) {
    const CodeParams cp = derive_params(p, s, 2, h, 4);
    const RunReport rep = run(Method::verify, cp, {.jobs = 1});
    const std::string closed = format_enumerator(rep.closed->distribution);
    const std::string brute = format_enumerator(*rep.brute);
    const bool total = rep.brute->total() == BigInt(cp.r) * cp.r;
    Outcome out{closed == want && brute == want && total, ""};
    if (!out.ok) out.detail = "closed " + closed + " brute " + brute;
    return out;
}

std::string suite_detail(const oracles::SuiteResult& r) {
    std::string d = std::to_string(r.passed) + " checks";
    if (!r.failures.empty()) d += "; first failure: " + r.failures.front();
    return d;
}

Outcome example1() { return reproduce(17, 1, 4, kExample1); }

Outcome examples234() {
    Outcome out{true, ""};
    const struct {
        std::uint64_t p;
        unsigned s;
        std::uint64_t h;
        const char* want;
    } cases[] = {{13, 1, 4, kExample2}, {3, 2, 4, kExample3}, {3, 2, 8, kExample4}};
    for (const auto& c : cases) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome one = reproduce(c.p, c.s, c.h, c.want);
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!one.ok || sec >= 10) {
            out.ok = false;
            out.detail += "q=" + std::to_string(c.p) + "^" + std::to_string(c.s) + " h=" + std::to_string(c.h) + " " +
                          one.detail + " (" + std::to_string(sec) + " s); ";
        }
    }
    return out;
}

Outcome small_oracle() {
    const CodeParams cp = derive_params(5, 1, 2, 4, 4);
    const auto closed = closed_weight_distribution(cp);
    const auto brute = brute_weight_distribution(cp);
    return {closed == brute && brute.total() == 625 && cp.n == 24, format_enumerator(brute)};
}

Outcome lemma31() {
    const auto r = oracles::lemma31(169, 9);
    return {r.ok(), suite_detail(r)};
}

Outcome lemma32() {
    const auto r = oracles::lemma32(10000);
    const GaussInt pi17 = primary_pi(17), pi13 = primary_pi(13);
    const bool pi_ok = (pi17 == GaussInt{1, 4} || pi17 == GaussInt{1, -4}) &&
                       (pi13 == GaussInt{3, 2} || pi13 == GaussInt{3, -2});
    return {r.ok() && pi_ok, suite_detail(r) + "; pi(17)=" + pi17.to_string() + " pi(13)=" + pi13.to_string()};
}

Outcome lemma33() {
    const auto r = oracles::lemma33();
    return {r.ok() && r.passed == 48, suite_detail(r)};
}

Outcome weil() {
    const auto r = oracles::weil();
    return {r.ok() && r.passed == 48, suite_detail(r)};
}

Outcome periods() {
    const auto r = oracles::periods(1000, 4, {{3, 2}, {5, 2}, {3, 4}, {13, 2}, {17, 2}});
    return {r.ok(), suite_detail(r)};
}

Outcome weight_identity() {
    std::uint64_t checked = 0, bad = 0;
    for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{5, 1}, {3, 2}}) {
        const CodeParams cp = derive_params(p, s, 2, 4, 4);
        const PeriodTable periods = periods_for(cp);
        for (ElemIndex a = 0; a < cp.r; ++a) {
            for (ElemIndex b = 0; b < cp.r; ++b) {
                const FieldElem fa = cp.field.from_index(a), fb = cp.field.from_index(b);
                const auto w = hamming_weight(cp.field, codeword(cp, fa, fb));
                bad += Rational(BigInt(cp.n)) - z_value(cp, periods, fa, fb) != Rational(BigInt(w));
                ++checked;
            }
        }
    }
    return {bad == 0 && checked == 625 + 6561, std::to_string(checked) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome generator_invariance() {
    const FieldCtx f = make_field(5, 2);
    std::vector<WeightDistribution> dists;
    std::vector<bool> cases;
    std::string detail;
    for (std::uint64_t k : {1, 5, 7}) {
        FieldOptions opts;
        opts.generator = f.pow(f.gen(), k).coeffs;
        const CodeParams cp = derive_params(5, 1, 2, 4, 4, opts);
        const auto brute = brute_weight_distribution(cp);
        const auto closed = closed_weight_distribution(cp);
        if (!(brute == closed)) return {false, "generator gen^" + std::to_string(k) + ": closed and brute differ"};
        dists.push_back(brute);
        cases.push_back(select_case(cp).gb1_square);
        detail += "gen^" + std::to_string(k) + "=" + FieldCtx::format_coeffs(*opts.generator) + " ";
    }
    const bool same = dists[0] == dists[1] && dists[1] == dists[2] && cases[0] == cases[1] && cases[1] == cases[2];
    return {same, detail + (cases[0] ? "square" : "nonsquare")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_sec;  // 0: no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Example 1 reproduction, both engines", 10, example1},
        {2, "Examples 2-4 reproduction, both engines", 30, examples234},
        {3, "small-instance oracle (5,1,2,4,4)", 1, small_oracle},
        {4, "quadratic pair sums equal -1, 9 <= r <= 169", 30, lemma31},
        {5, "curve point counts, odd prime powers <= 10^4", 60, lemma32},
        {6, "pattern counts: brute = character formula = closed", 30, lemma33},
        {7, "Weil-bound audit, r in {25, 81}", 0, weil},
        {8, "Gaussian periods: direct = closed, sums", 0, periods},
        {9, "Hamming weight = n - Z(a,b) for all pairs", 0, weight_identity},
        {10, "generator invariance on GF(25)", 0, generator_invariance},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_sec > 0 && sec >= c.limit_sec) {
            out.ok = false;
            out.detail += "; exceeded " + std::to_string(c.limit_sec) + " s";
        }
        failed += !out.ok;
        std::printf("%s %2d %s (%.3f s) %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, sec, out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
