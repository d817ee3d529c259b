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

// wdist: weight distributions of the cyclic codes C(q,m,h,e).
//
// Exit codes: 0 success/agreement, 1 disagreement or failed oracle suite,
// 2 invalid parameters, 3 compute budget exceeded.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdist/oracles.hpp"
#include "wdist/report.hpp"

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitParams = 2;
constexpr int kExitBudget = 3;

struct Flags {
    std::uint64_t p = 0;
    unsigned s = 0;
    unsigned m = 0;
    std::uint64_t h = 0;
    std::uint64_t e = 0;
    std::string modulus;
    std::string generator;
    std::string format = "json";
    unsigned jobs = 1;
    bool force = false;

    std::string suite = "all";
    std::uint64_t max_r = 169;
    std::uint64_t max_card = 10000;
};

int run_code(wdist::Method method, const Flags& f) {
    if (f.p == 0 || f.s == 0 || f.m == 0 || f.h == 0 || f.e == 0) {
        std::cerr << "error: --p --s --m --h --e are required\n";
        return kExitParams;
    }
    if (method != wdist::Method::brute && f.e != 4) {
        std::cerr << "error: closed form requires e=4, N=2\n";
        return kExitParams;
    }
    wdist::FieldOptions opts;
    if (!f.modulus.empty()) opts.modulus = wdist::FieldCtx::parse_coeffs(f.modulus);
    if (!f.generator.empty()) opts.generator = wdist::FieldCtx::parse_coeffs(f.generator);
    const wdist::CodeParams cp = wdist::derive_params(f.p, f.s, f.m, f.h, f.e, opts);
    if (method != wdist::Method::brute && !wdist::closed_applicable(cp)) {
        std::cerr << "error: closed form requires e=4, N=2 (this instance has N=" << cp.N << ")\n";
        return kExitParams;
    }
    wdist::BruteOptions bopts;
    bopts.jobs = f.jobs;
    bopts.force = f.force;
    const wdist::RunReport rep = wdist::run(method, cp, bopts);

    if (f.format == "json") {
        std::cout << wdist::to_json(rep).dump(2) << "\n";
    } else {
        std::cout << wdist::to_text(rep);
    }
    if (rep.agreement && !*rep.agreement) {
        std::cerr << "disagreement:\n  closed: " << wdist::format_enumerator(rep.closed->distribution)
                  << "\n  brute:  " << wdist::format_enumerator(*rep.brute) << "\n";
        return kExitDisagree;
    }
    if (rep.brute && !rep.brute->injective()) {
        std::cerr << "warning: more than one pair (a,b) maps to the zero codeword\n";
    }
    return 0;
}

int run_oracles(const Flags& f) {
    namespace o = wdist::oracles;
    std::vector<o::SuiteResult> results;
    const auto start = std::chrono::steady_clock::now();
    const bool all = f.suite == "all";
    if (all || f.suite == "lemma31") results.push_back(o::lemma31(f.max_r));
    if (all || f.suite == "lemma32") results.push_back(o::lemma32(f.max_card));
    if (all || f.suite == "lemma33") results.push_back(o::lemma33());
    if (all || f.suite == "weil") results.push_back(o::weil());
    if (all || f.suite == "periods") results.push_back(o::periods());
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    bool ok = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& r : results) {
        ok = ok && r.ok();
        report.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}});
        if (f.format != "json") {
            std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " passed=" << r.passed << " failed=" << r.failed << "\n";
            for (const auto& msg : r.failures) std::cout << "  " << msg << "\n";
        }
    }
    if (f.format == "json") {
        std::cout << nlohmann::json{{"suites", report}, {"ok", ok}, {"elapsed_ms", ms}}.dump(2) << "\n";
    }
    return ok ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
    Flags f;
    CLI::App app{"Weight distributions of the cyclic codes C(q,m,h,e), by enumeration and in closed form"};
    app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
    app.fallthrough();
    app.require_subcommand(1, 1);

    app.add_option("--p", f.p, "characteristic p (q = p^s)");
    app.add_option("--s", f.s, "q = p^s");
    app.add_option("--m", f.m, "r = q^m");
    app.add_option("--h", f.h, "divisor of q-1");
    app.add_option("--e", f.e, "divisor of h");
    app.add_option("--modulus", f.modulus, "GF(r) modulus, coefficients constant term first, e.g. 2,1,1");
    app.add_option("--generator", f.generator, "generator of GF(r)^*, coefficient list");
    app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", f.jobs, "enumeration threads")->check(CLI::Range(1U, 1024U));
    app.add_flag("--force", f.force, "allow brute force beyond 2^32 pairs");

    auto* closed = app.add_subcommand("closed", "closed-form distribution (e=4, N=2)");
    auto* brute = app.add_subcommand("brute", "distribution by enumerating all (a,b)");
    auto* verify = app.add_subcommand("verify", "run both engines and compare");
    auto* oracles = app.add_subcommand("oracles", "exhaustive identity checks");
    oracles->add_option("--suite", f.suite, "suite to run")
        ->check(CLI::IsMember({"lemma31", "lemma32", "lemma33", "weil", "periods", "all"}));
    oracles->add_option("--max-r", f.max_r, "largest field for the quadratic pair-sum suite");
    oracles->add_option("--max-card", f.max_card, "largest field for the point-count suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParams;
    }

    try {
        if (*closed) return run_code(wdist::Method::closed, f);
        if (*brute) return run_code(wdist::Method::brute, f);
        if (*verify) return run_code(wdist::Method::verify, f);
        if (*oracles) return run_oracles(f);
    } catch (const wdist::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParams;
    } catch (const wdist::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitParams;
}
