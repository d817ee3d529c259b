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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "closedform.hpp"
#include "code.hpp"
#include "weight_distribution.hpp"

namespace wdist {

enum class Method { brute, closed, verify };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::closed: return "closed";
        case Method::verify: return "verify";
    }
    return "?";
}

/// Outcome of one closed/brute/verify run.
struct RunReport {
    Method method = Method::closed;
    CodeParams params;
    std::optional<ClosedFormResult> closed;  ///< closed route details, when it ran
    std::optional<CaseSelector> selector;    ///< set whenever e = 4, N = 2
    std::optional<std::pair<BigInt, BigInt>> eta;
    WeightDistribution distribution;         ///< brute result for brute/verify, closed result otherwise
    std::optional<WeightDistribution> brute;
    std::optional<bool> agreement;           ///< verify only
    double elapsed_ms = 0;
};

inline bool closed_applicable(const CodeParams& cp) { return cp.e == 4 && cp.N == 2 && cp.p % 2 == 1; }

/// Runs the requested engine(s). Throws ParameterError / BudgetError on invalid or oversized input.
inline RunReport run(Method method, const CodeParams& cp, const BruteOptions& brute_opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.method = method;
    rep.params = cp;
    if (method != Method::brute) {
        rep.closed = closed_form(cp);
        rep.selector = rep.closed->selector;
        rep.eta = std::pair{rep.closed->eta1, rep.closed->eta_alpha};
        rep.distribution = rep.closed->distribution;
    } else if (closed_applicable(cp)) {
        rep.selector = select_case(cp);
        rep.eta = periods_closed_N2(cp.p, cp.s, cp.m);
    }
    if (method != Method::closed) {
        rep.brute = brute_weight_distribution(cp, brute_opts);
        if (method == Method::verify) rep.agreement = *rep.brute == rep.distribution;
        rep.distribution = *rep.brute;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace detail {

/// Exact JSON number, or a decimal string beyond 2^53 - 1.
inline nlohmann::json exact_number(const BigInt& v) {
    static const BigInt limit = (BigInt(1) << 53) - 1;
    if (abs(v) <= limit) return v.convert_to<std::int64_t>();
    return v.str();
}

}  // namespace detail

inline nlohmann::json to_json(const RunReport& rep) {
    using nlohmann::json;
    const auto& cp = rep.params;
    json out;
    out["params"] = {
        {"p", cp.p}, {"s", cp.s}, {"m", cp.m}, {"h", cp.h}, {"e", cp.e}, {"q", cp.q}, {"r", cp.r}, {"n", cp.n},
        {"N", cp.N}, {"modulus", FieldCtx::format_coeffs(cp.field.modulus())},
        {"generator", FieldCtx::format_coeffs(cp.field.gen().coeffs)},
    };
    out["case"] = rep.selector ? json(rep.selector->gb1_square ? "square" : "nonsquare") : json(nullptr);
    out["eta"] = rep.eta ? json::array({detail::exact_number(rep.eta->first), detail::exact_number(rep.eta->second)})
                         : json(nullptr);
    if (rep.closed) {
        if (rep.closed->pi) {
            out["pi"] = {{"re", detail::exact_number(rep.closed->pi->re)}, {"im", detail::exact_number(rep.closed->pi->im)}};
        } else {
            out["pi"] = "i*sqrt(p)";
        }
        out["pi_trace"] = detail::exact_number(rep.closed->pi_trace);
    } else {
        out["pi"] = nullptr;
        out["pi_trace"] = nullptr;
    }
    json dist = json::array();
    for (const auto& [w, c] : rep.distribution.entries) dist.push_back({{"weight", w}, {"count", detail::exact_number(c)}});
    out["distribution"] = std::move(dist);
    out["enumerator"] = format_enumerator(rep.distribution);
    out["method"] = method_name(rep.method);
    if (rep.agreement) out["agreement"] = *rep.agreement;
    out["elapsed_ms"] = rep.elapsed_ms;
    return out;
}

inline std::string to_text(const RunReport& rep) {
    std::string out = format_enumerator(rep.distribution) + "\n";
    if (rep.agreement) out += std::string("agreement=") + (*rep.agreement ? "true" : "false") + "\n";
    return out;
}

}  // namespace wdist
