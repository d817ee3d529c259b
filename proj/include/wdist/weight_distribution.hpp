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

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "number.hpp"

namespace wdist {

/// Weight -> number of codewords of that weight. Zero counts are never stored.
struct WeightDistribution {
    std::map<std::uint64_t, BigInt> entries;
    std::uint64_t n = 0;   ///< code length
    std::uint64_t q = 0;   ///< alphabet size

    void add(std::uint64_t weight, const BigInt& count) {
        if (count == 0) return;
        auto& slot = entries[weight];
        slot += count;
        if (slot == 0) entries.erase(weight);
    }

    BigInt count(std::uint64_t weight) const {
        auto it = entries.find(weight);
        return it == entries.end() ? BigInt(0) : it->second;
    }

    BigInt total() const {
        BigInt sum = 0;
        for (const auto& [w, c] : entries) sum += c;
        return sum;
    }

    /// Only the all-zero codeword has weight 0, i.e. (a,b) -> codeword is injective.
    bool injective() const { return count(0) == 1; }

    /// Entry-wise equality of the weight maps (metadata is not compared).
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) { return a.entries == b.entries; }
};

/**
 * Renders "1+576x^48+576x^54+...": ascending weights, the weight-0 term as a
 * bare count, unit coefficients omitted for positive weights, and "x" for
 * weight 1. An empty distribution renders as "0".
 */
inline std::string format_enumerator(const WeightDistribution& dist) {
    std::string out;
    for (const auto& [w, c] : dist.entries) {
        if (!out.empty()) out += '+';
        if (w == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str();
        out += 'x';
        if (w != 1) out += '^' + std::to_string(w);
    }
    return out.empty() ? "0" : out;
}

/// Inverse of format_enumerator; also accepts "x^1" and explicit "1x^k".
inline WeightDistribution parse_enumerator(std::string_view text) {
    WeightDistribution dist;
    if (text == "0") return dist;
    std::size_t pos = 0;
    auto fail = [&] { throw ParameterError("malformed enumerator near position " + std::to_string(pos)); };
    auto digits = [&] {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    };
    while (pos < text.size()) {
        const auto coeff = digits();
        BigInt count = coeff.empty() ? BigInt(1) : BigInt(std::string(coeff));
        std::uint64_t weight = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            weight = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                const auto exp = digits();
                if (exp.empty()) fail();
                weight = std::stoull(std::string(exp));
            }
        } else if (coeff.empty()) {
            fail();
        }
        dist.add(weight, count);
        if (pos < text.size()) {
            if (text[pos] != '+') fail();
            ++pos;
            if (pos == text.size()) fail();
        }
    }
    return dist;
}

}  // namespace wdist
