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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "wdist/charsum.hpp"
#include "wdist/code.hpp"
#include "wdist/curve.hpp"
#include "wdist/oracles.hpp"

using namespace wdist;

namespace {

// Points of y^2 = x^3 + 4x over GF(p), p prime, with plain integer arithmetic.
std::int64_t points_mod_p(std::int64_t p) {
    std::vector<int> roots(static_cast<std::size_t>(p), 0);
    for (std::int64_t y = 0; y < p; ++y) ++roots[static_cast<std::size_t>(y * y % p)];
    std::int64_t total = 1;
    for (std::int64_t x = 0; x < p; ++x) total += roots[static_cast<std::size_t>((x * x % p * x + 4 * x) % p)];
    return total;
}

// Primary Gaussian integers of norm p by enumeration; (1 + 2i) style ties resolved towards im >= 0.
std::vector<GaussInt> primary_of_norm(std::int64_t p) {
    std::vector<GaussInt> out;
    for (std::int64_t a = -p; a <= p; ++a) {
        for (std::int64_t b = -p; b <= p; ++b) {
            if (a * a + b * b != p) continue;
            // a + bi = 1 mod (2+2i): (a - 1 + bi)(2 - 2i)/8 is a Gaussian integer
            const std::int64_t re = 2 * (a - 1) + 2 * b, im = 2 * b - 2 * (a - 1);
            if (re % 8 == 0 && im % 8 == 0) out.push_back(GaussInt{a, b});
        }
    }
    return out;
}

}  // namespace

TEST(GaussInt, Arithmetic) {
    const GaussInt a{1, 4}, b{3, -2};
    EXPECT_EQ(a * b, (GaussInt{11, 10}));
    EXPECT_EQ(a.norm(), 17);
    EXPECT_EQ(a.conj(), (GaussInt{1, -4}));
    EXPECT_EQ(exact_div(a * b, b), a);
    EXPECT_FALSE(exact_div(a, GaussInt{2, 0}).has_value());
    EXPECT_EQ(a.to_string(), "1+4i");
    EXPECT_EQ(b.to_string(), "3-2i");
}

TEST(PrimaryPi, KnownPrimes) {
    EXPECT_EQ(primary_pi(17), (GaussInt{1, 4}));
    EXPECT_EQ(primary_pi(13), (GaussInt{3, 2}));
    EXPECT_EQ(primary_pi(5), (GaussInt{-1, 2}));
    EXPECT_THROW(primary_pi(7), ParameterError);
    EXPECT_THROW(primary_pi(21), ParameterError);
}

TEST(PrimaryPi, AgreesWithEnumeration) {
    for (std::int64_t p = 5; p < 2000; p += 4) {
        if (!num::is_prime(static_cast<std::uint64_t>(p))) continue;
        const auto cands = primary_of_norm(p);
        ASSERT_EQ(cands.size(), 2U) << p;  // pi and its conjugate
        const GaussInt pi = primary_pi(static_cast<std::uint64_t>(p));
        EXPECT_TRUE(is_primary(pi));
        EXPECT_EQ(pi.norm(), p);
        EXPECT_GE(pi.im, 0);
        EXPECT_TRUE(pi == cands[0] || pi == cands[1]);
    }
}

TEST(TracePower, Values) {
    EXPECT_EQ(trace_power(17, 1), 2);
    EXPECT_EQ(trace_power(17, 2), -30);  // (1+4i)^2 + (1-4i)^2
    EXPECT_EQ(trace_power(13, 2), 10);   // (3+2i)^2 + (3-2i)^2
    EXPECT_EQ(trace_power(3, 4), 18);
    EXPECT_EQ(trace_power(3, 2), -6);
    EXPECT_EQ(trace_power(7, 3), 0);
    EXPECT_EQ(trace_power(5, 0), 2);
    EXPECT_THROW(trace_power(2, 3), ParameterError);
}

TEST(TracePower, MatchesGaussianPowers) {
    for (std::uint64_t p : {5, 13, 17, 29, 37, 41, 101}) {
        const GaussInt pi = primary_pi(p);
        GaussInt pw{1, 0};
        for (unsigned n = 1; n <= 12; ++n) {
            pw = pw * pi;
            EXPECT_EQ(trace_power(p, n), pw.re * 2) << p << "^" << n;
            // conjugate choice gives the same trace
            GaussInt cw{1, 0};
            for (unsigned k = 0; k < n; ++k) cw = cw * pi.conj();
            EXPECT_EQ(pw.re + cw.re, trace_power(p, n));
        }
    }
}

TEST(PointCount, PrimeFields) {
    EXPECT_EQ(count_points_closed(17, 1), 16);
    EXPECT_EQ(count_points_closed(5, 1), 8);
    EXPECT_EQ(count_points_closed(3, 1), 4);
    for (std::int64_t p = 3; p < 3000; p += 2) {
        if (!num::is_prime(static_cast<std::uint64_t>(p))) continue;
        EXPECT_EQ(count_points_closed(static_cast<std::uint64_t>(p), 1), points_mod_p(p)) << p;
    }
}

TEST(PointCount, BruteOverExtensions) {
    EXPECT_EQ(count_points_brute(make_field(5, 1)), 8);
    EXPECT_EQ(count_points_brute(make_field(3, 1)), 4);
    for (auto [p, d] : oracles::prime_powers(3, 2500, true)) {
        EXPECT_EQ(count_points_brute(make_field(p, d)), count_points_closed(p, d)) << p << "^" << d;
    }
    EXPECT_THROW(count_points_brute(make_field(2, 3)), ParameterError);
}

TEST(PointCount, HasseBound) {
    for (auto [p, d] : oracles::prime_powers(3, 100000, true)) {
        const BigInt t = trace_power(p, d);
        EXPECT_LE(t * t, 4 * num::big_pow(BigInt(p), d));
    }
}

TEST(PointCount, ShiftedCubicFromGammas) {
    // y^2 = (x + gamma_1)(x + gamma_2)(x + gamma_3) is isomorphic to y^2 = x^3 + 4x.
    for (auto [p, s, h] : std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>>{
             {5, 1, 4}, {3, 2, 4}, {13, 1, 4}, {17, 1, 4}, {3, 2, 8}}) {
        const CodeParams cp = derive_params(p, s, 2, h, 4);
        const auto g = gamma_constants(cp);
        const auto curve = CubicCurve::with_roots(g[0], g[1], g[2]);
        const BigInt affine = count_points_brute(cp.field, curve, false);
        EXPECT_EQ(affine, BigInt(cp.r) - trace_power(p, 2 * s)) << "r=" << cp.r;
        EXPECT_EQ(count_points_brute(cp.field, curve), count_points_brute(cp.field));
    }
    // GF(81): 81 - 18
    const CodeParams cp = derive_params(3, 2, 2, 4, 4);
    const auto g = gamma_constants(cp);
    EXPECT_EQ(count_points_brute(cp.field, CubicCurve::with_roots(g[0], g[1], g[2]), false), 63);
}

TEST(PointCount, OracleSuite) {
    const auto res = oracles::lemma32(2000);
    EXPECT_TRUE(res.ok());
}
