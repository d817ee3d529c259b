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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wdist/code.hpp"

using namespace wdist;

namespace {

// Weight distribution from explicit codewords; the slow reference for the log-domain kernel.
WeightDistribution naive_distribution(const CodeParams& cp) {
    WeightDistribution dist;
    dist.n = cp.n;
    dist.q = cp.q;
    for (ElemIndex a = 0; a < cp.r; ++a) {
        for (ElemIndex b = 0; b < cp.r; ++b) {
            dist.add(hamming_weight(cp.field, codeword(cp, cp.field.from_index(a), cp.field.from_index(b))), 1);
        }
    }
    return dist;
}

struct Inst {
    std::uint64_t p;
    unsigned s, m;
    std::uint64_t h, e;
};

}  // namespace

TEST(DeriveParams, Examples) {
    const CodeParams a = derive_params(17, 1, 2, 4, 4);
    EXPECT_EQ(a.q, 17U);
    EXPECT_EQ(a.r, 289U);
    EXPECT_EQ(a.n, 72U);
    EXPECT_EQ(a.N, 2U);

    const CodeParams b = derive_params(3, 2, 2, 8, 4);
    EXPECT_EQ(b.q, 9U);
    EXPECT_EQ(b.r, 81U);
    EXPECT_EQ(b.n, 80U);
    EXPECT_EQ(b.N, 2U);

    const CodeParams c = derive_params_q(13, 2, 4, 4);
    EXPECT_EQ(c.n, 56U);
    EXPECT_EQ(c.field.order(c.g), c.n);
    EXPECT_EQ(c.field.order(c.beta), 4U);

    EXPECT_EQ(derive_params(2, 2, 2, 3, 3).N, 1U);
    EXPECT_EQ(derive_params(2, 2, 3, 3, 3).N, 3U);
}

TEST(DeriveParams, Errors) {
    EXPECT_THROW(derive_params(17, 1, 2, 3, 4), ParameterError);  // 3 does not divide 16
    EXPECT_THROW(derive_params(17, 1, 2, 4, 3), ParameterError);  // 3 does not divide 4
    EXPECT_THROW(derive_params(15, 1, 2, 2, 2), ParameterError);
    EXPECT_THROW(derive_params(17, 0, 2, 4, 4), ParameterError);
    EXPECT_THROW(derive_params(17, 1, 0, 4, 4), ParameterError);
    EXPECT_THROW(derive_params(17, 1, 2, 0, 4), ParameterError);
    EXPECT_THROW(derive_params_q(6, 2, 1, 1), ParameterError);
    EXPECT_THROW(derive_params(2, 1, 80, 1, 1), ParameterError);
    FieldOptions bad_gen;
    bad_gen.generator = std::vector<std::uint64_t>{1};
    EXPECT_THROW(derive_params(5, 1, 2, 4, 4, bad_gen), ParameterError);
}

TEST(Codeword, LinearOverGFq) {
    const CodeParams cp = derive_params(3, 2, 2, 4, 4);
    const auto& f = cp.field;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<ElemIndex> pick(0, cp.r - 1);
    const auto zero = codeword(cp, f.zero(), f.zero());
    EXPECT_EQ(zero.size(), cp.n);
    EXPECT_EQ(hamming_weight(f, zero), 0U);
    // lambda in GF(9): the elements fixed by x -> x^9
    std::vector<FieldElem> sub;
    for (ElemIndex k = 0; k < cp.r; ++k) {
        if (f.pow(f.from_index(k), cp.q) == f.from_index(k)) sub.push_back(f.from_index(k));
    }
    ASSERT_EQ(sub.size(), cp.q);
    for (int it = 0; it < 50; ++it) {
        const FieldElem a1 = f.from_index(pick(rng)), b1 = f.from_index(pick(rng));
        const FieldElem a2 = f.from_index(pick(rng)), b2 = f.from_index(pick(rng));
        const FieldElem lam = sub[static_cast<std::size_t>(it) % sub.size()];
        const auto w1 = codeword(cp, a1, b1), w2 = codeword(cp, a2, b2);
        const auto sum = codeword(cp, f.add(f.mul(lam, a1), a2), f.add(f.mul(lam, b1), b2));
        for (std::size_t i = 0; i < cp.n; ++i) {
            EXPECT_EQ(sum[i], f.add(f.mul(lam, w1[i]), w2[i]));
            EXPECT_EQ(f.pow(w1[i], cp.q), w1[i]);  // entries lie in GF(q)
        }
    }
}

TEST(BruteForce, MatchesExplicitCodewords) {
    for (const Inst& in : std::vector<Inst>{{5, 1, 2, 4, 4}, {3, 2, 2, 4, 4}, {7, 1, 2, 3, 3}, {2, 2, 2, 3, 3},
                                            {5, 1, 3, 4, 2}, {3, 1, 4, 2, 2}}) {
        const CodeParams cp = derive_params(in.p, in.s, in.m, in.h, in.e);
        const auto dist = brute_weight_distribution(cp);
        EXPECT_EQ(dist, naive_distribution(cp)) << "r=" << cp.r;
        EXPECT_EQ(dist.total(), BigInt(cp.r) * cp.r);
    }
}

TEST(BruteForce, Example3) {
    const CodeParams cp = derive_params(3, 2, 2, 4, 4);
    EXPECT_EQ(format_enumerator(brute_weight_distribution(cp)),
              "1+160x^24+160x^30+240x^32+1920x^34+1920x^36+1920x^38+240x^40");
}

TEST(BruteForce, ThreadCountDoesNotChangeResult) {
    const CodeParams cp = derive_params(13, 1, 2, 4, 4);
    const auto one = brute_weight_distribution(cp, {.jobs = 1});
    for (unsigned jobs : {2U, 3U, 8U, 200U}) EXPECT_EQ(brute_weight_distribution(cp, {.jobs = jobs}), one);
}

TEST(BruteForce, GeneratorInvariance) {
    // Different generators give different (g, beta) but the same set of codes up to equivalence.
    for (const Inst& in : std::vector<Inst>{{5, 1, 2, 4, 4}, {3, 2, 2, 4, 4}, {3, 2, 2, 8, 4}}) {
        const CodeParams base = derive_params(in.p, in.s, in.m, in.h, in.e);
        const auto want = brute_weight_distribution(base);
        const auto& f = base.field;
        int tried = 0;
        for (std::uint64_t k = 1; k < base.r - 1 && tried < 4; ++k) {
            if (std::gcd(k, base.r - 1) != 1) continue;
            FieldOptions opts;
            opts.generator = f.pow(f.gen(), k).coeffs;
            const CodeParams other = derive_params(in.p, in.s, in.m, in.h, in.e, opts);
            EXPECT_EQ(brute_weight_distribution(other), want) << "r=" << base.r << " k=" << k;
            ++tried;
        }
    }
}

TEST(BruteForce, Budget) {
    const CodeParams cp = derive_params(3, 2, 2, 4, 4);
    EXPECT_THROW(brute_weight_distribution(cp, {.max_pairs = 1000}), BudgetError);
    EXPECT_NO_THROW(brute_weight_distribution(cp, {.force = true, .max_pairs = 1000}));
}

TEST(WeightIdentity, AllPairsSmallInstances) {
    // Hamming weight = n - Z(a,b) for every (a,b).
    for (const Inst& in : std::vector<Inst>{{5, 1, 2, 4, 4}, {3, 2, 2, 4, 4}, {3, 2, 2, 8, 4}, {7, 1, 2, 3, 3},
                                            {5, 1, 2, 2, 2}, {2, 2, 2, 3, 3}, {3, 1, 4, 2, 2}}) {
        const CodeParams cp = derive_params(in.p, in.s, in.m, in.h, in.e);
        const PeriodTable periods = periods_for(cp);
        std::uint64_t bad = 0;
        for (ElemIndex a = 0; a < cp.r; ++a) {
            for (ElemIndex b = 0; b < cp.r; ++b) {
                const FieldElem fa = cp.field.from_index(a), fb = cp.field.from_index(b);
                const auto w = hamming_weight(cp.field, codeword(cp, fa, fb));
                bad += Rational(BigInt(cp.n)) - z_value(cp, periods, fa, fb) != Rational(BigInt(w));
            }
        }
        EXPECT_EQ(bad, 0U) << "r=" << cp.r << " h=" << cp.h << " e=" << cp.e;
    }
}

TEST(WeightIdentity, ZeroPairAndDegenerateLines) {
    const CodeParams cp = derive_params(17, 1, 2, 4, 4);
    const auto& f = cp.field;
    const PeriodTable periods = periods_for(cp);
    EXPECT_EQ(lambda_value(cp, periods, f.zero(), f.zero()), Rational(BigInt(cp.h) * (cp.r - 1), BigInt(cp.q)));
    EXPECT_EQ(z_value(cp, f.zero(), f.zero()), Rational(BigInt(cp.n)));
    // On a = -beta^t b one term uses eta_0 = (r-1)/N; check against an explicit sum.
    const FieldElem b = f.gen();
    for (std::uint64_t t = 1; t <= cp.e; ++t) {
        const FieldElem a = f.neg(f.mul(f.pow(cp.beta, t), b));
        BigInt sum = BigInt((cp.r - 1) / cp.N);
        for (std::uint64_t i = 1; i <= cp.e; ++i) {
            if (i == t) continue;
            const FieldElem u = f.mul(f.add(a, f.mul(f.pow(cp.beta, i), b)), f.pow(cp.g, i));
            sum += f.is_square(u) ? BigInt(-9) : BigInt(8);
        }
        EXPECT_EQ(lambda_value(cp, a, b), Rational(BigInt(cp.h * cp.N) * sum, BigInt(cp.e * cp.q)));
        EXPECT_EQ(Rational(BigInt(cp.n)) - z_value(cp, a, b),
                  Rational(BigInt(hamming_weight(f, codeword(cp, a, b)))));
    }
}
