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
 * @file code.hpp
 * @brief The cyclic codes C(q,m,h,e) and their weight distributions by enumeration.
 *
 * With r = q^m and alpha a generator of GF(r)^*, the code consists of the
 * words c(a,b)_i = Tr_{r/q}(a g^i + b (beta g)^i), i in [0, n), over all
 * (a,b) in GF(r)^2, where g = alpha^((q-1)/h), beta = alpha^((r-1)/e) and
 * n = h(r-1)/(q-1).
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chars.hpp"
#include "ffield.hpp"
#include "weight_distribution.hpp"

namespace wdist {

/// Optional overrides for the construction of GF(r).
struct FieldOptions {
    std::optional<std::vector<std::uint64_t>> modulus;
    std::optional<std::vector<std::uint64_t>> generator;
};

struct CodeParams {
    std::uint64_t p = 0;
    unsigned s = 0;
    std::uint64_t q = 0;
    unsigned m = 0;
    std::uint64_t h = 0;
    std::uint64_t e = 0;

    std::uint64_t r = 0;
    std::uint64_t n = 0;
    std::uint64_t N = 0;

    FieldCtx field;            ///< GF(r) with its generator alpha
    std::uint64_t g_exp = 0;     ///< g = alpha^g_exp
    std::uint64_t beta_exp = 0;  ///< beta = alpha^beta_exp
    FieldElem g;
    FieldElem beta;
};

/**
 * Derives r, n, N, g and beta for C(p^s, m, h, e) and checks that g has
 * order n, (g beta)^n = 1 and beta^e = 1.
 */
inline CodeParams derive_params(std::uint64_t p, unsigned s, unsigned m, std::uint64_t h, std::uint64_t e,
                                const FieldOptions& opts = {}) {
    if (s == 0 || m == 0) throw ParameterError("s and m must be positive");
    if (h == 0 || e == 0) throw ParameterError("h and e must be positive");
    if (!num::is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
    const auto q = num::checked_pow(p, s);
    if (!q) throw ParameterError("q does not fit in 64 bits");
    if ((*q - 1) % h != 0) throw ParameterError(std::to_string(h) + " does not divide q-1 = " + std::to_string(*q - 1));
    if (h % e != 0) throw ParameterError(std::to_string(e) + " does not divide h = " + std::to_string(h));
    const auto r = num::checked_pow(*q, m);
    if (!r || *r > kMaxFieldCard) throw ParameterError("r = q^m exceeds 2^62");

    CodeParams cp;
    cp.p = p;
    cp.s = s;
    cp.q = *q;
    cp.m = m;
    cp.h = h;
    cp.e = e;
    cp.r = *r;
    cp.n = static_cast<std::uint64_t>(static_cast<unsigned __int128>(h) * (*r - 1) / (*q - 1));
    cp.N = std::gcd(std::uint64_t{m}, e * ((*q - 1) / h));

    std::optional<FieldElem> gen;
    if (opts.generator) {
        auto coeffs = *opts.generator;
        if (coeffs.size() > s * m) throw ParameterError("generator has too many coefficients");
        coeffs.resize(s * m, 0);
        gen = FieldElem{std::move(coeffs)};
    }
    cp.field = FieldCtx::make(p, s * m, opts.modulus, gen);
    cp.g_exp = (*q - 1) / h;
    cp.beta_exp = (*r - 1) / e;
    cp.g = cp.field.pow(cp.field.gen(), cp.g_exp);
    cp.beta = cp.field.pow(cp.field.gen(), cp.beta_exp);

    const auto& f = cp.field;
    if (f.order(cp.g) != cp.n) throw std::logic_error("order of g differs from n");
    if (f.pow(f.mul(cp.g, cp.beta), cp.n) != f.one()) throw std::logic_error("(g beta)^n != 1");
    if (f.pow(cp.beta, e) != f.one()) throw std::logic_error("beta^e != 1");
    return cp;
}

/// Same, with q given as a prime power.
inline CodeParams derive_params_q(std::uint64_t q, unsigned m, std::uint64_t h, std::uint64_t e,
                                  const FieldOptions& opts = {}) {
    const auto pp = num::as_prime_power(q);
    if (!pp) throw ParameterError(std::to_string(q) + " is not a prime power");
    return derive_params(pp->first, pp->second, m, h, e, opts);
}

/// The codeword c(a,b); GF(q) symbols are returned as elements of GF(r).
inline std::vector<FieldElem> codeword(const CodeParams& cp, const FieldElem& a, const FieldElem& b) {
    const auto& f = cp.field;
    const TraceMap tr = f.trace_map(cp.s);
    const FieldElem bg = f.mul(cp.beta, cp.g);
    std::vector<FieldElem> word;
    word.reserve(cp.n);
    FieldElem gi = f.one(), bgi = f.one();
    for (std::uint64_t i = 0; i < cp.n; ++i) {
        word.push_back(tr.apply(f.add(f.mul(a, gi), f.mul(b, bgi))));
        gi = f.mul(gi, cp.g);
        bgi = f.mul(bgi, bg);
    }
    return word;
}

inline std::uint64_t hamming_weight(const FieldCtx& f, const std::vector<FieldElem>& word) {
    return static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [&](const FieldElem& x) { return !f.is_zero(x); }));
}

struct BruteOptions {
    unsigned jobs = 1;
    bool force = false;
    /// Refuse runs with more (a,b) pairs than this unless force is set.
    std::uint64_t max_pairs = std::uint64_t{1} << 32;
};

namespace detail {

/// trace_code[k] = index of Tr_{r/q}(alpha^k), k in [0, r-1).
inline std::vector<std::uint32_t> trace_codes(const CodeParams& cp) {
    const auto& f = cp.field;
    const auto& t = f.tables();
    const TraceMap tr = f.trace_map(cp.s);
    std::vector<std::uint32_t> codes(t.order());
    for (std::uint64_t k = 0; k < t.order(); ++k) {
        codes[k] = static_cast<std::uint32_t>(f.index(tr.apply(f.from_index(t.exp[k]))));
    }
    return codes;
}

/**
 * Adds the weights of c(a,b) for a-slots in [lo, hi) into hist. Slot 0 is
 * a = 0, slot k+1 is a = alpha^k. A position i is zero iff
 * Tr(a g^i) = Tr(-b (beta g)^i); both sides are read from the trace table
 * in the log domain, with -1 = alpha^((r-1)/2) for odd r.
 */
inline void weight_kernel(const CodeParams& cp, const std::vector<std::uint32_t>& codes, std::uint64_t lo,
                          std::uint64_t hi, std::vector<std::uint64_t>& hist) {
    const std::uint64_t ord = cp.r - 1;
    const std::uint64_t n = cp.n;
    const std::uint64_t lg = cp.g_exp % ord;
    const std::uint64_t lbg = (cp.g_exp + cp.beta_exp) % ord;
    const std::uint64_t minus_one = cp.p == 2 ? 0 : ord / 2;

    std::vector<std::uint32_t> row_a(n), row_b(n);
    for (std::uint64_t slot = lo; slot < hi; ++slot) {
        if (slot == 0) {
            std::fill(row_a.begin(), row_a.end(), 0);
        } else {
            std::uint64_t pos = slot - 1;
            for (std::uint64_t i = 0; i < n; ++i) {
                row_a[i] = codes[pos];
                pos += lg;
                if (pos >= ord) pos -= ord;
            }
        }
        // b = 0
        hist[static_cast<std::size_t>(std::count_if(row_a.begin(), row_a.end(), [](std::uint32_t c) { return c != 0; }))]++;
        for (std::uint64_t lb = 0; lb < ord; ++lb) {
            std::uint64_t pos = lb + minus_one;
            if (pos >= ord) pos -= ord;
            std::uint64_t weight = 0;
            for (std::uint64_t i = 0; i < n; ++i) {
                weight += row_a[i] != codes[pos];
                pos += lbg;
                if (pos >= ord) pos -= ord;
            }
            hist[weight]++;
        }
    }
}

}  // namespace detail

/**
 * Exact weight distribution by enumerating all r^2 pairs (a,b). The a-range
 * is split across `jobs` threads; partial histograms are summed, so the
 * result does not depend on the partition.
 *
 * @throws BudgetError when r^2 exceeds the pair budget (unless forced) or
 *         GF(r) is too large for tables.
 */
inline WeightDistribution brute_weight_distribution(const CodeParams& cp, const BruteOptions& opts = {}) {
    const unsigned __int128 pairs = static_cast<unsigned __int128>(cp.r) * cp.r;
    if (!opts.force && pairs > opts.max_pairs) {
        throw BudgetError("brute force needs " + std::to_string(cp.r) + "^2 pairs; over budget (use force)");
    }
    if (cp.r > kMaxTableCard) throw BudgetError("GF(r) too large for enumeration tables");

    const auto codes = detail::trace_codes(cp);
    const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::min<std::uint64_t>(cp.r, 1024))));
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(cp.n + 1, 0));
    const std::uint64_t chunk = (cp.r + jobs - 1) / jobs;
    if (jobs == 1) {
        detail::weight_kernel(cp, codes, 0, cp.r, partial[0]);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t lo = std::min(cp.r, j * chunk);
            const std::uint64_t hi = std::min(cp.r, lo + chunk);
            workers.emplace_back([&, lo, hi, j] { detail::weight_kernel(cp, codes, lo, hi, partial[j]); });
        }
    }
    WeightDistribution dist;
    dist.n = cp.n;
    dist.q = cp.q;
    for (const auto& hist : partial) {
        for (std::uint64_t w = 0; w <= cp.n; ++w) dist.add(w, BigInt(hist[w]));
    }
    return dist;
}

/// Index of the coset of GF(r)^* / C^(N,r) containing a nonzero u.
inline std::uint64_t coset_of(const FieldCtx& f, std::uint64_t N, const FieldElem& u) {
    if (N == 1) return 0;
    if (f.card() <= kMaxTableCard) return f.dlog(u) % N;
    if (N == 2) return f.is_square(u) ? 0 : 1;
    throw BudgetError("coset computation needs discrete logs for this field");
}

/// Gaussian periods for the instance: direct summation when tables fit, else the N = 2 closed form.
inline PeriodTable periods_for(const CodeParams& cp) {
    if (cp.r <= kMaxTableCard) return PeriodTable::direct(cp.field, cp.N);
    if (cp.N == 2 && cp.p % 2 == 1) return PeriodTable::closed_N2(cp.p, cp.s, cp.m);
    throw BudgetError("Gaussian periods unavailable for this instance");
}

/// Modified weight: (hN/(eq)) * sum_{i=1..e} eta_{(a + beta^i b) g^i}.
inline Rational lambda_value(const CodeParams& cp, const PeriodTable& periods, const FieldElem& a, const FieldElem& b) {
    const auto& f = cp.field;
    BigInt sum = 0;
    FieldElem gi = f.one(), bi = f.one();
    for (std::uint64_t i = 1; i <= cp.e; ++i) {
        gi = f.mul(gi, cp.g);
        bi = f.mul(bi, cp.beta);
        const FieldElem u = f.mul(f.add(a, f.mul(bi, b)), gi);
        sum += f.is_zero(u) ? periods.eta0 : periods.by_coset[coset_of(f, cp.N, u)];
    }
    return Rational(BigInt(cp.h * cp.N) * sum, BigInt(cp.e) * cp.q);
}

/// Expected number of zero positions: h(r-1)/(q(q-1)) + lambda(a,b).
inline Rational z_value(const CodeParams& cp, const PeriodTable& periods, const FieldElem& a, const FieldElem& b) {
    return Rational(BigInt(cp.h) * (cp.r - 1), BigInt(cp.q) * (cp.q - 1)) + lambda_value(cp, periods, a, b);
}

inline Rational z_value(const CodeParams& cp, const FieldElem& a, const FieldElem& b) {
    return z_value(cp, periods_for(cp), a, b);
}

inline Rational lambda_value(const CodeParams& cp, const FieldElem& a, const FieldElem& b) {
    return lambda_value(cp, periods_for(cp), a, b);
}

}  // namespace wdist
