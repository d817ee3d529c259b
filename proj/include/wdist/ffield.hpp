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
 * @file ffield.hpp
 * @brief Arithmetic in GF(p^d) over a power basis.
 *
 * A FieldCtx is an immutable, cheaply copyable handle. Elements are plain
 * coefficient vectors (constant term first) and carry no reference to their
 * field; every operation goes through the context. Small fields can
 * additionally materialize exp/log/trace tables on first use.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "number.hpp"

namespace wdist {

struct FieldElem {
    std::vector<std::uint64_t> coeffs;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// Element indices pack coefficients base p, constant term least significant.
using ElemIndex = std::uint64_t;

/// Largest field for which exp/log/trace tables may be built.
inline constexpr std::uint64_t kMaxTableCard = std::uint64_t{1} << 24;

/// Largest supported field cardinality (element indices and exponents fit in 64 bits).
inline constexpr std::uint64_t kMaxFieldCard = std::uint64_t{1} << 62;

/**
 * Discrete exponential/logarithm tables with respect to the context generator,
 * plus the absolute trace of every element. Indices are ElemIndex values.
 */
struct FieldTables {
    std::vector<std::uint32_t> exp;      ///< exp[k] = index of gen^k, k in [0, card-1)
    std::vector<std::uint32_t> log;      ///< log[index], undefined at index 0
    std::vector<std::uint32_t> trace_p;  ///< absolute trace of each element, in [0, p)

    std::uint64_t order() const { return exp.size(); }
};

/// A GF(p)-linear trace map to a subfield, applied coefficient-wise.
class TraceMap {
public:
    TraceMap() = default;
    TraceMap(std::uint64_t p, std::vector<FieldElem> basis_images)
        : p_(p), images_(std::move(basis_images)) {}

    FieldElem apply(const FieldElem& x) const {
        const std::size_t d = images_.size();
        FieldElem out{std::vector<std::uint64_t>(d, 0)};
        for (std::size_t j = 0; j < d; ++j) {
            if (x.coeffs[j] == 0) continue;
            for (std::size_t k = 0; k < d; ++k) {
                out.coeffs[k] = (out.coeffs[k] + x.coeffs[j] * images_[j].coeffs[k]) % p_;
            }
        }
        return out;
    }

private:
    std::uint64_t p_ = 0;
    std::vector<FieldElem> images_;
};

namespace detail {

using Poly = std::vector<std::uint64_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return num::powmod(a, p - 2, p); }

/// Remainder of a modulo a nonzero polynomial b (both over GF(p)).
inline Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
        }
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(prod), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    while (exp != 0) {
        if (exp & 1U) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1U;
    }
    return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's irreducibility test for a monic f of degree d over GF(p).
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    // xp[k] = x^(p^k) mod f
    std::vector<Poly> xp{Poly{0, 1}};
    for (std::size_t k = 1; k <= d; ++k) xp.push_back(poly_powmod(xp.back(), p, f, p));
    Poly diff = xp[d];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t ell : num::prime_divisors(d)) {
        Poly g = xp[d / ell];
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        if (poly_gcd(g, f, p).size() != 1) return false;
    }
    return true;
}

}  // namespace detail

class FieldCtx {
public:
    /// An empty handle; only assignment and destruction are valid on it.
    FieldCtx() = default;

    /**
     * Builds GF(p^d). Without a modulus, the lexicographically smallest monic
     * irreducible polynomial is used (lower coefficients scanned as a base-p
     * number, highest-degree coefficient most significant). Without a
     * generator, the smallest-index element of order p^d - 1 is chosen.
     *
     * @throws ParameterError if p is not prime, d is zero, the modulus is not
     *         monic of degree d or is reducible, or the generator is not primitive.
     */
    static FieldCtx make(std::uint64_t p, unsigned d, std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                         std::optional<FieldElem> generator = std::nullopt) {
        if (d == 0) throw ParameterError("extension degree must be positive");
        if (!num::is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 32)) throw ParameterError("characteristic must be below 2^32");
        const auto card = num::checked_pow(p, d);
        if (!card || *card > kMaxFieldCard) throw ParameterError("field cardinality exceeds 2^62");

        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->d = d;
        impl->card = *card;

        if (modulus) {
            detail::Poly f = *modulus;
            if (f.size() != d + 1 || f.back() != 1) throw ParameterError("modulus must be monic of degree " + std::to_string(d));
            for (auto c : f) {
                if (c >= p) throw ParameterError("modulus coefficient out of range");
            }
            if (!detail::is_irreducible(f, p)) throw ParameterError("modulus is reducible");
            impl->modulus = std::move(f);
        } else {
            impl->modulus = smallest_irreducible(p, d);
        }

        FieldCtx ctx(impl);
        impl->group_primes = num::prime_divisors(impl->card - 1);
        if (generator) {
            if (generator->coeffs.size() != d) throw ParameterError("generator has wrong length");
            for (auto c : generator->coeffs) {
                if (c >= p) throw ParameterError("generator coefficient out of range");
            }
            if (!ctx.is_primitive(*generator)) throw ParameterError("supplied generator is not primitive");
            impl->gen = *generator;
        } else {
            impl->gen = ctx.find_generator();
        }
        return ctx;
    }

    std::uint64_t characteristic() const { return impl_->p; }
    unsigned degree() const { return impl_->d; }
    std::uint64_t card() const { return impl_->card; }
    const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }
    const FieldElem& gen() const { return impl_->gen; }

    FieldElem zero() const { return FieldElem{std::vector<std::uint64_t>(impl_->d, 0)}; }
    FieldElem one() const { return constant(1); }
    FieldElem constant(std::int64_t k) const {
        FieldElem x = zero();
        const auto p = static_cast<std::int64_t>(impl_->p);
        x.coeffs[0] = static_cast<std::uint64_t>(((k % p) + p) % p);
        return x;
    }
    /// The root of the modulus (the element "x" of the power basis).
    FieldElem root() const {
        if (impl_->d == 1) return constant(static_cast<std::int64_t>((impl_->p - impl_->modulus[0]) % impl_->p));
        FieldElem x = zero();
        x.coeffs[1] = 1;
        return x;
    }

    bool is_zero(const FieldElem& x) const {
        for (auto c : x.coeffs) {
            if (c != 0) return false;
        }
        return true;
    }

    FieldElem add(const FieldElem& a, const FieldElem& b) const {
        FieldElem out = a;
        for (unsigned i = 0; i < impl_->d; ++i) {
            out.coeffs[i] += b.coeffs[i];
            if (out.coeffs[i] >= impl_->p) out.coeffs[i] -= impl_->p;
        }
        return out;
    }
    FieldElem neg(const FieldElem& a) const {
        FieldElem out = a;
        for (auto& c : out.coeffs) c = c == 0 ? 0 : impl_->p - c;
        return out;
    }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }
    FieldElem scale(const FieldElem& a, std::uint64_t k) const {
        FieldElem out = a;
        k %= impl_->p;
        for (auto& c : out.coeffs) c = c * k % impl_->p;
        return out;
    }

    FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        const unsigned d = impl_->d;
        const std::uint64_t p = impl_->p;
        const auto& f = impl_->modulus;
        std::vector<std::uint64_t> prod(2 * d - 1, 0);
        for (unsigned i = 0; i < d; ++i) {
            if (a.coeffs[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p;
        }
        for (unsigned k = 2 * d - 2; k >= d; --k) {
            const std::uint64_t top = prod[k];
            if (top == 0) continue;
            for (unsigned i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + p - top * f[i] % p) % p;
        }
        prod.resize(d);
        return FieldElem{std::move(prod)};
    }

    FieldElem pow(FieldElem base, std::uint64_t exp) const {
        FieldElem result = one();
        while (exp != 0) {
            if (exp & 1U) result = mul(result, base);
            base = mul(base, base);
            exp >>= 1U;
        }
        return result;
    }

    FieldElem inv(const FieldElem& a) const {
        if (is_zero(a)) throw ParameterError("zero has no inverse");
        return pow(a, impl_->card - 2);
    }
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(const FieldElem& x) const {
        if (is_zero(x)) throw ParameterError("zero has no multiplicative order");
        std::uint64_t ord = impl_->card - 1;
        for (std::uint64_t ell : impl_->group_primes) {
            while (ord % ell == 0 && pow(x, ord / ell) == one()) ord /= ell;
        }
        return ord;
    }

    bool is_primitive(const FieldElem& x) const {
        if (is_zero(x)) return false;
        for (std::uint64_t ell : impl_->group_primes) {
            if (pow(x, (impl_->card - 1) / ell) == one()) return false;
        }
        return true;
    }

    /// Smallest-index element of order card - 1.
    FieldElem find_generator() const {
        // indices below p are the constants of GF(p), never primitive when d > 1
        const ElemIndex start = impl_->d > 1 ? impl_->p : 1;
        for (ElemIndex k = start; k < impl_->card; ++k) {
            FieldElem x = from_index(k);
            if (is_primitive(x)) return x;
        }
        throw std::logic_error("no generator found");
    }

    /// Sum of x^(p^(sub_degree*i)) over i in [0, d/sub_degree), by repeated Frobenius.
    FieldElem trace_to_subfield(unsigned sub_degree, const FieldElem& x) const {
        if (sub_degree == 0 || impl_->d % sub_degree != 0) {
            throw ParameterError("subfield degree must divide the extension degree");
        }
        const auto sub_card = *num::checked_pow(impl_->p, sub_degree);
        FieldElem acc = zero();
        FieldElem term = x;
        for (unsigned i = 0; i < impl_->d / sub_degree; ++i) {
            acc = add(acc, term);
            term = pow(term, sub_card);
        }
        return acc;
    }

    /// The same trace as a precomputed linear map (images of the power basis).
    TraceMap trace_map(unsigned sub_degree) const {
        std::vector<FieldElem> images;
        images.reserve(impl_->d);
        for (unsigned j = 0; j < impl_->d; ++j) {
            FieldElem basis = zero();
            basis.coeffs[j] = 1;
            images.push_back(trace_to_subfield(sub_degree, basis));
        }
        return TraceMap(impl_->p, std::move(images));
    }

    /// Absolute trace to GF(p) as an integer in [0, p).
    std::uint64_t trace_p(const FieldElem& x) const {
        std::call_once(impl_->abs_trace_once, [this] {
            const TraceMap map = trace_map(1);
            for (unsigned j = 0; j < impl_->d; ++j) {
                FieldElem basis = zero();
                basis.coeffs[j] = 1;
                impl_->abs_trace.push_back(map.apply(basis).coeffs[0]);
            }
        });
        std::uint64_t t = 0;
        for (unsigned j = 0; j < impl_->d; ++j) t = (t + x.coeffs[j] * impl_->abs_trace[j]) % impl_->p;
        return t;
    }

    /// Euler's criterion. Requires odd characteristic and x != 0.
    bool is_square(const FieldElem& x) const {
        if (impl_->p == 2) throw ParameterError("square classes are undefined in characteristic 2");
        if (is_zero(x)) throw ParameterError("square class of zero is undefined");
        return pow(x, (impl_->card - 1) / 2) == one();
    }

    ElemIndex index(const FieldElem& x) const {
        ElemIndex k = 0;
        for (unsigned i = impl_->d; i-- > 0;) k = k * impl_->p + x.coeffs[i];
        return k;
    }

    FieldElem from_index(ElemIndex k) const {
        FieldElem x = zero();
        for (unsigned i = 0; i < impl_->d; ++i) {
            x.coeffs[i] = k % impl_->p;
            k /= impl_->p;
        }
        return x;
    }

    /// Addition directly on packed indices.
    ElemIndex index_add(ElemIndex a, ElemIndex b) const {
        const std::uint64_t p = impl_->p;
        ElemIndex out = 0, place = 1;
        for (unsigned i = 0; i < impl_->d; ++i) {
            std::uint64_t c = a % p + b % p;
            if (c >= p) c -= p;
            out += c * place;
            place *= p;
            a /= p;
            b /= p;
        }
        return out;
    }

    /// Exp/log/trace tables, built once on first use; requires card <= kMaxTableCard.
    const FieldTables& tables() const {
        if (impl_->card > kMaxTableCard) throw BudgetError("field too large for discrete-log tables");
        std::call_once(impl_->tables_once, [this] {
            auto t = std::make_unique<FieldTables>();
            const std::uint64_t ord = impl_->card - 1;
            t->exp.resize(ord);
            t->log.assign(impl_->card, 0);
            t->trace_p.resize(impl_->card);
            FieldElem x = one();
            for (std::uint64_t k = 0; k < ord; ++k) {
                const ElemIndex idx = index(x);
                t->exp[k] = static_cast<std::uint32_t>(idx);
                t->log[idx] = static_cast<std::uint32_t>(k);
                t->trace_p[idx] = static_cast<std::uint32_t>(trace_p(x));
                x = mul(x, impl_->gen);
            }
            t->trace_p[0] = 0;
            impl_->tables = std::move(t);
        });
        return *impl_->tables;
    }

    /// Discrete logarithm to the context generator.
    std::uint64_t dlog(const FieldElem& x) const {
        if (is_zero(x)) throw ParameterError("discrete log of zero is undefined");
        return tables().log[index(x)];
    }

    FieldElem parse_elem(std::string_view text) const {
        auto coeffs = parse_coeffs(text);
        if (coeffs.size() > impl_->d) throw ParameterError("element has more than " + std::to_string(impl_->d) + " coefficients");
        coeffs.resize(impl_->d, 0);
        for (auto c : coeffs) {
            if (c >= impl_->p) throw ParameterError("coefficient out of range");
        }
        return FieldElem{std::move(coeffs)};
    }

    static std::string format_coeffs(const std::vector<std::uint64_t>& coeffs) {
        std::string out;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i != 0) out += ',';
            out += std::to_string(coeffs[i]);
        }
        return out;
    }

    /// Parses "c0,c1,..." (constant term first).
    static std::vector<std::uint64_t> parse_coeffs(std::string_view text) {
        std::vector<std::uint64_t> out;
        std::string item;
        std::istringstream in{std::string(text)};
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                out.push_back(v);
            } catch (const std::exception&) {
                throw ParameterError("bad coefficient '" + item + "'");
            }
        }
        if (out.empty()) throw ParameterError("empty coefficient list");
        return out;
    }

private:
    struct Impl {
        std::uint64_t p = 0;
        unsigned d = 0;
        std::uint64_t card = 0;
        std::vector<std::uint64_t> modulus;
        FieldElem gen;
        std::vector<std::uint64_t> group_primes;

        std::once_flag abs_trace_once;
        std::vector<std::uint64_t> abs_trace;
        std::once_flag tables_once;
        std::unique_ptr<FieldTables> tables;
    };

    explicit FieldCtx(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

    static std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned d) {
        const std::uint64_t lower = *num::checked_pow(p, d);
        for (std::uint64_t k = 0; k < lower; ++k) {
            detail::Poly f(d + 1, 0);
            std::uint64_t rest = k;
            for (unsigned i = 0; i < d; ++i) {
                f[i] = rest % p;
                rest /= p;
            }
            f[d] = 1;
            if (d > 1 && f[0] == 0) continue;
            if (detail::is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    std::shared_ptr<Impl> impl_;
};

inline FieldCtx make_field(std::uint64_t p, unsigned d, std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
    return FieldCtx::make(p, d, std::move(modulus));
}

inline FieldElem find_generator(const FieldCtx& ctx) { return ctx.find_generator(); }

inline FieldElem trace_to_subfield(const FieldCtx& ctx, unsigned sub_degree, const FieldElem& x) {
    return ctx.trace_to_subfield(sub_degree, x);
}

inline bool is_square(const FieldCtx& ctx, const FieldElem& x) { return ctx.is_square(x); }

}  // namespace wdist
