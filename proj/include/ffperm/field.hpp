/*
   Copyright 2026 The ffperm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFPERM_FIELD_HPP
#define FFPERM_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "natural.hpp"

namespace ffperm {

/// An element of F_{p^n}, stored as the integer sum c_0 + c_1 p + ... +
/// c_{n-1} p^{n-1} of its coefficient vector modulo the field's modulus.
/// Index order is the field's enumeration order; equal indices mean equal
/// coefficient vectors.
class Element {
   public:
    constexpr Element() noexcept = default;
    constexpr explicit Element(std::uint32_t index) noexcept : index_(index) {}

    constexpr std::uint32_t index() const noexcept { return index_; }
    constexpr bool is_zero() const noexcept { return index_ == 0; }

    friend constexpr auto operator<=>(Element, Element) noexcept = default;

   private:
    std::uint32_t index_ = 0;
};

struct FieldSpec {
    std::uint32_t p = 2;
    unsigned n = 1;
    std::vector<std::uint32_t> modulus;  // low-degree-first, monic, length n+1

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

// Dense polynomials over F_p, low-degree-first, no trailing zeros.
using PrimePoly = std::vector<std::uint64_t>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
        trim(a);
    }
    return a;
}

inline PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                             std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

inline PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint64_t p) {
    PrimePoly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

}  // namespace detail

/// Rabin's test: f of degree d is irreducible over F_p iff x^{p^d} = x mod f
/// and gcd(f, x^{p^{d/r}} - x) = 1 for every prime r dividing d.
inline bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    require(coeffs.size() >= 2, Errc::InvalidArgument, "polynomial must have degree >= 1");
    require(coeffs.back() == 1, Errc::NonMonic, "leading coefficient must be 1");
    detail::PrimePoly f;
    for (auto c : coeffs) {
        require(c < p, Errc::InvalidArgument, "coefficient out of range");
        f.push_back(c);
    }
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    const detail::PrimePoly x{0, 1};

    // frob[i] = x^{p^i} mod f
    std::vector<detail::PrimePoly> frob{detail::poly_mod(x, f, p)};
    for (unsigned i = 1; i <= d; ++i) frob.push_back(detail::poly_powmod(frob.back(), p, f, p));

    if (detail::poly_sub(frob[d], detail::poly_mod(x, f, p), p).size() != 0) return false;
    for (auto r : prime_divisors(d)) {
        auto g = detail::poly_gcd(f, detail::poly_sub(frob[d / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct FieldOptions {
    std::optional<std::vector<std::uint32_t>> modulus;
    // Pick the (rank+1)-th primitive element in enumeration order.
    unsigned generator_rank = 0;
    // Log/antilog tables are built at construction up to this order.
    std::uint64_t log_table_limit = std::uint64_t{1} << 20;
};

/// The finite field F_{p^n}, fully materialized. Immutable after construction.
class Field {
   public:
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 32;

    static Field build(std::uint32_t p, unsigned n, FieldOptions opts = {}) {
        require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
        require(n >= 1, Errc::InvalidArgument, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) {
            q *= p;
            require(q <= max_order, Errc::FieldTooLarge,
                    std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^32");
        }
        Field f;
        f.spec_.p = p;
        f.spec_.n = n;
        f.q_ = q;
        f.radix_.resize(n);
        for (unsigned i = 0; i < n; ++i) f.radix_[i] = ipow(p, i);

        if (opts.modulus) {
            const auto& m = *opts.modulus;
            require(m.size() == n + 1, Errc::InvalidArgument,
                    "modulus must have exactly n+1 coefficients");
            require(is_irreducible(m, p), Errc::ReducibleModulus, "modulus is reducible over F_p");
            f.spec_.modulus = m;
        } else {
            f.spec_.modulus = smallest_irreducible(p, n);
        }
        f.find_generator(opts.generator_rank);
        if (q <= opts.log_table_limit) f.build_tables();
        f.build_trace_basis();
        return f;
    }

    // Lexicographically smallest monic irreducible of degree n, comparing
    // coefficient vectors low-degree-first.
    static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned n) {
        std::vector<std::uint32_t> c(n + 1, 0);
        c[n] = 1;
        while (true) {
            if ((n == 1 || c[0] != 0) && is_irreducible(c, p)) return c;
            // odometer with c[0] as the most significant digit
            int i = static_cast<int>(n) - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            require(i >= 0, Errc::ReducibleModulus, "no irreducible polynomial found");
            ++c[i];
        }
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    unsigned n() const noexcept { return spec_.n; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t group_order() const noexcept { return q_ - 1; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return spec_.modulus; }
    Element generator() const noexcept { return generator_; }
    bool has_log_table() const noexcept { return !log_.empty(); }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }

    Element element(std::uint64_t index) const {
        require(index < q_, Errc::InvalidArgument, "element index out of range");
        return Element{static_cast<std::uint32_t>(index)};
    }

    auto elements() const {
        return std::views::iota(std::uint64_t{0}, q_) |
               std::views::transform([](std::uint64_t i) { return Element{static_cast<std::uint32_t>(i)}; });
    }

    auto nonzero_elements() const {
        return std::views::iota(std::uint64_t{1}, q_) |
               std::views::transform([](std::uint64_t i) { return Element{static_cast<std::uint32_t>(i)}; });
    }

    // Image of an integer in the prime field.
    Element from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(spec_.p);
        return Element{static_cast<std::uint32_t>(((v % p) + p) % p)};
    }

    Element from_coeffs(std::span<const std::uint32_t> c) const {
        require(c.size() <= spec_.n, Errc::InvalidArgument, "too many coefficients");
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            require(c[i] < spec_.p, Errc::InvalidArgument, "coefficient out of range");
            idx += c[i] * radix_[i];
        }
        return Element{static_cast<std::uint32_t>(idx)};
    }

    std::vector<std::uint32_t> coeffs(Element a) const {
        std::vector<std::uint32_t> c(spec_.n);
        std::uint64_t v = a.index();
        for (unsigned i = 0; i < spec_.n; ++i) {
            c[i] = static_cast<std::uint32_t>(v % spec_.p);
            v /= spec_.p;
        }
        return c;
    }

    Element add(Element a, Element b) const noexcept {
        if (spec_.p == 2) return Element{a.index() ^ b.index()};
        std::uint64_t x = a.index(), y = b.index(), r = 0;
        for (unsigned i = 0; i < spec_.n; ++i) {
            r += ((x % spec_.p + y % spec_.p) % spec_.p) * radix_[i];
            x /= spec_.p;
            y /= spec_.p;
        }
        return Element{static_cast<std::uint32_t>(r)};
    }

    Element neg(Element a) const noexcept {
        if (spec_.p == 2) return a;
        std::uint64_t x = a.index(), r = 0;
        for (unsigned i = 0; i < spec_.n; ++i) {
            r += ((spec_.p - x % spec_.p) % spec_.p) * radix_[i];
            x /= spec_.p;
        }
        return Element{static_cast<std::uint32_t>(r)};
    }

    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

    Element mul(Element a, Element b) const noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        if (!log_.empty()) {
            std::uint64_t e = std::uint64_t{log_[a.index()]} + log_[b.index()];
            if (e >= q_ - 1) e -= q_ - 1;
            return Element{exp_[e]};
        }
        return mul_generic(a, b);
    }

    Element inv(Element a) const {
        require(!a.is_zero(), Errc::DivisionByZero, "inverse of zero");
        if (!log_.empty()) {
            const std::uint32_t l = log_[a.index()];
            return Element{exp_[l == 0 ? 0 : q_ - 1 - l]};
        }
        return inv_generic(a);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    // a^e with 0^0 = 1. For a != 0 the exponent is reduced mod q-1 first.
    Element pow(Element a, const Natural& e) const {
        if (a.is_zero()) return e == 0 ? one() : zero();
        return pow_nonzero(a, reduce(e, q_ - 1));
    }

    Element pow(Element a, std::uint64_t e) const {
        if (a.is_zero()) return e == 0 ? one() : zero();
        return pow_nonzero(a, e % (q_ - 1));
    }

    // x^{p^k}
    Element frobenius(Element x, std::uint64_t k = 1) const {
        if (x.is_zero() || q_ == 2) return x;
        return pow_nonzero(x, powmod(spec_.p, k, q_ - 1));
    }

    bool in_subfield(Element x, unsigned r) const {
        check_divisor(r);
        return frobenius(x, r) == x;
    }

    /// Tr_r^n(x) = x + x^{p^r} + ... + x^{p^{n-r}}.
    Element trace(Element x, unsigned r) const {
        check_divisor(r);
        Element acc = zero();
        Element t = x;
        for (unsigned j = 0; j < spec_.n / r; ++j) {
            acc = add(acc, t);
            t = frobenius(t, r);
        }
        return acc;
    }

    /// N_r^n(x) = x * x^{p^r} * ... * x^{p^{n-r}}.
    Element norm(Element x, unsigned r) const {
        check_divisor(r);
        Element acc = one();
        Element t = x;
        for (unsigned j = 0; j < spec_.n / r; ++j) {
            acc = mul(acc, t);
            t = frobenius(t, r);
        }
        return acc;
    }

    // Absolute trace Tr_1^n(x) as an integer in [0, p), via the F_p-linear
    // functional precomputed on the polynomial basis.
    std::uint32_t abs_trace(Element x) const noexcept {
        std::uint64_t v = x.index(), acc = 0;
        for (unsigned i = 0; i < spec_.n && v; ++i) {
            acc += (v % spec_.p) * trace_basis_[i];
            v /= spec_.p;
        }
        return static_cast<std::uint32_t>(acc % spec_.p);
    }

    std::uint64_t dlog(Element x) const {
        require(!x.is_zero(), Errc::LogOfZero, "discrete log of zero");
        require(!log_.empty(), Errc::TableUnavailable,
                "no log table for q = " + std::to_string(q_));
        return log_[x.index()];
    }

    // generator^e, e taken mod q-1
    Element exp(std::uint64_t e) const {
        e %= q_ - 1;
        if (!exp_.empty()) return Element{exp_[e]};
        return pow_nonzero(generator_, e);
    }

    // Multiplicative order of a nonzero element.
    std::uint64_t order(Element a) const {
        require(!a.is_zero(), Errc::InvalidArgument, "order of zero");
        std::uint64_t ord = q_ - 1;
        for (auto r : prime_divisors(q_ - 1))
            while (ord % r == 0 && pow_nonzero(a, ord / r) == one()) ord /= r;
        return ord;
    }

    std::string coeff_string(Element a) const {
        std::string s = "[";
        auto c = coeffs(a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]";
    }

    // "0" or "w^j" relative to the generator.
    std::string label(Element a) const {
        if (a.is_zero()) return "0";
        return "w^" + std::to_string(dlog(a));
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.spec_ == b.spec_ && a.generator_ == b.generator_ && a.exp_ == b.exp_;
    }

   private:
    Field() = default;

    void check_divisor(unsigned r) const {
        require(r >= 1 && spec_.n % r == 0, Errc::NotADivisor,
                std::to_string(r) + " does not divide " + std::to_string(spec_.n));
    }

    Element pow_nonzero(Element a, std::uint64_t e) const {
        if (!log_.empty()) return Element{exp_[mulmod(log_[a.index()], e, q_ - 1)]};
        Element r = one();
        while (e) {
            if (e & 1) r = mul_generic(r, a);
            a = mul_generic(a, a);
            e >>= 1;
        }
        return r;
    }

    Element mul_generic(Element a, Element b) const {
        const unsigned n = spec_.n;
        const std::uint64_t p = spec_.p;
        auto x = coeffs(a), y = coeffs(b);
        std::vector<std::uint64_t> r(2 * n - 1, 0);
        for (unsigned i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (unsigned j = 0; j < n; ++j) r[i + j] = (r[i + j] + std::uint64_t{x[i]} * y[j]) % p;
        }
        for (unsigned i = 2 * n - 1; i-- > n;) {
            const std::uint64_t c = r[i];
            if (!c) continue;
            for (unsigned j = 0; j <= n; ++j)
                r[i - n + j] = (r[i - n + j] + (p - c) * spec_.modulus[j]) % p;
        }
        std::uint64_t idx = 0;
        for (unsigned i = 0; i < n; ++i) idx += r[i] * radix_[i];
        return Element{static_cast<std::uint32_t>(idx)};
    }

    Element inv_generic(Element a) const {
        // a^{q-2}
        Element r = one();
        std::uint64_t e = q_ - 2;
        while (e) {
            if (e & 1) r = mul_generic(r, a);
            a = mul_generic(a, a);
            e >>= 1;
        }
        return r;
    }

    void find_generator(unsigned rank) {
        const auto divisors = prime_divisors(q_ - 1);
        for (std::uint64_t i = 1; i < q_; ++i) {
            const Element g{static_cast<std::uint32_t>(i)};
            bool primitive = true;
            for (auto r : divisors) {
                if (pow_nonzero(g, (q_ - 1) / r) == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive && rank-- == 0) {
                generator_ = g;
                return;
            }
        }
        fail(Errc::InvalidArgument, "not enough primitive elements for requested rank");
    }

    void build_tables() {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Element t = one();
        for (std::uint64_t e = 0; e < q_ - 1; ++e) {
            exp_[e] = t.index();
            log_[t.index()] = static_cast<std::uint32_t>(e);
            t = mul_generic(t, generator_);
        }
    }

    void build_trace_basis() {
        trace_basis_.resize(spec_.n);
        for (unsigned i = 0; i < spec_.n; ++i) {
            const Element basis{static_cast<std::uint32_t>(radix_[i])};
            trace_basis_[i] = coeffs(trace(basis, 1))[0];
        }
    }

    FieldSpec spec_;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> radix_;
    Element generator_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> trace_basis_;
};

/// An explicit embedding of a separately-constructed subfield F_{p^k} into
/// F_{p^n}, k | n: the small field's variable is sent to the
/// enumeration-smallest root of its modulus in the big field.
class SubfieldEmbedding {
   public:
    SubfieldEmbedding(const Field& small, const Field& big) {
        require(small.p() == big.p(), Errc::InvalidArgument, "fields have different characteristic");
        require(big.n() % small.n() == 0, Errc::NotADivisor, "subfield degree does not divide");
        const auto& m = small.modulus();
        std::optional<Element> root;
        for (Element b : big.elements()) {
            Element acc = big.zero();
            for (std::size_t i = m.size(); i-- > 0;)
                acc = big.add(big.mul(acc, b), big.from_int(m[i]));
            if (acc.is_zero()) {
                root = b;
                break;
            }
        }
        require(root.has_value(), Errc::InvalidArgument, "subfield modulus has no root");
        to_big_.resize(small.q());
        for (Element s : small.elements()) {
            auto c = small.coeffs(s);
            Element acc = big.zero();
            for (std::size_t i = c.size(); i-- > 0;)
                acc = big.add(big.mul(acc, *root), big.from_int(c[i]));
            to_big_[s.index()] = acc;
            to_small_.emplace(acc.index(), s);
        }
    }

    Element to_big(Element s) const { return to_big_.at(s.index()); }

    std::optional<Element> to_small(Element b) const {
        auto it = to_small_.find(b.index());
        if (it == to_small_.end()) return std::nullopt;
        return it->second;
    }

   private:
    std::vector<Element> to_big_;
    std::unordered_map<std::uint32_t, Element> to_small_;
};

}  // namespace ffperm

#endif
