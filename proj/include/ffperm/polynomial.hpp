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

#ifndef FFPERM_POLYNOMIAL_HPP
#define FFPERM_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"
#include "natural.hpp"
#include "parallel.hpp"

namespace ffperm {

struct Term {
    Element coef;
    Natural exp;
};

/// Sparse polynomial over a Field: nonzero coefficients, strictly increasing
/// exponents. Coefficients are only meaningful relative to the field used to
/// build the polynomial.
class SparsePoly {
   public:
    SparsePoly() = default;

    SparsePoly(const Field& f, std::vector<Term> terms) {
        for (auto& t : terms) add_term(f, t.coef, std::move(t.exp));
    }

    static SparsePoly monomial(const Field& f, Element coef, Natural exp) {
        return SparsePoly(f, {Term{coef, std::move(exp)}});
    }

    // Adds c*x^e, merging with an existing x^e term and dropping it on cancellation.
    void add_term(const Field& f, Element c, Natural e) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Natural& v) { return t.exp < v; });
        if (it != terms_.end() && it->exp == e) {
            it->coef = f.add(it->coef, c);
            if (it->coef.is_zero()) terms_.erase(it);
        } else if (!c.is_zero()) {
            terms_.insert(it, Term{c, std::move(e)});
        }
    }

    SparsePoly plus(const Field& f, const SparsePoly& o) const {
        SparsePoly r = *this;
        for (const auto& t : o.terms_) r.add_term(f, t.coef, t.exp);
        return r;
    }

    SparsePoly scaled(const Field& f, Element c) const {
        SparsePoly r;
        for (const auto& t : terms_) r.add_term(f, f.mul(c, t.coef), t.exp);
        return r;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::string to_string(const Field& f) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += f.coeff_string(t.coef) + "*x^" + t.exp.str();
        }
        return s;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coef != b.terms_[i].coef || a.terms_[i].exp != b.terms_[i].exp) return false;
        return true;
    }

   private:
    std::vector<Term> terms_;
};

/// A polynomial with exponents pre-reduced for one field, for repeated evaluation.
class CompiledPoly {
   public:
    CompiledPoly(const Field& f, const SparsePoly& poly) : field_(&f) {
        for (const auto& t : poly.terms()) {
            if (t.exp == 0) {
                constant_ = f.add(constant_, t.coef);
            } else {
                // x^e = x^{e mod (q-1)} on nonzero x; keep a full cycle rather than 0
                std::uint64_t r = reduce(t.exp, f.group_order());
                if (r == 0) r = f.group_order();
                terms_.push_back({t.coef, r});
            }
        }
    }

    Element operator()(Element x) const {
        const Field& f = *field_;
        Element acc = constant_;
        if (x.is_zero()) return acc;
        for (const auto& [c, e] : terms_) acc = f.add(acc, f.mul(c, f.pow(x, e)));
        return acc;
    }

   private:
    struct Reduced {
        Element coef;
        std::uint64_t exp;
    };
    const Field* field_;
    Element constant_;
    std::vector<Reduced> terms_;
};

inline Element eval(const Field& f, const SparsePoly& poly, Element x) { return CompiledPoly(f, poly)(x); }

/// x -> f(x) materialized over the field's enumeration order.
struct MapTable {
    std::vector<std::uint32_t> table;

    std::size_t size() const noexcept { return table.size(); }

    bool is_bijective() const {
        std::vector<char> seen(table.size(), 0);
        for (auto v : table) {
            if (v >= table.size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }
};

template <class Fn>
MapTable tabulate_fn(const Field& f, Fn&& fn, unsigned workers = 1) {
    MapTable m;
    m.table.resize(f.q());
    parallel_for(f.q(), workers, [&](std::size_t i) {
        m.table[i] = fn(Element{static_cast<std::uint32_t>(i)}).index();
    });
    return m;
}

inline MapTable tabulate(const Field& f, const SparsePoly& poly, unsigned workers = 1) {
    CompiledPoly cp(f, poly);
    return tabulate_fn(f, cp, workers);
}

// Dense polynomials over a Field, low-degree-first.
using DensePoly = std::vector<Element>;

inline DensePoly dense_mul(const Field& f, const DensePoly& a, const DensePoly& b) {
    if (a.empty() || b.empty()) return {};
    DensePoly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return r;
}

inline DensePoly dense_pow(const Field& f, const DensePoly& a, unsigned e) {
    DensePoly r{f.one()};
    for (unsigned i = 0; i < e; ++i) r = dense_mul(f, r, a);
    return r;
}

inline SparsePoly to_sparse(const Field& f, const DensePoly& a) {
    SparsePoly r;
    for (std::size_t i = 0; i < a.size(); ++i) r.add_term(f, a[i], Natural(i));
    return r;
}

}  // namespace ffperm

#endif
