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

#ifndef FFPERM_PERMPOLY_HPP
#define FFPERM_PERMPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "character.hpp"
#include "field.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace ffperm {

inline bool is_permutation(const Field& f, const SparsePoly& poly, unsigned workers = 1) {
    return tabulate(f, poly, workers).is_bijective();
}

inline SparsePoly plus_x(const Field& f, const SparsePoly& poly) {
    SparsePoly r = poly;
    r.add_term(f, f.one(), Natural(1));
    return r;
}

/// f is a complete permutation polynomial iff f and f(x) + x both permute.
inline bool is_cpp(const Field& f, const SparsePoly& poly, unsigned workers = 1) {
    return is_permutation(f, poly, workers) && is_permutation(f, plus_x(f, poly), workers);
}

inline std::uint64_t gcd_with_group_order(const Field& f, const Natural& d) {
    return std::gcd(reduce(d, f.group_order()), f.group_order());
}

/// Whether a^{-1} x^d is a CPP. The second permutation test is run on both
/// a^{-1}x^d + x and its scalar multiple x^d + ax; a disagreement is a bug.
inline bool is_cpp_exponent(const Field& f, const Natural& d, Element a, unsigned workers = 1) {
    require(!a.is_zero(), Errc::ZeroCoefficient, "CPP coefficient must be nonzero");
    if (gcd_with_group_order(f, d) != 1) return false;
    const SparsePoly scaled{f, {Term{f.inv(a), d}, Term{f.one(), Natural(1)}}};
    const SparsePoly monic{f, {Term{f.one(), d}, Term{a, Natural(1)}}};
    const bool lhs = is_permutation(f, scaled, workers);
    const bool rhs = is_permutation(f, monic, workers);
    require(lhs == rhs, Errc::OracleMismatch, "a^{-1}x^d + x and x^d + ax disagree on bijectivity");
    return lhs;
}

inline constexpr std::uint64_t max_charsum_check_order = std::uint64_t{1} << 16;

/// Character-sum permutation criterion: f permutes F_q iff
/// sum_x chi(alpha f(x)) = 0 for every alpha != 0. Independent of
/// is_permutation: it never inspects collisions directly.
inline bool pp_via_charsum(const Field& f, const SparsePoly& poly, unsigned workers = 1) {
    require(f.q() <= max_charsum_check_order, Errc::FieldTooLargeForCharsumCheck,
            "character-sum criterion limited to q <= 2^16");
    CompiledPoly cp(f, poly);
    std::map<std::uint32_t, std::int64_t> multiplicity;
    for (Element x : f.elements()) ++multiplicity[cp(x).index()];
    std::vector<std::pair<Element, std::int64_t>> values;
    for (auto [v, m] : multiplicity) values.emplace_back(Element{v}, m);

    auto vanishes = parallel_map<char>(f.q() - 1, workers, [&](std::size_t i) -> char {
        const Element alpha{static_cast<std::uint32_t>(i + 1)};
        std::vector<std::int64_t> counts(f.p(), 0);
        for (auto [y, m] : values) counts[f.abs_trace(f.mul(alpha, y))] += m;
        return CycInt::from_exponent_counts(f.p(), counts).is_zero();
    });
    return std::all_of(vanishes.begin(), vanishes.end(), [](char v) { return v != 0; });
}

/// Finite maps for the AGW criterion. Sets are index ranges:
/// A = [0, f.size()), S = [0, s_size), S-bar = [0, sbar_size).
struct AgwMaps {
    std::vector<std::uint32_t> f;       // A -> A
    std::vector<std::uint32_t> lam;     // A -> S
    std::vector<std::uint32_t> lambar;  // A -> S-bar
    std::vector<std::uint32_t> h;       // S -> S-bar
    std::size_t s_size = 0;
    std::size_t sbar_size = 0;
};

/// Checks both sides of the AGW equivalence on explicit tables: (i) f is
/// bijective; (ii) h is bijective and f is injective on every fiber of lam.
/// Throws if the maps do not satisfy the criterion's hypotheses.
inline VerificationReport agw_verify(const AgwMaps& m) {
    Stopwatch sw;
    const std::size_t a_size = m.f.size();
    require(m.s_size == m.sbar_size, Errc::SizeMismatch, "|S| != |S-bar|");
    require(m.lam.size() == a_size && m.lambar.size() == a_size && m.h.size() == m.s_size,
            Errc::SizeMismatch, "map tables have inconsistent lengths");
    for (auto v : m.f) require(v < a_size, Errc::SizeMismatch, "f leaves A");
    for (auto v : m.lam) require(v < m.s_size, Errc::SizeMismatch, "lambda leaves S");
    for (auto v : m.lambar) require(v < m.sbar_size, Errc::SizeMismatch, "lambda-bar leaves S-bar");
    for (auto v : m.h) require(v < m.sbar_size, Errc::SizeMismatch, "h leaves S-bar");

    auto surjective = [](const std::vector<std::uint32_t>& t, std::size_t n) {
        std::vector<char> hit(n, 0);
        for (auto v : t) hit[v] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    };
    require(surjective(m.lam, m.s_size), Errc::NotSurjective, "lambda is not surjective");
    require(surjective(m.lambar, m.sbar_size), Errc::NotSurjective, "lambda-bar is not surjective");
    for (std::size_t x = 0; x < a_size; ++x)
        require(m.lambar[m.f[x]] == m.h[m.lam[x]], Errc::DiagramDoesNotCommute,
                "lambda-bar(f(x)) != h(lambda(x)) at x = " + std::to_string(x));

    auto injective = [](const std::vector<std::uint32_t>& t, std::size_t range) {
        std::vector<char> seen(range, 0);
        for (auto v : t) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    };
    const bool f_bijective = injective(m.f, a_size);
    const bool h_bijective = injective(m.h, m.sbar_size);

    // f injective on each fiber lam^{-1}(s): no two x with equal lam share f(x)
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> seen;
    bool fibers_injective = true;
    for (std::size_t x = 0; x < a_size && fibers_injective; ++x)
        fibers_injective = seen.emplace(std::make_pair(m.lam[x], m.f[x]), x).second;

    VerificationReport rep;
    rep.name = "agw";
    rep.params = {{"A", a_size}, {"S", m.s_size}};
    rep.details = {{"f_bijective", f_bijective},
                   {"h_bijective", h_bijective},
                   {"fibers_injective", fibers_injective}};
    rep.record(f_bijective == (h_bijective && fibers_injective), "AGW sides disagree");
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

/// Builds AGW tables from element-valued maps on a domain A of field
/// elements. S and S-bar are taken to be the images of lam and lambar.
template <class F, class L, class LB, class H>
AgwMaps agw_maps_from_functions(const std::vector<Element>& domain, F&& f, L&& lam, LB&& lambar, H&& h) {
    auto index_of = [](const std::vector<Element>& set) {
        std::map<Element, std::uint32_t> idx;
        for (std::size_t i = 0; i < set.size(); ++i) idx.emplace(set[i], static_cast<std::uint32_t>(i));
        return idx;
    };
    auto image = [&](auto&& fn) {
        std::vector<Element> img;
        for (Element x : domain) img.push_back(fn(x));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    };
    const auto s_set = image(lam);
    const auto sbar_set = image(lambar);
    const auto a_idx = index_of(domain);
    const auto s_idx = index_of(s_set);
    const auto sbar_idx = index_of(sbar_set);

    AgwMaps m;
    m.s_size = s_set.size();
    m.sbar_size = sbar_set.size();
    for (Element x : domain) {
        auto fx = a_idx.find(f(x));
        require(fx != a_idx.end(), Errc::SizeMismatch, "f does not map A into A");
        m.f.push_back(fx->second);
        m.lam.push_back(s_idx.at(lam(x)));
        m.lambar.push_back(sbar_idx.at(lambar(x)));
    }
    for (Element s : s_set) {
        auto hs = sbar_idx.find(h(s));
        require(hs != sbar_idx.end(), Errc::DiagramDoesNotCommute, "h does not map S into S-bar");
        m.h.push_back(hs->second);
    }
    return m;
}

/// h_a(x) = x * prod_{i<r} (x + a^{p^{ik}}) over the big field F_{p^{rk}},
/// re-expressed over the subfield F_{p^k}. Every coefficient is checked for
/// subfield membership rather than assumed.
inline SparsePoly h_a_reduce(const Field& big, const Field& small, const SubfieldEmbedding& emb, Element a) {
    require(!a.is_zero(), Errc::InvalidArgument, "h_a needs a != 0");
    require(big.p() == small.p() && big.n() % small.n() == 0, Errc::NotADivisor,
            "small field is not a subfield of big field");
    const unsigned k = small.n();
    const unsigned r = big.n() / k;
    DensePoly prod{big.zero(), big.one()};
    for (unsigned i = 0; i < r; ++i) prod = dense_mul(big, prod, DensePoly{big.frobenius(a, std::uint64_t{i} * k), big.one()});
    SparsePoly out;
    for (std::size_t e = 0; e < prod.size(); ++e) {
        auto c = emb.to_small(prod[e]);
        require(c.has_value(), Errc::CoefficientsNotInSubfield,
                "coefficient of x^" + std::to_string(e) + " lies outside F_{p^k}");
        out.add_term(small, *c, Natural(e));
    }
    return out;
}

inline Natural hx_exponent(std::uint32_t p, unsigned r, unsigned k) {
    const Natural pk = natural_pow(Natural(p), k);
    return (natural_pow(pk, r) - 1) / (pk - 1) + 1;
}

/// x^d + ax permutes F_{p^{rk}} iff h_a permutes F_{p^k}, with
/// d = (p^{rk}-1)/(p^k-1) + 1; checked for every eligible a != 0.
inline VerificationReport verify_hx_equivalence(std::uint32_t p, unsigned r, unsigned k, unsigned workers = 1) {
    Stopwatch sw;
    require(r >= 1 && k >= 1, Errc::PreconditionViolated, "r and k must be positive");
    require(ipow(p, r * k) <= max_charsum_check_order, Errc::PreconditionViolated, "p^{rk} must be <= 2^16");
    const Field big = Field::build(p, r * k);
    const Field small = Field::build(p, k);
    const SubfieldEmbedding emb(small, big);
    const Natural d = hx_exponent(p, r, k);

    enum Outcome : char { Skipped, Agree, Disagree };
    struct Row {
        Outcome outcome = Skipped;
        bool pp = false;
    };
    auto rows = parallel_map<Row>(big.q() - 1, workers, [&](std::size_t i) {
        const Element a{static_cast<std::uint32_t>(i + 1)};
        SparsePoly ha;
        try {
            ha = h_a_reduce(big, small, emb, a);
        } catch (const Error& e) {
            if (e.code() != Errc::CoefficientsNotInSubfield) throw;
            return Row{};
        }
        const bool lhs = is_permutation(big, SparsePoly{big, {Term{big.one(), d}, Term{a, Natural(1)}}});
        const bool rhs = is_permutation(small, ha);
        return Row{lhs == rhs ? Agree : Disagree, lhs};
    });

    VerificationReport rep;
    rep.name = "hx_equivalence";
    rep.params = {{"p", p}, {"r", r}, {"k", k}, {"d", d.str()}};
    std::uint64_t pp_count = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].outcome == Skipped) {
            ++rep.skipped;
            continue;
        }
        if (rows[i].pp) ++pp_count;
        rep.record(rows[i].outcome == Agree, "equivalence fails at a = " + big.coeff_string(Element{static_cast<std::uint32_t>(i + 1)}));
    }
    rep.details = {{"permutation_count", pp_count}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

/// x^{p^k} + x permutes F_{p^m} for odd p when m / gcd(m, k) is odd.
/// Exhaustive; the converse direction (even quotient) is recorded in details.
inline VerificationReport verify_frobenius_plus_x(std::uint32_t p, unsigned m, unsigned k, unsigned workers = 1) {
    Stopwatch sw;
    require(p % 2 == 1 && is_prime(p), Errc::PreconditionViolated, "p must be an odd prime");
    require(m >= 1 && k >= 1, Errc::PreconditionViolated, "m and k must be positive");
    const Field f = Field::build(p, m);
    const bool odd_quotient = (m / std::gcd(m, k)) % 2 == 1;
    const SparsePoly poly{f, {Term{f.one(), natural_pow(Natural(p), k)}, Term{f.one(), Natural(1)}}};
    const bool pp = is_permutation(f, poly, workers);
    VerificationReport rep;
    rep.name = "frobenius_plus_x";
    rep.params = {{"p", p}, {"m", m}, {"k", k}};
    if (odd_quotient)
        rep.record(pp, "x^{p^k} + x is not a permutation");
    else
        ++rep.skipped;
    rep.details = {{"odd_quotient", odd_quotient}, {"permutation", pp}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace ffperm

#endif
