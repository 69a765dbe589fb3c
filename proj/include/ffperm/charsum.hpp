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

#ifndef FFPERM_CHARSUM_HPP
#define FFPERM_CHARSUM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "character.hpp"
#include "cyclotomic.hpp"
#include "families.hpp"
#include "field.hpp"
#include "parallel.hpp"
#include "permpoly.hpp"
#include "report.hpp"

namespace ffperm {

/// C_j = { w^{di+j} : 0 <= i < (q-1)/d }.
struct CyclotomicClass {
    std::uint64_t d = 1;
    std::uint64_t j = 0;
    std::vector<Element> members;
};

struct CyclotomicPartition {
    std::vector<CyclotomicClass> classes;
    // least s >= 1 with d | p^s + 1, searched up to 2n
    std::optional<unsigned> s;
};

inline std::optional<unsigned> least_s(const Field& f, std::uint64_t d) {
    for (unsigned s = 1; s <= 2 * f.n(); ++s)
        if ((powmod(f.p(), s, d) + 1) % d == 0) return s;
    return std::nullopt;
}

inline CyclotomicPartition cyclotomic_classes(const Field& f, std::uint64_t d) {
    require(d >= 1 && f.group_order() % d == 0, Errc::NotADivisor,
            std::to_string(d) + " does not divide q-1");
    CyclotomicPartition out;
    const std::uint64_t size = f.group_order() / d;
    for (std::uint64_t j = 0; j < d; ++j) {
        CyclotomicClass c{d, j, {}};
        c.members.reserve(size);
        for (std::uint64_t i = 0; i < size; ++i) c.members.push_back(f.exp(d * i + j));
        out.classes.push_back(std::move(c));
    }
    out.s = least_s(f, d);
    return out;
}

/// Closed form of sum_x chi(a x^d) for d | q-1 in the semiprimitive case
/// (d | p^s + 1 for some s). With gamma = n/(2s):
///   a = 0                  -> q
///   a in the special class -> (-1)^{gamma+1} (d-1) p^{n/2}
///   otherwise              -> (-1)^gamma p^{n/2}
/// The special class is C_{d/2} when p is odd, gamma is odd and (p^s+1)/d
/// is odd, and C_0 in all other cases.
inline CycInt monomial_sum_closed_form(const Field& f, std::uint64_t d, Element a) {
    require(d >= 1 && f.group_order() % d == 0, Errc::NotADivisor,
            std::to_string(d) + " does not divide q-1");
    if (a.is_zero()) return CycInt::integer(f.p(), static_cast<std::int64_t>(f.q()));
    const auto s = least_s(f, d);
    require(s.has_value(), Errc::NoValidS, "no s <= 2n with d | p^s + 1");
    require(f.n() % (2 * *s) == 0, Errc::Unsupported, "n/(2s) is not an integer");
    const unsigned gamma = f.n() / (2 * *s);
    const std::uint64_t ps1 = ipow(f.p(), *s) + 1;
    const bool shifted = f.p() != 2 && d % 2 == 0 && gamma % 2 == 1 && (ps1 / d) % 2 == 1;
    const std::uint64_t special = shifted ? d / 2 : 0;
    const auto root_q = static_cast<std::int64_t>(ipow(f.p(), f.n() / 2));
    const std::int64_t sign = gamma % 2 == 0 ? 1 : -1;
    if (f.dlog(a) % d == special) return CycInt::integer(f.p(), -sign * static_cast<std::int64_t>(d - 1) * root_q);
    return CycInt::integer(f.p(), sign * root_q);
}

/// Closed form against the exhaustive sum_x chi(a x^d) for every a in F_q.
inline VerificationReport verify_monomial_sum_closed_form(std::uint32_t p, unsigned n, std::uint64_t d,
                                                          unsigned workers = 1) {
    Stopwatch sw;
    const Field f = Field::build(p, n);
    require(f.q() <= max_charsum_check_order, Errc::PreconditionViolated, "q must be <= 2^16");
    const auto part = cyclotomic_classes(f, d);
    require(part.s.has_value(), Errc::NoValidS, "no s <= 2n with d | p^s + 1");
    require(n % (2 * *part.s) == 0, Errc::Unsupported, "n/(2s) is not an integer");
    const Natural dn(d);
    auto equal = parallel_map<char>(f.q(), workers, [&](std::size_t i) -> char {
        const Element a{static_cast<std::uint32_t>(i)};
        const CycInt brute = weil_sum_fn(f, [&](Element x) { return f.mul(a, f.pow(x, dn)); }).value;
        return brute == monomial_sum_closed_form(f, d, a);
    });
    VerificationReport rep;
    rep.name = "monomial_sum_closed_form";
    rep.params = {{"p", p}, {"n", n}, {"d", d}};
    for (std::size_t i = 0; i < equal.size(); ++i)
        rep.record(equal[i], "closed form differs at a = " + f.coeff_string(Element{static_cast<std::uint32_t>(i)}));
    rep.details = {{"field", field_json(f)}, {"s", *part.s}, {"gamma", n / (2 * *part.s)}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

inline SparsePoly monomial_plus_linear(const Field& f, const Natural& d, Element a) {
    return SparsePoly{f, {Term{f.one(), d}, Term{a, Natural(1)}}};
}

/// Tr_{2k}^{6k}(a) != 1 for every a in the family-2 set S.
inline VerificationReport verify_class2_trace(unsigned k) {
    Stopwatch sw;
    const auto inst = class2_instance(k);
    const Field& f = *inst.field;
    VerificationReport rep;
    rep.name = "class2_trace_not_one";
    rep.params = {{"k", k}};
    for (Element a : inst.coefficient_set)
        rep.record(f.trace(a, 2 * k) != f.one(), "Tr(a) = 1 at a = " + f.coeff_string(a));
    rep.details = {{"set_size", inst.coefficient_set.size()}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

/// sum_x chi(x^d + vx) is exactly zero for every v in the coefficient set
/// of family 2, 3 or 4.
inline VerificationReport verify_zero_sum(int family_id, const FamilyParams& prm, unsigned workers = 1) {
    Stopwatch sw;
    require(family_id >= 2 && family_id <= 4, Errc::InvalidArgument, "zero sums are defined for families 2-4");
    const auto inst = make_family(family_id, prm);
    const Field& f = *inst.field;
    auto zero = parallel_map<char>(inst.coefficient_set.size(), workers, [&](std::size_t i) -> char {
        return weil_sum(f, monomial_plus_linear(f, inst.d, inst.coefficient_set[i])).value.is_zero();
    });
    VerificationReport rep;
    rep.name = "zero_sum";
    rep.params = params_json(inst);
    rep.params["family"] = family_id;
    rep.params["d"] = inst.d.str();
    for (std::size_t i = 0; i < zero.size(); ++i)
        rep.record(zero[i], "nonzero sum at v = " + f.coeff_string(inst.coefficient_set[i]));
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

/// Both sides of the reduction
///   sum_x chi(x^d + ax) = (1/N) sum_{j<N} sum_y chi(y^N (a w^j + w^{d j p^{-i}}))
/// where p^{-i} is the inverse of p^i modulo q-1. Exhaustive over a when
/// q <= 2^12, otherwise `samples` random a drawn with `seed`.
inline VerificationReport verify_sum_reduction(const Field& f, std::uint64_t d, unsigned i, std::uint64_t N,
                                         std::uint64_t samples = 256, std::uint64_t seed = 1,
                                         unsigned workers = 1) {
    Stopwatch sw;
    const std::uint64_t order = f.group_order();
    require(i < f.n(), Errc::ParameterContractViolated, "need 0 <= i < n");
    require(N >= 1, Errc::ParameterContractViolated, "N must be positive");
    require(std::gcd(d % order, order) == 1, Errc::ParameterContractViolated, "gcd(d, q-1) != 1");
    const std::uint64_t pi = ipow(f.p(), i);
    const std::int64_t diff = static_cast<std::int64_t>(d) - static_cast<std::int64_t>(pi);
    if (diff != 0)
        require(order % static_cast<std::uint64_t>(diff < 0 ? -diff : diff) == 0,
                Errc::ParameterContractViolated, "d - p^i does not divide q-1");
    const auto diff_mod = static_cast<std::uint64_t>(((diff % static_cast<std::int64_t>(order)) +
                                                      static_cast<std::int64_t>(order)) % static_cast<std::int64_t>(order));
    require(mulmod(diff_mod, N, order) == 0, Errc::ParameterContractViolated, "(d - p^i) N != 0 mod q-1");
    const std::uint64_t p_inv = inverse_mod(pi % order, order);

    std::vector<Element> as;
    if (f.q() <= generator_check_limit) {
        for (Element a : f.elements()) as.push_back(a);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
        for (std::uint64_t t = 0; t < samples; ++t) as.push_back(Element{static_cast<std::uint32_t>(pick(rng))});
    }

    const Natural dn(d);
    struct Row {
        bool equal = false;
        std::vector<std::int64_t> lhs, rhs;
    };
    auto rows = parallel_map<Row>(as.size(), workers, [&](std::size_t t) {
        const Element a = as[t];
        const CycInt lhs = weil_sum(f, monomial_plus_linear(f, dn, a)).value;
        CycInt acc(f.p());
        for (std::uint64_t j = 0; j < N; ++j) {
            const Element coef = f.add(f.mul(a, f.exp(j)), f.exp(mulmod(mulmod(d % order, j, order), p_inv, order)));
            acc += weil_sum_fn(f, [&](Element y) { return f.mul(f.pow(y, N), coef); }).value;
        }
        const CycInt rhs = acc.divide_exact(static_cast<std::int64_t>(N));
        return Row{lhs == rhs, lhs.coords(), rhs.coords()};
    });

    VerificationReport rep;
    rep.name = "sum_reduction";
    rep.params = {{"q", f.q()}, {"d", d}, {"i", i}, {"N", N}};
    for (std::size_t t = 0; t < rows.size(); ++t)
        rep.record(rows[t].equal, "sides differ at a = " + f.coeff_string(as[t]));
    rep.details = {{"exhaustive", f.q() <= generator_check_limit}, {"a_count", as.size()}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

// Parity of the discrete log of a nonzero element: via the log table when
// present, via Euler's criterion otherwise.
inline bool has_even_log(const Field& f, Element x) {
    if (f.has_log_table()) return f.dlog(x) % 2 == 0;
    return f.pow(x, f.group_order() / 2) == f.one();
}

/// (a+1)/(a-1) has even discrete log for every a in the family-4 set S,
/// a != +-1 (those are counted separately).
inline VerificationReport verify_class4_even_log(std::uint32_t p, unsigned k) {
    Stopwatch sw;
    const auto inst = class4_instance(p, k);
    const Field& f = *inst.field;
    const Element one = f.one(), minus_one = f.neg(f.one());
    VerificationReport rep;
    rep.name = "class4_even_log";
    rep.params = {{"p", p}, {"k", k}};
    std::uint64_t edge = 0;
    for (Element a : inst.coefficient_set) {
        if (a == one || a == minus_one) {
            ++edge;
            ++rep.skipped;
            continue;
        }
        const Element ratio = f.div(f.add(a, one), f.sub(a, one));
        rep.record(has_even_log(f, ratio), "odd log of (a+1)/(a-1) at a = " + f.coeff_string(a));
    }
    rep.details = {{"set_size", inst.coefficient_set.size()}, {"plus_minus_one_members", edge}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

// First a outside the family-4 set S (a != 0, +-1) whose (a+1)/(a-1) has odd log.
inline std::optional<Element> class4_odd_log_witness(std::uint32_t p, unsigned k) {
    const auto inst = class4_instance(p, k);
    const Field& f = *inst.field;
    const std::set<Element> members(inst.coefficient_set.begin(), inst.coefficient_set.end());
    const Element one = f.one(), minus_one = f.neg(one);
    for (Element a : f.nonzero_elements()) {
        if (a == one || a == minus_one || members.count(a)) continue;
        if (!has_even_log(f, f.div(f.add(a, one), f.sub(a, one)))) return a;
    }
    return std::nullopt;
}

/// The substitution x -> beta x with alpha = beta^d:
///   sum chi(alpha (x^d + ax)) = sum chi(x^d + beta^{d-1} a x)
/// and beta^{d-1} a stays in the coefficient set. Checked on `samples`
/// random (beta, a) pairs.
inline VerificationReport verify_substitution_invariance(const FamilyInstance& inst, std::uint64_t samples = 16,
                                                         std::uint64_t seed = 1, unsigned workers = 1) {
    Stopwatch sw;
    require(inst.family_id >= 2 && inst.family_id <= 4, Errc::InvalidArgument, "families 2-4 only");
    const Field& f = *inst.field;
    const std::set<Element> members(inst.coefficient_set.begin(), inst.coefficient_set.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_beta(1, f.q() - 1);
    std::uniform_int_distribution<std::size_t> pick_a(0, inst.coefficient_set.size() - 1);
    std::vector<std::pair<Element, Element>> pairs;
    for (std::uint64_t t = 0; t < samples; ++t) {
        const Element beta{static_cast<std::uint32_t>(pick_beta(rng))};
        pairs.emplace_back(beta, inst.coefficient_set[pick_a(rng)]);
    }
    const Natural dm1 = inst.d - 1;
    struct Row {
        bool sums_equal = false;
        bool closed = false;
    };
    auto rows = parallel_map<Row>(pairs.size(), workers, [&](std::size_t t) {
        const auto [beta, a] = pairs[t];
        const Element alpha = f.pow(beta, inst.d);
        const SparsePoly lhs = monomial_plus_linear(f, inst.d, a).scaled(f, alpha);
        const Element shifted = f.mul(f.pow(beta, dm1), a);
        return Row{weil_sum(f, lhs).value == weil_sum(f, monomial_plus_linear(f, inst.d, shifted)).value,
                   members.count(shifted) == 1};
    });
    VerificationReport rep;
    rep.name = "substitution_invariance";
    rep.params = params_json(inst);
    rep.params["family"] = inst.family_id;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const std::string at = " at beta = " + f.coeff_string(pairs[t].first);
        rep.record(rows[t].sums_equal, "sums differ" + at);
        rep.record(rows[t].closed, "beta^{d-1} a left the set" + at);
    }
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace ffperm

#endif
