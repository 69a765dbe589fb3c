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

#ifndef FFPERM_FAMILIES_HPP
#define FFPERM_FAMILIES_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "field.hpp"
#include "natural.hpp"
#include "parallel.hpp"
#include "permpoly.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace ffperm {

inline constexpr std::uint64_t max_family_order = std::uint64_t{1} << 28;
// Below this order coefficient sets are found by scanning the field.
inline constexpr std::uint64_t exhaustive_filter_limit = std::uint64_t{1} << 16;
// Below this order the S-sets are rebuilt from a second primitive element.
inline constexpr std::uint64_t generator_check_limit = std::uint64_t{1} << 12;

struct FamilyParams {
    std::uint32_t p = 0;
    unsigned k = 0;
    unsigned m = 0;
};

/// One parameter instance of a (C)PP family. Families 1-4 are monomials
/// a^{-1}x^d over the coefficient set; family 5 is a fixed trinomial;
/// families 6-7 are trinomials indexed by u in the coefficient set.
struct FamilyInstance {
    int family_id = 0;
    FamilyParams params;
    std::shared_ptr<const Field> field;
    Natural d;
    std::vector<Element> coefficient_set;
    SparsePoly poly;
};

namespace detail {

inline std::uint64_t checked_order(std::uint32_t p, unsigned n) {
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        require(q <= max_family_order, Errc::FieldTooLarge,
                std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^28");
    }
    return q;
}

inline void require_odd_prime(std::uint32_t p) {
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    require(p != 2, Errc::PreconditionViolated, "family needs an odd prime");
}

inline std::shared_ptr<const Field> make_field(std::uint32_t p, unsigned n, unsigned generator_rank = 0) {
    FieldOptions opts;
    opts.generator_rank = generator_rank;
    return std::make_shared<const Field>(Field::build(p, n, opts));
}

inline std::vector<Element> sorted(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<Element> class2_set(const Field& f, unsigned k) {
    const std::uint64_t step = (std::uint64_t{1} << (2 * k)) - 1;
    const std::uint64_t tmax = (std::uint64_t{1} << (2 * k)) + (std::uint64_t{1} << (4 * k));
    std::vector<Element> s;
    for (std::uint64_t t = 1; t <= tmax; ++t)
        if (t % 3 != 0) s.push_back(f.exp(t * step));
    return sorted(std::move(s));
}

inline std::vector<Element> class4_set(const Field& f, std::uint32_t p, unsigned k) {
    const std::uint64_t p2k = ipow(p, 2 * k);
    std::vector<Element> s;
    for (std::uint64_t t = 0; t <= p2k; ++t) s.push_back(f.exp(t * (p2k - 1) + (p2k - 1) / 2));
    return sorted(std::move(s));
}

}  // namespace detail

/// Family 1: a^{-1}x^d over F_{p^{(p-1)k}}, d = (p^{(p-1)k}-1)/(p^k-1) + 1,
/// for every a with a^{p^k-1} = -1.
inline FamilyInstance class1_instance(std::uint32_t p, unsigned k, bool force_dlog_filter = false) {
    detail::require_odd_prime(p);
    require(k >= 1, Errc::PreconditionViolated, "k must be positive");
    const unsigned r = p - 1;
    const std::uint64_t q = detail::checked_order(p, r * k);
    FamilyInstance inst{1, {p, k, 0}, detail::make_field(p, r * k), hx_exponent(p, r, k), {}, {}};
    const Field& f = *inst.field;
    const std::uint64_t pk1 = ipow(p, k) - 1;
    if (q <= exhaustive_filter_limit && !force_dlog_filter) {
        const Element minus_one = f.neg(f.one());
        for (Element a : f.nonzero_elements())
            if (f.pow(a, pk1) == minus_one) inst.coefficient_set.push_back(a);
    } else {
        // a = w^j: j (p^k-1) = (q-1)/2 mod q-1  <=>  j = M/2 mod M, M = (q-1)/(p^k-1)
        const std::uint64_t M = (q - 1) / pk1;
        for (std::uint64_t t = 0; t < pk1; ++t) inst.coefficient_set.push_back(f.exp(M / 2 + t * M));
        inst.coefficient_set = detail::sorted(std::move(inst.coefficient_set));
    }
    return inst;
}

/// Family 2: d = 2^{4k-1} + 2^{2k-1} over F_{2^{6k}}, gcd(k, 3) = 1, with
/// S = { w^{t(2^{2k}-1)} : 0 < t <= 2^{2k} + 2^{4k}, 3 does not divide t }.
inline FamilyInstance class2_instance(unsigned k, unsigned generator_rank = 0) {
    require(k >= 1, Errc::PreconditionViolated, "k must be positive");
    require(k % 3 != 0, Errc::KDivisibleBy3, "k = " + std::to_string(k) + " is divisible by 3");
    detail::checked_order(2, 6 * k);
    FamilyInstance inst{2, {2, k, 0}, detail::make_field(2, 6 * k, generator_rank), {}, {}, {}};
    inst.d = natural_pow(2, 4 * k - 1) + natural_pow(2, 2 * k - 1);
    inst.coefficient_set = detail::class2_set(*inst.field, k);
    return inst;
}

/// Family 3: d = (1 + 2^{2k-1})(1 + 2^{2k}) + 1 over F_{2^{4k}}, for the
/// non-cubic elements of the subfield F_{2^{2k}}^*.
inline FamilyInstance class3_instance(unsigned k) {
    require(k >= 1, Errc::PreconditionViolated, "k must be positive");
    detail::checked_order(2, 4 * k);
    FamilyInstance inst{3, {2, k, 0}, detail::make_field(2, 4 * k), {}, {}, {}};
    inst.d = (1 + natural_pow(2, 2 * k - 1)) * (1 + natural_pow(2, 2 * k)) + 1;
    const Field& f = *inst.field;
    const std::uint64_t sub_order = (std::uint64_t{1} << (2 * k)) - 1;
    const std::uint64_t c = f.group_order() / sub_order;
    // w^c generates the subfield's multiplicative group; j is the subfield log
    for (std::uint64_t j = 0; j < sub_order; ++j)
        if (j % 3 != 0) inst.coefficient_set.push_back(f.exp(j * c));
    inst.coefficient_set = detail::sorted(std::move(inst.coefficient_set));
    return inst;
}

/// Family 4: d = (p^{4k}-1)/2 + p^{2k} over F_{p^{4k}}, p odd, with
/// S = { w^{t(p^{2k}-1) + (p^{2k}-1)/2} : 0 <= t <= p^{2k} }.
inline FamilyInstance class4_instance(std::uint32_t p, unsigned k, unsigned generator_rank = 0) {
    detail::require_odd_prime(p);
    require(k >= 1, Errc::PreconditionViolated, "k must be positive");
    detail::checked_order(p, 4 * k);
    FamilyInstance inst{4, {p, k, 0}, detail::make_field(p, 4 * k, generator_rank), {}, {}, {}};
    inst.d = (natural_pow(p, 4 * k) - 1) / 2 + natural_pow(p, 2 * k);
    inst.coefficient_set = detail::class4_set(*inst.field, p, k);
    return inst;
}

/// Family 5: -x + x^{(p^{2m}+1)/2} + x^{p^m (p^{2m}+1)/2} over F_{p^{3m}}.
inline FamilyInstance class5_instance(std::uint32_t p, unsigned m) {
    detail::require_odd_prime(p);
    require(m >= 1, Errc::PreconditionViolated, "m must be positive");
    detail::checked_order(p, 3 * m);
    FamilyInstance inst{5, {p, 0, m}, detail::make_field(p, 3 * m), {}, {}, {}};
    const Field& f = *inst.field;
    const Natural e = (natural_pow(p, 2 * m) + 1) / 2;
    inst.poly = SparsePoly{f, {Term{f.neg(f.one()), Natural(1)}, Term{f.one(), e}, Term{f.one(), e * natural_pow(p, m)}}};
    return inst;
}

namespace detail {

inline unsigned trinomial_k(const Field& f, Element u) {
    require(f.p() == 2, Errc::PreconditionViolated, "trinomial families live in characteristic 2");
    require(f.n() % 2 == 1, Errc::EvenM, "m = " + std::to_string(f.n()) + " is even");
    require(f.n() > 1, Errc::PreconditionViolated, "m must be > 1");
    require(!u.is_zero(), Errc::ZeroU, "u must be nonzero");
    return (f.n() + 1) / 2;
}

}  // namespace detail

/// Family 6: x + u^{2^{k-1}-1} x^{2^k-1} + u^{2^{k-1}} x^{2^k+1}, k = (m+1)/2.
inline SparsePoly class6_poly(const Field& f, Element u) {
    const unsigned k = detail::trinomial_k(f, u);
    const std::uint64_t h = std::uint64_t{1} << (k - 1);
    return SparsePoly{f, {Term{f.one(), Natural(1)},
                          Term{f.pow(u, h - 1), Natural((std::uint64_t{1} << k) - 1)},
                          Term{f.pow(u, h), Natural((std::uint64_t{1} << k) + 1)}}};
}

/// Family 7: x + u x^{2^k-1} + u^{2^k} x^{2^m - 2^{k+1} + 2}, m = 2k - 1.
inline SparsePoly class7_poly(const Field& f, Element u) {
    const unsigned k = detail::trinomial_k(f, u);
    const unsigned m = f.n();
    return SparsePoly{f, {Term{f.one(), Natural(1)},
                          Term{u, Natural((std::uint64_t{1} << k) - 1)},
                          Term{f.pow(u, std::uint64_t{1} << k),
                               Natural((std::uint64_t{1} << m) - (std::uint64_t{1} << (k + 1)) + 2)}}};
}

inline FamilyInstance trinomial_instance(int id, unsigned m) {
    require(id == 6 || id == 7, Errc::InvalidArgument, "trinomial PP families are 6 and 7");
    require(m % 2 == 1, Errc::EvenM, "m = " + std::to_string(m) + " is even");
    require(m > 1, Errc::PreconditionViolated, "m must be > 1");
    detail::checked_order(2, m);
    FamilyInstance inst{id, {2, 0, m}, detail::make_field(2, m), {}, {}, {}};
    for (Element u : inst.field->nonzero_elements()) inst.coefficient_set.push_back(u);
    return inst;
}

inline FamilyInstance make_family(int id, const FamilyParams& prm) {
    switch (id) {
        case 1: return class1_instance(prm.p, prm.k);
        case 2: return class2_instance(prm.k);
        case 3: return class3_instance(prm.k);
        case 4: return class4_instance(prm.p, prm.k);
        case 5: return class5_instance(prm.p, prm.m);
        case 6:
        case 7: return trinomial_instance(id, prm.m);
        default: fail(Errc::InvalidArgument, "family id must be in 1..7");
    }
}

struct FamilyReport {
    int family = 0;
    json params = json::object();
    json field = json::object();
    std::string d;
    std::uint64_t set_size = 0;
    std::uint64_t pass_count = 0;
    std::vector<std::string> fail_list;
    bool gcd_ok = true;
    std::optional<bool> generator_independent;
    double elapsed_ms = 0;

    bool ok() const {
        return gcd_ok && fail_list.empty() && pass_count == set_size && set_size > 0 &&
               generator_independent.value_or(true);
    }

    json to_json() const {
        json j{{"family", family}, {"params", params}, {"field", field}, {"d", d},
               {"set_size", set_size}, {"pass_count", pass_count}, {"fail_list", fail_list},
               {"gcd_ok", gcd_ok}, {"ok", ok()}};
        if (generator_independent) j["generator_independent"] = *generator_independent;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

inline json params_json(const FamilyInstance& inst) {
    json j = json::object();
    if (inst.params.p) j["p"] = inst.params.p;
    if (inst.params.k) j["k"] = inst.params.k;
    if (inst.params.m) j["m"] = inst.params.m;
    return j;
}

// Coefficient sets of families 1-4 rebuilt from the second primitive element.
inline std::optional<bool> generator_independence(const FamilyInstance& inst) {
    if (inst.field->q() > generator_check_limit) return std::nullopt;
    const auto& prm = inst.params;
    std::vector<Element> other;
    switch (inst.family_id) {
        case 2: other = class2_instance(prm.k, 1).coefficient_set; break;
        case 4: other = class4_instance(prm.p, prm.k, 1).coefficient_set; break;
        default: return std::nullopt;  // families 1 and 3 do not reference w
    }
    return other == detail::sorted(inst.coefficient_set);
}

/// Runs the family's positive claim over every coefficient in the instance.
inline FamilyReport verify_instance(const FamilyInstance& inst, unsigned workers = 1) {
    Stopwatch sw;
    const Field& f = *inst.field;
    FamilyReport rep;
    rep.family = inst.family_id;
    rep.params = params_json(inst);
    rep.field = field_json(f);

    auto label = [&](Element a) { return f.coeff_string(a); };
    std::vector<char> pass;
    if (inst.family_id >= 1 && inst.family_id <= 4) {
        rep.d = inst.d.str();
        rep.gcd_ok = gcd_with_group_order(f, inst.d) == 1;
        rep.set_size = inst.coefficient_set.size();
        pass = parallel_map<char>(inst.coefficient_set.size(), workers, [&](std::size_t i) -> char {
            return is_cpp_exponent(f, inst.d, inst.coefficient_set[i]);
        });
        rep.generator_independent = generator_independence(inst);
    } else if (inst.family_id == 5) {
        rep.d = inst.poly.to_string(f);
        rep.set_size = 1;
        pass = {static_cast<char>(is_cpp(f, inst.poly, workers))};
    } else {
        rep.set_size = inst.coefficient_set.size();
        pass = parallel_map<char>(inst.coefficient_set.size(), workers, [&](std::size_t i) -> char {
            const Element u = inst.coefficient_set[i];
            return is_permutation(f, inst.family_id == 6 ? class6_poly(f, u) : class7_poly(f, u));
        });
    }
    for (std::size_t i = 0; i < pass.size(); ++i) {
        if (pass[i])
            ++rep.pass_count;
        else
            rep.fail_list.push_back(inst.family_id == 5 ? "f" : label(inst.coefficient_set[i]));
    }
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

inline FamilyReport verify_family(int id, const FamilyParams& prm, unsigned workers = 1) {
    return verify_instance(make_family(id, prm), workers);
}

/// x(x^2 - c)^{(p-1)/2} permutes F_{p^k} for every non-square c. Results for
/// nonzero squares are recorded, not asserted. For q <= 2^12 each non-square
/// is also run through the AGW criterion with lambda(x) = x^2 - c,
/// lambda-bar(x) = x^2, h(x) = (x + c) x^{p-1} on A = F_q^*.
inline VerificationReport verify_square_twist(std::uint32_t p, unsigned k, unsigned workers = 1) {
    Stopwatch sw;
    detail::require_odd_prime(p);
    require(k >= 1 && ipow(p, k) <= max_charsum_check_order, Errc::PreconditionViolated,
            "need 1 <= k and p^k <= 2^16");
    const Field f = Field::build(p, k);
    const std::uint64_t half = (f.q() - 1) / 2;
    const unsigned e = (p - 1) / 2;

    std::vector<Element> domain;
    for (Element x : f.nonzero_elements()) domain.push_back(x);

    struct Row {
        bool square = false;
        bool pp = false;
        bool agw_ok = true;
    };
    auto rows = parallel_map<Row>(f.q() - 1, workers, [&](std::size_t i) {
        const Element c{static_cast<std::uint32_t>(i + 1)};
        Row row;
        row.square = f.pow(c, half) == f.one();
        const DensePoly quad{f.neg(c), f.zero(), f.one()};
        const SparsePoly poly = to_sparse(f, dense_mul(f, {f.zero(), f.one()}, dense_pow(f, quad, e)));
        row.pp = is_permutation(f, poly);
        if (!row.square && f.q() <= generator_check_limit) {
            auto fx = [&](Element x) { return eval(f, poly, x); };
            auto lam = [&](Element x) { return f.sub(f.mul(x, x), c); };
            auto lambar = [&](Element x) { return f.mul(x, x); };
            auto h = [&](Element s) { return f.mul(f.add(s, c), f.pow(s, std::uint64_t{p - 1})); };
            auto agw = agw_verify(agw_maps_from_functions(domain, fx, lam, lambar, h));
            row.agw_ok = agw.ok() && agw.details["f_bijective"].get<bool>();
        }
        return row;
    });

    VerificationReport rep;
    rep.name = "square_twist_pp";
    rep.params = {{"p", p}, {"k", k}};
    json squares = json::array();
    std::uint64_t nonsquares = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Element c{static_cast<std::uint32_t>(i + 1)};
        if (rows[i].square) {
            squares.push_back({{"c", f.coeff_string(c)}, {"permutation", rows[i].pp}});
            continue;
        }
        ++nonsquares;
        rep.record(rows[i].pp, "not a PP for non-square c = " + f.coeff_string(c));
        rep.record(rows[i].agw_ok, "AGW check failed for c = " + f.coeff_string(c));
    }
    rep.details = {{"non_squares", nonsquares}, {"squares_observed", squares}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace ffperm

#endif
