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

// End-to-end acceptance run. One PASS/FAIL line per criterion, each with a
// pinned wall-clock bound; exits nonzero if any criterion fails.

#include <ffperm/charsum.hpp>
#include <ffperm/diffspec.hpp>
#include <ffperm/families.hpp>
#include <ffperm/permpoly.hpp>
#include <ffperm/suite.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

namespace {

using namespace ffperm;

struct Outcome {
    bool ok = true;
    std::string note;

    void check(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        note += (note.empty() ? "" : "; ") + what;
    }
};

struct Criterion {
    int id;
    std::string title;
    double bound_s;  // 0: no time bound
    std::function<Outcome()> run;
};

Outcome family_claims(int id, const std::vector<FamilyParams>& params) {
    Outcome o;
    for (const auto& prm : params) {
        const auto rep = verify_family(id, prm);
        o.check(rep.ok(), "family " + std::to_string(id) + " failed: " + rep.to_json().dump());
        o.note += (o.note.empty() ? "" : ", ") + std::to_string(rep.pass_count) + "/" + std::to_string(rep.set_size);
    }
    return o;
}

void require_report(Outcome& o, const VerificationReport& rep) {
    o.check(rep.ok(), rep.name + " " + rep.params.dump() + " has " + std::to_string(rep.violations.size()) +
                          " violations");
}

Outcome class1() { return family_claims(1, {{3, 1, 0}, {3, 2, 0}, {5, 1, 0}}); }

Outcome class2() {
    Outcome o = family_claims(2, {{2, 1, 0}, {2, 2, 0}});
    for (unsigned k : {1u, 2u}) {
        require_report(o, verify_class2_trace(k));
        require_report(o, verify_zero_sum(2, {2, k, 0}));
    }
    return o;
}

Outcome class3() {
    Outcome o = family_claims(3, {{2, 1, 0}, {2, 2, 0}});
    for (unsigned k : {1u, 2u}) require_report(o, verify_zero_sum(3, {2, k, 0}));
    return o;
}

Outcome class4() {
    Outcome o = family_claims(4, {{3, 1, 0}});
    o.check(class4_instance(3, 1).coefficient_set.size() == 10, "|S| != 10");
    require_report(o, verify_class4_even_log(3, 1));
    require_report(o, verify_zero_sum(4, {3, 1, 0}));
    return o;
}

Outcome class5() {
    Outcome o;
    const auto inst = class5_instance(3, 1);
    const Field& f = *inst.field;
    const SparsePoly want{f, {{f.from_int(2), Natural(1)}, {f.one(), Natural(5)}, {f.one(), Natural(15)}}};
    o.check(inst.poly == want, "unexpected trinomial " + inst.poly.to_string(f));
    o.check(is_cpp(f, inst.poly), "not a CPP over F_27");
    o.note = inst.poly.to_string(f);
    return o;
}

Outcome class6_7() {
    Outcome o;
    for (int id : {6, 7})
        for (unsigned m : {3u, 5u, 7u}) {
            const auto rep = verify_family(id, {2, 0, m});
            o.check(rep.ok() && rep.pass_count == (1u << m) - 1,
                    "family " + std::to_string(id) + " m=" + std::to_string(m) + " failed");
        }
    return o;
}

Outcome closed_form() {
    Outcome o;
    for (auto [p, n, d] : std::vector<std::tuple<std::uint32_t, unsigned, std::uint64_t>>{
             {3, 2, 2}, {3, 4, 4}, {3, 2, 4}, {3, 4, 5}, {2, 6, 9}}) {
        const auto rep = verify_monomial_sum_closed_form(p, n, d);
        require_report(o, rep);
        o.check(rep.checked == ipow(p, n), "not every a was checked");
    }
    return o;
}

Outcome sum_reduction() {
    Outcome o;
    const Field f = Field::build(3, 4);
    const auto rep = verify_sum_reduction(f, 49, 2, 2);
    require_report(o, rep);
    o.check(rep.details["exhaustive"] == true && rep.checked == 81, "not exhaustive over F_81");
    return o;
}

Outcome hx() {
    Outcome o;
    for (auto [p, r, k] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{3, 2, 1}, {2, 3, 1}, {3, 2, 2}}) {
        const auto rep = verify_hx_equivalence(p, r, k);
        require_report(o, rep);
        o.check(rep.checked > 0, "no eligible a");
    }
    return o;
}

Outcome power_map(PowerExponent which, const std::vector<unsigned>& ms) {
    Outcome o;
    const std::set<std::uint64_t> allowed = {0, 2, 4, 6, 8};
    for (unsigned m : ms) {
        const auto rep = verify_power_map(m, which);
        require_report(o, rep);
        const auto max_delta = rep.details["max_delta"].get<std::uint64_t>();
        o.check(max_delta == 8, "observed max delta at m=" + std::to_string(m) + " is " + std::to_string(max_delta) +
                                    ", spectrum " + rep.details["spectrum"].dump());
        for (const auto& v : rep.details["support"])
            o.check(allowed.count(v.get<std::uint64_t>()) == 1, "delta value " + v.dump() + " outside {0,2,4,6,8}");
    }
    return o;
}

Outcome solution_table() {
    Outcome o;
    const auto t = delta6_solution_table(5);
    require_report(o, t.report);
    std::size_t quartic = 0;
    for (const auto& r : t.rows) quartic += r.quartic.size();
    o.check(t.delta == 6 && t.rows.size() == 3 && quartic == 12, "table shape");
    o.check(!t.field->in_subfield(t.b, 5), "b lies in F_32");
    std::cout << solution_table_text(t);
    return o;
}

// Polynomials over several small fields, random and structured, fed to both
// permutation tests.
Outcome oracles() {
    Outcome o;
    std::mt19937_64 rng(2026);
    std::size_t polys = 0, perms = 0;
    auto compare = [&](const Field& f, const SparsePoly& poly) {
        const bool a = is_permutation(f, poly), b = pp_via_charsum(f, poly);
        ++polys;
        perms += a;
        o.check(a == b, "permutation tests disagree on " + poly.to_string(f));
    };
    const std::vector<std::pair<std::uint32_t, unsigned>> fields = {
        {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {2, 12}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}, {3, 7}};
    for (auto [p, n] : fields) {
        const Field f = Field::build(p, n);
        const std::uint64_t order = f.group_order();
        for (int t = 0; t < (f.q() > 1000 ? 6 : 40); ++t) {
            std::vector<Term> terms;
            const int count = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < count; ++i)
                terms.push_back({f.element(1 + rng() % order), Natural(1 + rng() % (2 * order))});
            compare(f, SparsePoly{f, terms});
        }
        const std::uint64_t monomials = f.q() > 1000 ? 4 : 24;
        for (std::uint64_t d = 1; d < std::min(order, monomials); ++d)
            compare(f, SparsePoly{f, {Term{f.one(), Natural(d)}}});
    }
    for (const auto& inst : {class1_instance(3, 1), class2_instance(1), class3_instance(2), class4_instance(3, 1)}) {
        const Field& f = *inst.field;
        for (Element a : inst.coefficient_set) {
            compare(f, SparsePoly{f, {Term{f.inv(a), inst.d}}});
            compare(f, SparsePoly{f, {Term{f.inv(a), inst.d}, Term{f.one(), Natural(1)}}});
        }
    }
    for (unsigned m : {3u, 5u, 7u}) {
        const Field f = Field::build(2, m);
        for (Element u : f.nonzero_elements()) {
            compare(f, class6_poly(f, u));
            compare(f, class7_poly(f, u));
        }
    }
    compare(*class5_instance(3, 1).field, class5_instance(3, 1).poly);

    std::size_t solver_cases = 0;
    for (unsigned n : {3u, 5u}) {
        const Field f = Field::build(2, n);
        for (Element a : f.nonzero_elements()) {
            for (Element b : f.elements()) {
                std::vector<Element> scan;
                for (Element x : f.elements())
                    if (f.add(f.add(f.mul(x, x), f.mul(a, x)), b).is_zero()) scan.push_back(x);
                o.check(solve_quadratic(f, a, b) == scan, "quadratic solver disagrees with scan");
                ++solver_cases;
            }
            // throws CriterionMismatch when criterion and scan disagree
            cubic_root_count(f, a);
            ++solver_cases;
        }
    }
    if (o.ok)
        o.note = std::to_string(polys) + " polynomials (" + std::to_string(perms) + " permutations), " +
                 std::to_string(solver_cases) + " solver cases";
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto one = full_suite(1, 1);
    const auto eight = full_suite(8, 1);
    o.check(strip_timing(one.to_json()) == strip_timing(eight.to_json()), "reports differ between 1 and 8 workers");
    o.check(strip_timing(full_suite(1, 1).to_json()) == strip_timing(one.to_json()), "repeat run differs");
    o.note = std::to_string(one.entries.size()) + " entries";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "family 1 CPPs, (p,k) in {(3,1),(3,2),(5,1)}", 10, class1},
        {2, "family 2 CPPs, trace and zero sums, k in {1,2}", 30, class2},
        {3, "family 3 CPPs and zero sums, k in {1,2}", 10, class3},
        {4, "family 4 CPPs over F_81, even-log ratio, zero sums", 10, class4},
        {5, "2x + x^5 + x^15 is a CPP over F_27", 1, class5},
        {6, "families 6-7 permute for every u, m in {3,5,7}", 10, class6_7},
        {7, "monomial sum closed form equals exhaustive sums", 30, closed_form},
        {8, "sum reduction over F_81, (d,i,N) = (49,2,2)", 60, sum_reduction},
        {9, "h_a equivalence, (p,r,k) in {(3,2,1),(2,3,1),(3,2,2)}", 30, hx},
        {10, "x^(2^(m+1)+3): PP, delta <= 10, subfield delta in {0,4}, max delta 8, m in {3,5,7}", 10,
         [] { return power_map(PowerExponent::A, {3, 5, 7}); }},
        {11, "x^(2^m+2^((m+1)/2)+1): same assertions, m in {3,5}", 10,
         [] { return power_map(PowerExponent::B, {3, 5}); }},
        {12, "delta = 6 witness table over F_1024", 30, solution_table},
        {13, "oracle cross-checks", 0, oracles},
        {14, "full suite deterministic across worker counts", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Stopwatch sw;
        Outcome o;
        try {
            o = c.run();
        } catch (const Error& e) {
            o.ok = false;
            o.note = e.what();
        }
        const double secs = sw.elapsed_ms() / 1000.0;
        if (c.bound_s > 0 && secs > c.bound_s) o.check(false, "exceeded time bound");
        char head[64];
        if (c.bound_s > 0)
            std::snprintf(head, sizeof head, "%.2fs/%.0fs", secs, c.bound_s);
        else
            std::snprintf(head, sizeof head, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << head << ")";
        if (!o.note.empty()) std::cout << ": " << o.note;
        std::cout << std::endl;
        failed += !o.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
