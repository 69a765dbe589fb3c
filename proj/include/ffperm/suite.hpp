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

#ifndef FFPERM_SUITE_HPP
#define FFPERM_SUITE_HPP

#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charsum.hpp"
#include "diffspec.hpp"
#include "families.hpp"
#include "permpoly.hpp"
#include "report.hpp"

namespace ffperm {

inline constexpr int report_schema = 1;

struct SuiteEntry {
    std::string name;
    bool ok = false;
    std::optional<Errc> error;
    std::string message;
    json report = json::object();
    double elapsed_ms = 0;
};

struct SuiteResult {
    std::vector<SuiteEntry> entries;
    double elapsed_ms = 0;

    bool ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }

    // 0 all green, 1 some check failed, 2 a check could not be run
    int exit_code() const {
        int code = 0;
        for (const auto& e : entries) {
            if (e.error && !is_consistency_failure(*e.error)) return 2;
            if (!e.ok) code = 1;
        }
        return code;
    }

    json to_json(const std::string& command = "full-suite") const {
        json list = json::array();
        std::size_t passed = 0;
        for (const auto& e : entries) {
            json j{{"name", e.name}, {"ok", e.ok}};
            if (e.error) j["error"] = {{"code", to_string(*e.error)}, {"message", e.message}};
            j["report"] = e.report;
            j["elapsed_ms"] = e.elapsed_ms;
            list.push_back(std::move(j));
            passed += e.ok;
        }
        return json{{"schema", report_schema}, {"command", command}, {"ok", ok()},
                    {"passed", passed},        {"total", entries.size()},  {"entries", list},
                    {"elapsed_ms", elapsed_ms}};
    }

    std::string scoreboard() const {
        std::string out;
        std::size_t passed = 0;
        char line[160];
        for (const auto& e : entries) {
            std::snprintf(line, sizeof line, "%-4s  %-44s %10.1f ms\n", e.ok ? "PASS" : "FAIL", e.name.c_str(),
                          e.elapsed_ms);
            out += line;
            if (!e.ok && !e.message.empty()) out += "      " + e.message + "\n";
            passed += e.ok;
        }
        std::snprintf(line, sizeof line, "%zu/%zu passed in %.1f ms\n", passed, entries.size(), elapsed_ms);
        return out + line;
    }
};

namespace detail {

template <class Fn>
void run_entry(SuiteResult& res, std::string name, Fn&& fn) {
    SuiteEntry e;
    e.name = std::move(name);
    Stopwatch sw;
    try {
        auto rep = fn();
        e.ok = rep.ok();
        e.report = rep.to_json();
        if (!e.ok) e.message = "verification failed";
    } catch (const Error& err) {
        e.ok = false;
        e.error = err.code();
        e.message = err.what();
    }
    e.elapsed_ms = sw.elapsed_ms();
    res.entries.push_back(std::move(e));
}

inline std::string fam_name(int id, const std::string& args) {
    return "family " + std::to_string(id) + " (" + args + ")";
}

}  // namespace detail

/// Every family instance of the desk-scale menu.
inline void append_family_entries(SuiteResult& res, unsigned workers = 1) {
    using detail::fam_name;
    using detail::run_entry;

    const std::vector<std::pair<std::uint32_t, unsigned>> class1 = {{3, 1}, {3, 2}, {5, 1}};
    for (auto [p, k] : class1)
        run_entry(res, fam_name(1, "p=" + std::to_string(p) + ",k=" + std::to_string(k)),
                  [&] { return verify_family(1, {p, k, 0}, workers); });
    for (unsigned k : {1u, 2u})
        run_entry(res, fam_name(2, "k=" + std::to_string(k)), [&] { return verify_family(2, {2, k, 0}, workers); });
    for (unsigned k : {1u, 2u})
        run_entry(res, fam_name(3, "k=" + std::to_string(k)), [&] { return verify_family(3, {2, k, 0}, workers); });
    run_entry(res, fam_name(4, "p=3,k=1"), [&] { return verify_family(4, {3, 1, 0}, workers); });
    run_entry(res, fam_name(5, "p=3,m=1"), [&] { return verify_family(5, {3, 0, 1}, workers); });
    for (int id : {6, 7})
        for (unsigned m : {3u, 5u, 7u})
            run_entry(res, fam_name(id, "m=" + std::to_string(m)), [&] { return verify_family(id, {2, 0, m}, workers); });
}

/// Character-sum, reduction and auxiliary permutation checks.
inline void append_lemma_entries(SuiteResult& res, unsigned workers = 1, std::uint64_t seed = 1) {
    using detail::run_entry;

    for (unsigned k : {1u, 2u}) {
        run_entry(res, "class 2 trace condition (k=" + std::to_string(k) + ")", [&] { return verify_class2_trace(k); });
        run_entry(res, "class 2 zero sums (k=" + std::to_string(k) + ")",
                  [&] { return verify_zero_sum(2, {2, k, 0}, workers); });
    }
    for (unsigned k : {1u, 2u})
        run_entry(res, "class 3 zero sums (k=" + std::to_string(k) + ")",
                  [&] { return verify_zero_sum(3, {2, k, 0}, workers); });
    run_entry(res, "class 4 zero sums (p=3,k=1)", [&] { return verify_zero_sum(4, {3, 1, 0}, workers); });
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {5, 1}})
        run_entry(res, "class 4 even-log ratio (p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")",
                  [&] { return verify_class4_even_log(p, k); });

    struct ClosedCase {
        std::uint32_t p;
        unsigned n;
        std::uint64_t d;
    };
    const std::vector<ClosedCase> closed = {{3, 2, 2}, {3, 2, 4}, {3, 4, 2}, {3, 4, 4}, {5, 2, 3},
                                            {7, 2, 4}, {3, 4, 5}, {2, 4, 3}, {2, 6, 3}, {2, 6, 9}};
    for (const auto& c : closed)
        run_entry(res,
                  "monomial sum closed form (q=" + std::to_string(ipow(c.p, c.n)) + ",d=" + std::to_string(c.d) + ")",
                  [&] { return verify_monomial_sum_closed_form(c.p, c.n, c.d, workers); });
    run_entry(res, "sum reduction (q=81,d=49,i=2,N=2)", [&] {
        const Field f = Field::build(3, 4);
        return verify_sum_reduction(f, 49, 2, 2, 256, seed, workers);
    });

    struct Triple {
        std::uint32_t p;
        unsigned a, b;
    };
    for (auto t : std::vector<Triple>{{3, 2, 1}, {2, 3, 1}, {3, 2, 2}})
        run_entry(res,
                  "h_a equivalence (p=" + std::to_string(t.p) + ",r=" + std::to_string(t.a) + ",k=" +
                      std::to_string(t.b) + ")",
                  [&] { return verify_hx_equivalence(t.p, t.a, t.b, workers); });
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {3, 2}, {7, 1}})
        run_entry(res, "square twist x(x^2-c)^((p-1)/2) (p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")",
                  [&] { return verify_square_twist(p, k, workers); });
    for (auto t : std::vector<Triple>{{3, 3, 1}, {3, 3, 2}, {5, 3, 1}, {3, 5, 1}})
        run_entry(res,
                  "x^(p^k)+x (p=" + std::to_string(t.p) + ",m=" + std::to_string(t.a) + ",k=" + std::to_string(t.b) +
                      ")",
                  [&] { return verify_frobenius_plus_x(t.p, t.a, t.b, workers); });
    run_entry(res, "substitution invariance (family 2, k=1)",
              [&] { return verify_substitution_invariance(class2_instance(1), 16, seed, workers); });
    run_entry(res, "substitution invariance (family 3, k=1)",
              [&] { return verify_substitution_invariance(class3_instance(1), 16, seed, workers); });
    run_entry(res, "substitution invariance (family 4, p=3,k=1)",
              [&] { return verify_substitution_invariance(class4_instance(3, 1), 16, seed, workers); });
}

/// Both power-map checks at m = 3, 5 and the delta = 6 solution table.
inline void append_power_entries(SuiteResult& res, unsigned workers = 1) {
    using detail::run_entry;

    for (unsigned m : {3u, 5u}) {
        run_entry(res, "power map d=2^(m+1)+3 (m=" + std::to_string(m) + ")",
                  [&] { return verify_power_map(m, PowerExponent::A, workers); });
        run_entry(res, "power map d=2^m+2^((m+1)/2)+1 (m=" + std::to_string(m) + ")",
                  [&] { return verify_power_map(m, PowerExponent::B, workers); });
    }

    struct TableRun {
        SolutionTable t;
        bool ok() const { return t.report.ok(); }
        json to_json() const { return solution_table_json(t); }
    };
    run_entry(res, "delta=6 solution table (m=5)", [&] { return TableRun{delta6_solution_table(5, workers)}; });
}

/// The whole desk-scale menu. Reports do not depend on `workers`.
inline SuiteResult full_suite(unsigned workers = 1, std::uint64_t seed = 1) {
    Stopwatch total;
    SuiteResult res;
    append_family_entries(res, workers);
    append_lemma_entries(res, workers, seed);
    append_power_entries(res, workers);
    res.elapsed_ms = total.elapsed_ms();
    return res;
}

}  // namespace ffperm

#endif
