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

#ifndef FFPERM_DIFFSPEC_HPP
#define FFPERM_DIFFSPEC_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "field.hpp"
#include "parallel.hpp"
#include "permpoly.hpp"
#include "report.hpp"

namespace ffperm {

/// delta(b) = #{x : (x+1)^d - x^d = b} for every b, plus its distribution.
struct DiffSpectrum {
    Natural d;
    std::vector<std::uint32_t> deltas;           // indexed by b
    std::map<std::uint64_t, std::uint64_t> counts;  // delta value -> number of b
    std::uint64_t max_delta = 0;

    std::uint32_t at(Element b) const { return deltas.at(b.index()); }
};

/// #{x : (x+a)^d - x^d = b}, by exhaustive scan.
inline std::uint64_t delta(const Field& f, const Natural& d, Element a, Element b) {
    require(!a.is_zero(), Errc::ZeroDerivativeDirection, "derivative direction must be nonzero");
    std::uint64_t count = 0;
    for (Element x : f.elements())
        if (f.sub(f.pow(f.add(x, a), d), f.pow(x, d)) == b) ++count;
    return count;
}

/// One pass over x, bucketing (x+1)^d - x^d. Per-chunk buckets are merged
/// in chunk order.
inline DiffSpectrum monomial_spectrum(const Field& f, const Natural& d, unsigned workers = 1) {
    const std::uint64_t e = reduce(d, f.group_order());
    const bool d_zero = d == 0;
    auto power = [&](Element x) {
        if (x.is_zero()) return d_zero ? f.one() : f.zero();
        return f.pow(x, e);
    };
    const std::size_t chunks = std::max(1u, workers);
    std::vector<std::vector<std::uint32_t>> partial(chunks);
    parallel_chunks(f.q(), workers, [&](std::size_t begin, std::size_t end, std::size_t c) {
        auto& bucket = partial[c];
        bucket.assign(f.q(), 0);
        for (std::size_t i = begin; i < end; ++i) {
            const Element x{static_cast<std::uint32_t>(i)};
            ++bucket[f.sub(power(f.add(x, f.one())), power(x)).index()];
        }
    });
    DiffSpectrum s;
    s.d = d;
    s.deltas.assign(f.q(), 0);
    for (const auto& bucket : partial)
        for (std::size_t b = 0; b < bucket.size(); ++b) s.deltas[b] += bucket[b];
    for (auto v : s.deltas) {
        ++s.counts[v];
        s.max_delta = std::max<std::uint64_t>(s.max_delta, v);
    }
    return s;
}

inline json spectrum_json(const DiffSpectrum& s) {
    json j = json::object();
    for (auto [v, c] : s.counts) j[std::to_string(v)] = c;
    return j;
}

/// Elements of the subfield F_{p^r} inside f, in enumeration order.
inline std::vector<Element> subfield_elements(const Field& f, unsigned r) {
    std::vector<Element> out;
    for (Element x : f.elements())
        if (f.in_subfield(x, r)) out.push_back(x);
    return out;
}

/// Absolute trace Tr_1^r(y) of an element y of the subfield F_{p^r}.
inline Element subfield_trace(const Field& f, Element y, unsigned r) {
    Element acc = f.zero();
    for (unsigned i = 0; i < r; ++i) acc = f.add(acc, f.frobenius(y, i));
    return acc;
}

/// Roots of x^2 + ax + b over F_{2^n}. For odd n: x = a * HT(b/a^2) with the
/// half-trace HT(c) = sum_{i <= (n-1)/2} c^{4^i}; for even n, an exhaustive scan.
inline std::vector<Element> solve_quadratic(const Field& f, Element a, Element b) {
    require(f.p() == 2, Errc::PreconditionViolated, "quadratic solver needs characteristic 2");
    require(!a.is_zero(), Errc::ZeroLeadingDirection, "linear coefficient must be nonzero");
    std::vector<Element> roots;
    if (f.n() % 2 == 0) {
        for (Element x : f.elements())
            if (f.add(f.mul(x, f.add(x, a)), b).is_zero()) roots.push_back(x);
        return roots;
    }
    const Element c = f.div(b, f.mul(a, a));
    if (f.abs_trace(c) == 1) return roots;
    Element ht = f.zero();
    Element t = c;
    for (unsigned i = 0; i <= (f.n() - 1) / 2; ++i) {
        ht = f.add(ht, t);
        t = f.frobenius(t, 2);
    }
    roots = {f.mul(a, ht), f.add(f.mul(a, ht), a)};
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// p_1 = p_2 = x, p_k = p_{k-1} + x^{2^{k-3}} p_{k-2}, evaluated at a point.
inline Element pm_eval(const Field& f, unsigned m, Element x) {
    require(m >= 1, Errc::InvalidArgument, "p_m needs m >= 1");
    Element prev2 = x, prev1 = x;
    for (unsigned k = 3; k <= m; ++k) {
        const Element next = f.add(prev1, f.mul(f.frobenius(x, k - 3), prev2));
        prev2 = prev1;
        prev1 = next;
    }
    return prev1;
}

struct CubicRoots {
    std::vector<Element> roots;  // from the scan
    unsigned criterion = 0;      // 0, 1 or 3 from the trace / p_m criterion
    std::string tag;
};

/// Roots of x^3 + x + a over F_{2^m}, counted by scan and by the criterion
/// (Tr(1/a + 1) = 1 -> one root; p_m(a) = 0 -> three; else none).
inline CubicRoots cubic_root_count(const Field& f, Element a) {
    require(f.p() == 2, Errc::PreconditionViolated, "cubic criterion needs characteristic 2");
    require(!a.is_zero(), Errc::InvalidArgument, "cubic constant must be nonzero");
    CubicRoots out;
    for (Element x : f.elements())
        if (f.add(f.add(f.pow(x, std::uint64_t{3}), x), a).is_zero()) out.roots.push_back(x);
    if (f.abs_trace(f.add(f.inv(a), f.one())) == 1) {
        out.criterion = 1;
        out.tag = "trace";
    } else if (pm_eval(f, f.n(), a).is_zero()) {
        out.criterion = 3;
        out.tag = "p_m";
    } else {
        out.criterion = 0;
        out.tag = "none";
    }
    require(out.roots.size() == out.criterion, Errc::CriterionMismatch,
            "scan found " + std::to_string(out.roots.size()) + " roots, criterion says " +
                std::to_string(out.criterion) + " at a = " + f.coeff_string(a));
    return out;
}

// Roots of x^4 + y^2 (x^2 + x + 1) + x + 1 + b.
inline std::vector<Element> quartic_roots(const Field& f, Element b, Element y) {
    const Element y2 = f.mul(y, y);
    const Element tail = f.add(f.one(), b);
    std::vector<Element> roots;
    for (Element x : f.elements()) {
        const Element x2 = f.mul(x, x);
        Element v = f.mul(x2, x2);
        v = f.add(v, f.mul(y2, f.add(f.add(x2, x), f.one())));
        v = f.add(v, f.add(x, tail));
        if (v.is_zero()) roots.push_back(x);
    }
    return roots;
}

/// For n = 2m, m odd, b outside F_{2^m} and y in F_{2^m} \ F_2: the quartic
/// has 0 or 4 roots, and 4 roots come as {x0, x0+1, x1, x1+1} with
/// x1^2 + x1 = x0^2 + x0 + 1 + y^2.
inline VerificationReport quartic_structure_check(const Field& f, Element b, Element y) {
    require(f.p() == 2 && f.n() % 2 == 0 && (f.n() / 2) % 2 == 1, Errc::PreconditionViolated,
            "need F_{2^n} with n = 2m, m odd");
    const unsigned m = f.n() / 2;
    require(!f.in_subfield(b, m), Errc::PreconditionViolated, "b must lie outside F_{2^m}");
    require(f.in_subfield(y, m) && y != f.zero() && y != f.one(), Errc::PreconditionViolated,
            "y must lie in F_{2^m} \\ F_2");
    const auto roots = quartic_roots(f, b, y);
    VerificationReport rep;
    rep.name = "quartic_structure";
    rep.params = {{"b", f.coeff_string(b)}, {"y", f.coeff_string(y)}};
    rep.record(roots.empty() || roots.size() == 4, "quartic has " + std::to_string(roots.size()) + " roots");
    if (roots.size() == 4) {
        const Element x0 = roots[0];
        const Element target = f.add(f.add(f.mul(x0, x0), x0), f.add(f.one(), f.mul(y, y)));
        const Element x0p1 = f.add(x0, f.one());
        bool paired = std::count(roots.begin(), roots.end(), x0p1) == 1;
        for (Element x : roots) {
            if (x == x0 || x == x0p1) continue;
            paired = paired && f.add(f.mul(x, x), x) == target;
        }
        rep.record(paired, "root set does not have the {x0, x0+1, x1, x1+1} shape");
    }
    rep.details = {{"root_count", roots.size()}};
    return rep;
}

enum class PowerExponent { A, B };  // A: 2^{m+1} + 3;  B: 2^m + 2^{(m+1)/2} + 1

inline Natural power_exponent(unsigned m, PowerExponent which) {
    if (which == PowerExponent::A) return natural_pow(2, m + 1) + 3;
    return natural_pow(2, m) + natural_pow(2, (m + 1) / 2) + 1;
}

inline constexpr unsigned max_power_m = 13;

/// Differential claims for x^d over F_{2^{2m}}, m odd: x^d permutes,
/// every delta(b) <= 10, delta(b) in {0, 4} on the subfield F_{2^m}. Also
/// checks the row sum and parity invariants, and for exponent A the
/// reduction to y = x + x^{2^m}: y^3 + y + (b + b^{2^m}) = 0 for every
/// solution x, and three cubic roots always sum to zero.
inline VerificationReport verify_power_map(unsigned m, PowerExponent which, unsigned workers = 1) {
    Stopwatch sw;
    require(m % 2 == 1 && m <= max_power_m, Errc::PreconditionViolated, "m must be odd and <= 13");
    const Field f = Field::build(2, 2 * m);
    const Natural d = power_exponent(m, which);
    VerificationReport rep;
    rep.name = which == PowerExponent::A ? "power_map_A" : "power_map_B";
    rep.params = {{"m", m}, {"n", 2 * m}, {"d", d.str()}};

    rep.record(gcd_with_group_order(f, d) == 1, "gcd(d, 2^n - 1) != 1");
    const auto spec = monomial_spectrum(f, d, workers);
    rep.record(spec.max_delta <= 10, "max delta = " + std::to_string(spec.max_delta) + " > 10");
    std::uint64_t total = 0;
    bool even = true;
    for (auto v : spec.deltas) {
        total += v;
        even = even && v % 2 == 0;
    }
    rep.record(total == f.q(), "row sum != q");
    rep.record(even, "odd delta value");

    std::map<std::uint64_t, std::uint64_t> subfield_counts;
    for (Element b : subfield_elements(f, m)) {
        const auto v = spec.at(b);
        ++subfield_counts[v];
        rep.record(v == 0 || v == 4, "delta(b) = " + std::to_string(v) + " on the subfield");
    }

    json extra = json::object();
    if (which == PowerExponent::A) {
        // every solution x of D_1 x^d = b satisfies the reduced system; the
        // quartic scan is O(q), so above 2^10 only a strided sample of x
        bool system_ok = true;
        const std::uint64_t stride = std::max<std::uint64_t>(1, f.q() / 1024);
        for (std::uint64_t i = 0; i < f.q() && system_ok; i += stride) {
            const Element x = f.element(i);
            const Element b = f.add(f.pow(f.add(x, f.one()), d), f.pow(x, d));
            const Element y = f.add(x, f.frobenius(x, m));
            const Element a = f.add(b, f.frobenius(b, m));
            const bool cubic = f.add(f.add(f.pow(y, std::uint64_t{3}), y), a).is_zero();
            const auto roots = quartic_roots(f, b, y);
            system_ok = cubic && std::binary_search(roots.begin(), roots.end(), x);
        }
        rep.record(system_ok, "a solution x violates the cubic/quartic system");

        std::map<Element, std::vector<Element>> cubic_roots_by_a;
        const auto sub = subfield_elements(f, m);
        for (Element a : sub) {
            std::vector<Element> roots;
            for (Element y : sub)
                if (f.add(f.add(f.pow(y, std::uint64_t{3}), y), a).is_zero()) roots.push_back(y);
            cubic_roots_by_a.emplace(a, std::move(roots));
        }
        std::uint64_t three_root_bs = 0;
        bool trace_argument = true;
        for (Element b : f.elements()) {
            if (f.in_subfield(b, m)) continue;
            const auto& roots = cubic_roots_by_a.at(f.add(b, f.frobenius(b, m)));
            if (roots.size() != 3) continue;
            ++three_root_bs;
            const Element sum = f.add(f.add(roots[0], roots[1]), roots[2]);
            const Element tr = f.add(f.add(subfield_trace(f, roots[0], m), subfield_trace(f, roots[1], m)),
                                     subfield_trace(f, roots[2], m));
            trace_argument = trace_argument && sum.is_zero() && tr.is_zero();
        }
        rep.record(trace_argument, "three cubic roots with nonzero sum or trace sum");
        extra["three_root_b_count"] = three_root_bs;
    }

    json sub_json = json::object();
    for (auto [v, c] : subfield_counts) sub_json[std::to_string(v)] = c;
    json support = json::array();
    for (auto [v, c] : spec.counts) support.push_back(v);
    rep.details = {{"n", 2 * m},
                   {"d", d.str()},
                   {"spectrum", spectrum_json(spec)},
                   {"max_delta", spec.max_delta},
                   {"subfield_deltas", sub_json},
                   {"support", support}};
    for (auto& [k, v] : extra.items()) rep.details[k] = v;
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

struct SolutionRow {
    Element y;
    unsigned trace = 0;
    std::vector<Element> quartic;   // all roots of the quartic for this y
    std::vector<Element> filtered;  // those with x + x^{2^m} = y
};

struct SolutionTable {
    std::shared_ptr<const Field> field;
    unsigned m = 0;
    Natural d;
    Element b;
    Element a;
    std::uint32_t delta = 0;
    std::vector<SolutionRow> rows;
    VerificationReport report;
};

/// Finds the enumeration-first b outside F_{2^m} with delta(b) = 6 whose
/// cubic y^3 + y + (b + b^{2^m}) has three roots of traces {1, 1, 0} and
/// whose three quartics have four roots each, and lays out the solution
/// table for it. Exponent d = 2^{m+1} + 3.
inline SolutionTable delta6_solution_table(unsigned m = 5, unsigned workers = 1) {
    Stopwatch sw;
    require(m % 2 == 1 && m >= 3 && m <= max_power_m, Errc::PreconditionViolated, "m must be odd in [3, 13]");
    SolutionTable t;
    t.field = std::make_shared<const Field>(Field::build(2, 2 * m));
    const Field& f = *t.field;
    t.m = m;
    t.d = power_exponent(m, PowerExponent::A);
    const auto spec = monomial_spectrum(f, t.d, workers);
    const auto sub = subfield_elements(f, m);

    for (Element b : f.elements()) {
        if (spec.at(b) != 6 || f.in_subfield(b, m)) continue;
        const Element a = f.add(b, f.frobenius(b, m));
        std::vector<Element> ys;
        for (Element y : sub)
            if (f.add(f.add(f.pow(y, std::uint64_t{3}), y), a).is_zero()) ys.push_back(y);
        if (ys.size() != 3) continue;
        std::vector<SolutionRow> rows;
        unsigned trace_sum = 0;
        bool four_each = true;
        for (Element y : ys) {
            SolutionRow row{y, subfield_trace(f, y, m).index(), quartic_roots(f, b, y), {}};
            four_each = four_each && row.quartic.size() == 4;
            for (Element x : row.quartic)
                if (f.add(x, f.frobenius(x, m)) == y) row.filtered.push_back(x);
            trace_sum += row.trace;
            rows.push_back(std::move(row));
        }
        if (trace_sum != 2 || !four_each) continue;
        // table order: trace-1 rows first
        std::stable_sort(rows.begin(), rows.end(), [](const SolutionRow& l, const SolutionRow& r) { return l.trace > r.trace; });
        t.b = b;
        t.a = a;
        t.delta = spec.at(b);
        t.rows = std::move(rows);
        break;
    }
    require(!t.rows.empty(), Errc::NoWitnessFound, "no b with delta(b) = 6 and the {1,1,0} trace pattern");

    auto& rep = t.report;
    rep.name = "solution_table";
    rep.params = {{"m", m}, {"n", 2 * m}, {"d", t.d.str()}};
    std::size_t quartic_total = 0, filtered_total = 0;
    for (const auto& row : t.rows) {
        quartic_total += row.quartic.size();
        filtered_total += row.filtered.size();
        if (row.trace == 0)
            rep.record(row.filtered.size() <= 2, "trace-0 row keeps more than 2 solutions");
        else
            rep.record(row.filtered.empty() || row.filtered.size() == 4, "trace-1 row splits its solutions");
    }
    rep.record(quartic_total == 12, "pre-filter solution count != 12");
    rep.record(filtered_total == t.delta, "filtered solutions do not add up to delta(b)");
    rep.elapsed_ms = sw.elapsed_ms();
    return t;
}

inline json solution_table_json(const SolutionTable& t) {
    const Field& f = *t.field;
    auto labels = [&](const std::vector<Element>& xs) {
        json j = json::array();
        for (Element x : xs) j.push_back(f.label(x));
        return j;
    };
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"y", f.label(r.y)}, {"trace", r.trace}, {"quartic_solutions", labels(r.quartic)},
                        {"solutions", labels(r.filtered)}});
    return json{{"n", 2 * t.m}, {"d", t.d.str()}, {"b", f.label(t.b)}, {"a", f.label(t.a)},
                {"delta", t.delta}, {"rows", rows}, {"report", t.report.to_json()}};
}

inline std::string solution_table_text(const SolutionTable& t) {
    const Field& f = *t.field;
    auto join = [&](const std::vector<Element>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? (i == 2 ? "; " : ",") : "") + f.label(xs[i]);
        return s;
    };
    std::string out = "n = " + std::to_string(2 * t.m) + ", d = " + t.d.str() + ", b = " + f.label(t.b) +
                      ", a = b + b^(2^m) = " + f.label(t.a) + ", delta(b) = " + std::to_string(t.delta) + "\n";
    out += "y^3+y+a=0 | Tr_m(y) | x^4+y^2(x^2+x+1)+x+1+b=0 | D_1F(x)=b\n";
    for (const auto& r : t.rows) {
        std::string filtered;
        for (std::size_t i = 0; i < r.filtered.size(); ++i) filtered += (i ? "," : "") + f.label(r.filtered[i]);
        out += f.label(r.y) + " | " + std::to_string(r.trace) + " | {" + join(r.quartic) + "} | " +
               (filtered.empty() ? "-" : filtered) + "\n";
    }
    return out;
}

}  // namespace ffperm

#endif
