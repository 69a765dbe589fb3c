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

// ffperm command line front end. Every subcommand prints one JSON report
// (or a text rendering of it) and exits 0 when all assertions hold, 1 when
// one fails and 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <ffperm/charsum.hpp>
#include <ffperm/diffspec.hpp>
#include <ffperm/expr.hpp>
#include <ffperm/families.hpp>
#include <ffperm/literal.hpp>
#include <ffperm/suite.hpp>

using namespace ffperm;

namespace {

struct Options {
    std::optional<std::uint32_t> p;
    std::optional<unsigned> n, k, m, r, i;
    std::optional<std::uint64_t> N;
    std::optional<std::string> modulus, field_file, d, u, poly;
    int id = 0;
    std::string which = "all";
    std::string exponent = "A";
    std::string format = "json";
    std::string output;
    unsigned workers = 1;
    std::uint64_t seed = 1;
};

struct Outcome {
    json report;
    bool ok = true;
    std::string text;  // custom text rendering, if any
};

Options opt;

std::optional<FieldFile> field_request() {
    FieldFile ff;
    if (opt.field_file) ff = load_field_file(*opt.field_file);
    if (opt.p) ff.p = *opt.p;
    if (opt.n) ff.n = *opt.n;
    if (opt.modulus) ff.modulus = parse_modulus(*opt.modulus);
    if (ff.p == 0 && ff.n == 0 && !ff.modulus) return std::nullopt;
    require(ff.p != 0 && ff.n != 0, Errc::InvalidArgument, "a field needs both --p and --n");
    return ff;
}

Field build_requested_field() {
    auto ff = field_request();
    require(ff.has_value(), Errc::InvalidArgument, "this command needs --p and --n (or --field)");
    FieldOptions fo;
    fo.modulus = ff->modulus;
    return Field::build(ff->p, ff->n, fo);
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
    require(v.has_value(), Errc::InvalidArgument, std::string("missing ") + flag);
    return *v;
}

Natural exponent_arg(const Field* f) {
    ExprParser::Vars vars;
    if (f) {
        vars["p"] = f->p();
        vars["n"] = f->n();
        vars["q"] = Natural(f->q());
    }
    if (opt.k) vars["k"] = *opt.k;
    if (opt.m) vars["m"] = *opt.m;
    return parse_exponent(need(opt.d, "--d"), vars);
}

json config_json(const std::string& command) {
    json c{{"command", command}};
    if (opt.p) c["p"] = *opt.p;
    if (opt.n) c["n"] = *opt.n;
    if (opt.modulus) c["modulus"] = *opt.modulus;
    if (opt.field_file) c["field"] = *opt.field_file;
    if (opt.id) c["id"] = opt.id;
    if (opt.k) c["k"] = *opt.k;
    if (opt.m) c["m"] = *opt.m;
    if (opt.r) c["r"] = *opt.r;
    if (opt.i) c["i"] = *opt.i;
    if (opt.N) c["N"] = *opt.N;
    if (opt.d) c["d"] = *opt.d;
    if (opt.u) c["u"] = *opt.u;
    if (opt.poly) c["poly"] = *opt.poly;
    c["seed"] = opt.seed;
    return c;
}

std::string modulus_string(const Field& f) {
    std::string s;
    for (std::size_t e = f.modulus().size(); e-- > 0;) {
        const auto c = f.modulus()[e];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (e == 0 || c != 1) s += std::to_string(c);
        if (e >= 1) s += "x";
        if (e >= 2) s += "^" + std::to_string(e);
    }
    return s;
}

Outcome field_info() {
    const Field f = build_requested_field();
    json rep = field_json(f);
    rep["modulus_string"] = modulus_string(f);
    rep["generator_order"] = f.order(f.generator());
    rep["log_table"] = f.has_log_table();
    std::string text = "F_" + std::to_string(f.q()) + " = F_" + std::to_string(f.p()) + "[x]/(" +
                       rep["modulus_string"].get<std::string>() + ")\n";
    text += "generator w = " + f.coeff_string(f.generator()) + ", order " + std::to_string(f.order(f.generator())) + "\n";
    return {rep, true, text};
}

Outcome verify_family_cmd() {
    const bool odd_p = opt.id == 1 || opt.id == 4 || opt.id == 5;
    FamilyParams prm{odd_p ? need(opt.p, "--p") : opt.p.value_or(2), opt.k.value_or(0), opt.m.value_or(0)};
    auto inst = make_family(opt.id, prm);
    if (opt.u) {
        require(opt.id == 6 || opt.id == 7, Errc::InvalidArgument, "--u applies to families 6 and 7");
        const Element u = parse_element(*inst.field, *opt.u);
        require(!u.is_zero(), Errc::ZeroU, "u must be nonzero");
        inst.coefficient_set = {u};
    }
    const auto rep = verify_instance(inst, opt.workers);
    std::string text = "family " + std::to_string(opt.id) + ": " + std::to_string(rep.pass_count) + "/" +
                       std::to_string(rep.set_size) + " pass" + (rep.ok() ? "" : " (FAIL)") + "\n";
    for (const auto& f : rep.fail_list) text += "  fails at " + f + "\n";
    return {rep.to_json(), rep.ok(), text};
}

Outcome from_report(const VerificationReport& rep) { return {rep.to_json(), rep.ok(), ""}; }

Outcome verify_lemmas_cmd() {
    const std::string& w = opt.which;
    if (w == "all") {
        SuiteResult res;
        Stopwatch sw;
        append_lemma_entries(res, opt.workers, opt.seed);
        res.elapsed_ms = sw.elapsed_ms();
        return {res.to_json("verify-lemmas"), res.ok(), res.scoreboard()};
    }
    if (w == "class2-trace") return from_report(verify_class2_trace(need(opt.k, "--k")));
    if (w == "zero-sum")
        return from_report(verify_zero_sum(opt.id, {opt.p.value_or(2), need(opt.k, "--k"), 0}, opt.workers));
    if (w == "class4-even-log") return from_report(verify_class4_even_log(need(opt.p, "--p"), need(opt.k, "--k")));
    if (w == "closed-form") {
        const auto d = exponent_arg(nullptr);
        return from_report(verify_monomial_sum_closed_form(need(opt.p, "--p"), need(opt.n, "--n"),
                                                           d.convert_to<std::uint64_t>(), opt.workers));
    }
    if (w == "sum-reduction") {
        const Field f = build_requested_field();
        const auto d = exponent_arg(&f);
        return from_report(verify_sum_reduction(f, reduce(d, f.group_order()), need(opt.i, "--i"), need(opt.N, "--N"),
                                                256, opt.seed, opt.workers));
    }
    if (w == "hx") return from_report(verify_hx_equivalence(need(opt.p, "--p"), need(opt.r, "--r"), need(opt.k, "--k"), opt.workers));
    if (w == "square-twist") return from_report(verify_square_twist(need(opt.p, "--p"), need(opt.k, "--k"), opt.workers));
    if (w == "frobenius-plus-x")
        return from_report(verify_frobenius_plus_x(need(opt.p, "--p"), need(opt.m, "--m"), need(opt.k, "--k"), opt.workers));
    if (w == "substitution")
        return from_report(verify_substitution_invariance(
            make_family(opt.id, {opt.p.value_or(2), need(opt.k, "--k"), 0}), 16, opt.seed, opt.workers));
    fail(Errc::InvalidArgument, "unknown check '" + w + "'");
}

Outcome weil_sum_cmd() {
    const Field f = build_requested_field();
    SparsePoly poly;
    if (opt.poly) {
        poly = parse_poly(f, *opt.poly);
    } else {
        poly = SparsePoly::monomial(f, f.one(), exponent_arg(&f));
        if (opt.u) poly = poly.plus(f, SparsePoly::monomial(f, parse_element(f, *opt.u), Natural(1)));
    }
    const auto res = weil_sum(f, poly, opt.workers);
    json rep{{"field", field_json(f)}, {"poly", poly.to_string(f)}, {"value", to_json(res.value)}, {"terms", res.terms}};
    if (auto v = res.value.as_integer()) rep["integer"] = *v;
    return {rep, true, "sum = " + res.value.to_string() + "\n"};
}

Outcome spectrum_cmd() {
    if (opt.m && !opt.p && !opt.n) {
        require(opt.exponent == "A" || opt.exponent == "B", Errc::InvalidArgument, "--exponent must be A or B");
        return from_report(verify_power_map(*opt.m, opt.exponent == "A" ? PowerExponent::A : PowerExponent::B, opt.workers));
    }
    const Field f = build_requested_field();
    const Natural d = exponent_arg(&f);
    const auto s = monomial_spectrum(f, d, opt.workers);
    json rep{{"field", field_json(f)}, {"n", f.n()}, {"d", d.str()}, {"spectrum", spectrum_json(s)}, {"max_delta", s.max_delta}};
    if (f.n() % 2 == 0) {
        std::map<std::uint64_t, std::uint64_t> sub;
        for (Element b : subfield_elements(f, f.n() / 2)) ++sub[s.at(b)];
        json j = json::object();
        for (auto [v, c] : sub) j[std::to_string(v)] = c;
        rep["subfield_deltas"] = j;
    }
    std::string text = "max delta = " + std::to_string(s.max_delta) + "\n";
    for (auto [v, c] : s.counts) text += "  delta " + std::to_string(v) + ": " + std::to_string(c) + " values of b\n";
    return {rep, true, text};
}

Outcome remark_table_cmd() {
    const auto t = delta6_solution_table(opt.m.value_or(5), opt.workers);
    json rep = solution_table_json(t);
    rep["field"] = field_json(*t.field);
    return {rep, t.report.ok(), solution_table_text(t)};
}

Outcome full_suite_cmd() {
    if (field_request()) build_requested_field();  // validates an explicit override up front
    const auto res = full_suite(opt.workers, opt.seed);
    return {res.to_json(), res.ok(), res.scoreboard()};
}

void emit(const std::string& command, const Outcome& out, std::ostream& os) {
    if (opt.format == "text") {
        os << (out.text.empty() ? out.report.dump(2) + "\n" : out.text);
        return;
    }
    json env{{"schema", report_schema}, {"command", command}, {"config", config_json(command)}, {"ok", out.ok}};
    env["report"] = out.report;
    os << env.dump(2) << "\n";
}

void add_common(CLI::App* c) {
    c->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--output", opt.output, "write the report to this path");
    c->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1u, 256u));
    c->add_option("--seed", opt.seed, "seed for sampled checks");
}

void add_field(CLI::App* c) {
    c->add_option("--p", opt.p, "characteristic");
    c->add_option("--n", opt.n, "extension degree");
    c->add_option("--modulus", opt.modulus, "monic modulus, coefficients low degree first");
    c->add_option("--field", opt.field_file, "JSON field spec file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-field verification of permutation polynomial families"};
    app.require_subcommand(1);

    auto* info = app.add_subcommand("field-info", "construct a field and print its modulus and generator");
    add_field(info);

    auto* fam = app.add_subcommand("verify-family", "verify one family instance exhaustively");
    fam->add_option("--id", opt.id, "family 1-7")->required()->check(CLI::Range(1, 7));
    fam->add_option("--p", opt.p);
    fam->add_option("--k", opt.k);
    fam->add_option("--m", opt.m);
    fam->add_option("--u", opt.u, "single u for families 6-7");

    auto* lem = app.add_subcommand("verify-lemmas", "character-sum and reduction checks");
    lem->add_option("--which", opt.which, "all, class2-trace, zero-sum, class4-even-log, closed-form, sum-reduction, hx, "
                                          "square-twist, frobenius-plus-x, substitution");
    add_field(lem);
    lem->add_option("--id", opt.id);
    lem->add_option("--k", opt.k);
    lem->add_option("--m", opt.m);
    lem->add_option("--r", opt.r);
    lem->add_option("--i", opt.i);
    lem->add_option("--N", opt.N);
    lem->add_option("--d", opt.d, "exponent (decimal or formula)");

    auto* ws = app.add_subcommand("weil-sum", "exact sum of chi(f(x)) over the field");
    add_field(ws);
    ws->add_option("--poly", opt.poly, "JSON term list");
    ws->add_option("--d", opt.d, "shorthand for x^d (+ u x with --u)");
    ws->add_option("--u", opt.u);

    auto* sp = app.add_subcommand("spectrum", "differential spectrum of x^d");
    add_field(sp);
    sp->add_option("--d", opt.d, "exponent (decimal or formula)");
    sp->add_option("--m", opt.m, "run the power-map check over F_{2^{2m}} instead");
    sp->add_option("--exponent", opt.exponent, "A: 2^{m+1}+3, B: 2^m+2^{(m+1)/2}+1");

    auto* rt = app.add_subcommand("remark-table", "solution table for a delta = 6 witness");
    rt->add_option("--m", opt.m, "odd m, field F_{2^{2m}} (default 5)");

    auto* fs = app.add_subcommand("full-suite", "run the whole desk-scale menu");
    add_field(fs);

    for (auto* c : {info, fam, lem, ws, sp, rt, fs}) add_common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            std::cerr << "error: cannot open " << opt.output << "\n";
            return 2;
        }
    }
    std::ostream& os = opt.output.empty() ? std::cout : file;

    try {
        Outcome out;
        if (command == "field-info") out = field_info();
        else if (command == "verify-family") out = verify_family_cmd();
        else if (command == "verify-lemmas") out = verify_lemmas_cmd();
        else if (command == "weil-sum") out = weil_sum_cmd();
        else if (command == "spectrum") out = spectrum_cmd();
        else if (command == "remark-table") out = remark_table_cmd();
        else out = full_suite_cmd();
        emit(command, out, os);
        return out.ok ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (opt.format == "json") {
            json env{{"schema", report_schema}, {"command", command}, {"config", config_json(command)}, {"ok", false}};
            env["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
            os << env.dump(2) << "\n";
        }
        return is_consistency_failure(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
