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

#ifndef FFPERM_LITERAL_HPP
#define FFPERM_LITERAL_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "expr.hpp"
#include "field.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace ffperm {

// Text formats shared by the CLI and JSON inputs:
//   element      "w^j" or "j"  (power of the generator), "0" is w^0 = 1,
//                "[c0,c1,...]" (coefficients, low degree first), "zero"
//   polynomial   [{"coef": <element>, "exp": "<decimal or formula>"}, ...]
//   modulus      "[1,0,1]" or "1,0,1", low degree first, monic

namespace detail {

inline json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::ParseError, what + ": " + e.what());
    }
}

inline std::vector<std::uint32_t> coefficient_vector(const json& j, const std::string& what) {
    require(j.is_array(), Errc::ParseError, what + " must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& c : j) {
        require(c.is_number_unsigned() || (c.is_number_integer() && c.get<std::int64_t>() >= 0), Errc::ParseError,
                what + " entries must be non-negative integers");
        out.push_back(c.get<std::uint32_t>());
    }
    return out;
}

// p, n and q of the field, for exponent formulas
inline ExprParser::Vars field_vars(const Field& f) {
    return {{"p", Natural(f.p())}, {"n", Natural(f.n())}, {"q", Natural(f.q())}};
}

}  // namespace detail

inline std::vector<std::uint32_t> parse_modulus(std::string text) {
    if (text.empty() || text.front() != '[') text = "[" + text + "]";
    return detail::coefficient_vector(detail::parse_json_text(text, "modulus"), "modulus");
}

inline Element element_from_coeffs(const Field& f, const std::vector<std::uint32_t>& c) {
    require(c.size() <= f.n(), Errc::ParseError, "too many coefficients for F_{p^n}");
    for (auto v : c) require(v < f.p(), Errc::ParseError, "coefficient out of range");
    std::vector<std::uint32_t> full(c);
    full.resize(f.n(), 0);
    return f.from_coeffs(full);
}

inline Element parse_element(const Field& f, const json& j) {
    if (j.is_array()) return element_from_coeffs(f, detail::coefficient_vector(j, "element"));
    if (j.is_number_integer()) {
        require(j.get<std::int64_t>() >= 0, Errc::ParseError, "log must be non-negative");
        return f.exp(j.get<std::uint64_t>() % f.group_order());
    }
    require(j.is_string(), Errc::ParseError, "element must be a string, integer or array");
    std::string s = j.get<std::string>();
    if (s == "zero") return f.zero();
    if (!s.empty() && s.front() == '[')
        return element_from_coeffs(f, detail::coefficient_vector(detail::parse_json_text(s, "element"), "element"));
    if (s.rfind("w^", 0) == 0) s = s.substr(2);
    const Natural e = parse_exponent(s, detail::field_vars(f));
    return f.exp(reduce(e, f.group_order()));
}

inline Element parse_element(const Field& f, const std::string& text) { return parse_element(f, json(text)); }
inline Element parse_element(const Field& f, const char* text) { return parse_element(f, json(text)); }

inline SparsePoly parse_poly(const Field& f, const std::string& text) {
    const json j = detail::parse_json_text(text, "polynomial");
    require(j.is_array(), Errc::ParseError, "polynomial must be a list of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        require(t.is_object() && t.contains("coef") && t.contains("exp"), Errc::ParseError,
                "each term needs \"coef\" and \"exp\"");
        const auto& e = t.at("exp");
        require(e.is_string() || e.is_number_unsigned(), Errc::ParseError, "exp must be a string or natural");
        const Natural exp = e.is_string() ? parse_exponent(e.get<std::string>(), detail::field_vars(f))
                                          : Natural(e.get<std::uint64_t>());
        terms.push_back({parse_element(f, t.at("coef")), exp});
    }
    return SparsePoly{f, std::move(terms)};
}

struct FieldFile {
    std::uint32_t p = 0;
    unsigned n = 0;
    std::optional<std::vector<std::uint32_t>> modulus;
};

inline FieldFile parse_field_file(const std::string& text) {
    const json j = detail::parse_json_text(text, "field spec");
    require(j.is_object() && j.contains("p") && j.contains("n"), Errc::ParseError, "field spec needs \"p\" and \"n\"");
    FieldFile out;
    try {
        out.p = j.at("p").get<std::uint32_t>();
        out.n = j.at("n").get<unsigned>();
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("field spec: ") + e.what());
    }
    if (j.contains("modulus")) out.modulus = detail::coefficient_vector(j.at("modulus"), "modulus");
    return out;
}

inline FieldFile load_field_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), Errc::InvalidArgument, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_field_file(buf.str());
}

}  // namespace ffperm

#endif
