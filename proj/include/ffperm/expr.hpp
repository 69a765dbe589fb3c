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

#ifndef FFPERM_EXPR_HPP
#define FFPERM_EXPR_HPP

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "error.hpp"
#include "natural.hpp"

namespace ffperm {

// Integer expressions for exponents: + - * / ^, parentheses, decimal
// literals and named variables ("2^(2*k)+2^k+1" with k bound). '/' must
// divide exactly, '^' is right associative, the result must be >= 0.
class ExprParser {
public:
    using Vars = std::map<std::string, Natural, std::less<>>;

    static Natural evaluate(std::string_view text, const Vars& vars = {}) {
        ExprParser ps(text, vars);
        Natural v = ps.sum();
        ps.skip();
        if (ps.pos_ != ps.text_.size()) ps.error("unexpected '" + std::string(1, ps.text_[ps.pos_]) + "'");
        if (v < 0) ps.error("negative exponent");
        return v;
    }

private:
    ExprParser(std::string_view text, const Vars& vars) : text_(text), vars_(vars) {}

    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::ParseError, "expression '" + std::string(text_) + "': " + what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Natural sum() {
        Natural v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }

    Natural product() {
        Natural v = power();
        for (;;) {
            if (eat('*')) {
                v *= power();
            } else if (eat('/')) {
                const Natural r = power();
                if (r == 0) error("division by zero");
                if (v % r != 0) error("inexact division");
                v /= r;
            } else {
                return v;
            }
        }
    }

    Natural power() {
        Natural base = unary();
        if (!eat('^')) return base;
        const Natural e = power();
        if (e < 0) error("negative power");
        if (e > 1u << 20) error("power too large");
        Natural out = 1;
        for (unsigned i = 0, n = e.convert_to<unsigned>(); i < n; ++i) out *= base;
        return out;
    }

    Natural unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }

    Natural primary() {
        skip();
        if (eat('(')) {
            Natural v = sum();
            if (!eat(')')) error("missing ')'");
            return v;
        }
        const std::size_t start = pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Natural(std::string(text_.substr(start, pos_ - start)));
        }
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) error(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
        const auto name = text_.substr(start, pos_ - start);
        auto it = vars_.find(name);
        if (it == vars_.end()) error("unknown variable '" + std::string(name) + "'");
        return it->second;
    }

    std::string_view text_;
    const Vars& vars_;
    std::size_t pos_ = 0;
};

inline Natural parse_exponent(std::string_view text, const ExprParser::Vars& vars = {}) {
    return ExprParser::evaluate(text, vars);
}

}  // namespace ffperm

#endif
