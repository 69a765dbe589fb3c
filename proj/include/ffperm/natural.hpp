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

#ifndef FFPERM_NATURAL_HPP
#define FFPERM_NATURAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace ffperm {

// Arbitrary-precision non-negative integer used for exponents.
using Natural = boost::multiprecision::cpp_int;

inline Natural natural_pow(const Natural& base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

inline std::uint64_t reduce(const Natural& e, std::uint64_t modulus) {
    return static_cast<std::uint64_t>(Natural(e % modulus));
}

inline Natural parse_natural(const std::string& s) {
    require(!s.empty(), Errc::ParseError, "empty integer literal");
    for (char c : s) require(c >= '0' && c <= '9', Errc::ParseError, "not a decimal natural: " + s);
    return Natural(s);
}

inline std::string to_decimal(const Natural& n) { return n.str(); }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Distinct prime divisors in increasing order, by trial division.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Inverse of a modulo m, when gcd(a, m) = 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    require(r == 1, Errc::InvalidArgument, "value not invertible modulo " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace ffperm

#endif
