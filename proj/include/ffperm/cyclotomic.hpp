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

#ifndef FFPERM_CYCLOTOMIC_HPP
#define FFPERM_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace ffperm {

/// Exact element of Z[zeta_p], held as sum_j c_j zeta^j over the basis
/// {1, zeta, ..., zeta^{p-2}}. The top coordinate c_{p-1} is always 0, which
/// makes the representation unique (1 + zeta + ... + zeta^{p-1} = 0).
class CycInt {
   public:
    explicit CycInt(std::uint32_t p) : p_(p), c_(p, 0) {
        require(p >= 2, Errc::InvalidArgument, "cyclotomic prime must be >= 2");
    }

    static CycInt integer(std::uint32_t p, std::int64_t v) {
        CycInt r(p);
        r.c_[0] = v;
        return r;
    }

    /// zeta_p^j, j taken mod p.
    static CycInt root_power(std::uint32_t p, std::int64_t j) {
        CycInt r(p);
        const auto pp = static_cast<std::int64_t>(p);
        r.c_[static_cast<std::size_t>(((j % pp) + pp) % pp)] = 1;
        r.canonicalize();
        return r;
    }

    /// sum_j counts[j] * zeta^j.
    static CycInt from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
        require(counts.size() == p, Errc::SizeMismatch, "need one count per residue");
        CycInt r(p);
        for (std::uint32_t j = 0; j < p; ++j) r.c_[j] = counts[j];
        r.canonicalize();
        return r;
    }

    std::uint32_t prime() const noexcept { return p_; }
    const std::vector<std::int64_t>& coords() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (auto v : c_)
            if (v) return false;
        return true;
    }

    std::optional<std::int64_t> as_integer() const noexcept {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (c_[j]) return std::nullopt;
        return c_[0];
    }

    CycInt& operator+=(const CycInt& o) {
        same_prime(o);
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_add(c_[j], o.c_[j]);
        return *this;
    }

    CycInt& operator-=(const CycInt& o) {
        same_prime(o);
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_add(c_[j], checked_mul(o.c_[j], -1));
        return *this;
    }

    CycInt operator-() const { return scale(-1); }

    CycInt scale(std::int64_t k) const {
        CycInt r = *this;
        for (auto& v : r.c_) v = checked_mul(v, k);
        return r;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.same_prime(b);
        const std::size_t p = a.p_;
        CycInt r(a.p_);
        for (std::size_t i = 0; i < p; ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < p; ++j) {
                if (!b.c_[j]) continue;
                auto& slot = r.c_[(i + j) % p];
                slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
            }
        }
        r.canonicalize();
        return r;
    }

    /// Exact division by a nonzero integer. Since the basis is integral, a
    /// value is divisible by k in Z[zeta] iff every coordinate is.
    CycInt divide_exact(std::int64_t k) const {
        require(k != 0, Errc::DivisionByZero, "division of cyclotomic integer by 0");
        CycInt r = *this;
        for (auto& v : r.c_) {
            require(v % k == 0, Errc::NonIntegralDivision,
                    to_string() + " is not divisible by " + std::to_string(k));
            v /= k;
        }
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t j = 0; j + 1 < c_.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(c_[j]);
        }
        return s + "]";
    }

    friend bool operator==(const CycInt& a, const CycInt& b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

   private:
    void canonicalize() {
        const std::int64_t top = c_.back();
        if (!top) return;
        for (auto& v : c_) v = checked_add(v, checked_mul(top, -1));
    }

    void same_prime(const CycInt& o) const {
        require(p_ == o.p_, Errc::MixedPrimes,
                "cannot combine Z[zeta_" + std::to_string(p_) + "] with Z[zeta_" + std::to_string(o.p_) + "]");
    }

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        require(!__builtin_add_overflow(a, b, &r), Errc::Overflow, "cyclotomic coordinate overflow");
        return r;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        require(!__builtin_mul_overflow(a, b, &r), Errc::Overflow, "cyclotomic coordinate overflow");
        return r;
    }

    std::uint32_t p_;
    std::vector<std::int64_t> c_;
};

}  // namespace ffperm

#endif
