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

#ifndef FFPERM_ERROR_HPP
#define FFPERM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffperm {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    NonMonic,
    FieldTooLarge,
    DivisionByZero,
    NotADivisor,
    LogOfZero,
    TableUnavailable,
    MixedPrimes,
    Overflow,
    ZeroCoefficient,
    FieldTooLargeForCharsumCheck,
    DiagramDoesNotCommute,
    NotSurjective,
    SizeMismatch,
    CoefficientsNotInSubfield,
    KDivisibleBy3,
    EvenM,
    ZeroU,
    NoValidS,
    Unsupported,
    ParameterContractViolated,
    NonIntegralDivision,
    ZeroDerivativeDirection,
    ZeroLeadingDirection,
    CriterionMismatch,
    OracleMismatch,
    PreconditionViolated,
    NoWitnessFound,
    InvalidArgument,
    ParseError,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NonMonic: return "NonMonic";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::LogOfZero: return "LogOfZero";
        case Errc::TableUnavailable: return "TableUnavailable";
        case Errc::MixedPrimes: return "MixedPrimes";
        case Errc::Overflow: return "Overflow";
        case Errc::ZeroCoefficient: return "ZeroCoefficient";
        case Errc::FieldTooLargeForCharsumCheck: return "FieldTooLargeForCharsumCheck";
        case Errc::DiagramDoesNotCommute: return "DiagramDoesNotCommute";
        case Errc::NotSurjective: return "NotSurjective";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::CoefficientsNotInSubfield: return "CoefficientsNotInSubfield";
        case Errc::KDivisibleBy3: return "KDivisibleBy3";
        case Errc::EvenM: return "EvenM";
        case Errc::ZeroU: return "ZeroU";
        case Errc::NoValidS: return "NoValidS";
        case Errc::Unsupported: return "Unsupported";
        case Errc::ParameterContractViolated: return "ParameterContractViolated";
        case Errc::NonIntegralDivision: return "NonIntegralDivision";
        case Errc::ZeroDerivativeDirection: return "ZeroDerivativeDirection";
        case Errc::ZeroLeadingDirection: return "ZeroLeadingDirection";
        case Errc::CriterionMismatch: return "CriterionMismatch";
        case Errc::OracleMismatch: return "OracleMismatch";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NoWitnessFound: return "NoWitnessFound";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Internal-consistency failures: two independent computations disagreed.
// Everything else is a bad input or parameter choice.
constexpr bool is_consistency_failure(Errc e) noexcept {
    return e == Errc::NonIntegralDivision || e == Errc::CriterionMismatch ||
           e == Errc::OracleMismatch || e == Errc::Overflow || e == Errc::NoWitnessFound;
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace ffperm

#endif
