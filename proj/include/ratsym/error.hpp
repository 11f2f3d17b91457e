/*
   Copyright 2026 The ratsym Authors

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

#ifndef RATSYM_ERROR_HPP
#define RATSYM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratsym {

enum class Errc {
    DivisionByZero,
    FieldMismatch,
    NotASubfield,
    IrrationalAngle,
    BothZero,
    ConvergenceFailure,
    ZeroMap,
    BadDegree,
    DegenerateSet,
    DegenerateTriple,
    TooManyCoincidences,
    NotAnInvolution,
    SearchBoundExceeded,
    NotAGroup,
    NotAnAutomorphism,
    OrderMismatch,
    FixedPointsNotInField,
    NotCanonical,
    ConditionViolation,
    OnHypersurface,
    ConsistencyViolation,
    SyntaxError,
    NonRationalExpression,
    InvalidArgument,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotASubfield: return "NotASubfield";
        case Errc::IrrationalAngle: return "IrrationalAngle";
        case Errc::BothZero: return "BothZero";
        case Errc::ConvergenceFailure: return "ConvergenceFailure";
        case Errc::ZeroMap: return "ZeroMap";
        case Errc::BadDegree: return "BadDegree";
        case Errc::DegenerateSet: return "DegenerateSet";
        case Errc::DegenerateTriple: return "DegenerateTriple";
        case Errc::TooManyCoincidences: return "TooManyCoincidences";
        case Errc::NotAnInvolution: return "NotAnInvolution";
        case Errc::SearchBoundExceeded: return "SearchBoundExceeded";
        case Errc::NotAGroup: return "NotAGroup";
        case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::FixedPointsNotInField: return "FixedPointsNotInField";
        case Errc::NotCanonical: return "NotCanonical";
        case Errc::ConditionViolation: return "ConditionViolation";
        case Errc::OnHypersurface: return "OnHypersurface";
        case Errc::ConsistencyViolation: return "ConsistencyViolation";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NonRationalExpression: return "NonRationalExpression";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `code()` names the failure.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace ratsym

#endif  // RATSYM_ERROR_HPP
