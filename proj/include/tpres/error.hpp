/*
   Copyright 2026 The tpres Authors

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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpres {

enum class errc {
    division_by_zero,
    field_mismatch,
    parse_error,
    not_a_residue,
    both_zero,
    wrong_field,
    zero_polynomial,
    characteristic_too_small,
    length_mismatch,
    singular,
    not_square,
    zero_ratio,
    zero_scale,
    invalid_spec,
    not_toeplitz,
    not_toeplitz_closed,
    too_small,
    not_canonical,
    infinite_field,
    budget_exceeded,
    invalid_argument,
};

inline std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::parse_error: return "ParseError";
        case errc::not_a_residue: return "NotAResidue";
        case errc::both_zero: return "BothZero";
        case errc::wrong_field: return "WrongField";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::characteristic_too_small: return "CharacteristicTooSmall";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::singular: return "Singular";
        case errc::not_square: return "NotSquare";
        case errc::zero_ratio: return "ZeroRatio";
        case errc::zero_scale: return "ZeroScale";
        case errc::invalid_spec: return "InvalidSpec";
        case errc::not_toeplitz: return "NotToeplitz";
        case errc::not_toeplitz_closed: return "NotToeplitzClosed";
        case errc::too_small: return "TooSmall";
        case errc::not_canonical: return "NotCanonical";
        case errc::infinite_field: return "InfiniteField";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` distinguishes the cause.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

}  // namespace tpres
