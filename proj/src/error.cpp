/**************************************************************************
 * error.cpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "tgrs/error.hpp"

namespace tgrs {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::not_prime: return "not-prime";
        case Errc::non_monic_modulus: return "non-monic-modulus";
        case Errc::reducible_modulus: return "reducible-modulus";
        case Errc::no_default_modulus: return "no-default-modulus";
        case Errc::field_too_large: return "field-too-large";
        case Errc::context_mismatch: return "context-mismatch";
        case Errc::division_by_zero: return "division-by-zero";
        case Errc::negative_power_of_zero: return "negative-power-of-zero";
        case Errc::not_a_divisor: return "not-a-divisor";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::duplicate_roots: return "duplicate-roots";
        case Errc::repeated_root: return "repeated-root";
        case Errc::duplicate_evaluation_point: return "duplicate-evaluation-point";
        case Errc::zero_column_multiplier: return "zero-column-multiplier";
        case Errc::zero_twist_coefficient: return "zero-twist-coefficient";
        case Errc::hook_out_of_range: return "hook-out-of-range";
        case Errc::twist_out_of_range: return "twist-out-of-range";
        case Errc::twist_exceeds_length: return "twist-exceeds-length";
        case Errc::length_mismatch: return "length-mismatch";
        case Errc::budget_exceeded: return "budget-exceeded";
        case Errc::unsupported_twist: return "unsupported-twist";
        case Errc::wrong_characteristic: return "wrong-characteristic";
        case Errc::not_split: return "not-split";
        case Errc::construction_failed: return "construction-failed";
        case Errc::parse_error: return "parse-error";
    }
    return "unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error(Errc::budget_exceeded,
            "enumeration needs " + std::to_string(required) + " steps, budget is " +
                std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace tgrs
