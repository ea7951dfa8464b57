/**************************************************************************
 * error.hpp
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tgrs {

enum class Errc {
    invalid_argument,
    not_prime,
    non_monic_modulus,
    reducible_modulus,
    no_default_modulus,
    field_too_large,
    context_mismatch,
    division_by_zero,
    negative_power_of_zero,
    not_a_divisor,
    dimension_mismatch,
    duplicate_roots,
    repeated_root,
    duplicate_evaluation_point,
    zero_column_multiplier,
    zero_twist_coefficient,
    hook_out_of_range,
    twist_out_of_range,
    twist_exceeds_length,
    length_mismatch,
    budget_exceeded,
    unsupported_twist,
    wrong_characteristic,
    not_split,
    construction_failed,
    parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Thrown when an exhaustive enumeration would exceed the caller's budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// A construction that could not produce a valid code. The notes carry the
/// per-index evidence (which v entry vanished, which square root is missing).
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& what, std::vector<std::string> notes)
        : Error(Errc::construction_failed, what), notes_(std::move(notes)) {}

    const std::vector<std::string>& notes() const noexcept { return notes_; }

private:
    std::vector<std::string> notes_;
};

}  // namespace tgrs
