/**************************************************************************
 * selfdual.hpp
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

// Self-duality of TGRS codes.
//
// For n = 2k and h + t = k the code is self-dual when
//   (1) v_i^2 = lambda * u_i for one nonzero lambda and all i, and
//   (2) a_{n-m} = 0 for m = 1..t-1 and 2 - eta * a_{n-(2t-1)} = 0,
// with u_i and a_j as in parity.hpp. The converse is claimed for h >= t.
// In characteristic 2 condition (2) reads a_{n-(2t-1)} = a_{n-m} = 0.

#include <optional>
#include <string>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs::selfdual {

struct Verdict {
    bool matrix_self_dual = false;
    std::optional<Elem> cond1_lambda;
    bool cond2_coeffs_zero = false;
    bool cond2_eta = false;
    /// n = 2k, h + t = k, k >= 4, k - 1 + t <= n.
    bool theorem_applicable = false;
    /// n = 2k, h + t = k and h >= t (k >= 4 not required; see notes).
    bool converse_applicable = false;
    std::size_t defect_bound = 0;
    /// Any instance where the matrix test and the conditions disagree in a
    /// direction the applicable statements rule out, plus informational
    /// notes for k < 4.
    std::vector<std::string> notes;

    bool conditions_hold() const noexcept {
        return cond1_lambda.has_value() && cond2_coeffs_zero && cond2_eta;
    }
    /// True when no applicable statement is contradicted.
    bool consistent() const noexcept;
};

/// n == 2k and G * G^T == 0.
bool is_self_dual_matrix(const TgrsSpec& spec);

/// The common value v_i^2 / u_i, if there is one.
std::optional<Elem> common_lambda(const TgrsSpec& spec, std::span<const Elem> u);

Verdict theorem_conditions(const TgrsSpec& spec);

/// Throws Errc::wrong_characteristic outside characteristic 2.
bool char2_condition(const TgrsSpec& spec);

/// min{t, k - h, h + 1}.
std::size_t defect_bound(const TgrsSpec& spec);

}  // namespace tgrs::selfdual
