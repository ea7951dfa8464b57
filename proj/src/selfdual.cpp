/**************************************************************************
 * selfdual.cpp
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

#include "tgrs/selfdual.hpp"

#include <algorithm>

#include "tgrs/error.hpp"
#include "tgrs/parity.hpp"

namespace tgrs::selfdual {

namespace {

/// a_{n-j}, zero when n - j falls below 0.
Elem top_coeff(const std::vector<Elem>& a, std::size_t j) {
    const std::size_t n = a.size() - 1;
    return j <= n ? a[n - j] : 0;
}

bool leading_coeffs_vanish(const std::vector<Elem>& a, std::size_t t) {
    for (std::size_t m = 1; m < t; ++m) {
        if (top_coeff(a, m) != 0) return false;
    }
    return true;
}

}  // namespace

bool Verdict::consistent() const noexcept {
    if (theorem_applicable && conditions_hold() && !matrix_self_dual) return false;
    if (converse_applicable && matrix_self_dual && !conditions_hold()) return false;
    return true;
}

bool is_self_dual_matrix(const TgrsSpec& s) {
    validate_spec(s);
    if (s.n != 2 * s.k) return false;
    const auto g = generator_matrix(s);
    return alg::mul_transpose(g, g).is_zero();
}

std::optional<Elem> common_lambda(const TgrsSpec& s, std::span<const Elem> u) {
    const auto& f = *s.field;
    std::optional<Elem> lambda;
    for (std::size_t i = 0; i < s.n; ++i) {
        const Elem ratio = f.div(f.mul(s.v[i], s.v[i]), u[i]);
        if (!lambda) {
            lambda = ratio;
        } else if (*lambda != ratio) {
            return std::nullopt;
        }
    }
    return lambda;
}

Verdict theorem_conditions(const TgrsSpec& s) {
    validate_spec(s);
    const auto& f = *s.field;
    Verdict out;
    out.matrix_self_dual = is_self_dual_matrix(s);
    const auto u = parity::vandermonde_weights(f, s.alpha);
    const auto a = alg::poly_from_roots(s.field, s.alpha).coeffs();
    out.cond1_lambda = common_lambda(s, u);
    out.cond2_coeffs_zero = leading_coeffs_vanish(a, s.t);
    out.cond2_eta = f.sub(f.from_int(2), f.mul(s.eta, top_coeff(a, 2 * s.t - 1))) == 0;

    const bool shape = s.n == 2 * s.k && s.h + s.t == s.k;
    out.theorem_applicable = shape && s.k >= 4 && s.k - 1 + s.t <= s.n;
    out.converse_applicable = shape && s.h >= s.t;
    out.defect_bound = defect_bound(s);

    if (shape && out.conditions_hold() && !out.matrix_self_dual) {
        out.notes.push_back(out.theorem_applicable
                                ? "conditions (1) and (2) hold but G * G^T != 0"
                                : "conditions hold but G * G^T != 0 (k < 4, outside the stated range)");
    }
    if (shape && out.matrix_self_dual && !out.conditions_hold()) {
        out.notes.push_back(out.converse_applicable
                                ? "self-dual but conditions (1) and (2) do not both hold"
                                : "self-dual without the conditions (h < t, converse not claimed)");
    }
    return out;
}

bool char2_condition(const TgrsSpec& s) {
    validate_spec(s);
    if (!s.field->is_char2()) {
        throw Error(Errc::wrong_characteristic, "the characteristic-2 form needs " + s.field->describe() +
                                                    " to have characteristic 2");
    }
    const auto a = alg::poly_from_roots(s.field, s.alpha).coeffs();
    return leading_coeffs_vanish(a, s.t) && top_coeff(a, 2 * s.t - 1) == 0;
}

std::size_t defect_bound(const TgrsSpec& s) {
    return std::min({s.t, s.k - s.h, s.h + 1});
}

}  // namespace tgrs::selfdual
