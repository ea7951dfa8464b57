/**************************************************************************
 * constructions.hpp
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

/*
 * Five families of self-dual TGRS codes.
 *
 *   subfield-char2     alpha = GF(2^s) inside GF(2^m), n = 2^s, k = 2^(s-1),
 *                      h = k - t
 *   basis-subset       alpha = span{w_1..w_l} plus an l1-element tail built
 *                      from w_(l+1)..; t = 1, h = k - 1; w_i = x^(i-1)
 *   splitting-char2    alpha = roots of x^(2l) + b x + c, v = 1, k = l,
 *                      h = l - t
 *   splitting-oddchar  alpha = roots of x^(2lp) + b x^(2lp-(2t-1)) + c,
 *                      v_i = alpha_i^-(lp-t), eta = 2/b, k = lp, h = lp - t
 *   affine-shift       alpha = {beta + a : a in GF(p^s)*}, t = 1,
 *                      k = (p^s - 1)/2, h = k - 1
 *
 * Mode::paper_literal uses the column multipliers (and for affine-shift the
 * eta) exactly as usually printed for these families:
 *   subfield-char2, basis-subset: v_i = sum_{j != i} (alpha_i - alpha_j)^-(2^(m-1))
 *   affine-shift:                 v_i^2 = -alpha_i, eta = -2/beta
 * Mode::corrected instead solves v_i^2 = lambda * u_i and, for affine-shift,
 * uses eta = 2/beta (there a_(n-1) = beta). The two splitting families are
 * the same in both modes.
 *
 * Corrected results are always verified self-dual; a failure throws
 * ConstructionError. Paper-literal results report their verdict and notes,
 * and throw only when the recipe cannot produce a valid spec (zero v, missing
 * square root).
 */

#include <optional>
#include <string>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs::constructions {

enum class Mode { paper_literal, corrected };

std::string mode_name(Mode m);

struct ConstructionResult {
    TgrsSpec spec;
    Mode mode = Mode::corrected;
    std::string family;
    bool verified_self_dual = false;
    std::vector<std::string> notes;
};

/// A lambda and v with v_i^2 = lambda * u_i, trying lambda = 1 and then the
/// smallest non-residue (odd characteristic). nullopt when neither works.
struct SolvedMultipliers {
    Elem lambda;
    std::vector<Elem> v;
};
std::optional<SolvedMultipliers> solve_multipliers(const gf::FieldCtx& field, std::span<const Elem> u);

ConstructionResult build_subfield_char2(unsigned s, unsigned m, std::size_t t, Elem eta, Mode mode);

/// variant 1 ignores l1.
ConstructionResult build_basis_subset_char2(unsigned m, unsigned l, int variant, unsigned l1, Elem eta,
                                            Mode mode);

/// b, c are packed in GF(2^lambda_exp); eta is packed in the splitting field.
ConstructionResult build_splitting_char2(unsigned lambda_exp, std::size_t l, std::size_t t, Elem b, Elem c,
                                         Elem eta, Mode mode);

/// b, c are packed in GF(p^lambda_exp).
ConstructionResult build_splitting_oddchar(std::uint64_t p, unsigned lambda_exp, std::size_t l, std::size_t t,
                                           Elem b, Elem c, Mode mode);

/// beta packed in GF(p^m); nullopt picks the smallest element outside GF(p^s).
ConstructionResult build_affine_shift_oddchar(std::uint64_t p, unsigned s, unsigned m, std::optional<Elem> beta,
                                              Mode mode);

}  // namespace tgrs::constructions
