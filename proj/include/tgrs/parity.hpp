/**************************************************************************
 * parity.hpp
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
 * Closed-form parity-check matrices of TGRS codes.
 *
 * Notation:
 *   u_j  = prod_{l != j} (alpha_j - alpha_l)^-1
 *   L_m  = sum_l u_l alpha_l^(n-1+m)     (L_m = 0 for 1-n <= m < 0, L_0 = 1)
 *   P(x) = prod_l (x - alpha_l) = x^n + a_{n-1} x^(n-1) + ... + a_0
 *
 * The L_m satisfy sum_{j=0}^{r} a_{n-j} L_{r-j} = 0 for r >= 1 (a_n = 1),
 * which is the recursion L_m = -a_{n-m} - sum_{j=1}^{m-1} a_{n-m+j} L_j.
 *
 * Both matrices share the layout
 *   rows 0 .. n-k-t-1     alpha_j^e
 *   row  n-k-t            the special row
 *   rows n-k-t+1 .. n-k-1 alpha_j^(n-(k+t-i)) - L_i alpha_j^(n-k-t), i = 1..t-1
 * with column j scaled by u_j / v_j.
 *
 * Special rows, with s = k+t-h-1:
 *   tilde:  alpha^(n-h-1) + sum_{m=1}^{k-h-1} c_m alpha^(n-h-1-m) + Lt alpha^(n-k-t)
 *           Lt = -eta^-1 (1 + eta L_s) - sum_{m=1}^{k-h-1} c_m L_{s-m}
 *   remark: alpha^(n-k-t) - eta (alpha^(n-h-1) + sum_{m=1}^{s} c_m alpha^(n-h-1-m))
 *
 * Coefficients::corrected takes c_m = a_{n-m}. Coefficients::printed takes
 * c_m = -L_m, the form usually quoted for these matrices; it agrees with the
 * corrected one whenever L_1 = ... = L_{m-1} = 0 for the m in use (so
 * always when k-h <= 2 for tilde and s <= 1 for remark), and can fail the
 * parity-check property otherwise.
 */

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs::parity {

using LMap = std::map<std::int64_t, Elem>;

/// Throws Errc::duplicate_evaluation_point when alpha repeats.
std::vector<Elem> vandermonde_weights(const gf::FieldCtx& field, std::span<const Elem> alpha);

/// Direct sums L_m for m in [lo, hi]. Requires lo >= 1 - n.
LMap l_values(const gf::FieldCtx& field, std::span<const Elem> alpha, std::span<const Elem> u,
              std::int64_t lo, std::int64_t hi);

/// L_0 .. L_{hi} from the coefficients of a monic P (a.back() == 1), using
/// only the recursion.
LMap l_values_recursive(const gf::FieldCtx& field, std::span<const Elem> a, std::int64_t hi);

struct ParityData {
    std::vector<Elem> u;
    LMap L;                 // m in [1-n, k+t]
    std::vector<Elem> a;    // coefficients of P, constant term first, a[n] = 1
};

ParityData parity_data(const TgrsSpec& spec);

enum class Coefficients { corrected, printed };

Elem l_tilde(const TgrsSpec& spec, const ParityData& pd, Coefficients coeffs);

alg::Matrix parity_check_tilde(const TgrsSpec& spec, Coefficients coeffs = Coefficients::corrected);
alg::Matrix parity_check_remark(const TgrsSpec& spec, Coefficients coeffs = Coefficients::corrected);

}  // namespace tgrs::parity
