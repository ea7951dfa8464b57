/**************************************************************************
 * code.hpp
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
 * Twisted generalized Reed-Solomon codes.
 *
 * For 0 <= h < k, t >= 1 and eta != 0 the twisted space V(k, t, h, eta) is
 * spanned by x^i (i != h) together with x^h + eta * x^(k-1+t). Evaluating
 * it at distinct points alpha_1..alpha_n and scaling coordinate j by a
 * nonzero v_j gives the code C(alpha, v, t, h, eta) of length n and
 * dimension k.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgrs/exactalg.hpp"

namespace tgrs {

using gf::Elem;

struct TgrsSpec {
    gf::Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t h = 0;
    Elem eta = 0;
    std::vector<Elem> alpha;
    std::vector<Elem> v;
};

/// Throws an Error naming the first violated constraint:
/// length_mismatch, duplicate_evaluation_point, zero_column_multiplier,
/// zero_twist_coefficient, hook_out_of_range, twist_out_of_range or
/// twist_exceeds_length.
void validate_spec(const TgrsSpec& spec);

/// k polynomials; entry h is the twisted one.
std::vector<alg::Poly> twisted_basis(const TgrsSpec& spec);

/// k x n, entry (i, j) = v_j * basis_i(alpha_j).
alg::Matrix generator_matrix(const TgrsSpec& spec);

std::vector<Elem> encode(const TgrsSpec& spec, std::span<const Elem> message);

/// Default enumeration budget: 2^22 projective messages, or TGRS_MAX_ENUM
/// when that variable holds a positive integer.
std::uint64_t default_budget();
inline constexpr std::uint64_t kBuiltinBudget = std::uint64_t{1} << 22;

/// Exact minimum distance of the code generated by the rows of g, by
/// enumerating (q^k - 1)/(q - 1) projective messages. Throws
/// BudgetExceeded when that count exceeds `budget` and dimension_mismatch
/// when g lacks full row rank.
std::size_t min_distance(const alg::Matrix& g, std::uint64_t budget);

/// Exact minimum distance of the code with parity-check matrix h: the size
/// of the smallest linearly dependent column set. Throws BudgetExceeded when
/// more than `budget` column subsets would be needed.
std::size_t min_distance_from_parity(const alg::Matrix& h, std::uint64_t budget);

/// Minimum distance of the code generated by g, picking message enumeration
/// or the column method on `parity` (a parity-check matrix of the same code),
/// whichever fits the budget. Enumeration is tried first.
std::size_t code_distance(const alg::Matrix& g, const alg::Matrix& parity, std::uint64_t budget);

/// Basis of the dual code: nullspace(g).
alg::Matrix dual_basis(const alg::Matrix& g);

enum class Classification { mds, nmds, m_mds, unclassified };

struct CodeReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t d_dual = 0;
    std::size_t defect = 0;
    std::size_t defect_dual = 0;
    bool self_dual = false;
    std::optional<Elem> lambda;
    Classification classification = Classification::unclassified;
    std::vector<std::string> discrepancies;

    /// "MDS", "NMDS", "m-MDS(2)" or "unclassified(1,2)".
    std::string label() const;
};

/// Singleton defect n + 1 - k - d.
std::size_t singleton_defect(std::size_t n, std::size_t k, std::size_t d);

Classification classify(std::size_t defect, std::size_t defect_dual);

/// Computes d, d_dual, both defects, the self-dual verdict and lambda, and
/// records every broken expectation (twist bound, dual-distance window,
/// self-dual defect equality and bound) as a discrepancy string.
CodeReport analyze(const TgrsSpec& spec, std::uint64_t budget);

}  // namespace tgrs
