/**************************************************************************
 * kernels.hpp
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

// Hot loops. Each kernel has a plain serial version, kept as the reference
// the tests compare against, and an OpenMP version used by the library.
// Parallel results never depend on the thread count: reductions are min or
// set union, and chunk boundaries are fixed by the input alone.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tgrs/exactalg.hpp"

namespace tgrs::kernels {

using gf::Elem;

alg::Matrix mat_mul_serial(const alg::Matrix& a, const alg::Matrix& b);
alg::Matrix mat_mul_parallel(const alg::Matrix& a, const alg::Matrix& b);

/// (q^k - 1) / (q - 1), saturating at UINT64_MAX.
std::uint64_t projective_count(std::uint64_t q, std::size_t k) noexcept;

/// Minimum Hamming weight over the nonzero codewords spanned by the rows of
/// g, visiting one message per projective class (leading nonzero entry 1).
/// Rows must be linearly independent; at least one row is required.
std::size_t min_weight_serial(const alg::Matrix& g);
std::size_t min_weight_parallel(const alg::Matrix& g);

/// Smallest w such that some w columns of h are linearly dependent, i.e. the
/// minimum distance of the code with parity-check matrix h. Returns
/// cols + 1 when every column set is independent. `max_subsets` bounds the
/// number of column subsets examined; nullopt means the bound was hit.
std::optional<std::size_t> min_dependent_columns(const alg::Matrix& h,
                                                 std::uint64_t max_subsets);

/// Elementary symmetric values e1, e2, e3 of one subset.
struct SubsetSums {
    Elem e1;
    Elem e2;
    Elem e3;
};

using SubsetValue = std::function<std::optional<Elem>(const SubsetSums&)>;

/// C(n, r), saturating.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept;

/// Marks value(sums(I)) for every r-subset I of `points`; the result has one
/// flag per packed field element. Subsets whose value is nullopt are skipped.
std::vector<char> collect_subset_values_serial(const gf::FieldCtx& field,
                                               std::span<const Elem> points, std::size_t r,
                                               const SubsetValue& value);
std::vector<char> collect_subset_values_parallel(const gf::FieldCtx& field,
                                                 std::span<const Elem> points, std::size_t r,
                                                 const SubsetValue& value);

}  // namespace tgrs::kernels
