/**************************************************************************
 * analyze.cpp
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

#include <algorithm>

#include "tgrs/code.hpp"
#include "tgrs/selfdual.hpp"

namespace tgrs {

CodeReport analyze(const TgrsSpec& spec, std::uint64_t budget) {
    validate_spec(spec);
    const auto g = generator_matrix(spec);
    const auto dual = dual_basis(g);

    CodeReport r;
    r.n = spec.n;
    r.k = spec.k;
    r.d = code_distance(g, dual, budget);
    r.d_dual = code_distance(dual, g, budget);
    r.defect = singleton_defect(spec.n, spec.k, r.d);
    r.defect_dual = singleton_defect(spec.n, spec.n - spec.k, r.d_dual);
    r.classification = classify(r.defect, r.defect_dual);

    const auto verdict = selfdual::theorem_conditions(spec);
    r.self_dual = verdict.matrix_self_dual;
    r.lambda = verdict.cond1_lambda;

    auto& notes = r.discrepancies;
    if (r.defect > spec.t) {
        notes.push_back("defect " + std::to_string(r.defect) + " exceeds the twist " + std::to_string(spec.t));
    }
    const std::size_t lo = std::max(spec.h + 1, spec.k - spec.h);
    if (r.d_dual < lo || r.d_dual > spec.k + 1) {
        notes.push_back("dual distance " + std::to_string(r.d_dual) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(spec.k + 1) + "]");
    }
    if (r.self_dual) {
        if (r.defect != r.defect_dual) notes.push_back("self-dual code with unequal defects");
        if (r.defect > verdict.defect_bound) {
            notes.push_back("self-dual defect " + std::to_string(r.defect) + " exceeds the bound " +
                            std::to_string(verdict.defect_bound));
        }
    }
    if (!verdict.consistent()) notes.insert(notes.end(), verdict.notes.begin(), verdict.notes.end());
    return r;
}

}  // namespace tgrs
