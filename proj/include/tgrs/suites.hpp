/**************************************************************************
 * suites.hpp
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

// Seeded verification suites. Every report is a pure function of
// (suite, seed, budget): no timings, no thread counts, no addresses.
//
//   1  parity          G H~^T = 0, rank n-k, H~ spans C-perp (sweep)
//   2  remark          H and H~ have the same row space (sweep)
//   3  power-sums      Vandermonde identity, direct vs recursive L_m, L_{2s-1}
//   4  constructions   the five families in corrected mode are self-dual
//   5  converse        matrix self-duality <=> conditions (1) and (2)
//   6  defect-bound    S(C) = S(C-perp) <= min{t, k-h, h+1} when self-dual
//   7  eta-oracle      predicted defect = brute-force defect
//   8  gf5-example     recorded GF(5) set values against both conventions
//   9  subfield-mds    alpha = GF(4) in GF(16), eta outside: MDS
//  10  dual-distance   max{h+1, k-h} <= d(C-perp) <= k+1 (sweep)
//  11  determinism     suites 1..10 rerun with another thread count

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs::suites {

inline constexpr int kSuiteCount = 11;
inline constexpr std::uint64_t kDefaultSeed = 20260415;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = kBuiltinBudget;
};

struct Report {
    int id = 0;
    std::string name;
    std::string title;
    bool passed = false;
    /// Ordered counters, e.g. {"specs", 3393}, {"failures", 0}.
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<std::string> notes;

    std::uint64_t count(const std::string& key) const;
    /// "key=value key=value ..." over the counters.
    std::string summary() const;
    std::string to_text() const;
    std::string to_json() const;
};

/// Short names as listed above; throws Errc::invalid_argument for unknown.
int suite_id(const std::string& name);
std::string suite_name(int id);

Report run(int id, const Options& options);

/// Suite 11 against reports already produced with `options`, so callers
/// that ran 1..10 do not pay for them twice.
Report determinism(const std::vector<Report>& first_run, const Options& options);

}  // namespace tgrs::suites
