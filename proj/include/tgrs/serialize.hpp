/**************************************************************************
 * serialize.hpp
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

// Canonical documents. Field elements are base-p packed integers, the
// modulus travels with every document, keys are sorted, and nothing is a
// float, so parse followed by dump reproduces a canonical file byte for byte.
//
// Spec document:
//   {"alpha": [...], "eta": 2,
//    "field": {"m": 4, "modulus": [1, 1, 0, 0, 1], "p": 2},
//    "h": 1, "k": 2, "metadata": {...}, "n": 4, "t": 1, "v": [...]}
//
// Matrix text form: "rows cols" on the first line, then one row per line.

#include <map>
#include <string>

#include "tgrs/code.hpp"

namespace tgrs::io {

struct SpecDocument {
    TgrsSpec spec;
    /// Free-form provenance (construction family, mode, parameters). Omitted
    /// from the document when empty.
    std::map<std::string, std::string> metadata;
};

/// Canonical JSON, two-space indent, trailing newline.
std::string dump_spec(const SpecDocument& doc);

/// Throws Error(parse_error) on malformed JSON, missing or mistyped keys,
/// an invalid field descriptor, element values >= q, or list lengths that
/// disagree with n. TgrsSpec invariants (distinct alpha, ranges) are left to
/// validate_spec so callers can report them separately.
SpecDocument parse_spec(const std::string& text);

std::string dump_matrix_text(const alg::Matrix& m);
std::string dump_matrix_json(const alg::Matrix& m);
alg::Matrix parse_matrix_text(const gf::Field& field, const std::string& text);
alg::Matrix parse_matrix_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tgrs::io
