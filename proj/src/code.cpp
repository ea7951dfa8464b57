/**************************************************************************
 * code.cpp
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

#include "tgrs/code.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "tgrs/error.hpp"
#include "tgrs/kernels.hpp"

namespace tgrs {

namespace {

using u64 = std::uint64_t;

std::string idx(std::size_t i) { return std::to_string(i); }

/// Column subsets examined by the dependent-column search in the worst case.
u64 column_search_size(std::size_t n, std::size_t max_w) {
    u64 total = 0;
    for (std::size_t w = 1; w <= std::min(n, max_w); ++w) {
        const u64 c = kernels::binomial(n, w);
        if (total > std::numeric_limits<u64>::max() - c) return std::numeric_limits<u64>::max();
        total += c;
    }
    return total;
}

u64 saturating_mul(u64 a, u64 b) {
    if (a != 0 && b > std::numeric_limits<u64>::max() / a) return std::numeric_limits<u64>::max();
    return a * b;
}

}  // namespace

void validate_spec(const TgrsSpec& s) {
    if (!s.field) throw Error(Errc::invalid_argument, "spec has no field");
    const auto& f = *s.field;
    if (s.alpha.size() != s.n) {
        throw Error(Errc::length_mismatch, "alpha has " + idx(s.alpha.size()) + " entries, n = " + idx(s.n));
    }
    if (s.v.size() != s.n) {
        throw Error(Errc::length_mismatch, "v has " + idx(s.v.size()) + " entries, n = " + idx(s.n));
    }
    for (std::size_t i = 0; i < s.n; ++i) {
        if (!f.contains(s.alpha[i]) || !f.contains(s.v[i])) {
            throw Error(Errc::invalid_argument, "entry " + idx(i) + " lies outside " + f.describe());
        }
    }
    if (!f.contains(s.eta)) throw Error(Errc::invalid_argument, "eta lies outside " + f.describe());
    for (std::size_t i = 0; i < s.n; ++i) {
        for (std::size_t j = i + 1; j < s.n; ++j) {
            if (s.alpha[i] == s.alpha[j]) {
                throw Error(Errc::duplicate_evaluation_point,
                            "alpha[" + idx(i) + "] == alpha[" + idx(j) + "]");
            }
        }
    }
    for (std::size_t i = 0; i < s.n; ++i) {
        if (s.v[i] == 0) throw Error(Errc::zero_column_multiplier, "v[" + idx(i) + "] is zero");
    }
    if (s.eta == 0) throw Error(Errc::zero_twist_coefficient, "eta is zero");
    if (s.k == 0 || s.h >= s.k || s.k >= s.n) {
        throw Error(Errc::hook_out_of_range,
                    "need 0 <= h < k < n, got h=" + idx(s.h) + " k=" + idx(s.k) + " n=" + idx(s.n));
    }
    if (s.t == 0) throw Error(Errc::twist_out_of_range, "twist must be >= 1");
    if (s.k + s.t > s.n) {
        throw Error(Errc::twist_exceeds_length,
                    "k + t = " + idx(s.k + s.t) + " exceeds n = " + idx(s.n));
    }
}

std::vector<alg::Poly> twisted_basis(const TgrsSpec& s) {
    validate_spec(s);
    std::vector<alg::Poly> out;
    out.reserve(s.k);
    for (std::size_t i = 0; i < s.k; ++i) {
        auto p = alg::Poly::monomial(s.field, 1, i);
        if (i == s.h) p = p + alg::Poly::monomial(s.field, s.eta, s.k - 1 + s.t);
        out.push_back(std::move(p));
    }
    return out;
}

alg::Matrix generator_matrix(const TgrsSpec& s) {
    const auto basis = twisted_basis(s);
    const auto& f = *s.field;
    alg::Matrix g(s.field, s.k, s.n);
    for (std::size_t i = 0; i < s.k; ++i) {
        for (std::size_t j = 0; j < s.n; ++j) g(i, j) = f.mul(s.v[j], basis[i].eval(s.alpha[j]));
    }
    return g;
}

std::vector<Elem> encode(const TgrsSpec& s, std::span<const Elem> message) {
    if (message.size() != s.k) {
        throw Error(Errc::length_mismatch, "message has " + idx(message.size()) + " symbols, k = " + idx(s.k));
    }
    const auto g = generator_matrix(s);
    const auto& f = *s.field;
    std::vector<Elem> out(s.n, 0);
    for (std::size_t i = 0; i < s.k; ++i) {
        if (!f.contains(message[i])) throw Error(Errc::invalid_argument, "message symbol outside the field");
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < s.n; ++j) out[j] = f.add(out[j], f.mul(message[i], g(i, j)));
    }
    return out;
}

std::uint64_t default_budget() {
    const char* env = std::getenv("TGRS_MAX_ENUM");
    if (env == nullptr) return kBuiltinBudget;
    u64 value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) return kBuiltinBudget;
    return value;
}

std::size_t min_distance(const alg::Matrix& g, std::uint64_t budget) {
    if (g.rows() == 0) throw Error(Errc::dimension_mismatch, "generator has no rows");
    if (alg::rank(g) != g.rows()) throw Error(Errc::dimension_mismatch, "generator lacks full row rank");
    const u64 need = kernels::projective_count(g.field()->order(), g.rows());
    if (need > budget) throw BudgetExceeded(need, budget);
    return kernels::min_weight_parallel(g);
}

std::size_t min_distance_from_parity(const alg::Matrix& h, std::uint64_t budget) {
    const u64 worst = column_search_size(h.cols(), alg::rank(h));
    auto d = kernels::min_dependent_columns(h, budget);
    if (!d) throw BudgetExceeded(worst, budget);
    return *d;
}

std::size_t code_distance(const alg::Matrix& g, const alg::Matrix& parity, std::uint64_t budget) {
    const u64 q = g.field()->order();
    const u64 by_messages = kernels::projective_count(q, g.rows());
    const u64 by_columns = column_search_size(parity.cols(), parity.rows());
    // rough cost per unit: one codeword is ~n field ops, one subset is a
    // small elimination of ~rows * w^2 ops
    const u64 cost_messages = saturating_mul(by_messages, g.cols());
    const u64 cost_columns = saturating_mul(by_columns, saturating_mul(parity.rows() + 1, parity.rows() + 1));
    const bool messages_fit = by_messages <= budget;
    if (messages_fit && (cost_messages <= cost_columns || parity.rows() == 0)) return min_distance(g, budget);
    if (parity.rows() == 0) throw BudgetExceeded(by_messages, budget);
    auto d = kernels::min_dependent_columns(parity, budget);
    if (d) return *d;
    if (messages_fit) return min_distance(g, budget);
    throw BudgetExceeded(std::min(by_messages, by_columns), budget);
}

alg::Matrix dual_basis(const alg::Matrix& g) { return alg::nullspace(g); }

std::size_t singleton_defect(std::size_t n, std::size_t k, std::size_t d) {
    return n + 1 - k - d;
}

Classification classify(std::size_t defect, std::size_t defect_dual) {
    if (defect == 0) return Classification::mds;
    if (defect != defect_dual) return Classification::unclassified;
    return defect == 1 ? Classification::nmds : Classification::m_mds;
}

std::string CodeReport::label() const {
    switch (classification) {
        case Classification::mds: return "MDS";
        case Classification::nmds: return "NMDS";
        case Classification::m_mds: return "m-MDS(" + std::to_string(defect) + ")";
        case Classification::unclassified: break;
    }
    return "unclassified(" + std::to_string(defect) + "," + std::to_string(defect_dual) + ")";
}

}  // namespace tgrs
