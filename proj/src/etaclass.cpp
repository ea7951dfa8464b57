/**************************************************************************
 * etaclass.cpp
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

#include "tgrs/etaclass.hpp"

#include <algorithm>

#include "tgrs/error.hpp"
#include "tgrs/kernels.hpp"

namespace tgrs::etaclass {

namespace {

using kernels::SubsetSums;

std::vector<Elem> collect(const gf::FieldCtx& f, std::span<const Elem> alpha, std::size_t r,
                          std::uint64_t budget, const kernels::SubsetValue& value) {
    const auto count = kernels::binomial(alpha.size(), r);
    if (count > budget) throw BudgetExceeded(count, budget);
    const auto hits = kernels::collect_subset_values_parallel(f, alpha, r, value);
    std::vector<Elem> out;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i]) out.push_back(static_cast<Elem>(i));
    }
    return out;
}

bool contains(const std::vector<Elem>& set, Elem x) {
    return std::binary_search(set.begin(), set.end(), x);
}

std::string format_set(const std::vector<Elem>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::size_t predict(std::size_t t, Elem eta_inv, const EtaSets& sets) {
    if (t == 1) return contains(sets.s1, eta_inv) ? 1 : 0;
    if (!contains(sets.s2, eta_inv)) return 0;
    return contains(sets.s2_tilde, eta_inv) ? 2 : 1;
}

}  // namespace

std::string convention_name(Convention c) {
    return c == Convention::paper_literal ? "paper-literal" : "proof-consistent";
}

std::vector<Elem> s1_set(const gf::FieldCtx& f, std::span<const Elem> alpha, std::size_t k, Convention c,
                         std::uint64_t budget) {
    return collect(f, alpha, k, budget, [&f, c](const SubsetSums& s) -> std::optional<Elem> {
        return c == Convention::paper_literal ? s.e1 : f.neg(s.e1);
    });
}

std::vector<Elem> s2_set(const gf::FieldCtx& f, std::span<const Elem> alpha, std::size_t k, Convention c,
                         std::uint64_t budget) {
    const Elem two = f.from_int(2);
    const Elem six = f.from_int(6);
    return collect(f, alpha, k, budget, [&f, c, two, six](const SubsetSums& s) -> std::optional<Elem> {
        const Elem e12 = f.mul(s.e1, s.e2);
        if (c == Convention::paper_literal) return f.sub(f.mul(two, e12), f.mul(six, s.e3));
        return f.sub(e12, s.e3);
    });
}

std::vector<Elem> s2_tilde_set(const gf::FieldCtx& f, std::span<const Elem> alpha, std::size_t k, Convention c,
                               std::uint64_t budget) {
    const Elem six = f.from_int(6);
    return collect(f, alpha, k + 1, budget, [&f, c, six](const SubsetSums& s) -> std::optional<Elem> {
        if (s.e1 != 0) return std::nullopt;
        const Elem e3 = c == Convention::paper_literal ? f.mul(six, s.e3) : s.e3;
        return f.neg(e3);
    });
}

EtaSets eta_sets(const gf::FieldCtx& f, std::span<const Elem> alpha, std::size_t k, Convention c,
                 std::uint64_t budget) {
    EtaSets out;
    out.convention = c;
    out.s1 = s1_set(f, alpha, k, c, budget);
    out.s2 = s2_set(f, alpha, k, c, budget);
    if (k + 1 <= alpha.size()) out.s2_tilde = s2_tilde_set(f, alpha, k, c, budget);
    return out;
}

bool supported(const TgrsSpec& s) noexcept {
    return (s.t == 1 && s.h + 1 == s.k) || (s.t == 2 && s.k >= 2 && s.h + 2 == s.k);
}

std::size_t predict_defect(const TgrsSpec& s, const EtaSets& sets) {
    validate_spec(s);
    if (!supported(s)) {
        throw Error(Errc::unsupported_twist, "no eta classification for t=" + std::to_string(s.t) +
                                                 ", h=" + std::to_string(s.h) + ", k=" + std::to_string(s.k));
    }
    return predict(s.t, s.field->inv(s.eta), sets);
}

std::size_t predict_defect(const TgrsSpec& s, Convention c, std::uint64_t budget) {
    validate_spec(s);
    if (!supported(s)) return predict_defect(s, EtaSets{});
    EtaSets sets;
    sets.convention = c;
    if (s.t == 1) {
        sets.s1 = s1_set(*s.field, s.alpha, s.k, c, budget);
    } else {
        sets.s2 = s2_set(*s.field, s.alpha, s.k, c, budget);
        sets.s2_tilde = s2_tilde_set(*s.field, s.alpha, s.k, c, budget);
    }
    return predict_defect(s, sets);
}

const PublishedExample& published_example() {
    static const PublishedExample example;
    return example;
}

ExampleComparison compare_published_example(std::uint64_t budget) {
    const auto& ex = published_example();
    const auto field = gf::FieldCtx::create(ex.p, 1);
    ExampleComparison out;
    out.published_s2 = ex.s2;
    out.published_s2_tilde = ex.s2_tilde;
    out.literal = eta_sets(*field, ex.alpha, ex.k, Convention::paper_literal, budget);
    out.proof = eta_sets(*field, ex.alpha, ex.k, Convention::proof_consistent, budget);
    out.literal_matches_published = out.literal.s2 == ex.s2 && out.literal.s2_tilde == ex.s2_tilde;
    out.proof_matches_published = out.proof.s2 == ex.s2 && out.proof.s2_tilde == ex.s2_tilde;

    EtaSets published;
    published.s2 = ex.s2;
    published.s2_tilde = ex.s2_tilde;
    TgrsSpec spec;
    spec.field = field;
    spec.n = ex.alpha.size();
    spec.k = ex.k;
    spec.t = 2;
    spec.h = ex.k - 2;
    spec.alpha = ex.alpha;
    spec.v.assign(spec.n, 1);
    for (Elem eta = 1; eta < field->order(); ++eta) {
        spec.eta = eta;
        const auto g = generator_matrix(spec);
        const auto d = min_distance(g, budget);
        const auto actual = singleton_defect(spec.n, spec.k, d);
        if (predict_defect(spec, published) != actual) out.published_mispredicts.push_back(eta);
        if (predict_defect(spec, out.proof) != actual) out.proof_mispredicts.push_back(eta);
    }

    out.notes.push_back("published S2 " + format_set(ex.s2) + ", S2~ " + format_set(ex.s2_tilde) +
                        " (recorded values)");
    out.notes.push_back("paper-literal computed S2 " + format_set(out.literal.s2) + ", S2~ " +
                        format_set(out.literal.s2_tilde) +
                        (out.literal_matches_published ? " (matches)" : " (differs from published)"));
    out.notes.push_back("proof-consistent computed S2 " + format_set(out.proof.s2) + ", S2~ " +
                        format_set(out.proof.s2_tilde) +
                        (out.proof_matches_published ? " (matches)" : " (differs from published)"));
    out.notes.push_back("brute-force defects contradict the published sets at eta " +
                        format_set(out.published_mispredicts) + " and the proof-consistent sets at eta " +
                        format_set(out.proof_mispredicts));
    return out;
}

}  // namespace tgrs::etaclass
