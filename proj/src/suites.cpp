/**************************************************************************
 * suites.cpp
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

#include "tgrs/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tgrs/constructions.hpp"
#include "tgrs/error.hpp"
#include "tgrs/etaclass.hpp"
#include "tgrs/parity.hpp"
#include "tgrs/selfdual.hpp"

namespace tgrs::suites {

namespace {

using constructions::ConstructionResult;
using constructions::Mode;
using gf::Field;
using gf::FieldCtx;

constexpr std::size_t kMaxFailureNotes = 5;

const char* const kNames[kSuiteCount] = {"parity",        "remark",       "power-sums", "constructions",
                                         "converse",      "defect-bound", "eta-oracle", "gf5-example",
                                         "subfield-mds",  "dual-distance", "determinism"};

const char* const kTitles[kSuiteCount] = {
    "parity-check matrix H~ generates the dual code",
    "remark-form H and H~ share a row space",
    "Vandermonde identity and power sums L_m",
    "explicit self-dual families, corrected mode",
    "self-duality iff conditions (1) and (2)",
    "Singleton defect bound for self-dual codes",
    "eta-set defect prediction against brute force",
    "GF(5) reference set values",
    "subfield evaluation points give MDS codes",
    "dual-distance window",
    "same seed, same report",
};

/// mt19937_64 with a rejection-sampled bounded draw, so streams do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    Rng(std::uint64_t seed, int suite) : eng_(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(suite))) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        while (true) {
            const std::uint64_t x = eng_();
            if (x < limit) return x % bound;
        }
    }

    Elem nonzero(const FieldCtx& f) { return static_cast<Elem>(1 + below(f.order() - 1)); }

    std::vector<Elem> points(const FieldCtx& f, std::size_t n) {
        std::vector<Elem> all(f.order());
        for (Elem i = 0; i < all.size(); ++i) all[i] = i;
        for (std::size_t i = 0; i < n; ++i) std::swap(all[i], all[i + below(all.size() - i)]);
        all.resize(n);
        return all;
    }

    std::vector<Elem> multipliers(const FieldCtx& f, std::size_t n) {
        std::vector<Elem> v(n);
        for (auto& x : v) x = nonzero(f);
        return v;
    }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

Field field_of_order(std::uint64_t q) {
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned m = 0;
        for (std::uint64_t r = q; r > 1; r /= p) ++m;
        return FieldCtx::create(p, m);
    }
    throw Error(Errc::invalid_argument, "no field of order " + std::to_string(q));
}

std::string list(const std::vector<Elem>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "]";
}

std::string describe(const TgrsSpec& s) {
    return "q=" + std::to_string(s.field->order()) + " n=" + std::to_string(s.n) + " k=" + std::to_string(s.k) +
           " t=" + std::to_string(s.t) + " h=" + std::to_string(s.h) + " eta=" + std::to_string(s.eta) +
           " alpha=" + list(s.alpha) + " v=" + list(s.v);
}

TgrsSpec make_spec(const Field& f, std::size_t k, std::size_t t, std::size_t h, Elem eta, std::vector<Elem> alpha,
                   std::vector<Elem> v) {
    TgrsSpec s;
    s.field = f;
    s.n = alpha.size();
    s.k = k;
    s.t = t;
    s.h = h;
    s.eta = eta;
    s.alpha = std::move(alpha);
    s.v = std::move(v);
    return s;
}

/// Collects counters and the first few failure descriptions.
class Tally {
public:
    void fail(const std::string& counter, const std::string& what) {
        ++(*this)[counter];
        if (failures_.size() < kMaxFailureNotes) failures_.push_back(counter + ": " + what);
    }
    std::uint64_t& operator[](const std::string& key) {
        for (auto& [k, v] : counts_)
            if (k == key) return v;
        counts_.emplace_back(key, 0);
        return counts_.back().second;
    }
    Report finish(int id, bool passed, std::vector<std::string> notes = {}) {
        Report r;
        r.id = id;
        r.name = kNames[id - 1];
        r.title = kTitles[id - 1];
        r.passed = passed;
        r.counts = std::move(counts_);
        r.notes = std::move(notes);
        for (auto& f : failures_) r.notes.push_back("failure " + f);
        return r;
    }

private:
    std::vector<std::pair<std::string, std::uint64_t>> counts_;
    std::vector<std::string> failures_;
};

// ---------------------------------------------------------------- sweep

const std::uint64_t kSweepOrders[] = {4, 5, 7, 8, 9, 11, 13, 16};

/// Every legal (n, k, t, h) with 4 <= n <= min(12, q), one random draw each.
std::vector<TgrsSpec> sweep(const Options& o) {
    Rng rng(o.seed, 1);
    std::vector<TgrsSpec> out;
    for (auto q : kSweepOrders) {
        const auto f = field_of_order(q);
        for (std::size_t n = 4; n <= std::min<std::uint64_t>(12, q); ++n)
            for (std::size_t k = 1; k < n; ++k)
                for (std::size_t t = 1; k + t <= n; ++t)
                    for (std::size_t h = 0; h < k; ++h)
                        out.push_back(make_spec(f, k, t, h, rng.nonzero(*f), rng.points(*f, n), rng.multipliers(*f, n)));
    }
    return out;
}

Report suite_parity(const Options& o) {
    Tally t;
    for (const auto& s : sweep(o)) {
        ++t["specs"];
        const auto g = generator_matrix(s);
        const auto h = parity::parity_check_tilde(s);
        if (!alg::mul_transpose(g, h).is_zero()) t.fail("product_failures", describe(s));
        if (alg::rank(h) != s.n - s.k) t.fail("rank_failures", describe(s));
        if (!alg::row_space_equal(h, alg::nullspace(g))) t.fail("span_failures", describe(s));
        if (!alg::mul_transpose(g, parity::parity_check_tilde(s, parity::Coefficients::printed)).is_zero())
            ++t["printed_form_failures"];
    }
    t["product_failures"];
    t["rank_failures"];
    t["span_failures"];
    const bool ok = t["specs"] >= 300 && t["product_failures"] + t["rank_failures"] + t["span_failures"] == 0;
    return t.finish(1, ok,
                    {"special row built with c_m = a_(n-m); printed_form_failures counts specs where c_m = -L_m "
                     "does not give a parity-check matrix (informational)"});
}

Report suite_remark(const Options& o) {
    Tally t;
    for (const auto& s : sweep(o)) {
        ++t["specs"];
        const auto g = generator_matrix(s);
        const auto hr = parity::parity_check_remark(s);
        if (!alg::mul_transpose(g, hr).is_zero()) t.fail("product_failures", describe(s));
        if (!alg::row_space_equal(hr, parity::parity_check_tilde(s))) t.fail("row_space_mismatches", describe(s));
    }
    t["product_failures"];
    t["row_space_mismatches"];
    return t.finish(2, t["specs"] >= 300 && t["product_failures"] + t["row_space_mismatches"] == 0);
}

Report suite_dual_distance(const Options& o) {
    Tally t;
    for (const auto& s : sweep(o)) {
        ++t["specs"];
        const auto g = generator_matrix(s);
        const auto h = parity::parity_check_tilde(s);
        try {
            const auto d = code_distance(h, g, o.budget);
            const auto lo = std::max(s.h + 1, s.k - s.h);
            if (d < lo || d > s.k + 1)
                t.fail("bound_violations", describe(s) + " d_dual=" + std::to_string(d));
            if (d == lo) ++t["lower_bound_attained"];
            if (d == s.k + 1) ++t["upper_bound_attained"];
        } catch (const BudgetExceeded&) {
            t.fail("over_budget", describe(s));
        }
    }
    t["bound_violations"];
    t["over_budget"];
    return t.finish(10, t["specs"] >= 300 && t["bound_violations"] + t["over_budget"] == 0);
}

// ---------------------------------------------------------------- power sums

/// Multiplicative subgroups of order d (roots of x^d - 1) for 2 <= d <= cap.
std::vector<std::vector<Elem>> subgroups(const FieldCtx& f, std::size_t cap) {
    std::vector<std::vector<Elem>> out;
    const auto q1 = f.order() - 1;
    for (std::uint64_t d = 2; d <= std::min<std::uint64_t>(cap, q1); ++d) {
        if (q1 % d != 0) continue;
        const Elem g = f.pow(f.generator(), static_cast<std::int64_t>(q1 / d));
        std::vector<Elem> h{1};
        for (std::uint64_t i = 1; i < d; ++i) h.push_back(f.mul(h.back(), g));
        out.push_back(h);
    }
    return out;
}

Report suite_power_sums(const Options& o) {
    Rng rng(o.seed, 3);
    Tally t;
    auto check = [&](const Field& f, const std::vector<Elem>& alpha) {
        ++t["alpha_sets"];
        const auto& F = *f;
        const std::size_t n = alpha.size();
        const auto u = parity::vandermonde_weights(F, alpha);
        for (std::size_t j = 0; j < n; ++j) {
            Elem acc = 0;
            for (std::size_t l = 0; l < n; ++l) acc = F.add(acc, F.mul(u[l], F.pow(alpha[l], static_cast<std::int64_t>(j))));
            ++t["vandermonde_checks"];
            if (acc != (j + 1 == n ? 1u : 0u)) t.fail("vandermonde_failures", "q=" + std::to_string(F.order()) + " alpha=" + list(alpha));
        }
        const auto hi = static_cast<std::int64_t>(n);
        const auto direct = parity::l_values(F, alpha, u, 1, hi);
        const auto a = alg::poly_from_roots(f, alpha).coeffs();
        const auto rec = parity::l_values_recursive(F, a, hi);
        for (std::int64_t m = 1; m <= hi; ++m) {
            ++t["recursion_checks"];
            if (direct.at(m) != rec.at(m)) t.fail("recursion_failures", "q=" + std::to_string(F.order()) + " alpha=" + list(alpha) + " m=" + std::to_string(m));
        }
        for (std::size_t s = 1; 2 * s - 1 <= n; ++s) {
            bool vanish = true;
            for (std::size_t j = 1; j < s; ++j) vanish = vanish && direct.at(static_cast<std::int64_t>(j)) == 0;
            if (!vanish) break;
            ++t[s == 1 ? "odd_sum_checks_s1" : "odd_sum_checks_s_ge_2"];
            if (direct.at(static_cast<std::int64_t>(2 * s - 1)) != F.neg(a[n - (2 * s - 1)]))
                t.fail("odd_sum_failures", "q=" + std::to_string(F.order()) + " alpha=" + list(alpha) + " s=" + std::to_string(s));
        }
    };

    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        const auto f = field_of_order(q);
        for (std::size_t n = 2; n <= std::min<std::uint64_t>(8, q); ++n) {
            for (int rep = 0; rep < 40; ++rep) {
                auto alpha = rng.points(*f, n);
                if (rep % 2 == 1) {
                    // force a zero element sum so the s >= 2 branch of the L_{2s-1} identity is reached
                    Elem sum = 0;
                    for (std::size_t i = 0; i + 1 < n; ++i) sum = f->add(sum, alpha[i]);
                    const Elem last = f->neg(sum);
                    if (std::find(alpha.begin(), alpha.end() - 1, last) != alpha.end() - 1) continue;
                    alpha.back() = last;
                }
                check(f, alpha);
            }
        }
        if (q <= 8) check(f, gf::enumerate_field(*f));
        for (const auto& h : subgroups(*f, 8)) check(f, h);
    }
    t["vandermonde_failures"];
    t["recursion_failures"];
    t["odd_sum_failures"];
    const bool ok = t["vandermonde_failures"] + t["recursion_failures"] + t["odd_sum_failures"] == 0 &&
                    t["odd_sum_checks_s_ge_2"] > 0;
    return t.finish(3, ok);
}

// ---------------------------------------------------------------- constructions

struct Case {
    std::string label;
    std::function<ConstructionResult(Mode)> build;
};

/// Smallest packed element of GF(2^m) outside GF(2^s).
Elem outside_subfield(unsigned s, unsigned m) {
    const auto f = FieldCtx::create(2, m);
    const auto sub = gf::subfield_elements(*f, s);
    Elem x = 1;
    while (std::binary_search(sub.begin(), sub.end(), x)) ++x;
    return x;
}

std::vector<Case> construction_cases() {
    using namespace constructions;
    return {
        {"subfield-char2 s=2 m=4 t=1", [](Mode m) { return build_subfield_char2(2, 4, 1, outside_subfield(2, 4), m); }},
        {"subfield-char2 s=3 m=6 t=1", [](Mode m) { return build_subfield_char2(3, 6, 1, outside_subfield(3, 6), m); }},
        {"subfield-char2 s=3 m=6 t=2", [](Mode m) { return build_subfield_char2(3, 6, 2, outside_subfield(3, 6), m); }},
        {"basis-subset m=4 l=2 variant=1", [](Mode m) { return build_basis_subset_char2(4, 2, 1, 0, 2, m); }},
        {"basis-subset m=8 l=3 variant=1", [](Mode m) { return build_basis_subset_char2(8, 3, 1, 0, 2, m); }},
        {"basis-subset m=6 l=2 variant=2 l1=3", [](Mode m) { return build_basis_subset_char2(6, 2, 2, 3, 2, m); }},
        {"basis-subset m=8 l=3 variant=2 l1=5", [](Mode m) { return build_basis_subset_char2(8, 3, 2, 5, 2, m); }},
        {"basis-subset m=6 l=2 variant=3 l1=4", [](Mode m) { return build_basis_subset_char2(6, 2, 3, 4, 2, m); }},
        {"basis-subset m=8 l=2 variant=3 l1=6", [](Mode m) { return build_basis_subset_char2(8, 2, 3, 6, 2, m); }},
        {"splitting-char2 lambda=1 l=2 t=1 b=1 c=1 eta=2",
         [](Mode m) { return build_splitting_char2(1, 2, 1, 1, 1, 2, m); }},
        {"splitting-oddchar p=3 lambda=1 l=1 t=1 b=1 c=1",
         [](Mode m) { return build_splitting_oddchar(3, 1, 1, 1, 1, 1, m); }},
        {"affine-shift p=5 s=1 m=2", [](Mode m) { return build_affine_shift_oddchar(5, 1, 2, std::nullopt, m); }},
    };
}

Report suite_constructions(const Options&) {
    Tally t;
    std::vector<std::string> notes;
    for (const auto& c : construction_cases()) {
        ++t["constructions"];
        try {
            const auto r = c.build(Mode::corrected);
            const auto g = generator_matrix(r.spec);
            const bool gg = r.spec.n == 2 * r.spec.k && alg::mul_transpose(g, g).is_zero();
            const auto v = selfdual::theorem_conditions(r.spec);
            if (!(gg && r.verified_self_dual)) t.fail("not_self_dual", c.label);
            else ++t["self_dual"];
            if (!v.conditions_hold()) t.fail("conditions_fail", c.label);
        } catch (const Error& e) {
            t.fail("build_errors", c.label + ": " + e.what());
        }
        try {
            const auto r = c.build(Mode::paper_literal);
            if (r.verified_self_dual) {
                ++t["paper_literal_self_dual"];
            } else {
                ++t["paper_literal_not_self_dual"];
                notes.push_back("paper-literal " + c.label + ": not self-dual" +
                                (r.notes.empty() ? std::string() : "; " + r.notes.front()));
            }
        } catch (const Error& e) {
            ++t["paper_literal_rejected"];
            notes.push_back("paper-literal " + c.label + ": " + e.what());
        }
    }
    t["not_self_dual"];
    t["conditions_fail"];
    t["build_errors"];
    const bool ok = t["not_self_dual"] + t["conditions_fail"] + t["build_errors"] == 0;
    return t.finish(4, ok, std::move(notes));
}

// ---------------------------------------------------------------- converse

struct GridResult {
    Tally tally;
    std::vector<TgrsSpec> self_dual;
};

/// n = 8, k = 4, (t, h) in {(1, 3), (2, 2)}, every nonzero eta, v from
/// condition (1) when solvable plus `random_v` random multiplier vectors.
void grid(const Field& f, const std::vector<std::vector<Elem>>& alpha_sets, std::size_t random_v, Rng& rng,
          const std::string& tag, GridResult& out) {
    auto& t = out.tally;
    for (const char* key : {"_alpha_sets", "_alpha_sets_cond1_solvable", "_instances", "_self_dual", "_conditions_hold"})
        t[tag + key];
    for (const auto& alpha : alpha_sets) {
        ++t[tag + "_alpha_sets"];
        const auto u = parity::vandermonde_weights(*f, alpha);
        const auto solved = constructions::solve_multipliers(*f, u);
        if (solved) ++t[tag + "_alpha_sets_cond1_solvable"];
        for (std::size_t tw : {1u, 2u}) {
            for (Elem eta = 1; eta < f->order(); ++eta) {
                std::vector<std::vector<Elem>> vs;
                if (solved) vs.push_back(solved->v);
                for (std::size_t i = 0; i < random_v; ++i) vs.push_back(rng.multipliers(*f, alpha.size()));
                for (auto& v : vs) {
                    auto s = make_spec(f, 4, tw, 4 - tw, eta, alpha, std::move(v));
                    const auto verdict = selfdual::theorem_conditions(s);
                    ++t[tag + "_instances"];
                    if (verdict.matrix_self_dual) ++t[tag + "_self_dual"];
                    if (verdict.conditions_hold()) ++t[tag + "_conditions_hold"];
                    if (!verdict.converse_applicable || verdict.matrix_self_dual != verdict.conditions_hold())
                        t.fail("disagreements", describe(s));
                    if (verdict.matrix_self_dual) out.self_dual.push_back(std::move(s));
                }
            }
        }
    }
}

GridResult converse_grids(const Options& o) {
    Rng rng(o.seed, 5);
    GridResult out;

    const auto f9 = field_of_order(9);
    std::vector<std::vector<Elem>> sets9;
    for (Elem skip = 0; skip < 9; ++skip) {
        std::vector<Elem> a;
        for (Elem x = 0; x < 9; ++x)
            if (x != skip) a.push_back(x);
        sets9.push_back(a);
    }
    grid(f9, sets9, 100, rng, "q9", out);

    // GF(16) supplies instances where both conditions can hold: in
    // characteristic 2 every u_i is a square.
    const auto f16 = field_of_order(16);
    std::vector<std::vector<Elem>> all;
    std::vector<Elem> cur;
    auto rec = [&](auto&& self, Elem start) -> void {
        if (cur.size() == 8) {
            all.push_back(cur);
            return;
        }
        for (Elem x = start; x < 16; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    rng.shuffle(all);
    std::vector<std::vector<Elem>> both, top_only, other;
    for (const auto& a : all) {
        const auto c = alg::poly_from_roots(f16, a).coeffs();
        auto& bucket = c[7] == 0 ? (c[5] == 0 ? both : top_only) : other;
        if (bucket.size() < 30) bucket.push_back(a);
    }
    std::vector<std::vector<Elem>> sets16 = both;
    sets16.insert(sets16.end(), top_only.begin(), top_only.end());
    sets16.insert(sets16.end(), other.begin(), other.end());
    grid(f16, sets16, 10, rng, "q16", out);
    return out;
}

Report suite_converse(const Options& o) {
    auto g = converse_grids(o);
    g.tally["disagreements"];
    const bool ok = g.tally["disagreements"] == 0;
    return g.tally.finish(
        5, ok,
        {"q=9 grid: alpha runs over all eight-element subsets of GF(9); none admits a constant v_i^2/u_i, so no "
         "instance there is self-dual and the grid exercises only the negative direction",
         "q=16 grid: supplementary, 90 eight-element subsets (30 with a_7 = a_5 = 0, 30 with only a_7 = 0, 30 "
         "other) so that the positive direction is exercised"});
}

Report suite_defect_bound(const Options& o) {
    Tally t;
    auto check = [&](const TgrsSpec& s, const std::string& source) {
        ++t["instances_" + source];
        try {
            const auto r = analyze(s, o.budget);
            const auto bound = selfdual::defect_bound(s);
            if (!r.self_dual) t.fail("not_self_dual", describe(s));
            if (r.defect != r.defect_dual || r.defect > bound)
                t.fail("violations", describe(s) + " defects=" + std::to_string(r.defect) + "," +
                                         std::to_string(r.defect_dual) + " bound=" + std::to_string(bound));
            ++t["defect_" + std::to_string(r.defect)];
        } catch (const BudgetExceeded&) {
            t.fail("over_budget", describe(s));
        }
    };
    for (const auto& c : construction_cases()) {
        try {
            check(c.build(Mode::corrected).spec, "constructions");
        } catch (const ConstructionError& e) {
            t.fail("build_errors", c.label);
        }
    }
    for (const auto& s : converse_grids(o).self_dual) check(s, "grid");
    t["violations"];
    t["over_budget"];
    const bool ok = t["violations"] + t["over_budget"] + t["not_self_dual"] + t["build_errors"] == 0;
    return t.finish(6, ok);
}

// ---------------------------------------------------------------- eta sets

Report suite_eta_oracle(const Options& o) {
    Rng rng(o.seed, 7);
    Tally t;
    auto run_alpha = [&](const Field& f, const std::vector<Elem>& alpha, std::size_t k, std::size_t tw,
                         const std::string& tag) {
        const auto proof = etaclass::eta_sets(*f, alpha, k, etaclass::Convention::proof_consistent, o.budget);
        const auto literal = etaclass::eta_sets(*f, alpha, k, etaclass::Convention::paper_literal, o.budget);
        std::vector<std::vector<Elem>> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(rng.multipliers(*f, alpha.size()));
        for (Elem eta = 1; eta < f->order(); ++eta) {
            std::optional<std::size_t> first;
            for (const auto& v : vs) {
                const auto s = make_spec(f, k, tw, k - tw, eta, alpha, v);
                const auto g = generator_matrix(s);
                const auto defect = singleton_defect(s.n, s.k, code_distance(g, alg::nullspace(g), o.budget));
                ++t["instances"];
                if (!tag.empty()) ++t[tag];
                if (etaclass::predict_defect(s, proof) != defect) t.fail("mismatches", describe(s));
                if (etaclass::predict_defect(s, literal) != defect) ++t["paper_literal_mismatches"];
                if (first && *first != defect) t.fail("v_dependence", describe(s));
                first = defect;
                ++t["defect_" + std::to_string(defect)];
            }
        }
    };
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        const auto f = field_of_order(q);
        for (std::size_t n = 3; n <= std::min<std::uint64_t>(8, q); ++n) {
            for (std::size_t k = 1; k + 1 <= n; ++k) run_alpha(f, rng.points(*f, n), k, 1, "");
            for (std::size_t k = 2; k + 2 <= n; ++k) run_alpha(f, rng.points(*f, n), k, 2, "");
        }
    }
    const auto& ex = etaclass::published_example();
    const auto f5 = FieldCtx::create(ex.p, 1);
    run_alpha(f5, ex.alpha, ex.k, 2, "gf5_instances");
    run_alpha(f5, ex.alpha, ex.k, 1, "gf5_instances");
    t["mismatches"];
    t["v_dependence"];
    return t.finish(7, t["mismatches"] + t["v_dependence"] == 0,
                    {"predictions use the proof-consistent sets; paper_literal_mismatches is informational"});
}

Report suite_gf5_example(const Options& o) {
    Tally t;
    const auto cmp = etaclass::compare_published_example(o.budget);
    const auto& ex = etaclass::published_example();
    const bool recorded = cmp.published_s2 == std::vector<Elem>{0, 1, 2, 3} &&
                          cmp.published_s2_tilde == std::vector<Elem>{1, 2, 3} && cmp.published_s2 == ex.s2;
    const bool proof_sets =
        cmp.proof.s2 == std::vector<Elem>{0, 1, 2, 3, 4} && cmp.proof.s2_tilde == std::vector<Elem>{0};
    t["recorded_sets_emitted"] = recorded;
    t["proof_consistent_sets_as_expected"] = proof_sets;
    t["paper_literal_reproduces_recorded"] = cmp.literal_matches_published;
    t["proof_consistent_reproduces_recorded"] = cmp.proof_matches_published;
    t["recorded_sets_mispredict"] = cmp.published_mispredicts.size();
    t["proof_consistent_mispredict"] = cmp.proof_mispredicts.size();
    auto notes = cmp.notes;
    notes.push_back(
        "the recorded S2 and S2~ values are carried verbatim as reference data: no implemented reading "
        "(elementary-symmetric or ordered-tuple) derives them by computation, so the paper-literal half of this "
        "check fails; the brute-force defects side with the proof-consistent sets");
    // The printed sets count only when a computed reading yields them.
    const bool ok = recorded && proof_sets && cmp.literal_matches_published && cmp.proof_mispredicts.empty();
    return t.finish(8, ok, std::move(notes));
}

Report suite_subfield_mds(const Options& o) {
    Rng rng(o.seed, 9);
    Tally t;
    const auto f = field_of_order(16);
    const auto alpha = gf::subfield_elements(*f, 2);
    std::vector<Elem> outside;
    for (Elem x = 1; x < 16; ++x)
        if (!std::binary_search(alpha.begin(), alpha.end(), x)) outside.push_back(x);
    std::vector<Elem> drawn;
    for (int i = 0; i < 20; ++i) {
        const Elem eta = outside[rng.below(outside.size())];
        drawn.push_back(eta);
        const auto s = make_spec(f, 2, 1, 1, eta, alpha, std::vector<Elem>(4, 1));
        const auto d = min_distance(generator_matrix(s), o.budget);
        ++t["trials"];
        if (d != s.n - s.k + 1) t.fail("not_mds", describe(s) + " d=" + std::to_string(d));
        if (etaclass::predict_defect(s, etaclass::Convention::proof_consistent, o.budget) != 0)
            t.fail("prediction_not_mds", describe(s));
    }
    t["not_mds"];
    return t.finish(9, t["not_mds"] + t["prediction_not_mds"] == 0, {"eta drawn: " + list(drawn)});
}

}  // namespace

std::uint64_t Report::count(const std::string& key) const {
    for (const auto& [k, v] : counts)
        if (k == key) return v;
    return 0;
}

std::string Report::summary() const {
    std::string out;
    for (const auto& [k, v] : counts) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << id << " (" << name << "): " << title << "\n";
    os << "  result: " << (passed ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : counts) os << "  " << k << " = " << v << "\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::json counts_json = nlohmann::json::object();
    for (const auto& [k, v] : counts) counts_json[k] = v;
    nlohmann::json j{{"id", id},           {"name", name},   {"title", title},
                     {"passed", passed},   {"counts", counts_json}, {"notes", notes}};
    return j.dump(2) + "\n";
}

int suite_id(const std::string& name) {
    for (int i = 0; i < kSuiteCount; ++i)
        if (name == kNames[i] || name == std::to_string(i + 1)) return i + 1;
    throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
}

std::string suite_name(int id) {
    if (id < 1 || id > kSuiteCount) throw Error(Errc::invalid_argument, "suite id out of range");
    return kNames[id - 1];
}

Report determinism(const std::vector<Report>& first_run, const Options& options) {
    Tally t;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(3);
    for (const auto& r : first_run) {
        if (r.id == 11) continue;
        ++t["suites_compared"];
        const auto again = run(r.id, options);
        if (again.to_json() != r.to_json()) t.fail("mismatches", r.name);
    }
    omp_set_num_threads(saved);
    t["mismatches"];
    return t.finish(11, t["suites_compared"] == 10 && t["mismatches"] == 0,
                    {"rerun uses three OpenMP threads; reports compared as canonical JSON"});
}

Report run(int id, const Options& o) {
    switch (id) {
        case 1: return suite_parity(o);
        case 2: return suite_remark(o);
        case 3: return suite_power_sums(o);
        case 4: return suite_constructions(o);
        case 5: return suite_converse(o);
        case 6: return suite_defect_bound(o);
        case 7: return suite_eta_oracle(o);
        case 8: return suite_gf5_example(o);
        case 9: return suite_subfield_mds(o);
        case 10: return suite_dual_distance(o);
        case 11: {
            std::vector<Report> first;
            for (int i = 1; i <= 10; ++i) first.push_back(run(i, o));
            return determinism(first, o);
        }
        default: throw Error(Errc::invalid_argument, "suite id out of range");
    }
}

}  // namespace tgrs::suites
