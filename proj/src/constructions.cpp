/**************************************************************************
 * constructions.cpp
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

#include "tgrs/constructions.hpp"

#include <algorithm>

#include "tgrs/error.hpp"
#include "tgrs/parity.hpp"
#include "tgrs/selfdual.hpp"

namespace tgrs::constructions {

namespace {

using gf::Field;
using gf::FieldCtx;

std::string str(std::uint64_t x) { return std::to_string(x); }

[[noreturn]] void reject(const std::string& what) { throw Error(Errc::invalid_argument, what); }

Elem require_element(const FieldCtx& f, std::uint64_t value, const char* name) {
    if (!f.contains(value)) reject(std::string(name) + " = " + str(value) + " lies outside " + f.describe());
    return static_cast<Elem>(value);
}

/// v_i = sum_{j != i} (alpha_i - alpha_j)^-(2^(m-1)), the printed recipe.
std::vector<Elem> printed_sum_multipliers(const FieldCtx& f, const std::vector<Elem>& alpha) {
    const std::int64_t e = -(std::int64_t{1} << (f.m() - 1));
    std::vector<Elem> v(alpha.size(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (j != i) v[i] = f.add(v[i], f.pow(f.sub(alpha[i], alpha[j]), e));
        }
    }
    return v;
}

void reject_zero_multipliers(const std::vector<Elem>& v, const std::string& family) {
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) notes.push_back("paper-literal v is zero at index " + str(i));
    }
    if (!notes.empty()) {
        const auto what = family + ": printed v vanishes at " + str(notes.size()) + " of " + str(v.size()) + " indices";
        throw ConstructionError(what, std::move(notes));
    }
}

/// v from condition (1), or a ConstructionError naming the failing index.
SolvedMultipliers corrected_multipliers(const TgrsSpec& spec, const std::string& family) {
    const auto u = parity::vandermonde_weights(*spec.field, spec.alpha);
    auto solved = solve_multipliers(*spec.field, u);
    if (!solved) {
        std::vector<std::string> notes;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!spec.field->is_square(u[i])) notes.push_back("u_" + str(i) + " = " + str(u[i]) + " is not a square");
        }
        throw ConstructionError(family + ": no lambda makes every lambda * u_i a square", std::move(notes));
    }
    return *solved;
}

/// Verifies the spec and explains a failure in terms of both conditions.
ConstructionResult finish(TgrsSpec spec, Mode mode, std::string family, std::vector<std::string> notes) {
    validate_spec(spec);
    ConstructionResult out;
    out.mode = mode;
    out.family = std::move(family);
    out.notes = std::move(notes);
    const auto verdict = selfdual::theorem_conditions(spec);
    out.verified_self_dual = verdict.matrix_self_dual;
    if (!out.verified_self_dual) {
        const auto& f = *spec.field;
        if (!verdict.cond1_lambda) {
            const auto u = parity::vandermonde_weights(f, spec.alpha);
            std::string ratios;
            for (std::size_t i = 0; i < spec.n; ++i) {
                if (i) ratios += ",";
                ratios += str(f.div(f.mul(spec.v[i], spec.v[i]), u[i]));
            }
            out.notes.push_back("condition (1) fails: v_i^2 / u_i = [" + ratios + "] is not constant");
        }
        if (!verdict.cond2_coeffs_zero) out.notes.push_back("condition (2) fails: some a_(n-m), m < t, is nonzero");
        if (!verdict.cond2_eta) out.notes.push_back("condition (2) fails: 2 - eta * a_(n-(2t-1)) != 0");
        out.notes.push_back("G * G^T != 0");
    }
    out.spec = std::move(spec);
    if (mode == Mode::corrected && !out.verified_self_dual) {
        throw ConstructionError(out.family + ": corrected construction is not self-dual", out.notes);
    }
    return out;
}

struct Splitting {
    Field field;
    std::vector<Elem> roots;
    std::vector<Elem> coeffs;  // the polynomial, mapped into `field`
};

/// Smallest GF(p^(lambda_exp * e)) over which the polynomial (packed
/// coefficients in GF(p^lambda_exp), constant term first) has deg distinct
/// roots.
Splitting split(std::uint64_t p, unsigned lambda_exp, const std::vector<Elem>& coeffs, const std::string& family) {
    const auto base = FieldCtx::create(p, lambda_exp);
    const std::size_t deg = coeffs.size() - 1;
    std::uint64_t q = 1;
    for (unsigned e = 1;; ++e) {
        q = 1;
        bool too_big = false;
        for (unsigned i = 0; i < lambda_exp * e; ++i) {
            q *= p;
            too_big = too_big || q > gf::kEnumerationCap;
        }
        if (too_big) break;
        const auto big = FieldCtx::create(p, lambda_exp * e);
        const gf::Embedding emb(base, big);
        std::vector<Elem> mapped;
        for (Elem c : coeffs) mapped.push_back(emb(c));
        const alg::Poly poly(big, mapped);
        auto roots = alg::distinct_roots_in_field(poly, alg::RootPolicy::require_simple);
        if (roots.size() == deg) return {big, std::move(roots), std::move(mapped)};
    }
    throw Error(Errc::not_split, family + ": polynomial does not split in any extension of " + base->describe() +
                                     " up to order 2^20");
}

}  // namespace

std::string mode_name(Mode m) { return m == Mode::paper_literal ? "paper-literal" : "corrected"; }

std::optional<SolvedMultipliers> solve_multipliers(const gf::FieldCtx& f, std::span<const Elem> u) {
    std::vector<Elem> candidates{1};
    if (!f.is_char2()) {
        for (Elem x = 2; x < f.order(); ++x) {
            if (!f.is_square(x)) {
                candidates.push_back(x);
                break;
            }
        }
    }
    for (Elem lambda : candidates) {
        std::vector<Elem> v;
        for (Elem ui : u) {
            auto r = f.sqrt(f.mul(lambda, ui));
            if (!r || *r == 0) break;
            v.push_back(*r);
        }
        if (v.size() == u.size()) return SolvedMultipliers{lambda, std::move(v)};
    }
    return std::nullopt;
}

ConstructionResult build_subfield_char2(unsigned s, unsigned m, std::size_t t, Elem eta, Mode mode) {
    const std::string family = "subfield-char2";
    if (s == 0 || m == 0 || m % s != 0) reject(family + ": s must divide m");
    if (t == 0 || (std::size_t{1} << (s - 1)) <= t) reject(family + ": need 2^(s-1) - t > 0");
    TgrsSpec spec;
    spec.field = FieldCtx::create(2, m);
    spec.eta = require_element(*spec.field, eta, "eta");
    if (spec.eta == 0) reject(family + ": eta must be nonzero");
    spec.alpha = gf::subfield_elements(*spec.field, s);
    spec.n = spec.alpha.size();
    spec.k = spec.n / 2;
    spec.t = t;
    spec.h = spec.k - t;

    std::vector<std::string> notes;
    if (mode == Mode::paper_literal) {
        spec.v = printed_sum_multipliers(*spec.field, spec.alpha);
        reject_zero_multipliers(spec.v, family);
    } else {
        spec.v.assign(spec.n, 1);
        auto solved = corrected_multipliers(spec, family);
        spec.v = solved.v;
        notes.push_back("v solved from v_i^2 = lambda * u_i with lambda = " + str(solved.lambda));
    }
    return finish(std::move(spec), mode, family, std::move(notes));
}

ConstructionResult build_basis_subset_char2(unsigned m, unsigned l, int variant, unsigned l1, Elem eta, Mode mode) {
    const std::string family = "basis-subset";
    if (l == 0 || l > m) reject(family + ": need 1 <= l <= m");
    std::vector<Elem> alpha;
    for (Elem b = 0; b < (Elem{1} << l); ++b) alpha.push_back(b);  // sum b_i w_i with w_i = x^(i-1)
    auto w = [](unsigned i) { return Elem{1} << (i - 1); };
    switch (variant) {
        case 1: break;
        case 2: {
            if (l1 % 2 == 0 || l1 < 3 || l1 + l > m) reject(family + ": variant 2 needs odd l1 with 3 <= l1 <= m - l");
            Elem total = 0;
            for (unsigned j = 1; j <= l1; ++j) {
                alpha.push_back(w(l + j));
                total ^= w(l + j);
            }
            alpha.push_back(total);
            break;
        }
        case 3: {
            if (l1 % 2 != 0 || l1 < 4 || l1 + l > m) reject(family + ": variant 3 needs even l1 with 4 <= l1 <= m - l");
            for (unsigned j = 1; j + 1 <= l1; ++j) alpha.push_back(w(l + j) ^ w(l + j + 1));
            alpha.push_back(w(l + 1) ^ w(l + l1));
            break;
        }
        default: reject(family + ": variant must be 1, 2 or 3");
    }
    TgrsSpec spec;
    spec.field = FieldCtx::create(2, m);
    spec.eta = require_element(*spec.field, eta, "eta");
    if (spec.eta == 0) reject(family + ": eta must be nonzero");
    spec.alpha = std::move(alpha);
    spec.n = spec.alpha.size();
    if (spec.n % 2 != 0) reject(family + ": odd length");
    spec.k = spec.n / 2;
    spec.t = 1;
    spec.h = spec.k - 1;

    std::vector<std::string> notes;
    Elem sum = 0;
    for (Elem a : spec.alpha) sum ^= a;
    if (sum != 0) notes.push_back("sum of alpha is " + str(sum) + ", not 0");
    if (mode == Mode::paper_literal) {
        spec.v = printed_sum_multipliers(*spec.field, spec.alpha);
        reject_zero_multipliers(spec.v, family);
    } else {
        spec.v.assign(spec.n, 1);
        auto solved = corrected_multipliers(spec, family);
        spec.v = solved.v;
        notes.push_back("v solved from v_i^2 = lambda * u_i with lambda = " + str(solved.lambda));
    }
    return finish(std::move(spec), mode, family, std::move(notes));
}

ConstructionResult build_splitting_char2(unsigned lambda_exp, std::size_t l, std::size_t t, Elem b, Elem c, Elem eta,
                                         Mode mode) {
    const std::string family = "splitting-char2";
    if (lambda_exp == 0) reject(family + ": lambda must be >= 1");
    if (t == 0 || t >= l) reject(family + ": need 1 <= t < l");
    const auto base = FieldCtx::create(2, lambda_exp);
    require_element(*base, b, "b");
    require_element(*base, c, "c");
    if (b == 0 || c == 0) reject(family + ": b and c must be nonzero");
    std::vector<Elem> coeffs(2 * l + 1, 0);
    coeffs[0] = c;
    coeffs[1] = b;
    coeffs[2 * l] = 1;
    auto sp = split(2, lambda_exp, coeffs, family);

    TgrsSpec spec;
    spec.field = sp.field;
    spec.eta = require_element(*spec.field, eta, "eta");
    if (spec.eta == 0) reject(family + ": eta must be nonzero");
    spec.alpha = std::move(sp.roots);
    spec.n = 2 * l;
    spec.k = l;
    spec.t = t;
    spec.h = l - t;
    spec.v.assign(spec.n, 1);
    std::vector<std::string> notes{"splitting field " + spec.field->describe()};
    return finish(std::move(spec), mode, family, std::move(notes));
}

ConstructionResult build_splitting_oddchar(std::uint64_t p, unsigned lambda_exp, std::size_t l, std::size_t t, Elem b,
                                           Elem c, Mode mode) {
    const std::string family = "splitting-oddchar";
    if (p == 2 || !gf::is_prime(p)) reject(family + ": p must be an odd prime");
    if (lambda_exp == 0) reject(family + ": lambda must be >= 1");
    if (t == 0 || l == 0 || l * p <= t) reject(family + ": need lp - t > 0 with t >= 1");
    if ((2 * t - 1) % p == 0) reject(family + ": p divides 2t - 1");
    const auto base = FieldCtx::create(p, lambda_exp);
    require_element(*base, b, "b");
    require_element(*base, c, "c");
    if (b == 0 || c == 0) reject(family + ": b and c must be nonzero");
    const std::size_t n = 2 * l * p;
    std::vector<Elem> coeffs(n + 1, 0);
    coeffs[0] = c;
    coeffs[n - (2 * t - 1)] = b;
    coeffs[n] = 1;
    auto sp = split(p, lambda_exp, coeffs, family);
    const auto& f = *sp.field;

    TgrsSpec spec;
    spec.field = sp.field;
    spec.alpha = std::move(sp.roots);
    spec.n = n;
    spec.k = l * p;
    spec.t = t;
    spec.h = l * p - t;
    const Elem b_big = sp.coeffs[n - (2 * t - 1)];
    spec.eta = f.mul(f.from_int(2), f.inv(b_big));
    for (Elem a : spec.alpha) spec.v.push_back(f.pow(a, -static_cast<std::int64_t>(l * p - t)));
    std::vector<std::string> notes{"splitting field " + spec.field->describe()};
    return finish(std::move(spec), mode, family, std::move(notes));
}

ConstructionResult build_affine_shift_oddchar(std::uint64_t p, unsigned s, unsigned m, std::optional<Elem> beta,
                                              Mode mode) {
    const std::string family = "affine-shift";
    if (p == 2 || !gf::is_prime(p)) reject(family + ": p must be an odd prime");
    if (s == 0 || m == 0 || m % 2 != 0 || (m / 2) % s != 0) reject(family + ": need m even and s | m/2");
    TgrsSpec spec;
    spec.field = FieldCtx::create(p, m);
    const auto& f = *spec.field;
    const auto sub = gf::subfield_elements(f, s);
    auto in_sub = [&](Elem x) { return std::binary_search(sub.begin(), sub.end(), x); };
    Elem b = 0;
    if (beta) {
        b = require_element(f, *beta, "beta");
        if (b == 0 || in_sub(b)) reject(family + ": beta must lie outside GF(" + str(p) + "^" + str(s) + ")");
    } else {
        while (in_sub(b)) ++b;
    }
    for (Elem a : sub) {
        if (a != 0) spec.alpha.push_back(f.add(b, a));
    }
    spec.n = spec.alpha.size();
    spec.k = spec.n / 2;
    spec.t = 1;
    spec.h = spec.k - 1;

    std::vector<std::string> notes{"beta = " + str(b)};
    if (mode == Mode::paper_literal) {
        spec.eta = f.neg(f.mul(f.from_int(2), f.inv(b)));
        std::vector<std::string> missing;
        for (std::size_t i = 0; i < spec.n; ++i) {
            auto r = f.sqrt(f.neg(spec.alpha[i]));
            if (!r) {
                missing.push_back("-alpha_" + str(i) + " = " + str(f.neg(spec.alpha[i])) + " has no square root");
            } else {
                spec.v.push_back(*r);
            }
        }
        if (!missing.empty()) {
            const auto what =
                family + ": printed v_i^2 = -alpha_i has no solution at " + str(missing.size()) + " indices";
            throw ConstructionError(what, std::move(missing));
        }
        reject_zero_multipliers(spec.v, family);
    } else {
        // a_(n-1) = -sum(alpha) = beta, so condition (2) needs eta = 2 / beta
        spec.eta = f.mul(f.from_int(2), f.inv(b));
        notes.push_back("eta = 2/beta (the printed -2/beta gives 2 - eta * a_(n-1) = 4)");
        spec.v.assign(spec.n, 1);
        auto solved = corrected_multipliers(spec, family);
        spec.v = solved.v;
        notes.push_back("v solved from v_i^2 = lambda * u_i with lambda = " + str(solved.lambda));
    }
    return finish(std::move(spec), mode, family, std::move(notes));
}

}  // namespace tgrs::constructions
