/**************************************************************************
 * parity.cpp
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

#include "tgrs/parity.hpp"

#include "tgrs/error.hpp"

namespace tgrs::parity {

namespace {

using i64 = std::int64_t;

Elem coefficient(const ParityData& pd, i64 m, Coefficients which, const gf::FieldCtx& f) {
    if (which == Coefficients::printed) return f.neg(pd.L.at(m));
    return pd.a[pd.a.size() - 1 - static_cast<std::size_t>(m)];
}

struct Shape {
    i64 n, k, t, h;
};

Shape shape_of(const TgrsSpec& s) {
    return {static_cast<i64>(s.n), static_cast<i64>(s.k), static_cast<i64>(s.t), static_cast<i64>(s.h)};
}

/// Fills every row except the special one and applies the column scaling
/// after `special` has written row n-k-t (unscaled).
template <typename SpecialRow>
alg::Matrix assemble(const TgrsSpec& s, const ParityData& pd, SpecialRow special) {
    const auto& f = *s.field;
    const auto [n, k, t, h] = shape_of(s);
    (void)h;
    alg::Matrix out(s.field, s.n - s.k, s.n);
    const i64 base = n - k - t;
    for (std::size_t j = 0; j < s.n; ++j) {
        const Elem x = s.alpha[j];
        for (i64 e = 0; e < base; ++e) out(static_cast<std::size_t>(e), j) = f.pow(x, e);
        out(static_cast<std::size_t>(base), j) = special(x);
        const Elem xb = f.pow(x, base);
        for (i64 i = 1; i < t; ++i) {
            const Elem val = f.sub(f.pow(x, n - (k + t - i)), f.mul(pd.L.at(i), xb));
            out(static_cast<std::size_t>(base + i), j) = val;
        }
        const Elem scale = f.mul(pd.u[j], f.inv(s.v[j]));
        for (std::size_t r = 0; r < out.rows(); ++r) out(r, j) = f.mul(out(r, j), scale);
    }
    return out;
}

}  // namespace

std::vector<Elem> vandermonde_weights(const gf::FieldCtx& f, std::span<const Elem> alpha) {
    std::vector<Elem> u(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        Elem prod = 1;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (j == i) continue;
            const Elem diff = f.sub(alpha[i], alpha[j]);
            if (diff == 0) {
                throw Error(Errc::duplicate_evaluation_point,
                            "alpha[" + std::to_string(i) + "] == alpha[" + std::to_string(j) + "]");
            }
            prod = f.mul(prod, diff);
        }
        u[i] = f.inv(prod);
    }
    return u;
}

LMap l_values(const gf::FieldCtx& f, std::span<const Elem> alpha, std::span<const Elem> u, i64 lo, i64 hi) {
    const auto n = static_cast<i64>(alpha.size());
    if (u.size() != alpha.size()) throw Error(Errc::length_mismatch, "u and alpha differ in length");
    if (lo < 1 - n) {
        throw Error(Errc::invalid_argument,
                    "L_" + std::to_string(lo) + " needs a negative power of the evaluation points");
    }
    LMap out;
    for (i64 m = lo; m <= hi; ++m) {
        Elem acc = 0;
        for (std::size_t l = 0; l < alpha.size(); ++l) acc = f.add(acc, f.mul(u[l], f.pow(alpha[l], n - 1 + m)));
        out[m] = acc;
    }
    return out;
}

LMap l_values_recursive(const gf::FieldCtx& f, std::span<const Elem> a, i64 hi) {
    if (a.empty() || a.back() != 1) throw Error(Errc::invalid_argument, "coefficients must be monic");
    const auto n = static_cast<i64>(a.size()) - 1;
    // a_{n-j}, zero below degree 0
    auto top = [&](i64 j) -> Elem { return j <= n ? a[static_cast<std::size_t>(n - j)] : 0; };
    LMap out;
    out[0] = 1;
    for (i64 m = 1; m <= hi; ++m) {
        Elem acc = f.neg(top(m));
        for (i64 j = 1; j < m; ++j) acc = f.sub(acc, f.mul(top(m - j), out[j]));
        out[m] = acc;
    }
    return out;
}

ParityData parity_data(const TgrsSpec& s) {
    validate_spec(s);
    const auto& f = *s.field;
    ParityData pd;
    pd.u = vandermonde_weights(f, s.alpha);
    const auto n = static_cast<i64>(s.n);
    pd.L = l_values(f, s.alpha, pd.u, 1 - n, static_cast<i64>(s.k + s.t));
    pd.a = alg::poly_from_roots(s.field, s.alpha).coeffs();
    return pd;
}

Elem l_tilde(const TgrsSpec& s, const ParityData& pd, Coefficients which) {
    const auto& f = *s.field;
    const auto [n, k, t, h] = shape_of(s);
    (void)n;
    const i64 top = k + t - h - 1;
    const Elem eta_inv = f.inv(s.eta);
    Elem out = f.neg(f.mul(eta_inv, f.add(1, f.mul(s.eta, pd.L.at(top)))));
    for (i64 m = 1; m <= k - h - 1; ++m) {
        out = f.sub(out, f.mul(coefficient(pd, m, which, f), pd.L.at(top - m)));
    }
    return out;
}

alg::Matrix parity_check_tilde(const TgrsSpec& s, Coefficients which) {
    const auto pd = parity_data(s);
    const auto& f = *s.field;
    const auto [n, k, t, h] = shape_of(s);
    const Elem lt = l_tilde(s, pd, which);
    std::vector<Elem> c(static_cast<std::size_t>(k - h));
    for (i64 m = 1; m <= k - h - 1; ++m) c[static_cast<std::size_t>(m)] = coefficient(pd, m, which, f);
    return assemble(s, pd, [&](Elem x) {
        Elem val = f.add(f.pow(x, n - h - 1), f.mul(lt, f.pow(x, n - k - t)));
        for (i64 m = 1; m <= k - h - 1; ++m) {
            val = f.add(val, f.mul(c[static_cast<std::size_t>(m)], f.pow(x, n - h - 1 - m)));
        }
        return val;
    });
}

alg::Matrix parity_check_remark(const TgrsSpec& s, Coefficients which) {
    const auto pd = parity_data(s);
    const auto& f = *s.field;
    const auto [n, k, t, h] = shape_of(s);
    const i64 top = k + t - h - 1;
    std::vector<Elem> c(static_cast<std::size_t>(top + 1));
    for (i64 m = 1; m <= top; ++m) c[static_cast<std::size_t>(m)] = coefficient(pd, m, which, f);
    return assemble(s, pd, [&](Elem x) {
        Elem inner = f.pow(x, n - h - 1);
        for (i64 m = 1; m <= top; ++m) {
            inner = f.add(inner, f.mul(c[static_cast<std::size_t>(m)], f.pow(x, n - h - 1 - m)));
        }
        return f.sub(f.pow(x, n - k - t), f.mul(s.eta, inner));
    });
}

}  // namespace tgrs::parity
