// Glue between library types and the oracles, plus random spec draws.

#pragma once

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tgrs/code.hpp"

namespace testing {

using tgrs::TgrsSpec;
using tgrs::gf::Elem;

/// GF(q) for a prime power q.
inline tgrs::gf::Field field_of_order(std::uint64_t q) {
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned m = 0;
        for (std::uint64_t r = q; r > 1; r /= p) ++m;
        return tgrs::gf::FieldCtx::create(p, m);
    }
    return nullptr;
}

inline oracle::Field oracle_field(const tgrs::gf::FieldCtx& f) { return oracle::Field(f.p(), f.modulus()); }

inline oracle::Mat to_mat(const tgrs::alg::Matrix& m) {
    oracle::Mat out(m.rows(), std::vector<oracle::u64>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

inline std::vector<oracle::u64> widen(const std::vector<Elem>& v) { return {v.begin(), v.end()}; }

inline Elem nonzero(const tgrs::gf::FieldCtx& f, std::mt19937_64& rng) {
    return static_cast<Elem>(1 + rng() % (f.order() - 1));
}

inline std::vector<Elem> distinct_points(const tgrs::gf::FieldCtx& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<Elem> all(f.order());
    for (Elem i = 0; i < all.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    return all;
}

inline TgrsSpec random_spec(const tgrs::gf::Field& f, std::size_t n, std::size_t k, std::size_t t, std::size_t h,
                            std::mt19937_64& rng) {
    TgrsSpec s;
    s.field = f;
    s.n = n;
    s.k = k;
    s.t = t;
    s.h = h;
    s.eta = nonzero(*f, rng);
    s.alpha = distinct_points(*f, n, rng);
    for (std::size_t i = 0; i < n; ++i) s.v.push_back(nonzero(*f, rng));
    return s;
}

/// Random legal (n, k, t, h) with n <= min(q, max_n).
inline TgrsSpec random_valid_spec(const tgrs::gf::Field& f, std::size_t max_n, std::mt19937_64& rng) {
    const std::size_t top = std::min<std::size_t>(max_n, f->order());
    const std::size_t n = 3 + rng() % (top - 2);
    const std::size_t k = 1 + rng() % (n - 2);
    const std::size_t t = 1 + rng() % (n - k);
    const std::size_t h = rng() % k;
    return random_spec(f, n, k, t, h, rng);
}

}  // namespace testing
