#include <doctest.h>

#include "helpers.hpp"
#include "tgrs/error.hpp"
#include "tgrs/parity.hpp"

using namespace tgrs;
using gf::Elem;
using gf::FieldCtx;
using parity::Coefficients;

namespace {

TgrsSpec full_gf5(std::size_t k, std::size_t t, std::size_t h, Elem eta) {
    TgrsSpec s;
    s.field = FieldCtx::create(5, 1);
    s.n = 5;
    s.k = k;
    s.t = t;
    s.h = h;
    s.eta = eta;
    s.alpha = {0, 1, 2, 3, 4};
    s.v.assign(5, 1);
    return s;
}

}  // namespace

TEST_CASE("vandermonde weights") {
    const auto f3 = FieldCtx::create(3, 1);
    CHECK(parity::vandermonde_weights(*f3, std::vector<Elem>{0, 1}) == std::vector<Elem>{2, 1});
    const auto f5 = FieldCtx::create(5, 1);
    CHECK(parity::vandermonde_weights(*f5, std::vector<Elem>{0, 1, 2, 3, 4}) == std::vector<Elem>(5, 4));
    CHECK_THROWS_AS(parity::vandermonde_weights(*f5, std::vector<Elem>{1, 1}), Error);

    std::mt19937_64 rng(3);
    for (std::uint64_t q : {4, 7, 9, 13, 16}) {
        const auto f = testing::field_of_order(q);
        const auto of = testing::oracle_field(*f);
        for (int rep = 0; rep < 10; ++rep) {
            const std::size_t n = 2 + rng() % (f->order() - 1);
            const auto alpha = testing::distinct_points(*f, n, rng);
            const auto u = parity::vandermonde_weights(*f, alpha);
            CHECK(testing::widen(u) == oracle::vandermonde_weights(of, testing::widen(alpha)));
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc = f->add(acc, f->mul(u[l], f->pow(alpha[l], j)));
                CHECK(acc == (j == n - 1 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("power sums L_m") {
    const auto f5 = FieldCtx::create(5, 1);
    const std::vector<Elem> alpha{0, 1, 2, 3, 4};
    const auto u = parity::vandermonde_weights(*f5, alpha);
    const auto L = parity::l_values(*f5, alpha, u, -4, 6);
    CHECK(L.at(0) == 1);
    for (int m = -4; m < 0; ++m) CHECK(L.at(m) == 0);
    CHECK(L.at(4) == 1);
    CHECK_THROWS_AS(parity::l_values(*f5, alpha, u, -5, 0), Error);

    // x^5 - x: a_1 = 4, everything else zero below the leading term
    const std::vector<Elem> a{0, 4, 0, 0, 0, 1};
    const auto R = parity::l_values_recursive(*f5, a, 5);
    for (int m = 1; m <= 5; ++m) CHECK(R.at(m) == L.at(m));

    std::mt19937_64 rng(17);
    for (std::uint64_t q : {5, 7, 8, 9, 11, 13}) {
        const auto f = testing::field_of_order(q);
        const auto of = testing::oracle_field(*f);
        for (int rep = 0; rep < 20; ++rep) {
            const std::size_t n = 2 + rng() % (std::min<std::uint64_t>(q, 8) - 1);
            const auto alpha = testing::distinct_points(*f, n, rng);
            const auto uu = parity::vandermonde_weights(*f, alpha);
            const auto direct = parity::l_values(*f, alpha, uu, 1, static_cast<std::int64_t>(n));
            const auto coeffs = oracle::poly_from_roots(of, testing::widen(alpha));
            const std::vector<Elem> ac(coeffs.begin(), coeffs.end());
            const auto rec = parity::l_values_recursive(*f, ac, static_cast<std::int64_t>(n));
            for (std::int64_t m = 1; m <= static_cast<std::int64_t>(n); ++m) CHECK(direct.at(m) == rec.at(m));
        }
    }
}

TEST_CASE("L_{2s-1} = -a_{n-(2s-1)} once L_1..L_{s-1} vanish") {
    std::mt19937_64 rng(23);
    std::size_t hits = 0;
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
        const auto f = testing::field_of_order(q);
        for (int rep = 0; rep < 200; ++rep) {
            const std::size_t n = 2 + rng() % (std::min<std::uint64_t>(q, 8) - 1);
            const auto alpha = testing::distinct_points(*f, n, rng);
            const auto pd_u = parity::vandermonde_weights(*f, alpha);
            const auto L = parity::l_values(*f, alpha, pd_u, 1, static_cast<std::int64_t>(n));
            const auto a = alg::poly_from_roots(f, alpha).coeffs();
            for (std::size_t s = 1; 2 * s - 1 <= n; ++s) {
                bool leading_zero = true;
                for (std::size_t j = 1; j < s; ++j) leading_zero = leading_zero && L.at(j) == 0;
                if (!leading_zero) break;
                ++hits;
                CHECK(L.at(2 * s - 1) == f->neg(a[n - (2 * s - 1)]));
            }
        }
    }
    CHECK(hits > 1000);
}

TEST_CASE("l_tilde special cases") {
    // h = k-1: the sum is empty
    auto s = full_gf5(3, 1, 2, 3);
    auto pd = parity::parity_data(s);
    const auto& f = *s.field;
    const Elem expect = f.neg(f.mul(f.inv(s.eta), f.add(1, f.mul(s.eta, pd.L.at(1)))));
    CHECK(parity::l_tilde(s, pd, Coefficients::corrected) == expect);
    CHECK(parity::l_tilde(s, pd, Coefficients::printed) == expect);

    // GF(5) full alpha: L_1..L_3 = 0, so the value is -eta^-1 whenever s <= 3
    auto s2 = full_gf5(3, 2, 1, 2);
    auto pd2 = parity::parity_data(s2);
    CHECK(pd2.L.at(1) == 0);
    CHECK(pd2.L.at(2) == 0);
    CHECK(parity::l_tilde(s2, pd2, Coefficients::corrected) == f.neg(f.inv(2)));
}

TEST_CASE("parity-check matrices generate the dual code") {
    std::mt19937_64 rng(31);
    std::size_t checked = 0;
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
        const auto f = testing::field_of_order(q);
        for (int rep = 0; rep < 25; ++rep) {
            auto spec = testing::random_valid_spec(f, 12, rng);
            const auto g = generator_matrix(spec);
            const auto ht = parity::parity_check_tilde(spec);
            const auto hr = parity::parity_check_remark(spec);
            CHECK(ht.rows() == spec.n - spec.k);
            CHECK(alg::mul_transpose(g, ht).is_zero());
            CHECK(alg::mul_transpose(g, hr).is_zero());
            CHECK(alg::rank(ht) == spec.n - spec.k);
            CHECK(alg::row_space_equal(ht, alg::nullspace(g)));
            CHECK(alg::row_space_equal(ht, hr));
            ++checked;
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("parity-check matrices agree with a brute-force span oracle") {
    std::mt19937_64 rng(37);
    const auto f = FieldCtx::create(3, 1);
    const auto of = testing::oracle_field(*f);
    for (int rep = 0; rep < 10; ++rep) {
        auto spec = testing::random_valid_spec(f, 3, rng);
        const auto g = testing::to_mat(generator_matrix(spec));
        const auto h = testing::to_mat(parity::parity_check_tilde(spec));
        CHECK(oracle::rank(of, h, spec.n) == spec.n - spec.k);
        for (const auto& row : oracle::mul_transpose(of, g, h))
            for (auto x : row) CHECK(x == 0);
    }
    const auto f4 = FieldCtx::create(2, 2);
    const auto of4 = testing::oracle_field(*f4);
    for (int rep = 0; rep < 10; ++rep) {
        auto spec = testing::random_valid_spec(f4, 4, rng);
        const auto ht = testing::to_mat(parity::parity_check_tilde(spec));
        const auto hr = testing::to_mat(parity::parity_check_remark(spec));
        CHECK(oracle::rows_in_span(of4, ht, hr));
        CHECK(oracle::rows_in_span(of4, hr, ht));
    }
}

TEST_CASE("parity-check shapes") {
    // n = k + t: no plain-power rows
    TgrsSpec s;
    s.field = FieldCtx::create(7, 1);
    s.n = 6;
    s.k = 3;
    s.t = 3;
    s.h = 1;
    s.eta = 2;
    s.alpha = {1, 2, 3, 4, 5, 6};
    s.v = {1, 2, 3, 4, 5, 6};
    const auto h = parity::parity_check_tilde(s);
    CHECK(h.rows() == 3);
    CHECK(alg::mul_transpose(generator_matrix(s), h).is_zero());

    // t = 1, h = k-1: tilde and remark forms coincide up to the special-row scale
    auto t1 = full_gf5(3, 1, 2, 3);
    const auto ht = parity::parity_check_tilde(t1);
    const auto hr = parity::parity_check_remark(t1);
    for (std::size_t r = 0; r + 1 < ht.rows(); ++r)
        for (std::size_t c = 0; c < ht.cols(); ++c) CHECK(ht(r, c) == hr(r, c));
    CHECK(alg::row_space_equal(ht, hr));
}

TEST_CASE("scaling v scales parity columns inversely") {
    std::mt19937_64 rng(41);
    const auto f = FieldCtx::create(11, 1);
    for (int rep = 0; rep < 20; ++rep) {
        auto spec = testing::random_valid_spec(f, 10, rng);
        const Elem c = testing::nonzero(*f, rng);
        auto scaled = spec;
        for (auto& x : scaled.v) x = f->mul(x, c);
        const auto a = parity::parity_check_tilde(spec);
        const auto b = parity::parity_check_tilde(scaled);
        const Elem ci = f->inv(c);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t col = 0; col < a.cols(); ++col) CHECK(b(r, col) == f->mul(a(r, col), ci));
    }
}

TEST_CASE("printed coefficients are only valid when the leading L_m vanish") {
    // k - h >= 3 with L_1 != 0 is where the printed special row departs
    std::mt19937_64 rng(43);
    const auto f = FieldCtx::create(11, 1);
    std::size_t printed_failures = 0;
    for (int rep = 0; rep < 60; ++rep) {
        auto spec = testing::random_spec(f, 9, 4, 1, 0, rng);
        const auto g = generator_matrix(spec);
        const auto pd = parity::parity_data(spec);
        const bool printed_ok = alg::mul_transpose(g, parity::parity_check_tilde(spec, Coefficients::printed)).is_zero();
        if (pd.L.at(1) == 0 && pd.L.at(2) == 0) CHECK(printed_ok);
        printed_failures += !printed_ok;
        CHECK(alg::mul_transpose(g, parity::parity_check_tilde(spec)).is_zero());
    }
    CHECK(printed_failures > 0);
}
