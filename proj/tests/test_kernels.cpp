#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tgrs/kernels.hpp"

using namespace tgrs;
using alg::Matrix;
using gf::Elem;
using gf::FieldCtx;

namespace {

Matrix random_matrix(const gf::Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(rng() % f->order());
    return m;
}

Matrix random_full_rank(const gf::Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    while (true) {
        auto m = random_matrix(f, rows, cols, rng);
        if (alg::rank(m) == rows) return m;
    }
}

}  // namespace

TEST_CASE("parallel product equals serial product") {
    std::mt19937_64 rng(3);
    auto f = FieldCtx::create(2, 8);
    for (std::size_t dim : {1u, 5u, 40u, 70u}) {
        auto a = random_matrix(f, dim, dim + 3, rng);
        auto b = random_matrix(f, dim + 3, dim, rng);
        CHECK(kernels::mat_mul_parallel(a, b) == kernels::mat_mul_serial(a, b));
    }
}

TEST_CASE("projective counts") {
    CHECK(kernels::projective_count(5, 2) == 6);
    CHECK(kernels::projective_count(16, 6) == (16777216ull - 1) / 15);
    CHECK(kernels::projective_count(2, 1) == 1);
    CHECK(kernels::projective_count(1u << 20, 5) == UINT64_MAX);
}

TEST_CASE("minimum weight against full enumeration") {
    std::mt19937_64 rng(5);
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}, {7u, 1u}}) {
        auto f = FieldCtx::create(p, m);
        const oracle::Field o(p, f->modulus());
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t k = 1 + rng() % 3;
            const std::size_t n = k + rng() % 5;
            auto g = random_full_rank(f, k, n, rng);
            oracle::Mat om(k);
            for (std::size_t r = 0; r < k; ++r) om[r].assign(g.row(r).begin(), g.row(r).end());
            const auto expect = oracle::min_distance(o, om);
            CHECK(kernels::min_weight_serial(g) == expect);
            CHECK(kernels::min_weight_parallel(g) == expect);
        }
    }
}

TEST_CASE("minimum weight, serial vs parallel on larger codes") {
    std::mt19937_64 rng(9);
    auto f = FieldCtx::create(2, 4);
    for (int trial = 0; trial < 4; ++trial) {
        auto g = random_full_rank(f, 4, 10, rng);
        CHECK(kernels::min_weight_parallel(g) == kernels::min_weight_serial(g));
    }
    // Reed-Solomon [4,2] over GF(5): rows all-ones and alpha
    auto f5 = FieldCtx::create(5, 1);
    auto rs = Matrix::from_rows(f5, {{1, 1, 1, 1}, {1, 2, 3, 4}});
    CHECK(kernels::min_weight_parallel(rs) == 3);
}

TEST_CASE("dependent columns give the dual distance") {
    std::mt19937_64 rng(21);
    for (auto [p, m] : {std::pair{2u, 2u}, {3u, 1u}, {5u, 1u}}) {
        auto f = FieldCtx::create(p, m);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t k = 1 + rng() % 3;
            const std::size_t n = k + 1 + rng() % 4;
            auto g = random_full_rank(f, k, n, rng);
            // d(C^perp) is the smallest dependent column set of G
            auto dual = alg::nullspace(g);
            const auto via_cols = kernels::min_dependent_columns(g, 1u << 20);
            REQUIRE(via_cols.has_value());
            CHECK(*via_cols == kernels::min_weight_serial(dual));
        }
    }
    auto f5 = FieldCtx::create(5, 1);
    auto g = Matrix::from_rows(f5, {{1, 1, 1, 1}, {1, 2, 3, 4}});
    CHECK_FALSE(kernels::min_dependent_columns(g, 2).has_value());
}

TEST_CASE("subset value collection") {
    auto f = FieldCtx::create(7, 1);
    const std::vector<Elem> pts{0, 1, 2, 3, 4, 5, 6};
    const oracle::Field o(7, f->modulus());
    for (std::size_t r = 1; r <= 5; ++r) {
        kernels::SubsetValue val = [&](const kernels::SubsetSums& s) -> std::optional<Elem> {
            if (s.e1 == 3) return std::nullopt;
            return f->sub(f->mul(s.e1, s.e2), s.e3);
        };
        const auto serial = kernels::collect_subset_values_serial(*f, pts, r, val);
        CHECK(kernels::collect_subset_values_parallel(*f, pts, r, val) == serial);
        std::vector<char> expect(7, 0);
        for (const auto& idx : oracle::subsets(pts.size(), r)) {
            std::vector<std::uint64_t> s;
            for (auto i : idx) s.push_back(pts[i]);
            const auto sym = oracle::elementary(o, s);
            if (sym.e1 == 3) continue;
            expect[o.sub(o.mul(sym.e1, sym.e2), sym.e3)] = 1;
        }
        CHECK(serial == expect);
    }
    CHECK(kernels::binomial(10, 3) == 120);
    CHECK(kernels::binomial(3, 5) == 0);
    // enough subsets to cross several parallel blocks
    auto f16 = FieldCtx::create(2, 4);
    const auto all = gf::enumerate_field(*f16);
    kernels::SubsetValue e3 = [](const kernels::SubsetSums& s) -> std::optional<Elem> { return s.e3; };
    CHECK(kernels::collect_subset_values_parallel(*f16, all, 7, e3) ==
          kernels::collect_subset_values_serial(*f16, all, 7, e3));
}
