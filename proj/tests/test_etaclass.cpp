#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tgrs/error.hpp"
#include "tgrs/etaclass.hpp"

using namespace tgrs;
using etaclass::Convention;
using gf::Elem;
using gf::FieldCtx;

namespace {

/// Sets recomputed from oracle elementary symmetric functions.
struct OracleSets {
    std::set<oracle::u64> s1, s2, s2_tilde;
};

OracleSets oracle_sets(const oracle::Field& f, const std::vector<oracle::u64>& alpha, std::size_t k) {
    OracleSets out;
    for (const auto& idx : oracle::subsets(alpha.size(), k)) {
        std::vector<oracle::u64> sub;
        for (auto i : idx) sub.push_back(alpha[i]);
        const auto e = oracle::elementary(f, sub);
        out.s1.insert(f.neg(e.e1));
        out.s2.insert(f.sub(f.mul(e.e1, e.e2), e.e3));
    }
    for (const auto& idx : oracle::subsets(alpha.size(), k + 1)) {
        std::vector<oracle::u64> sub;
        for (auto i : idx) sub.push_back(alpha[i]);
        const auto e = oracle::elementary(f, sub);
        if (e.e1 == 0) out.s2_tilde.insert(f.neg(e.e3));
    }
    return out;
}

std::vector<Elem> as_vec(const std::set<oracle::u64>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("S1 under both conventions") {
    const auto f3 = FieldCtx::create(3, 1);
    const std::vector<Elem> a3{0, 1, 2};
    CHECK(etaclass::s1_set(*f3, a3, 2, Convention::paper_literal, kBuiltinBudget) == std::vector<Elem>{0, 1, 2});
    CHECK(etaclass::s1_set(*f3, a3, 2, Convention::proof_consistent, kBuiltinBudget) == std::vector<Elem>{0, 1, 2});

    const auto f7 = FieldCtx::create(7, 1);
    CHECK(etaclass::s1_set(*f7, a3, 2, Convention::paper_literal, kBuiltinBudget) == std::vector<Elem>{1, 2, 3});
    CHECK(etaclass::s1_set(*f7, a3, 2, Convention::proof_consistent, kBuiltinBudget) == std::vector<Elem>{4, 5, 6});
}

TEST_CASE("S2 and S2~ on GF(5)") {
    const auto f5 = FieldCtx::create(5, 1);
    const std::vector<Elem> a{0, 1, 2, 3, 4};
    CHECK(etaclass::s2_set(*f5, a, 3, Convention::proof_consistent, kBuiltinBudget) ==
          std::vector<Elem>{0, 1, 2, 3, 4});
    CHECK(etaclass::s2_tilde_set(*f5, a, 3, Convention::proof_consistent, kBuiltinBudget) == std::vector<Elem>{0});
    CHECK(etaclass::s2_set(*f5, a, 3, Convention::paper_literal, kBuiltinBudget) ==
          std::vector<Elem>{0, 1, 2, 3, 4});
    CHECK(etaclass::s2_tilde_set(*f5, a, 3, Convention::paper_literal, kBuiltinBudget) == std::vector<Elem>{0});

    // no zero-sum 3-subset in {1, 2} plus an extra point
    const std::vector<Elem> b{1, 2, 4};
    CHECK(etaclass::s2_tilde_set(*f5, b, 2, Convention::proof_consistent, kBuiltinBudget).empty());

    CHECK_THROWS_AS(etaclass::s2_set(*f5, a, 3, Convention::proof_consistent, 5), BudgetExceeded);
}

TEST_CASE("sets match the elementary symmetric oracle") {
    std::mt19937_64 rng(13);
    for (std::uint64_t q : {7, 8, 9, 11, 13}) {
        const auto f = testing::field_of_order(q);
        const auto of = testing::oracle_field(*f);
        for (int rep = 0; rep < 8; ++rep) {
            const std::size_t n = 4 + rng() % 5;
            const std::size_t k = 2 + rng() % (n - 2);
            const auto alpha = testing::distinct_points(*f, n, rng);
            const auto expect = oracle_sets(of, testing::widen(alpha), k);
            const auto sets = etaclass::eta_sets(*f, alpha, k, Convention::proof_consistent, kBuiltinBudget);
            CHECK(sets.s1 == as_vec(expect.s1));
            CHECK(sets.s2 == as_vec(expect.s2));
            CHECK(sets.s2_tilde == as_vec(expect.s2_tilde));

            // permuting alpha leaves the sets alone
            auto shuffled = alpha;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            const auto again = etaclass::eta_sets(*f, shuffled, k, Convention::proof_consistent, kBuiltinBudget);
            CHECK(again.s1 == sets.s1);
            CHECK(again.s2 == sets.s2);
            CHECK(again.s2_tilde == sets.s2_tilde);

            // alpha -> c alpha scales S1 by c and S2, S2~ by c^3
            const Elem c = testing::nonzero(*f, rng);
            std::vector<Elem> scaled;
            for (Elem x : alpha) scaled.push_back(f->mul(c, x));
            const auto sc = etaclass::eta_sets(*f, scaled, k, Convention::proof_consistent, kBuiltinBudget);
            const Elem c3 = f->pow(c, 3);
            auto map = [&](const std::vector<Elem>& s, Elem by) {
                std::vector<Elem> out;
                for (Elem x : s) out.push_back(f->mul(x, by));
                std::sort(out.begin(), out.end());
                return out;
            };
            CHECK(sc.s1 == map(sets.s1, c));
            CHECK(sc.s2 == map(sets.s2, c3));
            CHECK(sc.s2_tilde == map(sets.s2_tilde, c3));
        }
    }
}

TEST_CASE("predicted defect equals the brute-force defect") {
    std::mt19937_64 rng(19);
    std::size_t cases = 0;
    for (std::uint64_t q : {5, 7, 8, 9}) {
        const auto f = testing::field_of_order(q);
        for (int rep = 0; rep < 4; ++rep) {
            const std::size_t n = 4 + rng() % (std::min<std::uint64_t>(q, 7) - 3);
            const std::size_t k = 2 + rng() % (n - 3);
            for (std::size_t t : {1u, 2u}) {
                auto spec = testing::random_spec(f, n, k, t, k - t, rng);
                const auto sets = etaclass::eta_sets(*f, spec.alpha, k, Convention::proof_consistent, kBuiltinBudget);
                for (Elem eta = 1; eta < f->order(); ++eta) {
                    spec.eta = eta;
                    const auto d = min_distance(generator_matrix(spec), kBuiltinBudget);
                    CHECK(etaclass::predict_defect(spec, sets) == singleton_defect(n, k, d));
                    ++cases;
                }
            }
        }
    }
    CHECK(cases > 100);
}

TEST_CASE("subfield evaluation points with eta outside predict MDS") {
    const auto f16 = FieldCtx::create(2, 4);
    TgrsSpec s;
    s.field = f16;
    s.n = 4;
    s.k = 2;
    s.t = 1;
    s.h = 1;
    s.alpha = gf::subfield_elements(*f16, 2);
    s.v.assign(4, 1);
    s.eta = 2;
    CHECK(etaclass::predict_defect(s, Convention::proof_consistent, kBuiltinBudget) == 0);
}

TEST_CASE("unsupported twist") {
    std::mt19937_64 rng(2);
    const auto f = FieldCtx::create(7, 1);
    auto s = testing::random_spec(f, 7, 3, 3, 0, rng);
    CHECK_FALSE(etaclass::supported(s));
    try {
        etaclass::predict_defect(s, Convention::proof_consistent, kBuiltinBudget);
        FAIL("expected unsupported_twist");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported_twist);
    }
}

TEST_CASE("published GF(5) example comparison") {
    const auto cmp = etaclass::compare_published_example(kBuiltinBudget);
    CHECK(cmp.published_s2 == std::vector<Elem>{0, 1, 2, 3});
    CHECK(cmp.published_s2_tilde == std::vector<Elem>{1, 2, 3});
    CHECK(cmp.proof.s2 == std::vector<Elem>{0, 1, 2, 3, 4});
    CHECK(cmp.proof.s2_tilde == std::vector<Elem>{0});
    CHECK_FALSE(cmp.literal_matches_published);
    CHECK_FALSE(cmp.proof_matches_published);
    CHECK(cmp.proof_mispredicts.empty());
    CHECK(cmp.published_mispredicts == std::vector<Elem>{1, 2, 3, 4});
    REQUIRE(cmp.notes.size() == 4);
    CHECK(cmp.notes[0] == "published S2 {0,1,2,3}, S2~ {1,2,3} (recorded values)");
}
