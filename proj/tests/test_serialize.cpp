#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tgrs/error.hpp"
#include "tgrs/parity.hpp"
#include "tgrs/serialize.hpp"

using namespace tgrs;
using gf::Elem;

namespace {

std::string golden(const std::string& name) { return io::read_file(std::string(TGRS_GOLDEN_DIR) + "/" + name); }

bool same_spec(const TgrsSpec& a, const TgrsSpec& b) {
    return *a.field == *b.field && a.n == b.n && a.k == b.k && a.t == b.t && a.h == b.h && a.eta == b.eta &&
           a.alpha == b.alpha && a.v == b.v;
}

const char* kMinimal =
    R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})";

}  // namespace

TEST_CASE("golden spec round-trips byte for byte") {
    const auto text = golden("splitting_char2.json");
    const auto doc = io::parse_spec(text);
    CHECK(io::dump_spec(doc) == text);
    CHECK(doc.metadata.at("family") == "splitting-char2");
    CHECK(doc.spec.field->order() == 16);
    CHECK(doc.spec.alpha == std::vector<Elem>{2, 3, 4, 5});
    validate_spec(doc.spec);
}

TEST_CASE("golden parity matrices") {
    const auto spec = io::parse_spec(golden("splitting_char2.json")).spec;
    const auto text = golden("splitting_char2_tilde.txt");
    const auto h = io::parse_matrix_text(spec.field, text);
    CHECK(io::dump_matrix_text(h) == text);
    CHECK(alg::row_space_equal(h, parity::parity_check_tilde(spec)));

    const auto of = testing::oracle_field(*spec.field);
    const auto g = oracle::tgrs_generator(of, spec.k, spec.t, spec.h, spec.eta, testing::widen(spec.alpha),
                                          testing::widen(spec.v));
    for (const auto& row : oracle::mul_transpose(of, g, testing::to_mat(h)))
        for (auto x : row) CHECK(x == 0);

    const auto js = golden("splitting_char2_tilde.json");
    const auto hj = io::parse_matrix_json(js);
    CHECK(io::dump_matrix_json(hj) == js);
    CHECK(hj.entries() == h.entries());
}

TEST_CASE("random specs round-trip") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {3, 5, 9, 16, 49, 64}) {
        const auto f = testing::field_of_order(q);
        for (int i = 0; i < 20; ++i) {
            const auto s = testing::random_valid_spec(f, 8, rng);
            io::SpecDocument doc{s, {}};
            if (i % 2) doc.metadata = {{"mode", "corrected"}, {"note", "x"}};
            const auto text = io::dump_spec(doc);
            const auto back = io::parse_spec(text);
            CHECK(same_spec(back.spec, s));
            CHECK(back.metadata == doc.metadata);
            CHECK(io::dump_spec(back) == text);
            CHECK((text.find("metadata") != std::string::npos) == !doc.metadata.empty());

            const auto g = generator_matrix(s);
            CHECK(io::parse_matrix_text(f, io::dump_matrix_text(g)).entries() == g.entries());
            CHECK(io::parse_matrix_json(io::dump_matrix_json(g)).entries() == g.entries());
        }
    }
}

TEST_CASE("key order of the input does not matter") {
    const auto a = io::parse_spec(kMinimal);
    const auto b = io::parse_spec(
        R"({"v":[1,1,1,1,1],"t":2,"n":5,"k":3,"h":1,"field":{"p":5,"modulus":[3,1],"m":1},"eta":1,"alpha":[0,1,2,3,4]})");
    CHECK(io::dump_spec(a) == io::dump_spec(b));
}

TEST_CASE("parse errors") {
    auto rejects = [](const std::string& text) {
        try {
            io::parse_spec(text);
        } catch (const Error& e) {
            return e.code() == Errc::parse_error;
        }
        return false;
    };
    CHECK(rejects("{"));
    CHECK(rejects("[]"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,5],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1.5,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":-1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1],"extra":0})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":2,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":1,"modulus":[3,1],"p":6},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":2,"modulus":[1,0,1],"p":2},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})"));
    CHECK(rejects(R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1],"metadata":{"a":1}})"));

    // validation is separate from parsing
    const auto dup = io::parse_spec(
        R"({"alpha":[0,1,2,3,3],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})");
    CHECK_THROWS_AS(validate_spec(dup.spec), Error);

    const auto f = gf::FieldCtx::create(5, 1);
    CHECK_THROWS_AS(io::parse_matrix_text(f, "2 2\n1 2\n3"), Error);
    CHECK_THROWS_AS(io::parse_matrix_text(f, "1 2\n1 7\n"), Error);
    CHECK_THROWS_AS(io::parse_matrix_text(f, "1 1\n1 1\n"), Error);
    CHECK_THROWS_AS(io::read_file("/nonexistent/spec.json"), Error);
}
