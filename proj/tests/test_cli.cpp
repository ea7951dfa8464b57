#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tgrs/cli.hpp"
#include "tgrs/selfdual.hpp"
#include "tgrs/serialize.hpp"

using namespace tgrs;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run tgrs_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tgrs-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        io::write_file(file(name), text);
        return file(name);
    }
};

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

const char* kGf5 =
    R"({"alpha":[0,1,2,3,4],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})";

}  // namespace

TEST_CASE("cli build") {
    TempDir tmp;
    const auto path = tmp.file("sc2.json");
    auto r = tgrs_cli({"build", "splitting-char2", "lambda=1,l=2,t=1,b=1,c=1,eta=2", "--mode", "corrected", "--output", path});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "[4,2] over GF(2^4)"));
    const auto doc = io::parse_spec(io::read_file(path));
    CHECK(doc.spec.n == 4);
    CHECK(doc.spec.field->order() == 16);
    CHECK(selfdual::is_self_dual_matrix(doc.spec));
    CHECK(doc.metadata.at("mode") == "corrected");

    r = tgrs_cli({"build", "subfield-char2", "s=2,m=4,t=1,eta=2", "--mode", "paper-literal"});
    CHECK(r.code == cli::kExitFailed);
    CHECK(has(r.err, "printed v vanishes"));

    r = tgrs_cli({"build", "basis-subset", "m=6,l=2,variant=2,l1=3,eta=2", "--mode", "paper-literal"});
    CHECK(r.code == cli::kExitFailed);
    CHECK(has(r.out, "NOT self-dual"));
    CHECK(has(r.out, "condition (1) fails"));

    for (const auto& [family, params] : std::vector<std::pair<std::string, std::string>>{
             {"subfield-char2", "s=3,m=6,t=2,eta=2"},
             {"basis-subset", "m=6,l=2,variant=3,l1=4,eta=2"},
             {"splitting-oddchar", "p=3,lambda=1,l=1,t=1,b=1,c=1"},
             {"affine-shift", "p=5,s=1,m=2"}}) {
        CAPTURE(family);
        CHECK(tgrs_cli({"build", family, params}).code == cli::kExitOk);
    }

    CHECK(tgrs_cli({"build", "nosuch", ""}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"build", "subfield-char2", "s=2,m=4"}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"build", "subfield-char2", "s=2,m=4,t=1,eta=x"}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"build", "subfield-char2", "s=2,m=4,t=1,eta=2,zz=1"}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"build", "subfield-char2", "s=2,m=4,t=1,eta=2", "--mode", "bogus"}).code == cli::kExitUsage);
    // parameters outside a family's preconditions are usage errors
    CHECK(tgrs_cli({"build", "subfield-char2", "s=2,m=4,t=2,eta=2"}).code == cli::kExitUsage);
}

TEST_CASE("cli analyze") {
    TempDir tmp;
    const auto sc2 = tmp.file("sc2.json");
    REQUIRE(tgrs_cli({"build", "splitting-char2", "lambda=1,l=2,t=1,b=1,c=1,eta=2", "--output", sc2}).code == 0);
    auto r = tgrs_cli({"analyze", "--spec", sc2});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "defect = 0, dual defect = 0"));
    CHECK(has(r.out, "self-dual (matrix): yes"));

    r = tgrs_cli({"analyze", "--spec", sc2, "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "\"self_dual\": true"));
    CHECK(has(r.out, "\"defect_bound\""));

    // alpha = GF(4) inside GF(16), eta outside: MDS
    const auto mds = tmp.write("mds.json",
        R"({"alpha":[0,1,6,7],"eta":2,"field":{"m":4,"modulus":[1,1,0,0,1],"p":2},"h":1,"k":2,"n":4,"t":1,"v":[1,1,1,1]})");
    r = tgrs_cli({"analyze", "--spec", mds});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "classification: MDS"));

    CHECK(tgrs_cli({"analyze", "--spec", tmp.write("bad.json", "{\"alpha\": [")}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"analyze", "--spec", tmp.file("missing.json")}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"analyze"}).code == cli::kExitUsage);

    r = tgrs_cli({"analyze", "--spec", sc2, "--budget", "1"});
    CHECK(r.code == cli::kExitBudget);
    CHECK(has(r.err, "--budget"));
}

TEST_CASE("cli budget from the environment") {
    TempDir tmp;
    const auto spec = tmp.write("gf5.json", kGf5);
    setenv("TGRS_MAX_ENUM", "3", 1);
    const auto r = tgrs_cli({"analyze", "--spec", spec});
    unsetenv("TGRS_MAX_ENUM");
    CHECK(r.code == cli::kExitBudget);
    CHECK(tgrs_cli({"analyze", "--spec", spec}).code == cli::kExitOk);
}

TEST_CASE("cli eta-scan") {
    TempDir tmp;
    auto r = tgrs_cli({"eta-scan", "--spec", tmp.write("gf5.json", kGf5)});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "all rows agree"));
    // header plus four rows
    std::size_t rows = 0;
    std::istringstream is(r.out);
    for (std::string line; std::getline(is, line);)
        if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++rows;
    CHECK(rows == 4);

    const auto gf7 = tmp.write("gf7.json",
        R"({"alpha":[0,1,2,3,4,5],"eta":1,"field":{"m":1,"modulus":[4,1],"p":7},"h":2,"k":3,"n":6,"t":1,"v":[1,1,1,1,1,1]})");
    r = tgrs_cli({"eta-scan", "--spec", gf7, "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    const auto rows_json = nlohmann::json::parse(r.out)["rows"];
    CHECK(rows_json.size() == 6);

    const auto t3 = tmp.write("t3.json",
        R"({"alpha":[0,1,2,3,4,5],"eta":1,"field":{"m":1,"modulus":[4,1],"p":7},"h":0,"k":3,"n":6,"t":3,"v":[1,1,1,1,1,1]})");
    r = tgrs_cli({"eta-scan", "--spec", t3});
    CHECK(r.code == cli::kExitUsage);
    CHECK(has(r.err, "supports"));
}

TEST_CASE("cli verify") {
    TempDir tmp;
    const auto sc2 = tmp.file("sc2.json");
    REQUIRE(tgrs_cli({"build", "splitting-oddchar", "p=3,lambda=1,l=1,t=1,b=1,c=1", "--output", sc2}).code == 0);
    auto r = tgrs_cli({"verify", "--spec", sc2});
    CHECK(r.code == cli::kExitOk);
    CHECK_FALSE(has(r.out, "[FAIL]"));

    r = tgrs_cli({"verify", "--spec", tmp.write("gf5.json", kGf5)});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "[PASS] G * H~^T = 0"));
    CHECK(has(r.out, "[SKIP]"));

    const auto dup = tmp.write("dup.json",
        R"({"alpha":[0,1,2,3,3],"eta":1,"field":{"m":1,"modulus":[3,1],"p":5},"h":1,"k":3,"n":5,"t":2,"v":[1,1,1,1,1]})");
    r = tgrs_cli({"verify", "--spec", dup});
    CHECK(r.code == cli::kExitFailed);
    CHECK(r.out.rfind("[FAIL] validation", 0) == 0);
}

TEST_CASE("cli parity and self-dual") {
    TempDir tmp;
    const auto gf5 = tmp.write("gf5.json", kGf5);
    auto r = tgrs_cli({"parity", "--spec", gf5});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("2 5\n", 0) == 0);

    const auto out = tmp.file("h.json");
    CHECK(tgrs_cli({"parity", "--spec", gf5, "--variant", "remark", "--format", "json", "--output", out}).code == 0);
    const auto h = io::parse_matrix_json(io::read_file(out));
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 5);

    CHECK(tgrs_cli({"self-dual", "--spec", gf5}).code == cli::kExitFailed);
    CHECK(tgrs_cli({"self-dual", "--spec", gf5, "--method", "theorem"}).code == cli::kExitFailed);
    const auto sc2 = tmp.file("sc2.json");
    REQUIRE(tgrs_cli({"build", "splitting-char2", "lambda=1,l=2,t=1,b=1,c=1,eta=2", "--output", sc2}).code == 0);
    CHECK(tgrs_cli({"self-dual", "--spec", sc2}).code == cli::kExitOk);
    r = tgrs_cli({"self-dual", "--spec", sc2, "--method", "theorem"});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "lambda = 1"));
}

TEST_CASE("cli suite") {
    auto a = tgrs_cli({"suite", "subfield-mds", "--seed", "7", "--format", "json"});
    auto b = tgrs_cli({"suite", "9", "--seed", "7", "--format", "json"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    auto c = tgrs_cli({"suite", "subfield-mds", "--seed", "8", "--format", "json"});
    CHECK(c.out != a.out);
    CHECK(tgrs_cli({"suite", "nosuch"}).code == cli::kExitUsage);
}

TEST_CASE("cli usage") {
    CHECK(tgrs_cli({}).code == cli::kExitUsage);
    CHECK(tgrs_cli({"frobnicate"}).code == cli::kExitUsage);
    const auto r = tgrs_cli({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(has(r.out, "eta-scan"));
}
