/**************************************************************************
 * cli.cpp
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

#include "tgrs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgrs/constructions.hpp"
#include "tgrs/error.hpp"
#include "tgrs/etaclass.hpp"
#include "tgrs/parity.hpp"
#include "tgrs/selfdual.hpp"
#include "tgrs/serialize.hpp"
#include "tgrs/suites.hpp"

namespace tgrs::cli {

namespace {

using json = nlohmann::json;
using constructions::Mode;
using etaclass::Convention;

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::invalid_argument, what); }

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
    std::uint64_t x = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, x);
    if (ec != std::errc() || ptr != end || text.empty())
        throw Error(Errc::parse_error, "parameter '" + key + "' expects a non-negative integer, got '" + text + "'");
    return x;
}

/// "k=v,k=v" against a fixed key list; every key is required unless it has a default.
class Params {
public:
    Params(const std::string& text, std::map<std::string, std::optional<std::uint64_t>> keys) {
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(Errc::parse_error, "parameter '" + item + "' is not key=value");
            const auto key = item.substr(0, eq);
            if (!keys.count(key)) throw Error(Errc::parse_error, "unknown parameter '" + key + "'");
            if (values_.count(key)) throw Error(Errc::parse_error, "parameter '" + key + "' given twice");
            values_[key] = parse_uint(key, item.substr(eq + 1));
        }
        for (const auto& [key, fallback] : keys) {
            if (values_.count(key)) continue;
            if (!fallback) throw Error(Errc::parse_error, "missing parameter '" + key + "'");
            defaults_.insert(key);
            values_[key] = *fallback;
        }
    }

    std::uint64_t operator[](const std::string& key) const { return values_.at(key); }
    bool given(const std::string& key) const { return !defaults_.count(key); }

    std::string canonical() const {
        std::string out;
        for (const auto& [k, v] : values_)
            if (given(k)) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
        return out;
    }

private:
    std::map<std::string, std::uint64_t> values_;
    std::set<std::string> defaults_;
};

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

constructions::ConstructionResult build(const std::string& family, const Params& p, Mode mode) {
    auto u = [&](const char* k) { return static_cast<unsigned>(p[k]); };
    auto e = [&](const char* k) { return static_cast<Elem>(p[k]); };
    if (family == "subfield-char2") return constructions::build_subfield_char2(u("s"), u("m"), p["t"], e("eta"), mode);
    if (family == "basis-subset")
        return constructions::build_basis_subset_char2(u("m"), u("l"), static_cast<int>(p["variant"]), u("l1"), e("eta"),
                                                       mode);
    if (family == "splitting-char2")
        return constructions::build_splitting_char2(u("lambda"), p["l"], p["t"], e("b"), e("c"), e("eta"), mode);
    if (family == "splitting-oddchar")
        return constructions::build_splitting_oddchar(p["p"], u("lambda"), p["l"], p["t"], e("b"), e("c"), mode);
    std::optional<Elem> beta;
    if (p.given("beta")) beta = e("beta");
    return constructions::build_affine_shift_oddchar(p["p"], u("s"), u("m"), beta, mode);
}

std::map<std::string, std::optional<std::uint64_t>> family_keys(const std::string& family) {
    using K = std::map<std::string, std::optional<std::uint64_t>>;
    if (family == "subfield-char2") return K{{"s", {}}, {"m", {}}, {"t", {}}, {"eta", {}}};
    if (family == "basis-subset") return K{{"m", {}}, {"l", {}}, {"variant", 1}, {"l1", 0}, {"eta", {}}};
    if (family == "splitting-char2")
        return K{{"lambda", {}}, {"l", {}}, {"t", {}}, {"b", {}}, {"c", {}}, {"eta", {}}};
    if (family == "splitting-oddchar") return K{{"p", {}}, {"lambda", {}}, {"l", {}}, {"t", {}}, {"b", {}}, {"c", {}}};
    if (family == "affine-shift") return K{{"p", {}}, {"s", {}}, {"m", {}}, {"beta", kUnset}};
    usage("unknown construction '" + family +
          "' (expected subfield-char2, basis-subset, splitting-char2, splitting-oddchar or affine-shift)");
}

Mode parse_mode(const std::string& s) { return s == "paper-literal" ? Mode::paper_literal : Mode::corrected; }
Convention parse_convention(const std::string& s) {
    return s == "paper-literal" ? Convention::paper_literal : Convention::proof_consistent;
}

std::string set_text(const std::vector<Elem>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

bool contains(const std::vector<Elem>& xs, Elem x) { return std::binary_search(xs.begin(), xs.end(), x); }

TgrsSpec load_spec(const std::string& path) {
    auto spec = io::parse_spec(io::read_file(path)).spec;
    validate_spec(spec);
    return spec;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) out << text;
    else io::write_file(path, text);
}

// ---------------------------------------------------------------- commands

struct Shared {
    std::string spec_path;
    std::string output;
    std::string mode = "corrected";
    std::string convention = "proof-consistent";
    std::string format = "text";
    std::string variant = "tilde";
    std::string method = "matrix";
    std::uint64_t budget = 0;
    std::uint64_t seed = suites::kDefaultSeed;
    std::string family;
    std::string params;
    std::string suite;
};

int cmd_build(const Shared& o, std::ostream& out) {
    const auto keys = family_keys(o.family);
    const Params params(o.params, keys);
    const auto mode = parse_mode(o.mode);
    const auto r = build(o.family, params, mode);

    io::SpecDocument doc{r.spec, {{"family", r.family}, {"mode", constructions::mode_name(mode)},
                                  {"parameters", params.canonical()}}};
    const auto text = io::dump_spec(doc);
    if (o.output.empty()) out << text;
    else io::write_file(o.output, text);

    const auto& f = *r.spec.field;
    out << r.family << " (" << constructions::mode_name(mode) << "): [" << r.spec.n << "," << r.spec.k << "] over "
        << f.describe() << "\n";
    if (!o.output.empty()) out << "spec written to " << o.output << "\n";
    out << "self-dual: " << (r.verified_self_dual ? "verified" : "NOT self-dual") << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return r.verified_self_dual ? kExitOk : kExitFailed;
}

json verdict_json(const selfdual::Verdict& v) {
    json j{{"matrix_self_dual", v.matrix_self_dual},
           {"cond1_holds", v.cond1_lambda.has_value()},
           {"cond2_coefficients_zero", v.cond2_coeffs_zero},
           {"cond2_eta", v.cond2_eta},
           {"conditions_hold", v.conditions_hold()},
           {"theorem_applicable", v.theorem_applicable},
           {"converse_applicable", v.converse_applicable},
           {"consistent", v.consistent()},
           {"defect_bound", v.defect_bound},
           {"notes", v.notes}};
    j["cond1_lambda"] = v.cond1_lambda ? json(*v.cond1_lambda) : json(nullptr);
    return j;
}

void verdict_text(const selfdual::Verdict& v, std::ostream& out) {
    out << "condition (1): "
        << (v.cond1_lambda ? "holds, lambda = " + std::to_string(*v.cond1_lambda) : std::string("fails")) << "\n";
    out << "condition (2): coefficients " << (v.cond2_coeffs_zero ? "vanish" : "do not vanish") << ", eta term "
        << (v.cond2_eta ? "vanishes" : "does not vanish") << "\n";
    out << "forward statement applicable: " << (v.theorem_applicable ? "yes" : "no")
        << ", converse applicable: " << (v.converse_applicable ? "yes" : "no") << "\n";
    for (const auto& n : v.notes) out << "note: " << n << "\n";
}

int cmd_analyze(const Shared& o, std::ostream& out) {
    const auto spec = load_spec(o.spec_path);
    const auto report = analyze(spec, o.budget);
    const auto verdict = selfdual::theorem_conditions(spec);
    const auto bound = selfdual::defect_bound(spec);
    const auto convention = parse_convention(o.convention);
    std::optional<etaclass::EtaSets> sets;
    if (etaclass::supported(spec)) sets = etaclass::eta_sets(*spec.field, spec.alpha, spec.k, convention, o.budget);

    if (o.format == "json") {
        json j{{"n", report.n},
               {"k", report.k},
               {"field", spec.field->describe()},
               {"d", report.d},
               {"d_dual", report.d_dual},
               {"defect", report.defect},
               {"defect_dual", report.defect_dual},
               {"classification", report.label()},
               {"self_dual", report.self_dual},
               {"theorem", verdict_json(verdict)},
               {"defect_bound", bound},
               {"discrepancies", report.discrepancies}};
        if (sets) {
            j["eta_sets"] = json{{"convention", etaclass::convention_name(convention)},
                                 {"s1", sets->s1},
                                 {"s2", sets->s2},
                                 {"s2_tilde", sets->s2_tilde},
                                 {"eta_in_s1", contains(sets->s1, spec.eta)},
                                 {"eta_in_s2", contains(sets->s2, spec.eta)},
                                 {"eta_in_s2_tilde", contains(sets->s2_tilde, spec.eta)},
                                 {"predicted_defect", etaclass::predict_defect(spec, *sets)}};
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "code: [" << report.n << "," << report.k << "] over " << spec.field->describe() << ", t = " << spec.t
        << ", h = " << spec.h << ", eta = " << spec.eta << "\n";
    out << "d = " << report.d << ", d(dual) = " << report.d_dual << "\n";
    out << "defect = " << report.defect << ", dual defect = " << report.defect_dual << "\n";
    out << "classification: " << report.label() << "\n";
    out << "self-dual (matrix): " << (report.self_dual ? "yes" : "no") << "\n";
    verdict_text(verdict, out);
    out << "defect bound min{t, k-h, h+1} = " << bound << "\n";
    if (sets) {
        out << "eta sets (" << etaclass::convention_name(convention) << "): S1 = " << set_text(sets->s1)
            << ", S2 = " << set_text(sets->s2) << ", S2~ = " << set_text(sets->s2_tilde) << "\n";
        out << "predicted defect: " << etaclass::predict_defect(spec, *sets) << "\n";
    }
    for (const auto& d : report.discrepancies) out << "discrepancy: " << d << "\n";
    return kExitOk;
}

int cmd_eta_scan(const Shared& o, std::ostream& out) {
    auto spec = load_spec(o.spec_path);
    if (!etaclass::supported(spec))
        throw Error(Errc::unsupported_twist, "eta-scan supports (t, h) = (1, k-1) and (2, k-2) only");
    const auto convention = parse_convention(o.convention);
    const auto sets = etaclass::eta_sets(*spec.field, spec.alpha, spec.k, convention, o.budget);

    json rows = json::array();
    bool all = true;
    for (Elem eta = 1; eta < spec.field->order(); ++eta) {
        spec.eta = eta;
        const auto g = generator_matrix(spec);
        const auto actual = singleton_defect(spec.n, spec.k, code_distance(g, dual_basis(g), o.budget));
        const auto predicted = etaclass::predict_defect(spec, sets);
        all = all && predicted == actual;
        rows.push_back(json{{"eta", eta}, {"predicted", predicted}, {"actual", actual}, {"agree", predicted == actual}});
    }
    if (o.format == "json") {
        out << json{{"convention", etaclass::convention_name(convention)}, {"rows", rows}, {"all_agree", all}}.dump(2)
            << "\n";
    } else {
        out << "convention: " << etaclass::convention_name(convention) << "\n";
        out << "eta  predicted  actual  agree\n";
        for (const auto& r : rows) {
            std::ostringstream line;
            line << std::left;
            line.width(5);
            line << r["eta"].get<Elem>();
            line.width(11);
            line << r["predicted"].get<std::size_t>();
            line.width(8);
            line << r["actual"].get<std::size_t>();
            line << (r["agree"].get<bool>() ? "yes" : "NO");
            out << line.str() << "\n";
        }
        out << (all ? "all rows agree" : "disagreement found") << "\n";
    }
    return all ? kExitOk : kExitFailed;
}

int cmd_verify(const Shared& o, std::ostream& out) {
    const auto spec = io::parse_spec(io::read_file(o.spec_path)).spec;
    bool ok = true;
    auto line = [&](const std::string& status, const std::string& name, const std::string& detail = "") {
        out << "[" << status << "] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        if (status == "FAIL") ok = false;
    };
    try {
        validate_spec(spec);
        line("PASS", "validation");
    } catch (const Error& e) {
        line("FAIL", "validation", e.what());
        return kExitFailed;
    }

    const auto g = generator_matrix(spec);
    const auto ht = parity::parity_check_tilde(spec);
    const auto hr = parity::parity_check_remark(spec);
    line(alg::mul_transpose(g, ht).is_zero() ? "PASS" : "FAIL", "G * H~^T = 0");
    line(alg::rank(ht) == spec.n - spec.k ? "PASS" : "FAIL", "rank H~ = n - k");
    line(alg::row_space_equal(ht, alg::nullspace(g)) ? "PASS" : "FAIL", "row space of H~ equals nullspace of G");
    line(alg::row_space_equal(hr, ht) ? "PASS" : "FAIL", "H and H~ have the same row space");

    const auto verdict = selfdual::theorem_conditions(spec);
    if (!verdict.theorem_applicable && !verdict.converse_applicable) {
        line("SKIP", "matrix test agrees with conditions", "neither direction applies to these parameters");
    } else {
        line(verdict.consistent() ? "PASS" : "FAIL", "matrix test agrees with conditions",
             std::string("self-dual ") + (verdict.matrix_self_dual ? "yes" : "no") + ", conditions " +
                 (verdict.conditions_hold() ? "hold" : "fail"));
    }

    if (verdict.matrix_self_dual) {
        const auto r = analyze(spec, o.budget);
        const bool within = r.defect == r.defect_dual && r.defect <= verdict.defect_bound;
        line(within ? "PASS" : "FAIL", "defect bound",
             "defect " + std::to_string(r.defect) + ", dual " + std::to_string(r.defect_dual) + ", bound " +
                 std::to_string(verdict.defect_bound));
    } else {
        line("SKIP", "defect bound", "code is not self-dual");
    }

    if (etaclass::supported(spec)) {
        const auto predicted = etaclass::predict_defect(spec, Convention::proof_consistent, o.budget);
        const auto actual = singleton_defect(spec.n, spec.k, code_distance(g, ht, o.budget));
        line(predicted == actual ? "PASS" : "FAIL", "eta-set prediction",
             "predicted " + std::to_string(predicted) + ", actual " + std::to_string(actual));
    } else {
        line("SKIP", "eta-set prediction", "(t, h) not covered");
    }
    out << (ok ? "all applicable checks passed" : "some checks failed") << "\n";
    return ok ? kExitOk : kExitFailed;
}

int cmd_parity(const Shared& o, std::ostream& out) {
    const auto spec = load_spec(o.spec_path);
    const auto h = o.variant == "remark" ? parity::parity_check_remark(spec) : parity::parity_check_tilde(spec);
    emit(o.output, o.format == "json" ? io::dump_matrix_json(h) : io::dump_matrix_text(h), out);
    return kExitOk;
}

int cmd_self_dual(const Shared& o, std::ostream& out) {
    const auto spec = load_spec(o.spec_path);
    if (o.method == "matrix") {
        const bool sd = selfdual::is_self_dual_matrix(spec);
        out << "self-dual (G * G^T = 0, n = 2k): " << (sd ? "yes" : "no") << "\n";
        return sd ? kExitOk : kExitFailed;
    }
    const auto v = selfdual::theorem_conditions(spec);
    verdict_text(v, out);
    out << "conditions " << (v.conditions_hold() ? "hold" : "fail") << "; matrix test says "
        << (v.matrix_self_dual ? "self-dual" : "not self-dual") << "\n";
    return v.conditions_hold() ? kExitOk : kExitFailed;
}

int cmd_suite(const Shared& o, std::ostream& out) {
    const suites::Options opts{o.seed, o.budget};
    std::vector<suites::Report> reports;
    if (o.suite == "all") {
        for (int i = 1; i < suites::kSuiteCount; ++i) reports.push_back(suites::run(i, opts));
        reports.push_back(suites::determinism(reports, opts));
    } else {
        reports.push_back(suites::run(suites::suite_id(o.suite), opts));
    }
    bool ok = true;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) out << r.to_text();
    }
    for (const auto& r : reports) ok = ok && r.passed;
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, analyze and verify twisted generalized Reed-Solomon codes.", "tgrs"};
    app.require_subcommand(1);
    Shared o;

    const std::vector<std::string> formats{"text", "json"};
    const std::vector<std::string> conventions{"paper-literal", "proof-consistent"};
    auto spec_flag = [&](CLI::App* c) { c->add_option("--spec", o.spec_path, "spec document")->required(); };
    auto budget_flag = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "enumeration budget (projective messages)")
            ->check(CLI::PositiveNumber);
    };
    auto format_flag = [&](CLI::App* c) {
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    };

    auto* build_cmd = app.add_subcommand("build", "build an explicit self-dual family");
    build_cmd->add_option("construction", o.family, "construction name")->required();
    build_cmd->add_option("parameters", o.params, "comma-separated key=value list");
    build_cmd->add_option("--mode", o.mode, "printed recipe or corrected multipliers")
        ->check(CLI::IsMember({"paper-literal", "corrected"}));
    build_cmd->add_option("--output", o.output, "write the spec document here");

    auto* analyze_cmd = app.add_subcommand("analyze", "distances, defects, self-duality and eta sets");
    spec_flag(analyze_cmd);
    budget_flag(analyze_cmd);
    format_flag(analyze_cmd);
    analyze_cmd->add_option("--convention", o.convention, "eta-set convention")->check(CLI::IsMember(conventions));

    auto* scan_cmd = app.add_subcommand("eta-scan", "predicted against brute-force defect for every eta");
    spec_flag(scan_cmd);
    budget_flag(scan_cmd);
    format_flag(scan_cmd);
    scan_cmd->add_option("--convention", o.convention, "eta-set convention")->check(CLI::IsMember(conventions));

    auto* verify_cmd = app.add_subcommand("verify", "run the cross-check battery on a spec");
    spec_flag(verify_cmd);
    budget_flag(verify_cmd);

    auto* parity_cmd = app.add_subcommand("parity", "emit a parity-check matrix");
    spec_flag(parity_cmd);
    format_flag(parity_cmd);
    parity_cmd->add_option("--variant", o.variant, "tilde or remark form")->check(CLI::IsMember({"tilde", "remark"}));
    parity_cmd->add_option("--output", o.output, "write the matrix here");

    auto* sd_cmd = app.add_subcommand("self-dual", "test self-duality");
    spec_flag(sd_cmd);
    sd_cmd->add_option("--method", o.method, "matrix test or theorem conditions")
        ->check(CLI::IsMember({"matrix", "theorem"}));

    auto* suite_cmd = app.add_subcommand("suite", "run a seeded verification suite");
    suite_cmd->add_option("name", o.suite, "suite name, number or 'all'")->required();
    suite_cmd->add_option("--seed", o.seed, "random seed");
    budget_flag(suite_cmd);
    format_flag(suite_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (o.budget == 0) o.budget = default_budget();

    const std::map<CLI::App*, std::function<int(const Shared&, std::ostream&)>> commands{
        {build_cmd, cmd_build},   {analyze_cmd, cmd_analyze}, {scan_cmd, cmd_eta_scan}, {verify_cmd, cmd_verify},
        {parity_cmd, cmd_parity}, {sd_cmd, cmd_self_dual},    {suite_cmd, cmd_suite}};
    try {
        for (const auto& [cmd, fn] : commands)
            if (cmd->parsed()) return fn(o, out);
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n"
            << "hint: pass --budget " << e.required() << " (or set TGRS_MAX_ENUM) to allow the enumeration\n";
        return kExitBudget;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& n : e.notes()) err << "note: " << n << "\n";
        return kExitFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const bool failed = e.code() == Errc::not_split || e.code() == Errc::construction_failed;
        return failed ? kExitFailed : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace tgrs::cli
