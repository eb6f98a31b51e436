#include "floercone/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "floercone/errors.hpp"
#include "floercone/serialization.hpp"
#include "floercone/staircase.hpp"
#include "floercone/suites.hpp"
#include "floercone/surgery.hpp"

namespace floercone {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errkind::io, "cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json rank_report_json(const RankReport& report) {
    json out = json::object();
    for (const auto& [index, r] : report) out[std::to_string(index)] = r;
    return out;
}

json matrix_json(const gf2::BitMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

std::vector<int> parse_steps(const std::string& text) {
    std::vector<int> steps;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            steps.push_back(v);
        } catch (const std::exception&) {
            throw Error(errkind::usage, "--steps: '" + token + "' is not an integer");
        }
    }
    return steps;
}

// Outcome of one dispatched command, before wrapping in the report envelope.
struct Outcome {
    json result;
    int exit_code = 0;
    std::string timing;      // stderr line, empty for most commands
    bool bare_output = false;
    std::string bare;        // e.g. `staircase make` emits the complex file itself
    std::string error_kind;  // set for domain failures that still carry a result
    std::string error_message;
};

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"knot Floer homology of integral surgeries: mapping-cone "
                 "calculator and theorem-verification suites"};
    app.require_subcommand(1);

    std::string file;
    int n = 1;
    int s = 0;
    std::string steps_text;
    int d_top = 0;
    std::string suite_text;
    int max_genus = 2;
    int max_n = 6;
    int random_count = 0;
    std::uint64_t seed = 0;

    const auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "complex file (JSON)")->required();
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check the complex invariants");
    add_file(c_validate);
    CLI::App* c_homology = app.add_subcommand("homology", "homology ranks by degree");
    add_file(c_homology);
    CLI::App* c_genus = app.add_subcommand("genus", "Seifert genus (top occupied level)");
    add_file(c_genus);
    CLI::App* c_dinv = app.add_subcommand("d-invariant", "degree of the rank-1 homology");
    add_file(c_dinv);

    CLI::App* c_hfk = app.add_subcommand("hfk", "knot Floer ranks of the surgered knot");
    c_hfk->add_option("--n", n, "surgery coefficient")->required()->check(CLI::PositiveNumber);
    add_file(c_hfk);
    CLI::App* c_hf = app.add_subcommand("hf", "Heegaard Floer ranks of the surgered manifold");
    c_hf->add_option("--n", n, "surgery coefficient")->required()->check(CLI::PositiveNumber);
    add_file(c_hf);
    CLI::App* c_simple = app.add_subcommand("simple", "is the surgered knot simple?");
    c_simple->add_option("--n", n, "surgery coefficient")
        ->required()
        ->check(CLI::PositiveNumber);
    add_file(c_simple);

    CLI::App* c_eps = app.add_subcommand("epsilon", "epsilon map at a level");
    c_eps->add_option("--s", s, "level, -g < s <= g")->required();
    add_file(c_eps);

    CLI::App* c_alex = app.add_subcommand("alexander", "symmetrized Alexander coefficients");
    add_file(c_alex);

    CLI::App* c_stair = app.add_subcommand("staircase", "staircase normal forms");
    c_stair->require_subcommand(1);
    CLI::App* c_make = c_stair->add_subcommand("make", "emit a staircase complex file");
    c_make->add_option("--steps", steps_text,
                       "comma-separated positive steps (empty = unknot)");
    c_make->add_option("--d", d_top, "degree of the top generator");
    CLI::App* c_check = c_stair->add_subcommand("check", "recognize a staircase complex");
    add_file(c_check);

    CLI::App* c_verify = app.add_subcommand("verify", "run a theorem-verification suite");
    c_verify->add_option("--suite", suite_text, "small-surgery | converse | large-forward")
        ->required();
    c_verify->add_option("--max-genus", max_genus, "staircase genus / random level bound");
    c_verify->add_option("--max-n", max_n, "largest surgery coefficient");
    c_verify->add_option("--random", random_count, "use COUNT seeded random instances");
    c_verify->add_option("--seed", seed, "base seed for random instances");

    try {
        std::vector<const char*> argv{"floercone"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return {2, "", std::string(e.what()) + "\nRun with --help for usage.\n"};
    }

    std::string input_digest = "none";
    const auto dispatch = [&]() -> Outcome {
        Outcome out;

        const auto load = [&](bool checked) {
            const std::string bytes = read_file(file);
            input_digest = digest(bytes);
            return checked ? parse_complex(bytes) : parse_complex_unchecked(bytes);
        };

        if (c_validate->parsed()) {
            const KnotComplex b = load(false);
            const std::vector<std::string>& violations = b.validate();
            out.result = json{{"ok", violations.empty()}, {"violations", violations}};
            if (!violations.empty()) {
                out.exit_code = 1;
                out.error_kind = errkind::validation;
                out.error_message =
                    std::to_string(violations.size()) + " invariant violation(s)";
            }
        } else if (c_homology->parsed()) {
            const KnotComplex b = load(true);
            const RankReport h = homology_by_degree(b);
            out.result = json{{"by_degree", rank_report_json(h)}, {"total", total_rank(h)}};
        } else if (c_genus->parsed()) {
            out.result = json{{"genus", load(true).genus()}};
        } else if (c_dinv->parsed()) {
            out.result = json{{"d", load(true).d_invariant()}};
        } else if (c_hfk->parsed()) {
            out.result = rank_report_json(surgery::hfk_ranks(load(true), n));
        } else if (c_hf->parsed()) {
            out.result = rank_report_json(surgery::hf_ranks(load(true), n));
        } else if (c_simple->parsed()) {
            const surgery::SimplicityReport r = surgery::is_simple(load(true), n);
            out.result = json{{"simple", r.simple},
                              {"witness_levels", r.witness_levels},
                              {"hfk_total", r.hfk_total},
                              {"hf_total", r.hf_total}};
        } else if (c_eps->parsed()) {
            const surgery::EpsilonReport r = surgery::epsilon(load(true), s);
            out.result = json{{"matrix", matrix_json(r.matrix)},
                              {"rank_h_lt_s", r.rank_h_below},
                              {"rank_h_le_neg_s", r.rank_h_le_neg},
                              {"zero", r.matrix.is_zero()}};
        } else if (c_alex->parsed()) {
            const AlexanderPoly poly = alexander(load(true));
            out.result = json{{"coeffs", rank_report_json(poly.coeffs)}};
        } else if (c_make->parsed()) {
            StaircaseSpec spec{parse_steps(steps_text), d_top};
            try {
                require_valid(spec);
            } catch (const Error& e) {
                throw Error(errkind::usage, e.what());
            }
            input_digest = digest("staircase:" + spec.describe());
            out.bare_output = true;
            out.bare = serialize_complex(make_staircase(spec));
        } else if (c_check->parsed()) {
            const RecognitionResult r = recognize_staircase(load(true));
            if (r.ok())
                out.result = json{{"staircase", true},
                                  {"steps", r.spec->steps},
                                  {"d_top", r.spec->d_top}};
            else
                out.result = json{{"staircase", false}, {"reason", r.reason}};
        } else if (c_verify->parsed()) {
            SuiteParams params;
            params.suite = suite_from_name(suite_text);
            params.max_genus = max_genus;
            params.max_n = max_n;
            params.random_count = random_count;
            params.seed = seed;
            std::ostringstream key;
            key << "verify:" << suite_text << ":g" << max_genus << ":n" << max_n << ":r"
                << random_count << ":s" << seed;
            input_digest = digest(key.str());

            const SuiteReport rep = run_suite(params);
            json failures = json::array();
            for (const SuiteFailure& f : rep.failures)
                failures.push_back(
                    {{"detail", f.detail}, {"instance", json::parse(f.instance_json)}});
            out.result = json{{"suite", rep.suite},
                              {"instances", rep.instances},
                              {"checks", rep.checks},
                              {"skipped", rep.skipped},
                              {"failures", std::move(failures)},
                              {"passed", rep.passed()}};
            std::ostringstream timing;
            timing << "suite " << rep.suite << ": " << rep.checks << " checks, "
                   << rep.skipped << " skipped, " << rep.failures.size()
                   << " failure(s) in " << rep.elapsed_ms << " ms\n";
            out.timing = timing.str();
            if (!rep.passed()) {
                out.exit_code = 1;
                out.error_kind = errkind::suite_failure;
                out.error_message =
                    std::to_string(rep.failures.size()) +
                    " check(s) failed; counterexamples are in result.failures";
            }
        }
        return out;
    };

    try {
        const Outcome out = dispatch();
        if (out.bare_output) return {out.exit_code, out.bare, out.timing};

        json report{{"command", args},
                    {"input_digest", input_digest},
                    {"result", out.result},
                    {"version", version_string}};
        if (!out.error_kind.empty())
            report["error"] = json{{"kind", out.error_kind}, {"message", out.error_message}};
        return {out.exit_code, report.dump(2) + "\n", out.timing};
    } catch (const Error& e) {
        if (e.kind() == errkind::usage)
            return {2, "", std::string(e.what()) + "\nRun with --help for usage.\n"};
        json report{{"command", args},
                    {"input_digest", input_digest},
                    {"error", json{{"kind", e.kind()}, {"message", e.what()}}},
                    {"version", version_string}};
        return {1, report.dump(2) + "\n", ""};
    } catch (const std::exception& e) {
        json report{{"command", args},
                    {"input_digest", input_digest},
                    {"error", json{{"kind", errkind::internal}, {"message", e.what()}}},
                    {"version", version_string}};
        return {1, report.dump(2) + "\n", ""};
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const CliResult r = run_cli(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

} // namespace floercone
