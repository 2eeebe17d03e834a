// distk: exact small-n laboratory for distance-k extremal graph problems.
//
// Subcommands: transform, construct, solve, verify, certify. See README.md.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "distk/constructions.hpp"
#include "distk/distance.hpp"
#include "distk/graph6.hpp"
#include "distk/json_io.hpp"
#include "distk/properties.hpp"
#include "distk/search.hpp"
#include "distk/verify.hpp"
#include "distk/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

distk::ClassFilter parse_filter(const std::string& name) {
    if (name == "all") return distk::ClassFilter::All;
    if (name == "connected") return distk::ClassFilter::Connected;
    throw std::runtime_error("unknown class filter '" + name + "'");
}

int run_transform(const std::string& in_path, int k, const std::string& out_path) {
    auto in = open_input(in_path);
    std::ostream* out = &std::cout;
    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file = open_output(out_path);
        out = &out_file;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            distk::Graph g = distk::parse_graph6(line);
            *out << distk::emit_graph6(distk::distance_k_graph(g, k)) << '\n';
        } catch (const distk::Graph6Error& e) {
            throw e.with_line(line_no);
        }
    }
    return kExitOk;
}

int run_construct(const distk::ConstructionSpec& spec, int summary_k, bool auxiliary,
                  const std::string& out_path) {
    distk::Graph g = auxiliary
                         ? std::visit(
                               [](const auto& s) -> distk::Graph {
                                   using T = std::decay_t<decltype(s)>;
                                   if constexpr (std::is_same_v<T, distk::G2ExtremalSpec>)
                                       return distk::g2_extremal_auxiliary(s.n, s.size_a,
                                                                           s.size_b_prime);
                                   else
                                       throw std::runtime_error(
                                           "--aux only applies to g2-extremal");
                               },
                               spec)
                         : distk::build(spec);
    std::string line = distk::emit_graph6(g);
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << line << '\n';
    } else {
        std::cout << line << '\n';
    }
    distk::Graph gk = distk::distance_k_graph(g, summary_k);
    std::cout << "summary: n=" << g.n() << " edges=" << distk::edge_count(g) << " k=" << summary_k
              << " gk_edges=" << distk::edge_count(gk) << '\n';
    return kExitOk;
}

int run_solve(const distk::SearchProblem& problem, const std::string& in_path,
              const std::string& out_path, const std::string& witness_path) {
    distk::SearchOutcome outcome;
    if (problem.source == distk::Source::File) {
        if (in_path.empty()) throw std::runtime_error("--source file requires --in");
        auto in = open_input(in_path);
        auto ingest = distk::ingest_graph6_stream(in);
        outcome = distk::solve_over(problem, ingest.graphs);
    } else {
        outcome = distk::solve(problem);
    }
    std::cout << "optimum " << outcome.optimum << '\n';
    if (auto formula = distk::formula_value_for(problem)) {
        if (outcome.optimum != *formula)
            std::cout << "note: optimum " << outcome.optimum << " differs from the formula value "
                      << *formula << '\n';
    }
    std::cout << "extremal_classes " << outcome.extremal.size() << " enumerated "
              << outcome.enumerated << '\n';
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << distk::outcome_to_json(problem, outcome).dump(2) << '\n';
    }
    if (!witness_path.empty()) {
        auto out = open_output(witness_path);
        for (const auto& line : outcome.witness_g6()) out << line << '\n';
    }
    return kExitOk;
}

int run_verify(const std::string& claim, std::optional<std::pair<int, int>> range,
               const std::string& report_path, const std::string& witness_dir) {
    distk::VerificationReport report = distk::run_claim(claim, range, witness_dir);
    for (const auto& row : report.rows)
        std::cout << "n=" << row.n << " computed=" << row.computed << " expected=" << row.expected
                  << " match=" << (row.match ? "yes" : "NO") << '\n';
    std::cout << "overall: " << (report.overall ? "pass" : "fail") << '\n';
    if (!report_path.empty()) {
        auto out = open_output(report_path);
        out << distk::report_to_json(report).dump(2) << '\n';
        std::filesystem::path csv_path(report_path);
        csv_path.replace_extension(".csv");
        auto csv = open_output(csv_path.string());
        csv << distk::report_to_csv(report);
    }
    return report.overall ? kExitOk : kExitClaimFailed;
}

int run_certify(const std::string& in_path, int k, int t, long long claimed) {
    auto in = open_input(in_path);
    std::string line;
    std::size_t line_no = 0;
    bool all_ok = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            distk::Graph g = distk::parse_graph6(line);
            distk::Graph gk = distk::distance_k_graph(g, k);
            long long edges = distk::edge_count(gk);
            bool clique_ok =
                t == 2 ? distk::is_triangle_free(gk) : !distk::has_clique_of_size(gk, t + 1);
            bool ok = clique_ok && edges == claimed;
            all_ok = all_ok && ok;
            std::cout << "line " << line_no << ": " << (ok ? "PASS" : "FAIL") << " edges=" << edges
                      << " clique_ok=" << (clique_ok ? "yes" : "no") << '\n';
        } catch (const distk::Graph6Error& e) {
            throw e.with_line(line_no);
        }
    }
    std::cout << (all_ok ? "all pass" : "failures present") << '\n';
    return all_ok ? kExitOk : kExitClaimFailed;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for distance-k extremal graph problems"};
    app.set_version_flag("--version", distk::kVersion);
    app.require_subcommand(1);

    // transform
    auto* transform = app.add_subcommand("transform", "write the distance-k graph of each input line");
    std::string tr_in, tr_out;
    int tr_k = 1;
    transform->add_option("--in", tr_in, "input graph6 file")->required();
    transform->add_option("--k", tr_k, "distance")->required()->check(CLI::PositiveNumber);
    transform->add_option("--out", tr_out, "output graph6 file (default stdout)");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named construction");
    std::string c_json, c_out;
    bool c_aux = false;
    int c_n = 0, c_r = 0, c_k = 0, c_a = 0, c_b = 0, c_t = 0, c_size_a = 0, c_size_bp = 0,
        c_legs = 0;
    std::string c_leaves, c_attach;
    construct->add_option("--json", c_json, "construction spec as a JSON object");
    construct->add_option("--out", c_out, "output graph6 file (default stdout)");
    construct->add_flag("--aux", c_aux, "emit the pre-complement auxiliary graph (g2-extremal)");

    auto* turan = construct->add_subcommand("turan", "Turan graph T(n,r)");
    turan->add_option("--n", c_n)->required();
    turan->add_option("--r", c_r)->required();
    turan->add_option("--k", c_k, "distance for the summary (default 2)");

    auto* g2e = construct->add_subcommand("g2-extremal", "distance-two extremal graph");
    g2e->add_option("--n", c_n)->required();
    g2e->add_option("--size-a", c_size_a)->required();
    g2e->add_option("--size-b-prime", c_size_bp)->required();
    g2e->add_option("--k", c_k, "distance for the summary (default 2)");

    auto* broom = construct->add_subcommand("double-broom", "double broom");
    broom->add_option("--n", c_n)->required();
    broom->add_option("--k", c_k)->required();
    broom->add_option("--a", c_a)->required();
    broom->add_option("--b", c_b)->required();

    auto* tbroom = construct->add_subcommand("t-broom", "t-broom");
    tbroom->add_option("--k", c_k)->required();
    tbroom->add_option("--t", c_t)->required();
    tbroom->add_option("--leaves", c_leaves, "comma-separated leaf counts per arm")->required();

    auto* spider = construct->add_subcommand("spider", "star with legs of length <= 2");
    spider->add_option("--n", c_n)->required();
    spider->add_option("--legs", c_legs)->required();
    spider->add_option("--attach", c_attach, "comma-separated attachment counts (default round-robin)");
    spider->add_option("--k", c_k, "distance for the summary (default 3)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exact extremal search");
    int s_n = 0, s_k = 0, s_t = 2;
    std::string s_class = "all", s_source = "internal", s_in, s_out, s_witnesses;
    solve_cmd->add_option("--n", s_n, "vertex count")->required();
    solve_cmd->add_option("--k", s_k, "distance")->required();
    solve_cmd->add_option("--t", s_t, "clique bound on the distance graph (default 2)");
    solve_cmd->add_option("--class", s_class, "graph class: all|connected")
        ->check(CLI::IsMember({"all", "connected"}));
    solve_cmd->add_option("--source", s_source, "internal|file")
        ->check(CLI::IsMember({"internal", "file"}));
    solve_cmd->add_option("--in", s_in, "graph6 input (with --source file)");
    solve_cmd->add_option("--out", s_out, "outcome JSON path");
    solve_cmd->add_option("--witnesses", s_witnesses, "witness graph6 path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named claim check");
    std::string v_claim, v_report, v_witnesses;
    int v_n = -1, v_from = -1, v_to = -1;
    bool v_list = false;
    verify_cmd->add_option("claim", v_claim, "claim id (see --list)");
    verify_cmd->add_flag("--list", v_list, "list available claims");
    verify_cmd->add_option("--n", v_n, "single n");
    verify_cmd->add_option("--n-from", v_from, "range start");
    verify_cmd->add_option("--n-to", v_to, "range end");
    verify_cmd->add_option("--report", v_report, "report JSON path (CSV written alongside)");
    verify_cmd->add_option("--witnesses", v_witnesses, "directory for witness files");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "check witnesses against a claimed optimum");
    std::string cf_in;
    int cf_k = 0, cf_t = 2;
    long long cf_claimed = 0;
    certify_cmd->add_option("--in", cf_in, "witness graph6 file")->required();
    certify_cmd->add_option("--k", cf_k, "distance")->required();
    certify_cmd->add_option("--t", cf_t, "clique bound (default 2)");
    certify_cmd->add_option("--claimed", cf_claimed, "claimed optimum")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*transform) return run_transform(tr_in, tr_k, tr_out);

        if (*construct) {
            distk::ConstructionSpec spec = distk::TuranSpec{1, 1};
            int summary_k = 2;
            if (!c_json.empty()) {
                spec = distk::construction_from_json(nlohmann::json::parse(c_json));
            } else if (*turan) {
                spec = distk::TuranSpec{c_n, c_r};
            } else if (*g2e) {
                spec = distk::G2ExtremalSpec{c_n, c_size_a, c_size_bp};
            } else if (*broom) {
                spec = distk::DoubleBroomSpec{c_n, c_k, c_a, c_b};
            } else if (*tbroom) {
                spec = distk::TBroomSpec{c_k, c_t, parse_int_list(c_leaves)};
            } else if (*spider) {
                std::vector<int> counts = c_attach.empty()
                                              ? distk::spider_round_robin_attachment(c_n, c_legs)
                                              : parse_int_list(c_attach);
                spec = distk::SpiderSpec{c_n, c_legs, counts};
            } else {
                throw std::runtime_error("construct: give a variant subcommand or --json");
            }
            if (std::holds_alternative<distk::DoubleBroomSpec>(spec))
                summary_k = std::get<distk::DoubleBroomSpec>(spec).k;
            else if (std::holds_alternative<distk::TBroomSpec>(spec))
                summary_k = std::get<distk::TBroomSpec>(spec).k;
            else if (std::holds_alternative<distk::SpiderSpec>(spec))
                summary_k = 3;
            if (c_k > 0 && !*broom && !*tbroom) summary_k = c_k;
            return run_construct(spec, summary_k, c_aux, c_out);
        }

        if (*solve_cmd) {
            distk::SearchProblem problem;
            problem.n = s_n;
            problem.k = s_k;
            problem.t = s_t;
            problem.filter = parse_filter(s_class);
            problem.source = s_source == "file" ? distk::Source::File : distk::Source::Internal;
            return run_solve(problem, s_in, s_out, s_witnesses);
        }

        if (*verify_cmd) {
            if (v_list) {
                for (const auto& [id, info] : distk::claim_registry())
                    std::cout << id << " (default n=" << info.default_lo << ".." << info.default_hi
                              << "): " << info.description << '\n';
                return kExitOk;
            }
            if (v_claim.empty()) throw std::runtime_error("verify: claim id required (or --list)");
            std::optional<std::pair<int, int>> range;
            if (v_n >= 0) range = {v_n, v_n};
            if (v_from >= 0 || v_to >= 0) {
                if (v_from < 0 || v_to < 0)
                    throw std::runtime_error("verify: give both --n-from and --n-to");
                range = {v_from, v_to};
            }
            return run_verify(v_claim, range, v_report, v_witnesses);
        }

        if (*certify_cmd) return run_certify(cf_in, cf_k, cf_t, cf_claimed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
