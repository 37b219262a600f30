#ifndef STMOP_CLI_HPP
#define STMOP_CLI_HPP

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "construct.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "io.hpp"
#include "sweep.hpp"

namespace stmop::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsageError = 2;

struct GenArgs {
    std::string family;
    int k = 0;
    int n = 0;
    std::uint64_t seed = 1;
};

/// Writes one graph JSON, or one JSON object per line for `all`.
inline int cmd_gen(const GenArgs& a, std::ostream& out)
{
    if (a.family == "H" || a.family == "G") {
        if (a.k < 1)
            throw Error(Errc::InvalidArgument, "--k >= 1 is required for family " + a.family);
        out << to_json(a.family == "H" ? make_h_k(a.k) : make_g_k(a.k)).dump() << '\n';
    } else if (a.family == "random") {
        if (a.n < 3)
            throw Error(Errc::InvalidArgument, "--n >= 3 is required for family random");
        auto j = to_json(random_mop(a.n, a.seed));
        j["seed"] = a.seed;
        out << j.dump() << '\n';
    } else if (a.family == "all") {
        if (a.n < 3)
            throw Error(Errc::InvalidArgument, "--n >= 3 is required for family all");
        for_each_mop(a.n, [&](const MopGraph& g) { out << to_json(g).dump() << '\n'; });
    } else {
        throw Error(Errc::InvalidArgument, "unknown family " + a.family);
    }
    return kOk;
}

inline int cmd_construct(const json& graph, std::ostream& out, bool with_trace = true)
{
    auto in = graph_from_json(graph);
    if (!in.mop)
        throw Error(Errc::InvalidArgument, "input is not a maximal outerplanar graph");
    auto [s, trace] = build_stds(*in.mop);
    const int n = in.mop->size();
    json j{{"n", n}, {"stds", s.members()}, {"size", s.size()}, {"bound", floor_two_thirds(n)}};
    if (with_trace) {
        auto t = to_json(trace);
        j["trace"] = t["steps"];
        j["base"] = t["base"];
    }
    out << j.dump() << '\n';
    return kOk;
}

inline int cmd_solve(const json& graph, Kind kind, const SolveOptions& opt, std::ostream& out)
{
    auto in = graph_from_json(graph);
    out << to_json(solve(in.graph, kind, opt), kind).dump() << '\n';
    return kOk;
}

/// Exit 0 iff the set is secure total dominating.
inline int cmd_verify(const json& graph, const json& set, std::ostream& out)
{
    auto in = graph_from_json(graph);
    const auto s = set_from_json(set, in.graph.size());
    const auto verdict = classify(s, in.graph);
    out << to_json(verdict).dump() << '\n';
    return verdict.secure_total ? kOk : kPropertyFails;
}

inline int cmd_sweep(const SweepOptions& opt, const std::string& csv_path, std::ostream& out)
{
    const auto rows = run_sweep(opt);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv)
            throw Error(Errc::InvalidArgument, "cannot write " + csv_path);
        write_csv(csv, rows);
    }
    const auto summary = summarise(rows, opt.seed);
    out << to_json(summary, opt).dump() << '\n';
    return summary.violations == 0 ? kOk : kPropertyFails;
}

inline int write_to(const std::string& path, std::ostream& fallback, const std::function<int(std::ostream&)>& body)
{
    if (path.empty() || path == "-")
        return body(fallback);
    std::ofstream file(path);
    if (!file)
        throw Error(Errc::InvalidArgument, "cannot write " + path);
    return body(file);
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Secure total domination in maximal outerplanar graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    std::string out_path;
    auto* gen_cmd = app.add_subcommand("gen", "Generate H_k, G_k, random or all mops");
    gen_cmd->add_option("--family", gen.family, "H | G | random | all")->required()->check(CLI::IsMember({"H", "G", "random", "all"}));
    gen_cmd->add_option("--k", gen.k, "family index for H and G");
    gen_cmd->add_option("--n", gen.n, "order for random and all");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string graph_path, set_path;
    bool no_trace = false;
    auto* construct_cmd = app.add_subcommand("construct", "Build a degree-2-free STDS of size <= floor(2n/3)");
    construct_cmd->add_option("graph", graph_path, "graph JSON file, - for stdin")->required();
    construct_cmd->add_flag("--no-trace", no_trace, "omit the reduction trace");
    construct_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string kind_name = "secure_total";
    SolveOptions solve_opt;
    bool no_seed = false;
    auto* solve_cmd = app.add_subcommand("solve", "Exact domination numbers with a witness");
    solve_cmd->add_option("graph", graph_path, "graph JSON file, - for stdin")->required();
    solve_cmd->add_option("--kind", kind_name, "dominating | total | two | secure_total")
        ->check(CLI::IsMember({"dominating", "total", "two", "secure_total"}));
    solve_cmd->add_flag("--exclude-degree-2", solve_opt.exclude_degree_2, "forbid degree-2 vertices in the set");
    solve_cmd->add_option("--cap", solve_opt.cap, "largest order accepted")->check(CLI::Range(1, 63));
    solve_cmd->add_flag("--no-seed-bound", no_seed, "start from the trivial lower bound");
    solve_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Classify a vertex set; exit 0 iff secure total dominating");
    verify_cmd->add_option("graph", graph_path, "graph JSON file")->required();
    verify_cmd->add_option("set", set_path, "vertex set JSON file")->required();
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    SweepOptions sweep;
    std::string mode = "exhaustive";
    sweep.threads = std::max(1u, std::thread::hardware_concurrency());
    auto* sweep_cmd = app.add_subcommand("sweep", "Check both bounds over many mops");
    sweep_cmd->add_option("--n-min", sweep.n_min)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--n-max", sweep.n_max)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    sweep_cmd->add_option("--samples", sweep.samples, "samples per order in random mode")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--seed", sweep.seed);
    sweep_cmd->add_option("--cap", sweep.exact_cap, "largest order solved exactly")->check(CLI::Range(0, 16));
    sweep_cmd->add_flag("--families", sweep.include_families, "also sweep H_k and G_k in range");
    sweep_cmd->add_option("--threads", sweep.threads)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_path, "CSV output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*gen_cmd)
            return write_to(out_path, out, [&](std::ostream& o) { return cmd_gen(gen, o); });
        if (*construct_cmd) {
            const auto graph = read_json_file(graph_path);
            return write_to(out_path, out, [&](std::ostream& o) { return cmd_construct(graph, o, !no_trace); });
        }
        if (*solve_cmd) {
            const auto graph = read_json_file(graph_path);
            solve_opt.seed_outerplanar_bound = !no_seed;
            const Kind kind = *parse_kind(kind_name);
            return write_to(out_path, out, [&](std::ostream& o) { return cmd_solve(graph, kind, solve_opt, o); });
        }
        if (*verify_cmd) {
            const auto graph = read_json_file(graph_path);
            const auto set = read_json_file(set_path);
            return write_to(out_path, out, [&](std::ostream& o) { return cmd_verify(graph, set, o); });
        }
        if (*sweep_cmd) {
            sweep.mode = mode == "random" ? SweepMode::random : SweepMode::exhaustive;
            return cmd_sweep(sweep, out_path, out);
        }
    } catch (const InvariantViolation& e) {
        err << e.what() << '\n';
        return kPropertyFails;
    } catch (const Error& e) {
        err << e.what() << '\n';
        switch (e.code()) {
        case Errc::Infeasible:
        case Errc::NoTotalDominatingSet:
        case Errc::DisconnectedGraph:
            return kPropertyFails;
        default:
            return kUsageError;
        }
    }
    return kUsageError;
}

} // namespace stmop::cli

#endif // STMOP_CLI_HPP
