#ifndef STMOP_SWEEP_HPP
#define STMOP_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "construct.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "mop.hpp"

namespace stmop {

enum class SweepMode { exhaustive, random };

struct SweepOptions {
    int n_min = 3;
    int n_max = 12;
    SweepMode mode = SweepMode::exhaustive;
    int samples = 100; // per order, random mode
    std::uint64_t seed = 1;
    int exact_cap = 14;
    bool include_families = false; // add H_k and G_k whose order lies in [n_min, n_max]
    unsigned threads = 1;
};

/// One checked graph. `graph_id` is the enumeration index, the per-graph
/// random seed, or k for the H/G families.
struct SweepRow {
    int n = 0;
    std::string source;
    std::uint64_t graph_id = 0;
    std::optional<int> gamma_st_exact;
    int constructed_size = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    bool ok = false;
    std::string note;
};

struct SweepSummary {
    std::uint64_t rows = 0;
    std::uint64_t violations = 0;
    std::uint64_t exact_rows = 0;
    int min_upper_slack = 0, max_upper_slack = 0;
    int min_lower_slack = 0, max_lower_slack = 0;
    std::uint64_t sharp_upper = 0; // exact value meets floor(2n/3)
    std::uint64_t sharp_lower = 0; // exact value meets ceil((n+2)/3)
    std::uint64_t seed = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the i-th random sample of order n; `gen --family random --seed` on it reproduces the graph.
inline std::uint64_t sample_seed(std::uint64_t base, int n, int i)
{
    return splitmix64(splitmix64(base) ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(i));
}

inline SweepRow evaluate_row(const MopGraph& g, std::string source, std::uint64_t id, int exact_cap)
{
    SweepRow row;
    row.n = g.size();
    row.source = std::move(source);
    row.graph_id = id;
    row.lower_bound = ceil_n_plus_2_thirds(row.n);
    row.upper_bound = floor_two_thirds(row.n);
    bool checks = true;
    try {
        auto [s, trace] = build_stds(g);
        row.constructed_size = s.size();
        const VertexSet sp = g.to_positions(s);
        if (!classify(sp, g.graph()).secure_total) {
            checks = false;
            row.note = "constructed set is not secure total dominating";
        } else if (row.n >= 4 && sp.intersects(degree_two_positions(g))) {
            checks = false;
            row.note = "constructed set contains a degree-2 vertex";
        }
        if (row.n <= exact_cap) {
            SolveOptions opt;
            opt.cap = exact_cap;
            opt.seed_outerplanar_bound = false;
            auto exact = solve(g.graph(), Kind::secure_total, opt);
            row.gamma_st_exact = exact.value;
            if (!classify(exact.witness, g.graph()).secure_total) {
                checks = false;
                row.note = "exact witness failed verification";
            } else if (exact.value > row.constructed_size) {
                checks = false;
                row.note = "exact value exceeds constructed size";
            }
        }
    } catch (const Error& e) {
        checks = false;
        row.note = e.what();
    }
    const int measured = row.gamma_st_exact.value_or(row.constructed_size);
    row.ok = checks && row.lower_bound <= measured && row.constructed_size <= row.upper_bound;
    return row;
}

namespace detail {

struct SweepJob {
    int n;
    std::string source;
    std::uint64_t id;
    std::vector<Edge> diagonals; // exhaustive only
};

inline MopGraph materialise(const SweepJob& job)
{
    if (job.source == "exhaustive")
        return mop_from_diagonals(job.n, job.diagonals);
    if (job.source == "random")
        return random_mop(job.n, job.id);
    if (job.source == "H")
        return make_h_k(static_cast<int>(job.id));
    return make_g_k(static_cast<int>(job.id));
}

} // namespace detail

/// Rows come back ordered by (source block, n, graph_id) independent of the thread count.
inline std::vector<SweepRow> run_sweep(const SweepOptions& opt)
{
    if (opt.n_min < 3 || opt.n_max < opt.n_min)
        throw Error(Errc::InvalidArgument, "sweep needs 3 <= n_min <= n_max");
    if (opt.mode == SweepMode::exhaustive && opt.n_max > kEnumerationCap)
        throw Error(Errc::SizeCapExceeded, "exhaustive sweeps are capped at n=" + std::to_string(kEnumerationCap));
    if (opt.exact_cap > 16)
        throw Error(Errc::SizeCapExceeded, "exact solving in sweeps is capped at n=16");

    std::vector<detail::SweepJob> jobs;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        if (opt.mode == SweepMode::exhaustive) {
            std::uint64_t index = 0;
            for_each_mop(n, [&](const MopGraph& g) { jobs.push_back({n, "exhaustive", index++, g.diagonals()}); });
        } else {
            for (int i = 0; i < opt.samples; ++i)
                jobs.push_back({n, "random", sample_seed(opt.seed, n, i), {}});
        }
    }
    if (opt.include_families) {
        for (int k = 1; 3 * k <= opt.n_max; ++k)
            if (3 * k >= opt.n_min)
                jobs.push_back({3 * k, "H", static_cast<std::uint64_t>(k), {}});
        for (int k = 1; 3 * k + 1 <= opt.n_max; ++k)
            if (3 * k + 1 >= opt.n_min)
                jobs.push_back({3 * k + 1, "G", static_cast<std::uint64_t>(k), {}});
    }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
            rows[i] = evaluate_row(detail::materialise(jobs[i]), jobs[i].source, jobs[i].id, opt.exact_cap);
    };
    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    return rows;
}

inline SweepSummary summarise(const std::vector<SweepRow>& rows, std::uint64_t seed)
{
    SweepSummary s;
    s.seed = seed;
    bool first = true;
    for (const auto& r : rows) {
        ++s.rows;
        if (!r.ok)
            ++s.violations;
        const int upper = r.upper_bound - r.constructed_size;
        const int lower = r.gamma_st_exact.value_or(r.constructed_size) - r.lower_bound;
        if (first) {
            s.min_upper_slack = s.max_upper_slack = upper;
            s.min_lower_slack = s.max_lower_slack = lower;
            first = false;
        }
        s.min_upper_slack = std::min(s.min_upper_slack, upper);
        s.max_upper_slack = std::max(s.max_upper_slack, upper);
        s.min_lower_slack = std::min(s.min_lower_slack, lower);
        s.max_lower_slack = std::max(s.max_lower_slack, lower);
        if (r.gamma_st_exact) {
            ++s.exact_rows;
            s.sharp_upper += *r.gamma_st_exact == r.upper_bound;
            s.sharp_lower += *r.gamma_st_exact == r.lower_bound;
        }
    }
    return s;
}

inline constexpr const char* kSweepCsvHeader =
    "n,source,graph_id,gamma_st_exact,constructed_size,lower_bound,upper_bound,ok";

inline void write_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.source << ',' << r.graph_id << ',';
        if (r.gamma_st_exact)
            out << *r.gamma_st_exact;
        out << ',' << r.constructed_size << ',' << r.lower_bound << ',' << r.upper_bound << ',' << (r.ok ? 1 : 0) << '\n';
    }
}

inline nlohmann::json to_json(const SweepSummary& s, const SweepOptions& opt)
{
    return {{"mode", opt.mode == SweepMode::exhaustive ? "exhaustive" : "random"},
            {"n_min", opt.n_min},
            {"n_max", opt.n_max},
            {"seed", s.seed},
            {"rows", s.rows},
            {"violations", s.violations},
            {"exact_rows", s.exact_rows},
            {"upper_slack", {{"min", s.min_upper_slack}, {"max", s.max_upper_slack}}},
            {"lower_slack", {{"min", s.min_lower_slack}, {"max", s.max_lower_slack}}},
            {"sharp_upper", s.sharp_upper},
            {"sharp_lower", s.sharp_lower}};
}

} // namespace stmop

#endif // STMOP_SWEEP_HPP
