#ifndef STMOP_EXACT_HPP
#define STMOP_EXACT_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "mop.hpp"
#include "subdivision.hpp"
#include "vertex_set.hpp"

namespace stmop {

enum class Kind { dominating, total, two, secure_total };

constexpr std::string_view to_string(Kind k) noexcept
{
    switch (k) {
    case Kind::dominating: return "dominating";
    case Kind::total: return "total";
    case Kind::two: return "two";
    case Kind::secure_total: return "secure_total";
    }
    return "unknown";
}

inline std::optional<Kind> parse_kind(std::string_view s)
{
    for (Kind k : {Kind::dominating, Kind::total, Kind::two, Kind::secure_total})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

struct SolveOptions {
    bool exclude_degree_2 = false;
    int cap = 16;
    // Start at ceil((n+2)/3) for two/secure_total once the input certifies as outerplanar.
    bool seed_outerplanar_bound = true;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t explored = 0;
};

namespace detail {

class BitmaskSolver {
public:
    using Mask = std::uint64_t;

    BitmaskSolver(const Graph& g, Kind kind, bool exclude_degree_2) : n_(g.size()), kind_(kind), adj_(n_, 0)
    {
        for (int v = 0; v < n_; ++v) {
            for (int w : g.neighbors(v))
                adj_[v] |= Mask{1} << w;
            if (!(exclude_degree_2 && g.degree(v) == 2))
                allowed_ |= Mask{1} << v;
        }
        max_degree_ = g.max_degree();
    }

    bool satisfies(Mask s) const
    {
        switch (kind_) {
        case Kind::dominating:
            for (int w = 0; w < n_; ++w)
                if (!(s >> w & 1) && !(adj_[w] & s))
                    return false;
            return true;
        case Kind::total:
            for (int w = 0; w < n_; ++w)
                if (!(adj_[w] & s))
                    return false;
            return true;
        case Kind::two:
            for (int w = 0; w < n_; ++w)
                if (!(s >> w & 1) && std::popcount(adj_[w] & s) < 2)
                    return false;
            return true;
        case Kind::secure_total:
            return secure_total(s);
        }
        return false;
    }

    // Sets of exactly k vertices in lexicographic order; stops at the first
    // hit unless `all` is requested.
    std::vector<Mask> search(int k, bool all)
    {
        found_.clear();
        all_ = all;
        dfs(0, 0, k);
        return found_;
    }

    std::uint64_t explored() const noexcept { return explored_; }

private:
    bool secure_total(Mask s) const
    {
        for (int w = 0; w < n_; ++w)
            if (!(adj_[w] & s))
                return false;
        // blocked: members with a non-empty epn. need[v]: v plus its ipn.
        Mask blocked = 0;
        std::vector<Mask> need(n_, 0);
        for (int w = 0; w < n_; ++w) {
            const Mask in = adj_[w] & s;
            if (std::popcount(in) != 1)
                continue;
            const int v = std::countr_zero(in);
            if (s >> w & 1)
                need[v] |= Mask{1} << w;
            else
                blocked |= Mask{1} << v;
        }
        for (int u = 0; u < n_; ++u) {
            if (s >> u & 1)
                continue;
            bool ok = false;
            for (Mask cand = adj_[u] & s & ~blocked; cand && !ok; cand &= cand - 1) {
                const int v = std::countr_zero(cand);
                ok = (need[v] & ~adj_[u]) == 0;
            }
            if (!ok)
                return false;
        }
        return true;
    }

    bool feasible(Mask chosen, Mask future, int remaining) const
    {
        const Mask possible = chosen | future;
        const bool total_like = kind_ == Kind::total || kind_ == Kind::secure_total;
        const bool two_like = kind_ == Kind::two || kind_ == Kind::secure_total;
        int uncovered = 0;
        for (int w = 0; w < n_; ++w) {
            const bool in_possible = possible >> w & 1;
            if (total_like) {
                if (!(adj_[w] & possible))
                    return false;
                if (!(adj_[w] & chosen))
                    ++uncovered;
            } else if (!in_possible && !(adj_[w] & possible)) {
                return false;
            } else if (!(chosen >> w & 1) && !(adj_[w] & chosen)) {
                ++uncovered;
            }
            if (two_like && !in_possible && std::popcount(adj_[w] & possible) < 2)
                return false;
        }
        const int reach = total_like ? max_degree_ : max_degree_ + 1;
        return static_cast<long>(remaining) * reach >= uncovered;
    }

    bool dfs(int from, Mask chosen, int remaining)
    {
        if (remaining == 0) {
            ++explored_;
            if (satisfies(chosen)) {
                found_.push_back(chosen);
                return !all_;
            }
            return false;
        }
        const Mask future = allowed_ & ~((Mask{1} << from) - 1);
        if (std::popcount(future) < remaining || !feasible(chosen, future, remaining))
            return false;
        for (Mask cand = future; cand; cand &= cand - 1) {
            const int x = std::countr_zero(cand);
            if (n_ - x < remaining)
                break;
            if (dfs(x + 1, chosen | (Mask{1} << x), remaining - 1))
                return true;
        }
        return false;
    }

    int n_;
    Kind kind_;
    std::vector<Mask> adj_;
    Mask allowed_ = 0;
    int max_degree_ = 0;
    bool all_ = false;
    std::vector<Mask> found_;
    std::uint64_t explored_ = 0;
};

inline VertexSet to_set(int n, std::uint64_t mask)
{
    VertexSet s(n);
    for (; mask; mask &= mask - 1)
        s.insert(std::countr_zero(mask));
    return s;
}

inline bool certifies_outerplanar(const Graph& g)
{
    if (is_maximal_outerplanar(g))
        return true;
    if (g.size() >= 2 && g.edge_count() > 2 * g.size() - 3)
        return false;
    return g.size() <= kSubdivisionCap && is_outerplanar_by_subdivision(g);
}

inline int starting_bound(const Graph& g, Kind kind, const SolveOptions& opt)
{
    const int n = g.size();
    if (n == 0)
        return 0;
    const int delta = g.max_degree();
    int lb;
    if (kind == Kind::total || kind == Kind::secure_total)
        lb = (n + delta - 1) / delta;
    else
        lb = (n + delta) / (delta + 1);
    if (opt.seed_outerplanar_bound && n >= 3 && (kind == Kind::two || kind == Kind::secure_total) &&
        certifies_outerplanar(g))
        lb = std::max(lb, (n + 4) / 3);
    return std::max(lb, 1);
}

inline void check_solvable(const Graph& g, Kind kind, const SolveOptions& opt)
{
    if (g.size() > opt.cap || g.size() > 63)
        throw Error(Errc::SizeCapExceeded, "n=" + std::to_string(g.size()) + " exceeds cap " + std::to_string(opt.cap));
    if (kind == Kind::total || kind == Kind::secure_total) {
        if (g.has_isolated_vertex())
            throw Error(Errc::NoTotalDominatingSet, "graph has an isolated vertex");
        if (!g.is_connected())
            throw Error(Errc::DisconnectedGraph, "total variants require a connected graph");
    }
}

} // namespace detail

/// Minimum-cardinality set of the requested kind. Sizes are tried in
/// ascending order and the lexicographically least set of the first feasible
/// size is returned.
inline SolveResult solve(const Graph& g, Kind kind, const SolveOptions& opt = {})
{
    detail::check_solvable(g, kind, opt);
    const int n = g.size();
    detail::BitmaskSolver solver(g, kind, opt.exclude_degree_2);
    for (int k = detail::starting_bound(g, kind, opt); k <= n; ++k) {
        auto hit = solver.search(k, false);
        if (!hit.empty())
            return {k, detail::to_set(n, hit.front()), solver.explored()};
    }
    if (n == 0)
        return {0, VertexSet(0), 0};
    throw Error(Errc::Infeasible, std::string("no ") + std::string(to_string(kind)) + " set satisfies the constraint");
}

/// Every minimum set of the requested kind, in lexicographic order.
inline std::vector<VertexSet> all_minimum_sets(const Graph& g, Kind kind, const SolveOptions& opt = {})
{
    const auto best = solve(g, kind, opt);
    detail::BitmaskSolver solver(g, kind, opt.exclude_degree_2);
    std::vector<VertexSet> out;
    for (auto mask : solver.search(best.value, true))
        out.push_back(detail::to_set(g.size(), mask));
    return out;
}

} // namespace stmop

#endif // STMOP_EXACT_HPP
