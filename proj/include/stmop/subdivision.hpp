#ifndef STMOP_SUBDIVISION_HPP
#define STMOP_SUBDIVISION_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace stmop {

inline constexpr int kSubdivisionCap = 20;

namespace detail {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Backtracking search for a topological copy of a small pattern: pick branch
// vertices, then route every pattern edge as a path whose interior avoids all
// branch vertices and every previously routed interior.
class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, std::span<const Edge> pattern) : n_(g.size()), pattern_(pattern.begin(), pattern.end())
    {
        adj_.assign(n_, 0);
        for (auto [u, v] : g.edges()) {
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
        // Vertices of degree <= 1 lie on no cycle and never on a subdivision path.
        alive_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < n_; ++v)
                if ((alive_ & bit(v)) && std::popcount(adj_[v] & alive_) <= 1) {
                    alive_ &= ~bit(v);
                    changed = true;
                }
        }
    }

    bool found_with(std::span<const int> branch)
    {
        branch_.assign(branch.begin(), branch.end());
        branch_mask_ = 0;
        for (int b : branch_)
            branch_mask_ |= bit(b);
        return route(0, branch_mask_);
    }

    Mask alive() const { return alive_; }
    int degree(int v) const { return std::popcount(adj_[v] & alive_); }

private:
    bool connected_through_free(int s, int t, Mask used) const
    {
        const Mask free = alive_ & ~used;
        if (adj_[s] & bit(t))
            return true;
        Mask frontier = adj_[s] & free;
        Mask seen = frontier;
        while (frontier) {
            if ([&] {
                    for (Mask f = frontier; f; f &= f - 1)
                        if (adj_[std::countr_zero(f)] & bit(t))
                            return true;
                    return false;
                }())
                return true;
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj_[std::countr_zero(f)];
            next &= free & ~seen;
            seen |= next;
            frontier = next;
        }
        return false;
    }

    bool route(std::size_t idx, Mask used)
    {
        if (idx == pattern_.size())
            return true;
        for (std::size_t e = idx; e < pattern_.size(); ++e)
            if (!connected_through_free(branch_[pattern_[e].first], branch_[pattern_[e].second], used))
                return false;
        const int s = branch_[pattern_[idx].first];
        const int t = branch_[pattern_[idx].second];
        if (adj_[s] & bit(t))
            return route(idx + 1, used);
        return extend(idx, s, t, used);
    }

    // Grow a path from `cur` towards `t`. A vertex adjacent to t closes the
    // path immediately: any longer continuation uses a superset of vertices.
    bool extend(std::size_t idx, int cur, int t, Mask used)
    {
        for (Mask cand = adj_[cur] & alive_ & ~used; cand; cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            const Mask with = used | bit(w);
            if (adj_[w] & bit(t)) {
                if (route(idx + 1, with))
                    return true;
            } else if (extend(idx, w, t, with)) {
                return true;
            }
        }
        return false;
    }

    int n_;
    std::vector<Edge> pattern_;
    std::vector<Mask> adj_;
    Mask alive_ = 0;
    std::vector<int> branch_;
    Mask branch_mask_ = 0;
};

inline void check_cap(const Graph& g, int cap)
{
    if (cap > 64)
        cap = 64;
    if (g.size() > cap)
        throw Error(Errc::SizeLimitExceeded,
                    "subdivision search refuses n=" + std::to_string(g.size()) + " (cap " + std::to_string(cap) + ")");
}

} // namespace detail

/// True iff g contains a subdivision of K4.
inline bool has_k4_subdivision(const Graph& g, int cap = kSubdivisionCap)
{
    detail::check_cap(g, cap);
    static constexpr std::array<Edge, 6> k4{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    detail::SubdivisionSearch search(g, k4);
    std::vector<int> cand;
    for (int v = 0; v < g.size(); ++v)
        if ((search.alive() & detail::bit(v)) && search.degree(v) >= 3)
            cand.push_back(v);
    const int c = static_cast<int>(cand.size());
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            for (int d = b + 1; d < c; ++d)
                for (int e = d + 1; e < c; ++e) {
                    const std::array<int, 4> branch{cand[a], cand[b], cand[d], cand[e]};
                    if (search.found_with(branch))
                        return true;
                }
    return false;
}

/// True iff g contains a subdivision of K2,3.
inline bool has_k23_subdivision(const Graph& g, int cap = kSubdivisionCap)
{
    detail::check_cap(g, cap);
    // Branch slots 0,1 form the 2-side; 2,3,4 the 3-side.
    static constexpr std::array<Edge, 6> k23{{{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}};
    detail::SubdivisionSearch search(g, k23);
    std::vector<int> cand;
    for (int v = 0; v < g.size(); ++v)
        if ((search.alive() & detail::bit(v)) && search.degree(v) >= 3)
            cand.push_back(v);
    // Degree-2 vertices of the 3-side only need two paths, so any live vertex qualifies there.
    std::vector<int> side3;
    for (int v = 0; v < g.size(); ++v)
        if ((search.alive() & detail::bit(v)) && search.degree(v) >= 2)
            side3.push_back(v);
    const int c = static_cast<int>(cand.size());
    const int s = static_cast<int>(side3.size());
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            for (int x = 0; x < s; ++x)
                for (int y = x + 1; y < s; ++y)
                    for (int z = y + 1; z < s; ++z) {
                        const std::array<int, 5> branch{cand[a], cand[b], side3[x], side3[y], side3[z]};
                        if (branch[2] == branch[0] || branch[2] == branch[1] || branch[3] == branch[0] ||
                            branch[3] == branch[1] || branch[4] == branch[0] || branch[4] == branch[1])
                            continue;
                        if (search.found_with(branch))
                            return true;
                    }
    return false;
}

/// Outerplanarity via the forbidden-subdivision characterisation: no K4 and
/// no K2,3 subdivision. Exponential; refuses graphs above `cap` vertices.
inline bool is_outerplanar_by_subdivision(const Graph& g, int cap = kSubdivisionCap)
{
    return !has_k4_subdivision(g, cap) && !has_k23_subdivision(g, cap);
}

} // namespace stmop

#endif // STMOP_SUBDIVISION_HPP
