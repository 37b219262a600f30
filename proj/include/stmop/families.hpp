#ifndef STMOP_FAMILIES_HPP
#define STMOP_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "mop.hpp"

namespace stmop {

inline constexpr int kEnumerationCap = 14;

inline std::uint64_t catalan(int m)
{
    if (m < 0)
        return 0;
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

inline MopGraph mop_from_edges_or_throw(const Graph& g, const std::string& name)
{
    auto cert = is_maximal_outerplanar(g);
    if (!cert)
        throw Error(Errc::InternalInvariantViolation, name + " is not maximal outerplanar: " + cert.violation);
    return *cert.mop;
}

/// Upper-bound extremal mop on 3k vertices: triangles a_i b_i c_i, links
/// c_i a_{i+1}, hub edges a_1 a_i and a_1 c_i. Ids are a_i = 3(i-1),
/// b_i = 3(i-1)+1, c_i = 3(i-1)+2, which makes the boundary the identity.
inline MopGraph make_h_k(int k)
{
    if (k < 1)
        throw Error(Errc::InvalidArgument, "H_k needs k >= 1");
    auto a = [](int i) { return 3 * (i - 1); };
    auto b = [](int i) { return 3 * (i - 1) + 1; };
    auto c = [](int i) { return 3 * (i - 1) + 2; };
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(b(i), c(i));
        edges.emplace_back(c(i), a(i));
    }
    for (int i = 1; i < k; ++i)
        edges.emplace_back(c(i), a(i + 1));
    for (int i = 2; i <= k; ++i) {
        edges.emplace_back(a(1), a(i));
        edges.emplace_back(a(1), c(i));
    }
    return mop_from_edges_or_throw(Graph(3 * k, edges), "H_" + std::to_string(k));
}

/// Lower-bound extremal fan on 3k+1 vertices; v_1 = 0 is the hub,
/// v_i = i-1 for the path.
inline MopGraph make_g_k(int k)
{
    if (k < 1)
        throw Error(Errc::InvalidArgument, "G_k needs k >= 1");
    const int n = 3 * k + 1;
    std::vector<Edge> edges;
    for (int i = 2; i <= 3 * k; ++i)
        edges.emplace_back(i - 1, i);
    for (int i = 2; i <= n; ++i)
        edges.emplace_back(0, i - 1);
    return mop_from_edges_or_throw(Graph(n, edges), "G_" + std::to_string(k));
}

namespace detail {

// Triangulations of the polygon lo..hi (boundary edge lo-hi) by apex choice.
inline void triangulate(int lo, int hi, std::vector<Edge>& diags, const std::function<void()>& next)
{
    if (hi - lo < 2) {
        next();
        return;
    }
    for (int apex = lo + 1; apex < hi; ++apex) {
        const std::size_t mark = diags.size();
        if (apex - lo >= 2)
            diags.emplace_back(lo, apex);
        if (hi - apex >= 2)
            diags.emplace_back(apex, hi);
        triangulate(lo, apex, diags, [&] { triangulate(apex, hi, diags, next); });
        diags.resize(mark);
    }
}

} // namespace detail

/// Calls `visit` once per triangulation of the convex n-gon (Catalan(n-2) of them).
inline void for_each_mop(int n, const std::function<void(const MopGraph&)>& visit)
{
    if (n < 3)
        throw Error(Errc::InvalidArgument, "mops need n >= 3");
    if (n > kEnumerationCap)
        throw Error(Errc::SizeCapExceeded, "enumeration capped at n=" + std::to_string(kEnumerationCap));
    std::vector<Edge> diags;
    detail::triangulate(0, n - 1, diags, [&] { visit(mop_from_diagonals(n, diags)); });
}

inline std::vector<MopGraph> enumerate_mops(int n)
{
    std::vector<MopGraph> out;
    for_each_mop(n, [&](const MopGraph& g) { out.push_back(g); });
    return out;
}

/// Uniform random triangulation of the n-gon, deterministic per seed.
///
/// A uniform Dyck word of semilength n-2 comes from the cycle lemma applied to
/// a shuffled word with one surplus down-step; the word maps to a binary tree
/// and the tree to a triangulation by apex recursion.
inline MopGraph random_mop(int n, std::uint64_t seed)
{
    if (n < 3)
        throw Error(Errc::InvalidArgument, "mops need n >= 3");
    const int m = n - 2;
    std::mt19937_64 rng(seed);
    std::vector<int> word(2 * m + 1, -1);
    std::fill(word.begin(), word.begin() + m, 1);
    std::shuffle(word.begin(), word.end(), rng);

    // The rotation starting right after the first minimum prefix sum is the
    // unique one whose proper prefixes all stay >= 0.
    int sum = 0, lowest = 0, cut = 0;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        sum += word[i];
        if (sum < lowest) {
            lowest = sum;
            cut = i + 1;
        }
    }
    std::rotate(word.begin(), word.begin() + cut % static_cast<int>(word.size()), word.end());
    word.pop_back();

    // match[i] = index of the down-step closing the up-step at i.
    std::vector<int> match(word.size(), -1), stack;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (word[i] == 1) {
            stack.push_back(i);
        } else {
            match[stack.back()] = i;
            stack.pop_back();
        }
    }

    std::vector<Edge> diags;
    // Word segment [from, to) encodes the tree triangulating polygon lo..lo+size+1.
    struct Frame {
        int from, to, lo;
    };
    std::vector<Frame> work{{0, static_cast<int>(word.size()), 0}};
    while (!work.empty()) {
        auto [from, to, lo] = work.back();
        work.pop_back();
        if (from >= to)
            continue;
        const int close = match[from];
        const int left = (close - from - 1) / 2;
        const int size = (to - from) / 2;
        const int hi = lo + size + 1;
        const int apex = lo + left + 1;
        if (apex - lo >= 2)
            diags.emplace_back(lo, apex);
        if (hi - apex >= 2)
            diags.emplace_back(apex, hi);
        work.push_back({from + 1, close, lo});
        work.push_back({close + 1, to, apex});
    }
    return mop_from_diagonals(n, diags);
}

} // namespace stmop

#endif // STMOP_FAMILIES_HPP
