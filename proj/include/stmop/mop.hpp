#ifndef STMOP_MOP_HPP
#define STMOP_MOP_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace stmop {

/// True iff chords (a,b) and (c,d) of a convex n-gon cross. Chords that
/// share an endpoint never cross.
constexpr bool chords_cross(int a, int b, int c, int d) noexcept
{
    if (a > b)
        std::swap(a, b);
    if (a == c || a == d || b == c || b == d)
        return false;
    const bool c_inside = a < c && c < b;
    const bool d_inside = a < d && d < b;
    return c_inside != d_inside;
}

/// A maximal outerplanar graph stored as a triangulated convex polygon.
///
/// Vertices are addressed by cycle position 0..n-1; the boundary is the
/// cycle 0,1,...,n-1,0. `label(p)` is the external vertex id at position p,
/// which survives vertex deletion so sets found on a reduced graph can be
/// read back in the original ids.
class MopGraph {
public:
    int size() const noexcept { return n_; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int label(int pos) const { return labels_.at(pos); }

    /// Position of an external id, or -1.
    int position_of(int label) const
    {
        if (label < 0 || label >= static_cast<int>(position_.size()))
            return -1;
        return position_[label];
    }

    /// One past the largest label; the universe of label-space vertex sets.
    int universe() const noexcept { return static_cast<int>(position_.size()); }

    const std::vector<Edge>& diagonals() const noexcept { return diagonals_; }

    /// Underlying graph in position space.
    const Graph& graph() const noexcept { return graph_; }

    /// Underlying graph in label space. Requires labels to be a permutation of 0..n-1.
    Graph vertex_graph() const
    {
        if (universe() != n_)
            throw Error(Errc::InvalidArgument, "labels are not a permutation of 0..n-1");
        std::vector<Edge> edges;
        for (auto [u, v] : graph_.edges())
            edges.emplace_back(labels_[u], labels_[v]);
        return Graph(n_, edges);
    }

    int next(int pos) const noexcept { return (pos + 1) % n_; }
    int prev(int pos) const noexcept { return (pos + n_ - 1) % n_; }
    bool adjacent(int p, int q) const { return graph_.adjacent(p, q); }
    int degree(int pos) const { return graph_.degree(pos); }

    /// Label-space image of a position set; `universe` defaults to this graph's.
    VertexSet to_labels(const VertexSet& positions, int universe = -1) const
    {
        VertexSet out(universe < 0 ? this->universe() : universe);
        positions.for_each([&](int p) { out.insert(labels_.at(p)); });
        return out;
    }

    VertexSet to_positions(const VertexSet& label_set) const
    {
        VertexSet out(n_);
        label_set.for_each([&](int l) {
            int p = position_of(l);
            if (p < 0)
                throw Error(Errc::InvalidArgument, "label " + std::to_string(l) + " not in graph");
            out.insert(p);
        });
        return out;
    }

    friend bool operator==(const MopGraph& a, const MopGraph& b)
    {
        return a.n_ == b.n_ && a.labels_ == b.labels_ && a.diagonals_ == b.diagonals_;
    }

    friend MopGraph mop_from_diagonals(int n, std::span<const Edge> diagonals, std::vector<int> labels);

private:
    MopGraph() = default;

    int n_ = 0;
    std::vector<int> labels_;
    std::vector<int> position_;
    std::vector<Edge> diagonals_;
    Graph graph_;
};

/// Validates and builds a mop on the cycle 0..n-1. `labels` defaults to the identity.
inline MopGraph mop_from_diagonals(int n, std::span<const Edge> diagonals, std::vector<int> labels = {})
{
    if (n < 3)
        throw Error(Errc::InvalidArgument, "a mop needs at least 3 vertices, got " + std::to_string(n));

    std::vector<Edge> diags;
    diags.reserve(diagonals.size());
    for (auto [i, j] : diagonals) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw Error(Errc::InvalidDiagonal, "diagonal (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        const int gap = ((i - j) % n + n) % n;
        if (gap == 0 || gap == 1 || gap == n - 1)
            throw Error(Errc::InvalidDiagonal, "(" + std::to_string(i) + "," + std::to_string(j) + ") is not a diagonal");
        diags.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(diags.begin(), diags.end());
    if (auto dup = std::adjacent_find(diags.begin(), diags.end()); dup != diags.end())
        throw Error(Errc::DuplicateDiagonal, "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    for (std::size_t p = 0; p < diags.size(); ++p)
        for (std::size_t q = p + 1; q < diags.size(); ++q)
            if (chords_cross(diags[p].first, diags[p].second, diags[q].first, diags[q].second))
                throw Error(Errc::CrossingDiagonals,
                            "(" + std::to_string(diags[p].first) + "," + std::to_string(diags[p].second) + ") and (" +
                                std::to_string(diags[q].first) + "," + std::to_string(diags[q].second) + ")");
    if (static_cast<int>(diags.size()) != n - 3)
        throw Error(Errc::WrongDiagonalCount,
                    "expected " + std::to_string(n - 3) + " diagonals, got " + std::to_string(diags.size()));

    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i)
            labels[i] = i;
    }
    if (static_cast<int>(labels.size()) != n)
        throw Error(Errc::InvalidArgument, "label count does not match n");
    const int universe = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<int> position(universe, -1);
    for (int p = 0; p < n; ++p) {
        if (labels[p] < 0 || position[labels[p]] != -1)
            throw Error(Errc::InvalidArgument, "labels must be distinct non-negative ids");
        position[labels[p]] = p;
    }

    std::vector<Edge> edges = diags;
    for (int p = 0; p < n; ++p)
        edges.emplace_back(p, (p + 1) % n);

    MopGraph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    g.position_ = std::move(position);
    g.diagonals_ = std::move(diags);
    g.graph_ = Graph(n, edges);
    return g;
}

inline MopGraph mop_from_diagonals(int n, std::initializer_list<Edge> diagonals)
{
    return mop_from_diagonals(n, std::span<const Edge>(diagonals.begin(), diagonals.size()));
}

/// Outcome of mop recognition: the recovered MopGraph, or the violated condition.
struct MopCertificate {
    std::optional<MopGraph> mop;
    std::string violation;

    explicit operator bool() const noexcept { return mop.has_value(); }
};

/// Recognises maximal outerplanar graphs by ear peeling and recovers the
/// Hamiltonian cycle. The returned mop has labels = cycle order, starting at
/// vertex 0 and heading towards its smaller cycle neighbour.
inline MopCertificate is_maximal_outerplanar(const Graph& g)
{
    const int n = g.size();
    if (n < 3)
        return {std::nullopt, "fewer than 3 vertices"};
    if (g.edge_count() != 2 * n - 3)
        return {std::nullopt, "edge count " + std::to_string(g.edge_count()) + " != 2n-3 = " + std::to_string(2 * n - 3)};
    if (!g.is_connected())
        return {std::nullopt, "not connected"};

    // Peel ears until a triangle remains.
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<int> pending;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 2)
            pending.push_back(v);
    }
    struct Ear {
        int v, a, b;
    };
    std::vector<Ear> ears;
    int remaining = n;
    while (remaining > 3) {
        int v = -1;
        while (!pending.empty()) {
            int c = pending.back();
            pending.pop_back();
            if (alive[c] && deg[c] == 2) {
                v = c;
                break;
            }
        }
        if (v < 0)
            return {std::nullopt, "no degree-2 vertex left to peel"};
        int ends[2];
        int k = 0;
        for (int w : g.neighbors(v))
            if (alive[w])
                ends[k++] = w;
        if (!g.adjacent(ends[0], ends[1]))
            return {std::nullopt, "neighbours of degree-2 vertex " + std::to_string(v) + " are not adjacent"};
        alive[v] = 0;
        --remaining;
        ears.push_back({v, ends[0], ends[1]});
        for (int w : ends)
            if (--deg[w] == 2)
                pending.push_back(w);
    }

    std::vector<int> nxt(n, -1), prv(n, -1);
    std::vector<int> tri;
    for (int v = 0; v < n; ++v)
        if (alive[v])
            tri.push_back(v);
    for (int i = 0; i < 3; ++i) {
        nxt[tri[i]] = tri[(i + 1) % 3];
        prv[tri[(i + 1) % 3]] = tri[i];
    }
    for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
        int a = it->a, b = it->b;
        if (nxt[b] == a)
            std::swap(a, b);
        if (nxt[a] != b)
            return {std::nullopt, "ear " + std::to_string(it->v) + " sits on a chord, not a boundary edge"};
        nxt[a] = it->v;
        prv[it->v] = a;
        nxt[it->v] = b;
        prv[b] = it->v;
    }

    const bool forward = nxt[0] < prv[0];
    std::vector<int> cycle;
    cycle.reserve(n);
    for (int v = 0, i = 0; i < n; ++i, v = forward ? nxt[v] : prv[v])
        cycle.push_back(v);
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p)
        pos[cycle[p]] = p;

    std::vector<Edge> diags;
    for (auto [u, v] : g.edges()) {
        int d = ((pos[u] - pos[v]) % n + n) % n;
        if (d != 1 && d != n - 1)
            diags.emplace_back(pos[u], pos[v]);
    }
    try {
        return {mop_from_diagonals(n, diags, cycle), {}};
    } catch (const Error& e) {
        return {std::nullopt, e.what()};
    }
}

/// Deletes the vertices at `positions` and re-validates the remainder as a mop
/// on the inherited cycle order. Labels are carried over.
inline MopGraph remove_consecutive(const MopGraph& g, std::span<const int> positions)
{
    const int n = g.size();
    std::vector<char> drop(n, 0);
    for (int p : positions) {
        if (p < 0 || p >= n)
            throw Error(Errc::InvalidArgument, "position " + std::to_string(p) + " out of range");
        drop[p] = 1;
    }
    std::vector<int> keep;
    for (int p = 0; p < n; ++p)
        if (!drop[p])
            keep.push_back(p);
    const int m = static_cast<int>(keep.size());
    if (m == n)
        return g;
    if (m < 3)
        throw Error(Errc::NotAMopAfterDeletion, "fewer than 3 vertices remain");

    for (int i = 0; i < m; ++i) {
        int a = keep[i], b = keep[(i + 1) % m];
        if (!g.adjacent(a, b))
            throw Error(Errc::NotAMopAfterDeletion, "no edge bridges labels " + std::to_string(g.label(a)) + " and " +
                                                        std::to_string(g.label(b)));
    }
    std::vector<Edge> diags;
    int edges = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(keep[i], keep[j])) {
                ++edges;
                if (j != i + 1 && !(i == 0 && j == m - 1))
                    diags.emplace_back(i, j);
            }
    if (edges != 2 * m - 3)
        throw Error(Errc::NotAMopAfterDeletion, "induced subgraph has " + std::to_string(edges) + " edges");

    std::vector<int> labels;
    labels.reserve(m);
    for (int p : keep)
        labels.push_back(g.label(p));
    try {
        return mop_from_diagonals(m, diags, std::move(labels));
    } catch (const Error& e) {
        throw Error(Errc::NotAMopAfterDeletion, e.what());
    }
}

inline MopGraph remove_consecutive(const MopGraph& g, std::initializer_list<int> positions)
{
    return remove_consecutive(g, std::span<const int>(positions.begin(), positions.size()));
}

/// (label, degree) for every vertex, in cycle order.
inline std::vector<std::pair<int, int>> degrees(const MopGraph& g)
{
    std::vector<std::pair<int, int>> out;
    out.reserve(g.size());
    for (int p = 0; p < g.size(); ++p)
        out.emplace_back(g.label(p), g.degree(p));
    return out;
}

inline VertexSet degree_two_positions(const MopGraph& g)
{
    VertexSet out(g.size());
    for (int p = 0; p < g.size(); ++p)
        if (g.degree(p) == 2)
            out.insert(p);
    return out;
}

} // namespace stmop

#endif // STMOP_MOP_HPP
