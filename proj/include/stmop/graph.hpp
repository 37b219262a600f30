#ifndef STMOP_GRAPH_HPP
#define STMOP_GRAPH_HPP

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace stmop {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(n), nbr_(n, VertexSet(n))
    {
        if (n < 0)
            throw Error(Errc::InvalidArgument, "negative vertex count");
    }

    /// Duplicate edges are merged; self-loops and out-of-range ids are rejected.
    Graph(int n, std::span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(Errc::InvalidArgument, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw Error(Errc::InvalidArgument, "self-loop at " + std::to_string(u));
            if (nbr_[u].contains(v))
                continue;
            nbr_[u].insert(v);
            nbr_[v].insert(u);
            ++m_;
        }
        for (int v = 0; v < n; ++v)
            adj_[v] = nbr_[v].members();
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    int size() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    std::span<const int> neighbors(int v) const { return adj_.at(v); }
    const VertexSet& neighbor_set(int v) const { return nbr_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(int u, int v) const { return nbr_.at(u).contains(v); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    int max_degree() const noexcept
    {
        int d = 0;
        for (const auto& a : adj_)
            d = std::max(d, static_cast<int>(a.size()));
        return d;
    }

    bool has_isolated_vertex() const noexcept
    {
        return std::any_of(adj_.begin(), adj_.end(), [](const auto& a) { return a.empty(); });
    }

    bool is_connected() const
    {
        if (n_ <= 1)
            return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n_;
    }

    /// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in the order given.
    Graph induced(std::span<const int> keep) const
    {
        std::vector<int> index(n_, -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            index.at(keep[i]) = static_cast<int>(i);
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (int w : adj_[keep[i]])
                if (index[w] > static_cast<int>(i))
                    sub.emplace_back(static_cast<int>(i), index[w]);
        return Graph(static_cast<int>(keep.size()), sub);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> nbr_;
};

} // namespace stmop

#endif // STMOP_GRAPH_HPP
