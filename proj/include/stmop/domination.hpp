#ifndef STMOP_DOMINATION_HPP
#define STMOP_DOMINATION_HPP

#include <map>
#include <optional>
#include <string>

#include "error.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace stmop {

inline void require_member(int v, const VertexSet& s)
{
    if (!s.contains(v))
        throw Error(Errc::VertexNotInSet, "vertex " + std::to_string(v) + " is not in the set");
}

inline void require_same_size(const VertexSet& s, const Graph& g)
{
    if (s.universe() != g.size())
        throw Error(Errc::InvalidArgument, "set universe " + std::to_string(s.universe()) +
                                               " does not match graph order " + std::to_string(g.size()));
}

/// Number of members of s adjacent to v, stopping early once `limit` is reached.
inline int count_set_neighbors(int v, const VertexSet& s, const Graph& g, int limit = 1 << 30)
{
    int c = 0;
    for (int w : g.neighbors(v))
        if (s.contains(w) && ++c >= limit)
            break;
    return c;
}

inline bool has_only_set_neighbor(int w, int v, const VertexSet& s, const Graph& g)
{
    for (int x : g.neighbors(w))
        if (x != v && s.contains(x))
            return false;
    return g.adjacent(w, v);
}

/// External private neighbourhood: vertices outside s whose only neighbour in s is v.
inline VertexSet epn(int v, const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    require_member(v, s);
    VertexSet out(g.size());
    for (int w : g.neighbors(v))
        if (!s.contains(w) && has_only_set_neighbor(w, v, s, g))
            out.insert(w);
    return out;
}

/// Internal private neighbourhood: members of s whose only neighbour in s is v.
inline VertexSet ipn(int v, const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    require_member(v, s);
    VertexSet out(g.size());
    for (int w : g.neighbors(v))
        if (s.contains(w) && has_only_set_neighbor(w, v, s, g))
            out.insert(w);
    return out;
}

inline bool is_dominating(const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    for (int u = 0; u < g.size(); ++u)
        if (!s.contains(u) && count_set_neighbors(u, s, g, 1) == 0)
            return false;
    return true;
}

inline bool is_total_dominating(const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    for (int u = 0; u < g.size(); ++u)
        if (count_set_neighbors(u, s, g, 1) == 0)
            return false;
    return true;
}

inline bool is_2_dominating(const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    for (int u = 0; u < g.size(); ++u)
        if (!s.contains(u) && count_set_neighbors(u, s, g, 2) < 2)
            return false;
    return true;
}

namespace detail {

// Defence test through private neighbourhoods; s is assumed totally dominating.
// Every private neighbour of v, external or internal, loses its only
// s-neighbour in the swap and has to be adjacent to u instead.
inline bool defends_unchecked(int v, int u, const VertexSet& s, const Graph& g)
{
    if (!g.adjacent(u, v))
        return false;
    for (int w : g.neighbors(v)) {
        if (!has_only_set_neighbor(w, v, s, g))
            continue;
        // w == u means u ∈ epn(v, s) and would have no neighbour left in the new set.
        if (w == u || !g.adjacent(u, w))
            return false;
    }
    return true;
}

} // namespace detail

/// Whether v totally s-defends u, i.e. uv is an edge and (s - v) + u is totally
/// dominating. Decided locally: epn(v,s) ∪ ipn(v,s) ∪ {v} ⊆ N(u).
/// Requires s totally dominating, v ∈ s, u ∉ s.
inline bool totally_defends(int v, int u, const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    require_member(v, s);
    if (s.contains(u))
        throw Error(Errc::InvalidArgument, "defended vertex " + std::to_string(u) + " is already in the set");
    if (!is_total_dominating(s, g))
        throw Error(Errc::NotTotalDominating, "totally_defends needs a total dominating set");
    return detail::defends_unchecked(v, u, s, g);
}

inline bool is_secure_total_dominating(const VertexSet& s, const Graph& g)
{
    if (!is_total_dominating(s, g))
        return false;
    for (int u = 0; u < g.size(); ++u) {
        if (s.contains(u))
            continue;
        bool defended = false;
        for (int v : g.neighbors(u))
            if (s.contains(v) && detail::defends_unchecked(v, u, s, g)) {
                defended = true;
                break;
            }
        if (!defended)
            return false;
    }
    return true;
}

struct FailureWitness {
    int vertex = -1;
    std::string reason;
};

/// Verification verdict for one vertex set.
struct DominationClass {
    bool dominating = false;
    bool total_dominating = false;
    bool two_dominating = false;
    bool secure_total = false;
    std::map<int, int> defender_map; // u ∉ S -> lowest-id defender; complete iff secure_total
    std::optional<FailureWitness> failure_witness;
};

inline DominationClass classify(const VertexSet& s, const Graph& g)
{
    require_same_size(s, g);
    DominationClass out;
    out.dominating = is_dominating(s, g);
    out.total_dominating = is_total_dominating(s, g);
    out.two_dominating = is_2_dominating(s, g);

    if (!out.dominating) {
        for (int u = 0; u < g.size(); ++u)
            if (!s.contains(u) && count_set_neighbors(u, s, g, 1) == 0) {
                out.failure_witness = FailureWitness{u, "not dominated"};
                break;
            }
        return out;
    }
    if (!out.total_dominating) {
        for (int u = 0; u < g.size(); ++u)
            if (count_set_neighbors(u, s, g, 1) == 0) {
                out.failure_witness = FailureWitness{u, "no neighbour in the set"};
                break;
            }
        return out;
    }

    for (int u = 0; u < g.size(); ++u) {
        if (s.contains(u))
            continue;
        int defender = -1;
        for (int v : g.neighbors(u))
            if (s.contains(v) && detail::defends_unchecked(v, u, s, g)) {
                defender = v;
                break;
            }
        if (defender < 0) {
            out.failure_witness = FailureWitness{u, "not totally defended"};
            out.defender_map.clear();
            return out;
        }
        out.defender_map.emplace(u, defender);
    }
    out.secure_total = true;
    return out;
}

} // namespace stmop

#endif // STMOP_DOMINATION_HPP
