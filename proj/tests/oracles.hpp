#ifndef STMOP_TESTS_ORACLES_HPP
#define STMOP_TESTS_ORACLES_HPP

// Definitional brute-force oracles. Nothing here calls into the library's
// domination, exact or configuration code; graphs are read only through
// their edge lists.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stmop/graph.hpp"
#include "stmop/mop.hpp"

namespace oracle {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(const stmop::Graph& g) : n(g.size()), adj(n, std::vector<bool>(n, false))
    {
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = true;
    }
};

using Mask = std::uint32_t;

inline bool in(Mask s, int v) { return (s >> v) & 1u; }

inline int set_neighbours(const Matrix& m, int v, Mask s)
{
    int c = 0;
    for (int w = 0; w < m.n; ++w)
        if (m.adj[v][w] && in(s, w))
            ++c;
    return c;
}

inline bool dominating(const Matrix& m, Mask s)
{
    for (int v = 0; v < m.n; ++v)
        if (!in(s, v) && set_neighbours(m, v, s) == 0)
            return false;
    return true;
}

inline bool total(const Matrix& m, Mask s)
{
    for (int v = 0; v < m.n; ++v)
        if (set_neighbours(m, v, s) == 0)
            return false;
    return true;
}

inline bool two(const Matrix& m, Mask s)
{
    for (int v = 0; v < m.n; ++v)
        if (!in(s, v) && set_neighbours(m, v, s) < 2)
            return false;
    return true;
}

/// v totally s-defends u: uv is an edge and (s \ {v}) ∪ {u} is totally dominating.
inline bool swap_defends(const Matrix& m, int v, int u, Mask s)
{
    return m.adj[u][v] && total(m, (s & ~(Mask{1} << v)) | (Mask{1} << u));
}

inline bool secure_total(const Matrix& m, Mask s)
{
    if (!total(m, s))
        return false;
    for (int u = 0; u < m.n; ++u) {
        if (in(s, u))
            continue;
        bool ok = false;
        for (int v = 0; v < m.n && !ok; ++v)
            ok = in(s, v) && swap_defends(m, v, u, s);
        if (!ok)
            return false;
    }
    return true;
}

enum class Kind { dominating, total, two, secure_total };

inline bool holds(const Matrix& m, Kind k, Mask s)
{
    switch (k) {
    case Kind::dominating: return dominating(m, s);
    case Kind::total: return total(m, s);
    case Kind::two: return two(m, s);
    case Kind::secure_total: return secure_total(m, s);
    }
    return false;
}

inline std::vector<int> to_list(Mask s)
{
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if (in(s, v))
            out.push_back(v);
    return out;
}

struct Minimum {
    int value = -1; // -1: no set qualifies
    std::vector<std::vector<int>> sets; // all minimum sets, lexicographic
};

/// Full 2^n enumeration. `forbidden` vertices may not be chosen.
inline Minimum minimum(const stmop::Graph& g, Kind k, Mask forbidden = 0)
{
    Matrix m(g);
    Minimum best;
    for (Mask s = 0; s < (Mask{1} << m.n); ++s) {
        if (s & forbidden)
            continue;
        const int size = std::popcount(s);
        if (best.value >= 0 && size > best.value)
            continue;
        if (!holds(m, k, s))
            continue;
        if (best.value < 0 || size < best.value) {
            best.value = size;
            best.sets.clear();
        }
        best.sets.push_back(to_list(s));
    }
    std::sort(best.sets.begin(), best.sets.end());
    return best;
}

/// Catalan numbers by the convolution recurrence.
inline std::vector<std::uint64_t> catalan_table(int upto)
{
    std::vector<std::uint64_t> c(upto + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= upto; ++m)
        for (int i = 0; i < m; ++i)
            c[m] += c[i] * c[m - 1 - i];
    return c;
}

/// Chords of a convex polygon cross iff their endpoints are distinct and interleave.
inline bool cross(int a, int b, int c, int d)
{
    if (a == c || a == d || b == c || b == d)
        return false;
    long p = static_cast<long>(a - c) * (a - d) * (b - c) * (b - d);
    return p < 0;
}

/// Independent pattern check: `chords` like "vx,ux,uy", roles laid out on
/// consecutive positions from `start`, `step` = +1 or -1.
inline bool induces_pattern(const stmop::MopGraph& g, const std::string& roles, const std::string& chords, int start, int step)
{
    const int n = g.size();
    const int k = static_cast<int>(roles.size());
    if (k > n)
        return false;
    auto pos = [&](char r) {
        int i = static_cast<int>(roles.find(r));
        return ((start + step * i) % n + n) % n;
    };
    Matrix m(g.graph());
    std::vector<std::pair<char, char>> want;
    for (int i = 0; i + 1 < k; ++i)
        want.emplace_back(roles[i], roles[i + 1]);
    for (std::size_t i = 0; i + 1 < chords.size(); i += 3)
        want.emplace_back(chords[i], chords[i + 1]);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool expected = false;
            for (auto [a, b] : want)
                if ((a == roles[i] && b == roles[j]) || (a == roles[j] && b == roles[i]))
                    expected = true;
            if (m.adj[pos(roles[i])][pos(roles[j])] != expected)
                return false;
        }
    return true;
}

struct PatternLetters {
    const char* roles;
    const char* chords;
    bool mirror;
};

/// The eight patterns transcribed as role strings and chord lists, indexed 'a'..'h'.
inline const PatternLetters& pattern_letters(char kind)
{
    static const PatternLetters table[8] = {
        {"uvwxy", "vx,ux,uy", true},
        {"uvwxy", "uw,ux,uy", true},
        {"uvwxy", "uw,wy,uy", false},
        {"tuvwxy", "tw,uw,wy,ty", true},
        {"tuvwxy", "tv,tw,wy,ty", true},
        {"tuvwxyz", "tw,uw,wy,wz,tz", false},
        {"tuvwxyz", "tw,uw,wz,xz,tz", true},
        {"tuvwxyz", "tv,tw,wz,xz,tz", false},
    };
    return table[kind - 'a'];
}

} // namespace oracle

#endif // STMOP_TESTS_ORACLES_HPP
