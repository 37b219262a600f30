#ifndef STMOP_CONFIGURATION_HPP
#define STMOP_CONFIGURATION_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "mop.hpp"

namespace stmop {

/// The eight reducible patterns on consecutive boundary vertices of a mop.
enum class ConfigKind { a, b, c, d, e, f, g, h };

inline constexpr std::array<ConfigKind, 8> kAllConfigKinds{ConfigKind::a, ConfigKind::b, ConfigKind::c, ConfigKind::d,
                                                           ConfigKind::e, ConfigKind::f, ConfigKind::g, ConfigKind::h};

constexpr char to_char(ConfigKind k) noexcept { return static_cast<char>('a' + static_cast<int>(k)); }

/// Pattern vertices named in boundary order. Five-vertex patterns start at u.
enum class Role { t, u, v, w, x, y, z };

constexpr char to_char(Role r) noexcept { return "tuvwxyz"[static_cast<int>(r)]; }

struct Pattern {
    ConfigKind kind;
    int span;
    Role first;
    bool mirrorable;
    std::vector<std::pair<Role, Role>> chords;
    std::vector<Role> deleted; // vertices removed before recursing
};

inline const Pattern& pattern(ConfigKind kind)
{
    using R = Role;
    static const std::array<Pattern, 8> table{{
        {ConfigKind::a, 5, R::u, true, {{R::v, R::x}, {R::u, R::x}, {R::u, R::y}}, {R::v, R::w, R::x}},
        {ConfigKind::b, 5, R::u, true, {{R::u, R::w}, {R::u, R::x}, {R::u, R::y}}, {R::v, R::w, R::x}},
        {ConfigKind::c, 5, R::u, false, {{R::u, R::w}, {R::w, R::y}, {R::u, R::y}}, {R::v, R::x}},
        {ConfigKind::d, 6, R::t, true, {{R::t, R::w}, {R::u, R::w}, {R::w, R::y}, {R::t, R::y}}, {R::u, R::v, R::x}},
        {ConfigKind::e, 6, R::t, true, {{R::t, R::v}, {R::t, R::w}, {R::w, R::y}, {R::t, R::y}}, {R::u, R::v, R::x}},
        {ConfigKind::f, 7, R::t, false, {{R::t, R::w}, {R::u, R::w}, {R::w, R::y}, {R::w, R::z}, {R::t, R::z}}, {R::u, R::v, R::x}},
        {ConfigKind::g, 7, R::t, true, {{R::t, R::w}, {R::u, R::w}, {R::w, R::z}, {R::x, R::z}, {R::t, R::z}}, {R::u, R::v, R::y}},
        {ConfigKind::h, 7, R::t, false, {{R::t, R::v}, {R::t, R::w}, {R::w, R::z}, {R::x, R::z}, {R::t, R::z}}, {R::u, R::v, R::y}},
    }};
    return table[static_cast<int>(kind)];
}

/// A located pattern: role positions are start, start±1, ... (minus when mirrored).
struct Configuration {
    ConfigKind kind = ConfigKind::a;
    int start = 0;
    bool mirrored = false;
    int span = 0;
    std::vector<Edge> witness_chords;
    std::array<int, 7> roles{-1, -1, -1, -1, -1, -1, -1};

    int at(Role r) const
    {
        int p = roles[static_cast<int>(r)];
        if (p < 0)
            throw Error(Errc::InvalidArgument, std::string("role ") + to_char(r) + " not part of pattern");
        return p;
    }

    bool has(Role r) const noexcept { return roles[static_cast<int>(r)] >= 0; }

    /// Positions in role order.
    std::vector<int> span_positions() const
    {
        std::vector<int> out;
        for (int p : roles)
            if (p >= 0)
                out.push_back(p);
        return out;
    }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Tests whether the span starting at `start` induces exactly the pattern.
inline std::optional<Configuration> match_configuration(const MopGraph& g, ConfigKind kind, int start, bool mirrored)
{
    const Pattern& pat = pattern(kind);
    const int n = g.size();
    if (pat.span > n || start < 0 || start >= n || (mirrored && !pat.mirrorable))
        return std::nullopt;

    Configuration cfg;
    cfg.kind = kind;
    cfg.start = start;
    cfg.mirrored = mirrored;
    cfg.span = pat.span;
    std::vector<int> pos(pat.span);
    for (int i = 0; i < pat.span; ++i) {
        pos[i] = mirrored ? ((start - i) % n + n) % n : (start + i) % n;
        cfg.roles[static_cast<int>(pat.first) + i] = pos[i];
    }

    std::array<std::array<bool, 7>, 7> expected{};
    for (int i = 0; i + 1 < pat.span; ++i)
        expected[i][i + 1] = expected[i + 1][i] = true;
    const int base = static_cast<int>(pat.first);
    for (auto [r, s] : pat.chords) {
        int i = static_cast<int>(r) - base, j = static_cast<int>(s) - base;
        expected[i][j] = expected[j][i] = true;
        cfg.witness_chords.emplace_back(pos[i], pos[j]);
    }
    for (int i = 0; i < pat.span; ++i)
        for (int j = i + 1; j < pat.span; ++j)
            if (g.adjacent(pos[i], pos[j]) != expected[i][j])
                return std::nullopt;
    return cfg;
}

/// First pattern occurrence scanning start positions in cycle order, kinds
/// a..h, forward before mirrored. Every mop with n >= 5 has one.
inline Configuration find_configuration(const MopGraph& g)
{
    if (g.size() < 5)
        throw Error(Errc::GraphTooSmall, "pattern search needs n >= 5, got " + std::to_string(g.size()));
    for (int start = 0; start < g.size(); ++start)
        for (ConfigKind kind : kAllConfigKinds)
            for (bool mirrored : {false, true})
                if (auto cfg = match_configuration(g, kind, start, mirrored))
                    return *cfg;
    throw Error(Errc::NoConfigurationFound, "no pattern matched on a mop of order " + std::to_string(g.size()));
}

} // namespace stmop

#endif // STMOP_CONFIGURATION_HPP
