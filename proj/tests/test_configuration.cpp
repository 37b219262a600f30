#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "stmop/configuration.hpp"
#include "stmop/families.hpp"

using namespace stmop;

namespace {

struct Letters {
    const char* roles;
    const char* chords;
    bool mirror;
};

const std::map<ConfigKind, Letters> kLetters = [] {
    std::map<ConfigKind, Letters> m;
    for (ConfigKind k : kAllConfigKinds) {
        const auto& l = oracle::pattern_letters(to_char(k));
        m[k] = {l.roles, l.chords, l.mirror};
    }
    return m;
}();

bool oracle_match(const MopGraph& g, ConfigKind k, int start, bool mirrored)
{
    const auto& l = kLetters.at(k);
    return oracle::induces_pattern(g, l.roles, l.chords, start, mirrored ? -1 : 1);
}

// The configuration is exactly the first hit of the documented scan order.
void check_first_hit(const MopGraph& g)
{
    const Configuration cfg = find_configuration(g);
    ASSERT_TRUE(oracle_match(g, cfg.kind, cfg.start, cfg.mirrored));
    for (int s = 0; s <= cfg.start; ++s)
        for (ConfigKind k : kAllConfigKinds)
            for (bool m : {false, true}) {
                if (s == cfg.start && (k > cfg.kind || (k == cfg.kind && m >= cfg.mirrored)))
                    continue;
                if (m && !kLetters.at(k).mirror)
                    continue;
                ASSERT_FALSE(oracle_match(g, k, s, m)) << "earlier match kind " << to_char(k) << " at " << s;
            }
}

} // namespace

TEST(Configuration, PentagonFanIsKindB)
{
    auto g = mop_from_diagonals(5, {{0, 2}, {0, 3}});
    auto cfg = find_configuration(g);
    EXPECT_EQ(cfg.kind, ConfigKind::b);
    EXPECT_EQ(cfg.start, 0);
    EXPECT_FALSE(cfg.mirrored);
    EXPECT_EQ(cfg.span, 5);
    EXPECT_EQ(cfg.at(Role::u), 0);
    EXPECT_EQ(cfg.at(Role::y), 4);
    EXPECT_EQ(cfg.witness_chords, (std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}}));
    EXPECT_TRUE(oracle_match(g, ConfigKind::b, 0, false));
}

TEST(Configuration, TooSmall)
{
    try {
        find_configuration(make_g_k(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::GraphTooSmall);
    }
}

TEST(Configuration, RolesAndSpans)
{
    for (ConfigKind k : kAllConfigKinds) {
        const auto& p = pattern(k);
        EXPECT_EQ(p.span, static_cast<int>(std::string(kLetters.at(k).roles).size()));
        EXPECT_EQ(p.mirrorable, kLetters.at(k).mirror);
    }
    EXPECT_THROW(Configuration{}.at(Role::t), Error);
}

TEST(Configuration, FanContainsAPattern)
{
    const auto g = make_g_k(4);
    check_first_hit(g);
}

TEST(Configuration, SelfSymmetricPatternsNeedNoMirror)
{
    for (int n = 5; n <= 9; ++n)
        for_each_mop(n, [&](const MopGraph& g) {
            for (ConfigKind k : {ConfigKind::c, ConfigKind::f, ConfigKind::h})
                for (int s = 0; s < n; ++s) {
                    const int last = s + pattern(k).span - 1;
                    ASSERT_EQ(oracle_match(g, k, s, false), oracle_match(g, k, last % n, true));
                }
        });
}

TEST(Configuration, ScannerMatchesOracleOnAllMops5To10)
{
    for (int n = 5; n <= 10; ++n)
        for_each_mop(n, [&](const MopGraph& g) { check_first_hit(g); });
}

TEST(Configuration, MatchRejectsOutOfRangeAndForbiddenMirror)
{
    auto g = make_h_k(3);
    EXPECT_FALSE(match_configuration(g, ConfigKind::c, 0, true));
    EXPECT_FALSE(match_configuration(g, ConfigKind::a, 9, false));
    EXPECT_FALSE(match_configuration(mop_from_diagonals(5, {{0, 2}, {0, 3}}), ConfigKind::f, 0, false));
}

TEST(Configuration, RandomMops)
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto g = random_mop(5 + static_cast<int>(seed % 56), seed);
        auto cfg = find_configuration(g);
        ASSERT_TRUE(oracle_match(g, cfg.kind, cfg.start, cfg.mirrored)) << seed;
    }
}
