#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stmop/construct.hpp"
#include "stmop/domination.hpp"
#include "stmop/exact.hpp"
#include "stmop/families.hpp"

using namespace stmop;

namespace {

const Graph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});

constexpr std::array<std::pair<Kind, oracle::Kind>, 4> kKinds{{{Kind::dominating, oracle::Kind::dominating},
                                                               {Kind::total, oracle::Kind::total},
                                                               {Kind::two, oracle::Kind::two},
                                                               {Kind::secure_total, oracle::Kind::secure_total}}};

bool satisfies(Kind k, const VertexSet& s, const Graph& g)
{
    auto c = classify(s, g);
    switch (k) {
    case Kind::dominating: return c.dominating;
    case Kind::total: return c.total_dominating;
    case Kind::two: return c.two_dominating;
    case Kind::secure_total: return c.secure_total;
    }
    return false;
}

std::uint32_t degree_two_mask(const Graph& g)
{
    std::uint32_t m = 0;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == 2)
            m |= 1u << v;
    return m;
}

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::InvalidArgument;
}

void compare_with_oracle(const Graph& g, bool exclude)
{
    for (auto [kind, okind] : kKinds) {
        if ((kind == Kind::total || kind == Kind::secure_total) && g.has_isolated_vertex())
            continue;
        const auto expect = oracle::minimum(g, okind, exclude ? degree_two_mask(g) : 0);
        SolveOptions opt;
        opt.exclude_degree_2 = exclude;
        if (expect.value < 0) {
            EXPECT_EQ(code_of([&] { solve(g, kind, opt); }), Errc::Infeasible);
            continue;
        }
        const auto got = solve(g, kind, opt);
        ASSERT_EQ(got.value, expect.value) << to_string(kind);
        EXPECT_EQ(got.witness.members(), expect.sets.front()) << to_string(kind);
        EXPECT_TRUE(satisfies(kind, got.witness, g));
        std::vector<std::vector<int>> all;
        for (const auto& s : all_minimum_sets(g, kind, opt))
            all.push_back(s.members());
        EXPECT_EQ(all, expect.sets) << to_string(kind);
    }
}

} // namespace

TEST(Solve, TriangleSecureTotal)
{
    auto r = solve(kTriangle, Kind::secure_total);
    EXPECT_EQ(r.value, 2);
    EXPECT_EQ(r.witness.members(), (std::vector<int>{0, 1}));
    EXPECT_GT(r.explored, 0u);
}

TEST(Solve, ExtremalFamilies)
{
    for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(solve(make_h_k(k).graph(), Kind::secure_total).value, 2 * k) << k;
        EXPECT_EQ(solve(make_g_k(k).graph(), Kind::secure_total).value, k + 1) << k;
    }
}

TEST(Solve, DegreeTwoFreeBaseCasesFitTheBound)
{
    SolveOptions opt;
    opt.exclude_degree_2 = true;
    for (int n = 4; n <= 6; ++n)
        for_each_mop(n, [&](const MopGraph& g) {
            auto r = solve(g.graph(), Kind::secure_total, opt);
            EXPECT_LE(r.value, 2 * n / 3);
            EXPECT_FALSE(r.witness.intersects(degree_two_positions(g)));
            EXPECT_TRUE(classify(r.witness, g.graph()).secure_total);
        });
}

TEST(Solve, Errors)
{
    SolveOptions opt;
    opt.exclude_degree_2 = true;
    EXPECT_EQ(code_of([&] { solve(kTriangle, Kind::secure_total, opt); }), Errc::Infeasible);
    EXPECT_EQ(code_of([] { solve(Graph(3, {{0, 1}}), Kind::total); }), Errc::NoTotalDominatingSet);
    EXPECT_EQ(code_of([] { solve(Graph(4, {{0, 1}, {2, 3}}), Kind::secure_total); }), Errc::DisconnectedGraph);
    EXPECT_EQ(code_of([] { solve(Graph(17), Kind::dominating); }), Errc::SizeCapExceeded);
    EXPECT_EQ(code_of([] { all_minimum_sets(Graph(17), Kind::two); }), Errc::SizeCapExceeded);
    // Non-total kinds accept disconnected input.
    EXPECT_EQ(solve(Graph(4, {{0, 1}, {2, 3}}), Kind::dominating).value, 2);
    EXPECT_EQ(solve(Graph(2), Kind::two).value, 2);
}

TEST(AllMinimumSets, TriangleTotal)
{
    std::vector<std::vector<int>> got;
    for (const auto& s : all_minimum_sets(kTriangle, Kind::total))
        got.push_back(s.members());
    EXPECT_EQ(got, (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(AllMinimumSets, FirstUpperFamilyIsTriangle)
{
    EXPECT_EQ(all_minimum_sets(make_h_k(1).graph(), Kind::secure_total).size(), 3u);
}

TEST(AllMinimumSets, SmallestFan)
{
    // Hub 0 over the path 1-2-3: only {0,2} defends both path ends.
    const Graph g = make_g_k(1).graph();
    const auto expect = oracle::minimum(g, oracle::Kind::secure_total);
    ASSERT_EQ(expect.value, 2);
    ASSERT_EQ(expect.sets, (std::vector<std::vector<int>>{{0, 2}}));
    auto got = all_minimum_sets(g, Kind::secure_total);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got.front().members(), (std::vector<int>{0, 2}));
}

TEST(Solve, MatchesFullEnumerationOnMopsUpTo8)
{
    for (int n = 3; n <= 8; ++n)
        for_each_mop(n, [&](const MopGraph& g) {
            compare_with_oracle(g.graph(), false);
            compare_with_oracle(g.graph(), true);
        });
}

TEST(Solve, MatchesFullEnumerationOnRandomGraphsUpTo9)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 8;
        std::vector<Edge> e;
        for (int v = 1; v < n; ++v)
            e.emplace_back(static_cast<int>(rng() % v), v);
        for (int i = 0; i < n; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v)
                e.emplace_back(u, v);
        }
        compare_with_oracle(Graph(n, e), trial % 3 == 0);
    }
    // Non-outerplanar input must not be seeded with the outerplanar bound.
    std::vector<Edge> k6;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            k6.emplace_back(i, j);
    compare_with_oracle(Graph(6, k6), false);
}

TEST(Solve, SeededAndUnseededAgree)
{
    SolveOptions plain;
    plain.seed_outerplanar_bound = false;
    for (int n = 3; n <= 10; ++n)
        for_each_mop(n, [&](const MopGraph& g) {
            for (Kind k : {Kind::two, Kind::secure_total}) {
                auto a = solve(g.graph(), k);
                auto b = solve(g.graph(), k, plain);
                ASSERT_EQ(a.value, b.value);
                ASSERT_EQ(a.witness, b.witness);
            }
        });
}

TEST(Solve, BoundSandwichUpTo10)
{
    SolveOptions plain;
    plain.seed_outerplanar_bound = false;
    for (int n = 3; n <= 10; ++n)
        for_each_mop(n, [&](const MopGraph& g) {
            const int g2 = solve(g.graph(), Kind::two, plain).value;
            const int gst = solve(g.graph(), Kind::secure_total, plain).value;
            ASSERT_LE(ceil_n_plus_2_thirds(n), g2);
            ASSERT_LE(g2, gst);
            ASSERT_LE(gst, floor_two_thirds(n));
            for (const auto& s : all_minimum_sets(g.graph(), Kind::two, plain))
                ASSERT_LE(n - s.size(), 2 * s.size() - 2);
        });
}
