#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stmop/families.hpp"
#include "stmop/mop.hpp"

using namespace stmop;

namespace {

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

} // namespace

TEST(VertexSet, AlgebraAndOrder)
{
    VertexSet a(70, {1, 5, 69});
    VertexSet b(70, {5, 6});
    EXPECT_EQ((a | b).members(), (std::vector<int>{1, 5, 6, 69}));
    EXPECT_EQ((a & b).members(), (std::vector<int>{5}));
    EXPECT_EQ((a - b).members(), (std::vector<int>{1, 69}));
    EXPECT_EQ(a.size(), 3);
    EXPECT_EQ(a.front(), 1);
    EXPECT_TRUE(VertexSet(70, {5}).is_subset_of(b));
    EXPECT_TRUE(lex_less(a, b));
    EXPECT_EQ(a.complement().size(), 67);
    EXPECT_THROW(a.insert(70), Error);
    EXPECT_THROW(a | VertexSet(3), Error);
}

TEST(Graph, EdgeCountIsHalfDegreeSum)
{
    Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {1, 0}});
    int sum = 0;
    for (int v = 0; v < g.size(); ++v)
        sum += g.degree(v);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_EQ(sum, 2 * g.edge_count());
    EXPECT_FALSE(g.is_connected());
    EXPECT_THROW(Graph(3, {{1, 1}}), Error);
    EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}

TEST(MopFromDiagonals, Triangle)
{
    auto g = mop_from_diagonals(3, {});
    EXPECT_EQ(g.graph().edge_count(), 3);
    for (auto [v, d] : degrees(g))
        EXPECT_EQ(d, 2) << v;
}

TEST(MopFromDiagonals, HexagonWithNineEdges)
{
    auto g = mop_from_diagonals(6, {{0, 2}, {0, 3}, {3, 5}});
    EXPECT_EQ(g.graph().edge_count(), 9);
    const auto& d = g.diagonals();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            EXPECT_FALSE(oracle::cross(d[i].first, d[i].second, d[j].first, d[j].second));
}

TEST(MopFromDiagonals, Errors)
{
    EXPECT_EQ(code_of([] { mop_from_diagonals(6, {{0, 2}, {1, 3}, {0, 3}}); }), Errc::CrossingDiagonals);
    EXPECT_EQ(code_of([] { mop_from_diagonals(6, {{0, 2}, {0, 3}}); }), Errc::WrongDiagonalCount);
    EXPECT_EQ(code_of([] { mop_from_diagonals(6, {{0, 2}, {2, 0}, {0, 3}}); }), Errc::DuplicateDiagonal);
    EXPECT_EQ(code_of([] { mop_from_diagonals(6, {{0, 1}, {0, 2}, {0, 3}}); }), Errc::InvalidDiagonal);
    EXPECT_EQ(code_of([] { mop_from_diagonals(6, {{0, 5}, {0, 2}, {0, 3}}); }), Errc::InvalidDiagonal);
    EXPECT_EQ(code_of([] { mop_from_diagonals(2, {}); }), Errc::InvalidArgument);
}

TEST(ChordsCross, AgreesWithProductOracle)
{
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = 0; c < 9; ++c)
                for (int d = c + 1; d < 9; ++d)
                    EXPECT_EQ(chords_cross(a, b, c, d), oracle::cross(a, b, c, d)) << a << b << c << d;
}

TEST(IsMaximalOuterplanar, Examples)
{
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto c3 = is_maximal_outerplanar(k3);
    ASSERT_TRUE(c3);
    EXPECT_EQ(c3.mop->size(), 3);

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto c4 = is_maximal_outerplanar(k4);
    EXPECT_FALSE(c4);
    EXPECT_NE(c4.violation.find("edge count"), std::string::npos);

    EXPECT_TRUE(is_maximal_outerplanar(make_h_k(4).vertex_graph()));
}

TEST(IsMaximalOuterplanar, RejectsTwoTreeOnAChord)
{
    // Three ears on the same edge 0-1: 2n-3 edges, peelable, but K2,3-shaped.
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
    auto cert = is_maximal_outerplanar(g);
    EXPECT_FALSE(cert);
}

TEST(IsMaximalOuterplanar, RecoversRelabelledMops)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 15;
        auto g = random_mop(n, trial);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (auto [u, v] : g.graph().edges())
            edges.emplace_back(perm[u], perm[v]);
        const Graph relabelled(n, edges);
        auto cert = is_maximal_outerplanar(relabelled);
        ASSERT_TRUE(cert) << cert.violation;
        EXPECT_EQ(cert.mop->vertex_graph(), relabelled);
        EXPECT_EQ(cert.mop->label(0), 0);
    }
}

TEST(RemoveConsecutive, FanWithoutBridgeFails)
{
    auto fan = mop_from_diagonals(6, {{0, 2}, {0, 3}, {0, 4}});
    EXPECT_EQ(code_of([&] { remove_consecutive(fan, {2, 3, 4}); }), Errc::NotAMopAfterDeletion);
}

TEST(RemoveConsecutive, EarTripleLeavesTriangle)
{
    // Locate pattern (a) by scanning every start and orientation, then delete v, w, x.
    auto g = mop_from_diagonals(6, {{1, 3}, {0, 3}, {0, 4}});
    bool found = false;
    for (int s = 0; s < 6 && !found; ++s)
        for (int step : {1, -1}) {
            if (!oracle::induces_pattern(g, "uvwxy", "vx,ux,uy", s, step))
                continue;
            auto at = [&](int i) { return ((s + step * i) % 6 + 6) % 6; };
            auto h = remove_consecutive(g, {at(1), at(2), at(3)});
            EXPECT_EQ(h.size(), 3);
            EXPECT_EQ(h.graph().edge_count(), 3);
            EXPECT_TRUE(is_maximal_outerplanar(h.graph()));
            found = true;
            break;
        }
    EXPECT_TRUE(found);
}

TEST(RemoveConsecutive, IdentityAndLabels)
{
    auto k3 = mop_from_diagonals(3, {});
    EXPECT_EQ(remove_consecutive(k3, std::span<const int>{}), k3);

    auto g = make_g_k(2); // fan 0..6
    auto h = remove_consecutive(g, {1, 2, 3});
    EXPECT_EQ(h.labels(), (std::vector<int>{0, 4, 5, 6}));
    EXPECT_EQ(h.position_of(5), 2);
    EXPECT_EQ(h.to_labels(VertexSet(4, {2, 3}), g.universe()).members(), (std::vector<int>{5, 6}));
}

TEST(Degrees, Families)
{
    auto g4 = make_g_k(4);
    auto deg = degrees(g4);
    EXPECT_EQ(deg[0].second, 12);
    int twos = 0, threes = 0;
    for (auto [v, d] : deg) {
        twos += d == 2;
        threes += d == 3;
    }
    EXPECT_EQ(twos, 2);
    EXPECT_EQ(threes, 10);

    auto h4 = make_h_k(4);
    std::vector<int> deg2;
    for (auto [v, d] : degrees(h4))
        if (d == 2)
            deg2.push_back(v);
    EXPECT_EQ(deg2, (std::vector<int>{1, 4, 7, 10})); // the b_i
}

TEST(MopInvariants, EdgeCountAndTwoDegreeTwoVerticesUpTo12)
{
    for (int n = 3; n <= 12; ++n)
        for_each_mop(n, [&](const MopGraph& g) {
            ASSERT_EQ(g.graph().edge_count(), 2 * n - 3);
            ASSERT_GE(degree_two_positions(g).size(), 2);
        });
}
