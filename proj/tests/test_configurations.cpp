#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqcol/configurations.hpp"
#include "sqcol/corpus.hpp"

using namespace sqcol;

namespace {

int triangle_corners(const PlaneGraph& g, Vertex v)
{
    int t = 0;
    for (FaceId f : g.faces_around(v))
        t += g.face(f).degree() == 3;
    return t;
}

bool on_face(const PlaneGraph& g, FaceId f, Vertex v)
{
    const auto vs = g.face(f).vertices();
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

bool very_bad(const PlaneGraph& g, Vertex u) { return g.degree(u) == 5 && triangle_corners(g, u) == 5; }

// u is a 5-vertex with four 3-face corners whose other face is incident to v.
bool bad_for(const PlaneGraph& g, Vertex v, Vertex u)
{
    if (g.degree(u) != 5 || triangle_corners(g, u) != 4 || !g.adjacent(u, v))
        return false;
    for (FaceId f : g.faces_around(u))
        if (g.face(f).degree() != 3) {
            // v flanks that face at u when the edge uv lies on it.
            for (const Dart& d : g.face(f).boundary)
                if ((d.from == u && d.to == v) || (d.from == v && d.to == u))
                    return true;
        }
    return false;
}

// Re-derives each witness from degrees, adjacency and face sizes.
::testing::AssertionResult witness_ok(const PlaneGraph& g, const Configuration& c)
{
    const auto& w = c.vertices;
    auto fail = [&](const char* why) {
        return ::testing::AssertionFailure() << to_string(c.kind) << ": " << why;
    };
    auto deg = [&](Vertex x) { return g.degree(x); };
    switch (c.kind) {
    case ConfigKind::Cutvertex:
        if (connected_components(delete_vertex(g, w[0])).size() <= connected_components(g).size())
            return fail("not a cutvertex");
        break;
    case ConfigKind::LowDegreeVertex:
        if (deg(w[0]) > 2)
            return fail("degree");
        break;
    case ConfigKind::AdjacentThreeVertices:
        if (deg(w[0]) != 3 || deg(w[1]) != 3 || !g.adjacent(w[0], w[1]) || w[0] >= w[1])
            return fail("pair");
        break;
    case ConfigKind::ThreeVertexOnTriangle:
        if (deg(w[0]) != 3 || g.face(c.faces[0]).degree() != 3 || !g.adjacent(w[1], w[2]))
            return fail("triangle");
        for (Vertex x : w)
            if (!on_face(g, c.faces[0], x))
                return fail("face");
        break;
    case ConfigKind::ThreeVertexOnTwoQuadFaces:
        if (deg(w[0]) != 3 || c.faces.size() != 2 || c.faces[0] == c.faces[1])
            return fail("shape");
        for (FaceId f : c.faces)
            if (g.face(f).degree() != 4 || !on_face(g, f, w[0]) || !on_face(g, f, w[2]))
                return fail("4-faces");
        break;
    case ConfigKind::FourVertexTriangleLowPartner:
        if (deg(w[0]) != 4 || deg(w[1]) > 5 || g.face(c.faces[0]).degree() != 3)
            return fail("degrees");
        for (Vertex x : w)
            if (!on_face(g, c.faces[0], x))
                return fail("face");
        break;
    case ConfigKind::TwoTrianglesSharedEdge:
        if (deg(w[0]) != 4 || deg(w[1]) > 7 || c.faces.size() != 2)
            return fail("degrees");
        for (int i = 0; i < 2; ++i)
            if (g.face(c.faces[i]).degree() != 3 || !on_face(g, c.faces[i], w[0]) || !on_face(g, c.faces[i], w[1]) ||
                !on_face(g, c.faces[i], w[2 + i]))
                return fail("faces");
        break;
    case ConfigKind::FiveWheelLacksHighNeighbors:
        if (!very_bad(g, w[0]) || deg(w[1]) > 6 || deg(w[2]) > 6 || !g.adjacent(w[0], w[1]) ||
            !g.adjacent(w[0], w[2]))
            return fail("wheel");
        break;
    case ConfigKind::FiveVertexFourTrianglesBadBoundary:
        if (deg(w[0]) != 5 || triangle_corners(g, w[0]) != 4 || g.face(c.faces[0]).degree() < 4)
            return fail("shape");
        if (std::max(deg(w[1]), deg(w[2])) > 6 || std::min(deg(w[1]), deg(w[2])) > 5)
            return fail("boundary degrees");
        if (!bad_for(g, w[1], w[0]) || !bad_for(g, w[2], w[0]))
            return fail("flanks");
        break;
    case ConfigKind::AdjacentVeryBadPair:
        if (!very_bad(g, w[1]) || !very_bad(g, w[2]) || !g.adjacent(w[1], w[2]) || !g.adjacent(w[0], w[1]) ||
            !g.adjacent(w[0], w[2]))
            return fail("pair");
        break;
    case ConfigKind::VeryBadBadPairAtSmallVertex:
        if (deg(w[0]) > 8 || !very_bad(g, w[1]) || !bad_for(g, w[0], w[2]) || !g.adjacent(w[1], w[2]) ||
            !g.adjacent(w[0], w[1]))
            return fail("pair");
        break;
    case ConfigKind::BadBadPairAtSevenVertex:
        if (deg(w[0]) != 7 || !bad_for(g, w[0], w[1]) || !bad_for(g, w[0], w[2]) || !g.adjacent(w[1], w[2]))
            return fail("pair");
        break;
    }
    return ::testing::AssertionSuccess();
}

std::vector<PlaneGraph> sample_graphs()
{
    std::vector<PlaneGraph> out;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GeneratorSpec s;
        s.family = Family::RandomTriangulation;
        s.n = 12 + static_cast<int>(seed % 40);
        s.seed = seed;
        s.max_degree = seed % 2 ? 0 : 6 + static_cast<int>(seed % 4);
        s.flips = s.n * static_cast<int>(seed % 4);
        s.delete_fraction = (seed % 5) * 0.05;
        out.push_back(generate(s));
    }
    out.push_back(generate({.family = Family::RandomTriangulation, .n = 12, .seed = 182, .max_degree = 7, .flips = 36}));
    return out;
}

} // namespace

TEST(Configurations, TriangleHasLowDegreeVertices)
{
    const auto found = detect_all(fixture("triangle"));
    ASSERT_FALSE(found.empty());
    EXPECT_EQ(found.front().kind, ConfigKind::LowDegreeVertex);
    EXPECT_EQ(find_any(fixture("triangle"))->kind, ConfigKind::LowDegreeVertex);
}

TEST(Configurations, BowtieSplitsFirst)
{
    const auto c = find_any(fixture("bowtie"));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->kind, ConfigKind::Cutvertex);
    EXPECT_EQ(c->vertices, std::vector<Vertex>{0});
}

TEST(Configurations, CubeHasAdjacentThreeVertices)
{
    const auto g = platonic("cube");
    EXPECT_EQ(find_any(g)->kind, ConfigKind::AdjacentThreeVertices);
    EXPECT_EQ(detect_kind(g, ConfigKind::AdjacentThreeVertices).size(), 12u);
    EXPECT_EQ(detect_kind(g, ConfigKind::ThreeVertexOnTwoQuadFaces).size(), 24u);
}

TEST(Configurations, OctahedronHasFourVertexOnTriangle)
{
    const auto g = platonic("octahedron");
    EXPECT_EQ(find_any(g)->kind, ConfigKind::FourVertexTriangleLowPartner);
    EXPECT_FALSE(detect_kind(g, ConfigKind::TwoTrianglesSharedEdge).empty());
}

TEST(Configurations, IcosahedronIsAllVeryBad)
{
    const auto g = platonic("icosahedron");
    const auto gad = classify(g);
    for (Vertex v = 0; v < 12; ++v) {
        EXPECT_TRUE(gad.is_very_bad(v));
        ASSERT_EQ(gad.fans[v].size(), 1u);
        EXPECT_TRUE(gad.fans[v][0].cyclic);
        EXPECT_EQ(gad.fans[v][0].size(), 5);
    }
    EXPECT_EQ(find_any(g)->kind, ConfigKind::FiveWheelLacksHighNeighbors);
    EXPECT_EQ(detect_kind(g, ConfigKind::FiveWheelLacksHighNeighbors).size(), 12u);
    EXPECT_FALSE(detect_kind(g, ConfigKind::AdjacentVeryBadPair).empty());
}

TEST(Configurations, FansOfAWheel)
{
    const auto g = fixture("w7");
    const auto hub = fans_at(g, 0);
    ASSERT_EQ(hub.size(), 1u);
    EXPECT_TRUE(hub[0].cyclic);
    EXPECT_EQ(hub[0].size(), 7);
    const auto rim = fans_at(g, 3);
    ASSERT_EQ(rim.size(), 1u);
    EXPECT_FALSE(rim[0].cyclic);
    EXPECT_EQ(rim[0].size(), 2);
    EXPECT_EQ(rim[0].vertices.size(), 3u);
    EXPECT_EQ(rim[0].vertices[1], 0);
}

TEST(Configurations, WeirdFaceNeedsOneFourAndTwoHighVertices)
{
    // Triangular grid interior vertices have degree 6; corners of degree 2/3.
    const auto g = generate({.family = Family::TriangularGrid, .rows = 4, .cols = 4});
    const auto gad = classify(g);
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (g.face(f).degree() != 3)
            continue;
        int fours = 0, highs = 0;
        for (Vertex x : g.face(f).vertices()) {
            fours += g.degree(x) == 4;
            highs += g.degree(x) >= 6;
        }
        EXPECT_EQ(gad.weird[f] != 0, fours == 1 && highs == 2);
    }
}

TEST(Configurations, EveryWitnessChecksOut)
{
    std::map<ConfigKind, int> seen;
    for (const auto& g : sample_graphs())
        for (const auto& c : detect_all(g)) {
            EXPECT_TRUE(witness_ok(g, c));
            ++seen[c.kind];
        }
    for (ConfigKind k : kAllConfigKinds)
        EXPECT_GT(seen[k], 0) << to_string(k) << " never exercised";
}

TEST(Configurations, SimpleKindsMatchBruteForce)
{
    for (const auto& g : oracle::small_graph_suite()) {
        std::size_t low = 0, adj3 = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            low += g.degree(v) <= 2;
            for (Vertex u : g.neighbors(v))
                adj3 += v < u && g.degree(v) == 3 && g.degree(u) == 3;
        }
        EXPECT_EQ(detect_kind(g, ConfigKind::LowDegreeVertex).size(), low);
        EXPECT_EQ(detect_kind(g, ConfigKind::AdjacentThreeVertices).size(), adj3);
        EXPECT_EQ(detect_kind(g, ConfigKind::Cutvertex).size(), cutvertices(g).size());
    }
}

TEST(Configurations, FindAnyFollowsPriority)
{
    for (const auto& g : sample_graphs()) {
        const auto all = detect_all(g);
        const auto first = find_any(g);
        ASSERT_EQ(all.empty(), !first.has_value());
        if (first) {
            EXPECT_EQ(*first, all.front());
        }
        for (std::size_t i = 1; i < all.size(); ++i)
            EXPECT_LE(all[i - 1].kind, all[i].kind);
    }
}

TEST(Configurations, PresenceCheck)
{
    const auto g = platonic("cube");
    const auto c = detect_kind(g, ConfigKind::AdjacentThreeVertices).front();
    EXPECT_TRUE(is_present(g, c));
    EXPECT_FALSE(is_present(platonic("octahedron"), c));
}

TEST(Configurations, TwoConnectedGraphsOfMinDegreeThreeStillHaveOne)
{
    for (const auto& g : sample_graphs())
        if (is_2connected(g) && g.min_degree() >= 3) {
            EXPECT_TRUE(find_any(g).has_value());
        }
}

TEST(Configurations, WeirdFaceAtAllTriangleVertexImpliesSharedEdgePair)
{
    int hits = 0;
    auto graphs = sample_graphs();
    graphs.push_back(generate({.family = Family::TriangularGrid, .rows = 5, .cols = 5}));
    graphs.push_back(platonic("octahedron"));
    for (const auto& g : graphs) {
        const auto gad = classify(g);
        const auto pairs = detect_kind(g, ConfigKind::TwoTrianglesSharedEdge);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) < 6 || g.degree(v) > 7 || triangle_corners(g, v) != g.degree(v))
                continue;
            for (FaceId f : g.faces_around(v)) {
                if (!gad.weird[f])
                    continue;
                for (Vertex u : g.face(f).vertices()) {
                    if (g.degree(u) != 4)
                        continue;
                    ++hits;
                    const bool found = std::any_of(pairs.begin(), pairs.end(), [&](const Configuration& c) {
                        return c.vertices[0] == u && c.vertices[1] == v;
                    });
                    EXPECT_TRUE(found) << "4-vertex " << u << " next to " << v;
                }
            }
        }
    }
    std::cout << "weird faces at all-triangle 7- vertices: " << hits << "\n";
}
