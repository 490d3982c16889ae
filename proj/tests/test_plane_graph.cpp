#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqcol/corpus.hpp"
#include "sqcol/plane_graph.hpp"

using namespace sqcol;

namespace {

Errc build_error(std::vector<PlaneGraph::Rotation> rot)
{
    try {
        PlaneGraph::build(std::move(rot));
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "build accepted an invalid rotation system";
    return Errc::ParseError;
}

std::vector<int> face_degrees(const PlaneGraph& g)
{
    std::vector<int> out;
    for (const auto& f : g.faces())
        out.push_back(f.degree());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(PlaneGraph, TriangleHasTwoFaces)
{
    const auto g = fixture("triangle");
    EXPECT_EQ(g.num_vertices(), 3);
    EXPECT_EQ(g.num_edges(), 3);
    EXPECT_EQ(g.num_faces(), 2);
    EXPECT_EQ(face_degrees(g), (std::vector<int>{3, 3}));
}

TEST(PlaneGraph, PlatonicCounts)
{
    struct Row {
        const char* name;
        int v, e, f;
    };
    for (const Row& r : {Row{"tetrahedron", 4, 6, 4}, Row{"cube", 8, 12, 6}, Row{"octahedron", 6, 12, 8},
                         Row{"dodecahedron", 20, 30, 12}, Row{"icosahedron", 12, 30, 20}}) {
        const auto g = platonic(r.name);
        EXPECT_EQ(g.num_vertices(), r.v) << r.name;
        EXPECT_EQ(g.num_edges(), r.e) << r.name;
        EXPECT_EQ(g.num_faces(), r.f) << r.name;
    }
}

TEST(PlaneGraph, StarHasOneFaceOfDoubleLength)
{
    const auto g = generate({.family = Family::Star, .n = 5});
    EXPECT_EQ(g.num_faces(), 1);
    EXPECT_EQ(g.face(0).degree(), 10);
}

TEST(PlaneGraph, FacesAgreeWithDartWalkOracle)
{
    for (const auto& name : fixture_names()) {
        const auto g = fixture(name);
        EXPECT_EQ(face_degrees(g), oracle::face_lengths(oracle::rotations(g))) << name;
    }
    for (const auto& g : oracle::small_graph_suite())
        EXPECT_EQ(face_degrees(g), oracle::face_lengths(oracle::rotations(g)));
}

TEST(PlaneGraph, FaceOfCornerConvention)
{
    const auto g = fixture("w6");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            const auto& f = g.face(g.face_of(v, i));
            const Dart d{v, g.neighbor_at(v, i)};
            EXPECT_NE(std::find(f.boundary.begin(), f.boundary.end(), d), f.boundary.end());
            // The walk arriving at v comes from the previous neighbor.
            const Dart in{g.neighbor_at(v, i - 1), v};
            EXPECT_EQ(g.next_in_face(in), d);
        }
}

TEST(PlaneGraph, RejectsInvalidRotations)
{
    EXPECT_EQ(build_error({{1}, {}}), Errc::AsymmetricAdjacency);
    EXPECT_EQ(build_error({{1, 1}, {0, 0}}), Errc::DuplicateNeighbor);
    EXPECT_EQ(build_error({{0}}), Errc::SelfLoop);
    EXPECT_EQ(build_error({{5}, {0}}), Errc::UnknownVertex);
    // K4 with one rotation reversed embeds on the torus.
    EXPECT_EQ(build_error({{3, 2, 1}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), Errc::EulerViolation);
    // K5 has no plane embedding at all.
    EXPECT_EQ(build_error({{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}}),
              Errc::EulerViolation);
}

TEST(PlaneGraph, EmptyAndIsolatedVertices)
{
    const auto empty = PlaneGraph::build({});
    EXPECT_EQ(empty.num_vertices(), 0);
    EXPECT_EQ(empty.num_faces(), 0);
    const auto two = PlaneGraph::build({{}, {}});
    EXPECT_EQ(two.num_vertices(), 2);
    EXPECT_EQ(two.num_edges(), 0);
    EXPECT_EQ(connected_components(two).size(), 2u);
}

TEST(PlaneGraph, Dist2MatchesBfs)
{
    for (const auto& g : oracle::small_graph_suite()) {
        const auto m = oracle::dist2_matrix(oracle::adjacency(g));
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            std::vector<Vertex> expect;
            for (Vertex u = 0; u < g.num_vertices(); ++u)
                if (m[v][u])
                    expect.push_back(u);
            EXPECT_EQ(dist2_neighborhood(g, v), expect);
            for (Vertex u = 0; u < g.num_vertices(); ++u)
                if (u != v) {
                    EXPECT_EQ(within_distance_two(g, v, u), m[v][u] != 0);
                }
        }
    }
}

TEST(PlaneGraph, CutverticesMatchRemovalCheck)
{
    for (const auto& g : oracle::small_graph_suite()) {
        std::vector<Vertex> expect;
        const auto comps = connected_components(g).size();
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (connected_components(delete_vertex(g, v)).size() > comps)
                expect.push_back(v);
        EXPECT_EQ(cutvertices(g), expect);
    }
}

TEST(PlaneGraph, BowtieCenterIsTheCutvertex)
{
    const auto g = fixture("bowtie");
    EXPECT_EQ(cutvertices(g), std::vector<Vertex>{0});
    EXPECT_EQ(find_cutvertex(g), 0);
    EXPECT_FALSE(is_2connected(g));
    EXPECT_TRUE(is_2connected(fixture("k4")));
    EXPECT_THROW(find_cutvertex(PlaneGraph::build({{}, {}})), Error);
}

TEST(PlaneGraph, DeleteVertexShiftsIds)
{
    const auto g = fixture("w5");
    const auto h = delete_vertex(g, 0);
    EXPECT_EQ(h.num_vertices(), 5);
    EXPECT_EQ(h.num_edges(), 5);
    EXPECT_EQ(h.max_degree(), 2);
    EXPECT_EQ(h.num_faces(), 2);
    const auto k = delete_vertex(fixture("k4"), 1);
    EXPECT_EQ(k.num_edges(), 3);
    EXPECT_TRUE(k.adjacent(0, 1));
}

TEST(PlaneGraph, DeleteEdgeMergesFaces)
{
    const auto g = fixture("octahedron");
    const auto h = delete_edge(g, 0, 1);
    EXPECT_EQ(h.num_faces(), g.num_faces() - 1);
    EXPECT_EQ(face_degrees(h).back(), 4);
    EXPECT_THROW(delete_edge(g, 0, 5), Error);
}

TEST(PlaneGraph, InsertEdgeInsideAFace)
{
    const auto c = generate({.family = Family::Cycle, .n = 4});
    // 0 and 2 are opposite; the corner before index 1 at 0 and before 1 at 2
    // lie on the same face.
    const FaceId f = c.face_of(0, 1);
    int pos2 = -1;
    for (int i = 0; i <= 1; ++i)
        if (c.face_of(2, i) == f)
            pos2 = i;
    ASSERT_GE(pos2, 0);
    const auto h = insert_edge_at(c, 0, 1, 2, pos2);
    EXPECT_EQ(h.num_edges(), 5);
    EXPECT_EQ(h.num_faces(), 3);
    EXPECT_EQ(insert_edge_at(h, 0, 0, 2, 0), h);

    // Corners on the two different faces of the cycle.
    const int other = 1 - pos2;
    ASSERT_NE(c.face_of(2, other), f);
    try {
        insert_edge_at(c, 0, 1, 2, other);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSameFace);
    }
}

TEST(PlaneGraph, InducedSubgraphKeepsRotationOrder)
{
    const auto g = fixture("w8");
    const auto rim = induced_subgraph(g, {1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(rim.num_edges(), 8);
    EXPECT_EQ(rim.max_degree(), 2);
    const auto part = induced_subgraph(g, {0, 1, 2});
    EXPECT_EQ(part.num_edges(), 3);
}

TEST(PlaneGraph, RelabelPreservesStructure)
{
    const auto g = platonic("icosahedron");
    std::vector<Vertex> perm(12);
    for (int i = 0; i < 12; ++i)
        perm[i] = (i * 5) % 12;
    const auto h = relabel(g, perm);
    EXPECT_EQ(face_degrees(h), face_degrees(g));
    for (Vertex v = 0; v < 12; ++v)
        for (Vertex u : g.neighbors(v))
            EXPECT_TRUE(h.adjacent(perm[v], perm[u]));
}

TEST(PlaneGraph, DualSwapsCounts)
{
    const auto oct = platonic("octahedron");
    const auto cube = dual(oct);
    EXPECT_EQ(cube.num_vertices(), oct.num_faces());
    EXPECT_EQ(cube.num_faces(), oct.num_vertices());
    EXPECT_EQ(cube.max_degree(), 3);
    EXPECT_EQ(dual(cube).num_vertices(), 6);
}
