#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqcol/plane_graph.hpp"

namespace sqcol {

/// Forbidden structures of a minimal counterexample, in detection priority.
enum class ConfigKind {
    Cutvertex,
    LowDegreeVertex,
    AdjacentThreeVertices,
    ThreeVertexOnTriangle,
    ThreeVertexOnTwoQuadFaces,
    FourVertexTriangleLowPartner,
    TwoTrianglesSharedEdge,
    FiveWheelLacksHighNeighbors,
    FiveVertexFourTrianglesBadBoundary,
    AdjacentVeryBadPair,
    VeryBadBadPairAtSmallVertex,
    BadBadPairAtSevenVertex,
};

inline constexpr std::array kAllConfigKinds = {
    ConfigKind::Cutvertex,
    ConfigKind::LowDegreeVertex,
    ConfigKind::AdjacentThreeVertices,
    ConfigKind::ThreeVertexOnTriangle,
    ConfigKind::ThreeVertexOnTwoQuadFaces,
    ConfigKind::FourVertexTriangleLowPartner,
    ConfigKind::TwoTrianglesSharedEdge,
    ConfigKind::FiveWheelLacksHighNeighbors,
    ConfigKind::FiveVertexFourTrianglesBadBoundary,
    ConfigKind::AdjacentVeryBadPair,
    ConfigKind::VeryBadBadPairAtSmallVertex,
    ConfigKind::BadBadPairAtSevenVertex,
};

constexpr std::string_view to_string(ConfigKind k)
{
    switch (k) {
    case ConfigKind::Cutvertex: return "Cutvertex";
    case ConfigKind::LowDegreeVertex: return "LowDegreeVertex";
    case ConfigKind::AdjacentThreeVertices: return "AdjacentThreeVertices";
    case ConfigKind::ThreeVertexOnTriangle: return "ThreeVertexOnTriangle";
    case ConfigKind::ThreeVertexOnTwoQuadFaces: return "ThreeVertexOnTwoQuadFaces";
    case ConfigKind::FourVertexTriangleLowPartner: return "FourVertexTriangleLowPartner";
    case ConfigKind::TwoTrianglesSharedEdge: return "TwoTrianglesSharedEdge";
    case ConfigKind::FiveWheelLacksHighNeighbors: return "FiveWheelLacksHighNeighbors";
    case ConfigKind::FiveVertexFourTrianglesBadBoundary: return "FiveVertexFourTrianglesBadBoundary";
    case ConfigKind::AdjacentVeryBadPair: return "AdjacentVeryBadPair";
    case ConfigKind::VeryBadBadPairAtSmallVertex: return "VeryBadBadPairAtSmallVertex";
    case ConfigKind::BadBadPairAtSevenVertex: return "BadBadPairAtSevenVertex";
    }
    return "?";
}

/// A detected violation. Witness vertices are listed in the role order below
/// (only the vertices and faces the corresponding statement names):
///
///   Cutvertex, LowDegreeVertex          {v}
///   AdjacentThreeVertices               {v, u}, v < u
///   ThreeVertexOnTriangle               {v, v1, v2} + the 3-face [v, v1, v2]
///   ThreeVertexOnTwoQuadFaces           {v, v1, v2, v3} + the 4-faces sharing edge v v2
///   FourVertexTriangleLowPartner        {v, v1, v2} + the 3-face; deg(v1) <= 5
///   TwoTrianglesSharedEdge              {u, v, v1, v2} + faces [v, v1, u], [v, v2, u]
///   FiveWheelLacksHighNeighbors         {v, v1, v2}; v1, v2 are 6- neighbors
///   FiveVertexFourTrianglesBadBoundary  {v, v1, v2} + the 4+-face
///   AdjacentVeryBadPair                 {v, v1, v2}
///   VeryBadBadPairAtSmallVertex         {v, v1 (very bad), v2 (bad)}
///   BadBadPairAtSevenVertex             {v, v1, v2}
struct Configuration {
    ConfigKind kind{};
    std::vector<Vertex> vertices;
    std::vector<FaceId> faces;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Maximal run of consecutive 3-faces around a vertex.
struct Fan {
    Vertex center = 0;
    /// Index (into faces_around(center)) of the first face.
    int first = 0;
    /// True when every face at the center is a 3-face; such a fan has no
    /// outer faces or vertices.
    bool cyclic = false;
    std::vector<FaceId> faces;
    /// Neighbors of the center touched by the fan, in rotation order:
    /// size() + 1 of them, or size() for a cyclic fan.
    std::vector<Vertex> vertices;

    int size() const { return static_cast<int>(faces.size()); }
    std::array<FaceId, 2> outer_faces() const { return {faces.front(), faces.back()}; }
    std::array<Vertex, 2> outer_vertices() const { return {vertices.front(), vertices.back()}; }
};

/// Per-graph structural data shared by the detectors and the discharging rules.
struct Gadgets {
    std::vector<std::vector<Fan>> fans;
    /// Number of 3-face corners at each vertex.
    std::vector<int> triangles_at;
    /// u is very bad (for any neighbor): deg 5 and five 3-face corners.
    std::vector<char> very_bad;
    /// For a 5-vertex with four 3-face corners and one 4+-face corner: the
    /// two neighbors flanking that face; it is a bad neighbor of exactly them.
    std::vector<std::array<Vertex, 2>> bad_for;
    std::vector<FaceId> big_face;
    std::vector<char> weird;

    bool is_very_bad(Vertex u) const { return very_bad[u] != 0; }
    bool is_bad(Vertex v, Vertex u) const { return bad_for[u][0] == v || bad_for[u][1] == v; }
};

inline bool is_triangle(const PlaneGraph& g, FaceId f) { return g.face(f).degree() == 3; }

inline std::vector<Fan> fans_at(const PlaneGraph& g, Vertex v)
{
    const auto around = g.faces_around(v);
    const int d = static_cast<int>(around.size());
    std::vector<Fan> out;
    std::vector<char> tri(d);
    int count = 0;
    for (int i = 0; i < d; ++i)
        count += tri[i] = is_triangle(g, around[i]);
    if (d == 0 || count == 0)
        return out;
    if (count == d) {
        Fan fan{v, 0, true, {}, {}};
        for (int i = 0; i < d; ++i) {
            fan.faces.push_back(around[i]);
            fan.vertices.push_back(g.neighbor_at(v, i));
        }
        out.push_back(std::move(fan));
        return out;
    }
    for (int i = 0; i < d; ++i) {
        if (!tri[i] || tri[(i + d - 1) % d])
            continue;
        Fan fan{v, i, false, {}, {g.neighbor_at(v, i - 1)}};
        for (int j = i; tri[j % d]; ++j) {
            fan.faces.push_back(around[j % d]);
            fan.vertices.push_back(g.neighbor_at(v, j));
        }
        out.push_back(std::move(fan));
    }
    return out;
}

inline Gadgets classify(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    Gadgets gad;
    gad.fans.resize(n);
    gad.triangles_at.assign(n, 0);
    gad.very_bad.assign(n, 0);
    gad.bad_for.assign(n, {-1, -1});
    gad.big_face.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        gad.fans[v] = fans_at(g, v);
        const auto around = g.faces_around(v);
        int big = -1;
        for (int i = 0; i < static_cast<int>(around.size()); ++i) {
            if (is_triangle(g, around[i]))
                ++gad.triangles_at[v];
            else
                big = i;
        }
        if (g.degree(v) == 5 && gad.triangles_at[v] == 5)
            gad.very_bad[v] = 1;
        if (g.degree(v) == 5 && gad.triangles_at[v] == 4) {
            gad.bad_for[v] = {g.neighbor_at(v, big - 1), g.neighbor_at(v, big)};
            gad.big_face[v] = around[big];
        }
    }
    gad.weird.assign(g.num_faces(), 0);
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (!is_triangle(g, f))
            continue;
        int fours = 0, highs = 0;
        for (Vertex x : g.face(f).vertices()) {
            fours += g.degree(x) == 4;
            highs += g.degree(x) >= 6;
        }
        gad.weird[f] = fours == 1 && highs == 2;
    }
    return gad;
}

namespace detail {

class ConfigScanner {
public:
    ConfigScanner(const PlaneGraph& g, std::size_t limit) : g_(g), limit_(limit) {}

    std::vector<Configuration> run(std::optional<ConfigKind> only = std::nullopt)
    {
        for (ConfigKind k : kAllConfigKinds) {
            if (full())
                break;
            if (!only || *only == k)
                scan(k);
        }
        return std::move(out_);
    }

private:
    bool full() const { return out_.size() >= limit_; }

    void emit(ConfigKind k, std::vector<Vertex> vs, std::vector<FaceId> fs = {})
    {
        if (!full())
            out_.push_back({k, std::move(vs), std::move(fs)});
    }

    const Gadgets& gadgets()
    {
        if (!gad_)
            gad_ = classify(g_);
        return *gad_;
    }

    int deg(Vertex v) const { return g_.degree(v); }
    bool tri(Vertex v, int i) const { return is_triangle(g_, g_.face_of(v, i)); }

    void scan(ConfigKind k)
    {
        const int n = g_.num_vertices();
        switch (k) {
        case ConfigKind::Cutvertex:
            for (Vertex v : cutvertices(g_))
                emit(k, {v});
            break;
        case ConfigKind::LowDegreeVertex:
            for (Vertex v = 0; v < n && !full(); ++v)
                if (deg(v) <= 2)
                    emit(k, {v});
            break;
        case ConfigKind::AdjacentThreeVertices:
            for (Vertex v = 0; v < n && !full(); ++v)
                if (deg(v) == 3)
                    for (Vertex u : g_.neighbors(v))
                        if (u > v && deg(u) == 3)
                            emit(k, {v, u});
            break;
        case ConfigKind::ThreeVertexOnTriangle:
            for (Vertex v = 0; v < n && !full(); ++v)
                if (deg(v) == 3)
                    for (int i = 0; i < 3; ++i)
                        if (tri(v, i))
                            emit(k, {v, g_.neighbor_at(v, i - 1), g_.neighbor_at(v, i)}, {g_.face_of(v, i)});
            break;
        case ConfigKind::ThreeVertexOnTwoQuadFaces:
            for (Vertex v = 0; v < n && !full(); ++v) {
                if (deg(v) != 3)
                    continue;
                for (int i = 0; i < 3; ++i) {
                    const FaceId a = g_.face_of(v, i), b = g_.face_of(v, i + 1);
                    if (a != b && g_.face(a).degree() == 4 && g_.face(b).degree() == 4)
                        emit(k, {v, g_.neighbor_at(v, i - 1), g_.neighbor_at(v, i), g_.neighbor_at(v, i + 1)}, {a, b});
                }
            }
            break;
        case ConfigKind::FourVertexTriangleLowPartner:
            for (Vertex v = 0; v < n && !full(); ++v) {
                if (deg(v) != 4)
                    continue;
                for (int i = 0; i < 4; ++i) {
                    if (!tri(v, i))
                        continue;
                    const Vertex a = g_.neighbor_at(v, i - 1), b = g_.neighbor_at(v, i);
                    if (deg(a) <= 5)
                        emit(k, {v, a, b}, {g_.face_of(v, i)});
                    else if (deg(b) <= 5)
                        emit(k, {v, b, a}, {g_.face_of(v, i)});
                }
            }
            break;
        case ConfigKind::TwoTrianglesSharedEdge:
            for (Vertex u = 0; u < n && !full(); ++u) {
                if (deg(u) != 4)
                    continue;
                for (int i = 0; i < 4; ++i) {
                    const Vertex v = g_.neighbor_at(u, i);
                    if (deg(v) <= 7 && tri(u, i) && tri(u, i + 1))
                        emit(k, {u, v, g_.neighbor_at(u, i - 1), g_.neighbor_at(u, i + 1)},
                             {g_.face_of(u, i), g_.face_of(u, i + 1)});
                }
            }
            break;
        case ConfigKind::FiveWheelLacksHighNeighbors: {
            const auto& gad = gadgets();
            for (Vertex v = 0; v < n && !full(); ++v) {
                if (!gad.is_very_bad(v))
                    continue;
                std::vector<Vertex> low;
                for (Vertex u : g_.neighbors(v))
                    if (deg(u) <= 6)
                        low.push_back(u);
                if (low.size() >= 2)
                    emit(k, {v, low[0], low[1]});
            }
            break;
        }
        case ConfigKind::FiveVertexFourTrianglesBadBoundary: {
            const auto& gad = gadgets();
            for (Vertex v = 0; v < n && !full(); ++v) {
                if (gad.big_face[v] < 0)
                    continue;
                const auto [a, b] = gad.bad_for[v];
                const int hi = std::max(deg(a), deg(b)), lo = std::min(deg(a), deg(b));
                if (hi <= 6 && lo <= 5)
                    emit(k, {v, a, b}, {gad.big_face[v]});
            }
            break;
        }
        case ConfigKind::AdjacentVeryBadPair:
        case ConfigKind::VeryBadBadPairAtSmallVertex:
        case ConfigKind::BadBadPairAtSevenVertex: {
            const auto& gad = gadgets();
            for (Vertex v = 0; v < n && !full(); ++v) {
                if (k == ConfigKind::VeryBadBadPairAtSmallVertex && deg(v) > 8)
                    continue;
                if (k == ConfigKind::BadBadPairAtSevenVertex && deg(v) != 7)
                    continue;
                const auto nb = g_.neighbors(v);
                for (std::size_t i = 0; i < nb.size(); ++i) {
                    for (std::size_t j = 0; j < nb.size(); ++j) {
                        if (i == j)
                            continue;
                        const Vertex a = nb[i], b = nb[j];
                        bool match = false;
                        if (k == ConfigKind::AdjacentVeryBadPair)
                            match = i < j && gad.is_very_bad(a) && gad.is_very_bad(b);
                        else if (k == ConfigKind::VeryBadBadPairAtSmallVertex)
                            match = gad.is_very_bad(a) && gad.is_bad(v, b);
                        else
                            match = i < j && gad.is_bad(v, a) && gad.is_bad(v, b);
                        if (match && g_.adjacent(a, b))
                            emit(k, {v, a, b});
                    }
                }
            }
            break;
        }
        }
    }

    const PlaneGraph& g_;
    std::size_t limit_;
    std::optional<Gadgets> gad_;
    std::vector<Configuration> out_;
};

} // namespace detail

/// Every violation present in G, grouped by kind in priority order.
inline std::vector<Configuration> detect_all(const PlaneGraph& g)
{
    return detail::ConfigScanner(g, std::numeric_limits<std::size_t>::max()).run();
}

/// Every violation of one kind.
inline std::vector<Configuration> detect_kind(const PlaneGraph& g, ConfigKind kind)
{
    return detail::ConfigScanner(g, std::numeric_limits<std::size_t>::max()).run(kind);
}

/// The first violation in priority order, if any.
inline std::optional<Configuration> find_any(const PlaneGraph& g)
{
    auto found = detail::ConfigScanner(g, 1).run();
    if (found.empty())
        return std::nullopt;
    return std::move(found.front());
}

/// Whether `c` still describes a violation present in G.
inline bool is_present(const PlaneGraph& g, const Configuration& c)
{
    for (const auto& other : detect_kind(g, c.kind))
        if (other == c)
            return true;
    return false;
}

} // namespace sqcol
