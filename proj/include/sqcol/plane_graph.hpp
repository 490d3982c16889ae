#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqcol/error.hpp"

namespace sqcol {

using Vertex = int;
using FaceId = int;

struct Dart {
    Vertex from = 0;
    Vertex to = 0;

    friend bool operator==(const Dart&, const Dart&) = default;
};

/// A face of the embedding as the closed walk of darts along its boundary.
/// The walk starts at the face's lowest-numbered dart.
struct Face {
    std::vector<Dart> boundary;

    int degree() const { return static_cast<int>(boundary.size()); }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        out.reserve(boundary.size());
        for (const Dart& d : boundary)
            out.push_back(d.from);
        return out;
    }
};

/// Simple graph with a combinatorial embedding. Each vertex stores its
/// neighbors in clockwise order; faces are traced with the rule that the
/// successor of dart (u -> v) is (v -> w), w being the neighbor that follows
/// u in the rotation at v.
///
/// Values are immutable once built. Edits (see the free functions below)
/// return new graphs whose faces are traced from scratch.
class PlaneGraph {
public:
    using Rotation = std::vector<Vertex>;

    PlaneGraph() = default;

    /// Validates the rotation system and traces its faces.
    static PlaneGraph build(std::vector<Rotation> rotations)
    {
        PlaneGraph g;
        g.rot_ = std::move(rotations);
        g.validate_and_index();
        return g;
    }

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return num_edges_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int num_darts() const { return 2 * num_edges_; }

    bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

    int degree(Vertex v) const
    {
        check_vertex(v);
        return static_cast<int>(rot_[v].size());
    }

    int max_degree() const { return max_deg_; }
    int min_degree() const { return min_deg_; }

    std::span<const Vertex> rotation(Vertex v) const
    {
        check_vertex(v);
        return rot_[v];
    }

    std::span<const Vertex> neighbors(Vertex v) const { return rotation(v); }

    const std::vector<Rotation>& rotations() const { return rot_; }

    /// Neighbor at a (cyclic) rotation index.
    Vertex neighbor_at(Vertex v, int index) const
    {
        const auto& r = rot_[v];
        const int d = static_cast<int>(r.size());
        return r[((index % d) + d) % d];
    }

    /// Index of u within rotation(v), or -1.
    int position(Vertex v, Vertex u) const
    {
        check_vertex(v);
        const auto& r = rot_[v];
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] == u)
                return static_cast<int>(i);
        return -1;
    }

    bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_.at(f); }

    /// Face containing the dart v -> rotation(v)[index]. At v this face
    /// occupies the corner between rotation(v)[index-1] and rotation(v)[index].
    FaceId face_of(Vertex v, int index) const
    {
        check_vertex(v);
        const int d = static_cast<int>(rot_[v].size());
        return dart_face_[offset_[v] + ((index % d) + d) % d];
    }

    FaceId face_of(Dart d) const
    {
        const int i = position(d.from, d.to);
        if (i < 0)
            throw Error(Errc::NoSuchEdge, "no dart " + std::to_string(d.from) + "->" + std::to_string(d.to));
        return face_of(d.from, i);
    }

    /// Faces around v in rotation order; entry i is face_of(v, i).
    std::vector<FaceId> faces_around(Vertex v) const
    {
        check_vertex(v);
        return {dart_face_.begin() + offset_[v], dart_face_.begin() + offset_[v] + degree(v)};
    }

    Dart next_in_face(Dart d) const
    {
        const int i = position(d.from, d.to);
        if (i < 0)
            throw Error(Errc::NoSuchEdge, "no dart " + std::to_string(d.from) + "->" + std::to_string(d.to));
        const int twin = twin_pos_[offset_[d.from] + i];
        return {d.to, neighbor_at(d.to, twin + 1)};
    }

    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) { return a.rot_ == b.rot_; }

private:
    void check_vertex(Vertex v) const
    {
        if (!has_vertex(v))
            throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in graph", v);
    }

    void validate_and_index()
    {
        const int n = num_vertices();
        offset_.assign(n + 1, 0);
        for (Vertex v = 0; v < n; ++v) {
            const auto& r = rot_[v];
            for (Vertex u : r) {
                if (u < 0 || u >= n)
                    throw Error(Errc::UnknownVertex,
                                "rotation of " + std::to_string(v) + " names unknown vertex " + std::to_string(u), u);
                if (u == v)
                    throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(v), v);
            }
            std::vector<Vertex> sorted = r;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw Error(Errc::DuplicateNeighbor, "repeated neighbor in rotation of " + std::to_string(v), v);
            offset_[v + 1] = offset_[v] + static_cast<int>(r.size());
        }
        const int darts = offset_[n];

        twin_pos_.assign(darts, -1);
        for (Vertex v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < rot_[v].size(); ++i) {
                const Vertex u = rot_[v][i];
                const int j = position(u, v);
                if (j < 0)
                    throw Error(Errc::AsymmetricAdjacency,
                                std::to_string(u) + " is in rotation of " + std::to_string(v) + " but not vice versa",
                                v);
                twin_pos_[offset_[v] + static_cast<int>(i)] = j;
            }
        }
        num_edges_ = darts / 2;

        max_deg_ = 0;
        min_deg_ = n == 0 ? 0 : static_cast<int>(rot_[0].size());
        for (const auto& r : rot_) {
            max_deg_ = std::max(max_deg_, static_cast<int>(r.size()));
            min_deg_ = std::min(min_deg_, static_cast<int>(r.size()));
        }

        trace_faces();
        check_euler();
    }

    void trace_faces()
    {
        const int n = num_vertices();
        dart_face_.assign(offset_[n], -1);
        faces_.clear();
        for (Vertex v = 0; v < n; ++v) {
            for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
                if (dart_face_[offset_[v] + i] >= 0)
                    continue;
                const FaceId id = static_cast<FaceId>(faces_.size());
                Face face;
                Vertex x = v;
                int xi = i;
                while (dart_face_[offset_[x] + xi] < 0) {
                    const int dart = offset_[x] + xi;
                    dart_face_[dart] = id;
                    const Vertex y = rot_[x][xi];
                    face.boundary.push_back({x, y});
                    const int back = twin_pos_[dart];
                    xi = (back + 1) % static_cast<int>(rot_[y].size());
                    x = y;
                }
                faces_.push_back(std::move(face));
            }
        }
    }

    // Per connected component: V - E + F = 2 whenever the component has an edge.
    void check_euler() const
    {
        const int n = num_vertices();
        std::vector<int> comp(n, -1);
        std::vector<int> cv, ce, cf;
        for (Vertex s = 0; s < n; ++s) {
            if (comp[s] >= 0)
                continue;
            const int c = static_cast<int>(cv.size());
            cv.push_back(0);
            ce.push_back(0);
            cf.push_back(0);
            std::vector<Vertex> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                const Vertex x = stack.back();
                stack.pop_back();
                ++cv[c];
                ce[c] += static_cast<int>(rot_[x].size());
                for (Vertex y : rot_[x])
                    if (comp[y] < 0) {
                        comp[y] = c;
                        stack.push_back(y);
                    }
            }
        }
        for (const Face& f : faces_)
            ++cf[comp[f.boundary.front().from]];
        for (std::size_t c = 0; c < cv.size(); ++c) {
            const int e = ce[c] / 2;
            if (e > 0 && cv[c] - e + cf[c] != 2)
                throw Error(Errc::EulerViolation,
                            "component " + std::to_string(c) + ": V - E + F = " + std::to_string(cv[c] - e + cf[c]));
        }
    }

    std::vector<Rotation> rot_;
    std::vector<int> offset_;
    std::vector<int> twin_pos_;
    std::vector<FaceId> dart_face_;
    std::vector<Face> faces_;
    int num_edges_ = 0;
    int max_deg_ = 0;
    int min_deg_ = 0;
};

// ---------------------------------------------------------------------------
// Queries

/// All u != v with dist(u, v) <= 2, sorted.
template <class Graph>
std::vector<Vertex> dist2_neighborhood(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.num_vertices())
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in graph", v);
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v)) {
        out.push_back(u);
        for (Vertex w : g.neighbors(u))
            if (w != v)
                out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// True when dist(u, w) <= 2 (u != w).
template <class Graph>
bool within_distance_two(const Graph& g, Vertex u, Vertex w)
{
    for (Vertex x : g.neighbors(u)) {
        if (x == w)
            return true;
        for (Vertex y : g.neighbors(x))
            if (y == w)
                return true;
    }
    return false;
}

inline std::vector<std::vector<Vertex>> connected_components(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const PlaneGraph& g) { return connected_components(g).size() <= 1; }

/// All cutvertices, ascending (iterative lowpoint DFS).
inline std::vector<Vertex> cutvertices(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int time = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        struct Frame {
            Vertex v;
            Vertex parent;
            int next;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = time++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto nb = g.neighbors(fr.v);
            if (fr.next < static_cast<int>(nb.size())) {
                const Vertex u = nb[fr.next++];
                if (disc[u] < 0) {
                    disc[u] = low[u] = time++;
                    if (fr.v == root)
                        ++root_children;
                    stack.push_back({u, fr.v, 0});
                } else if (u != fr.parent) {
                    low[fr.v] = std::min(low[fr.v], disc[u]);
                }
            } else {
                const Vertex v = fr.v;
                const Vertex p = fr.parent;
                stack.pop_back();
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p])
                        cut[p] = 1;
                }
            }
        }
        if (root_children > 1)
            cut[root] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v])
            out.push_back(v);
    return out;
}

/// Lowest-numbered cutvertex of a connected graph.
inline std::optional<Vertex> find_cutvertex(const PlaneGraph& g)
{
    if (!is_connected(g))
        throw Error(Errc::Disconnected, "find_cutvertex requires a connected graph");
    const auto cuts = cutvertices(g);
    if (cuts.empty())
        return std::nullopt;
    return cuts.front();
}

inline bool is_2connected(const PlaneGraph& g)
{
    return g.num_vertices() >= 3 && !find_cutvertex(g).has_value();
}

// ---------------------------------------------------------------------------
// Edits

/// Subgraph induced by `keep` (any order, no duplicates) with the inherited
/// rotation. Vertex i of the result is keep_sorted[i].
inline PlaneGraph induced_subgraph(const PlaneGraph& g, std::vector<Vertex> keep)
{
    std::sort(keep.begin(), keep.end());
    std::vector<int> id(g.num_vertices(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!g.has_vertex(keep[i]))
            throw Error(Errc::UnknownVertex, "vertex " + std::to_string(keep[i]) + " not in graph", keep[i]);
        id[keep[i]] = static_cast<int>(i);
    }
    std::vector<PlaneGraph::Rotation> rot(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex u : g.rotation(keep[i]))
            if (id[u] >= 0)
                rot[i].push_back(id[u]);
    return PlaneGraph::build(std::move(rot));
}

/// G - v. Vertices above v shift down by one; neighbors keep their cyclic order.
inline PlaneGraph delete_vertex(const PlaneGraph& g, Vertex v)
{
    if (!g.has_vertex(v))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in graph", v);
    std::vector<PlaneGraph::Rotation> rot;
    rot.reserve(g.num_vertices() - 1);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (x == v)
            continue;
        PlaneGraph::Rotation r;
        for (Vertex u : g.rotation(x))
            if (u != v)
                r.push_back(u > v ? u - 1 : u);
        rot.push_back(std::move(r));
    }
    return PlaneGraph::build(std::move(rot));
}

inline PlaneGraph delete_edge(const PlaneGraph& g, Vertex u, Vertex v)
{
    if (!g.has_vertex(u) || !g.has_vertex(v) || !g.adjacent(u, v))
        throw Error(Errc::NoSuchEdge, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    auto rot = g.rotations();
    std::erase(rot[u], v);
    std::erase(rot[v], u);
    return PlaneGraph::build(std::move(rot));
}

/// G + uw with w placed at index pos_u of rotation(u) and u at index pos_w of
/// rotation(w) (existing entries shift right). Both corners must belong to the
/// same face; a vertex of degree 0 is its own component and fits anywhere.
/// Returns G unchanged when uw is already an edge.
inline PlaneGraph insert_edge_at(const PlaneGraph& g, Vertex u, int pos_u, Vertex w, int pos_w)
{
    if (!g.has_vertex(u))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(u) + " not in graph", u);
    if (!g.has_vertex(w))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(w) + " not in graph", w);
    if (u == w)
        throw Error(Errc::SelfLoop, "cannot insert loop at " + std::to_string(u), u);
    if (g.adjacent(u, w))
        return g;
    const int du = g.degree(u);
    const int dw = g.degree(w);
    if (pos_u < 0 || pos_u > du || pos_w < 0 || pos_w > dw)
        throw Error(Errc::OutOfRange, "rotation index out of range");
    if (du > 0 && dw > 0 && g.face_of(u, pos_u) != g.face_of(w, pos_w))
        throw Error(Errc::NotSameFace,
                    "corners at " + std::to_string(u) + " and " + std::to_string(w) + " lie on different faces");
    auto rot = g.rotations();
    rot[u].insert(rot[u].begin() + pos_u, w);
    rot[w].insert(rot[w].begin() + pos_w, u);
    return PlaneGraph::build(std::move(rot));
}

/// Renames vertex v to perm[v], keeping every rotation's starting position.
inline PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm)
{
    const int n = g.num_vertices();
    std::vector<PlaneGraph::Rotation> rot(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.rotation(v))
            rot[perm[v]].push_back(perm[u]);
    return PlaneGraph::build(std::move(rot));
}

/// Builds a rotation system from consistently oriented face boundaries: each
/// face [.., a, v, b, ..] states that b follows a in the rotation at v.
inline PlaneGraph from_faces(int n, const std::vector<std::vector<Vertex>>& faces)
{
    std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(n);
    for (const auto& f : faces) {
        const int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i)
            succ.at(f[i]).push_back({f[(i + k - 1) % k], f[(i + 1) % k]});
    }
    std::vector<PlaneGraph::Rotation> rot(n);
    for (Vertex v = 0; v < n; ++v) {
        if (succ[v].empty())
            continue;
        Vertex cur = succ[v].front().first;
        for (std::size_t step = 0; step < succ[v].size(); ++step) {
            rot[v].push_back(cur);
            auto it = std::find_if(succ[v].begin(), succ[v].end(), [&](const auto& p) { return p.first == cur; });
            if (it == succ[v].end())
                throw Error(Errc::BadParameters, "face list is not consistently oriented at " + std::to_string(v), v);
            cur = it->second;
        }
        if (cur != rot[v].front())
            throw Error(Errc::BadParameters, "faces around " + std::to_string(v) + " do not close up", v);
    }
    return PlaneGraph::build(std::move(rot));
}

/// Dual of a 2-connected plane graph: one vertex per face, adjacent across
/// each edge.
inline PlaneGraph dual(const PlaneGraph& g)
{
    std::vector<PlaneGraph::Rotation> rot(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f)
        for (const Dart& d : g.face(f).boundary)
            rot[f].push_back(g.face_of(Dart{d.to, d.from}));
    return PlaneGraph::build(std::move(rot));
}

} // namespace sqcol
