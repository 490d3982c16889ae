#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sqcol/plane_graph.hpp"

namespace sqcol {

enum class Family {
    Cycle,
    Path,
    Star,
    Wheel,
    Grid,
    TriangularGrid,
    StackedTriangulation,
    RandomTriangulation,
    Platonic,
};

inline constexpr std::array kAllFamilies = {
    Family::Cycle,          Family::Path,          Family::Star,
    Family::Wheel,          Family::Grid,          Family::TriangularGrid,
    Family::StackedTriangulation, Family::RandomTriangulation, Family::Platonic,
};

constexpr std::string_view to_string(Family f)
{
    switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::Wheel: return "wheel";
    case Family::Grid: return "grid";
    case Family::TriangularGrid: return "triangular_grid";
    case Family::StackedTriangulation: return "stacked_triangulation";
    case Family::RandomTriangulation: return "random_triangulation";
    case Family::Platonic: return "platonic";
    }
    return "?";
}

inline std::optional<Family> family_from_string(std::string_view s)
{
    for (Family f : kAllFamilies)
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

/// Parameters by family:
///   cycle n>=3, path n>=1, star n=leaves>=0, wheel n=rim>=3
///   grid / triangular_grid rows, cols >= 2
///   stacked_triangulation n>=3, seed
///   random_triangulation n>=3, seed, and optionally
///     max_degree   cap on degrees during insertion and flips (0: none)
///     flips        random edge flips after insertion
///     delete_fraction  share of non-spanning-tree edges removed afterwards
///     min_delta    resample (seed, seed+1, ...) until the maximum degree reaches it
///   platonic name in {tetrahedron, cube, octahedron, dodecahedron, icosahedron}
struct GeneratorSpec {
    Family family = Family::Cycle;
    int n = 0;
    int rows = 0;
    int cols = 0;
    std::string name;
    std::uint64_t seed = 0;
    int max_degree = 0;
    int flips = 0;
    double delete_fraction = 0.0;
    int min_delta = 0;
};

namespace detail {

[[noreturn]] inline void bad_spec(const std::string& what) { throw Error(Errc::BadParameters, what); }

inline PlaneGraph make_cycle(int n)
{
    if (n < 3)
        bad_spec("cycle needs n >= 3");
    std::vector<PlaneGraph::Rotation> rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return PlaneGraph::build(std::move(rot));
}

inline PlaneGraph make_path(int n)
{
    if (n < 1)
        bad_spec("path needs n >= 1");
    std::vector<PlaneGraph::Rotation> rot(n);
    for (int i = 0; i + 1 < n; ++i) {
        rot[i].push_back(i + 1);
        rot[i + 1].push_back(i);
    }
    return PlaneGraph::build(std::move(rot));
}

inline PlaneGraph make_star(int leaves)
{
    if (leaves < 0)
        bad_spec("star needs a nonnegative number of leaves");
    std::vector<PlaneGraph::Rotation> rot(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        rot[0].push_back(i);
        rot[i].push_back(0);
    }
    return PlaneGraph::build(std::move(rot));
}

inline PlaneGraph make_wheel(int rim)
{
    if (rim < 3)
        bad_spec("wheel needs a rim of at least 3");
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> outer;
    for (int i = 1; i <= rim; ++i) {
        faces.push_back({0, i, i % rim + 1});
        outer.push_back(rim + 1 - i);
    }
    faces.push_back(outer);
    return from_faces(rim + 1, faces);
}

inline PlaneGraph make_grid(int rows, int cols, bool diagonals)
{
    if (rows < 2 || cols < 2)
        bad_spec("grid needs rows, cols >= 2");
    auto p = [cols](int i, int j) { return i * cols + j; };
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) {
            if (diagonals) {
                faces.push_back({p(i, j), p(i, j + 1), p(i + 1, j + 1)});
                faces.push_back({p(i, j), p(i + 1, j + 1), p(i + 1, j)});
            } else {
                faces.push_back({p(i, j), p(i, j + 1), p(i + 1, j + 1), p(i + 1, j)});
            }
        }
    std::vector<Vertex> outer;
    for (int i = 0; i < rows; ++i)
        outer.push_back(p(i, 0));
    for (int j = 1; j < cols; ++j)
        outer.push_back(p(rows - 1, j));
    for (int i = rows - 2; i >= 0; --i)
        outer.push_back(p(i, cols - 1));
    for (int j = cols - 2; j >= 1; --j)
        outer.push_back(p(0, j));
    faces.push_back(outer);
    return from_faces(rows * cols, faces);
}

inline PlaneGraph make_tetrahedron() { return from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

inline PlaneGraph make_octahedron()
{
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 4; ++i) {
        const int a = 1 + i, b = 1 + (i + 1) % 4;
        faces.push_back({0, a, b});
        faces.push_back({5, b, a});
    }
    return from_faces(6, faces);
}

inline PlaneGraph make_icosahedron()
{
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 5; ++i) {
        const int j = (i + 1) % 5;
        const int ui = 1 + i, uj = 1 + j, li = 6 + i, lj = 6 + j;
        faces.push_back({0, ui, uj});
        faces.push_back({ui, li, uj});
        faces.push_back({uj, li, lj});
        faces.push_back({11, lj, li});
    }
    return from_faces(12, faces);
}

// Plane graph grown by face insertion, with rotations kept editable. Without
// a degree cap every face stays a triangle.
class Triangulator {
public:
    explicit Triangulator(std::uint64_t seed) : rng_(seed)
    {
        rot_ = {{1, 2}, {2, 0}, {0, 1}};
        faces_ = {{0, 1, 2}, {0, 2, 1}};
    }

    int size() const { return static_cast<int>(rot_.size()); }
    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }

    /// Adds a vertex inside a uniformly chosen face, joined to the face's
    /// vertices. With a cap (0: none) only vertices below it are joined, at
    /// most min(3, cap - 1) of them, so the new vertex stays below the cap and
    /// insertion never runs out of room.
    void insert(int cap)
    {
        std::optional<std::size_t> pick;
        std::vector<int> slots;
        for (int attempt = 0; attempt < 64 && !pick; ++attempt) {
            const std::size_t i = uniform(faces_.size());
            slots = eligible(faces_[i], cap);
            if (!slots.empty())
                pick = i;
        }
        for (std::size_t i = 0; i < faces_.size() && !pick; ++i) {
            slots = eligible(faces_[i], cap);
            if (!slots.empty())
                pick = i;
        }
        if (!pick)
            bad_spec("degree cap " + std::to_string(cap) + " leaves no face to insert into");
        const std::size_t limit = cap > 0 ? static_cast<std::size_t>(std::min(3, cap - 1)) : 3;
        if (slots.size() > limit) {
            std::shuffle(slots.begin(), slots.end(), rng_);
            slots.resize(limit);
            std::sort(slots.begin(), slots.end());
        }
        attach(*pick, slots);
    }

    /// Flips a random edge uv (shared by triangles u v a and v u b) to ab
    /// when that keeps the graph simple, degrees at least 3 and below `cap`.
    bool try_flip(int cap)
    {
        const Vertex u = static_cast<Vertex>(uniform(rot_.size()));
        const Vertex v = rot_[u][uniform(rot_[u].size())];
        const Vertex a = after(v, u);
        const Vertex b = after(u, v);
        if (after(a, v) != u || after(b, u) != v)
            return false;
        if (a == b || degree(u) <= 3 || degree(v) <= 3 || adjacent(a, b))
            return false;
        if (cap > 0 && (degree(a) >= cap || degree(b) >= cap))
            return false;
        erase(u, v);
        erase(v, u);
        put_after(a, v, b);
        put_after(b, u, a);
        return true;
    }

    std::vector<PlaneGraph::Rotation> rotations() const { return rot_; }

    std::size_t uniform(std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng_); }
    std::mt19937_64& rng() { return rng_; }

private:
    // Boundary positions of distinct vertices below the cap.
    std::vector<int> eligible(const std::vector<Vertex>& face, int cap) const
    {
        std::vector<int> out;
        std::vector<Vertex> seen;
        for (int i = 0; i < static_cast<int>(face.size()); ++i) {
            const Vertex x = face[i];
            if ((cap > 0 && degree(x) >= cap) || std::find(seen.begin(), seen.end(), x) != seen.end())
                continue;
            seen.push_back(x);
            out.push_back(i);
        }
        return out;
    }

    // New vertex x inside face `index`, joined to the boundary occurrences at
    // `slots` (ascending). The face splits into one face per consecutive pair
    // of slots; a single slot leaves x pendant.
    void attach(std::size_t index, const std::vector<int>& slots)
    {
        const std::vector<Vertex> face = faces_[index];
        const int k = static_cast<int>(face.size());
        const Vertex x = size();
        rot_.emplace_back();
        // Walk ... p -> f -> q ...: q follows p at f, x goes in between.
        for (int i : slots)
            put_after(face[i], face[(i + k - 1) % k], x);
        for (auto it = slots.rbegin(); it != slots.rend(); ++it)
            rot_[x].push_back(face[*it]);

        std::vector<std::vector<Vertex>> parts;
        const int s = static_cast<int>(slots.size());
        if (s == 1) {
            std::vector<Vertex> walk;
            for (int j = 0; j < k; ++j) {
                walk.push_back(face[(slots[0] + j) % k]);
            }
            walk.push_back(face[slots[0]]);
            walk.push_back(x);
            parts.push_back(std::move(walk));
        } else {
            for (int t = 0; t < s; ++t) {
                const int from = slots[t], to = slots[(t + 1) % s];
                std::vector<Vertex> walk;
                for (int j = from;; j = (j + 1) % k) {
                    walk.push_back(face[j]);
                    if (j == to)
                        break;
                }
                walk.push_back(x);
                parts.push_back(std::move(walk));
            }
        }
        faces_[index] = std::move(parts.front());
        for (std::size_t t = 1; t < parts.size(); ++t)
            faces_.push_back(std::move(parts[t]));
    }

    Vertex after(Vertex at, Vertex x) const
    {
        const auto& r = rot_[at];
        const auto it = std::find(r.begin(), r.end(), x);
        return std::next(it) == r.end() ? r.front() : *std::next(it);
    }

    void put_after(Vertex at, Vertex x, Vertex y)
    {
        auto& r = rot_[at];
        if (r.empty()) {
            r.push_back(y);
            return;
        }
        r.insert(std::next(std::find(r.begin(), r.end(), x)), y);
    }

    void erase(Vertex at, Vertex x)
    {
        auto& r = rot_[at];
        r.erase(std::find(r.begin(), r.end(), x));
    }

    bool adjacent(Vertex x, Vertex y) const
    {
        return std::find(rot_[x].begin(), rot_[x].end(), y) != rot_[x].end();
    }

    std::mt19937_64 rng_;
    std::vector<PlaneGraph::Rotation> rot_;
    std::vector<std::vector<Vertex>> faces_;
};

// Removes a random share of the edges outside a random spanning tree, so the
// graph stays connected.
inline void thin_out(std::vector<PlaneGraph::Rotation>& rot, double fraction, Triangulator& t)
{
    const int n = static_cast<int>(rot.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : rot[u])
            if (u < v)
                edges.push_back({u, v});
    std::shuffle(edges.begin(), edges.end(), t.rng());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<Vertex, Vertex>> spare;
    for (const auto& [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru != rv)
            parent[ru] = rv;
        else
            spare.push_back({u, v});
    }
    const auto drop = static_cast<std::size_t>(fraction * static_cast<double>(spare.size()));
    for (std::size_t i = 0; i < drop; ++i) {
        const auto [u, v] = spare[i];
        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
        rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
    }
}

inline PlaneGraph make_triangulation(const GeneratorSpec& s, std::uint64_t seed, bool extras)
{
    Triangulator t(seed);
    const int cap = extras ? s.max_degree : 0;
    while (t.size() < s.n)
        t.insert(cap);
    if (extras) {
        for (int i = 0; i < s.flips; ++i)
            t.try_flip(cap);
    }
    auto rot = t.rotations();
    if (extras && s.delete_fraction > 0)
        thin_out(rot, s.delete_fraction, t);
    return PlaneGraph::build(std::move(rot));
}

} // namespace detail

inline PlaneGraph platonic(std::string_view name)
{
    if (name == "tetrahedron")
        return detail::make_tetrahedron();
    if (name == "octahedron")
        return detail::make_octahedron();
    if (name == "cube")
        return dual(detail::make_octahedron());
    if (name == "icosahedron")
        return detail::make_icosahedron();
    if (name == "dodecahedron")
        return dual(detail::make_icosahedron());
    detail::bad_spec("unknown platonic solid '" + std::string(name) + "'");
}

inline PlaneGraph generate(const GeneratorSpec& s)
{
    switch (s.family) {
    case Family::Cycle: return detail::make_cycle(s.n);
    case Family::Path: return detail::make_path(s.n);
    case Family::Star: return detail::make_star(s.n);
    case Family::Wheel: return detail::make_wheel(s.n);
    case Family::Grid: return detail::make_grid(s.rows, s.cols, false);
    case Family::TriangularGrid: return detail::make_grid(s.rows, s.cols, true);
    case Family::StackedTriangulation:
        if (s.n < 3)
            detail::bad_spec("triangulation needs n >= 3");
        return detail::make_triangulation(s, s.seed, false);
    case Family::RandomTriangulation: {
        if (s.n < 3)
            detail::bad_spec("triangulation needs n >= 3");
        if (s.max_degree != 0 && s.max_degree < 3)
            detail::bad_spec("degree cap must be at least 3");
        if (s.delete_fraction < 0 || s.delete_fraction > 1)
            detail::bad_spec("delete_fraction must lie in [0, 1]");
        if (s.min_delta > 0 && s.max_degree > 0 && s.min_delta > s.max_degree)
            detail::bad_spec("min_delta exceeds the degree cap");
        for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
            PlaneGraph g = detail::make_triangulation(s, s.seed + attempt, true);
            if (g.max_degree() >= s.min_delta)
                return g;
        }
        detail::bad_spec("no sample reached maximum degree " + std::to_string(s.min_delta));
    }
    case Family::Platonic: return platonic(s.name);
    }
    detail::bad_spec("unknown family");
}

/// Names of the shipped fixtures.
inline std::vector<std::string> fixture_names()
{
    std::vector<std::string> out = {"triangle", "k4", "cube", "octahedron", "icosahedron", "dodecahedron"};
    for (int k = 5; k <= 10; ++k)
        out.push_back("w" + std::to_string(k));
    out.push_back("bowtie");
    return out;
}

/// Fixture graph by name; the files under data/fixtures hold the same graphs.
inline PlaneGraph fixture(std::string_view name)
{
    if (name == "triangle")
        return detail::make_cycle(3);
    if (name == "k4")
        return detail::make_tetrahedron();
    if (name == "bowtie")
        return from_faces(5, {{0, 1, 2}, {0, 3, 4}, {0, 2, 1, 0, 4, 3}});
    if (name.size() >= 2 && name[0] == 'w' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        const int k = std::stoi(std::string(name.substr(1)));
        if (k >= 5 && k <= 10)
            return detail::make_wheel(k);
    }
    for (std::string_view solid : {"cube", "octahedron", "icosahedron", "dodecahedron"})
        if (name == solid)
            return platonic(name);
    detail::bad_spec("unknown fixture '" + std::string(name) + "'");
}

} // namespace sqcol
