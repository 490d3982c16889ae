#pragma once

// Independent reference implementations used to check the library. They
// share no code with it beyond the graph accessors.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "sqcol/corpus.hpp"
#include "sqcol/plane_graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<int>>;

template <class G>
Adj adjacency(const G& g)
{
    Adj a(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v))
            a[v].push_back(u);
    return a;
}

inline std::vector<int> bfs(const Adj& a, int s)
{
    std::vector<int> d(a.size(), -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : a[v])
            if (d[u] < 0) {
                d[u] = d[v] + 1;
                q.push(u);
            }
    }
    return d;
}

/// dist2[u][w]: 1 <= dist(u, w) <= 2.
inline std::vector<std::vector<char>> dist2_matrix(const Adj& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        const auto d = bfs(a, v);
        for (int u = 0; u < n; ++u)
            m[v][u] = d[u] == 1 || d[u] == 2;
    }
    return m;
}

namespace detail {

inline bool extend_coloring(const std::vector<std::vector<char>>& m, std::vector<int>& c, int v, int k)
{
    const int n = static_cast<int>(c.size());
    if (v == n)
        return true;
    for (int col = 0; col < k; ++col) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            ok = !(m[v][u] && c[u] == col);
        if (!ok)
            continue;
        c[v] = col;
        if (extend_coloring(m, c, v + 1, k))
            return true;
    }
    c[v] = -1;
    return false;
}

} // namespace detail

/// chi_2 by trying k = 1, 2, ... with plain backtracking in vertex order.
inline int naive_chi2(const Adj& a)
{
    const int n = static_cast<int>(a.size());
    if (n == 0)
        return 0;
    const auto m = dist2_matrix(a);
    for (int k = 1;; ++k) {
        std::vector<int> c(n, -1);
        if (detail::extend_coloring(m, c, 0, k))
            return k;
    }
}

/// Faces traced directly from the rotation lists: returns the sorted list of
/// face lengths.
inline std::vector<int> face_lengths(const std::vector<std::vector<int>>& rot)
{
    std::set<std::pair<int, int>> unused;
    for (int v = 0; v < static_cast<int>(rot.size()); ++v)
        for (int u : rot[v])
            unused.insert({v, u});
    std::vector<int> out;
    while (!unused.empty()) {
        auto [a, b] = *unused.begin();
        const std::pair<int, int> start{a, b};
        int len = 0;
        std::pair<int, int> cur = start;
        do {
            unused.erase(cur);
            ++len;
            const auto& r = rot[cur.second];
            const auto it = std::find(r.begin(), r.end(), cur.first);
            const int next = std::next(it) == r.end() ? r.front() : *std::next(it);
            cur = {cur.second, next};
        } while (cur != start);
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<int>> rotations(const sqcol::PlaneGraph& g)
{
    std::vector<std::vector<int>> r;
    for (int v = 0; v < g.num_vertices(); ++v)
        r.emplace_back(g.rotation(v).begin(), g.rotation(v).end());
    return r;
}

/// Connected plane graphs on at most 8 vertices: named families plus many
/// random samples, without duplicates.
inline std::vector<sqcol::PlaneGraph> small_graph_suite()
{
    using namespace sqcol;
    std::vector<PlaneGraph> out;
    std::set<std::vector<std::vector<int>>> seen;
    auto add = [&](const PlaneGraph& g) {
        if (g.num_vertices() <= 8 && is_connected(g) && seen.insert(rotations(g)).second)
            out.push_back(g);
    };
    for (int n = 1; n <= 8; ++n)
        add(generate({.family = Family::Path, .n = n}));
    for (int n = 3; n <= 8; ++n)
        add(generate({.family = Family::Cycle, .n = n}));
    for (int n = 0; n <= 7; ++n)
        add(generate({.family = Family::Star, .n = n}));
    for (int n = 3; n <= 7; ++n)
        add(generate({.family = Family::Wheel, .n = n}));
    add(generate({.family = Family::Grid, .rows = 2, .cols = 2}));
    add(generate({.family = Family::Grid, .rows = 2, .cols = 3}));
    add(generate({.family = Family::Grid, .rows = 2, .cols = 4}));
    add(generate({.family = Family::TriangularGrid, .rows = 2, .cols = 3}));
    add(generate({.family = Family::TriangularGrid, .rows = 2, .cols = 4}));
    for (const char* name : {"tetrahedron", "octahedron", "cube"})
        add(platonic(name));
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        GeneratorSpec s;
        s.family = Family::RandomTriangulation;
        s.n = 3 + static_cast<int>(seed % 6);
        s.seed = seed;
        s.max_degree = seed % 3 == 0 ? 0 : 3 + static_cast<int>(seed % 4);
        s.flips = static_cast<int>(seed % 5);
        s.delete_fraction = (seed % 4) * 0.25;
        add(generate(s));
    }
    return out;
}

} // namespace oracle
