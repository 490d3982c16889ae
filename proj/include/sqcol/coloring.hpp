#pragma once

#include <algorithm>
#include <concepts>
#include <span>
#include <vector>

#include "sqcol/plane_graph.hpp"

namespace sqcol {

/// Anything with dense vertex ids and a neighbor range.
template <class G>
concept NeighborGraph = requires(const G& g, Vertex v) {
    { g.num_vertices() } -> std::convertible_to<int>;
    { g.neighbors(v) };
};

/// Plain adjacency lists without an embedding (square graphs, edge-list input).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(n) {}

    template <NeighborGraph G>
    static SimpleGraph from(const G& g)
    {
        SimpleGraph out(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            for (Vertex u : g.neighbors(v))
                out.adj_[v].push_back(u);
        return out;
    }

    int num_vertices() const { return static_cast<int>(adj_.size()); }

    int num_edges() const
    {
        std::size_t s = 0;
        for (const auto& a : adj_)
            s += a.size();
        return static_cast<int>(s / 2);
    }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    int max_degree() const
    {
        int d = 0;
        for (const auto& a : adj_)
            d = std::max(d, static_cast<int>(a.size()));
        return d;
    }

    bool adjacent(Vertex u, Vertex v) const
    {
        const auto& a = adj_.at(u);
        return std::find(a.begin(), a.end(), v) != a.end();
    }

    /// Adds uv unless present.
    void add_edge(Vertex u, Vertex v)
    {
        if (u == v || adjacent(u, v))
            return;
        adj_.at(u).push_back(v);
        adj_.at(v).push_back(u);
    }

private:
    std::vector<std::vector<Vertex>> adj_;
};

inline constexpr int kUncolored = -1;

/// Partial or total assignment vertex -> color index in [0, palette_size).
class Coloring {
public:
    Coloring() = default;
    Coloring(int num_vertices, int palette) : palette_size(palette), color_(num_vertices, kUncolored) {}

    int size() const { return static_cast<int>(color_.size()); }
    int operator[](Vertex v) const { return color_.at(v); }
    bool assigned(Vertex v) const { return color_.at(v) != kUncolored; }
    void set(Vertex v, int c) { color_.at(v) = c; }
    void clear(Vertex v) { color_.at(v) = kUncolored; }
    std::span<const int> colors() const { return color_; }

    bool is_total() const
    {
        return std::none_of(color_.begin(), color_.end(), [](int c) { return c == kUncolored; });
    }

    /// Number of distinct colors in use.
    int colors_used() const
    {
        std::vector<int> c;
        for (int x : color_)
            if (x != kUncolored)
                c.push_back(x);
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    int max_color() const
    {
        int m = kUncolored;
        for (int x : color_)
            m = std::max(m, x);
        return m;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

    int palette_size = 0;

private:
    std::vector<int> color_;
};

} // namespace sqcol
