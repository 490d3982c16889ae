#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqcol/coloring.hpp"

namespace sqcol {

/// The square: u ~ v iff 1 <= dist(u, v) <= 2.
template <NeighborGraph G>
SimpleGraph square(const G& g)
{
    SimpleGraph sq(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex u : dist2_neighborhood(g, v))
            if (u > v)
                sq.add_edge(v, u);
    return sq;
}

/// True iff the total coloring c is a distance-2 coloring within its palette.
template <NeighborGraph G>
bool is_valid(const G& g, const Coloring& c)
{
    if (c.size() != g.num_vertices())
        throw Error(Errc::PartialColoring, "coloring covers " + std::to_string(c.size()) + " of " +
                                               std::to_string(g.num_vertices()) + " vertices");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!c.assigned(v))
            throw Error(Errc::PartialColoring, "vertex " + std::to_string(v) + " is uncolored", v);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (c[v] < 0 || c[v] >= c.palette_size)
            return false;
        for (Vertex u : g.neighbors(v)) {
            if (c[u] == c[v])
                return false;
            for (Vertex w : g.neighbors(u))
                if (w != v && c[w] == c[v])
                    return false;
        }
    }
    return true;
}

/// Colors appearing within distance 2 of the uncolored vertex v, ascending.
template <NeighborGraph G>
std::vector<int> blocked_colors(const G& g, const Coloring& c, Vertex v)
{
    if (c.assigned(v))
        throw Error(Errc::AlreadyColored, "vertex " + std::to_string(v) + " already has a color", v);
    std::vector<int> out;
    for (Vertex u : dist2_neighborhood(g, v))
        if (c.assigned(u))
            out.push_back(c[u]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Lowest color in [0, palette) outside the sorted `blocked`, if any.
inline std::optional<int> lowest_free_color(const std::vector<int>& blocked, int palette)
{
    int candidate = 0;
    for (int b : blocked) {
        if (b > candidate)
            break;
        if (b == candidate)
            ++candidate;
    }
    if (candidate < palette)
        return candidate;
    return std::nullopt;
}

/// Smallest-last (degeneracy) order: repeatedly remove a minimum-degree
/// vertex; the returned sequence is the reverse of the removal order.
template <NeighborGraph G>
std::vector<Vertex> smallest_last_order(const G& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    int maxd = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(std::ranges::distance(g.neighbors(v)));
        maxd = std::max(maxd, deg[v]);
    }
    std::vector<std::vector<Vertex>> bucket(maxd + 1);
    for (Vertex v = n - 1; v >= 0; --v)
        bucket[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    int d = 0;
    while (static_cast<int>(order.size()) < n) {
        d = std::max(0, d - 1);
        while (bucket[d].empty())
            ++d;
        const Vertex v = bucket[d].back();
        bucket[d].pop_back();
        if (removed[v] || deg[v] != d)
            continue;
        removed[v] = 1;
        order.push_back(v);
        for (Vertex u : g.neighbors(v))
            if (!removed[u]) {
                --deg[u];
                bucket[deg[u]].push_back(u);
            }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

/// Greedy distance-2 coloring: vertices in `order` take the lowest free color.
template <NeighborGraph G>
Coloring greedy_color(const G& g, const std::vector<Vertex>& order, int palette_size)
{
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v])
            throw Error(Errc::BadParameters, "order is not a permutation of the vertices");
        seen[v] = 1;
    }
    if (static_cast<int>(order.size()) != n)
        throw Error(Errc::BadParameters, "order is not a permutation of the vertices");
    Coloring c(n, palette_size);
    for (Vertex v : order) {
        const auto free = lowest_free_color(blocked_colors(g, c, v), palette_size);
        if (!free)
            throw Error(Errc::PaletteExhausted,
                        "no free color for vertex " + std::to_string(v) + " in palette of " +
                            std::to_string(palette_size),
                        v);
        c.set(v, *free);
    }
    return c;
}

/// Greedy distance-2 coloring in smallest-last order of the square.
template <NeighborGraph G>
Coloring greedy_color(const G& g, int palette_size)
{
    return greedy_color(g, smallest_last_order(square(g)), palette_size);
}

struct ExactOptions {
    int max_vertices = 40;
    /// Known upper bound on chi_2 (0: none).
    int upper_bound = 0;
    /// Wall-clock budget in milliseconds (0: unlimited).
    long timeout_ms = 0;
};

namespace detail {

// DSATUR branch and bound over the square, vertex sets as 64-bit masks.
class SquareColoringSearch {
public:
    // `clique` is the size of a known clique of the square, used as lower bound.
    SquareColoringSearch(const SimpleGraph& sq, int clique, const ExactOptions& opts)
        : n_(sq.num_vertices()), opts_(opts), lower_(std::max(1, clique))
    {
        adj_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex u : sq.neighbors(v))
                adj_[v] |= std::uint64_t{1} << u;
        if (opts.timeout_ms > 0)
            deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.timeout_ms);
    }

    std::vector<int> solve()
    {
        if (n_ == 0)
            return {};
        cur_.assign(n_, -1);
        best_ = dsatur_greedy();
        best_k_ = 1 + *std::max_element(best_.begin(), best_.end());
        if (opts_.upper_bound > 0 && opts_.upper_bound < best_k_) {
            best_k_ = opts_.upper_bound + 1;
            best_.clear();
        }
        if (best_k_ > lower_) {
            std::fill(cur_.begin(), cur_.end(), -1);
            expand(0, 0);
        }
        if (best_.empty())
            throw Error(Errc::BadParameters, "upper bound " + std::to_string(opts_.upper_bound) +
                                                 " is below the chromatic number of the square");
        return best_;
    }

private:
    std::uint64_t forbidden(Vertex v) const
    {
        std::uint64_t mask = 0;
        for (std::uint64_t rest = adj_[v]; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if (cur_[u] >= 0)
                mask |= std::uint64_t{1} << cur_[u];
        }
        return mask;
    }

    Vertex select() const
    {
        Vertex pick = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (cur_[v] >= 0)
                continue;
            const int sat = std::popcount(forbidden(v));
            int deg = 0;
            for (std::uint64_t rest = adj_[v]; rest; rest &= rest - 1)
                deg += cur_[std::countr_zero(rest)] < 0;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return pick;
    }

    std::vector<int> dsatur_greedy()
    {
        for (int placed = 0; placed < n_; ++placed) {
            const Vertex v = select();
            const std::uint64_t f = forbidden(v);
            cur_[v] = std::countr_zero(~f);
        }
        return cur_;
    }

    void expand(int colored, int used)
    {
        if (done_)
            return;
        if ((++nodes_ & 1023) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_)
            throw Error(Errc::Timeout, "exact search exceeded " + std::to_string(opts_.timeout_ms) + " ms");
        if (colored == n_) {
            best_k_ = used;
            best_ = cur_;
            done_ = best_k_ <= lower_;
            return;
        }
        const Vertex v = select();
        const std::uint64_t f = forbidden(v);
        for (int c = 0; c < used && used < best_k_; ++c) {
            if (f >> c & 1)
                continue;
            cur_[v] = c;
            expand(colored + 1, used);
            cur_[v] = -1;
            if (done_)
                return;
        }
        if (used + 1 < best_k_) {
            cur_[v] = used;
            expand(colored + 1, used + 1);
            cur_[v] = -1;
        }
    }

    int n_;
    ExactOptions opts_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> cur_;
    std::vector<int> best_;
    int best_k_ = 0;
    int lower_ = 1;
    bool done_ = false;
    unsigned long long nodes_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace detail

/// Optimal distance-2 coloring by branch and bound on the square, with the
/// largest closed neighborhood of g (a clique of the square) as lower bound.
template <NeighborGraph G>
Coloring exact_color(const G& g, const ExactOptions& opts = {})
{
    const int n = g.num_vertices();
    if (n > opts.max_vertices || n > 64)
        throw Error(Errc::TooLarge, std::to_string(n) + " vertices exceed the exact-search limit of " +
                                        std::to_string(std::min(opts.max_vertices, 64)));
    // A closed neighborhood of g is a clique of its square.
    int clique = n > 0 ? 1 : 0;
    for (Vertex v = 0; v < n; ++v)
        clique = std::max(clique, 1 + static_cast<int>(std::size(g.neighbors(v))));
    detail::SquareColoringSearch search(square(g), clique, opts);
    const auto colors = search.solve();
    Coloring c(n, 0);
    for (Vertex v = 0; v < n; ++v)
        c.set(v, colors[v]);
    c.palette_size = c.max_color() + 1;
    return c;
}

/// chi_2(G), the minimum palette of a distance-2 coloring.
template <NeighborGraph G>
int exact_chi2(const G& g, const ExactOptions& opts = {})
{
    return exact_color(g, opts).palette_size;
}

} // namespace sqcol
