#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqcol/configurations.hpp"
#include "sqcol/square_coloring.hpp"

namespace sqcol {

struct InsertedEdge {
    /// Endpoints in the reduced graph, with each one's index in the other's rotation.
    Vertex u = 0;
    int pos_u = 0;
    Vertex w = 0;
    int pos_w = 0;

    friend bool operator==(const InsertedEdge&, const InsertedEdge&) = default;
};

/// One graph modification G -> G' and the plan for extending a coloring of
/// G' back to G.
struct ReductionStep {
    Configuration config;
    /// Maximum degree bound in force (Delta of the input graph).
    int delta = 0;
    std::optional<Vertex> deleted_vertex;
    std::optional<std::pair<Vertex, Vertex>> deleted_edge;
    std::vector<InsertedEdge> inserted_edges;
    /// Vertices of G (re)colored by the extension, in order.
    std::vector<Vertex> uncolored_after;
    /// Upper bound on blocked colors for each entry of uncolored_after.
    std::vector<int> budgets;
    /// Blocked counts observed by extend().
    std::vector<int> measured_blocked;

    /// Id in G of vertex `reduced` of G'.
    Vertex original_id(Vertex reduced) const
    {
        if (deleted_vertex && reduced >= *deleted_vertex)
            return reduced + 1;
        return reduced;
    }

    /// Id in G' of vertex `original` of G (-1 for the deleted vertex).
    Vertex reduced_id(Vertex original) const
    {
        if (!deleted_vertex)
            return original;
        if (original == *deleted_vertex)
            return -1;
        return original > *deleted_vertex ? original - 1 : original;
    }
};

namespace detail {

/// G - v plus edges hub-t for each target t, drawn through the region v
/// occupied: at the hub they replace v in the order the targets follow the
/// hub clockwise around v, at each target they take v's slot.
inline PlaneGraph remove_and_link(const PlaneGraph& g, Vertex v, Vertex hub, const std::vector<Vertex>& targets,
                                  int delta, std::vector<InsertedEdge>& inserted)
{
    const int d = g.degree(v);
    const int p = g.position(v, hub);
    std::vector<Vertex> fresh;
    for (int k = 1; k < d; ++k) {
        const Vertex w = g.neighbor_at(v, p + k);
        if (std::find(targets.begin(), targets.end(), w) != targets.end() && !g.adjacent(hub, w))
            fresh.push_back(w);
    }
    if (g.degree(hub) - 1 + static_cast<int>(fresh.size()) > delta)
        throw Error(Errc::DegreeBudgetExceeded,
                    "vertex " + std::to_string(hub) + " would reach degree " +
                        std::to_string(g.degree(hub) - 1 + static_cast<int>(fresh.size())) + " > " +
                        std::to_string(delta),
                    hub);

    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    std::vector<PlaneGraph::Rotation> rot;
    rot.reserve(g.num_vertices() - 1);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (x == v)
            continue;
        const bool is_target = std::find(fresh.begin(), fresh.end(), x) != fresh.end();
        PlaneGraph::Rotation r;
        for (Vertex u : g.rotation(x)) {
            if (u != v) {
                r.push_back(shift(u));
            } else if (x == hub) {
                for (Vertex w : fresh)
                    r.push_back(shift(w));
            } else if (is_target) {
                r.push_back(shift(hub));
            }
        }
        rot.push_back(std::move(r));
    }
    PlaneGraph out = PlaneGraph::build(std::move(rot));
    for (Vertex w : fresh) {
        const Vertex a = shift(hub), b = shift(w);
        inserted.push_back({a, out.position(a, b), b, out.position(b, a)});
    }
    return out;
}

// Pairs of surviving vertices within distance 2 through the removed element
// must stay within distance 2.
inline void check_distance_pairs(const PlaneGraph& g, const PlaneGraph& reduced, const ReductionStep& step)
{
    auto fail = [&](Vertex a, Vertex b) {
        throw std::logic_error(std::string(to_string(step.config.kind)) + " reduction separated vertices " +
                               std::to_string(a) + " and " + std::to_string(b));
    };
    if (step.deleted_vertex) {
        const auto nb = g.neighbors(*step.deleted_vertex);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!within_distance_two(reduced, step.reduced_id(nb[i]), step.reduced_id(nb[j])))
                    fail(nb[i], nb[j]);
        return;
    }
    if (!step.uncolored_after.empty())
        return;
    const auto [a, b] = *step.deleted_edge;
    if (!within_distance_two(reduced, a, b))
        fail(a, b);
    for (Vertex x : g.neighbors(a))
        if (x != b && !within_distance_two(reduced, x, b))
            fail(x, b);
    for (Vertex x : g.neighbors(b))
        if (x != a && !within_distance_two(reduced, x, a))
            fail(x, a);
}

inline std::pair<PlaneGraph, ReductionStep> apply_reduction(const PlaneGraph& g, const Configuration& cfg, int delta)
{
    ReductionStep step;
    step.config = cfg;
    step.delta = delta;
    const auto& w = cfg.vertices;
    auto vertex_step = [&](Vertex v, int budget) {
        step.deleted_vertex = v;
        step.uncolored_after = {v};
        step.budgets = {budget};
    };
    auto others = [&](Vertex v, std::initializer_list<Vertex> skip) {
        std::vector<Vertex> out;
        for (Vertex u : g.neighbors(v))
            if (std::find(skip.begin(), skip.end(), u) == skip.end())
                out.push_back(u);
        return out;
    };

    PlaneGraph reduced;
    switch (cfg.kind) {
    case ConfigKind::Cutvertex:
        throw Error(Errc::BadParameters, "cutvertices are handled by split_at_cutvertex");
    case ConfigKind::LowDegreeVertex: {
        const Vertex v = w[0];
        const int d = g.degree(v);
        if (d == 2) {
            vertex_step(v, 2 * delta);
            reduced = remove_and_link(g, v, g.neighbor_at(v, 0), {g.neighbor_at(v, 1)}, delta, step.inserted_edges);
        } else {
            vertex_step(v, d * delta);
            reduced = delete_vertex(g, v);
        }
        break;
    }
    case ConfigKind::AdjacentThreeVertices: {
        const Vertex v = w[0], u = w[1];
        vertex_step(v, 2 * delta + 3);
        reduced = remove_and_link(g, v, u, others(v, {u}), delta, step.inserted_edges);
        break;
    }
    case ConfigKind::ThreeVertexOnTriangle: {
        const Vertex v = w[0], v1 = w[1], v2 = w[2];
        vertex_step(v, 3 * delta - 2);
        reduced = remove_and_link(g, v, v1, others(v, {v1, v2}), delta, step.inserted_edges);
        break;
    }
    case ConfigKind::ThreeVertexOnTwoQuadFaces: {
        const Vertex v = w[0], v1 = w[1], v3 = w[3];
        vertex_step(v, 3 * delta - 2);
        reduced = remove_and_link(g, v, v1, {v3}, delta, step.inserted_edges);
        break;
    }
    case ConfigKind::FourVertexTriangleLowPartner: {
        const Vertex v = w[0], v1 = w[1], v2 = w[2];
        vertex_step(v, 3 * delta + 3);
        reduced = remove_and_link(g, v, v1, others(v, {v1, v2}), delta, step.inserted_edges);
        break;
    }
    case ConfigKind::TwoTrianglesSharedEdge: {
        const Vertex u = w[0], v = w[1], v1 = w[2], v2 = w[3];
        vertex_step(u, 3 * delta + 3);
        reduced = remove_and_link(g, u, v, others(u, {v, v1, v2}), delta, step.inserted_edges);
        break;
    }
    case ConfigKind::FiveWheelLacksHighNeighbors:
        vertex_step(w[0], 3 * delta + 2);
        reduced = delete_vertex(g, w[0]);
        break;
    case ConfigKind::FiveVertexFourTrianglesBadBoundary:
        vertex_step(w[0], 3 * delta + 3);
        reduced = remove_and_link(g, w[0], w[1], {w[2]}, delta, step.inserted_edges);
        break;
    case ConfigKind::AdjacentVeryBadPair:
        step.deleted_edge = {w[1], w[2]};
        reduced = delete_edge(g, w[1], w[2]);
        break;
    case ConfigKind::VeryBadBadPairAtSmallVertex:
        step.deleted_edge = {w[1], w[2]};
        step.uncolored_after = {w[1], w[2]};
        step.budgets = {3 * delta + 1, 3 * delta + 2};
        reduced = delete_edge(g, w[1], w[2]);
        break;
    case ConfigKind::BadBadPairAtSevenVertex:
        step.deleted_edge = {w[1], w[2]};
        step.uncolored_after = {w[1], w[2]};
        step.budgets = {3 * delta + 2, 3 * delta + 2};
        reduced = delete_edge(g, w[1], w[2]);
        break;
    }

    if (reduced.num_vertices() + reduced.num_edges() >= g.num_vertices() + g.num_edges())
        throw std::logic_error("reduction did not shrink the graph");
    if (reduced.max_degree() > delta)
        throw Error(Errc::DegreeBudgetExceeded, "reduced graph has maximum degree " +
                                                    std::to_string(reduced.max_degree()) + " > " + std::to_string(delta));
    check_distance_pairs(g, reduced, step);
    return {std::move(reduced), std::move(step)};
}

} // namespace detail

/// Applies the graph modification for `cfg` (which must be present in G).
/// `delta` is the maximum degree the reduced graph may reach; it defaults to
/// Delta(G).
inline std::pair<PlaneGraph, ReductionStep> reduce(const PlaneGraph& g, const Configuration& cfg, int delta = -1)
{
    if (!is_present(g, cfg))
        throw Error(Errc::ConfigNotPresent, std::string(to_string(cfg.kind)) + " witness not present in graph");
    return detail::apply_reduction(g, cfg, delta < 0 ? g.max_degree() : delta);
}

/// Lifts a coloring of G' to G: surviving vertices keep their colors, then
/// each vertex of step.uncolored_after takes its lowest free color. The
/// number of blocked colors is recorded and checked against the step budget.
inline Coloring extend(const PlaneGraph& g, ReductionStep& step, const Coloring& reduced, int palette_size)
{
    Coloring c(g.num_vertices(), palette_size);
    for (Vertex x = 0; x < reduced.size(); ++x)
        c.set(step.original_id(x), reduced[x]);
    for (Vertex x : step.uncolored_after)
        c.clear(x);
    step.measured_blocked.clear();
    for (std::size_t i = 0; i < step.uncolored_after.size(); ++i) {
        const Vertex x = step.uncolored_after[i];
        const auto blocked = blocked_colors(g, c, x);
        const int count = static_cast<int>(blocked.size());
        step.measured_blocked.push_back(count);
        if (count > step.budgets[i])
            throw Error(Errc::BudgetViolated,
                        std::string(to_string(step.config.kind)) + ": " + std::to_string(count) +
                            " colors blocked at vertex " + std::to_string(x) + ", budget " +
                            std::to_string(step.budgets[i]),
                        x);
        const auto free = lowest_free_color(blocked, palette_size);
        if (!free)
            throw Error(Errc::PaletteExhausted, "no free color for vertex " + std::to_string(x), x);
        c.set(x, *free);
    }
    return c;
}

/// The two pieces of G on either side of a cutvertex.
struct SplitPlan {
    int num_vertices = 0;
    Vertex cutvertex = -1;
    PlaneGraph first;
    PlaneGraph second;
    /// Piece id -> id in G.
    std::vector<Vertex> first_ids;
    std::vector<Vertex> second_ids;
    /// The cutvertex inside each piece.
    Vertex first_cut = -1;
    Vertex second_cut = -1;
};

/// First piece: the component of G - v holding the lowest vertex id, plus v.
/// Second piece: G minus that component.
inline SplitPlan split_at_cutvertex(const PlaneGraph& g, Vertex v)
{
    const auto cuts = cutvertices(g);
    if (!std::binary_search(cuts.begin(), cuts.end(), v))
        throw Error(Errc::NotACutvertex, "vertex " + std::to_string(v) + " is not a cutvertex", v);
    const Vertex start = v == 0 ? 1 : 0;
    std::vector<char> in_c(g.num_vertices(), 0);
    std::vector<Vertex> stack{start};
    in_c[start] = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (y != v && !in_c[y]) {
                in_c[y] = 1;
                stack.push_back(y);
            }
    }
    SplitPlan plan;
    plan.num_vertices = g.num_vertices();
    plan.cutvertex = v;
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (in_c[x] || x == v)
            plan.first_ids.push_back(x);
        if (!in_c[x])
            plan.second_ids.push_back(x);
    }
    plan.first = induced_subgraph(g, plan.first_ids);
    plan.second = induced_subgraph(g, plan.second_ids);
    plan.first_cut = static_cast<Vertex>(std::lower_bound(plan.first_ids.begin(), plan.first_ids.end(), v) -
                                         plan.first_ids.begin());
    plan.second_cut = static_cast<Vertex>(std::lower_bound(plan.second_ids.begin(), plan.second_ids.end(), v) -
                                          plan.second_ids.begin());
    return plan;
}

/// Union of colorings of the two pieces after permuting the second one's
/// colors so that the cutvertex agrees and the two neighborhoods of the
/// cutvertex use disjoint colors.
inline Coloring merge_colorings(const SplitPlan& plan, const Coloring& first, const Coloring& second,
                                int palette_size)
{
    const Vertex c1 = plan.first_cut, c2 = plan.second_cut;
    const int need = plan.first.degree(c1) + plan.second.degree(c2) + 1;
    if (palette_size < need)
        throw Error(Errc::PaletteTooSmall, "merging at cutvertex " + std::to_string(plan.cutvertex) + " needs " +
                                               std::to_string(need) + " colors");
    for (const Coloring* c : {&first, &second})
        if (c->max_color() >= palette_size)
            throw Error(Errc::PaletteTooSmall, "piece coloring exceeds the palette");

    std::vector<int> perm(palette_size, -1);
    std::vector<char> taken(palette_size, 0);
    auto assign = [&](int from, int to) {
        perm[from] = to;
        taken[to] = 1;
    };
    assign(second[c2], first[c1]);

    std::vector<char> forbidden(palette_size, 0);
    forbidden[first[c1]] = 1;
    for (Vertex y : plan.first.neighbors(c1))
        forbidden[first[y]] = 1;
    std::vector<int> near;
    for (Vertex x : plan.second.neighbors(c2))
        near.push_back(second[x]);
    std::sort(near.begin(), near.end());
    int next = 0;
    for (int col : near) {
        while (forbidden[next] || taken[next])
            ++next;
        assign(col, next);
    }
    int fill = 0;
    for (int col = 0; col < palette_size; ++col) {
        if (perm[col] >= 0)
            continue;
        while (taken[fill])
            ++fill;
        assign(col, fill);
    }

    Coloring out(plan.num_vertices, palette_size);
    for (Vertex x = 0; x < first.size(); ++x)
        out.set(plan.first_ids[x], first[x]);
    for (Vertex x = 0; x < second.size(); ++x)
        out.set(plan.second_ids[x], perm[second[x]]);
    return out;
}

// ---------------------------------------------------------------------------
// Driver

struct TraceEvent {
    enum class Type { Components, Base, Split, Reduce, Fallback };

    Type type = Type::Base;
    /// Components: number of components colored independently.
    int count = 0;
    /// Base / Fallback: the coloring produced directly.
    Coloring coloring;
    /// Split: the cutvertex.
    Vertex cutvertex = -1;
    /// Reduce: the step taken.
    ReductionStep step;

    static TraceEvent of(Type t, int count = 0)
    {
        TraceEvent e;
        e.type = t;
        e.count = count;
        return e;
    }
};

/// Record of one color_planar run, in the order the recursion visited it.
struct ColoringTrace {
    int delta = 0;
    int palette_size = 0;
    bool fallback = false;
    std::string fallback_reason;
    std::vector<TraceEvent> events;

    std::vector<const ReductionStep*> steps() const
    {
        std::vector<const ReductionStep*> out;
        for (const auto& e : events)
            if (e.type == TraceEvent::Type::Reduce)
                out.push_back(&e.step);
        return out;
    }

    std::map<ConfigKind, int> steps_per_kind() const
    {
        std::map<ConfigKind, int> out;
        for (const auto* s : steps())
            ++out[s->config.kind];
        return out;
    }

    /// Largest blocked count seen per kind.
    std::map<ConfigKind, int> max_blocked_per_kind() const
    {
        std::map<ConfigKind, int> out;
        for (const auto* s : steps())
            for (int b : s->measured_blocked)
                out[s->config.kind] = std::max(out[s->config.kind], b);
        return out;
    }

    int count(TraceEvent::Type t) const
    {
        return static_cast<int>(std::count_if(events.begin(), events.end(), [t](const auto& e) { return e.type == t; }));
    }
};

struct ColorOptions {
    /// Palette size; 0 selects 3*Delta + 4.
    int palette_size = 0;
    /// Graphs with at most this many vertices are colored optimally.
    int base_threshold = 6;
};

struct ColoringResult {
    Coloring coloring;
    ColoringTrace trace;
};

namespace detail {

class PlanarColorer {
public:
    PlanarColorer(int delta, int palette, int threshold, ColoringTrace& trace)
        : delta_(delta), palette_(palette), threshold_(threshold), trace_(trace)
    {
    }

    Coloring solve(const PlaneGraph& g)
    {
        struct Pending {
            PlaneGraph graph;
            std::size_t event;
        };
        std::vector<Pending> chain;
        PlaneGraph cur = g;
        Coloring c;
        for (;;) {
            const auto comps = connected_components(cur);
            if (comps.size() > 1) {
                push(TraceEvent::of(TraceEvent::Type::Components, static_cast<int>(comps.size())));
                c = Coloring(cur.num_vertices(), palette_);
                for (const auto& comp : comps) {
                    const Coloring part = solve(induced_subgraph(cur, comp));
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        c.set(comp[i], part[static_cast<Vertex>(i)]);
                }
                break;
            }
            if (cur.num_vertices() <= threshold_) {
                c = exact_color(cur);
                c.palette_size = palette_;
                auto e = TraceEvent::of(TraceEvent::Type::Base);
                e.coloring = c;
                push(std::move(e));
                break;
            }
            const auto cfg = find_any(cur);
            if (!cfg)
                throw std::logic_error("no configuration found in a graph with " +
                                       std::to_string(cur.num_vertices()) + " vertices");
            if (cfg->kind == ConfigKind::Cutvertex) {
                auto e = TraceEvent::of(TraceEvent::Type::Split);
                e.cutvertex = cfg->vertices[0];
                push(std::move(e));
                const SplitPlan plan = split_at_cutvertex(cur, cfg->vertices[0]);
                const Coloring first = solve(plan.first);
                const Coloring second = solve(plan.second);
                c = merge_colorings(plan, first, second, palette_);
                break;
            }
            auto [next, step] = apply_reduction(cur, *cfg, delta_);
            auto e = TraceEvent::of(TraceEvent::Type::Reduce);
            e.step = std::move(step);
            chain.push_back({std::move(cur), push(std::move(e))});
            cur = std::move(next);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            c = extend(it->graph, trace_.events[it->event].step, c, palette_);
        return c;
    }

private:
    std::size_t push(TraceEvent e)
    {
        trace_.events.push_back(std::move(e));
        return trace_.events.size() - 1;
    }

    int delta_;
    int palette_;
    int threshold_;
    ColoringTrace& trace_;
};

} // namespace detail

/// Distance-2 coloring with at most 3*Delta + 4 colors. Components are colored
/// independently, cutvertices split the graph, and otherwise the first
/// configuration found is reduced, the smaller graph colored recursively and
/// the coloring extended.
///
/// When Delta <= 5 some reductions would raise a degree above Delta; the run
/// then falls back to a greedy coloring with 5*Delta + 1 colors and says so
/// in the trace.
inline ColoringResult color_planar(const PlaneGraph& g, const ColorOptions& opts = {})
{
    ColoringResult result;
    auto& trace = result.trace;
    trace.delta = g.max_degree();
    const int minimum = 3 * trace.delta + 4;
    trace.palette_size = opts.palette_size > 0 ? opts.palette_size : minimum;
    if (trace.palette_size < minimum)
        throw Error(Errc::PaletteTooSmall, "palette " + std::to_string(trace.palette_size) +
                                               " is below 3*Delta+4 = " + std::to_string(minimum));
    try {
        detail::PlanarColorer colorer(trace.delta, trace.palette_size, std::max(1, opts.base_threshold), trace);
        result.coloring = colorer.solve(g);
    } catch (const Error& e) {
        if (e.code() != Errc::DegreeBudgetExceeded)
            throw;
        trace.events.clear();
        trace.fallback = true;
        trace.fallback_reason = e.what();
        trace.palette_size = std::max(trace.palette_size, 5 * trace.delta + 1);
        try {
            result.coloring = greedy_color(g, trace.palette_size);
        } catch (const Error& ex) {
            if (ex.code() != Errc::PaletteExhausted)
                throw;
            trace.palette_size = std::max(trace.palette_size, g.num_vertices());
            result.coloring = greedy_color(g, trace.palette_size);
        }
        auto ev = TraceEvent::of(TraceEvent::Type::Fallback);
        ev.coloring = result.coloring;
        trace.events.push_back(std::move(ev));
    }
    result.coloring.palette_size = trace.palette_size;
    if (!is_valid(g, result.coloring))
        throw std::logic_error("color_planar produced an invalid coloring");
    return result;
}

namespace detail {

class TraceReplayer {
public:
    TraceReplayer(const ColoringTrace& trace) : trace_(trace) {}

    Coloring replay(const PlaneGraph& g)
    {
        struct Pending {
            PlaneGraph graph;
            ReductionStep step;
        };
        std::vector<Pending> chain;
        PlaneGraph cur = g;
        Coloring c;
        for (bool done = false; !done;) {
            const TraceEvent& e = next();
            switch (e.type) {
            case TraceEvent::Type::Components: {
                const auto comps = connected_components(cur);
                if (static_cast<int>(comps.size()) != e.count)
                    throw std::runtime_error("trace mismatch: component count");
                c = Coloring(cur.num_vertices(), trace_.palette_size);
                for (const auto& comp : comps) {
                    const Coloring part = replay(induced_subgraph(cur, comp));
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        c.set(comp[i], part[static_cast<Vertex>(i)]);
                }
                done = true;
                break;
            }
            case TraceEvent::Type::Base:
            case TraceEvent::Type::Fallback:
                if (e.coloring.size() != cur.num_vertices() || !is_valid(cur, e.coloring))
                    throw std::runtime_error("trace mismatch: recorded coloring invalid");
                c = e.coloring;
                done = true;
                break;
            case TraceEvent::Type::Split: {
                const SplitPlan plan = split_at_cutvertex(cur, e.cutvertex);
                const Coloring first = replay(plan.first);
                const Coloring second = replay(plan.second);
                c = merge_colorings(plan, first, second, trace_.palette_size);
                done = true;
                break;
            }
            case TraceEvent::Type::Reduce: {
                auto [next_graph, step] = reduce(cur, e.step.config, e.step.delta);
                if (step.inserted_edges != e.step.inserted_edges)
                    throw std::runtime_error("trace mismatch: inserted edges differ");
                chain.push_back({std::move(cur), std::move(step)});
                cur = std::move(next_graph);
                break;
            }
            }
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            c = extend(it->graph, it->step, c, trace_.palette_size);
        return c;
    }

private:
    const TraceEvent& next()
    {
        if (pos_ >= trace_.events.size())
            throw std::runtime_error("trace exhausted");
        return trace_.events[pos_++];
    }

    const ColoringTrace& trace_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Re-runs the recorded decisions of a trace on G without searching for
/// configurations.
inline Coloring replay(const PlaneGraph& g, const ColoringTrace& trace)
{
    detail::TraceReplayer r(trace);
    Coloring c = r.replay(g);
    c.palette_size = trace.palette_size;
    return c;
}

} // namespace sqcol
