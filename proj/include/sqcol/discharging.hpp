#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqcol/configurations.hpp"

namespace sqcol {

/// Exact charge, stored in sixths.
struct Charge {
    long long sixths = 0;

    static constexpr Charge of_sixths(long long s) { return Charge{s}; }
    static constexpr Charge whole(long long x) { return Charge{6 * x}; }

    constexpr Charge& operator+=(Charge o)
    {
        sixths += o.sixths;
        return *this;
    }
    constexpr Charge& operator-=(Charge o)
    {
        sixths -= o.sixths;
        return *this;
    }
    friend constexpr Charge operator+(Charge a, Charge b) { return a += b; }
    friend constexpr Charge operator-(Charge a, Charge b) { return a -= b; }
    friend constexpr Charge operator*(long long k, Charge a) { return Charge{k * a.sixths}; }
    friend constexpr auto operator<=>(const Charge&, const Charge&) = default;

    constexpr bool negative() const { return sixths < 0; }

    /// "p/6".
    std::string sixths_string() const { return std::to_string(sixths) + "/6"; }

    /// Lowest terms, e.g. "-2/3", "0", "3/2".
    std::string str() const
    {
        const long long g = std::gcd(sixths < 0 ? -sixths : sixths, 6LL);
        const long long num = sixths / (g == 0 ? 1 : g), den = 6 / (g == 0 ? 6 : g);
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

enum class Rule { R1, R2, R3, R4, R5, R6 };

inline constexpr std::array kAllRules = {Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6};

constexpr std::string_view to_string(Rule r)
{
    constexpr std::array names = {"R1", "R2", "R3", "R4", "R5", "R6"};
    return names[static_cast<int>(r)];
}

/// The fixed amount each rule moves.
constexpr Charge rule_amount(Rule r)
{
    constexpr std::array<long long, 6> s = {2, 1, 3, 1, 2, 1};
    return Charge::of_sixths(s[static_cast<int>(r)]);
}

/// A vertex or a face.
struct Element {
    bool is_face = false;
    int id = 0;

    static Element vertex(Vertex v) { return {false, v}; }
    static Element face(FaceId f) { return {true, f}; }

    std::string str() const { return (is_face ? "f" : "v") + std::to_string(id); }
    friend auto operator<=>(const Element&, const Element&) = default;
};

struct ChargeState {
    std::vector<Charge> vertex;
    std::vector<Charge> face;

    Charge& operator[](Element e) { return e.is_face ? face.at(e.id) : vertex.at(e.id); }
    Charge operator[](Element e) const { return e.is_face ? face.at(e.id) : vertex.at(e.id); }

    Charge total() const
    {
        Charge t;
        for (Charge c : vertex)
            t += c;
        for (Charge c : face)
            t += c;
        return t;
    }

    friend bool operator==(const ChargeState&, const ChargeState&) = default;
};

struct Transfer {
    Rule rule{};
    Element source;
    Element target;
    Charge amount;
};

using TransferLog = std::vector<Transfer>;

/// deg(x) - 4 on every vertex and face.
inline ChargeState initial_charges(const PlaneGraph& g)
{
    if (g.num_vertices() == 0 || !is_connected(g))
        throw Error(Errc::Disconnected, "charges need a connected nonempty graph");
    ChargeState s;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        s.vertex.push_back(Charge::whole(g.degree(v) - 4));
    for (FaceId f = 0; f < g.num_faces(); ++f)
        s.face.push_back(Charge::whole(g.face(f).degree() - 4));
    return s;
}

/// Every transfer the six rules prescribe, read off the static structure.
inline TransferLog rule_transfers(const PlaneGraph& g, const Gadgets& gad)
{
    TransferLog log;
    auto send = [&](Rule r, Element from, Element to) { log.push_back({r, from, to, rule_amount(r)}); };
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        const auto around = g.faces_around(v);
        for (FaceId f : around) {
            if (!is_triangle(g, f))
                continue;
            if (d >= 5)
                send(Rule::R1, Element::vertex(v), Element::face(f));
            if (d >= 6 && gad.weird[f])
                send(Rule::R2, Element::vertex(v), Element::face(f));
        }
        if (d < 6)
            continue;
        for (Vertex u : g.neighbors(v)) {
            if (gad.is_bad(v, u))
                send(d == 6 ? Rule::R4 : Rule::R5, Element::vertex(v), Element::vertex(u));
            if (d >= 7 && gad.is_very_bad(u))
                send(Rule::R6, Element::vertex(v), Element::vertex(u));
        }
    }
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        const auto& face = g.face(f);
        if (face.degree() < 5)
            continue;
        for (const Dart& d : face.boundary)
            if (g.degree(d.from) == 3)
                send(Rule::R3, Element::face(f), Element::vertex(d.from));
    }
    return log;
}

/// Applies R1-R6 simultaneously to the initial charges.
inline std::pair<ChargeState, TransferLog> apply_rules(const PlaneGraph& g, const Gadgets& gad)
{
    ChargeState s = initial_charges(g);
    TransferLog log = rule_transfers(g, gad);
    for (const auto& t : log) {
        s[t.source] -= t.amount;
        s[t.target] += t.amount;
    }
    return {std::move(s), std::move(log)};
}

inline std::pair<ChargeState, TransferLog> apply_rules(const PlaneGraph& g) { return apply_rules(g, classify(g)); }

/// Re-evaluates the precondition of a logged transfer.
inline bool transfer_justified(const PlaneGraph& g, const Gadgets& gad, const Transfer& t)
{
    if (t.amount != rule_amount(t.rule))
        return false;
    const int ds = t.source.is_face ? g.face(t.source.id).degree() : g.degree(t.source.id);
    auto incident = [&](Vertex v, FaceId f) {
        const auto around = g.faces_around(v);
        return std::find(around.begin(), around.end(), f) != around.end();
    };
    switch (t.rule) {
    case Rule::R1:
        return !t.source.is_face && t.target.is_face && ds >= 5 && is_triangle(g, t.target.id) &&
               incident(t.source.id, t.target.id);
    case Rule::R2:
        return !t.source.is_face && t.target.is_face && ds >= 6 && is_triangle(g, t.target.id) &&
               gad.weird[t.target.id] && incident(t.source.id, t.target.id);
    case Rule::R3:
        return t.source.is_face && !t.target.is_face && ds >= 5 && g.degree(t.target.id) == 3 &&
               incident(t.target.id, t.source.id);
    case Rule::R4:
    case Rule::R5:
    case Rule::R6: {
        if (t.source.is_face || t.target.is_face || !g.adjacent(t.source.id, t.target.id))
            return false;
        if (t.rule == Rule::R6)
            return ds >= 7 && gad.is_very_bad(t.target.id);
        return (t.rule == Rule::R4 ? ds == 6 : ds >= 7) && gad.is_bad(t.source.id, t.target.id);
    }
    }
    return false;
}

struct AuditReport {
    ChargeState initial;
    ChargeState final_state;
    TransferLog transfers;
    std::array<int, 6> transfers_per_rule{};
    std::vector<Element> negative_elements;
    std::vector<Configuration> configurations;
    /// Negative charge somewhere but no configuration found.
    bool unavoidability_breach = false;

    Charge initial_total() const { return initial.total(); }
    Charge final_total() const { return final_state.total(); }
};

inline AuditReport audit(const PlaneGraph& g)
{
    AuditReport r;
    r.initial = initial_charges(g);
    const Gadgets gad = classify(g);
    std::tie(r.final_state, r.transfers) = apply_rules(g, gad);
    for (const auto& t : r.transfers)
        ++r.transfers_per_rule[static_cast<int>(t.rule)];
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (r.final_state.vertex[v].negative())
            r.negative_elements.push_back(Element::vertex(v));
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (r.final_state.face[f].negative())
            r.negative_elements.push_back(Element::face(f));
    r.configurations = detect_all(g);
    r.unavoidability_breach = !r.negative_elements.empty() && r.configurations.empty();
    return r;
}

/// Upper bound on what a 7-vertex sends into one fan of t faces.
inline Charge fan_charge_bound(int t)
{
    constexpr std::array<long long, 6> alpha = {4, 8, 10, 13, 15, 18};
    if (t < 1 || t > 6)
        throw Error(Errc::OutOfRange, "fan size " + std::to_string(t) + " outside 1..6", t);
    return Charge::of_sixths(alpha[t - 1]);
}

/// Every multiset of fan sizes a 7-vertex with a 4+-face can carry
/// (sum of size + 1 at most 7), paired with the summed fan bound.
inline std::vector<std::pair<std::vector<int>, Charge>> alpha_partitions()
{
    std::vector<std::pair<std::vector<int>, Charge>> out;
    std::vector<int> sizes;
    std::function<void(int, int)> rec = [&](int smallest, int room) {
        Charge sum;
        for (int t : sizes)
            sum += fan_charge_bound(t);
        out.emplace_back(sizes, sum);
        for (int t = smallest; t <= 6 && t + 1 <= room; ++t) {
            sizes.push_back(t);
            rec(t, room - t - 1);
            sizes.pop_back();
        }
    };
    rec(1, 7);
    return out;
}

inline bool verify_alpha_partition_bound()
{
    for (const auto& [sizes, sum] : alpha_partitions())
        if (sum > Charge::whole(3))
            return false;
    return true;
}

/// Charge the center of `fan` sends to the fan's faces and vertices.
inline Charge fan_sent_charge(const PlaneGraph& g, const Gadgets& gad, const Fan& fan)
{
    const Vertex v = fan.center;
    const int d = g.degree(v);
    Charge w;
    for (FaceId f : fan.faces) {
        if (d >= 5)
            w += rule_amount(Rule::R1);
        if (d >= 6 && gad.weird[f])
            w += rule_amount(Rule::R2);
    }
    if (d < 6)
        return w;
    for (Vertex u : fan.vertices) {
        if (gad.is_bad(v, u))
            w += rule_amount(d == 6 ? Rule::R4 : Rule::R5);
        if (d >= 7 && gad.is_very_bad(u))
            w += rule_amount(Rule::R6);
    }
    return w;
}

struct CaseResult {
    bool certified = false;
    Charge final_charge;
    /// Case of the analysis that applies to the element.
    std::string case_name;
    /// Configurations that would have to be present for the element to end
    /// negative, in priority order. Empty when certified.
    std::vector<ConfigKind> hints;
};

/// Replays the final-charge case analysis element by element. Each case
/// relies on certain configurations being absent near the element; when they
/// are, the final charge must be nonnegative.
class CaseChecker {
public:
    CaseChecker(const PlaneGraph& g, const ChargeState& state) : g_(g), state_(state)
    {
        containing_.resize(g.num_vertices());
        for (const auto& c : detect_all(g))
            for (Vertex v : c.vertices)
                if (containing_[v].empty() || containing_[v].back() != c.kind)
                    containing_[v].push_back(c.kind);
    }

    CaseResult check(Element x) const
    {
        CaseResult r;
        r.final_charge = state_[x];
        std::vector<ConfigKind> assumed;
        std::vector<Vertex> core;
        if (x.is_face) {
            const auto& f = g_.face(x.id);
            const int d = f.degree();
            r.case_name = d <= 3 ? "3-face" : d == 4 ? "4-face" : "5+-face";
            if (d == 3)
                assumed = {ConfigKind::ThreeVertexOnTriangle, ConfigKind::FourVertexTriangleLowPartner};
            else if (d >= 5)
                assumed = {ConfigKind::AdjacentThreeVertices};
            core = f.vertices();
            if (d != 4)
                add_global(assumed);
            else
                core.clear();
        } else {
            const Vertex v = x.id;
            const int d = g_.degree(v);
            r.case_name = d <= 2 ? "2--vertex" : d >= 8 ? "8+-vertex" : std::to_string(d) + "-vertex";
            using K = ConfigKind;
            switch (d) {
            case 3: assumed = {K::ThreeVertexOnTriangle, K::ThreeVertexOnTwoQuadFaces}; break;
            case 4: break;
            case 5: assumed = {K::FiveWheelLacksHighNeighbors, K::FiveVertexFourTrianglesBadBoundary}; break;
            case 6:
                assumed = {K::ThreeVertexOnTriangle, K::FourVertexTriangleLowPartner, K::TwoTrianglesSharedEdge};
                break;
            case 7:
                assumed = {K::ThreeVertexOnTriangle,  K::FourVertexTriangleLowPartner,
                           K::TwoTrianglesSharedEdge, K::AdjacentVeryBadPair,
                           K::VeryBadBadPairAtSmallVertex, K::BadBadPairAtSevenVertex};
                break;
            default:
                if (d >= 8)
                    assumed = {K::ThreeVertexOnTriangle, K::FourVertexTriangleLowPartner,
                               K::TwoTrianglesSharedEdge};
                break;
            }
            if (d != 4) {
                add_global(assumed);
                core = {v};
            }
        }

        std::vector<ConfigKind> failed;
        // Very bad neighbors of a 7-vertex inside seven 3-faces sit on a
        // 7-cycle; more than floor(7/2) = 3 of them puts two side by side.
        if (!x.is_face && g_.degree(x.id) == 7 && all_triangles(x.id)) {
            r.case_name = "7-vertex in seven 3-faces";
            int very_bad = 0;
            for (Vertex u : g_.neighbors(x.id))
                very_bad += g_.degree(u) == 5 && all_triangles(u);
            if (very_bad > 7 / 2)
                failed.push_back(ConfigKind::AdjacentVeryBadPair);
        }
        for (Vertex u : region(core))
            for (ConfigKind k : containing_[u])
                if (std::find(assumed.begin(), assumed.end(), k) != assumed.end())
                    failed.push_back(k);
        if (failed.empty()) {
            if (r.final_charge.negative())
                throw std::logic_error("case " + r.case_name + " at " + x.str() + " ends with charge " +
                                       r.final_charge.str() + " although its assumptions hold");
            r.certified = true;
            return r;
        }
        for (Vertex u : x.is_face ? g_.face(x.id).vertices() : std::vector<Vertex>{x.id})
            failed.insert(failed.end(), containing_[u].begin(), containing_[u].end());
        std::sort(failed.begin(), failed.end());
        failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
        r.hints = std::move(failed);
        return r;
    }

private:
    bool all_triangles(Vertex v) const
    {
        for (FaceId f : g_.faces_around(v))
            if (g_.face(f).degree() != 3)
                return false;
        return true;
    }

    static void add_global(std::vector<ConfigKind>& kinds)
    {
        kinds.push_back(ConfigKind::Cutvertex);
        kinds.push_back(ConfigKind::LowDegreeVertex);
    }

    // Core vertices and everything within distance 2 of them.
    std::vector<Vertex> region(const std::vector<Vertex>& core) const
    {
        std::vector<Vertex> out = core;
        for (Vertex v : core) {
            const auto near = dist2_neighborhood(g_, v);
            out.insert(out.end(), near.begin(), near.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const PlaneGraph& g_;
    const ChargeState& state_;
    std::vector<std::vector<ConfigKind>> containing_;
};

inline CaseResult per_element_case_check(const PlaneGraph& g, const ChargeState& state, Element x)
{
    return CaseChecker(g, state).check(x);
}

} // namespace sqcol
