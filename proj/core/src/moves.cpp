#include "plumb/moves.hpp"

#include <algorithm>

#include "plumb/canonical.hpp"
#include "plumb/matrix.hpp"
#include "plumb/seifert.hpp"

namespace plumb {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::BlowDownDeg0: return "blow_down_deg0";
        case MoveKind::BlowDownDeg1: return "blow_down_deg1";
        case MoveKind::BlowDownDeg2: return "blow_down_deg2";
        case MoveKind::BlowUpEdge: return "blow_up_edge";
        case MoveKind::BlowUpLeaf: return "blow_up_leaf";
        case MoveKind::BlowUpFree: return "blow_up_free";
        case MoveKind::ZeroChainAbsorb: return "zero_chain_absorb";
    }
    return "?";
}

const char* verdict_name(BoundaryVerdict v) {
    switch (v) {
        case BoundaryVerdict::Same: return "Same";
        case BoundaryVerdict::Different: return "Different";
        case BoundaryVerdict::Unknown: return "Unknown";
    }
    return "?";
}

std::pair<PlumbingGraph, MoveRecord> blow_down(const PlumbingGraph& g, VertexId v) {
    if (!g.has_vertex(v))
        throw IllegalMoveError("blow_down: no such vertex " + std::to_string(v));
    if (g.weight(v) != -1)
        throw IllegalMoveError("blow_down: vertex " + std::to_string(v) +
                               " has weight != -1");
    std::vector<VertexId> nb = g.neighbors(v);
    if (nb.size() > 2)
        throw IllegalMoveError("blow_down: vertex " + std::to_string(v) +
                               " has valence >= 3");

    PlumbingGraph h = g;
    MoveRecord rec;
    rec.site = {v};
    h.remove_vertex(v);
    for (VertexId u : nb) {
        h.set_weight(u, h.weight(u) + 1);
        rec.weight_deltas[u] = 1;
    }
    switch (nb.size()) {
        case 0: rec.kind = MoveKind::BlowDownDeg0; break;
        case 1: rec.kind = MoveKind::BlowDownDeg1; break;
        default:
            rec.kind = MoveKind::BlowDownDeg2;
            h.add_edge(nb[0], nb[1]);  // tree => neighbors were not adjacent
            break;
    }
    return {std::move(h), std::move(rec)};
}

std::pair<PlumbingGraph, MoveRecord> blow_up(const PlumbingGraph& g, BlowUpSite site) {
    PlumbingGraph h = g;
    MoveRecord rec;
    if (std::holds_alternative<FreeSite>(site)) {
        VertexId nv = h.add_vertex(-1);
        rec.kind = MoveKind::BlowUpFree;
        rec.site = {nv};
        return {std::move(h), std::move(rec)};
    }
    if (std::holds_alternative<VertexId>(site)) {
        VertexId u = std::get<VertexId>(site);
        if (!h.has_vertex(u))
            throw InvalidSiteError("blow_up: no such vertex " + std::to_string(u));
        VertexId nv = h.add_vertex(-1);
        h.add_edge(u, nv);
        h.set_weight(u, h.weight(u) - 1);
        rec.kind = MoveKind::BlowUpLeaf;
        rec.site = {nv, u};
        rec.weight_deltas[u] = -1;
        return {std::move(h), std::move(rec)};
    }
    Edge e = std::get<Edge>(site);
    if (!h.has_vertex(e.first) || !h.has_vertex(e.second) ||
        !h.has_edge(e.first, e.second))
        throw InvalidSiteError("blow_up: no such edge " + std::to_string(e.first) +
                               "-" + std::to_string(e.second));
    h.remove_edge(e.first, e.second);
    VertexId nv = h.add_vertex(-1);
    h.add_edge(e.first, nv);
    h.add_edge(nv, e.second);
    h.set_weight(e.first, h.weight(e.first) - 1);
    h.set_weight(e.second, h.weight(e.second) - 1);
    rec.kind = MoveKind::BlowUpEdge;
    rec.site = {nv, e.first, e.second};
    rec.weight_deltas[e.first] = -1;
    rec.weight_deltas[e.second] = -1;
    return {std::move(h), std::move(rec)};
}

std::pair<PlumbingGraph, MoveRecord> zero_chain_absorb(const PlumbingGraph& g,
                                                       VertexId v) {
    if (!g.has_vertex(v))
        throw IllegalMoveError("zero_chain_absorb: no such vertex " +
                               std::to_string(v));
    if (g.weight(v) != 0)
        throw IllegalMoveError("zero_chain_absorb: weight != 0");
    std::vector<VertexId> nb = g.neighbors(v);
    if (nb.size() != 2)
        throw IllegalMoveError("zero_chain_absorb: valence != 2");
    VertexId u = nb[0], w = nb[1];

    PlumbingGraph h = g;
    // merge u and w (and drop v): keep u, give it weight(u)+weight(w) and all
    // of w's other edges
    Weight merged = h.weight(u) + h.weight(w);
    std::vector<VertexId> wnb = h.neighbors(w);
    h.remove_vertex(v);
    h.remove_vertex(w);
    h.set_weight(u, merged);
    for (VertexId t : wnb)
        if (t != v) h.add_edge(u, t);  // tree => no duplicate, no cycle

    MoveRecord rec;
    rec.kind = MoveKind::ZeroChainAbsorb;
    rec.site = {v, u, w};
    return {std::move(h), std::move(rec)};
}

ReductionReport reduce_to_normal_form(const PlumbingGraph& g) {
    ReductionReport rep;
    rep.final_graph = g;
    for (;;) {
        bool moved = false;
        for (VertexId v : rep.final_graph.vertices()) {  // smallest id first
            Weight w = rep.final_graph.weight(v);
            int d = rep.final_graph.valence(v);
            if (w == -1 && d <= 2) {
                auto [h, rec] = blow_down(rep.final_graph, v);
                rep.final_graph = std::move(h);
                rep.moves.push_back(std::move(rec));
                moved = true;
                break;
            }
            if (w == 0 && d == 2) {
                auto [h, rec] = zero_chain_absorb(rep.final_graph, v);
                rep.final_graph = std::move(h);
                rep.moves.push_back(std::move(rec));
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    rep.reached_fixed_point = true;
    return rep;
}

namespace {

// Star/linear shape usable for the Different verdict; the empty graph counts.
bool comparable_shape(const PlumbingGraph& g) {
    if (g.empty()) return true;
    if (!g.is_connected()) return false;
    Classification c = classify(g);
    return c.is_star || c.is_linear;
}

}  // namespace

BoundaryVerdict same_boundary(const PlumbingGraph& g1, const PlumbingGraph& g2) {
    PlumbingGraph r1 = reduce_to_normal_form(g1).final_graph;
    PlumbingGraph r2 = reduce_to_normal_form(g2).final_graph;
    if (isomorphic(r1, r2)) return BoundaryVerdict::Same;

    if (!comparable_shape(r1) || !comparable_shape(r2))
        return BoundaryVerdict::Unknown;

    mpz_class d1 = determinant(r1), d2 = determinant(r2);
    if (abs(d1) != abs(d2)) return BoundaryVerdict::Different;

    // equal |det|: compare Seifert data when both normal forms are honest
    // star-shaped graphs with reduced arms
    try {
        SeifertData s1 = seifert_data_from_star(r1);
        SeifertData s2 = seifert_data_from_star(r2);
        if (s1.arms != s2.arms || s1.e != s2.e) return BoundaryVerdict::Different;
    } catch (const Error&) {
        return BoundaryVerdict::Unknown;
    }
    return BoundaryVerdict::Unknown;
}

}  // namespace plumb
