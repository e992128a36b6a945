#pragma once

// Boundary-preserving plumbing-calculus moves on trees, normal-form reduction,
// and the three-valued same-boundary comparison.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

enum class MoveKind {
    BlowDownDeg0,
    BlowDownDeg1,
    BlowDownDeg2,
    BlowUpEdge,
    BlowUpLeaf,
    BlowUpFree,
    ZeroChainAbsorb,
};

const char* move_kind_name(MoveKind k);

struct MoveRecord {
    MoveKind kind;
    std::vector<VertexId> site;              // affected vertex id(s)
    std::map<VertexId, Weight> weight_deltas;
};

// blow_down: weight(v) == -1, valence(v) <= 2.
//   valence 0: delete v.
//   valence 1: delete v, neighbor weight += 1.
//   valence 2: delete v, both neighbors += 1, join neighbors by a new edge.
// det(new) = -det(old).  Throws IllegalMoveError.
std::pair<PlumbingGraph, MoveRecord> blow_down(const PlumbingGraph& g, VertexId v);

struct FreeSite {};
using BlowUpSite = std::variant<Edge, VertexId, FreeSite>;

// blow_up: inverse of blow_down.  Edge site (u,w): insert a fresh -1 vertex
// between u and w, u and w each -= 1.  Leaf site u: attach a fresh -1 vertex,
// u -= 1.  Free: add an isolated -1 vertex.  Throws InvalidSiteError.
std::pair<PlumbingGraph, MoveRecord> blow_up(const PlumbingGraph& g, BlowUpSite site);

// zero_chain_absorb: weight(v) == 0, valence(v) == 2 with neighbors u != w.
// v, u, w collapse to one vertex of weight weight(u) + weight(w) inheriting
// the remaining edges of u and w.  Throws IllegalMoveError.
std::pair<PlumbingGraph, MoveRecord> zero_chain_absorb(const PlumbingGraph& g,
                                                       VertexId v);

struct ReductionReport {
    PlumbingGraph final_graph;
    std::vector<MoveRecord> moves;
    bool reached_fixed_point = false;
};

// Applies blow_down / zero_chain_absorb greedily (smallest eligible vertex id
// first) until no move applies.  |det| is preserved by every step.
ReductionReport reduce_to_normal_form(const PlumbingGraph& g);

enum class BoundaryVerdict { Same, Different, Unknown };

const char* verdict_name(BoundaryVerdict v);

// Same      : reduced normal forms are isomorphic.
// Different : normal forms differ and a genuine invariant separates them
//             (|det|, or extracted Seifert data of star/linear fixed points).
// Unknown   : otherwise (the move set is sound but not known complete).
BoundaryVerdict same_boundary(const PlumbingGraph& g1, const PlumbingGraph& g2);

}  // namespace plumb
