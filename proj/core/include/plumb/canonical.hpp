#pragma once

// Canonical codes for weighted forests.
//
// Each tree component is rooted at its centroid (or, for the two-centroid
// case, at whichever centroid yields the lexicographically smaller code) and
// encoded AHU-style with vertex weights baked into the labels.  Two forests
// get equal codes iff they are isomorphic as weighted forests.

#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

struct CanonicalCode {
    std::string code;
    std::vector<VertexId> vertex_order;  // code position -> input vertex id
};

CanonicalCode canonical_code(const PlumbingGraph& g);

// Convenience: weighted-forest isomorphism test.
inline bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
    return canonical_code(a).code == canonical_code(b).code;
}

}  // namespace plumb
