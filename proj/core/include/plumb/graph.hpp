#pragma once

// Plumbing graphs: weighted trees (forests) with integer Euler numbers.
//
// Vertex identifiers are stable small integers that survive moves: deleting a
// vertex never renumbers the others, and newly created vertices get fresh ids.
// This is what makes move logs replayable.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plumb/errors.hpp"

namespace plumb {

using VertexId = int;
using Weight = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;  // always stored with first < second

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

class PlumbingGraph {
public:
    PlumbingGraph() = default;

    // --- construction -------------------------------------------------------
    VertexId add_vertex(Weight w) {
        VertexId id = next_id_++;
        weights_[id] = w;
        return id;
    }

    // Adds a vertex with a caller-chosen id (must be unused).
    void add_vertex_with_id(VertexId id, Weight w) {
        if (weights_.count(id))
            throw IndexError("vertex id already in use: " + std::to_string(id));
        weights_[id] = w;
        if (id >= next_id_) next_id_ = id + 1;
    }

    void add_edge(VertexId a, VertexId b) {
        if (a == b) throw CycleError("self-loop at vertex " + std::to_string(a));
        check_vertex(a);
        check_vertex(b);
        Edge e = make_edge(a, b);
        if (edges_.count(e))
            throw DuplicateEdgeError("duplicate edge " + std::to_string(a) + "-" +
                                     std::to_string(b));
        if (connected(a, b))
            throw CycleError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                             " would close a cycle");
        edges_.insert(e);
    }

    void remove_vertex(VertexId v) {
        check_vertex(v);
        for (auto it = edges_.begin(); it != edges_.end();) {
            if (it->first == v || it->second == v)
                it = edges_.erase(it);
            else
                ++it;
        }
        weights_.erase(v);
        labels_.erase(v);
    }

    void remove_edge(VertexId a, VertexId b) {
        Edge e = make_edge(a, b);
        auto it = edges_.find(e);
        if (it == edges_.end())
            throw IndexError("no such edge " + std::to_string(a) + "-" +
                             std::to_string(b));
        edges_.erase(it);
    }

    void set_weight(VertexId v, Weight w) {
        check_vertex(v);
        weights_[v] = w;
    }

    void set_label(VertexId v, std::string label) {
        check_vertex(v);
        labels_[v] = std::move(label);
    }

    // --- queries ------------------------------------------------------------
    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }

    bool has_vertex(VertexId v) const { return weights_.count(v) != 0; }

    Weight weight(VertexId v) const {
        check_vertex(v);
        return weights_.at(v);
    }

    std::optional<std::string> label(VertexId v) const {
        auto it = labels_.find(v);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    bool has_edge(VertexId a, VertexId b) const {
        return edges_.count(make_edge(a, b)) != 0;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(weights_.size());
        for (const auto& [v, w] : weights_) out.push_back(v);
        return out;
    }

    const std::set<Edge>& edges() const { return edges_; }

    std::vector<VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        std::vector<VertexId> out;
        for (const Edge& e : edges_) {
            if (e.first == v) out.push_back(e.second);
            else if (e.second == v) out.push_back(e.first);
        }
        return out;
    }

    int valence(VertexId v) const {
        check_vertex(v);
        int d = 0;
        for (const Edge& e : edges_)
            if (e.first == v || e.second == v) ++d;
        return d;
    }

    bool is_connected() const;

    // --- equality up to identical ids/weights/edges (not isomorphism) -------
    bool operator==(const PlumbingGraph& o) const {
        return weights_ == o.weights_ && edges_ == o.edges_;
    }

private:
    void check_vertex(VertexId v) const {
        if (!weights_.count(v))
            throw IndexError("no such vertex: " + std::to_string(v));
    }

    bool connected(VertexId a, VertexId b) const;  // path exists a..b?

    std::map<VertexId, Weight> weights_;
    std::set<Edge> edges_;
    std::map<VertexId, std::string> labels_;
    VertexId next_id_ = 0;
};

// Builds a graph from parallel arrays: vertex i gets weight vertex_weights[i]
// and id i. Throws CycleError / DuplicateEdgeError / IndexError.
PlumbingGraph build_graph(const std::vector<Weight>& vertex_weights,
                          const std::vector<std::pair<int, int>>& edge_list);

// Structural classification (valence census).
struct Classification {
    std::vector<VertexId> node_ids;  // valence >= 3
    int branch_count = 0;            // maximal chains incident to nodes
    bool is_linear = false;          // max valence <= 2
    bool is_star = false;            // exactly one node, or <= 2 vertices
};

// Requires g connected and nonempty; throws EmptyGraphError / DisconnectedError.
Classification classify(const PlumbingGraph& g);

}  // namespace plumb
