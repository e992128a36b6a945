#include "plumb/graph.hpp"

#include <algorithm>
#include <queue>

namespace plumb {

bool PlumbingGraph::connected(VertexId a, VertexId b) const {
    if (a == b) return true;
    std::set<VertexId> seen{a};
    std::queue<VertexId> q;
    q.push(a);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (const Edge& e : edges_) {
            VertexId u;
            if (e.first == v) u = e.second;
            else if (e.second == v) u = e.first;
            else continue;
            if (u == b) return true;
            if (seen.insert(u).second) q.push(u);
        }
    }
    return false;
}

bool PlumbingGraph::is_connected() const {
    if (weights_.size() <= 1) return true;
    VertexId start = weights_.begin()->first;
    std::set<VertexId> seen{start};
    std::queue<VertexId> q;
    q.push(start);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (const Edge& e : edges_) {
            VertexId u;
            if (e.first == v) u = e.second;
            else if (e.second == v) u = e.first;
            else continue;
            if (seen.insert(u).second) q.push(u);
        }
    }
    return seen.size() == weights_.size();
}

PlumbingGraph build_graph(const std::vector<Weight>& vertex_weights,
                          const std::vector<std::pair<int, int>>& edge_list) {
    PlumbingGraph g;
    for (Weight w : vertex_weights) g.add_vertex(w);
    const int n = static_cast<int>(vertex_weights.size());
    for (const auto& [i, j] : edge_list) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw IndexError("edge index out of range: " + std::to_string(i) + "-" +
                             std::to_string(j));
        g.add_edge(i, j);  // add_edge rejects cycles, loops, duplicates
    }
    return g;
}

Classification classify(const PlumbingGraph& g) {
    if (g.empty()) throw EmptyGraphError("classify: empty graph");
    if (!g.is_connected()) throw DisconnectedError("classify: graph not connected");

    Classification c;
    std::set<VertexId> nodes;
    int max_val = 0;
    for (VertexId v : g.vertices()) {
        int d = g.valence(v);
        max_val = std::max(max_val, d);
        if (d >= 3) {
            nodes.insert(v);
            c.node_ids.push_back(v);
        }
    }
    c.is_linear = max_val <= 2;
    c.is_star = nodes.size() == 1 || g.size() <= 2;

    if (nodes.empty()) {
        c.branch_count = 0;
        return c;
    }
    // A branch is a maximal linear chain attached to at least one node; a chain
    // joining two nodes (including a bare node-node edge) counts once.
    int branches = 0;
    for (const Edge& e : g.edges())
        if (nodes.count(e.first) && nodes.count(e.second)) ++branches;
    std::set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (nodes.count(s) || seen.count(s)) continue;
        // flood the chain component of s in (g minus nodes)
        bool touches = false;
        std::queue<VertexId> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : g.neighbors(v)) {
                if (nodes.count(u)) touches = true;
                else if (seen.insert(u).second) q.push(u);
            }
        }
        if (touches) ++branches;
    }
    c.branch_count = branches;
    return c;
}

}  // namespace plumb
