#include "plumb/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace plumb {
namespace {

struct Encoder {
    const PlumbingGraph& g;
    std::map<VertexId, std::vector<VertexId>> adj;

    explicit Encoder(const PlumbingGraph& graph) : g(graph) {
        for (VertexId v : g.vertices()) adj[v];  // ensure isolated vertices appear
        for (const Edge& e : g.edges()) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    }

    // rooted AHU code; also records the visit order matching the code layout
    std::string encode(VertexId v, VertexId parent,
                       std::vector<VertexId>* order) const {
        std::vector<std::pair<std::string, VertexId>> kids;
        for (VertexId u : adj.at(v))
            if (u != parent) kids.emplace_back(encode(u, v, nullptr), u);
        std::sort(kids.begin(), kids.end());
        std::string code = "(" + std::to_string(g.weight(v));
        if (order) order->push_back(v);
        for (auto& [kc, ku] : kids) {
            if (order) {
                std::string again = encode(ku, v, order);  // replay for order
                code += again;
            } else {
                code += kc;
            }
        }
        code += ")";
        return code;
    }

    std::vector<VertexId> component(VertexId s) const {
        std::vector<VertexId> comp{s};
        std::map<VertexId, bool> seen{{s, true}};
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId u : adj.at(comp[i]))
                if (!seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        return comp;
    }

    // centroid(s) of the tree spanned by comp
    std::vector<VertexId> centroids(const std::vector<VertexId>& comp) const {
        const std::size_t n = comp.size();
        std::map<VertexId, std::size_t> sub;
        std::map<VertexId, std::size_t> best;
        std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId p) {
            sub[v] = 1;
            std::size_t heaviest = 0;
            for (VertexId u : adj.at(v))
                if (u != p) {
                    dfs(u, v);
                    sub[v] += sub[u];
                    heaviest = std::max(heaviest, sub[u]);
                }
            best[v] = std::max(heaviest, n - sub[v]);
        };
        dfs(comp[0], -1);
        std::size_t m = n;
        for (VertexId v : comp) m = std::min(m, best[v]);
        std::vector<VertexId> out;
        for (VertexId v : comp)
            if (best[v] == m) out.push_back(v);
        return out;  // 1 or 2 vertices
    }
};

}  // namespace

CanonicalCode canonical_code(const PlumbingGraph& g) {
    if (g.empty()) return {"[]", {}};
    Encoder enc(g);

    std::map<VertexId, bool> done;
    std::vector<std::pair<std::string, std::vector<VertexId>>> comps;
    for (VertexId s : g.vertices()) {
        if (done[s]) continue;
        std::vector<VertexId> comp = enc.component(s);
        for (VertexId v : comp) done[v] = true;

        std::string bestCode;
        std::vector<VertexId> bestOrder;
        for (VertexId c : enc.centroids(comp)) {
            std::vector<VertexId> order;
            std::string code = enc.encode(c, -1, &order);
            if (bestCode.empty() || code < bestCode) {
                bestCode = std::move(code);
                bestOrder = std::move(order);
            }
        }
        comps.emplace_back(std::move(bestCode), std::move(bestOrder));
    }
    std::sort(comps.begin(), comps.end());

    CanonicalCode out;
    out.code = "[";
    for (auto& [code, order] : comps) {
        out.code += code;
        out.vertex_order.insert(out.vertex_order.end(), order.begin(), order.end());
    }
    out.code += "]";
    return out;
}

}  // namespace plumb
