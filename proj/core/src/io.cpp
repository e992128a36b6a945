#include "plumb/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace plumb {

namespace {

std::string strip_comments(const std::string& content) {
    std::string out;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

PlumbingGraph parse_graph_text(const std::string& content) {
    std::istringstream in(strip_comments(content));
    std::vector<Weight> weights;
    std::vector<std::pair<int, int>> edges;
    bool saw_vertices = false;
    std::string tok;
    enum { None, Vertices, Edges } section = None;
    while (in >> tok) {
        if (tok == "vertices:") {
            section = Vertices;
            saw_vertices = true;
            continue;
        }
        if (tok == "edges:") {
            section = Edges;
            continue;
        }
        if (section == Vertices) {
            try {
                weights.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw ParseError("bad weight token: '" + tok + "'");
            }
        } else if (section == Edges) {
            int i, j;
            char dash;
            std::istringstream ts(tok);
            if (!(ts >> i >> dash >> j) || dash != '-' || !ts.eof() || i < 0 || j < 0)
                throw ParseError("bad edge token: '" + tok + "'");
            edges.emplace_back(i, j);
        } else {
            throw ParseError("unexpected token before 'vertices:': '" + tok + "'");
        }
    }
    if (!saw_vertices) throw ParseError("missing 'vertices:' line");
    try {
        return build_graph(weights, edges);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

PlumbingGraph parse_graph_json(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("weights") || !j.contains("edges"))
        throw ParseError("JSON graph needs \"weights\" and \"edges\" keys");
    std::vector<Weight> weights;
    std::vector<std::pair<int, int>> edges;
    try {
        for (const auto& w : j.at("weights")) weights.push_back(w.get<Weight>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a 2-element array");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON graph: ") + e.what());
    }
    try {
        return build_graph(weights, edges);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

PlumbingGraph parse_graph(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(content);
        break;
    }
    return parse_graph_text(content);
}

PlumbingGraph read_graph_file(const std::string& path) {
    std::string content;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        content = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open file: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        content = ss.str();
    }
    return parse_graph(content);
}

std::string serialize_graph_json(const PlumbingGraph& g) {
    std::vector<VertexId> vs = g.vertices();
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);

    nlohmann::json j;
    j["weights"] = nlohmann::json::array();
    for (VertexId v : vs) j["weights"].push_back(g.weight(v));
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({index.at(e.first), index.at(e.second)});
    return j.dump();
}

std::string serialize_graph_text(const PlumbingGraph& g) {
    std::vector<VertexId> vs = g.vertices();
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);

    std::ostringstream out;
    out << "vertices:";
    for (VertexId v : vs) out << ' ' << g.weight(v);
    out << "\nedges:";
    for (const Edge& e : g.edges())
        out << ' ' << index.at(e.first) << '-' << index.at(e.second);
    out << '\n';
    return out.str();
}

}  // namespace plumb
