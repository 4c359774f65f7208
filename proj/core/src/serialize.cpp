#include "chowdeg/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace chowdeg {

std::string to_dot(const LoadedTree& t) {
    std::ostringstream os;
    os << "graph loaded_tree {\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::string labels = t.labels().render(t.labeling(v));
        os << "  v" << v << " [label=\"{" << labels << "}\"];\n";
    }
    for (const LoadedTree::Edge& e : t.edges()) {
        os << "  v" << e.u << " -- v" << e.v;
        if (e.mult != 1)
            os << " [label=\"" << e.mult << "\", penwidth=" << e.mult << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const RedundancyForest& f) {
    std::ostringstream os;
    os << "graph redundancy_forest {\n";
    for (size_t i = 0; i < f.nodes.size(); ++i) {
        const RedundancyForest::Node& node = f.nodes[i];
        bool from_vertex = node.origin == RedundancyForest::Origin::Vertex;
        os << "  n" << i << " [label=\"" << node.weight << "\", shape="
           << (from_vertex ? "circle" : "square") << ", tooltip=\""
           << (from_vertex ? "vertex " : "edge ") << node.origin_id << "\"];\n";
    }
    for (const auto& [a, b] : f.edges)
        os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json_string(const LoadedTree& t) {
    nlohmann::json j;
    j["labels"] = t.labels().labels();
    auto& vertices = j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < t.vertex_count(); ++v)
        vertices.push_back(t.labels().labels_of(t.labeling(v)));
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const LoadedTree::Edge& e : t.edges())
        edges.push_back({e.u, e.v, e.mult});
    return j.dump();
}

LoadedTree loaded_tree_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    try {
        LabelSet ls(j.at("labels").get<std::vector<int>>());
        std::vector<Bits> labeling;
        for (const auto& entry : j.at("vertices"))
            labeling.push_back(ls.bits_of(entry.get<std::vector<int>>()));
        std::vector<LoadedTree::Edge> edges;
        for (const auto& entry : j.at("edges")) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("edges must be [u, v, multiplicity] triples");
            edges.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
        }
        return LoadedTree(ls, std::move(labeling), std::move(edges));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("unexpected JSON shape: ") + ex.what());
    }
}

} // namespace chowdeg
