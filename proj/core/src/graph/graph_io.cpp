#include "tsg/graph/graph_io.hpp"

#include "tsg/common/error.hpp"

#include <fstream>
#include <sstream>

namespace tsg::graph {

Graph graph_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
        throw InputError("graph document needs \"vertices\" and \"edges\"");
    }
    const auto& vs = doc.at("vertices");
    const auto& es = doc.at("edges");
    if (!vs.is_array() || !es.is_array()) {
        throw InputError("\"vertices\" and \"edges\" must be arrays");
    }
    std::vector<std::string> vertices;
    for (const auto& v : vs) {
        if (!v.is_string()) {
            throw InputError("vertex labels must be strings");
        }
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw InputError("each edge must be a pair of vertex labels");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::make(std::move(vertices), edges);
}

Graph parse_graph(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("graph is not valid JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read graph file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

nlohmann::ordered_json graph_to_json(const Graph& g)
{
    nlohmann::ordered_json out;
    out["vertices"] = nlohmann::ordered_json::array();
    for (const auto& l : g.domain()->labels()) {
        out["vertices"].push_back(l);
    }
    out["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edge_labels()) {
        out["edges"].push_back({a, b});
    }
    return out;
}

}  // namespace tsg::graph
