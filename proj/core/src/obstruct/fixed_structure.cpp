#include "tsg/obstruct/fixed_structure.hpp"

#include "tsg/common/error.hpp"

namespace tsg::obstruct {

FixedStructure fixed_structure(const Permutation& alpha, const Graph& g)
{
    if (!g.is_automorphism(alpha)) {
        throw InputError(alpha.to_string() + " is not an automorphism of the graph");
    }
    FixedStructure f;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (alpha(static_cast<Point>(v)) == v) {
            f.fixed_vertices.push_back(static_cast<Point>(v));
        }
    }
    for (const auto& e : g.edges()) {
        const auto [a, b] = e;
        if (alpha(a) == a && alpha(b) == b) {
            f.fixed_edges.push_back(e);
        } else if (alpha(a) == b && alpha(b) == a) {
            f.inverted_edges.push_back(e);
        }
    }
    return f;
}

Graph fixed_graph(const FixedStructure& f, const Graph& g)
{
    std::vector<std::string> vs;
    for (Point p : f.fixed_vertices) {
        vs.push_back(g.label(p));
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : f.fixed_edges) {
        es.emplace_back(g.label(a), g.label(b));
    }
    return Graph::make(std::move(vs), es);
}

nlohmann::ordered_json to_json(const FixedStructure& f, const Graph& g)
{
    nlohmann::ordered_json out;
    out["fixed_vertices"] = nlohmann::ordered_json::array();
    for (Point p : f.fixed_vertices) {
        out["fixed_vertices"].push_back(g.label(p));
    }
    auto edges = [&](const std::vector<Edge>& es) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [a, b] : es) {
            arr.push_back({g.label(a), g.label(b)});
        }
        return arr;
    };
    out["fixed_edges"] = edges(f.fixed_edges);
    out["inverted_edges"] = edges(f.inverted_edges);
    return out;
}

}  // namespace tsg::obstruct
