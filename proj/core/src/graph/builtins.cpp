#include "tsg/graph/builtins.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/moves.hpp"

#include <algorithm>
#include <cctype>

namespace tsg::graph {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> labels(std::initializer_list<const char*> ls)
{
    return {ls.begin(), ls.end()};
}

void add_complete_bipartite(EdgeList& es, const std::vector<std::string>& left, const std::vector<std::string>& right)
{
    for (const auto& a : left) {
        for (const auto& b : right) {
            es.emplace_back(a, b);
        }
    }
}

Graph k33()
{
    EdgeList es;
    add_complete_bipartite(es, labels({"1", "2", "3"}), labels({"4", "5", "6"}));
    return Graph::make(labels({"1", "2", "3", "4", "5", "6"}), es);
}

Graph k6()
{
    EdgeList es;
    for (int a = 1; a <= 6; ++a) {
        for (int b = a + 1; b <= 6; ++b) {
            es.emplace_back(std::to_string(a), std::to_string(b));
        }
    }
    return Graph::make(labels({"1", "2", "3", "4", "5", "6"}), es);
}

Graph k331()
{
    EdgeList es;
    add_complete_bipartite(es, labels({"1", "2", "3"}), labels({"4", "5", "6"}));
    add_complete_bipartite(es, labels({"7"}), labels({"1", "2", "3", "4", "5", "6"}));
    return Graph::make(labels({"1", "2", "3", "4", "5", "6", "7"}), es);
}

// K4,4 on {1,2,3,v} / {4,5,6,w} minus the edge {v,w}.
Graph k44minus()
{
    EdgeList es;
    add_complete_bipartite(es, labels({"1", "2", "3"}), labels({"4", "5", "6"}));
    add_complete_bipartite(es, labels({"v"}), labels({"4", "5", "6"}));
    add_complete_bipartite(es, labels({"w"}), labels({"1", "2", "3"}));
    return Graph::make(labels({"1", "2", "3", "4", "5", "6", "v", "w"}), es);
}

Graph p7()
{
    EdgeList es{{"1", "2"}, {"1", "3"}, {"2", "3"}};
    add_complete_bipartite(es, labels({"1", "2", "3"}), labels({"a", "b", "c"}));
    add_complete_bipartite(es, labels({"w"}), labels({"a", "b", "c"}));
    return Graph::make(labels({"1", "2", "3", "a", "b", "c", "w"}), es);
}

// Delta-Y on the triangle {1,2,a} of P7, then renamed so the unique degree-5
// vertex is 1 and its degree-3 neighbor is 8.
Graph p8()
{
    const Graph g = p7();
    const Graph moved = delta_y(g, MoveSite{MoveKind::TriangleToY, {"1", "2", "a"}, {}});
    const std::string fresh = fresh_label(g);
    return moved.relabeled({{"3", "1"}, {"1", "2"}, {"c", "3"}, {"b", "4"}, {"2", "5"}, {fresh, "6"}, {"w", "7"},
                            {"a", "8"}});
}

Graph p9()
{
    EdgeList es{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"1", "6"},
                {"a", "b"}, {"b", "c"}, {"a", "c"},
                {"a", "1"}, {"a", "4"}, {"b", "2"}, {"b", "5"}, {"c", "3"}, {"c", "6"}};
    return Graph::make(labels({"1", "2", "3", "4", "5", "6", "a", "b", "c"}), es);
}

Graph p10()
{
    EdgeList es{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"},
                {"1", "6"}, {"2", "7"}, {"3", "8"}, {"4", "9"}, {"5", "10"},
                {"6", "8"}, {"8", "10"}, {"7", "10"}, {"7", "9"}, {"6", "9"}};
    return Graph::make(labels({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"}), es);
}

std::string normalize(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == ',' || c == '_' || c == ' ' || c == '{' || c == '}') {
            continue;
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

std::span<const std::string> builtin_names()
{
    static const std::vector<std::string> names = {"K33", "K6", "K331", "K44minus", "P7", "P8", "P9", "P10"};
    return names;
}

std::optional<std::string> canonical_builtin_name(std::string_view alias)
{
    const std::string key = normalize(alias);
    if (key == "k44-" || key == "k44minus") {
        return "K44minus";
    }
    if (key == "petersen") {
        return "P10";
    }
    for (const auto& name : builtin_names()) {
        if (normalize(name) == key) {
            return name;
        }
    }
    return std::nullopt;
}

Graph builtin_graph(std::string_view name)
{
    const auto canonical = canonical_builtin_name(name);
    if (!canonical) {
        throw InputError("unknown graph '" + std::string(name) + "'");
    }
    const std::string& n = *canonical;
    if (n == "K33") {
        return k33();
    }
    if (n == "K6") {
        return k6();
    }
    if (n == "K331") {
        return k331();
    }
    if (n == "K44minus") {
        return k44minus();
    }
    if (n == "P7") {
        return p7();
    }
    if (n == "P8") {
        return p8();
    }
    if (n == "P9") {
        return p9();
    }
    return p10();
}

}  // namespace tsg::graph
