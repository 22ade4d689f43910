#include "tsg/common/error.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/graph.hpp"
#include "tsg/graph/graph_io.hpp"

#include <gtest/gtest.h>

namespace tsg::graph {
namespace {

TEST(Graph, MakeValidates)
{
    EXPECT_THROW((void)Graph::make({"1", "2"}, {{"1", "3"}}), InputError);
    EXPECT_THROW((void)Graph::make({"1", "2"}, {{"1", "1"}}), InputError);
    EXPECT_THROW((void)Graph::make({"1", "2"}, {{"1", "2"}, {"2", "1"}}), InputError);
    EXPECT_THROW((void)Graph::make({"1", "1"}, {}), InputError);
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) {
        many.push_back(std::to_string(i));
    }
    EXPECT_THROW((void)Graph::make(many, {}), InputError);
}

TEST(Graph, Basics)
{
    const auto g = Graph::make({"a", "b", "c"}, {{"b", "a"}, {"c", "b"}});
    EXPECT_EQ(g.vertex_count(), 3U);
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_TRUE(g.adjacent(g.point("a"), g.point("b")));
    EXPECT_FALSE(g.adjacent(g.point("a"), g.point("c")));
    EXPECT_EQ(g.degree_sequence(), (std::vector<std::size_t>{2, 1, 1}));
    EXPECT_EQ(g.edge_labels(), (std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}}));
    EXPECT_THROW((void)g.point("z"), InputError);
    const auto h = g.induced(std::vector<std::string>{"a", "b"});
    EXPECT_EQ(h.edge_count(), 1U);
    const auto r = g.relabeled({{"a", "x"}, {"b", "y"}, {"c", "z"}});
    EXPECT_TRUE(r.adjacent(r.point("x"), r.point("y")));
    EXPECT_THROW((void)g.relabeled({{"a", "x"}}), InputError);
}

TEST(Builtins, SizesAndDegreeSequences)
{
    struct Row {
        const char* name;
        std::size_t v;
        std::size_t e;
    };
    for (const auto& [name, v, e] : {Row{"K33", 6, 9}, Row{"K6", 6, 15}, Row{"K331", 7, 15}, Row{"K44minus", 8, 15},
                                     Row{"P7", 7, 15}, Row{"P8", 8, 15}, Row{"P9", 9, 15}, Row{"P10", 10, 15}}) {
        const auto g = builtin_graph(name);
        EXPECT_EQ(g.vertex_count(), v) << name;
        EXPECT_EQ(g.edge_count(), e) << name;
    }
    EXPECT_EQ(builtin_graph("K331").degree_sequence(), (std::vector<std::size_t>{6, 4, 4, 4, 4, 4, 4}));
    EXPECT_EQ(builtin_graph("P8").degree_sequence(), (std::vector<std::size_t>{5, 4, 4, 4, 4, 3, 3, 3}));
}

TEST(Builtins, AliasesAreCaseInsensitive)
{
    EXPECT_EQ(canonical_builtin_name("k44minus"), "K44minus");
    EXPECT_EQ(canonical_builtin_name("K4,4-"), "K44minus");
    EXPECT_EQ(canonical_builtin_name("k44-"), "K44minus");
    EXPECT_EQ(canonical_builtin_name("k3,3,1"), "K331");
    EXPECT_EQ(canonical_builtin_name("p7"), "P7");
    EXPECT_EQ(canonical_builtin_name("Petersen"), "P10");
    EXPECT_FALSE(canonical_builtin_name("K7").has_value());
    EXPECT_THROW((void)builtin_graph("heawood"), InputError);
}

TEST(GraphIo, RoundTrip)
{
    for (const auto& name : builtin_names()) {
        const auto g = builtin_graph(name);
        const auto doc = graph_to_json(g);
        EXPECT_EQ(parse_graph(doc.dump()), g) << name;
    }
}

TEST(GraphIo, Rejects)
{
    EXPECT_THROW((void)parse_graph("{"), InputError);
    EXPECT_THROW((void)parse_graph(R"({"vertices": ["1"]})"), InputError);
    EXPECT_THROW((void)parse_graph(R"({"vertices": [1], "edges": []})"), InputError);
    EXPECT_THROW((void)parse_graph(R"({"vertices": ["1","2"], "edges": [["1"]]})"), InputError);
    EXPECT_THROW((void)parse_graph(R"({"vertices": ["1","2"], "edges": [["1","3"]]})"), InputError);
    EXPECT_THROW((void)load_graph_file("/nonexistent/graph.json"), InputError);
}

}  // namespace
}  // namespace tsg::graph
