#include "tsg/census/catalog.hpp"
#include "tsg/common/error.hpp"

#include <gtest/gtest.h>

namespace tsg::census {
namespace {

std::vector<std::string> strs(const std::vector<IsoClassName>& v)
{
    std::vector<std::string> out;
    for (const auto& n : v) {
        out.push_back(n.str());
    }
    return out;
}

TEST(Catalog, DefaultHasEightEntries)
{
    const auto& c = default_catalog();
    ASSERT_EQ(c.size(), 8U);
    std::vector<std::string> graphs;
    for (const auto& e : c) {
        graphs.push_back(e.graph);
        EXPECT_FALSE(e.cite.empty());
    }
    EXPECT_EQ(graphs, (std::vector<std::string>{"K33", "K6", "K331", "K44minus", "P7", "P8", "P9", "P10"}));
}

TEST(Catalog, K33Entry)
{
    const auto* e = find_entry(default_catalog(), "K33");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->positive.size(), 10U);
    EXPECT_EQ(strs(e->realizable_only), (std::vector<std::string>{"(D3xD3):Z2", "(Z3xZ3):Z4", "D4", "Z4"}));
    EXPECT_EQ(find_entry(default_catalog(), "K7"), nullptr);
}

TEST(Catalog, ParsesAliasesAndNormalizesNames)
{
    const auto c = parse_catalog(R"([{"graph": "k3,3,1", "positive": ["Z2xZ2"], "realizable_only": [], "cite": "x"}])");
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c[0].graph, "K331");
    EXPECT_EQ(strs(c[0].positive), (std::vector<std::string>{"D2"}));
}

TEST(Catalog, RejectsBadDocuments)
{
    auto message = [](std::string_view text) -> std::string {
        try {
            (void)parse_catalog(text);
        } catch (const InputError& e) {
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message("").find("no entries"), std::string::npos);
    EXPECT_NE(message("  \n").find("no entries"), std::string::npos);
    EXPECT_NE(message("[]").find("no entries"), std::string::npos);
    EXPECT_NE(message("{}").find("array"), std::string::npos);
    EXPECT_NE(message("[1]").find("objects"), std::string::npos);
    EXPECT_NE(message("[{").find("JSON"), std::string::npos);
    const std::string base = R"("positive": [], "realizable_only": [], "cite": "c")";
    EXPECT_NE(message(R"([{"graph": "K7", )" + base + "}]").find("unknown graph"), std::string::npos);
    EXPECT_NE(message(R"([{"graph": "P8", "extra": 1, )" + base + "}]").find("unknown field"), std::string::npos);
    EXPECT_NE(message(R"([{"graph": "P8", "positive": []}])").find("missing"), std::string::npos);
    EXPECT_NE(message(R"([{"graph": "P8", )" + base + R"(}, {"graph": "p8", )" + base + "}]").find("duplicate"),
              std::string::npos);
    EXPECT_NE(
        message(R"([{"graph": "P8", "positive": ["Q8"], "realizable_only": [], "cite": "c"}])").find("Q8"),
        std::string::npos);
    EXPECT_NE(
        message(R"([{"graph": "P8", "positive": ["Z2"], "realizable_only": ["Z2"], "cite": "c"}])").find("both"),
        std::string::npos);
    EXPECT_NE(message(R"([{"graph": "P8", "positive": "Z2", "realizable_only": [], "cite": "c"}])").find("array"),
              std::string::npos);
    EXPECT_THROW((void)load_catalog_file("/nonexistent/catalog.json"), InputError);
}

TEST(Catalog, DefaultDocumentRoundTrips)
{
    const auto again = parse_catalog(default_catalog_json());
    ASSERT_EQ(again.size(), default_catalog().size());
    for (std::size_t i = 0; i < again.size(); ++i) {
        EXPECT_EQ(again[i].graph, default_catalog()[i].graph);
        EXPECT_EQ(strs(again[i].positive), strs(default_catalog()[i].positive));
    }
}

}  // namespace
}  // namespace tsg::census
