#include "tsg/census/catalog.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/builtins.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace tsg::census {

namespace {

constexpr std::string_view kDefaultCatalog = R"json([
  {
    "graph": "K33",
    "positive": ["D3xD3", "(Z3xZ3):Z2", "D3xZ3", "D6", "Z3xZ3", "D3", "Z6", "D2", "Z3", "Z2"],
    "realizable_only": ["(D3xD3):Z2", "(Z3xZ3):Z4", "D4", "Z4"],
    "cite": "K3,3: positive groups from Flapan-Lawrence; realizable-only groups D4, Z4, (Z3xZ3):Z4, (D3xD3):Z2 via negatively realizable element classes of Nikkuni-Taniyama"
  },
  {
    "graph": "K6",
    "positive": ["D6", "D5", "D3", "D2", "Z6", "Z5", "Z3", "Z2", "D3xD3", "D3xZ3", "Z3xZ3", "(Z3xZ3):Z2"],
    "realizable_only": ["D4", "Z4", "(D3xD3):Z2", "(Z3xZ3):Z4"],
    "cite": "K6: prior classification of topological symmetry groups of complete graphs (Flapan et al.)"
  },
  {
    "graph": "K331",
    "positive": ["D3", "D2", "Z3", "Z2"],
    "realizable_only": ["D4", "Z4"],
    "cite": "K3,3,1: 3-cycles force a fixed Y (no circle); 6-cycles force colliding edge midpoints; D4, Z4 only via the K3,3 subgraph's negative classes"
  },
  {
    "graph": "K44minus",
    "positive": ["D6", "D3", "D2", "Z6", "Z3", "Z2"],
    "realizable_only": ["D4", "Z4"],
    "cite": "K4,4 minus an edge: automorphisms restrict isomorphically to K3,3; D4, Z4 only via the order-4 class (1425)(36)(vw)"
  },
  {
    "graph": "P7",
    "positive": ["D3", "Z3", "Z2"],
    "realizable_only": ["D2"],
    "cite": "P7: Aut is D3xD3; positive groups D3, Z3, Z2; Z2xZ2 only with an orientation-reversing element"
  },
  {
    "graph": "P8",
    "positive": ["Z2"],
    "realizable_only": [],
    "cite": "P8: Aut is D4; only Z2 survives, since a reflection through the sphere contradicts the swap of the 4-cycle edges"
  },
  {
    "graph": "P9",
    "positive": ["D6", "D3", "D2", "Z6", "Z3", "Z2"],
    "realizable_only": [],
    "cite": "P9: Aut is D6 and every subgroup is positively realizable"
  },
  {
    "graph": "P10",
    "positive": ["D5", "D3", "Z5", "Z3", "Z2"],
    "realizable_only": ["Z5:Z4", "Z4"],
    "cite": "Petersen graph: prior classification (Chambers et al.)"
  }
]
)json";

std::vector<IsoClassName> parse_names(const nlohmann::json& arr, const std::string& field, const std::string& graph)
{
    if (!arr.is_array()) {
        throw InputError("catalog entry '" + graph + "': \"" + field + "\" must be an array");
    }
    std::vector<IsoClassName> out;
    for (const auto& item : arr) {
        if (!item.is_string()) {
            throw InputError("catalog entry '" + graph + "': group names must be strings");
        }
        auto name = IsoClassName::parse(item.get<std::string>());
        if (std::ranges::find(out, name) != out.end()) {
            throw InputError("catalog entry '" + graph + "': group '" + name.str() + "' listed twice");
        }
        out.push_back(std::move(name));
    }
    return out;
}

}  // namespace

std::string_view default_catalog_json()
{
    return kDefaultCatalog;
}

const Catalog& default_catalog()
{
    static const Catalog catalog = parse_catalog(kDefaultCatalog);
    return catalog;
}

Catalog parse_catalog(std::string_view text)
{
    if (std::ranges::all_of(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; })) {
        throw InputError("catalog has no entries");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw InputError("catalog must be a JSON array of entries");
    }
    if (doc.empty()) {
        throw InputError("catalog has no entries");
    }
    static const std::set<std::string> kFields = {"graph", "positive", "realizable_only", "cite"};
    Catalog catalog;
    for (const auto& e : doc) {
        if (!e.is_object()) {
            throw InputError("catalog entries must be objects");
        }
        for (const auto& [key, value] : e.items()) {
            if (!kFields.contains(key)) {
                throw InputError("catalog entry has unknown field \"" + key + "\"");
            }
        }
        for (const auto& key : kFields) {
            if (!e.contains(key)) {
                throw InputError("catalog entry is missing \"" + key + "\"");
            }
        }
        if (!e["graph"].is_string() || !e["cite"].is_string()) {
            throw InputError("catalog \"graph\" and \"cite\" must be strings");
        }
        const auto raw = e["graph"].get<std::string>();
        const auto graph = graph::canonical_builtin_name(raw);
        if (!graph) {
            throw InputError("catalog names unknown graph '" + raw + "'");
        }
        if (find_entry(catalog, *graph) != nullptr) {
            throw InputError("duplicate catalog entry for '" + *graph + "'");
        }
        CatalogEntry entry{*graph, parse_names(e["positive"], "positive", *graph),
                           parse_names(e["realizable_only"], "realizable_only", *graph), e["cite"].get<std::string>()};
        for (const auto& n : entry.positive) {
            if (std::ranges::find(entry.realizable_only, n) != entry.realizable_only.end()) {
                throw InputError("catalog entry '" + *graph + "' lists '" + n.str() + "' in both lists");
            }
        }
        catalog.push_back(std::move(entry));
    }
    return catalog;
}

Catalog load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read catalog file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

const CatalogEntry* find_entry(const Catalog& catalog, std::string_view graph)
{
    for (const auto& e : catalog) {
        if (e.graph == graph) {
            return &e;
        }
    }
    return nullptr;
}

}  // namespace tsg::census
