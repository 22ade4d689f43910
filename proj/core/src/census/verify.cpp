#include "tsg/census/verify.hpp"

#include "tsg/census/analysis.hpp"
#include "tsg/common/error.hpp"
#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/canonical.hpp"
#include "tsg/graph/family.hpp"
#include "tsg/obstruct/filters.hpp"
#include "tsg/obstruct/k33_catalog.hpp"
#include "tsg/perm/iso_class.hpp"
#include "tsg/perm/subgroups.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

namespace tsg::census {

using Json = nlohmann::ordered_json;
using graph::Graph;
using perm::Permutation;

namespace {

constexpr const char* kFamilyCite = "Petersen family: the seven graphs reachable from K6 by delta-Y and Y-delta moves";
constexpr const char* kAutCite = "automorphism groups computed by partition-refinement backtracking";
constexpr const char* kK33Cite = "Aut(K3,3) = (D3 x D3):Z2, the wreath product of S3 by Z2";
constexpr const char* kClassCite = "realizable element classes of Aut(K3,3) (Nikkuni-Taniyama)";
constexpr const char* kK331Cite = "K3,3,1: fixed-set constraints for finite-order maps of the 3-sphere";

struct Outcome {
    bool pass = false;
    Json computed;
    Json expected;
};

struct FamilyRow {
    std::size_t vertices;
    std::size_t edges;
    std::vector<std::size_t> degrees;
    std::string name;
};

const std::vector<FamilyRow>& family_table()
{
    static const std::vector<FamilyRow> rows = {
        {6, 15, {5, 5, 5, 5, 5, 5}, "K6"},
        {7, 15, {6, 4, 4, 4, 4, 4, 4}, "K331"},
        {7, 15, {5, 5, 5, 4, 4, 4, 3}, "P7"},
        {8, 15, {4, 4, 4, 4, 4, 4, 3, 3}, "K44minus"},
        {8, 15, {5, 4, 4, 4, 4, 3, 3, 3}, "P8"},
        {9, 15, {4, 4, 4, 3, 3, 3, 3, 3, 3}, "P9"},
        {10, 15, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}, "P10"},
    };
    return rows;
}

struct TableRow {
    const char* iso;
    std::vector<const char*> generators;
};

// Generating sets on the K33 labels (parts {1,2,3} and {4,5,6}).
const std::vector<TableRow>& k33_generating_sets()
{
    static const std::vector<TableRow> rows = {
        {"(D3xD3):Z2", {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)", "(1 4)(2 5)(3 6)"}},
        {"(Z3xZ3):Z4", {"(1 2 3)", "(4 5 6)", "(1 4 2 5)(3 6)"}},
        {"(Z3xZ3):Z2", {"(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"}},
        {"D3xD3", {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"}},
        {"D3xZ3", {"(1 2)", "(1 2 3)", "(4 5 6)"}},
        {"Z3xZ3", {"(1 2 3)", "(4 5 6)"}},
        {"D6", {"(1 2)(5 6)", "(1 4 2 5 3 6)"}},
        {"D4", {"(1 2)", "(1 4 2 5)(3 6)"}},
        {"D3", {"(1 2)", "(1 2 3)"}},
        {"D2", {"(1 2)", "(4 5)"}},
        {"Z6", {"(1 4 2 5 3 6)"}},
        {"Z4", {"(1 4 2 5)(3 6)"}},
        {"Z3", {"(1 2 3)"}},
        {"Z2", {"(1 2)"}},
    };
    return rows;
}

const std::vector<std::string> kK33SubgroupIsos = {"1",     "Z2",     "Z3",         "Z4",         "Z6",
                                                   "D2",    "D3",     "D4",         "D6",         "Z3xZ3",
                                                   "D3xZ3", "D3xD3",  "(Z3xZ3):Z2", "(Z3xZ3):Z4", "(D3xD3):Z2"};

std::vector<std::string> sorted_names(std::vector<std::string> names)
{
    std::vector<IsoClassName> parsed;
    for (const auto& n : names) {
        parsed.push_back(IsoClassName::parse(n));
    }
    std::ranges::sort(parsed);
    names.clear();
    for (const auto& n : parsed) {
        names.push_back(n.str());
    }
    return names;
}

Json exclusions_for(const std::vector<IsoClassName>& names, const std::vector<Exclusion>& exclusions)
{
    auto j = Json::object();
    for (const auto& n : names) {
        auto it = std::ranges::find_if(exclusions, [&](const Exclusion& e) { return e.first == n; });
        j[n.str()] = it == exclusions.end() ? Json("not a subgroup class") : Json(it->second);
    }
    return j;
}

class Verifier {
public:
    explicit Verifier(const VerifyOptions& options) : options_(options) {}

    Report run()
    {
        family_items();
        aut_items();
        k33_items();
        filter_items();
        catalog_items();
        return std::move(report_);
    }

private:
    void check(std::string id, std::string claim, std::string cite, const std::function<Outcome()>& body)
    {
        ReportItem item{std::move(id), std::move(claim), std::move(cite), false, nullptr, nullptr};
        try {
            auto o = body();
            item.pass = o.pass;
            item.computed = std::move(o.computed);
            item.expected = std::move(o.expected);
        } catch (const std::exception& e) {
            item.pass = false;
            item.computed = Json{{"error", e.what()}};
        }
        report_.items.push_back(std::move(item));
    }

    Graph graph_for(const std::string& name) const
    {
        if (auto it = options_.graph_overrides.find(name); it != options_.graph_overrides.end()) {
            return it->second;
        }
        return graph::builtin_graph(name);
    }

    const perm::PermGroup& aut(const std::string& name)
    {
        auto it = auts_.find(name);
        if (it == auts_.end()) {
            it = auts_.emplace(name, graph::automorphism_group(graph_for(name))).first;
        }
        return it->second;
    }

    const obstruct::Obstructions& obstructions(const std::string& name)
    {
        auto it = obstructions_.find(name);
        if (it == obstructions_.end()) {
            it = obstructions_.emplace(name, std::make_unique<obstruct::Obstructions>(graph_for(name))).first;
        }
        return *it->second;
    }

    const GraphReport& analysis(const std::string& name)
    {
        auto it = analyses_.find(name);
        if (it == analyses_.end()) {
            AnalysisOptions ao;
            ao.full_pipeline = options_.full_pipeline;
            it = analyses_.emplace(name, analyze_graph(graph_for(name), name, ao, options_.catalog)).first;
        }
        return it->second;
    }

    const perm::SubgroupLattice& k33_lattice()
    {
        if (!k33_lattice_) {
            k33_lattice_ = perm::enumerate_subgroups(aut("K33"));
        }
        return *k33_lattice_;
    }

    Permutation parse(const std::string& graph_name, std::string_view text)
    {
        return perm::parse_permutation(text, graph_for(graph_name).domain());
    }

    void family_items();
    void aut_items();
    void k33_items();
    void filter_items();
    void catalog_items();

    const VerifyOptions& options_;
    Report report_;
    std::map<std::string, perm::PermGroup> auts_;
    std::map<std::string, std::unique_ptr<obstruct::Obstructions>> obstructions_;
    std::map<std::string, GraphReport> analyses_;
    std::optional<perm::SubgroupLattice> k33_lattice_;
};

void Verifier::family_items()
{
    std::optional<std::vector<graph::FamilyMember>> closure;
    auto members = [&]() -> const std::vector<graph::FamilyMember>& {
        if (!closure) {
            closure = graph::family_closure(graph_for("K6"));
        }
        return *closure;
    };

    check("family.closure-size", "the delta-Y / Y-delta closure of K6 has 7 isomorphism classes", kFamilyCite, [&] {
        const auto n = members().size();
        return Outcome{n == 7, n, 7};
    });

    check("family.invariants", "closure members have the Petersen-family (vertices, edges, degrees) table", kFamilyCite,
          [&] {
              using Row = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
              std::vector<Row> computed;
              for (const auto& m : members()) {
                  computed.emplace_back(m.vertex_count, m.edge_count, m.degree_sequence);
              }
              std::vector<Row> expected;
              for (const auto& row : family_table()) {
                  expected.emplace_back(row.vertices, row.edges, row.degrees);
              }
              std::ranges::sort(computed);
              std::ranges::sort(expected);
              auto rows = [](const std::vector<Row>& v) {
                  auto j = Json::array();
                  for (const auto& [n, e, d] : v) {
                      j.push_back({n, e, d});
                  }
                  return j;
              };
              return Outcome{computed == expected, rows(computed), rows(expected)};
          });

    check("family.seed-independence", "the closure of P10 has the same canonical forms as the closure of K6",
          kFamilyCite, [&] {
              std::set<std::string> a;
              std::set<std::string> b;
              for (const auto& m : members()) {
                  a.insert(m.form.str());
              }
              for (const auto& m : graph::family_closure(graph_for("P10"))) {
                  b.insert(m.form.str());
              }
              return Outcome{a == b, Json{{"from_P10", b.size()}, {"equal", a == b}}, Json{{"from_K6", a.size()}}};
          });

    for (const auto& row : family_table()) {
        check("family.member." + row.name, "built-in " + row.name + " is the closure member named " + row.name,
              kFamilyCite, [&] {
                  const auto form = graph::canonical_form(graph_for(row.name));
                  for (const auto& m : members()) {
                      if (m.form == form) {
                          return Outcome{m.canonical_name == row.name, m.canonical_name, row.name};
                      }
                  }
                  return Outcome{false, nullptr, row.name};
              });
    }
}

void Verifier::aut_items()
{
    const std::vector<std::tuple<std::string, std::size_t, std::string>> expected = {
        {"K33", 72, "(D3xD3):Z2"}, {"K331", 72, "(D3xD3):Z2"}, {"K44minus", 72, "(D3xD3):Z2"},
        {"P7", 36, "D3xD3"},       {"P8", 8, "D4"},            {"P9", 12, "D6"},
        {"K6", 720, "S6"},         {"P10", 120, "S5"},
    };
    for (const auto& [name, order, iso] : expected) {
        check("aut.order." + name, "|Aut(" + name + ")| = " + std::to_string(order), kAutCite, [&] {
            const auto n = aut(name).order();
            return Outcome{n == order, n, order};
        });
    }
    for (const auto& [name, order, iso] : expected) {
        check("aut.iso." + name, "Aut(" + name + ") is isomorphic to " + iso, kAutCite, [&] {
            const auto got = perm::identify_group(aut(name)).str();
            return Outcome{got == iso, got, iso};
        });
    }
    for (const std::string name : {"K331", "K44minus"}) {
        check("aut.restriction." + name, "restriction to the K3,3 core is a bijection Aut(" + name + ") -> Aut(K3,3)",
              "the K3,3 subgraph is invariant under every automorphism", [&] {
                  const auto& obs = obstructions(name);
                  if (!obs.core()) {
                      return Outcome{false, Json{{"core", nullptr}}, Json{{"image", 72}, {"injective", true}}};
                  }
                  std::set<Permutation> image;
                  const auto elements = aut(name).elements();
                  for (const auto& a : elements) {
                      image.insert(obs.restrict_to_k33(a));
                  }
                  const auto& target = obstruct::k33_automorphisms();
                  const bool inside =
                      std::ranges::all_of(image, [&](const Permutation& b) { return target.contains(b); });
                  const bool injective = image.size() == elements.size();
                  const bool onto = inside && image.size() == target.order();
                  return Outcome{injective && onto,
                                 Json{{"image", image.size()}, {"injective", injective}, {"inside", inside}},
                                 Json{{"image", target.order()}, {"injective", true}, {"inside", true}}};
              });
    }
}

void Verifier::k33_items()
{
    check("k33.conjugacy-classes", "Aut(K3,3) has 9 conjugacy classes of sizes 1,4,4,6,6,9,12,12,18", kK33Cite, [&] {
        std::vector<std::size_t> sizes;
        for (const auto& c : perm::conjugacy_classes(aut("K33"))) {
            sizes.push_back(c.size);
        }
        std::ranges::sort(sizes);
        const std::vector<std::size_t> expected = {1, 4, 4, 6, 6, 9, 12, 12, 18};
        return Outcome{sizes == expected, sizes, expected};
    });

    check("k33.element-class-catalog",
          "the positive and negative class representatives cover each nontrivial class of Aut(K3,3) once", kClassCite,
          [&] {
              const auto& group = aut("K33");
              const auto& cat = obstruct::k33_element_catalog();
              std::vector<Permutation> reps = cat.positive_classes;
              reps.insert(reps.end(), cat.negative_classes.begin(), cat.negative_classes.end());
              auto classes = perm::conjugacy_classes(group);
              std::vector<std::size_t> hits(classes.size(), 0);
              for (const auto& r : reps) {
                  const auto rr = perm::parse_permutation(r.to_string(), group.domain());
                  for (std::size_t i = 0; i < classes.size(); ++i) {
                      for (const auto& g : group.elements()) {
                          if (g * rr * g.inverse() == classes[i].representative) {
                              ++hits[i];
                              break;
                          }
                      }
                  }
              }
              auto computed = Json::object();
              bool ok = true;
              for (std::size_t i = 0; i < classes.size(); ++i) {
                  const std::size_t want = classes[i].representative.is_identity() ? 0 : 1;
                  ok = ok && hits[i] == want;
                  computed[classes[i].representative.to_string()] = hits[i];
              }
              return Outcome{ok && classes.size() == 9, computed, Json{{"classes", 9}, {"hits_per_class", 1}}};
          });

    check("k33.subgroup-isos", "Aut(K3,3) has subgroups of exactly 15 isomorphism types", kK33Cite, [&] {
        auto computed = names_json(k33_lattice().iso_names());
        const auto expected = sorted_names(kK33SubgroupIsos);
        return Outcome{computed == Json(expected), computed, expected};
    });

    check("k33.subgroup-absent", "S4, A4, Z2xZ4 and Z2xZ2xZ2 are not subgroups of Aut(K3,3)", kK33Cite, [&] {
        auto present = Json::array();
        const auto isos = k33_lattice().iso_names();
        for (const char* n : {"S4", "A4", "Z2xZ4", "Z2xZ2xZ2"}) {
            if (std::ranges::find(isos, IsoClassName::parse(n)) != isos.end()) {
                present.push_back(n);
            }
        }
        return Outcome{present.empty(), present, Json::array()};
    });

    check("k33.order-three-commute", "the 8 elements of order 3 in Aut(K3,3) pairwise commute", kK33Cite, [&] {
        std::vector<Permutation> threes;
        for (const auto& g : aut("K33").elements()) {
            if (g.order() == 3) {
                threes.push_back(g);
            }
        }
        bool commute = true;
        for (const auto& a : threes) {
            for (const auto& b : threes) {
                commute = commute && a * b == b * a;
            }
        }
        return Outcome{threes.size() == 8 && commute, Json{{"count", threes.size()}, {"commute", commute}},
                       Json{{"count", 8}, {"commute", true}}};
    });

    check("k33.order-four-centralizer", "an order-4 element of Aut(K3,3) commutes with no involution but its square",
          kK33Cite, [&] {
              std::size_t bad = 0;
              std::size_t fours = 0;
              const auto elements = aut("K33").elements();
              for (const auto& a : elements) {
                  if (a.order() != 4) {
                      continue;
                  }
                  ++fours;
                  for (const auto& b : elements) {
                      if (b.is_involution() && a * b == b * a && b != a * a) {
                          ++bad;
                      }
                  }
              }
              return Outcome{fours > 0 && bad == 0, Json{{"order_four", fours}, {"other_commuting_involutions", bad}},
                             Json{{"other_commuting_involutions", 0}}};
          });

    check("k33.commuting-involutions", "no seven involutions of Aut(K3,3) pairwise commute", kK33Cite, [&] {
        std::vector<Permutation> inv;
        for (const auto& g : aut("K33").elements()) {
            if (g.is_involution()) {
                inv.push_back(g);
            }
        }
        // Largest pairwise-commuting set, by extending cliques in index order.
        std::size_t best = 0;
        std::vector<std::size_t> clique;
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            best = std::max(best, clique.size());
            for (std::size_t i = from; i < inv.size(); ++i) {
                const bool ok = std::ranges::all_of(clique, [&](std::size_t j) { return inv[i] * inv[j] == inv[j] * inv[i]; });
                if (ok) {
                    clique.push_back(i);
                    grow(i + 1);
                    clique.pop_back();
                }
            }
        };
        grow(0);
        return Outcome{best < 7, Json{{"involutions", inv.size()}, {"largest_commuting_set", best}},
                       Json{{"largest_commuting_set", "< 7"}}};
    });

    for (const auto& row : k33_generating_sets()) {
        std::string gens;
        for (const char* g : row.generators) {
            gens += (gens.empty() ? "" : ", ") + std::string(g);
        }
        check(std::string("k33.generating-set.") + row.iso,
              "<" + gens + "> is a subgroup of Aut(K3,3) isomorphic to " + row.iso, kK33Cite, [&] {
                  const auto& group = aut("K33");
                  std::vector<Permutation> ps;
                  for (const char* g : row.generators) {
                      ps.push_back(perm::parse_permutation(g, group.domain()));
                  }
                  const bool inside = std::ranges::all_of(ps, [&](const Permutation& p) { return group.contains(p); });
                  const auto h = perm::PermGroup(group.domain(), ps);
                  const auto iso = perm::identify_group(h).str();
                  return Outcome{inside && iso == row.iso, Json{{"iso", iso}, {"order", h.order()}, {"inside", inside}},
                                 Json{{"iso", row.iso}, {"inside", true}}};
              });
    }
}

void Verifier::filter_items()
{
    const auto& cat = obstruct::k33_element_catalog();
    for (const auto& rep : cat.positive_classes) {
        const auto text = rep.to_string();
        check("filter.K33.positive." + text, text + " passes the positive filters on K3,3", kClassCite, [&, text] {
            const auto v = obstructions("K33").positive_admissible(parse("K33", text));
            return Outcome{v.passed(), obstruct::to_json(v), "pass"};
        });
    }
    check("filter.K33.circle.(1 2)", "(1 2) fails the circle filter on K3,3", kClassCite, [&] {
        const auto v = obstructions("K33").circle_filter(parse("K33", "(1 2)"));
        return Outcome{!v.passed(), obstruct::to_json(v), "fail"};
    });
    for (const auto& rep : cat.negative_classes) {
        const auto text = rep.to_string();
        check("filter.K33.reversing." + text, text + " passes the reversing filter on K3,3", kClassCite, [&, text] {
            const auto v = obstructions("K33").reversing_filter(parse("K33", text));
            return Outcome{v.passed(), obstruct::to_json(v), "pass"};
        });
    }

    check("filter.K331.realizable.(1 2 3)", "(1 2 3) on K3,3,1 is not realizable: its fixed set contains a Y",
          kK331Cite, [&] {
              const auto v = obstructions("K331").realizable_admissible(parse("K331", "(1 2 3)"));
              const bool ok = !v.passed() && v.reason == obstruct::Reason::DegreeExceedsTwo;
              return Outcome{ok, obstruct::to_json(v), Json{{"status", "fail"}, {"reason", "degree-exceeds-two"}}};
          });

    check("filter.K331.positive.(1 4 2 5 3 6)",
          "(1 4 2 5 3 6) on K3,3,1 fails positively: its cube inverts {1,5}, which it does not preserve", kK331Cite,
          [&] {
              const auto v = obstructions("K331").positive_admissible(parse("K331", "(1 4 2 5 3 6)"));
              const Json want{{"k", 3}, {"edge", {"1", "5"}}};
              const bool ok = !v.passed() && v.reason == obstruct::Reason::MidpointCollision &&
                              v.witness.value("k", Json()) == want["k"] && v.witness.value("edge", Json()) == want["edge"];
              return Outcome{ok, obstruct::to_json(v),
                             Json{{"status", "fail"}, {"reason", "midpoint-collision"}, {"witness", want}}};
          });

    check("filter.K331.reversing.(1 4)(2 5)(3 6)",
          "(1 4)(2 5)(3 6) on K3,3,1 fails the reversing filter; no sphere coloring exists", kK331Cite, [&] {
              const auto alpha = parse("K331", "(1 4)(2 5)(3 6)");
              const auto v = obstructions("K331").reversing_filter(alpha);
              const bool exists = exhaustive_sphere_coloring_exists(alpha, graph_for("K331"));
              const bool ok = !v.passed() && v.reason == obstruct::Reason::ColoringInfeasible && !exists;
              return Outcome{ok, Json{{"verdict", obstruct::to_json(v)}, {"exhaustive_coloring_found", exists}},
                             Json{{"reason", "coloring-infeasible"}, {"exhaustive_coloring_found", false}}};
          });
}

void Verifier::catalog_items()
{
    std::vector<std::string> pipeline = {"K33", "K331", "K44minus", "P7", "P8", "P9"};
    std::vector<std::string> names = {"K33", "K331", "K44minus", "P7", "P8", "P9", "K6", "P10"};
    if (options_.full_pipeline) {
        pipeline = names;
    }
    const bool full = options_.full_pipeline;

    for (const auto& name : names) {
        const CatalogEntry* entry = find_entry(options_.catalog, name);
        const std::string cite = entry ? entry->cite : "catalog";
        check("catalog." + name + ".entry", "the catalog has an entry for " + name, cite,
              [&] { return Outcome{entry != nullptr, entry != nullptr, true}; });
        if (!entry) {
            continue;
        }
        const bool runs = std::ranges::find(pipeline, name) != pipeline.end();

        check("catalog." + name + ".subgroups", "every catalog group for " + name + " is a subgroup of Aut(" + name + ")",
              cite, [&] {
                  auto names_all = expected_total(*entry);
                  auto absent = Json::array();
                  if (runs) {
                      const auto& isos = analysis(name).subgroup_isos;
                      for (const auto& n : names_all) {
                          if (std::ranges::find(isos, n) == isos.end()) {
                              absent.push_back(n.str());
                          }
                      }
                  } else {
                      for (const auto& n : names_all) {
                          if (!perm::find_embedding(perm::catalog_group(n.str()).reference, aut(name))) {
                              absent.push_back(n.str());
                          }
                      }
                  }
                  return Outcome{absent.empty(), Json{{"not_subgroups", absent}}, Json{{"not_subgroups", Json::array()}}};
              });

        if (!runs) {
            continue;
        }
        const bool exact = !full || (name != "K6" && name != "P10");

        check("catalog." + name + ".positive-contained",
              "catalog positive groups for " + name + " survive the positive filters", cite, [&] {
                  const auto& r = analysis(name);
                  const auto& c = *r.positive_comparison;
                  return Outcome{c.missing.empty(),
                                 Json{{"candidates", names_json(c.computed)},
                                      {"missing", names_json(c.missing)},
                                      {"exclusions", exclusions_for(c.missing, r.tsg_plus_exclusions)}},
                                 names_json(c.expected)};
              });
        check("catalog." + name + ".realizable-contained",
              "catalog realizable groups for " + name + " survive the realizability filters", cite, [&] {
                  const auto& r = analysis(name);
                  const auto& c = *r.total_comparison;
                  return Outcome{c.missing.empty(),
                                 Json{{"candidates", names_json(c.computed)},
                                      {"missing", names_json(c.missing)},
                                      {"exclusions", exclusions_for(c.missing, r.tsg_exclusions)}},
                                 names_json(c.expected)};
              });
        if (!exact) {
            continue;
        }
        check("candidates." + name + ".tsg-plus",
              "positive candidate classes for " + name + " equal the catalog positive list plus the trivial group",
              cite, [&] {
                  const auto& r = analysis(name);
                  const auto& c = *r.positive_comparison;
                  return Outcome{c.outcome == "equal",
                                 Json{{"candidates", names_json(c.computed)},
                                      {"missing", names_json(c.missing)},
                                      {"extra", names_json(c.extra)},
                                      {"exclusions", exclusions_for(c.missing, r.tsg_plus_exclusions)}},
                                 names_json(c.expected)};
              });
        check("candidates." + name + ".tsg",
              "candidate classes for " + name + " equal both catalog lists plus the trivial group", cite, [&] {
                  const auto& r = analysis(name);
                  const auto& c = *r.total_comparison;
                  return Outcome{c.outcome == "equal",
                                 Json{{"candidates", names_json(c.computed)},
                                      {"missing", names_json(c.missing)},
                                      {"extra", names_json(c.extra)},
                                      {"exclusions", exclusions_for(c.missing, r.tsg_exclusions)}},
                                 names_json(c.expected)};
              });
    }
}

}  // namespace

std::size_t Report::passed() const
{
    return static_cast<std::size_t>(std::ranges::count_if(items, [](const ReportItem& i) { return i.pass; }));
}

const ReportItem* Report::find(std::string_view id) const
{
    auto it = std::ranges::find_if(items, [&](const ReportItem& i) { return i.id == id; });
    return it == items.end() ? nullptr : &*it;
}

Report verify_catalog(const VerifyOptions& options)
{
    return Verifier(options).run();
}

Json to_json(const Report& report)
{
    auto items = Json::array();
    for (const auto& i : report.items) {
        items.push_back({{"id", i.id},
                         {"claim", i.claim},
                         {"cite", i.cite},
                         {"status", i.pass ? "pass" : "fail"},
                         {"computed", i.computed},
                         {"expected", i.expected}});
    }
    return {{"items", items}, {"summary", {{"pass", report.passed()}, {"fail", report.failed()}}}};
}

std::string to_text(const Report& report)
{
    std::ostringstream out;
    for (const auto& i : report.items) {
        out << (i.pass ? "PASS " : "FAIL ") << i.id << ": " << i.claim << '\n';
        if (!i.pass) {
            out << "     computed: " << i.computed.dump() << '\n';
            out << "     expected: " << i.expected.dump() << '\n';
            out << "     cite: " << i.cite << '\n';
        }
    }
    out << report.passed() << " passed, " << report.failed() << " failed\n";
    return out.str();
}

bool exhaustive_sphere_coloring_exists(const Permutation& alpha, const Graph& g)
{
    std::vector<graph::Point> moved;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (alpha(static_cast<graph::Point>(v)) != v) {
            moved.push_back(static_cast<graph::Point>(v));
        }
    }
    if (moved.size() > 20) {
        throw LimitError("exhaustive coloring is limited to 20 moved vertices");
    }
    std::vector<int> side(g.vertex_count(), -1);
    for (std::uint32_t mask = 0; mask < (1U << moved.size()); ++mask) {
        for (std::size_t i = 0; i < moved.size(); ++i) {
            side[moved[i]] = static_cast<int>((mask >> i) & 1U);
        }
        bool ok = std::ranges::all_of(moved, [&](graph::Point v) { return side[alpha(v)] != side[v]; });
        for (const auto& [a, b] : g.edges()) {
            if (!ok) {
                break;
            }
            if (side[a] >= 0 && side[b] >= 0 && side[a] != side[b]) {
                ok = alpha(a) == b && alpha(b) == a;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace tsg::census
