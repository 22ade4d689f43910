#include "tsg/cli.hpp"

#include "tsg/census/analysis.hpp"
#include "tsg/census/catalog.hpp"
#include "tsg/census/verify.hpp"
#include "tsg/common/error.hpp"
#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/family.hpp"
#include "tsg/graph/graph_io.hpp"
#include "tsg/obstruct/filters.hpp"
#include "tsg/perm/iso_class.hpp"
#include "tsg/perm/subgroups.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <optional>

namespace tsg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string graph;
    std::string perm;
    std::string mode = "any";
    std::string format = "text";
    std::string catalog;
    bool full_pipeline = false;
    std::vector<std::string> overrides;
};

struct NamedGraph {
    std::string name;
    graph::Graph graph;
};

NamedGraph load_graph(const std::string& selector)
{
    if (selector.empty()) {
        throw InputError("--graph is required");
    }
    if (selector.front() == '@') {
        const auto path = selector.substr(1);
        auto g = graph::load_graph_file(path);
        return {path, std::move(g)};
    }
    const auto name = graph::canonical_builtin_name(selector);
    if (!name) {
        throw InputError("unknown graph '" + selector + "'");
    }
    return {*name, graph::builtin_graph(*name)};
}

census::Catalog load_catalog(const Options& o)
{
    std::string path = o.catalog;
    if (path.empty()) {
        if (const char* env = std::getenv("TSG_CATALOG"); env != nullptr) {
            path = env;
        }
    }
    return path.empty() ? census::default_catalog() : census::load_catalog_file(path);
}

Json strings(const std::vector<perm::Permutation>& ps)
{
    auto j = Json::array();
    for (const auto& p : ps) {
        j.push_back(p.to_string());
    }
    return j;
}

void emit(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

std::string join(const std::vector<perm::IsoClassName>& names)
{
    std::string s;
    for (const auto& n : names) {
        s += (s.empty() ? "" : ", ") + n.str();
    }
    return "{" + s + "}";
}

int cmd_aut(const Options& o, std::ostream& out)
{
    const auto [name, g] = load_graph(o.graph);
    const auto aut = graph::automorphism_group(g);
    const auto iso = perm::identify_group(aut);
    const auto classes = perm::conjugacy_classes(aut);
    const std::vector<perm::Permutation> gens(aut.generators().begin(), aut.generators().end());
    if (o.format == "json") {
        auto cj = Json::array();
        for (const auto& c : classes) {
            cj.push_back({{"representative", c.representative.to_string()}, {"size", c.size}});
        }
        emit(out, {{"order", aut.order()},
                   {"iso", iso.str()},
                   {"graph", name},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"generators", strings(gens)},
                   {"conjugacy_classes", cj}});
        return 0;
    }
    out << "graph: " << name << " (" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)\n";
    out << "order: " << aut.order() << "\niso: " << iso.str() << "\ngenerators:";
    for (const auto& p : gens) {
        out << ' ' << p.to_string();
    }
    out << "\nconjugacy classes (" << classes.size() << "):\n";
    for (const auto& c : classes) {
        out << "  " << c.size << "  " << c.representative.to_string() << '\n';
    }
    return 0;
}

int cmd_subgroups(const Options& o, std::ostream& out)
{
    const auto [name, g] = load_graph(o.graph);
    const auto aut = graph::automorphism_group(g);
    perm::SubgroupPolicy policy;
    if (o.full_pipeline) {
        policy.max_group_order = perm::kTableCap;
    }
    const auto lattice = perm::enumerate_subgroups(aut, policy);
    if (o.format == "json") {
        auto cj = Json::array();
        for (const auto& c : lattice.classes) {
            cj.push_back({{"iso", c.iso.str()},
                          {"order", c.order()},
                          {"conjugates", c.members.size()},
                          {"generators", strings(c.representative().generators)}});
        }
        auto names = Json::array();
        for (const auto& n : lattice.iso_names()) {
            names.push_back(n.str());
        }
        emit(out, {{"graph", name},
                   {"order", aut.order()},
                   {"subgroups", lattice.subgroup_count()},
                   {"conjugacy_classes", lattice.classes.size()},
                   {"iso_classes", names},
                   {"classes", cj}});
        return 0;
    }
    out << "graph: " << name << "\norder: " << aut.order() << "\nsubgroups: " << lattice.subgroup_count()
        << " in " << lattice.classes.size() << " conjugacy classes\n";
    for (const auto& c : lattice.classes) {
        out << "  " << c.order() << "  " << c.iso.str() << "  x" << c.members.size() << "  <";
        const auto& gens = c.representative().generators;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            out << (i ? ", " : "") << gens[i].to_string();
        }
        out << ">\n";
    }
    out << "iso classes: " << join(lattice.iso_names()) << '\n';
    return 0;
}

int cmd_family(const Options& o, std::ostream& out)
{
    const auto [name, g] = load_graph(o.graph.empty() ? std::string("K6") : o.graph);
    const auto members = graph::family_closure(g);
    if (o.format == "json") {
        auto mj = Json::array();
        for (const auto& m : members) {
            mj.push_back({{"name", m.canonical_name.empty() ? Json(nullptr) : Json(m.canonical_name)},
                          {"vertices", m.vertex_count},
                          {"edges", m.edge_count},
                          {"degree_sequence", m.degree_sequence},
                          {"canonical_form", m.form.str()},
                          {"provenance", m.provenance}});
        }
        emit(out, {{"seed", name}, {"count", members.size()}, {"members", mj}});
        return 0;
    }
    out << "seed: " << name << "\nmembers: " << members.size() << '\n';
    for (const auto& m : members) {
        out << "  " << (m.canonical_name.empty() ? "?" : m.canonical_name) << "  " << m.vertex_count << " vertices, "
            << m.edge_count << " edges, degrees [";
        for (std::size_t i = 0; i < m.degree_sequence.size(); ++i) {
            out << (i ? "," : "") << m.degree_sequence[i];
        }
        out << "]";
        if (!m.provenance.empty()) {
            out << "  via";
            for (const auto& step : m.provenance) {
                out << ' ' << step;
            }
        }
        out << '\n';
    }
    return 0;
}

int cmd_filter(const Options& o, std::ostream& out)
{
    const auto [name, g] = load_graph(o.graph);
    if (o.perm.empty()) {
        throw InputError("--perm is required");
    }
    const auto alpha = perm::parse_permutation(o.perm, g.domain());
    const obstruct::Obstructions obs(g);
    obstruct::Verdict verdict;
    if (o.mode == "positive") {
        verdict = obs.positive_admissible(alpha);
    } else if (o.mode == "reversing") {
        verdict = obs.reversing_admissible(alpha);
    } else {
        verdict = obs.realizable_admissible(alpha);
    }
    std::vector<std::pair<std::string, obstruct::Verdict>> parts = {
        {"circle", obs.circle_filter(alpha)},
        {"inversion-collision", obs.inversion_collision_filter(alpha)},
        {"reversing", obs.reversing_filter(alpha)},
    };
    if (obs.core()) {
        parts.emplace_back("restriction-positive",
                           obs.restriction_class_filter(alpha, obstruct::Orientation::Positive));
        parts.emplace_back("restriction-reversing",
                           obs.restriction_class_filter(alpha, obstruct::Orientation::Reversing));
    }
    if (o.format == "json") {
        auto pj = Json::object();
        for (const auto& [k, v] : parts) {
            pj[k] = obstruct::to_json(v);
        }
        auto vj = obstruct::to_json(verdict);
        Json j{{"graph", name}, {"perm", alpha.to_string()}, {"mode", o.mode}};
        for (const auto& [k, v] : vj.items()) {
            j[k] = v;
        }
        j["filters"] = pj;
        emit(out, j);
        return 0;
    }
    out << name << ' ' << alpha.to_string() << " [" << o.mode << "]: " << obstruct::summary(verdict) << '\n';
    if (!verdict.witness.empty()) {
        out << "witness: " << verdict.witness.dump() << '\n';
    }
    for (const auto& [k, v] : parts) {
        out << "  " << k << ": " << obstruct::summary(v) << '\n';
    }
    return 0;
}

int cmd_candidates(const Options& o, std::ostream& out)
{
    const auto [name, g] = load_graph(o.graph);
    const auto catalog = load_catalog(o);
    census::AnalysisOptions ao;
    ao.full_pipeline = o.full_pipeline;
    const auto report = census::analyze_graph(g, name, ao, catalog);
    if (o.format == "json") {
        emit(out, census::to_json(report));
        return 0;
    }
    out << "graph: " << report.graph << "\naut: order " << report.aut_order << ", " << report.aut_iso.str() << '\n';
    if (report.pipeline_skipped) {
        out << "pipeline-skipped (use --full-pipeline)\n";
        return 0;
    }
    out << "subgroup classes: " << join(report.subgroup_isos) << '\n';
    out << "TSG+ candidates: " << join(report.tsg_plus_candidates) << '\n';
    out << "TSG candidates: " << join(report.tsg_candidates) << '\n';
    for (const auto& [label, ex] :
         {std::pair{"TSG+", &report.tsg_plus_exclusions}, std::pair{"TSG", &report.tsg_exclusions}}) {
        for (const auto& [iso, reasons] : *ex) {
            out << "  excluded from " << label << ": " << iso.str() << " (";
            for (std::size_t i = 0; i < reasons.size(); ++i) {
                out << (i ? ", " : "") << reasons[i];
            }
            out << ")\n";
        }
    }
    if (report.positive_comparison) {
        out << "catalog TSG+: " << report.positive_comparison->outcome << '\n';
        out << "catalog TSG: " << report.total_comparison->outcome << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    census::VerifyOptions vo;
    vo.catalog = load_catalog(o);
    vo.full_pipeline = o.full_pipeline;
    for (const auto& spec : o.overrides) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq + 1 >= spec.size() || spec[eq + 1] != '@') {
            throw InputError("--override expects NAME=@path, got '" + spec + "'");
        }
        const auto name = graph::canonical_builtin_name(spec.substr(0, eq));
        if (!name) {
            throw InputError("unknown graph '" + spec.substr(0, eq) + "'");
        }
        vo.graph_overrides.insert_or_assign(*name, graph::load_graph_file(spec.substr(eq + 2)));
    }
    const auto report = census::verify_catalog(vo);
    if (o.format == "json") {
        emit(out, census::to_json(report));
    } else {
        out << census::to_text(report);
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Topological symmetry group candidates for the Petersen family"};
    app.name("tsg");
    app.require_subcommand(1, 1);

    Options o;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    const std::string graph_help =
        "Built-in name (K33, K6, K331, K44minus, P7, P8, P9, P10; case-insensitive) or @file.json";

    auto* aut = app.add_subcommand("aut", "Automorphism group, its isomorphism class and conjugacy classes");
    aut->add_option("--graph", o.graph, graph_help)->required();
    add_format(aut);

    auto* subgroups = app.add_subcommand("subgroups", "Subgroups of Aut up to conjugacy");
    subgroups->add_option("--graph", o.graph, graph_help)->required();
    subgroups->add_flag("--full-pipeline", o.full_pipeline, "Allow automorphism groups up to order 1440");
    add_format(subgroups);

    auto* family = app.add_subcommand("family", "Closure under delta-Y and Y-delta moves (seed defaults to K6)");
    family->add_option("--graph", o.graph, graph_help);
    add_format(family);

    auto* filter = app.add_subcommand("filter", "Run the realizability filters on one automorphism");
    filter->add_option("--graph", o.graph, graph_help)->required();
    filter->add_option("--perm", o.perm, "Cycle notation, e.g. \"(1 4 2 5)(3 6)\"")->required();
    filter->add_option("--mode", o.mode, "positive, reversing or any")
        ->check(CLI::IsMember({"positive", "reversing", "any"}));
    add_format(filter);

    auto* candidates = app.add_subcommand("candidates", "Candidate symmetry groups compared with the catalog");
    candidates->add_option("--graph", o.graph, graph_help)->required();
    candidates->add_option("--catalog", o.catalog, "Catalog JSON file (default: TSG_CATALOG or built-in)");
    candidates->add_flag("--full-pipeline", o.full_pipeline, "Run the subgroup pipeline for K6 and P10");
    add_format(candidates);

    auto* verify = app.add_subcommand("verify", "Check every catalogued result; exit 1 on any failed item");
    verify->add_option("--catalog", o.catalog, "Catalog JSON file (default: TSG_CATALOG or built-in)");
    verify->add_flag("--full-pipeline", o.full_pipeline, "Also check K6 and P10 against the catalog");
    verify->add_option("--override", o.overrides, "Replace a built-in graph: NAME=@file.json");
    add_format(verify);

    std::vector<const char*> argv{"tsg"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (aut->parsed()) {
            return cmd_aut(o, out);
        }
        if (subgroups->parsed()) {
            return cmd_subgroups(o, out);
        }
        if (family->parsed()) {
            return cmd_family(o, out);
        }
        if (filter->parsed()) {
            return cmd_filter(o, out);
        }
        if (candidates->parsed()) {
            return cmd_candidates(o, out);
        }
        return cmd_verify(o, out);
    } catch (const ParseError& e) {
        err << "tsg: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "tsg: " << e.what() << '\n';
    } catch (const LimitError& e) {
        err << "tsg: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace tsg::cli
