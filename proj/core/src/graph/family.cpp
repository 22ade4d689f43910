#include "tsg/graph/family.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/moves.hpp"

#include <algorithm>
#include <map>

namespace tsg::graph {

namespace {

struct NamedInvariants {
    const char* name;
    std::size_t vertices;
    std::vector<std::size_t> degrees;
};

const std::vector<NamedInvariants>& family_table()
{
    static const std::vector<NamedInvariants> table = {
        {"K6", 6, {5, 5, 5, 5, 5, 5}},
        {"K331", 7, {6, 4, 4, 4, 4, 4, 4}},
        {"P7", 7, {5, 5, 5, 4, 4, 4, 3}},
        {"K44minus", 8, {4, 4, 4, 4, 4, 4, 3, 3}},
        {"P8", 8, {5, 4, 4, 4, 4, 3, 3, 3}},
        {"P9", 9, {4, 4, 4, 3, 3, 3, 3, 3, 3}},
        {"P10", 10, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}},
    };
    return table;
}

FamilyMember make_member(Graph g, CanonicalForm form, std::vector<std::string> provenance)
{
    FamilyMember m{std::move(g), {}, 0, 0, {}, std::move(form), std::move(provenance)};
    m.vertex_count = m.graph.vertex_count();
    m.edge_count = m.graph.edge_count();
    m.degree_sequence = m.graph.degree_sequence();
    m.canonical_name = family_name(m.vertex_count, m.degree_sequence).value_or("");
    return m;
}

}  // namespace

std::optional<std::string> family_name(std::size_t vertex_count, const std::vector<std::size_t>& degree_sequence)
{
    for (const auto& entry : family_table()) {
        if (entry.vertices == vertex_count && entry.degrees == degree_sequence) {
            return entry.name;
        }
    }
    return std::nullopt;
}

std::vector<FamilyMember> family_closure(const Graph& seed, const FamilyPolicy& policy)
{
    if (seed.vertex_count() > policy.max_vertices) {
        throw LimitError("family closure seed has more than " + std::to_string(policy.max_vertices) + " vertices");
    }
    std::vector<FamilyMember> members;
    std::map<CanonicalForm, std::size_t> seen;
    auto form = canonical_form(seed);
    seen.emplace(form, 0);
    members.push_back(make_member(seed, std::move(form), {}));

    for (std::size_t k = 0; k < members.size(); ++k) {
        const Graph current = members[k].graph;
        for (const auto& site : move_sites(current)) {
            Graph next = site.kind == MoveKind::TriangleToY ? delta_y(current, site) : y_delta(current, site);
            if (next.vertex_count() > policy.max_vertices) {
                throw LimitError("family closure reached a graph with more than " +
                                 std::to_string(policy.max_vertices) + " vertices");
            }
            auto next_form = canonical_form(next);
            if (seen.contains(next_form)) {
                continue;
            }
            if (members.size() >= policy.max_members) {
                throw LimitError("family closure exceeded " + std::to_string(policy.max_members) + " members");
            }
            seen.emplace(next_form, members.size());
            auto provenance = members[k].provenance;
            provenance.push_back(describe(site));
            members.push_back(make_member(std::move(next), std::move(next_form), std::move(provenance)));
        }
    }

    std::ranges::sort(members, [](const FamilyMember& a, const FamilyMember& b) {
        return std::tie(a.vertex_count, a.form) < std::tie(b.vertex_count, b.form);
    });
    return members;
}

}  // namespace tsg::graph
