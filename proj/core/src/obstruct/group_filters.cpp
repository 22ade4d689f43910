#include "tsg/common/error.hpp"
#include "tsg/obstruct/filters.hpp"
#include "tsg/obstruct/k33_catalog.hpp"
#include "tsg/perm/iso_class.hpp"
#include "tsg/perm/subgroups.hpp"

#include <algorithm>

namespace tsg::obstruct {

using Json = nlohmann::ordered_json;

namespace {

void require_subgroup(const perm::PermGroup& h, const Graph& g)
{
    if (!perm::same_domain(h.domain(), g.domain())) {
        throw InputError("group and graph use different vertex labels");
    }
    for (const auto& s : h.generators()) {
        if (!g.is_automorphism(s)) {
            throw InputError(s.to_string() + " is not an automorphism of the graph");
        }
    }
}

Json element_list(const perm::PermGroup& h, const std::vector<perm::ElementIndex>& members)
{
    auto out = Json::array();
    for (auto i : members) {
        out.push_back(h.element(i).to_string());
    }
    return out;
}

}  // namespace

Verdict Obstructions::group_tsg_plus_candidate(const perm::PermGroup& h) const
{
    require_subgroup(h, graph_);
    for (const auto& x : h.elements()) {
        if (auto v = positive_admissible(x); !v.passed()) {
            return Verdict::fail(*v.reason, Json{{"element", x.to_string()}, {"verdict", to_json(v)}});
        }
    }
    if (!core_) {
        return Verdict::pass();
    }
    std::vector<Permutation> restricted;
    for (const auto& s : h.generators()) {
        restricted.push_back(restrict_to_k33(s));
    }
    const auto name = perm::identify_group(perm::PermGroup(k33_graph().domain(), std::move(restricted)));
    const auto& allowed = k33_positive_subgroup_closure();
    Json witness{{"restriction_group", name.str()}};
    if (std::ranges::find(allowed, name) == allowed.end()) {
        return Verdict::fail(Reason::RestrictionClassMismatch, std::move(witness));
    }
    return Verdict::pass(std::nullopt, std::move(witness));
}

Verdict Obstructions::group_tsg_candidate(const perm::PermGroup& h) const
{
    const Verdict plus = group_tsg_plus_candidate(h);
    if (plus.passed()) {
        return Verdict::pass(std::nullopt, Json{{"orientation", "positive"}, {"positive", plus.witness}});
    }
    // Orientation-preserving elements form a subgroup of index at most two.
    auto splits = Json::array();
    std::optional<Verdict> first_failure;
    for (const auto& n : perm::index_two_subgroups(h)) {
        std::optional<Verdict> failure;
        for (std::size_t i = 0; i < h.order() && !failure; ++i) {
            const auto idx = static_cast<perm::ElementIndex>(i);
            if (n.members.contains(idx)) {
                continue;
            }
            if (auto v = reversing_admissible(h.element(i)); !v.passed()) {
                v.witness = Json{{"element", h.element(i).to_string()}, {"side", "reversing"}, {"verdict", to_json(v)}};
                failure = std::move(v);
            }
        }
        for (std::size_t i = 0; i < h.order() && !failure; ++i) {
            const auto idx = static_cast<perm::ElementIndex>(i);
            if (!n.members.contains(idx)) {
                continue;
            }
            if (auto v = positive_admissible(h.element(i)); !v.passed()) {
                v.witness = Json{{"element", h.element(i).to_string()}, {"side", "positive"}, {"verdict", to_json(v)}};
                failure = std::move(v);
            }
        }
        const Json subgroup = element_list(h, n.members.to_vector());
        if (!failure) {
            return Verdict::pass(std::nullopt, Json{{"orientation", "split"}, {"positive_subgroup", subgroup}});
        }
        splits.push_back(Json{{"positive_subgroup", subgroup}, {"failure", failure->witness}});
        if (!first_failure) {
            first_failure = std::move(failure);
        }
    }
    const Reason reason = first_failure ? *first_failure->reason : *plus.reason;
    return Verdict::fail(reason, Json{{"positive", to_json(plus)}, {"splits", std::move(splits)}});
}

}  // namespace tsg::obstruct
