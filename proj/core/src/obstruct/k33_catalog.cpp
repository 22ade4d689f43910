#include "tsg/obstruct/k33_catalog.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/perm/subgroups.hpp"

#include <algorithm>
#include <unordered_map>

namespace tsg::obstruct {

namespace {

struct ClassIndex {
    std::unordered_map<graph::Permutation, ElementClass, perm::PermutationHash> kind;
    std::unordered_map<graph::Permutation, std::size_t, perm::PermutationHash> representative;
    std::vector<graph::Permutation> representatives;
};

const ClassIndex& class_index()
{
    static const ClassIndex index = [] {
        ClassIndex out;
        const auto& aut = k33_automorphisms();
        const auto& cat = k33_element_catalog();
        auto add_class = [&](const graph::Permutation& rep, ElementClass kind) {
            const std::size_t slot = out.representatives.size();
            out.representatives.push_back(rep);
            for (const auto& g : aut.elements()) {
                auto conj = g * rep * g.inverse();
                out.kind.emplace(conj, kind);
                out.representative.emplace(std::move(conj), slot);
            }
        };
        add_class(graph::Permutation::identity(aut.domain()), ElementClass::Identity);
        for (const auto& r : cat.positive_classes) {
            add_class(r, ElementClass::Positive);
        }
        for (const auto& r : cat.negative_classes) {
            add_class(r, ElementClass::Negative);
        }
        return out;
    }();
    return index;
}

}  // namespace

const graph::Graph& k33_graph()
{
    static const graph::Graph g = graph::builtin_graph("K33");
    return g;
}

const perm::PermGroup& k33_automorphisms()
{
    static const perm::PermGroup aut = graph::automorphism_group(k33_graph());
    return aut;
}

const ElementClassCatalogK33& k33_element_catalog()
{
    static const ElementClassCatalogK33 catalog = [] {
        const auto& d = k33_graph().domain();
        auto p = [&](const char* s) { return perm::parse_permutation(s, d); };
        return ElementClassCatalogK33{
            {p("(1 2)(4 5)"), p("(1 4)(2 5)(3 6)"), p("(1 2 3)"), p("(1 2 3)(4 5 6)"), p("(1 4 2 5 3 6)")},
            {p("(1 2)"), p("(1 4 2 5)(3 6)"), p("(1 2)(4 5 6)")},
        };
    }();
    return catalog;
}

ElementClass classify_k33_element(const graph::Permutation& beta)
{
    const auto& idx = class_index();
    if (auto it = idx.kind.find(beta); it != idx.kind.end()) {
        return it->second;
    }
    throw InputError(beta.to_string() + " is not an automorphism of K3,3");
}

const graph::Permutation& k33_class_representative(const graph::Permutation& beta)
{
    const auto& idx = class_index();
    if (auto it = idx.representative.find(beta); it != idx.representative.end()) {
        return idx.representatives[it->second];
    }
    throw InputError(beta.to_string() + " is not an automorphism of K3,3");
}

const std::vector<std::string>& k33_positive_group_catalog()
{
    static const std::vector<std::string> names = {"D3xD3", "(Z3xZ3):Z2", "D3xZ3", "D6", "Z3xZ3",
                                                   "D3",    "Z6",         "D2",    "Z3", "Z2"};
    return names;
}

const std::vector<perm::IsoClassName>& k33_positive_subgroup_closure()
{
    static const std::vector<perm::IsoClassName> closure = [] {
        std::vector<perm::IsoClassName> out;
        for (const auto& name : k33_positive_group_catalog()) {
            const auto lattice = perm::enumerate_subgroups(perm::catalog_group(name).reference);
            for (const auto& n : lattice.iso_names()) {
                if (std::ranges::find(out, n) == out.end()) {
                    out.push_back(n);
                }
            }
        }
        std::ranges::sort(out);
        return out;
    }();
    return closure;
}

}  // namespace tsg::obstruct
