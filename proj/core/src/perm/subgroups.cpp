#include "tsg/perm/subgroups.hpp"

#include "tsg/common/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace tsg::perm {

namespace {

struct IndexedSubgroup {
    ElementSet members;
    std::vector<ElementIndex> generators;
};

std::vector<ElementIndex> greedy_generators(const GroupTable& t, const ElementSet& members)
{
    auto pool = members.to_vector();
    std::ranges::stable_sort(pool, [&](ElementIndex a, ElementIndex b) {
        return t.element_order(a) > t.element_order(b);
    });
    std::vector<ElementIndex> gens;
    ElementSet generated = t.closure(gens);
    const std::size_t target = members.count();
    for (ElementIndex x : pool) {
        if (generated.count() == target) {
            break;
        }
        if (!generated.contains(x)) {
            gens.push_back(x);
            generated = t.closure(gens);
        }
    }
    return gens;
}

Subgroup to_subgroup(const PermGroup& group, const GroupTable& t, const ElementSet& members)
{
    Subgroup s{members, {}};
    for (ElementIndex g : greedy_generators(t, members)) {
        s.generators.push_back(group.element(g));
    }
    return s;
}

}  // namespace

std::size_t SubgroupLattice::subgroup_count() const
{
    std::size_t total = 0;
    for (const auto& c : classes) {
        total += c.members.size();
    }
    return total;
}

std::vector<IsoClassName> SubgroupLattice::iso_names() const
{
    std::vector<IsoClassName> names;
    for (const auto& c : classes) {
        if (std::ranges::find(names, c.iso) == names.end()) {
            names.push_back(c.iso);
        }
    }
    std::ranges::sort(names);
    return names;
}

SubgroupLattice enumerate_subgroups(const PermGroup& group, const SubgroupPolicy& policy)
{
    const std::size_t n = group.order();
    if (n > policy.max_group_order) {
        throw LimitError("subgroup enumeration is limited to groups of order " +
                         std::to_string(policy.max_group_order) + ", got " + std::to_string(n));
    }
    const GroupTable& t = group.table();

    std::vector<IndexedSubgroup> found;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    auto add = [&](ElementSet members, std::vector<ElementIndex> gens) {
        if (seen.emplace(members, found.size()).second) {
            found.push_back({std::move(members), std::move(gens)});
        }
    };

    std::vector<ElementIndex> cyclic_gens;
    for (std::size_t x = 0; x < n; ++x) {
        const auto g = static_cast<ElementIndex>(x);
        const std::vector<ElementIndex> gens = x == 0 ? std::vector<ElementIndex>{} : std::vector<ElementIndex>{g};
        auto members = t.closure(gens);
        if (!seen.contains(members)) {
            cyclic_gens.push_back(g);
        }
        add(std::move(members), gens);
    }

    for (std::size_t k = 0; k < found.size(); ++k) {
        for (ElementIndex c : cyclic_gens) {
            if (found[k].members.contains(c)) {
                continue;
            }
            auto gens = found[k].generators;
            gens.push_back(c);
            auto members = t.closure(gens);
            add(std::move(members), std::move(gens));
        }
    }

    // Group into conjugacy classes; conjugating by generators suffices to reach the orbit.
    std::vector<ElementIndex> group_gens;
    for (const auto& g : group.generators()) {
        group_gens.push_back(static_cast<ElementIndex>(*group.index_of(g)));
    }
    std::vector<bool> assigned(found.size(), false);
    std::vector<std::size_t> order_idx(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        order_idx[i] = i;
    }
    std::ranges::sort(order_idx, [&](std::size_t a, std::size_t b) {
        const auto ca = found[a].members.count();
        const auto cb = found[b].members.count();
        return ca != cb ? ca < cb : found[a].members < found[b].members;
    });

    SubgroupLattice lattice;
    for (std::size_t i : order_idx) {
        if (assigned[i]) {
            continue;
        }
        std::vector<std::size_t> orbit{i};
        assigned[i] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (ElementIndex g : group_gens) {
                const auto conj = t.conjugate_set(found[orbit[k]].members, g);
                const std::size_t j = seen.at(conj);
                if (!assigned[j]) {
                    assigned[j] = true;
                    orbit.push_back(j);
                }
            }
        }
        std::ranges::sort(orbit, [&](std::size_t a, std::size_t b) { return found[a].members < found[b].members; });
        SubgroupClass cls{{}, IsoClassName::unknown(0)};
        for (std::size_t j : orbit) {
            cls.members.push_back(to_subgroup(group, t, found[j].members));
        }
        cls.iso = identify_group(cls.representative().as_group(group.domain()));
        lattice.classes.push_back(std::move(cls));
    }
    return lattice;
}

std::vector<Subgroup> index_two_subgroups(const PermGroup& group)
{
    const GroupTable& t = group.table();
    const std::size_t n = t.size();
    if (n % 2 != 0) {
        return {};
    }

    std::vector<ElementIndex> squares;
    for (std::size_t x = 0; x < n; ++x) {
        const auto g = static_cast<ElementIndex>(x);
        squares.push_back(t.multiply(g, g));
    }
    const ElementSet q = t.closure(squares);

    // Basis of the elementary abelian quotient G/Q.
    std::vector<ElementIndex> basis;
    std::vector<ElementIndex> span_gens = squares;
    ElementSet span = q;
    for (std::size_t x = 0; x < n; ++x) {
        const auto g = static_cast<ElementIndex>(x);
        if (!span.contains(g)) {
            basis.push_back(g);
            span_gens.push_back(g);
            span = t.closure(span_gens);
        }
    }

    // Coset coordinates: element -> bitmask over the basis.
    std::vector<std::uint32_t> coords(n, 0);
    const auto q_members = q.to_vector();
    for (std::uint32_t mask = 0; mask < (1U << basis.size()); ++mask) {
        ElementIndex rep = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (mask & (1U << b)) {
                rep = t.multiply(rep, basis[b]);
            }
        }
        for (ElementIndex y : q_members) {
            coords[t.multiply(rep, y)] = mask;
        }
    }

    std::vector<Subgroup> out;
    for (std::uint32_t f = 1; f < (1U << basis.size()); ++f) {
        ElementSet members(n);
        for (std::size_t x = 0; x < n; ++x) {
            if (std::popcount(coords[x] & f) % 2 == 0) {
                members.insert(static_cast<ElementIndex>(x));
            }
        }
        out.push_back(to_subgroup(group, t, members));
    }
    std::ranges::sort(out, [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    return out;
}

}  // namespace tsg::perm
