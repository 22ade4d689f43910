#include "tsg/perm/perm_group.hpp"

#include "tsg/common/error.hpp"
#include "tsg/perm/group_table.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace tsg::perm {

struct PermGroup::Cache {
    std::once_flag elements_once;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;

    std::once_flag table_once;
    std::unique_ptr<GroupTable> table;
};

PermGroup::PermGroup(DomainPtr domain, std::vector<Permutation> generators, std::size_t element_cap)
    : domain_(std::move(domain)), generators_(std::move(generators)), element_cap_(element_cap),
      cache_(std::make_shared<Cache>())
{
    for (const auto& g : generators_) {
        if (!same_domain(g.domain_ptr(), domain_)) {
            throw InputError("generator " + g.to_string() + " is on a different domain");
        }
    }
}

std::span<const Permutation> PermGroup::elements() const
{
    std::call_once(cache_->elements_once, [this] {
        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> frontier;
        auto id = Permutation::identity(domain_);
        seen.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            const Permutation x = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& s : generators_) {
                Permutation y = s * x;
                if (seen.insert(y).second) {
                    if (seen.size() > element_cap_) {
                        throw LimitError("group has more than " + std::to_string(element_cap_) + " elements");
                    }
                    frontier.push_back(std::move(y));
                }
            }
        }
        std::vector<Permutation> sorted(seen.begin(), seen.end());
        std::ranges::sort(sorted);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            cache_->index.emplace(sorted[i], i);
        }
        cache_->elements = std::move(sorted);
    });
    return cache_->elements;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const
{
    if (!same_domain(p.domain_ptr(), domain_)) {
        return std::nullopt;
    }
    (void)elements();
    if (auto it = cache_->index.find(p); it != cache_->index.end()) {
        return it->second;
    }
    return std::nullopt;
}

const GroupTable& PermGroup::table() const
{
    std::call_once(cache_->table_once, [this] {
        const auto elems = elements();
        if (elems.size() > kTableCap) {
            throw LimitError("group of order " + std::to_string(elems.size()) + " exceeds the table cap of " +
                             std::to_string(kTableCap));
        }
        cache_->table = std::make_unique<GroupTable>(elems);
    });
    return *cache_->table;
}

bool PermGroup::same_elements(const PermGroup& other) const
{
    if (!same_domain(domain_, other.domain_)) {
        return false;
    }
    const auto a = elements();
    const auto b = other.elements();
    return std::ranges::equal(a, b);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group)
{
    const auto elems = group.elements();
    std::vector<Permutation> gen_inverses;
    for (const auto& s : group.generators()) {
        gen_inverses.push_back(s.inverse());
    }
    std::vector<bool> assigned(elems.size(), false);
    std::vector<ConjugacyClass> classes;
    // Elements are sorted, so the first unassigned element is the least member of its class.
    // A class is the orbit of its representative under conjugation by the generators.
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (assigned[i]) {
            continue;
        }
        assigned[i] = true;
        std::vector<std::size_t> orbit{i};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const Permutation& x = elems[orbit[k]];
            for (std::size_t s = 0; s < gen_inverses.size(); ++s) {
                const auto j = *group.index_of(group.generators()[s] * x * gen_inverses[s]);
                if (!assigned[j]) {
                    assigned[j] = true;
                    orbit.push_back(j);
                }
            }
        }
        classes.push_back({elems[i], orbit.size()});
    }
    return classes;
}

PermGroup subgroup(const PermGroup& group, std::vector<Permutation> generators)
{
    for (const auto& g : generators) {
        if (!group.contains(g)) {
            throw InputError(g.to_string() + " is not an element of the group");
        }
    }
    return PermGroup(group.domain(), std::move(generators), group.element_cap());
}

std::vector<Permutation> small_generating_set(const DomainPtr& domain, std::span<const Permutation> elements)
{
    std::vector<const Permutation*> by_order;
    by_order.reserve(elements.size());
    for (const auto& e : elements) {
        by_order.push_back(&e);
    }
    std::ranges::stable_sort(by_order, [](const Permutation* a, const Permutation* b) {
        const auto oa = a->order();
        const auto ob = b->order();
        return oa != ob ? oa > ob : *a < *b;
    });

    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> generated{Permutation::identity(domain)};
    for (const Permutation* candidate : by_order) {
        if (generated.contains(*candidate)) {
            continue;
        }
        gens.push_back(*candidate);
        PermGroup closure(domain, gens, elements.size());
        generated.clear();
        for (const auto& e : closure.elements()) {
            generated.insert(e);
        }
        if (generated.size() == elements.size()) {
            break;
        }
    }
    return gens;
}

}  // namespace tsg::perm
