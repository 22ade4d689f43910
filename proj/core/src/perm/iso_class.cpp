#include "tsg/perm/iso_class.hpp"

#include "tsg/common/error.hpp"
#include "tsg/perm/group_table.hpp"

#include <algorithm>

namespace tsg::perm {

namespace {

struct CatalogSpec {
    const char* name;
    std::size_t degree;
    std::vector<const char*> generators;
};

// Concrete reference groups. Each is the smallest natural permutation model.
const std::vector<CatalogSpec>& catalog_specs()
{
    static const std::vector<CatalogSpec> specs = {
        {"1", 1, {}},
        {"Z2", 2, {"(1 2)"}},
        {"Z3", 3, {"(1 2 3)"}},
        {"Z4", 4, {"(1 2 3 4)"}},
        {"Z5", 5, {"(1 2 3 4 5)"}},
        {"Z6", 6, {"(1 2 3 4 5 6)"}},
        {"D2", 4, {"(1 2)", "(3 4)"}},
        {"D3", 3, {"(1 2 3)", "(1 2)"}},
        {"D4", 4, {"(1 2 3 4)", "(1 3)"}},
        {"D5", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}},
        {"D6", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}},
        {"Z3xZ3", 6, {"(1 2 3)", "(4 5 6)"}},
        {"D3xZ3", 6, {"(1 2)", "(1 2 3)", "(4 5 6)"}},
        {"D3xD3", 6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"}},
        // generalized dihedral: the involution inverts both factors
        {"(Z3xZ3):Z2", 6, {"(1 2 3)", "(4 5 6)", "(1 2)(4 5)"}},
        {"(Z3xZ3):Z4", 6, {"(1 2 3)", "(4 5 6)", "(1 4 2 5)(3 6)"}},
        {"(D3xD3):Z2", 6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)", "(1 4)(2 5)(3 6)"}},
        {"Z2xZ4", 6, {"(1 2 3 4)", "(5 6)"}},
        {"Z2xZ2xZ2", 6, {"(1 2)", "(3 4)", "(5 6)"}},
        {"A4", 4, {"(1 2 3)", "(1 2)(3 4)"}},
        {"S4", 4, {"(1 2)", "(1 2 3 4)"}},
        {"Z5:Z4", 5, {"(1 2 3 4 5)", "(1 2 4 3)"}},
        {"D4xZ2", 6, {"(1 2 3 4)", "(1 3)", "(5 6)"}},
        {"A4xZ2", 6, {"(1 2 3)", "(1 2)(3 4)", "(5 6)"}},
        {"S4xZ2", 6, {"(1 2)", "(1 2 3 4)", "(5 6)"}},
        {"A5", 5, {"(1 2 3)", "(1 2 3 4 5)"}},
        {"S5", 5, {"(1 2)", "(1 2 3 4 5)"}},
        {"A6", 6, {"(1 2 3)", "(2 3 4 5 6)"}},
        {"S6", 6, {"(1 2)", "(1 2 3 4 5 6)"}},
    };
    return specs;
}

constexpr std::string_view kUnknownPrefix = "unknown(order=";

std::vector<std::size_t> centralizer_sizes(const GroupTable& t)
{
    std::vector<std::size_t> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        out[i] = t.centralizer_size(static_cast<ElementIndex>(i));
    }
    return out;
}

/// Greedy generating set as table indices, highest element order first.
std::vector<ElementIndex> table_generators(const GroupTable& t)
{
    std::vector<ElementIndex> order(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        order[i] = static_cast<ElementIndex>(i);
    }
    std::ranges::stable_sort(order, [&](ElementIndex a, ElementIndex b) {
        return t.element_order(a) > t.element_order(b);
    });
    std::vector<ElementIndex> gens;
    ElementSet generated = t.closure(gens);
    for (ElementIndex x : order) {
        if (generated.count() == t.size()) {
            break;
        }
        if (generated.contains(x)) {
            continue;
        }
        gens.push_back(x);
        generated = t.closure(gens);
    }
    return gens;
}

class IsoSearch {
public:
    // With `embedding` set, the target may be larger and the map only has to be injective.
    IsoSearch(const GroupTable& src, const GroupTable& dst, bool embedding)
        : src_(src), dst_(dst), embedding_(embedding), gens_(table_generators(src))
    {
        if (!embedding_) {
            src_cent_ = centralizer_sizes(src);
            dst_cent_ = centralizer_sizes(dst);
        }
    }

    std::optional<std::vector<ElementIndex>> run()
    {
        images_.clear();
        if (search(0)) {
            return map_;
        }
        return std::nullopt;
    }

    const std::vector<ElementIndex>& generators() const { return gens_; }
    const std::vector<ElementIndex>& images() const { return images_; }

private:
    bool search(std::size_t depth)
    {
        if (depth == gens_.size()) {
            return extend();
        }
        const ElementIndex s = gens_[depth];
        std::vector<ElementIndex> prefix_src(gens_.begin(), gens_.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
        const std::size_t src_span = src_.closure(prefix_src).count();
        for (std::size_t c = 0; c < dst_.size(); ++c) {
            const auto t = static_cast<ElementIndex>(c);
            if (dst_.element_order(t) != src_.element_order(s) || (!embedding_ && dst_cent_[t] != src_cent_[s])) {
                continue;
            }
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                ok = src_.element_order(src_.multiply(s, gens_[j])) ==
                         dst_.element_order(dst_.multiply(t, images_[j])) &&
                     src_.commute(s, gens_[j]) == dst_.commute(t, images_[j]);
            }
            if (!ok) {
                continue;
            }
            images_.push_back(t);
            if (dst_.closure(images_).count() == src_span && search(depth + 1)) {
                return true;
            }
            images_.pop_back();
        }
        return false;
    }

    // Extends generator images along the Cayley graph; succeeds iff the
    // assignment defines an injective homomorphism (bijective unless embedding).
    bool extend()
    {
        constexpr ElementIndex kUnset = ~ElementIndex{0};
        map_.assign(src_.size(), kUnset);
        map_[0] = 0;
        std::vector<ElementIndex> queue{0};
        for (std::size_t k = 0; k < queue.size(); ++k) {
            const ElementIndex x = queue[k];
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                const ElementIndex x2 = src_.multiply(gens_[g], x);
                const ElementIndex y2 = dst_.multiply(images_[g], map_[x]);
                if (map_[x2] == kUnset) {
                    map_[x2] = y2;
                    queue.push_back(x2);
                } else if (map_[x2] != y2) {
                    return false;
                }
            }
        }
        std::vector<bool> hit(dst_.size(), false);
        for (ElementIndex y : map_) {
            if (y == kUnset || hit[y]) {
                return false;
            }
            hit[y] = true;
        }
        return true;
    }

    const GroupTable& src_;
    const GroupTable& dst_;
    bool embedding_;
    std::vector<std::size_t> src_cent_;
    std::vector<std::size_t> dst_cent_;
    std::vector<ElementIndex> gens_;
    std::vector<ElementIndex> images_;
    std::vector<ElementIndex> map_;
};

std::size_t derived_subgroup_order(const PermGroup& group)
{
    const auto gens = group.generators();
    std::vector<Permutation> commutators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto c = gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
            if (!c.is_identity()) {
                commutators.push_back(std::move(c));
            }
        }
    }
    // Normal closure of the generator commutators is the derived subgroup.
    while (true) {
        PermGroup n(group.domain(), commutators, group.element_cap());
        bool grew = false;
        for (const auto& g : gens) {
            const auto g_inv = g.inverse();
            for (std::size_t k = 0, m = commutators.size(); k < m; ++k) {
                auto c = g * commutators[k] * g_inv;
                if (!n.contains(c)) {
                    commutators.push_back(std::move(c));
                    grew = true;
                    break;
                }
            }
            if (grew) {
                break;
            }
        }
        if (!grew) {
            return n.order();
        }
    }
}

}  // namespace

GroupFingerprint fingerprint(const PermGroup& group)
{
    GroupFingerprint fp;
    const auto elems = group.elements();
    fp.order = elems.size();
    const auto gens = group.generators();
    for (std::size_t i = 0; i < gens.size() && fp.is_abelian; ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i] * gens[j] != gens[j] * gens[i]) {
                fp.is_abelian = false;
                break;
            }
        }
    }
    for (const auto& x : elems) {
        ++fp.element_orders[x.order()];
        const bool central = std::ranges::all_of(gens, [&](const Permutation& g) { return g * x == x * g; });
        if (central) {
            ++fp.center_order;
        }
    }
    fp.derived_subgroup_order = fp.is_abelian ? 1 : derived_subgroup_order(group);
    return fp;
}

IsoClassName IsoClassName::parse(std::string_view name)
{
    if (name == "Z2xZ2") {
        name = "D2";
    }
    for (const auto& entry : iso_catalog()) {
        if (entry.name == name) {
            return IsoClassName(entry.name, entry.fingerprint.order, false);
        }
    }
    throw InputError("unknown group name '" + std::string(name) + "'");
}

IsoClassName IsoClassName::unknown(std::size_t order)
{
    return IsoClassName(std::string(kUnknownPrefix) + std::to_string(order) + ")", order, true);
}

std::strong_ordering operator<=>(const IsoClassName& a, const IsoClassName& b)
{
    if (auto c = a.order_ <=> b.order_; c != 0) {
        return c;
    }
    return a.name_ <=> b.name_;
}

const std::vector<CatalogGroup>& iso_catalog()
{
    static const std::vector<CatalogGroup> catalog = [] {
        std::vector<CatalogGroup> out;
        for (const auto& spec : catalog_specs()) {
            auto domain = Domain::numbered(spec.degree);
            std::vector<Permutation> gens;
            for (const char* g : spec.generators) {
                gens.push_back(parse_permutation(g, domain));
            }
            PermGroup ref(domain, std::move(gens));
            auto fp = fingerprint(ref);
            out.push_back({spec.name, std::move(ref), std::move(fp)});
        }
        return out;
    }();
    return catalog;
}

const CatalogGroup& catalog_group(std::string_view name)
{
    const auto canonical = IsoClassName::parse(name);
    for (const auto& entry : iso_catalog()) {
        if (entry.name == canonical.str()) {
            return entry;
        }
    }
    throw InputError("unknown group name '" + std::string(name) + "'");
}

IsoClassName identify_group(const PermGroup& group)
{
    const auto fp = fingerprint(group);
    if (fp.order > kTableCap) {
        return IsoClassName::unknown(fp.order);
    }
    for (const auto& entry : iso_catalog()) {
        if (entry.fingerprint == fp && find_isomorphism(group, entry.reference)) {
            return IsoClassName::parse(entry.name);
        }
    }
    return IsoClassName::unknown(fp.order);
}

std::optional<Isomorphism> find_isomorphism(const PermGroup& source, const PermGroup& target)
{
    if (source.order() != target.order()) {
        return std::nullopt;
    }
    const auto& src = source.table();
    const auto& dst = target.table();
    if (fingerprint(source) != fingerprint(target)) {
        return std::nullopt;
    }
    IsoSearch search(src, dst, false);
    auto map = search.run();
    if (!map) {
        return std::nullopt;
    }
    Isomorphism iso;
    for (ElementIndex g : search.generators()) {
        iso.source_generators.push_back(source.element(g));
    }
    for (ElementIndex t : search.images()) {
        iso.target_images.push_back(target.element(t));
    }
    iso.element_map.assign(map->begin(), map->end());
    return iso;
}

std::optional<Isomorphism> find_embedding(const PermGroup& source, const PermGroup& target)
{
    if (target.order() % source.order() != 0) {
        return std::nullopt;
    }
    IsoSearch search(source.table(), target.table(), true);
    auto map = search.run();
    if (!map) {
        return std::nullopt;
    }
    Isomorphism iso;
    for (ElementIndex g : search.generators()) {
        iso.source_generators.push_back(source.element(g));
    }
    for (ElementIndex t : search.images()) {
        iso.target_images.push_back(target.element(t));
    }
    iso.element_map.assign(map->begin(), map->end());
    return iso;
}

bool is_isomorphic(const PermGroup& a, const PermGroup& b)
{
    return find_isomorphism(a, b).has_value();
}

}  // namespace tsg::perm
