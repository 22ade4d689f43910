#include "tsg/obstruct/filters.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/canonical.hpp"
#include "tsg/obstruct/k33_catalog.hpp"
#include "tsg/obstruct/planarity.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>

namespace tsg::obstruct {

using Json = nlohmann::ordered_json;

struct Obstructions::Cache {
    std::mutex mutex;
    std::unordered_map<Permutation, Verdict, perm::PermutationHash> positive;
    std::unordered_map<Permutation, Verdict, perm::PermutationHash> reversing;
};

namespace {

Json edge_json(const Graph& g, const Edge& e)
{
    return Json::array({g.label(e.first), g.label(e.second)});
}

Edge image(const Permutation& alpha, const Edge& e)
{
    return graph::make_edge(alpha(e.first), alpha(e.second));
}

class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    // Records color(a) xor color(b) == p; false on contradiction.
    bool relate(std::size_t a, std::size_t b, int p)
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            return (pa ^ pb) == p;
        }
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ p;
        return true;
    }

private:
    std::pair<std::size_t, int> find(std::size_t x)
    {
        int p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

}  // namespace

std::optional<K33Core> find_k33_core(const Graph& g)
{
    for (const char* host : {"K33", "K331", "K44minus"}) {
        const Graph builtin = graph::builtin_graph(host);
        const auto witness = graph::graph_isomorphism(builtin, g);
        if (!witness) {
            continue;
        }
        K33Core core;
        core.host = host;
        for (const char* k33_label : {"1", "2", "3", "4", "5", "6"}) {
            const auto& label = g.label((*witness)[builtin.point(k33_label)]);
            core.labels.push_back(label);
            core.to_k33.emplace(label, k33_label);
            core.from_k33.emplace(k33_label, label);
        }
        std::ranges::sort(core.labels, [](const auto& a, const auto& b) { return perm::label_less(a, b); });
        return core;
    }
    return std::nullopt;
}

std::optional<Edge> sphere_coloring_conflict(const Permutation& alpha, const Graph& g)
{
    ParityUnionFind uf(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const Point w = alpha(static_cast<Point>(v));
        if (w != v) {
            (void)uf.relate(v, w, 1);
        }
    }
    for (const auto& e : g.edges()) {
        const bool moved = alpha(e.first) != e.first && alpha(e.second) != e.second;
        if (moved && image(alpha, e) != e && !uf.relate(e.first, e.second, 0)) {
            return e;
        }
    }
    return std::nullopt;
}

Obstructions::Obstructions(Graph g)
    : graph_(std::move(g)), core_(find_k33_core(graph_)), cache_(std::make_shared<Cache>())
{
}

void Obstructions::require_automorphism(const Permutation& alpha) const
{
    if (!graph_.is_automorphism(alpha)) {
        throw InputError(alpha.to_string() + " is not an automorphism of the graph");
    }
}

Permutation Obstructions::restrict_to_k33(const Permutation& alpha) const
{
    if (!core_) {
        throw InputError("graph has no catalogued K3,3 core");
    }
    require_automorphism(alpha);
    const auto& domain = k33_graph().domain();
    std::vector<Point> images(domain->size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const auto& host_label = core_->from_k33.at(domain->label(static_cast<Point>(i)));
        const auto& host_image = alpha.apply(host_label);
        const auto it = core_->to_k33.find(host_image);
        if (it == core_->to_k33.end()) {
            throw InputError(alpha.to_string() + " does not leave the K3,3 core invariant");
        }
        images[i] = domain->at(it->second);
    }
    return Permutation::from_images(domain, std::move(images));
}

Verdict Obstructions::circle_filter(const Permutation& alpha) const
{
    require_automorphism(alpha);
    if (alpha.is_identity()) {
        return Verdict::pass(Reason::Identity);
    }
    const auto f = fixed_structure(alpha, graph_);
    const std::size_t n = graph_.vertex_count();
    std::vector<std::size_t> degree(n, 0);
    for (const auto& [a, b] : f.fixed_edges) {
        ++degree[a];
        ++degree[b];
    }
    for (Point v : f.fixed_vertices) {
        if (degree[v] > 2) {
            return Verdict::fail(Reason::DegreeExceedsTwo, Json{{"vertex", graph_.label(v)}, {"degree", degree[v]}});
        }
    }
    // With degrees at most two, every edge closing a loop in union-find closes a cycle.
    std::size_t cycles = 0;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };
    for (const auto& [a, b] : f.fixed_edges) {
        const auto ra = root(a);
        const auto rb = root(b);
        if (ra == rb) {
            ++cycles;
        } else {
            parent[ra] = rb;
        }
    }
    if (cycles == 0) {
        return Verdict::pass(std::nullopt, Json{{"case", "arcs"}});
    }
    const bool whole_circle = cycles == 1 && f.fixed_edges.size() == f.fixed_vertices.size() &&
                              f.inverted_edges.empty();
    if (whole_circle) {
        return Verdict::pass(std::nullopt, Json{{"case", "circle"}});
    }
    return Verdict::fail(Reason::CyclePlusExtra, Json{{"cycles", cycles},
                                                      {"fixed_vertices", f.fixed_vertices.size()},
                                                      {"fixed_edges", f.fixed_edges.size()},
                                                      {"inverted_edges", f.inverted_edges.size()}});
}

Verdict Obstructions::inversion_collision_filter(const Permutation& alpha) const
{
    require_automorphism(alpha);
    if (alpha.is_identity()) {
        return Verdict::pass(Reason::Identity);
    }
    const auto f = fixed_structure(alpha, graph_);
    if (f.empty()) {
        return Verdict::pass(Reason::EmptyFixedStructure);
    }
    // A nonempty fixed structure forces fix(h) to be a circle, and then every
    // nontrivial power of h fixes the same circle. A midpoint fixed by h^k is
    // therefore fixed by h, so its edge must be invariant under alpha.
    const std::size_t order = alpha.order();
    Permutation power = alpha;
    for (std::size_t k = 1; k < order; ++k, power = power * alpha) {
        for (const auto& e : graph_.edges()) {
            const bool inverted = power(e.first) == e.second && power(e.second) == e.first;
            if (inverted && image(alpha, e) != e) {
                return Verdict::fail(Reason::MidpointCollision,
                                     Json{{"k", k}, {"edge", edge_json(graph_, e)}, {"power", power.to_string()}});
            }
        }
    }
    return Verdict::pass();
}

Verdict Obstructions::reversing_filter(const Permutation& alpha) const
{
    require_automorphism(alpha);
    if (alpha.is_identity()) {
        return Verdict::pass(Reason::Identity);
    }
    const std::size_t order = alpha.order();
    if (order % 2 != 0) {
        return Verdict::fail(Reason::OddOrderNeedsPositive, Json{{"order", order}});
    }
    const Permutation square = alpha * alpha;
    if (auto sq = positive_admissible(square); !sq.passed()) {
        return Verdict::fail(*sq.reason, Json{{"square", square.to_string()}, {"square_verdict", to_json(sq)}});
    }
    const auto f = fixed_structure(alpha, graph_);
    const std::size_t points = f.fixed_vertices.size() + f.inverted_edges.size();
    if (f.fixed_edges.empty() && points <= 2) {
        return Verdict::pass(std::nullopt, Json{{"branch", "S0"}, {"fixed_points", points}});
    }
    if (!square.is_identity()) {
        return Verdict::fail(Reason::ExceedsS0, Json{{"fixed_vertices", f.fixed_vertices.size()},
                                                     {"fixed_edges", f.fixed_edges.size()},
                                                     {"inverted_edges", f.inverted_edges.size()},
                                                     {"not_involution", true},
                                                     {"order", order}});
    }
    if (!is_planar(fixed_graph(f, graph_))) {
        return Verdict::fail(Reason::NonplanarFixedGraph, to_json(f, graph_));
    }
    if (auto conflict = sphere_coloring_conflict(alpha, graph_)) {
        return Verdict::fail(Reason::ColoringInfeasible, Json{{"edge", edge_json(graph_, *conflict)}});
    }
    return Verdict::pass(std::nullopt, Json{{"branch", "S2"}});
}

Verdict Obstructions::restriction_class_filter(const Permutation& alpha, Orientation orientation) const
{
    const Permutation beta = restrict_to_k33(alpha);
    if (alpha.is_identity()) {
        return Verdict::pass(Reason::Identity);
    }
    const ElementClass cls = classify_k33_element(beta);
    const bool ok = cls == ElementClass::Identity ||
                    (orientation == Orientation::Positive ? cls == ElementClass::Positive
                                                          : cls == ElementClass::Negative);
    Json witness{{"restriction", beta.to_string()},
                 {"class", k33_class_representative(beta).to_string()},
                 {"required", orientation == Orientation::Positive ? "positive" : "negative"}};
    if (ok) {
        return Verdict::pass(std::nullopt, std::move(witness));
    }
    return Verdict::fail(Reason::RestrictionClassMismatch, std::move(witness));
}

Verdict Obstructions::positive_admissible(const Permutation& alpha) const
{
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->positive.find(alpha); it != cache_->positive.end()) {
            return it->second;
        }
    }
    Verdict v = [&] {
        require_automorphism(alpha);
        if (alpha.is_identity()) {
            return Verdict::pass(Reason::Identity);
        }
        if (auto c = circle_filter(alpha); !c.passed()) {
            return c;
        }
        if (auto c = inversion_collision_filter(alpha); !c.passed()) {
            return c;
        }
        if (core_) {
            if (auto c = restriction_class_filter(alpha, Orientation::Positive); !c.passed()) {
                return c;
            }
        }
        return Verdict::pass();
    }();
    std::lock_guard lock(cache_->mutex);
    cache_->positive.emplace(alpha, v);
    return v;
}

Verdict Obstructions::reversing_admissible(const Permutation& alpha) const
{
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->reversing.find(alpha); it != cache_->reversing.end()) {
            return it->second;
        }
    }
    Verdict v = [&] {
        if (auto c = reversing_filter(alpha); !c.passed() || alpha.is_identity()) {
            return c;
        }
        if (core_) {
            if (auto c = restriction_class_filter(alpha, Orientation::Reversing); !c.passed()) {
                return c;
            }
        }
        return Verdict::pass();
    }();
    std::lock_guard lock(cache_->mutex);
    cache_->reversing.emplace(alpha, v);
    return v;
}

Verdict Obstructions::realizable_admissible(const Permutation& alpha) const
{
    const Verdict pos = positive_admissible(alpha);
    if (pos.passed()) {
        return Verdict::pass(pos.reason, Json{{"orientation", "positive"}});
    }
    const Verdict rev = reversing_admissible(alpha);
    if (alpha.order() % 2 == 0 && rev.passed()) {
        return Verdict::pass(std::nullopt, Json{{"orientation", "reversing"}});
    }
    return Verdict::fail(*pos.reason, Json{{"positive", to_json(pos)}, {"reversing", to_json(rev)}});
}

Verdict circle_filter(const Permutation& alpha, const Graph& g)
{
    return Obstructions(g).circle_filter(alpha);
}

Verdict inversion_collision_filter(const Permutation& alpha, const Graph& g)
{
    return Obstructions(g).inversion_collision_filter(alpha);
}

Verdict reversing_filter(const Permutation& alpha, const Graph& g)
{
    return Obstructions(g).reversing_filter(alpha);
}

Verdict restriction_class_filter(const Permutation& alpha, const Graph& g, Orientation orientation)
{
    return Obstructions(g).restriction_class_filter(alpha, orientation);
}

Verdict positive_admissible(const Permutation& alpha, const Graph& g)
{
    return Obstructions(g).positive_admissible(alpha);
}

Verdict reversing_admissible(const Permutation& alpha, const Graph& g)
{
    return Obstructions(g).reversing_admissible(alpha);
}

Verdict realizable_admissible(const Permutation& alpha, const Graph& g)
{
    return Obstructions(g).realizable_admissible(alpha);
}

Verdict group_tsg_plus_candidate(const perm::PermGroup& h, const Graph& g)
{
    return Obstructions(g).group_tsg_plus_candidate(h);
}

Verdict group_tsg_candidate(const perm::PermGroup& h, const Graph& g)
{
    return Obstructions(g).group_tsg_candidate(h);
}

}  // namespace tsg::obstruct
