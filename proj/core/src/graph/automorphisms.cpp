#include "tsg/graph/automorphisms.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/canonical.hpp"

#include <algorithm>

namespace tsg::graph {

namespace {

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& g)
        : g_(g), n_(g.vertex_count()), colors_(refined_degree_colors(g)), image_(n_), used_(n_, false)
    {
    }

    std::vector<Permutation> run()
    {
        assign(0);
        std::ranges::sort(found_);
        return std::move(found_);
    }

private:
    void assign(std::size_t v)
    {
        if (v == n_) {
            found_.push_back(Permutation::from_images(g_.domain(), image_));
            return;
        }
        for (std::size_t w = 0; w < n_; ++w) {
            if (used_[w] || colors_[w] != colors_[v]) {
                continue;
            }
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                ok = g_.adjacent(static_cast<Point>(u), static_cast<Point>(v)) ==
                     g_.adjacent(image_[u], static_cast<Point>(w));
            }
            if (!ok) {
                continue;
            }
            image_[v] = static_cast<Point>(w);
            used_[w] = true;
            assign(v + 1);
            used_[w] = false;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::uint32_t> colors_;
    std::vector<Point> image_;
    std::vector<bool> used_;
    std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> all_automorphisms(const Graph& g, const AutomorphismPolicy& policy)
{
    if (g.vertex_count() > policy.max_vertices) {
        throw LimitError("automorphism search is limited to " + std::to_string(policy.max_vertices) +
                         " vertices, got " + std::to_string(g.vertex_count()));
    }
    return AutomorphismSearch(g).run();
}

perm::PermGroup automorphism_group(const Graph& g, const AutomorphismPolicy& policy)
{
    const auto elems = all_automorphisms(g, policy);
    auto gens = perm::small_generating_set(g.domain(), elems);
    return perm::PermGroup(g.domain(), std::move(gens));
}

Permutation restrict_automorphism(const Permutation& alpha, const Graph& g, std::span<const std::string> core)
{
    if (!g.is_automorphism(alpha)) {
        throw InputError(alpha.to_string() + " is not an automorphism of the graph");
    }
    auto domain = perm::Domain::make({core.begin(), core.end()});
    std::vector<Point> images(domain->size());
    for (std::size_t i = 0; i < domain->size(); ++i) {
        const auto& label = domain->label(static_cast<Point>(i));
        const auto& image = alpha.apply(label);
        const auto target = domain->find(image);
        if (!target) {
            throw InputError(alpha.to_string() + " maps core vertex " + label + " outside the core");
        }
        images[i] = *target;
    }
    return Permutation::from_images(std::move(domain), std::move(images));
}

}  // namespace tsg::graph
