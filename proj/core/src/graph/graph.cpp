#include "tsg/graph/graph.hpp"

#include "tsg/common/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace tsg::graph {

Graph::Graph(DomainPtr domain, std::vector<Edge> edges)
    : domain_(std::move(domain)), edges_(std::move(edges)), adj_(domain_->size(), 0)
{
    std::ranges::sort(edges_);
    for (const auto& [a, b] : edges_) {
        adj_[a] |= std::uint64_t{1} << b;
        adj_[b] |= std::uint64_t{1} << a;
    }
}

Graph Graph::make(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
{
    if (vertices.size() > kMaxVertices) {
        throw InputError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    auto domain = perm::Domain::make(std::move(vertices));
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        const auto a = domain->find(u);
        const auto b = domain->find(v);
        if (!a || !b) {
            throw InputError("edge {" + u + "," + v + "} has an undeclared endpoint");
        }
        if (*a == *b) {
            throw InputError("loop at vertex '" + u + "'");
        }
        es.push_back(make_edge(*a, *b));
    }
    std::ranges::sort(es);
    if (auto it = std::ranges::adjacent_find(es); it != es.end()) {
        throw InputError("duplicate edge {" + domain->label(it->first) + "," + domain->label(it->second) + "}");
    }
    return Graph(std::move(domain), std::move(es));
}

std::size_t Graph::degree(Point p) const
{
    return static_cast<std::size_t>(std::popcount(adj_[p]));
}

std::vector<std::size_t> Graph::degree_sequence() const
{
    std::vector<std::size_t> seq;
    seq.reserve(adj_.size());
    for (std::size_t p = 0; p < adj_.size(); ++p) {
        seq.push_back(degree(static_cast<Point>(p)));
    }
    std::ranges::sort(seq, std::greater<>{});
    return seq;
}

bool Graph::is_automorphism(const Permutation& p) const
{
    if (!perm::same_domain(p.domain_ptr(), domain_)) {
        return false;
    }
    for (const auto& [a, b] : edges_) {
        if (!adjacent(p(a), p(b))) {
            return false;
        }
    }
    return true;
}

Graph Graph::induced(std::span<const std::string> labels) const
{
    std::vector<std::string> vs(labels.begin(), labels.end());
    std::vector<bool> keep(adj_.size(), false);
    for (const auto& l : vs) {
        keep[point(l)] = true;
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : edges_) {
        if (keep[a] && keep[b]) {
            es.emplace_back(label(a), label(b));
        }
    }
    return make(std::move(vs), es);
}

Graph Graph::relabeled(const std::vector<std::pair<std::string, std::string>>& mapping) const
{
    std::unordered_map<std::string, std::string> rename;
    for (const auto& [from, to] : mapping) {
        (void)point(from);
        if (!rename.emplace(from, to).second) {
            throw InputError("vertex '" + from + "' renamed twice");
        }
    }
    if (rename.size() != vertex_count()) {
        throw InputError("relabeling must cover every vertex");
    }
    std::vector<std::string> vs;
    for (const auto& l : domain_->labels()) {
        vs.push_back(rename.at(l));
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : edges_) {
        es.emplace_back(rename.at(label(a)), rename.at(label(b)));
    }
    return make(std::move(vs), es);
}

std::vector<std::pair<std::string, std::string>> Graph::edge_labels() const
{
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [a, b] : edges_) {
        out.emplace_back(label(a), label(b));
    }
    return out;
}

std::string edge_string(const Graph& g, const Edge& e)
{
    return "{" + g.label(e.first) + "," + g.label(e.second) + "}";
}

}  // namespace tsg::graph
