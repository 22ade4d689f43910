#pragma once

#include "tsg/perm/permutation.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tsg::graph {

using perm::DomainPtr;
using perm::Permutation;
using perm::Point;

/// Adjacency rows are 64-bit masks.
inline constexpr std::size_t kMaxVertices = 64;

/// An edge as two points with first < second.
using Edge = std::pair<Point, Point>;

[[nodiscard]] inline Edge make_edge(Point a, Point b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A simple undirected graph on a label domain.
class Graph {
public:
    /// Throws InputError on loops, duplicate edges, undeclared endpoints,
    /// duplicate vertices or more than kMaxVertices vertices.
    static Graph make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges);

    [[nodiscard]] const DomainPtr& domain() const noexcept { return domain_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::string& label(Point p) const { return domain_->label(p); }
    /// Throws InputError for unknown labels.
    [[nodiscard]] Point point(std::string_view label) const { return domain_->at(label); }

    /// Sorted edges.
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::uint64_t neighbors(Point p) const { return adj_[p]; }
    [[nodiscard]] bool adjacent(Point a, Point b) const { return (adj_[a] >> b) & 1U; }
    [[nodiscard]] std::size_t degree(Point p) const;
    /// Degrees in descending order.
    [[nodiscard]] std::vector<std::size_t> degree_sequence() const;

    [[nodiscard]] bool is_automorphism(const Permutation& p) const;
    /// Subgraph induced on `labels`.
    [[nodiscard]] Graph induced(std::span<const std::string> labels) const;
    /// Renames vertices; `mapping` must cover every vertex injectively.
    [[nodiscard]] Graph relabeled(const std::vector<std::pair<std::string, std::string>>& mapping) const;

    /// Edges as label pairs, each pair in natural order.
    [[nodiscard]] std::vector<std::pair<std::string, std::string>> edge_labels() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return perm::same_domain(a.domain_, b.domain_) && a.edges_ == b.edges_;
    }

private:
    Graph(DomainPtr domain, std::vector<Edge> edges);

    DomainPtr domain_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

[[nodiscard]] std::string edge_string(const Graph& g, const Edge& e);

}  // namespace tsg::graph
