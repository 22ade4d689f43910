#pragma once

#include "tsg/graph/graph.hpp"
#include "tsg/obstruct/fixed_structure.hpp"
#include "tsg/obstruct/verdict.hpp"
#include "tsg/perm/perm_group.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tsg::obstruct {

enum class Orientation { Positive, Reversing };

/// An Aut-invariant copy of K3,3 inside a graph: the graph itself when it is
/// K3,3, or the image of vertices 1..6 when it is K3,3,1 or K4,4 minus an edge.
/// Labels are translated to the K33 built-in labels.
struct K33Core {
    std::string host;  // "K33", "K331" or "K44minus"
    std::vector<std::string> labels;
    std::map<std::string, std::string> to_k33;
    std::map<std::string, std::string> from_k33;
};

/// Detected by isomorphism with the K33, K331 and K44minus built-ins.
[[nodiscard]] std::optional<K33Core> find_k33_core(const Graph& g);

/// Necessary conditions for realizing automorphisms of one graph by finite-order
/// homeomorphisms of the 3-sphere. Every filter passes the identity.
///
/// Orientation-preserving maps fix the empty set or a circle; orientation-
/// reversing maps fix two points or a 2-sphere. The filters test whether the
/// fixed structure of an automorphism fits inside such a set. A reversing map
/// with 2-dimensional fixed set is an involution: its square preserves
/// orientation and fixes a 2-sphere, so the square is the identity.
///
/// Verdicts for single elements are cached; the object is safe to share
/// between threads.
class Obstructions {
public:
    explicit Obstructions(Graph g);

    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    [[nodiscard]] const std::optional<K33Core>& core() const noexcept { return core_; }

    /// Restriction to the K3,3 core on the K33 built-in domain. Throws
    /// InputError without a core or when `alpha` moves the core.
    [[nodiscard]] Permutation restrict_to_k33(const Permutation& alpha) const;

    [[nodiscard]] Verdict circle_filter(const Permutation& alpha) const;
    [[nodiscard]] Verdict inversion_collision_filter(const Permutation& alpha) const;
    [[nodiscard]] Verdict reversing_filter(const Permutation& alpha) const;
    /// Throws InputError when the graph has no K3,3 core.
    [[nodiscard]] Verdict restriction_class_filter(const Permutation& alpha, Orientation orientation) const;

    [[nodiscard]] Verdict positive_admissible(const Permutation& alpha) const;
    [[nodiscard]] Verdict reversing_admissible(const Permutation& alpha) const;
    [[nodiscard]] Verdict realizable_admissible(const Permutation& alpha) const;

    /// Throws InputError if `h` is not a group of automorphisms of the graph.
    [[nodiscard]] Verdict group_tsg_plus_candidate(const perm::PermGroup& h) const;
    [[nodiscard]] Verdict group_tsg_candidate(const perm::PermGroup& h) const;

private:
    struct Cache;

    void require_automorphism(const Permutation& alpha) const;

    Graph graph_;
    std::optional<K33Core> core_;
    std::shared_ptr<Cache> cache_;
};

/// Whether non-fixed vertices of an involution can be split into two sides
/// swapped by `alpha` so that every edge crossing between the sides is
/// `alpha`-invariant. Returns a conflicting edge when it is impossible.
[[nodiscard]] std::optional<Edge> sphere_coloring_conflict(const Permutation& alpha, const Graph& g);

[[nodiscard]] Verdict circle_filter(const Permutation& alpha, const Graph& g);
[[nodiscard]] Verdict inversion_collision_filter(const Permutation& alpha, const Graph& g);
[[nodiscard]] Verdict reversing_filter(const Permutation& alpha, const Graph& g);
[[nodiscard]] Verdict restriction_class_filter(const Permutation& alpha, const Graph& g, Orientation orientation);
[[nodiscard]] Verdict positive_admissible(const Permutation& alpha, const Graph& g);
[[nodiscard]] Verdict reversing_admissible(const Permutation& alpha, const Graph& g);
[[nodiscard]] Verdict realizable_admissible(const Permutation& alpha, const Graph& g);
[[nodiscard]] Verdict group_tsg_plus_candidate(const perm::PermGroup& h, const Graph& g);
[[nodiscard]] Verdict group_tsg_candidate(const perm::PermGroup& h, const Graph& g);

}  // namespace tsg::obstruct
