#pragma once

#include "tsg/graph/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tsg::testing {

/// Outcome of one randomized property run.
struct PropertyRun {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    [[nodiscard]] bool ok() const { return failures == 0 && cases > 0; }
    void fail(std::string why)
    {
        if (failures++ == 0) {
            first_failure = std::move(why);
        }
    }
};

inline constexpr std::size_t kDefaultCases = 120;

/// Same vertex set and edges, vertex labels permuted at random.
[[nodiscard]] graph::Graph random_relabeling(const graph::Graph& g, std::mt19937_64& rng);
/// Erdos-Renyi graph on labels "1".."n".
[[nodiscard]] graph::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

// Each property draws `cases` random instances from `seed`.
[[nodiscard]] PropertyRun class_equation_and_lagrange(std::uint64_t seed, std::size_t cases = kDefaultCases);
[[nodiscard]] PropertyRun filter_conjugation_invariance(std::uint64_t seed, std::size_t cases = kDefaultCases);
[[nodiscard]] PropertyRun move_involution(std::uint64_t seed, std::size_t cases = kDefaultCases);
[[nodiscard]] PropertyRun closure_idempotence(std::uint64_t seed, std::size_t cases = kDefaultCases);
[[nodiscard]] PropertyRun canonical_relabeling_invariance(std::uint64_t seed, std::size_t cases = kDefaultCases);
/// Cases counted only where the premise (reversing admissible) holds.
[[nodiscard]] PropertyRun reversing_implies_positive_square(std::uint64_t seed, std::size_t cases = kDefaultCases);
/// Independent re-analyses of random built-ins, plus two full verify runs.
[[nodiscard]] PropertyRun report_determinism(std::uint64_t seed, std::size_t cases = kDefaultCases);

}  // namespace tsg::testing
