#pragma once

#include "tsg/graph/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace tsg::graph {

/// Canonical built-in names: K33, K6, K331, K44minus, P7, P8, P9, P10.
[[nodiscard]] std::span<const std::string> builtin_names();

/// Case-insensitive alias lookup ("k3,3,1", "k44-", "K4,4-", ...).
[[nodiscard]] std::optional<std::string> canonical_builtin_name(std::string_view alias);

/// Throws InputError for unrecognized names.
[[nodiscard]] Graph builtin_graph(std::string_view name);

}  // namespace tsg::graph
