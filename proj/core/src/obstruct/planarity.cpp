#include "tsg/obstruct/planarity.hpp"

#include "tsg/graph/canonical.hpp"

#include <bit>
#include <map>

namespace tsg::obstruct {

namespace {

using Rows = std::vector<std::uint64_t>;

// Removes vertices of degree <= 1 and smooths vertices of degree 2 until none
// remain, then compacts the surviving vertices.
Rows reduce(Rows adj)
{
    const std::size_t n = adj.size();
    std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!((alive >> v) & 1U)) {
                continue;
            }
            const int deg = std::popcount(adj[v]);
            if (deg > 2) {
                continue;
            }
            std::uint64_t nb = adj[v];
            for (auto bits = nb; bits != 0; bits &= bits - 1) {
                adj[static_cast<std::size_t>(std::countr_zero(bits))] &= ~(std::uint64_t{1} << v);
            }
            adj[v] = 0;
            alive &= ~(std::uint64_t{1} << v);
            if (deg == 2) {
                const auto a = static_cast<std::size_t>(std::countr_zero(nb));
                nb &= nb - 1;
                const auto b = static_cast<std::size_t>(std::countr_zero(nb));
                adj[a] |= std::uint64_t{1} << b;
                adj[b] |= std::uint64_t{1} << a;
            }
            changed = true;
        }
    }
    std::vector<std::size_t> index(n, 0);
    std::size_t m = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if ((alive >> v) & 1U) {
            index[v] = m++;
        }
    }
    Rows out(m, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!((alive >> v) & 1U)) {
            continue;
        }
        for (auto bits = adj[v]; bits != 0; bits &= bits - 1) {
            out[index[v]] |= std::uint64_t{1} << index[static_cast<std::size_t>(std::countr_zero(bits))];
        }
    }
    return out;
}

std::size_t edge_count(const Rows& adj)
{
    std::size_t twice = 0;
    for (auto r : adj) {
        twice += static_cast<std::size_t>(std::popcount(r));
    }
    return twice / 2;
}

graph::Graph to_graph(const Rows& adj)
{
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        vs.push_back(std::to_string(v));
        for (auto bits = adj[v]; bits != 0; bits &= bits - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(bits));
            if (v < w) {
                es.emplace_back(std::to_string(v), std::to_string(w));
            }
        }
    }
    return graph::Graph::make(std::move(vs), es);
}

bool is_k5_or_k33(const Rows& adj)
{
    const std::size_t n = adj.size();
    const std::size_t m = edge_count(adj);
    if (n == 5 && m == 10) {
        return true;
    }
    if (n != 6 || m != 9) {
        return false;
    }
    // 3-regular on 6 vertices and bipartite: exactly K3,3.
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const std::size_t v = queue[k];
        for (auto bits = adj[v]; bits != 0; bits &= bits - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(bits));
            if (side[w] == -1) {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if (side[w] == side[v]) {
                return false;
            }
        }
    }
    for (auto r : adj) {
        if (std::popcount(r) != 3) {
            return false;
        }
    }
    return queue.size() == n;
}

class PlanaritySearch {
public:
    bool planar(const Rows& input)
    {
        const Rows adj = reduce(input);
        const std::size_t n = adj.size();
        const std::size_t m = edge_count(adj);
        if (n <= 4) {
            return true;
        }
        if (m > 3 * n - 6) {
            return false;
        }
        if (is_k5_or_k33(adj)) {
            return false;
        }
        auto key = graph::canonical_form(to_graph(adj));
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        bool result = true;
        for (std::size_t v = 0; v < n && result; ++v) {
            for (auto bits = adj[v]; bits != 0 && result; bits &= bits - 1) {
                const auto w = static_cast<std::size_t>(std::countr_zero(bits));
                if (w < v) {
                    continue;
                }
                Rows smaller = adj;
                smaller[v] &= ~(std::uint64_t{1} << w);
                smaller[w] &= ~(std::uint64_t{1} << v);
                result = planar(smaller);
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::map<graph::CanonicalForm, bool> memo_;
};

}  // namespace

bool is_planar(const graph::Graph& g)
{
    Rows adj(g.vertex_count());
    for (std::size_t v = 0; v < adj.size(); ++v) {
        adj[v] = g.neighbors(static_cast<graph::Point>(v));
    }
    return PlanaritySearch().planar(adj);
}

}  // namespace tsg::obstruct
