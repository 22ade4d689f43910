#include "tsg/graph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <tuple>

namespace tsg::graph {

namespace {

std::size_t distinct(const std::vector<std::uint32_t>& colors)
{
    std::vector<std::uint32_t> c = colors;
    std::ranges::sort(c);
    return static_cast<std::size_t>(std::ranges::unique(c).begin() - c.begin());
}

// Replaces each vertex's key by its rank among the sorted distinct keys.
template <typename Key>
std::vector<std::uint32_t> rank(const std::vector<Key>& keys)
{
    std::vector<Key> sorted = keys;
    std::ranges::sort(sorted);
    sorted.erase(std::ranges::unique(sorted).begin(), sorted.end());
    std::vector<std::uint32_t> out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) {
        out[v] = static_cast<std::uint32_t>(std::ranges::lower_bound(sorted, keys[v]) - sorted.begin());
    }
    return out;
}

std::vector<std::uint32_t> individualize(const Graph& g, const std::vector<std::uint32_t>& colors, Point v)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(colors.size());
    for (std::size_t u = 0; u < colors.size(); ++u) {
        keys[u] = {colors[u], u == v ? 0U : 1U};
    }
    return refine_colors(g, rank(keys));
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g) {}

    CanonicalLabeling run()
    {
        search(refined_degree_colors(g_));
        return best_;
    }

private:
    void search(const std::vector<std::uint32_t>& colors)
    {
        const std::size_t n = colors.size();
        if (distinct(colors) == n) {
            leaf(colors);
            return;
        }
        std::vector<std::size_t> cell_size(n, 0);
        for (auto c : colors) {
            ++cell_size[c];
        }
        std::uint32_t target = 0;
        while (cell_size[target] < 2) {
            ++target;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (colors[v] == target) {
                search(individualize(g_, colors, static_cast<Point>(v)));
            }
        }
    }

    void leaf(const std::vector<std::uint32_t>& colors)
    {
        const std::size_t n = colors.size();
        CanonicalForm form;
        form.rows.assign(n, 0);
        std::vector<Point> order(n);
        for (std::size_t v = 0; v < n; ++v) {
            order[colors[v]] = static_cast<Point>(v);
        }
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t row = 0;
            for (auto bits = g_.neighbors(static_cast<Point>(v)); bits != 0; bits &= bits - 1) {
                row |= std::uint64_t{1} << colors[static_cast<std::size_t>(std::countr_zero(bits))];
            }
            form.rows[colors[v]] = row;
        }
        if (!found_ || form < best_.form) {
            found_ = true;
            best_.form = std::move(form);
            best_.order = std::move(order);
            best_.leaf_automorphisms = 1;
        } else if (form == best_.form) {
            ++best_.leaf_automorphisms;
        }
    }

    const Graph& g_;
    bool found_ = false;
    CanonicalLabeling best_;
};

}  // namespace

std::string CanonicalForm::str() const
{
    std::string out;
    char buf[20];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%llx", i == 0 ? "" : ".", static_cast<unsigned long long>(rows[i]));
        out += buf;
    }
    return out;
}

std::vector<std::uint32_t> refine_colors(const Graph& g, std::vector<std::uint32_t> colors)
{
    const std::size_t n = colors.size();
    std::size_t count = distinct(colors);
    while (true) {
        std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> keys(n);
        for (std::size_t v = 0; v < n; ++v) {
            keys[v].first = colors[v];
            for (auto bits = g.neighbors(static_cast<Point>(v)); bits != 0; bits &= bits - 1) {
                keys[v].second.push_back(colors[static_cast<std::size_t>(std::countr_zero(bits))]);
            }
            std::ranges::sort(keys[v].second);
        }
        auto next = rank(keys);
        const std::size_t next_count = distinct(next);
        colors = std::move(next);
        if (next_count == count) {
            return colors;
        }
        count = next_count;
    }
}

std::vector<std::uint32_t> refined_degree_colors(const Graph& g)
{
    std::vector<std::size_t> degrees(g.vertex_count());
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        degrees[v] = g.degree(static_cast<Point>(v));
    }
    return refine_colors(g, rank(degrees));
}

CanonicalLabeling canonical_labeling(const Graph& g)
{
    return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_labeling(g).form;
}

std::optional<std::vector<Point>> graph_isomorphism(const Graph& g, const Graph& h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    const auto cg = canonical_labeling(g);
    const auto ch = canonical_labeling(h);
    if (cg.form != ch.form) {
        return std::nullopt;
    }
    std::vector<Point> witness(g.vertex_count());
    for (std::size_t i = 0; i < witness.size(); ++i) {
        witness[cg.order[i]] = ch.order[i];
    }
    for (const auto& [a, b] : g.edges()) {
        if (!h.adjacent(witness[a], witness[b])) {
            return std::nullopt;
        }
    }
    return witness;
}

bool graphs_isomorphic(const Graph& g, const Graph& h)
{
    return graph_isomorphism(g, h).has_value();
}

}  // namespace tsg::graph
