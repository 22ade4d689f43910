#include "tsg/graph/moves.hpp"

#include "tsg/common/error.hpp"

#include <algorithm>
#include <bit>

namespace tsg::graph {

namespace {

std::array<Point, 3> site_points(const Graph& g, const MoveSite& site)
{
    std::array<Point, 3> pts{};
    for (std::size_t i = 0; i < 3; ++i) {
        pts[i] = g.point(site.site[i]);
    }
    if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) {
        throw InputError("move site " + describe(site) + " repeats a vertex");
    }
    return pts;
}

std::vector<std::string> all_labels(const Graph& g)
{
    return {g.domain()->labels().begin(), g.domain()->labels().end()};
}

}  // namespace

std::string fresh_label(const Graph& g)
{
    for (std::size_t k = 1;; ++k) {
        auto candidate = std::to_string(k);
        if (!g.domain()->find(candidate)) {
            return candidate;
        }
    }
}

Graph delta_y(const Graph& g, const MoveSite& site)
{
    if (site.kind != MoveKind::TriangleToY) {
        throw InputError("delta_y needs a triangle site");
    }
    const auto pts = site_points(g, site);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!g.adjacent(pts[i], pts[(i + 1) % 3])) {
            throw InputError(describe(site) + " is not a triangle");
        }
    }
    auto is_triangle_edge = [&](const Edge& e) {
        return std::ranges::count(pts, e.first) == 1 && std::ranges::count(pts, e.second) == 1;
    };
    const std::string center = fresh_label(g);
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : g.edges()) {
        if (!is_triangle_edge(e)) {
            es.emplace_back(g.label(e.first), g.label(e.second));
        }
    }
    for (const auto& s : site.site) {
        es.emplace_back(center, s);
    }
    auto vs = all_labels(g);
    vs.push_back(center);
    return Graph::make(std::move(vs), es);
}

Graph y_delta(const Graph& g, const MoveSite& site)
{
    if (site.kind != MoveKind::YToTriangle) {
        throw InputError("y_delta needs a Y site");
    }
    const auto pts = site_points(g, site);
    const Point c = g.point(site.center);
    std::uint64_t expected = 0;
    for (Point p : pts) {
        expected |= std::uint64_t{1} << p;
    }
    if (g.neighbors(c) != expected) {
        throw InputError("vertex '" + site.center + "' does not have neighborhood " + describe(site));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (g.adjacent(pts[i], pts[(i + 1) % 3])) {
            throw InputError("y_delta at '" + site.center + "' would create a parallel edge {" +
                             site.site[i] + "," + site.site[(i + 1) % 3] + "}");
        }
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : g.edges()) {
        if (e.first != c && e.second != c) {
            es.emplace_back(g.label(e.first), g.label(e.second));
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        es.emplace_back(site.site[i], site.site[(i + 1) % 3]);
    }
    std::vector<std::string> vs;
    for (const auto& l : g.domain()->labels()) {
        if (l != site.center) {
            vs.push_back(l);
        }
    }
    return Graph::make(std::move(vs), es);
}

std::vector<MoveSite> move_sites(const Graph& g)
{
    std::vector<MoveSite> out;
    const auto n = static_cast<Point>(g.vertex_count());
    for (Point a = 0; a < n; ++a) {
        for (Point b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) {
                continue;
            }
            for (Point c = b + 1; c < n; ++c) {
                if (g.adjacent(a, c) && g.adjacent(b, c)) {
                    out.push_back({MoveKind::TriangleToY, {g.label(a), g.label(b), g.label(c)}, {}});
                }
            }
        }
    }
    for (Point v = 0; v < n; ++v) {
        if (g.degree(v) != 3) {
            continue;
        }
        std::array<Point, 3> nb{};
        std::size_t k = 0;
        for (auto bits = g.neighbors(v); bits != 0; bits &= bits - 1) {
            nb[k++] = static_cast<Point>(std::countr_zero(bits));
        }
        if (g.adjacent(nb[0], nb[1]) || g.adjacent(nb[0], nb[2]) || g.adjacent(nb[1], nb[2])) {
            continue;
        }
        out.push_back({MoveKind::YToTriangle, {g.label(nb[0]), g.label(nb[1]), g.label(nb[2])}, g.label(v)});
    }
    return out;
}

std::string describe(const MoveSite& site)
{
    std::string s = site.kind == MoveKind::TriangleToY ? "delta-y{" : "y-delta{";
    s += site.site[0] + "," + site.site[1] + "," + site.site[2] + "}";
    if (site.kind == MoveKind::YToTriangle) {
        s += "@" + site.center;
    }
    return s;
}

}  // namespace tsg::graph
