#include "holescope/cable.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace holescope {

namespace {

bool subset_of(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::optional<Vertex> neighbour_in(const Graph& g, Vertex v, const VertexSet& s)
{
    for (Vertex w : g.neighbours(v))
        if (set_contains(s, w))
            return w;
    return std::nullopt;
}

void check_vertices(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        require_vertex(g, v);
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Violations verify_multicover(const Graph& g, const MulticoverCert& m)
{
    Violations out;
    check_vertices(g, m.base);
    for (std::size_t i = 0; i < m.covers.size(); ++i) {
        const auto& [x, n] = m.covers[i];
        require_vertex(g, x);
        check_vertices(g, n);
        if (!subset_of(n, g.neighbours(x)))
            out.push_back({"cover-not-neighbours", set_difference(n, g.neighbours(x)), "apex " + std::to_string(x)});
        auto overlap = set_intersection(m.base, set_union(n, {x}));
        if (!overlap.empty())
            out.push_back({"base-overlaps-cover", overlap, "apex " + std::to_string(x)});
        for (Vertex c : m.base) {
            if (g.adjacent(c, x))
                out.push_back({"base-touches-apex", {c, x}, ""});
            if (!neighbour_in(g, c, n))
                out.push_back({"base-not-dominated", {c}, "no neighbour in the cover of " + std::to_string(x)});
        }
    }
    for (std::size_t i = 0; i < m.covers.size(); ++i)
        for (std::size_t j = 0; j < m.covers.size(); ++j) {
            if (i == j)
                continue;
            const Vertex x = m.covers[i].x, other = m.covers[j].x;
            if (x == other) {
                if (i < j)
                    out.push_back({"duplicate-apex", {x}, ""});
                continue;
            }
            if (g.adjacent(x, other) || neighbour_in(g, other, m.covers[i].n))
                out.push_back({"apex-touches-cover", {other, x}, "apex " + std::to_string(other) +
                                                                     " reaches the cover of " + std::to_string(x)});
            if (m.stable && i < j)
                for (Vertex u : m.covers[i].n)
                    if (auto w = neighbour_in(g, u, m.covers[j].n))
                        out.push_back({"cover-not-stable", {u, *w}, ""});
        }
    return out;
}

const VertexSet& Cable::z_of(int i, int j) const
{
    static const VertexSet empty;
    auto it = z.find({i, j});
    return it == z.end() ? empty : it->second;
}

CableClassification classify_cable(const Graph& g, const Cable& c)
{
    CableClassification result;
    auto& out = result.violations;
    const int t = c.length();
    if (static_cast<int>(c.n.size()) != t || static_cast<int>(c.y.size()) != t) {
        out.push_back({"shape-mismatch", {}, "need one N and one Y set per apex"});
        return result;
    }
    for (const auto& [key, set] : c.z)
        if (key.first < 0 || key.first >= key.second || key.second >= t) {
            out.push_back({"shape-mismatch", {}, "Z index " + pair_name(key.first, key.second)});
            return result;
        }
    check_vertices(g, c.x);
    check_vertices(g, c.base);
    for (int i = 0; i < t; ++i) {
        check_vertices(g, c.n[i]);
        check_vertices(g, c.y[i]);
    }
    for (const auto& [key, set] : c.z)
        check_vertices(g, set);

    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (c.x[i] == c.x[j])
                out.push_back({"duplicate-apex", {c.x[i]}, ""});
            else if (g.adjacent(c.x[i], c.x[j]))
                out.push_back({"apexes-adjacent", {c.x[i], c.x[j]}, ""});
            if (auto common = set_intersection(c.n[i], c.n[j]); !common.empty())
                out.push_back({"n-overlap", common, pair_name(i, j)});
        }

    VertexSet structure(c.x.begin(), c.x.end());
    for (int i = 0; i < t; ++i) {
        structure = set_union(structure, c.n[i]);
        if (!subset_of(c.n[i], g.neighbours(c.x[i])))
            out.push_back({"n-not-neighbours", set_difference(c.n[i], g.neighbours(c.x[i])), "N_" + std::to_string(i)});
        std::vector<const VertexSet*> parts{&c.y[i]};
        for (int j = i + 1; j < t; ++j)
            parts.push_back(&c.z_of(i, j));
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (!subset_of(*parts[p], c.n[i]))
                out.push_back({"zy-not-in-n", set_difference(*parts[p], c.n[i]), "apex " + std::to_string(i)});
            for (std::size_t q = p + 1; q < parts.size(); ++q)
                if (auto common = set_intersection(*parts[p], *parts[q]); !common.empty())
                    out.push_back({"zy-overlap", common, "apex " + std::to_string(i)});
        }
    }
    if (auto common = set_intersection(c.base, make_set(structure)); !common.empty())
        out.push_back({"base-overlap", common, ""});

    for (Vertex v : c.base)
        for (int i = 0; i < t; ++i) {
            if (!neighbour_in(g, v, c.y[i]))
                out.push_back({"base-missing-y", {v}, "no neighbour in Y_" + std::to_string(i)});
            for (int j = i + 1; j < t; ++j)
                if (auto w = neighbour_in(g, v, c.z_of(i, j)))
                    out.push_back({"base-touches-z", {v, *w}, "Z" + pair_name(i, j)});
            if (g.adjacent(v, c.x[i]))
                out.push_back({"base-touches-apex", {v, c.x[i]}, ""});
        }

    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (auto w = neighbour_in(g, c.x[i], c.n[j]))
                out.push_back({"apex-touches-later-n", {c.x[i], *w}, pair_name(i, j)});
            for (int k = j + 1; k < t; ++k)
                for (Vertex u : c.z_of(i, j))
                    if (auto w = neighbour_in(g, u, c.n[k]))
                        out.push_back({"z-touches-later-n", {u, *w}, "Z" + pair_name(i, j) + " and N_" +
                                                                        std::to_string(k)});
        }

    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            const VertexSet& zij = c.z_of(i, j);
            bool type1 = zij.empty() && !neighbour_in(g, c.x[j], c.y[i]);
            bool type2 = std::all_of(c.n[j].begin(), c.n[j].end(), [&](Vertex v) {
                return neighbour_in(g, v, zij) && !neighbour_in(g, v, c.y[i]);
            });
            if (type1)
                result.pair_types[{i, j}] = 1;
            else if (type2)
                result.pair_types[{i, j}] = 2;
            else
                out.push_back({"pair-neither-type", {c.x[i], c.x[j]}, pair_name(i, j)});
        }
    return result;
}

Cable subcable(const Cable& c, const std::vector<int>& indices)
{
    Cable out;
    out.base = c.base;
    for (std::size_t p = 0; p < indices.size(); ++p) {
        const int i = indices[p];
        if (i < 0 || i >= c.length() || (p > 0 && indices[p - 1] >= i))
            throw std::invalid_argument("subcable indices must be increasing apex indices");
        out.x.push_back(c.x[i]);
        out.n.push_back(c.n[i]);
        out.y.push_back(c.y[i]);
        for (std::size_t q = p + 1; q < indices.size(); ++q)
            if (const auto& set = c.z_of(i, indices[q]); !set.empty())
                out.z[{static_cast<int>(p), static_cast<int>(q)}] = set;
    }
    return out;
}

}  // namespace holescope
