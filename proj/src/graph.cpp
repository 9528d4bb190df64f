#include "holescope/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace holescope {

namespace {
constexpr int max_bit_matrix_order = 1 << 13;
}

VertexSet make_set(std::vector<Vertex> vs)
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Distance Distance::finite(int length)
{
    if (length < 0)
        throw std::invalid_argument("distance must be nonnegative");
    Distance d;
    d.length_ = length;
    return d;
}

int Distance::value() const
{
    if (!length_)
        throw std::logic_error("infinite distance has no finite value");
    return *length_;
}

std::string Distance::to_string() const { return length_ ? std::to_string(*length_) : "inf"; }

bool operator<(const Distance& a, const Distance& b)
{
    if (a.is_infinite())
        return false;
    if (b.is_infinite())
        return true;
    return a.value() < b.value();
}

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    build(edges);
}

void Graph::build(std::span<const Edge> edges)
{
    adj_.assign(n_, {});
    for (auto [u, v] : edges) {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = 0;
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        m_ += row.size();
    }
    m_ /= 2;

    if (n_ <= max_bit_matrix_order) {
        words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        bits_.assign(words_ * n_, 0);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
}

const std::vector<Vertex>& Graph::neighbours(Vertex v) const
{
    require_vertex(*this, v);
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (!has_vertex(u) || !has_vertex(v))
        return false;
    if (!bits_.empty())
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
    const auto& row = adj_[u].size() < adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() < adj_[v].size() ? v : u;
    return std::binary_search(row.begin(), row.end(), other);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

void require_vertex(const Graph& g, Vertex v)
{
    if (!g.has_vertex(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                std::to_string(g.order()));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        require_vertex(g, s[i]);
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbours(s[i]))
            if (index[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<Vertex>(i), index[w]);
    return {Graph(static_cast<int>(s.size()), edges), s};
}

namespace {

std::vector<int> bfs_levels(const Graph& g, Vertex source, int max_depth = -1)
{
    std::vector<int> d(g.order(), -1);
    std::deque<Vertex> queue{source};
    d[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && d[u] == max_depth)
            continue;
        for (Vertex w : g.neighbours(u))
            if (d[w] < 0) {
                d[w] = d[u] + 1;
                queue.push_back(w);
            }
    }
    return d;
}

}  // namespace

std::vector<Distance> distances_from(const Graph& g, Vertex source)
{
    require_vertex(g, source);
    auto d = bfs_levels(g, source);
    std::vector<Distance> out;
    out.reserve(d.size());
    for (int x : d)
        out.push_back(x < 0 ? Distance::infinite() : Distance::finite(x));
    return out;
}

Distance dist(const Graph& g, Vertex u, Vertex v)
{
    require_vertex(g, u);
    require_vertex(g, v);
    return distances_from(g, u)[v];
}

VertexSet neighbourhood(const Graph& g, Vertex v, int radius, bool closed)
{
    require_vertex(g, v);
    if (radius < 0)
        throw std::invalid_argument("radius must be nonnegative");
    auto d = bfs_levels(g, v, radius);
    VertexSet out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (d[u] >= 0 && (closed ? d[u] <= radius : d[u] == radius))
            out.push_back(u);
    return out;
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<int> comp(g.order(), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0)
            continue;
        auto d = bfs_levels(g, s);
        VertexSet c;
        for (Vertex u = 0; u < g.order(); ++u)
            if (d[u] >= 0) {
                comp[u] = static_cast<int>(out.size());
                c.push_back(u);
            }
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected_set(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        return true;
    auto sub = induced_subgraph(g, s);
    return components(sub.graph).size() == 1;
}

bool is_stable_set(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_triangle_free(const Graph& g)
{
    for (auto [u, v] : g.edges()) {
        const auto& a = g.neighbours(u);
        const auto& b = g.neighbours(v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j)
                return false;
            if (*i < *j)
                ++i;
            else
                ++j;
        }
    }
    return true;
}

Distance girth(const Graph& g)
{
    // The minimum over all roots of d(u)+d(w)+1 across non-tree edges is exact.
    std::optional<int> best;
    for (Vertex root = 0; root < g.order(); ++root) {
        std::vector<int> d(g.order(), -1), parent(g.order(), -1);
        std::deque<Vertex> queue{root};
        d[root] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (best && 2 * d[u] + 1 >= *best)
                break;
            for (Vertex w : g.neighbours(u)) {
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w) {
                    int len = d[u] + d[w] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best ? Distance::finite(*best) : Distance::infinite();
}

namespace {

bool distinct_in_range(const Graph& g, std::span<const Vertex> s)
{
    std::vector<Vertex> sorted(s.begin(), s.end());
    for (Vertex v : sorted)
        if (!g.has_vertex(v))
            return false;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool is_induced_path(const Graph& g, std::span<const Vertex> s)
{
    if (!distinct_in_range(g, s))
        return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]) != (j == i + 1))
                return false;
    return true;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> s)
{
    if (s.size() < 3 || !distinct_in_range(g, s))
        return false;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if (g.adjacent(s[i], s[j]) != consecutive)
                return false;
        }
    return true;
}

}  // namespace holescope
