#ifndef HOLESCOPE_GRAPH_HPP
#define HOLESCOPE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace holescope {

using Vertex = int;

/// Ordered list of distinct vertices (a path or a cycle in traversal order).
using VertexSeq = std::vector<Vertex>;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Sorts and deduplicates.
VertexSet make_set(std::vector<Vertex> vs);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Graph distance: a finite nonnegative length or infinity. Infinity is its own
/// state, never a sentinel length.
class Distance {
  public:
    static Distance finite(int length);
    static Distance infinite() { return Distance{}; }

    bool is_finite() const { return length_.has_value(); }
    bool is_infinite() const { return !length_.has_value(); }
    /// Throws std::logic_error when infinite.
    int value() const;

    std::string to_string() const;

    friend bool operator==(const Distance&, const Distance&) = default;
    /// Infinity compares greater than every finite distance.
    friend bool operator<(const Distance& a, const Distance& b);

  private:
    Distance() = default;
    std::optional<int> length_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    /// Duplicate edges collapse. Throws std::invalid_argument on loops and
    /// std::out_of_range on ids outside 0..n-1.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return m_; }
    bool empty() const { return n_ == 0; }
    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

    /// Sorted neighbour list.
    const std::vector<Vertex>& neighbours(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, lexicographically ordered.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  private:
    void build(std::span<const Edge> edges);

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    // Row-major adjacency bits, only kept for graphs small enough to afford n^2 bits.
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// An induced subgraph relabelled to 0..|S|-1, with the map back to the host.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Throws std::out_of_range if v is not a vertex of g.
void require_vertex(const Graph& g, Vertex v);

/// BFS distances from source; unreachable vertices are infinite.
std::vector<Distance> distances_from(const Graph& g, Vertex source);

Distance dist(const Graph& g, Vertex u, Vertex v);

/// Sphere (closed=false) or ball (closed=true) of the given radius around v.
VertexSet neighbourhood(const Graph& g, Vertex v, int radius, bool closed);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected_set(const Graph& g, const VertexSet& s);
bool is_stable_set(const Graph& g, const VertexSet& s);
bool is_triangle_free(const Graph& g);

/// Length of a shortest cycle; infinite for forests.
Distance girth(const Graph& g);

/// Consecutive members adjacent, every other pair nonadjacent. Repeated or
/// out-of-range vertices give false.
bool is_induced_path(const Graph& g, std::span<const Vertex> s);
/// As for paths, plus the wrap pair adjacent and at least three vertices.
bool is_induced_cycle(const Graph& g, std::span<const Vertex> s);

}  // namespace holescope

#endif
