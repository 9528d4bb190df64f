#ifndef HOLESCOPE_LEVELS_HPP
#define HOLESCOPE_LEVELS_HPP

#include "holescope/budget.hpp"
#include "holescope/graph.hpp"
#include "holescope/violation.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace holescope {

/// L_0, ..., L_k.
using Levels = std::vector<VertexSet>;

/// Level index of every vertex in the levels, or -1. Throws std::out_of_range
/// for ids outside g.
std::vector<int> level_index(const Graph& g, const Levels& levels);
VertexSet levels_vertex_set(const Levels& levels);

/// A layering with a single head, a parent in the previous level for every
/// vertex below the head, and no edges skipping a level.
struct Levelling {
    Levels levels;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    Vertex head() const { return levels.front().front(); }
    const VertexSet& base() const { return levels.back(); }
};

Violations verify_levelling(const Graph& g, const Levelling& levelling);

/// Levels plus a drain in the last level, which must induce a connected
/// subgraph. Vertices of the last level need not have parents.
struct Shower {
    Levels levels;
    Vertex drain = -1;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    Vertex head() const { return levels.front().front(); }
    const VertexSet& base() const { return levels.back(); }
};

/// Which levels of a shower must be stable sets.
struct Stability {
    enum class Mode { none, top, full };
    Mode mode = Mode::none;
    int lambda = 0;

    static Stability none() { return {}; }
    /// Levels k-lambda .. k-1 stable, and k >= lambda.
    static Stability top(int lambda) { return {Mode::top, lambda}; }
    /// Levels 0 .. k-1 stable.
    static Stability full() { return {Mode::full, 0}; }
};

Violations verify_shower(const Graph& g, const Shower& shower, Stability stability = Stability::none());

/// Non-fatal observations, e.g. an empty floor.
std::vector<std::string> shower_warnings(const Graph& g, const Shower& shower);

/// Vertices of the last level with a neighbour in the level above.
VertexSet shower_floor(const Graph& g, const Shower& shower);

/// Throws std::invalid_argument if r does not run between the drain and head.
bool verify_recirculator(const Graph& g, const Shower& shower, const VertexSeq& r);

/// The vertices of s in path order starting from start (or from the smaller
/// end), if G[s] is an induced path.
std::optional<VertexSeq> as_induced_path(const Graph& g, const VertexSet& s, std::optional<Vertex> start = {});

struct WUBend {
    enum class Kind { w_bend, u_bend };
    Levels levels;
    /// Path from w (attached end) to the drain s.
    VertexSeq u_path;
    Kind kind = Kind::w_bend;

    Vertex drain() const { return u_path.back(); }
};

struct BendReport {
    Violations violations;
    /// Distance in g between the ends of the base path, when it is one.
    std::optional<int> size;
};

BendReport verify_wubend(const Graph& g, const WUBend& bend);

Violations sprinkler_violations(const Graph& g, const Shower& shower, int nu);
bool verify_sprinkler(const Graph& g, const Shower& shower, int nu);

/// Nonempty sets W_i inside L_i, completely joined level to level.
struct Wand {
    Levels sets;

    int length() const { return static_cast<int>(sets.size()) - 1; }
    VertexSet vertex_set() const { return levels_vertex_set(sets); }
};

Violations wand_violations(const Graph& g, const Shower& shower, const Wand& wand);
bool verify_wand(const Graph& g, const Shower& shower, const Wand& wand);

/// Vertices of L_i that are up-neighbours of some vertex of W_{i+1}.
VertexSet wand_tops(const Graph& g, const Shower& shower, const Wand& wand, int level);

/// Mat vertices at the bottom of some post whose top is an up-neighbour of a
/// wand vertex. The mat must lie in the shower's floor.
VertexSet wand_shadow(const Graph& g, const Shower& shower, const Wand& wand, const VertexSet& mat);

bool is_jet(const Graph& g, const Shower& shower, const VertexSeq& path);
bool is_mat_jet(const Graph& g, const Shower& shower, const VertexSet& mat, const VertexSeq& path);

/// Every jet (optionally every M-jet) of length at most cap, in DFS order.
std::vector<VertexSeq> enumerate_jets(const Graph& g, const Shower& shower, const std::optional<VertexSet>& mat,
                                      int cap, Budget budget = {});

std::set<int> jetset(const Graph& g, const Shower& shower, const std::optional<VertexSet>& mat, int cap,
                     Budget budget = {});

struct JetMetrics {
    int tail_length;
    int waste;
    /// Least lambda for which the jet is lambda-monotone.
    int monotone_lambda;
};

/// Throws std::invalid_argument if the path is not a jet of the shower.
JetMetrics jet_metrics(const Graph& g, const Shower& shower, const VertexSeq& jet);

struct Solidity {
    bool dense;
    int max_solid;
};

Solidity solidity(const std::set<int>& values);

}  // namespace holescope

#endif
