#ifndef HOLESCOPE_CABLE_HPP
#define HOLESCOPE_CABLE_HPP

#include "holescope/graph.hpp"
#include "holescope/violation.hpp"

#include <map>
#include <utility>
#include <vector>

namespace holescope {

/// (x, N) covers C: N inside N(x), C avoids N and x, every vertex of C is
/// nonadjacent to x and has a neighbour in N.
struct Cover {
    Vertex x;
    VertexSet n;
};

struct MulticoverCert {
    std::vector<Cover> covers;
    VertexSet base;
    bool stable = false;
};

Violations verify_multicover(const Graph& g, const MulticoverCert& m);

/// Indices are 0-based: apex i has sets n[i], y[i] and z[{i, j}] for i < j.
struct Cable {
    VertexSeq x;
    std::vector<VertexSet> n;
    std::map<std::pair<int, int>, VertexSet> z;
    std::vector<VertexSet> y;
    VertexSet base;

    int length() const { return static_cast<int>(x.size()); }
    /// Z_{i,j}, empty when absent.
    const VertexSet& z_of(int i, int j) const;
};

struct CableClassification {
    Violations violations;
    /// 1 or 2 for each valid pair i < j; type 1 wins when both hold.
    std::map<std::pair<int, int>, int> pair_types;

    bool valid() const { return violations.empty(); }
};

CableClassification classify_cable(const Graph& g, const Cable& c);

/// The cable on the given apex indices (increasing), renumbered from 0.
Cable subcable(const Cable& c, const std::vector<int>& indices);

}  // namespace holescope

#endif
