#ifndef HOLESCOPE_TESTS_ORACLES_HPP
#define HOLESCOPE_TESTS_ORACLES_HPP

#include "holescope/graph.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

// Brute-force reference implementations. Nothing here calls the library's
// search code; only the Graph container is shared.
namespace holescope::oracle {

/// Adjacency matrix copied out of g.
std::vector<std::vector<bool>> matrix(const Graph& g);

/// Hole lengths by enumerating every vertex subset: G[S] is a hole iff it is
/// connected, 2-regular and |S| >= 4. n <= 20.
std::set<int> hole_lengths(const Graph& g);

/// True iff the sequence is a hole: distinct, length >= 4, and the induced
/// subgraph has exactly the cycle edges.
bool is_hole(const Graph& g, const std::vector<int>& seq);

/// Tries every map V -> {0..k-1}.
bool k_colourable(const Graph& g, int k);
int chromatic_number(const Graph& g);

bool triangle_free(const Graph& g);

/// Lengths of induced head-drain paths inside the vertex set, by subset
/// enumeration. |vertices| <= 20.
std::set<int> induced_path_lengths(const Graph& g, const std::vector<int>& vertices, int head, int drain);

/// Bit-by-bit graph6 encoder written from the format description.
std::string graph6(const Graph& g);

}  // namespace holescope::oracle

#endif
