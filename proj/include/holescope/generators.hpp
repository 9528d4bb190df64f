#ifndef HOLESCOPE_GENERATORS_HPP
#define HOLESCOPE_GENERATORS_HPP

#include "holescope/cable.hpp"
#include "holescope/graph.hpp"
#include "holescope/levels.hpp"
#include "holescope/trellis.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holescope {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
/// Outer cycle 0..4, spokes i ~ i+5, inner pentagram 5-7-9-6-8-5.
Graph petersen_graph();
/// Mycielskian of C5.
Graph groetzsch_graph();
/// Vertices of g, then copies u_i adjacent to N(v_i), then w adjacent to every u_i.
Graph mycielskian(const Graph& g);
/// k-subsets of {0..n-1} in lexicographic order, adjacent when disjoint.
Graph kneser_graph(int n, int k);
/// Pairs i < j of {0..n-1} in lexicographic order; (i,j) ~ (j,l).
Graph shift_graph(int n);
/// Shuffles all pairs with Rng(seed) and adds each pair that closes no
/// triangle, stopping after max_edges edges when given.
Graph random_triangle_free(int n, std::uint64_t seed, std::optional<int> max_edges = {});

struct FamilySpec {
    std::string family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
    /// The argument of mycielski.
    std::shared_ptr<const FamilySpec> inner;
};

/// Forms: cycle:N, path:N, complete:N, empty:N, complete_bipartite:A:B,
/// petersen, groetzsch, mycielski:<spec>, kneser:N:K, shift:N,
/// rtf:n=N:seed=S[:m=M] (also random_triangle_free). Throws
/// std::invalid_argument.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);
Graph generate(std::string_view text);

struct TrellisFixture {
    Graph graph;
    TrellisEmbedding trellis;
};

/// Extended t-trellis on t rows. k = 2 adds every a_{x,j} b_{x',j} (x != x',
/// j >= 1); ell11_adjacent adds a_{1,0} b_{2,0}.
TrellisFixture canonical_extended_trellis(int t, int k, bool ell11_adjacent = false);

struct CableFixture {
    Graph graph;
    Cable cable;
};

/// Pair types for i < j, 0-based; missing pairs default to type 1.
using PairTyping = std::map<std::pair<int, int>, int>;

/// Apexes x_i over a stable base; Y_i holds one private neighbour per base
/// vertex. Each type-2 pair (i,j) gets one z adjacent to x_i and all of N_j.
CableFixture typed_cable(int t, const PairTyping& typing, int base_size = 1);
CableFixture canonical_cable(int t, int type, int base_size = 1);

struct ShowerFixture {
    Graph graph;
    Shower shower;
    std::map<std::string, Vertex> names;
};

/// kind: "c6_basic", "two_jet" or "comb_sprinkler" (with nu >= 1).
ShowerFixture canonical_shower_fixture(std::string_view kind, int nu = 3);

}  // namespace holescope

#endif
