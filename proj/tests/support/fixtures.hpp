#ifndef HOLESCOPE_TESTS_FIXTURES_HPP
#define HOLESCOPE_TESTS_FIXTURES_HPP

#include "holescope/certificate.hpp"
#include "holescope/generators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace holescope::fixtures {

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);

/// Full BFS layers from vertex 0 of a connected graph.
Levelling bfs_levelling(const Graph& g);

/// L0 {h}, L1 {p, q_2..q_m}, base path b_1..b_m with p ~ b_1 and q_i ~ b_i,
/// and U = w, u_1..u_tail, s with p ~ w. Valid as a u-bend and a w-bend;
/// size m-1.
struct BendFixture {
    Graph graph;
    WUBend bend;
    Vertex attachment;
};
BendFixture bend_fixture(int base_length, int tail, WUBend::Kind kind);

/// A jet z-a-c-e-d-f-s that visits L_2 twice: tail 2, waste 2, least lambda 1.
ShowerFixture detour_fixture();

/// Depth-5 shower with wand {h},{w1},{w2},{w3}, up-neighbour u of w3 and the
/// clean post u-p3-p4-m ending at the floor vertex m.
ShowerFixture wand_fixture();
Wand wand_of(const ShowerFixture& f);

struct Mutant {
    std::string family;
    Graph graph;
    Certificate certificate;
};

/// Certificate kinds under fuzz: levelling, shower, trellis, multicover,
/// cable, wubend, sprinkler.
const std::vector<std::string>& fuzz_kinds();

/// An unmutated fixture chosen by seed.
Mutant pristine(const std::string& kind, std::uint64_t seed);
/// A single edit of the seed's fixture that breaks at least one axiom.
Mutant mutate(const std::string& kind, std::uint64_t seed);

}  // namespace holescope::fixtures

#endif
