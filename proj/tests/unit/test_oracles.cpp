#include "oracles.hpp"

#include "holescope/generators.hpp"

#include <doctest.h>

using namespace holescope;

TEST_CASE("oracle hole lengths")
{
    CHECK(oracle::hole_lengths(cycle_graph(4)) == std::set<int>{4});
    CHECK(oracle::hole_lengths(cycle_graph(11)) == std::set<int>{11});
    CHECK(oracle::hole_lengths(complete_graph(5)).empty());
    CHECK(oracle::hole_lengths(path_graph(8)).empty());
    CHECK(oracle::hole_lengths(complete_bipartite(2, 3)) == std::set<int>{4});
    CHECK(oracle::hole_lengths(petersen_graph()) == std::set<int>{5, 6});
}

TEST_CASE("oracle hole test")
{
    Graph c6 = cycle_graph(6);
    CHECK(oracle::is_hole(c6, {0, 1, 2, 3, 4, 5}));
    CHECK(oracle::is_hole(c6, {3, 2, 1, 0, 5, 4}));
    CHECK_FALSE(oracle::is_hole(c6, {0, 1, 2, 3, 5, 4}));
    CHECK_FALSE(oracle::is_hole(c6, {0, 1, 2}));
    CHECK_FALSE(oracle::is_hole(c6, {0, 1, 2, 3, 4, 4}));
    Graph chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK_FALSE(oracle::is_hole(chord, {0, 1, 2, 3, 4, 5}));
    CHECK(oracle::is_hole(chord, {0, 1, 2, 3}));
}

TEST_CASE("oracle colouring")
{
    CHECK(oracle::chromatic_number(Graph(0, {})) == 0);
    CHECK(oracle::chromatic_number(empty_graph(3)) == 1);
    CHECK(oracle::chromatic_number(cycle_graph(8)) == 2);
    CHECK(oracle::chromatic_number(cycle_graph(9)) == 3);
    CHECK(oracle::chromatic_number(complete_graph(5)) == 5);
    CHECK(oracle::chromatic_number(petersen_graph()) == 3);
    CHECK(oracle::chromatic_number(groetzsch_graph()) == 4);
    CHECK(oracle::k_colourable(petersen_graph(), 3));
    CHECK_FALSE(oracle::k_colourable(petersen_graph(), 2));
}

TEST_CASE("oracle triangles and paths")
{
    CHECK(oracle::triangle_free(petersen_graph()));
    CHECK_FALSE(oracle::triangle_free(complete_graph(3)));
    Graph c6 = cycle_graph(6);
    CHECK(oracle::induced_path_lengths(c6, {0, 1, 2, 3, 4, 5}, 0, 3) == std::set<int>{3});
    CHECK(oracle::induced_path_lengths(c6, {0, 1, 2, 3}, 0, 3) == std::set<int>{3});
    CHECK(oracle::induced_path_lengths(c6, {0, 1, 3}, 0, 3).empty());
    CHECK(oracle::induced_path_lengths(cycle_graph(7), {0, 1, 2, 3, 4, 5, 6}, 0, 3) == std::set<int>{3, 4});
}

TEST_CASE("oracle graph6")
{
    CHECK(oracle::graph6(cycle_graph(5)) == "Dhc");
    CHECK(oracle::graph6(Graph(0, {})) == "?");
    CHECK(oracle::graph6(empty_graph(1)) == "@");
    CHECK(oracle::graph6(complete_graph(2)) == "A_");
    CHECK(oracle::graph6(complete_graph(4)) == "C~");
    CHECK(oracle::graph6(empty_graph(63)).substr(0, 4) == "~??~");
}
