#ifndef HOLESCOPE_CHROMA_HPP
#define HOLESCOPE_CHROMA_HPP

#include "holescope/budget.hpp"
#include "holescope/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace holescope {

/// A proper colouring using colours 0..k-1 where k is optimal.
std::vector<int> optimal_colouring(const Graph& g, Budget budget = {});

/// Exact chromatic number by DSATUR branch and bound. The null graph has
/// chromatic number 0. Throws BudgetExhausted rather than guessing.
int chromatic_number(const Graph& g, Budget budget = {});

int chi_of_set(const Graph& g, const VertexSet& s, Budget budget = {});

/// Maximum over v of the chromatic number of the closed ball of the given
/// radius around v; 0 for the null graph.
int chi_rho(const Graph& g, int radius, Budget budget = {});

/// Chromatic numbers of the closed balls, indexed by vertex.
std::vector<int> ball_chromatic_numbers(const Graph& g, int radius, Budget budget = {});

class PhiRangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A non-decreasing function N -> N given by its values on 0..K.
class PhiTable {
  public:
    enum class Policy { fail, clamp };

    PhiTable(std::vector<int> values, Policy policy = Policy::fail);

    /// Parses a JSON array of nonnegative integers.
    static PhiTable from_json(std::string_view text, Policy policy = Policy::fail);
    static PhiTable identity(int max_arg, Policy policy = Policy::fail);
    static PhiTable constant(int value, int max_arg, Policy policy = Policy::clamp);

    /// Past the table: the last value under clamp, PhiRangeError under fail.
    int operator()(long kappa) const;

    const std::vector<int>& values() const { return values_; }
    Policy policy() const { return policy_; }

  private:
    std::vector<int> values_;
    Policy policy_;
};

struct ControlViolation {
    VertexSet subset;
    int chi;
    int chi_rho;
};

struct ControlReport {
    std::uint64_t checked = 0;
    std::vector<ControlViolation> violations;
    bool exhaustive = false;
};

struct ControlOptions {
    /// Enumerate every induced subgraph when 2^n is at most this.
    std::uint64_t subset_cap = std::uint64_t{1} << 16;
    /// Otherwise sample this many connected induced subgraphs.
    std::uint64_t samples = 256;
    std::uint64_t seed = 1;
    Budget budget = {};
};

/// Looks for induced subgraphs H with chi(H) > phi(chi^radius(H)); balls are
/// taken inside H. Every reported violation is genuine; a clean sampled report
/// is evidence, not proof.
ControlReport check_controlled(const Graph& g, int radius, const PhiTable& phi, const ControlOptions& options = {});

}  // namespace holescope

#endif
