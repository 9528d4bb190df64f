#ifndef HOLESCOPE_CONSTRUCTIONS_HPP
#define HOLESCOPE_CONSTRUCTIONS_HPP

#include "holescope/budget.hpp"
#include "holescope/cable.hpp"
#include "holescope/chroma.hpp"
#include "holescope/levels.hpp"
#include "holescope/trellis.hpp"

#include <string>
#include <utility>
#include <variant>

namespace holescope {

struct ThresholdNotMet {
    int stage = 0;
    std::string detail;
};

struct OutOfBudget {
    std::string detail;
};

/// Outcome of a construction: a witness, a failed threshold at some stage, or
/// an exhausted budget.
template <typename W>
class ConstructionResult {
  public:
    enum class Outcome { success, threshold_not_met, budget_exhausted };

    ConstructionResult(W witness) : value_(std::move(witness)) {}
    ConstructionResult(ThresholdNotMet t) : value_(std::move(t)) {}
    ConstructionResult(OutOfBudget b) : value_(std::move(b)) {}

    Outcome outcome() const { return static_cast<Outcome>(value_.index()); }
    bool ok() const { return value_.index() == 0; }
    /// Throws std::bad_variant_access unless ok().
    const W& witness() const { return std::get<0>(value_); }
    const ThresholdNotMet& threshold() const { return std::get<1>(value_); }
    std::string detail() const
    {
        if (auto t = std::get_if<1>(&value_))
            return t->detail;
        if (auto b = std::get_if<2>(&value_))
            return b->detail;
        return {};
    }

  private:
    std::variant<W, ThresholdNotMet, OutOfBudget> value_;
};

const char* outcome_name(int outcome);

template <typename W>
const char* outcome_name(const ConstructionResult<W>& r)
{
    return outcome_name(static_cast<int>(r.outcome()));
}

/// BFS layers from the smallest vertex of the first component of maximum
/// chromatic number, cut at the first layer of maximum chromatic number.
/// Throws std::invalid_argument for the null graph.
Levelling build_levelling(const Graph& g, Budget budget = {});

/// The graph-checking constructions below throw std::invalid_argument when g
/// has a triangle.
ConstructionResult<VertexSeq> find_5_hole(const Graph& g, Budget budget = {});
ConstructionResult<VertexSeq> find_6_hole(const Graph& g, Budget budget = {});

/// Also throws when g has a 4-hole or ell < 5.
ConstructionResult<VertexSeq> find_ell_hole_c4free(const Graph& g, int ell, Budget budget = {});

struct UniformTrellis {
    TrellisEmbedding trellis;
    /// 1: every a_{i,j} b_{i',j} (i < i') nonadjacent; 2: every one adjacent.
    int k;
};

/// Largest row set first, then lexicographic; keeps every column uniform on
/// the chosen rows.
ConstructionResult<UniformTrellis> uniform_sub_trellis(const Graph& g, const TrellisEmbedding& t, int size,
                                                       Budget budget = {});

/// Throws std::invalid_argument for ell < 8, too few rows or columns, ell = 11
/// with k = 1 on a trellis without extension, or a trellis that is not
/// uniform of type k where the hole needs it.
ConstructionResult<VertexSeq> hole_from_extended_trellis(const Graph& g, const TrellisEmbedding& t, int k, int ell);

/// Throws std::invalid_argument unless the cable is valid, all pairs have
/// type 2, t >= 2 and the base is nonempty.
ConstructionResult<VertexSeq> hole_from_type2_cable(const Graph& g, const Cable& c);

struct TypedCable {
    Cable cable;
    int type;
};

/// Type-1 index sets of size m are tried before type-2 sets of size n.
/// Throws std::invalid_argument for an invalid cable.
ConstructionResult<TypedCable> monochromatic_subcable(const Graph& g, const Cable& c, int m, int n,
                                                      Budget budget = {});

/// Throws std::invalid_argument unless the cable is valid with every pair of
/// type 1.
MulticoverCert cable_type1_to_multicover(const Graph& g, const Cable& c);

/// Stage thresholds tau_t = tau, tau_s = phi(2^s tau_{s+1} + 1).
/// Throws PhiRangeError when phi cannot supply them.
std::vector<long> cable_thresholds(int t, int tau, const PhiTable& phi);

ConstructionResult<Cable> grow_cable(const Graph& g, int t, int tau, const PhiTable& phi, Budget budget = {});

}  // namespace holescope

#endif
