#ifndef HOLESCOPE_HOLES_HPP
#define HOLESCOPE_HOLES_HPP

#include "holescope/budget.hpp"
#include "holescope/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace holescope {

/// Lengths of the holes (induced cycles of length >= 4) up to a cap, with one
/// witness per length.
class HoleSpectrum {
  public:
    HoleSpectrum(int cap, bool complete, std::map<int, VertexSeq> witnesses);

    /// Sorted ascending.
    std::vector<int> lengths() const;
    bool contains(int length) const { return witnesses_.contains(length); }
    /// Throws std::out_of_range if the length is absent.
    const VertexSeq& witness(int length) const { return witnesses_.at(length); }
    const std::map<int, VertexSeq>& witnesses() const { return witnesses_; }

    int cap() const { return cap_; }
    /// True when the cap is at least the vertex count, so no longer hole exists.
    bool complete() const { return complete_; }

  private:
    int cap_;
    bool complete_;
    std::map<int, VertexSeq> witnesses_;
};

HoleSpectrum hole_spectrum(const Graph& g, int max_length, Budget budget = {});

std::optional<VertexSeq> find_hole_of_length(const Graph& g, int length, Budget budget = {});

/// Some odd hole with length in [min_length, max_length], if one exists.
std::optional<VertexSeq> odd_hole_min_length(const Graph& g, int min_length, int max_length, Budget budget = {});

/// nu holes of lengths t+1, ..., t+nu.
struct HoleInterval {
    int t;
    std::vector<VertexSeq> holes;
};

/// Smallest t whose interval lies inside the spectrum.
std::optional<HoleInterval> hole_interval(const HoleSpectrum& spectrum, int nu);
std::optional<HoleInterval> hole_interval(const Graph& g, int nu, int max_length, Budget budget = {});

struct SpectrumDensity {
    int count = 0;
    std::optional<int> min;
    std::optional<int> max;
    /// Largest difference between consecutive members; 0 with fewer than two.
    int largest_gap = 0;
};

SpectrumDensity spectrum_density(const std::vector<int>& lengths);
SpectrumDensity spectrum_density(const Graph& g, int max_length, Budget budget = {});

}  // namespace holescope

#endif
