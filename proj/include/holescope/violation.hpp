#ifndef HOLESCOPE_VIOLATION_HPP
#define HOLESCOPE_VIOLATION_HPP

#include "holescope/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace holescope {

/// One broken axiom: a stable rule identifier plus the vertices that witness it.
struct Violation {
    std::string rule;
    std::vector<Vertex> witnesses;
    std::string detail;
};

using Violations = std::vector<Violation>;

inline bool has_rule(const Violations& vs, std::string_view rule)
{
    for (const auto& v : vs)
        if (v.rule == rule)
            return true;
    return false;
}

}  // namespace holescope

#endif
