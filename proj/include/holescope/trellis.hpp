#ifndef HOLESCOPE_TRELLIS_HPP
#define HOLESCOPE_TRELLIS_HPP

#include "holescope/graph.hpp"
#include "holescope/violation.hpp"

#include <vector>

namespace holescope {

/// Named vertices of a (possibly extended) trellis. Rows index X from 0;
/// columns run 1..t, with column 0 used only by the extension. Unused
/// column-0 slots hold -1.
struct TrellisEmbedding {
    VertexSeq x;
    bool extended = false;
    /// a[j], b[j] for j = 0..t.
    VertexSeq a, b;
    /// a_map[row][j] is a_{x_row, j}.
    std::vector<VertexSeq> a_map, b_map;
    Vertex c0 = -1;

    int rows() const { return static_cast<int>(x.size()); }
    int columns() const { return static_cast<int>(a.size()) - 1; }
    int first_column() const { return extended ? 0 : 1; }
};

/// Throws std::invalid_argument when the index maps are incomplete.
Violations verify_trellis(const Graph& g, const TrellisEmbedding& t);

/// Rows and columns restricted to the given indices (column 0 is kept when
/// extended), renumbered in the given order.
TrellisEmbedding sub_trellis(const TrellisEmbedding& t, const std::vector<int>& rows, const std::vector<int>& columns);

}  // namespace holescope

#endif
