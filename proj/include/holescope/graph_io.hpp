#ifndef HOLESCOPE_GRAPH_IO_HPP
#define HOLESCOPE_GRAPH_IO_HPP

#include "holescope/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace holescope {

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Decodes one graph in the header-less graph6 format. A single trailing
/// newline (LF or CRLF) is tolerated. sparse6 and digraph6 are rejected.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6, without header or newline.
std::string emit_graph6(const Graph& g);

/// Whitespace edge list: one "u v" pair per line, optional "n <k>" header,
/// blank lines and lines starting with '#' ignored.
Graph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

}  // namespace holescope

#endif
