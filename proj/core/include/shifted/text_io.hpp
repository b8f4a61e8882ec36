#pragma once

#include <iosfwd>
#include <string>

#include "shifted/graph.hpp"
#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// Text formats. Both kinds of file share the same framing:
///   - '#' starts a comment (rest of line ignored), blank lines ignored;
///   - an optional header line "n=<k>" fixes vertex_count (defaults to the
///     largest label that appears);
///   - every other line is a list of positive integers separated by spaces.
/// For a complex each line is one facet; for a graph each line is one edge
/// "u v". Errors raise std::invalid_argument.
SimplicialComplex parse_complex(const std::string& text);
Graph parse_graph(const std::string& text);

SimplicialComplex read_complex_file(const std::string& path);
Graph read_graph_file(const std::string& path);

/// Inverse of parse_complex for non-void complexes; a void complex renders as
/// a header plus a comment (the format has no facet-line encoding for it).
std::string render_complex(const SimplicialComplex& k);
std::string render_graph(const Graph& g);

}  // namespace shifted
