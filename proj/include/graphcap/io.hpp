#pragma once

#include <string>
#include <string_view>

#include "graphcap/graph.hpp"

namespace graphcap {

enum class GraphFormat { EdgeList, Dimacs };

/// Text is treated as DIMACS when its first significant line is a "p" header,
/// otherwise as a whitespace-separated edge list with '#' comments.
GraphFormat detect_format(std::string_view text);

/// Parses either format. Self-loops, duplicate edges and malformed lines are
/// hard errors (ParseError). DIMACS ids are 1-based and converted to 0-based.
Graph parse_graph(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);

/// Reads and parses a file; throws Error when it cannot be opened.
Graph read_graph_file(const std::string& path);

/// Edge-list rendering, one "u v" line per edge, optional leading comment.
std::string to_edge_list(const Graph& g, std::string_view comment = {});

}  // namespace graphcap
