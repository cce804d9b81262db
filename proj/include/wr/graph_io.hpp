#pragma once

#include <string>

#include "wr/graph.hpp"

namespace wr {

enum class graph_format { edge_list, graph6 };

// edge_list: first data line "n m", then m lines "u v" (1-based). Blank lines
// and lines starting with '#' are skipped. graph6: standard ASCII encoding,
// optional ">>graph6<<" header, n <= 62.
graph parse_graph(const std::string& text, graph_format fmt);
std::string serialize_graph(const graph& g, graph_format fmt);

}  // namespace wr
