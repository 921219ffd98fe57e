#pragma once

#include <iosfwd>
#include <string>

#include "fillorder/static_graph.hpp"

namespace fillorder {

enum class GraphFormat { MatrixMarket, EdgeList };

// Base of the integer labels in an edge list. Auto picks 1 when no label 0
// appears and 0 otherwise.
enum class IndexBase { Auto, Zero, One };

GraphFormat parse_graph_format(const std::string& name);  // "mtx" or "edges"

// Throws ParseError (message carries the line number) on malformed input.
StaticGraph load_graph(std::istream& in, GraphFormat format, IndexBase base = IndexBase::Auto);
StaticGraph load_graph_file(const std::string& path, GraphFormat format,
                            IndexBase base = IndexBase::Auto);

void write_edge_list(std::ostream& out, const StaticGraph& g);
void write_matrix_market(std::ostream& out, const StaticGraph& g);

}  // namespace fillorder
