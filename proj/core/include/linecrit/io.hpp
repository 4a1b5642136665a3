#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linecrit/digraph.hpp"
#include "linecrit/exactint.hpp"

namespace linecrit {

// A multidigraph together with the vertex names used by the text format.
struct GraphDoc {
  Multidigraph graph;
  std::vector<std::string> vertex_names;

  std::optional<int> vertex_index(const std::string& name) const;
};

// Line-oriented format: '#' at the start of a line or after whitespace
// opens a comment, "vertices" lines declare names in order, "edge TAIL
// HEAD" lines append edges.  Names are whitespace-free tokens and must be
// declared before use; a '#' inside a name is literal.
GraphDoc parse_graph(std::istream& in);
GraphDoc parse_graph_file(const std::string& path);
void emit_graph(std::ostream& out, const GraphDoc& doc);

// Line graph of doc with the derived names "tail>head#i", where i is the
// edge's index in doc.
GraphDoc line_graph_doc(const GraphDoc& doc);

// Matrix format: a "rows cols" header line, then one line per row.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_file(const std::string& path);
void emit_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace linecrit
