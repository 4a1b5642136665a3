#include "linecrit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "linecrit/errors.hpp"

namespace linecrit {

namespace {

// A '#' opens a comment only at the start of the line or after whitespace;
// inside a token it is literal, so derived line graph names stay parseable.
std::string strip_comment(const std::string& line) {
  for (std::size_t pos = 0; pos < line.size(); ++pos)
    if (line[pos] == '#' &&
        (pos == 0 || line[pos - 1] == ' ' || line[pos - 1] == '\t'))
      return line.substr(0, pos);
  return line;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail_at(int line_no, const std::string& what) {
  throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::optional<int> GraphDoc::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertex_names.size(); ++i)
    if (vertex_names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

GraphDoc parse_graph(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  struct PendingEdge {
    int tail, head;
  };
  std::vector<PendingEdge> edges;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "vertices") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (index.count(toks[i]))
          fail_at(line_no, "duplicate vertex '" + toks[i] + "'");
        index.emplace(toks[i], static_cast<int>(names.size()));
        names.push_back(toks[i]);
      }
    } else if (toks[0] == "edge") {
      if (toks.size() != 3)
        fail_at(line_no, "edge needs exactly a tail and a head");
      const auto tail = index.find(toks[1]);
      if (tail == index.end())
        fail_at(line_no, "unknown vertex '" + toks[1] + "'");
      const auto head = index.find(toks[2]);
      if (head == index.end())
        fail_at(line_no, "unknown vertex '" + toks[2] + "'");
      edges.push_back({tail->second, head->second});
    } else {
      fail_at(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (names.empty()) throw parse_error("graph declares no vertices");

  GraphDoc doc;
  doc.graph = Multidigraph(static_cast<int>(names.size()));
  for (const PendingEdge& e : edges) doc.graph.add_edge(e.tail, e.head);
  doc.vertex_names = std::move(names);
  return doc;
}

GraphDoc parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_graph(in);
}

void emit_graph(std::ostream& out, const GraphDoc& doc) {
  out << "vertices";
  for (const std::string& name : doc.vertex_names) out << " " << name;
  out << "\n";
  for (const Edge& e : doc.graph.edges())
    out << "edge " << doc.vertex_names[static_cast<std::size_t>(e.tail)] << " "
        << doc.vertex_names[static_cast<std::size_t>(e.head)] << "\n";
}

GraphDoc line_graph_doc(const GraphDoc& doc) {
  GraphDoc out;
  out.graph = line_graph(doc.graph);
  out.vertex_names.reserve(static_cast<std::size_t>(doc.graph.edge_count()));
  for (int e = 0; e < doc.graph.edge_count(); ++e) {
    const Edge& edge = doc.graph.edge(e);
    out.vertex_names.push_back(
        doc.vertex_names[static_cast<std::size_t>(edge.tail)] + ">" +
        doc.vertex_names[static_cast<std::size_t>(edge.head)] + "#" +
        std::to_string(e));
  }
  return out;
}

IntMatrix parse_matrix(std::istream& in) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw parse_error("matrix needs a 'rows cols' header");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(in >> m(i, j)))
        throw parse_error("matrix entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") is missing or malformed");
  return m;
}

IntMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_matrix(in);
}

void emit_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << m(i, j);
    }
    out << "\n";
  }
}

}  // namespace linecrit
