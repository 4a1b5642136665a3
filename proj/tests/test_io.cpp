#include <doctest.h>

#include <sstream>
#include <vector>

#include "linecrit/errors.hpp"
#include "linecrit/io.hpp"

using namespace linecrit;

namespace {

GraphDoc parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace

TEST_CASE("graph parsing") {
  const GraphDoc doc = parse(
      "# a triangle, both ways\n"
      "vertices a b c\n"
      "\n"
      "edge a b\n"
      "edge b c   # trailing comment\n"
      "edge c a\n");
  CHECK(doc.graph.vertex_count() == 3);
  CHECK(doc.graph.edge_count() == 3);
  CHECK(doc.vertex_names == std::vector<std::string>{"a", "b", "c"});
  CHECK(doc.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(doc.vertex_index("b") == 1);
  CHECK_FALSE(doc.vertex_index("d").has_value());

  const GraphDoc split = parse(
      "vertices a\n"
      "vertices b\n"
      "edge a a\n");
  CHECK(split.graph.vertex_count() == 2);
  CHECK(split.graph.edges() == std::vector<Edge>{{0, 0}});

  // '#' inside a name is literal; only standalone '#' opens a comment.
  const GraphDoc hashed = parse(
      "vertices a#0 b#1 # two derived-style names\n"
      "edge a#0 b#1\n"
      "#edge b#1 a#0\n");
  CHECK(hashed.vertex_names == std::vector<std::string>{"a#0", "b#1"});
  CHECK(hashed.graph.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse("vertices a a\n"),
                       "line 1: duplicate vertex 'a'", parse_error);
  CHECK_THROWS_WITH_AS(parse("vertices a\nvertices a\n"),
                       "line 2: duplicate vertex 'a'", parse_error);
  CHECK_THROWS_WITH_AS(parse("vertices a b\n\nedge a q\n"),
                       "line 3: unknown vertex 'q'", parse_error);
  CHECK_THROWS_WITH_AS(parse("vertices a b\nedge a\n"),
                       "line 2: edge needs exactly a tail and a head",
                       parse_error);
  CHECK_THROWS_WITH_AS(parse("vertices a b\nedge a b c\n"),
                       "line 2: edge needs exactly a tail and a head",
                       parse_error);
  CHECK_THROWS_WITH_AS(parse("vertices a\nnode b\n"),
                       "line 2: unknown directive 'node'", parse_error);
  CHECK_THROWS_WITH_AS(parse("# nothing\n"), "graph declares no vertices",
                       parse_error);
  CHECK_THROWS_AS(parse_graph_file("/nonexistent/graph.txt"), parse_error);
}

TEST_CASE("graph emit and reparse round-trip") {
  const GraphDoc doc = parse(
      "vertices u w\n"
      "edge u w\n"
      "edge w u\n"
      "edge u w\n");
  std::ostringstream out;
  emit_graph(out, doc);
  CHECK(out.str() ==
        "vertices u w\n"
        "edge u w\n"
        "edge w u\n"
        "edge u w\n");
  const GraphDoc back = parse(out.str());
  CHECK(back.vertex_names == doc.vertex_names);
  CHECK(back.graph.edges() == doc.graph.edges());
}

TEST_CASE("line graph document derives vertex names") {
  const GraphDoc doc = parse(
      "vertices a b c\n"
      "edge a b\nedge a c\nedge b a\nedge b c\nedge c a\nedge c b\n");
  const GraphDoc lg = line_graph_doc(doc);
  CHECK(lg.graph.vertex_count() == 6);
  CHECK(lg.graph.edge_count() == 12);
  CHECK(lg.vertex_names ==
        std::vector<std::string>{"a>b#0", "a>c#1", "b>a#2", "b>c#3", "c>a#4",
                                 "c>b#5"});
  CHECK(lg.vertex_index("b>c#3") == 3);

  // The derived names survive a full emit/parse cycle.
  std::ostringstream out;
  emit_graph(out, lg);
  const GraphDoc back = parse(out.str());
  CHECK(back.vertex_names == lg.vertex_names);
  CHECK(back.graph.edges() == lg.graph.edges());
}

TEST_CASE("matrix parsing and emission") {
  std::istringstream in("2 3\n1 -2 3\n40 5 -6\n");
  const IntMatrix m = parse_matrix(in);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m == IntMatrix::from_rows({{1, -2, 3}, {40, 5, -6}}));

  std::ostringstream out;
  emit_matrix(out, m);
  std::istringstream again(out.str());
  CHECK(parse_matrix(again) == m);

  std::istringstream empty("0 0\n");
  CHECK(parse_matrix(empty).rows() == 0);
}

TEST_CASE("matrix parse errors") {
  std::istringstream no_header("abc\n");
  CHECK_THROWS_WITH_AS(parse_matrix(no_header),
                       "matrix needs a 'rows cols' header", parse_error);
  std::istringstream negative("-1 2\n");
  CHECK_THROWS_WITH_AS(parse_matrix(negative),
                       "matrix needs a 'rows cols' header", parse_error);
  std::istringstream truncated("2 2\n1 2 3\n");
  CHECK_THROWS_WITH_AS(parse_matrix(truncated),
                       "matrix entry (1, 1) is missing or malformed",
                       parse_error);
  CHECK_THROWS_AS(parse_matrix_file("/nonexistent/matrix.txt"), parse_error);
}
