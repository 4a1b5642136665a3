#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linecrit {

struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite multidigraph on vertices 0..n-1 with an ordered edge list.
// Parallel edges and loops are allowed; the vertex and edge order fix the
// basis order of every matrix built on top.
class Multidigraph {
 public:
  Multidigraph() = default;
  explicit Multidigraph(int vertex_count);
  Multidigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int tail, int head);

  int out_degree(int v) const;
  int in_degree(int v) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
};

// Distinguished edge e* = (w*, v*): w* is the sink of the graph and the
// base vertex of its line graph.
struct BasePoint {
  int sink = 0;       // w*, tail of the base edge
  int base_edge = 0;  // index of e* in the edge list
  int target = 0;     // v*, head of the base edge

  static BasePoint at_edge(const Multidigraph& g, int edge_index);
};

bool base_point_valid(const Multidigraph& g, const BasePoint& bp);

// Vertices are the edges of g, in edge order; for each pair e, f with
// head(e) = tail(f) there is one edge e -> f.  Edges are emitted in
// lexicographic (e, f) order.
Multidigraph line_graph(const Multidigraph& g);

// The common out-degree when every vertex has the same one, nullopt
// otherwise.  The empty graph has no out-degree to speak of.
std::optional<int> is_k_out_regular(const Multidigraph& g);

struct HypothesisCheck {
  bool ok = false;
  std::vector<std::string> reasons;  // one per violated vertex
};

// Every vertex needs in-degree at least 1 and the target of the base edge
// needs in-degree at least 2.
HypothesisCheck check_hypotheses(const Multidigraph& g, const BasePoint& bp);

// reachable[v] is true when v has a directed path to w (w included).
std::vector<bool> reachable_to(const Multidigraph& g, int w);

struct GeneratedInstance {
  Multidigraph graph;
  BasePoint base;
};

// Deterministic per (n, k, seed): every vertex draws k heads uniformly
// with replacement, resampling whole graphs until all in-degrees are
// positive; the first edge whose head has in-degree at least 2 becomes the
// base edge.  Throws generation_error after 1000 failed attempts.
GeneratedInstance random_k_out_regular(int n, int k, std::uint64_t seed);

}  // namespace linecrit
