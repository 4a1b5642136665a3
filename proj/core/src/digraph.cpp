#include "linecrit/digraph.hpp"

#include <stdexcept>
#include <utility>

#include "linecrit/errors.hpp"
#include "sampling.hpp"

namespace linecrit {

Multidigraph::Multidigraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0)
    throw std::invalid_argument("Multidigraph: negative vertex count");
}

Multidigraph::Multidigraph(int vertex_count, std::vector<Edge> edges)
    : Multidigraph(vertex_count) {
  for (const Edge& e : edges) {
    check_vertex(e.tail);
    check_vertex(e.head);
  }
  edges_ = std::move(edges);
}

const Edge& Multidigraph::edge(int e) const {
  if (e < 0 || e >= edge_count())
    throw std::invalid_argument("edge: index out of range");
  return edges_[static_cast<std::size_t>(e)];
}

void Multidigraph::add_edge(int tail, int head) {
  check_vertex(tail);
  check_vertex(head);
  edges_.push_back({tail, head});
}

int Multidigraph::out_degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (const Edge& e : edges_)
    if (e.tail == v) ++d;
  return d;
}

int Multidigraph::in_degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (const Edge& e : edges_)
    if (e.head == v) ++d;
  return d;
}

void Multidigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex index out of range");
}

BasePoint BasePoint::at_edge(const Multidigraph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  return {e.tail, edge_index, e.head};
}

bool base_point_valid(const Multidigraph& g, const BasePoint& bp) {
  if (bp.base_edge < 0 || bp.base_edge >= g.edge_count()) return false;
  const Edge& e = g.edge(bp.base_edge);
  return e.tail == bp.sink && e.head == bp.target;
}

Multidigraph line_graph(const Multidigraph& g) {
  const int m = g.edge_count();
  Multidigraph lg(m);
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (g.edge(e).head == g.edge(f).tail) lg.add_edge(e, f);
  return lg;
}

std::optional<int> is_k_out_regular(const Multidigraph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("is_k_out_regular: empty graph");
  const int k = g.out_degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != k) return std::nullopt;
  return k;
}

HypothesisCheck check_hypotheses(const Multidigraph& g, const BasePoint& bp) {
  if (!base_point_valid(g, bp))
    throw std::invalid_argument("check_hypotheses: invalid base point");
  HypothesisCheck result;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) < 1)
      result.reasons.push_back("vertex " + std::to_string(v) +
                               " has in-degree 0");
  if (g.in_degree(bp.target) < 2)
    result.reasons.push_back("target vertex " + std::to_string(bp.target) +
                             " has in-degree " +
                             std::to_string(g.in_degree(bp.target)) +
                             ", need at least 2");
  result.ok = result.reasons.empty();
  return result;
}

std::vector<bool> reachable_to(const Multidigraph& g, int w) {
  if (w < 0 || w >= g.vertex_count())
    throw std::invalid_argument("reachable_to: vertex out of range");
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> stack{w};
  seen[static_cast<std::size_t>(w)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges())
      if (e.head == v && !seen[static_cast<std::size_t>(e.tail)]) {
        seen[static_cast<std::size_t>(e.tail)] = true;
        stack.push_back(e.tail);
      }
  }
  return seen;
}

GeneratedInstance random_k_out_regular(int n, int k, std::uint64_t seed) {
  if (n < 2 || k < 2)
    throw std::invalid_argument(
        "random_k_out_regular: need n >= 2 and k >= 2");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Multidigraph g(n);
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < k; ++j)
        g.add_edge(v, static_cast<int>(detail::uniform_below(
                          rng, static_cast<std::uint64_t>(n))));
    bool covered = true;
    for (int v = 0; v < n && covered; ++v)
      if (g.in_degree(v) == 0) covered = false;
    if (!covered) continue;
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.in_degree(g.edge(e).head) >= 2)
        return {g, BasePoint::at_edge(g, e)};
  }
  throw generation_error(
      "random_k_out_regular: no admissible instance in 1000 attempts");
}

}  // namespace linecrit
