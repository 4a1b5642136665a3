#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linecrit/abelian.hpp"
#include "linecrit/digraph.hpp"

namespace linecrit {

// Column v is Delta(v) = sum over edges (v, u) of (u - v); loops drop out.
IntMatrix laplacian_matrix(const Multidigraph& g);

// Laplacian with the sink column replaced by the sink unit vector.
IntMatrix phi_matrix(const Multidigraph& g, int sink);

// K(g, sink), the cokernel of phi.
AbelianGroup critical_group(const Multidigraph& g, int sink);

// Number of spanning arborescences oriented toward the root, as the
// absolute determinant of the root-deleted Laplacian.
Int kappa(const Multidigraph& g, int root);

// Direct count of spanning arborescences by exhausting the choice of one
// out-edge per non-root vertex.  Guarded to at most 10 vertices and 20
// edges; beyond that it throws size_error.
std::uint64_t enumerate_arborescences(const Multidigraph& g, int root);

// The maps tying g to its line graph, as matrices over the bases fixed by
// the vertex and edge orders.  All are total on the ambient lattices.
struct StructuralMaps {
  IntMatrix tau;    // edge -> its head; the base edge -> 0
  IntMatrix rho0;   // vertex v -> Delta(w*) - v* - w* + v; an involution
  IntMatrix rho;    // rho0 after tau
  IntMatrix psi;    // vertex v -> Delta(v), except w* -> Delta(w*) - v*
  IntMatrix sigma;  // vertex v -> sum of edges with tail v
};

// Deliberate defects for the negative controls of the verifier.
enum class FaultInjection {
  none,
  rho_entry,             // bump one entry of rho
  tau_keep_base_column,  // skip the tau(e*) = 0 exception
};

StructuralMaps structural_maps(const Multidigraph& g, const BasePoint& bp);
StructuralMaps structural_maps(const Multidigraph& g, const BasePoint& bp,
                               FaultInjection fault);

// The descent of rho to K(LG, e*) -> K(G, w*).
GroupHom rho_bar(const Multidigraph& g, const BasePoint& bp);

enum class CheckStatus { pass, fail, skipped };

struct ReportCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  bool binding = false;
  std::string detail;
};

// Everything verify_main_theorem measured on one instance.  Checks that
// depend on unmet preconditions are reported but marked non-binding;
// nothing here throws on a mathematical failure.
struct TheoremReport {
  int vertex_count = 0;
  int edge_count = 0;
  BasePoint base;
  std::optional<int> k;

  bool hypotheses_ok = false;
  std::vector<std::string> hypothesis_violations;

  std::string group_structure;       // K(G, w*)
  std::string line_group_structure;  // K(LG, e*)
  std::string kernel_structure;      // "-" while rho_bar is undefined
  std::string torsion_structure;     // "-" unless k-out-regular
  std::optional<Int> group_order;    // nullopt = infinite
  std::optional<Int> line_group_order;
  std::optional<Int> kernel_order;
  std::optional<Int> torsion_order;

  Int kappa_graph;
  Int kappa_line_graph;

  bool diagram_top_ok = false;
  bool diagram_bottom_ok = false;
  bool rho0_involution_ok = false;
  bool rho_bar_defined = false;
  bool rho_bar_surjective = false;
  std::optional<bool> sigma_bar_defined;       // k-out-regular only
  std::optional<bool> sigma_tau_mult_k_ok;     // k-out-regular only
  std::optional<bool> kernel_equals_torsion;   // k and both orders finite
  std::optional<bool> torsion_parts_match;     // k and some order infinite
  std::optional<bool> order_factorization_ok;  // both orders finite
  bool divisibility_ok = false;

  std::vector<ReportCheck> checks() const;
  bool all_binding_pass() const;
  std::vector<std::string> failed_binding_checks() const;
};

TheoremReport verify_main_theorem(const Multidigraph& g, const BasePoint& bp);
TheoremReport verify_main_theorem(const Multidigraph& g, const BasePoint& bp,
                                  FaultInjection fault);

// kappa(g, w*) divides kappa(line graph, e*).  Demands the hypotheses up
// front and throws hypothesis_error otherwise.
bool verify_divisibility(const Multidigraph& g, const BasePoint& bp);

enum class ReportFormat { text, record };

void print_report(std::ostream& os, const TheoremReport& report,
                  ReportFormat format);

}  // namespace linecrit
