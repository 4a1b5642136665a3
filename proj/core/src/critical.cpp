#include "linecrit/critical.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "linecrit/errors.hpp"

namespace linecrit {

namespace {

bool divides(const Int& a, const Int& b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

std::string order_string(const std::optional<Int>& n) {
  return n ? n->str() : "infinite";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skip";
  }
}

}  // namespace

IntMatrix laplacian_matrix(const Multidigraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix lap(n, n);
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) continue;
    lap(static_cast<std::size_t>(e.head), static_cast<std::size_t>(e.tail)) += 1;
    lap(static_cast<std::size_t>(e.tail), static_cast<std::size_t>(e.tail)) -= 1;
  }
  return lap;
}

IntMatrix phi_matrix(const Multidigraph& g, int sink) {
  if (sink < 0 || sink >= g.vertex_count())
    throw std::invalid_argument("phi_matrix: sink out of range");
  IntMatrix phi = laplacian_matrix(g);
  const std::size_t w = static_cast<std::size_t>(sink);
  for (std::size_t i = 0; i < phi.rows(); ++i) phi(i, w) = (i == w) ? 1 : 0;
  return phi;
}

AbelianGroup critical_group(const Multidigraph& g, int sink) {
  return AbelianGroup(phi_matrix(g, sink));
}

Int kappa(const Multidigraph& g, int root) {
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("kappa: root out of range");
  const std::size_t r = static_cast<std::size_t>(root);
  return abs(determinant(laplacian_matrix(g).without_row_col(r, r)));
}

std::uint64_t enumerate_arborescences(const Multidigraph& g, int root) {
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("enumerate_arborescences: root out of range");
  if (g.vertex_count() > 10 || g.edge_count() > 20)
    throw size_error(
        "enumerate_arborescences: beyond the 10-vertex / 20-edge guard");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges())
    if (e.tail != root)
      choices[static_cast<std::size_t>(e.tail)].push_back(e.head);
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (v != root) {
      if (choices[static_cast<std::size_t>(v)].empty()) return 0;
      order.push_back(v);
    }
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  std::vector<std::size_t> idx(order.size(), 0);
  std::uint64_t count = 0;
  for (;;) {
    for (std::size_t i = 0; i < order.size(); ++i)
      next[static_cast<std::size_t>(order[i])] =
          choices[static_cast<std::size_t>(order[i])][idx[i]];
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int x = v;
      int steps = 0;
      while (x != root && steps <= n) {
        x = next[static_cast<std::size_t>(x)];
        ++steps;
      }
      if (x != root) ok = false;
    }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < choices[static_cast<std::size_t>(order[pos])].size())
        break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return count;
}

StructuralMaps structural_maps(const Multidigraph& g, const BasePoint& bp) {
  return structural_maps(g, bp, FaultInjection::none);
}

StructuralMaps structural_maps(const Multidigraph& g, const BasePoint& bp,
                               FaultInjection fault) {
  if (!base_point_valid(g, bp))
    throw std::invalid_argument("structural_maps: invalid base point");
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t m = static_cast<std::size_t>(g.edge_count());
  const IntMatrix lap = laplacian_matrix(g);

  StructuralMaps maps{IntMatrix(n, m), IntMatrix(n, n), IntMatrix(n, m),
                      IntMatrix(n, n), IntMatrix(m, n)};

  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == bp.base_edge && fault != FaultInjection::tau_keep_base_column)
      continue;
    maps.tau(static_cast<std::size_t>(g.edge(e).head),
             static_cast<std::size_t>(e)) = 1;
  }

  IntVec shift = lap.column(static_cast<std::size_t>(bp.sink));
  shift[static_cast<std::size_t>(bp.target)] -= 1;
  shift[static_cast<std::size_t>(bp.sink)] -= 1;
  for (std::size_t v = 0; v < n; ++v) {
    IntVec col = shift;
    col[v] += 1;
    maps.rho0.set_column(v, col);
  }

  maps.psi = lap;
  maps.psi(static_cast<std::size_t>(bp.target),
           static_cast<std::size_t>(bp.sink)) -= 1;

  for (int e = 0; e < g.edge_count(); ++e)
    maps.sigma(static_cast<std::size_t>(e),
               static_cast<std::size_t>(g.edge(e).tail)) = 1;

  maps.rho = maps.rho0 * maps.tau;
  if (fault == FaultInjection::none) {
    IntMatrix direct(n, m);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e == bp.base_edge) continue;
      IntVec col = shift;
      col[static_cast<std::size_t>(g.edge(e).head)] += 1;
      direct.set_column(static_cast<std::size_t>(e), col);
    }
    if (maps.rho != direct)
      throw std::logic_error(
          "structural_maps: rho0 * tau disagrees with the direct formula");
  }
  if (fault == FaultInjection::rho_entry && m > 0)
    maps.rho((static_cast<std::size_t>(bp.sink) + 1) % n,
             (static_cast<std::size_t>(bp.base_edge) + 1) % m) += 1;

  return maps;
}

GroupHom rho_bar(const Multidigraph& g, const BasePoint& bp) {
  const StructuralMaps maps = structural_maps(g, bp);
  return induced_hom(critical_group(line_graph(g), bp.base_edge),
                     critical_group(g, bp.sink), maps.rho);
}

TheoremReport verify_main_theorem(const Multidigraph& g, const BasePoint& bp) {
  return verify_main_theorem(g, bp, FaultInjection::none);
}

TheoremReport verify_main_theorem(const Multidigraph& g, const BasePoint& bp,
                                  FaultInjection fault) {
  if (!base_point_valid(g, bp))
    throw std::invalid_argument("verify_main_theorem: invalid base point");

  TheoremReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.base = bp;

  const HypothesisCheck hyp = check_hypotheses(g, bp);
  r.hypotheses_ok = hyp.ok;
  r.hypothesis_violations = hyp.reasons;
  r.k = is_k_out_regular(g);

  const StructuralMaps maps = structural_maps(g, bp, fault);
  const Multidigraph lg = line_graph(g);
  const IntMatrix phi_g = phi_matrix(g, bp.sink);
  const IntMatrix phi_lg = phi_matrix(lg, bp.base_edge);

  r.diagram_top_ok = (maps.tau * phi_lg == maps.psi * maps.tau);
  r.diagram_bottom_ok = (maps.rho0 * maps.psi == phi_g);
  r.rho0_involution_ok = (maps.rho0 * maps.rho0).is_identity();

  const AbelianGroup kg = cokernel(phi_g);
  const AbelianGroup klg = cokernel(phi_lg);
  r.group_structure = kg.structure_string();
  r.line_group_structure = klg.structure_string();
  r.group_order = kg.order();
  r.line_group_order = klg.order();
  r.kernel_structure = "-";
  r.torsion_structure = "-";

  std::optional<GroupHom> rb;
  try {
    rb = induced_hom(klg, kg, maps.rho);
  } catch (const induction_error&) {
  }
  r.rho_bar_defined = rb.has_value();

  std::optional<Subgroup> ker;
  if (rb) {
    r.rho_bar_surjective = is_surjective(*rb);
    ker = kernel(*rb);
    r.kernel_structure = ker->structure().structure_string();
    r.kernel_order = ker->structure().order();
  }

  const bool finite = kg.is_finite() && klg.is_finite();

  if (r.k) {
    const Int k = *r.k;
    const AbelianGroup cok_psi = cokernel(maps.psi);
    std::optional<GroupHom> tb, sb;
    try {
      tb = induced_hom(klg, cok_psi, maps.tau);
    } catch (const induction_error&) {
    }
    try {
      sb = induced_hom(cok_psi, klg, maps.sigma);
    } catch (const induction_error&) {
    }
    const bool sdef = tb.has_value() && sb.has_value();
    r.sigma_bar_defined = sdef;
    r.sigma_tau_mult_k_ok =
        sdef && homs_equal(compose(*sb, *tb), multiplication_hom(klg, k));

    const Subgroup torsion = k_torsion(klg, k);
    r.torsion_structure = torsion.structure().structure_string();
    r.torsion_order = torsion.structure().order();
    if (finite)
      r.kernel_equals_torsion = ker && subgroups_equal(*ker, torsion);
    else
      r.torsion_parts_match = ker && ker->structure().invariant_factors() ==
                                         torsion.structure().invariant_factors();
  }

  if (finite)
    r.order_factorization_ok = ker && ker->structure().is_finite() &&
                               *klg.order() == *kg.order() *
                                                   *ker->structure().order();

  r.kappa_graph = kappa(g, bp.sink);
  r.kappa_line_graph = kappa(lg, bp.base_edge);
  r.divisibility_ok = divides(r.kappa_graph, r.kappa_line_graph);

  return r;
}

std::vector<ReportCheck> TheoremReport::checks() const {
  std::vector<ReportCheck> out;
  const auto push = [&out](const std::string& name, CheckStatus status,
                           bool binding, std::string detail = std::string()) {
    out.push_back({name, status, binding, std::move(detail)});
  };
  const auto flag = [](bool ok) {
    return ok ? CheckStatus::pass : CheckStatus::fail;
  };

  push("hypotheses", flag(hypotheses_ok), false,
       join(hypothesis_violations, "; "));
  push("diagram_top", flag(diagram_top_ok), true);
  push("diagram_bottom", flag(diagram_bottom_ok), true);
  push("rho0_involution", flag(rho0_involution_ok), true);
  push("rho_bar_defined", flag(rho_bar_defined), true);
  push("rho_bar_surjective", flag(rho_bar_defined && rho_bar_surjective),
       hypotheses_ok);
  if (sigma_bar_defined)
    push("sigma_bar_defined", flag(*sigma_bar_defined), true);
  else
    push("sigma_bar_defined", CheckStatus::skipped, false,
         "not k-out-regular");
  if (sigma_tau_mult_k_ok)
    push("sigma_tau_mult_k", flag(*sigma_tau_mult_k_ok), true);
  else
    push("sigma_tau_mult_k", CheckStatus::skipped, false, "not k-out-regular");
  if (kernel_equals_torsion)
    push("kernel_equals_torsion", flag(*kernel_equals_torsion), hypotheses_ok,
         "kernel " + kernel_structure + " vs torsion " + torsion_structure);
  else
    push("kernel_equals_torsion", CheckStatus::skipped, false,
         k ? "infinite group" : "not k-out-regular");
  if (torsion_parts_match)
    push("torsion_parts_match", flag(*torsion_parts_match), false,
         "free parts are outside this check");
  else
    push("torsion_parts_match", CheckStatus::skipped, false,
         k ? "orders finite, exact check ran" : "not k-out-regular");
  if (order_factorization_ok)
    push("order_factorization", flag(*order_factorization_ok), hypotheses_ok,
         order_string(line_group_order) + " = " + order_string(group_order) +
             " * " + order_string(kernel_order));
  else
    push("order_factorization", CheckStatus::skipped, false, "infinite group");
  push("divisibility", flag(divisibility_ok), hypotheses_ok,
       kappa_graph.str() + " | " + kappa_line_graph.str());
  return out;
}

bool TheoremReport::all_binding_pass() const {
  for (const ReportCheck& c : checks())
    if (c.binding && c.status == CheckStatus::fail) return false;
  return true;
}

std::vector<std::string> TheoremReport::failed_binding_checks() const {
  std::vector<std::string> out;
  for (const ReportCheck& c : checks())
    if (c.binding && c.status == CheckStatus::fail) out.push_back(c.name);
  return out;
}

bool verify_divisibility(const Multidigraph& g, const BasePoint& bp) {
  if (!base_point_valid(g, bp))
    throw std::invalid_argument("verify_divisibility: invalid base point");
  const HypothesisCheck hyp = check_hypotheses(g, bp);
  if (!hyp.ok)
    throw hypothesis_error("verify_divisibility: " + join(hyp.reasons, "; "));
  return divides(kappa(g, bp.sink), kappa(line_graph(g), bp.base_edge));
}

void print_report(std::ostream& os, const TheoremReport& r,
                  ReportFormat format) {
  if (format == ReportFormat::record) {
    os << "record verify\n"
       << "vertices " << r.vertex_count << "\n"
       << "edges " << r.edge_count << "\n"
       << "base_edge " << r.base.base_edge << "\n"
       << "sink " << r.base.sink << "\n"
       << "target " << r.base.target << "\n"
       << "k " << (r.k ? std::to_string(*r.k) : "-") << "\n"
       << "group " << r.group_structure << "\n"
       << "group_order " << order_string(r.group_order) << "\n"
       << "line_group " << r.line_group_structure << "\n"
       << "line_group_order " << order_string(r.line_group_order) << "\n"
       << "kernel " << r.kernel_structure << "\n"
       << "torsion " << r.torsion_structure << "\n"
       << "kappa " << r.kappa_graph << "\n"
       << "line_kappa " << r.kappa_line_graph << "\n";
    for (const ReportCheck& c : r.checks())
      os << "check " << c.name << " " << status_name(c.status) << " "
         << (c.binding ? "binding" : "info") << "\n";
    os << "result " << (r.all_binding_pass() ? "pass" : "fail") << "\n";
    return;
  }

  os << "graph: " << r.vertex_count << " vertices, " << r.edge_count
     << " edges, base edge " << r.base.base_edge << " (" << r.base.sink
     << " -> " << r.base.target << ")\n";
  os << "k-out-regular: " << (r.k ? "k = " + std::to_string(*r.k) : "no")
     << "\n";
  os << "K(G, w*)     = " << r.group_structure << "  (order "
     << order_string(r.group_order) << ")\n";
  os << "K(LG, e*)    = " << r.line_group_structure << "  (order "
     << order_string(r.line_group_order) << ")\n";
  os << "ker(rho_bar) = " << r.kernel_structure << "\n";
  os << "k-torsion    = " << r.torsion_structure << "\n";
  os << "kappa: " << r.kappa_graph << " (graph), " << r.kappa_line_graph
     << " (line graph)\n";
  os << "checks:\n";
  for (const ReportCheck& c : r.checks()) {
    os << "  " << status_name(c.status) << "  "
       << (c.binding ? "binding" : "info   ") << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << "result: " << (r.all_binding_pass() ? "pass" : "fail") << "\n";
}

}  // namespace linecrit
