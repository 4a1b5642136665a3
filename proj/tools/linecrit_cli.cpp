#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include "linecrit/abelian.hpp"
#include "linecrit/critical.hpp"
#include "linecrit/digraph.hpp"
#include "linecrit/errors.hpp"
#include "linecrit/exactint.hpp"
#include "linecrit/fuzz.hpp"
#include "linecrit/io.hpp"

namespace {

using namespace linecrit;

int resolve_vertex(const GraphDoc& doc, const std::string& name) {
  if (const auto idx = doc.vertex_index(name)) return *idx;
  throw std::invalid_argument("unknown vertex '" + name + "'");
}

FaultInjection parse_inject(const std::string& name) {
  if (name == "rho") return FaultInjection::rho_entry;
  if (name == "tau") return FaultInjection::tau_keep_base_column;
  return FaultInjection::none;
}

std::string order_string(const std::optional<Int>& n) {
  return n ? n->str() : "infinite";
}

void print_group(const AbelianGroup& group, const std::string& label,
                 bool record) {
  if (record) {
    std::cout << "record critgroup\n";
    std::cout << "group " << group.structure_string() << "\n";
    std::cout << "order " << order_string(group.order()) << "\n";
    std::cout << "factors";
    for (const Int& d : group.invariant_factors()) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "free_rank " << group.free_rank() << "\n";
  } else {
    std::cout << label << " = " << group.structure_string() << "\n";
    std::cout << "order " << order_string(group.order()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "critical groups of multidigraphs and their directed line graphs"};
  app.require_subcommand(1);

  std::string path;
  std::string sink_name;
  std::string root_name;
  int edge_index = 0;
  std::string format = "text";
  std::string inject = "none";
  int n = 6;
  int k = 2;
  int trials = 100;
  std::uint64_t seed = 0;

  const auto format_check = CLI::IsMember({"text", "record"});
  const auto inject_check = CLI::IsMember({"none", "rho", "tau"});

  CLI::App* critgroup =
      app.add_subcommand("critgroup", "critical group of a graph at a sink");
  critgroup->add_option("input", path, "graph file")->required();
  critgroup->add_option("--sink", sink_name, "sink vertex name")->required();
  critgroup->add_option("--format", format)->check(format_check);

  CLI::App* kappa_cmd = app.add_subcommand(
      "kappa", "number of spanning arborescences toward a root");
  kappa_cmd->add_option("input", path, "graph file")->required();
  kappa_cmd->add_option("--root", root_name, "root vertex name")->required();

  CLI::App* linegraph_cmd =
      app.add_subcommand("linegraph", "emit the directed line graph");
  linegraph_cmd->add_option("input", path, "graph file")->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the line graph correspondence at a base edge");
  verify_cmd->add_option("input", path, "graph file")->required();
  verify_cmd->add_option("--edge", edge_index, "base edge index")->required();
  verify_cmd->add_option("--format", format)->check(format_check);
  verify_cmd->add_option("--inject", inject, "deliberate defect, for testing")
      ->check(inject_check);

  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "verify the correspondence on random regular instances");
  fuzz_cmd->add_option("--n", n, "vertex count")->check(CLI::Range(2, 1000));
  fuzz_cmd->add_option("--k", k, "out-degree")->check(CLI::Range(2, 100));
  fuzz_cmd->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--inject", inject, "deliberate defect, for testing")
      ->check(inject_check);

  CLI::App* snf_cmd =
      app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("input", path, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*critgroup) {
      const GraphDoc doc = parse_graph_file(path);
      const int sink = resolve_vertex(doc, sink_name);
      print_group(critical_group(doc.graph, sink),
                  "K(G, " + sink_name + ")", format == "record");
      return 0;
    }
    if (*kappa_cmd) {
      const GraphDoc doc = parse_graph_file(path);
      const int root = resolve_vertex(doc, root_name);
      std::cout << kappa(doc.graph, root) << "\n";
      return 0;
    }
    if (*linegraph_cmd) {
      emit_graph(std::cout, line_graph_doc(parse_graph_file(path)));
      return 0;
    }
    if (*verify_cmd) {
      const GraphDoc doc = parse_graph_file(path);
      if (edge_index < 0 || edge_index >= doc.graph.edge_count())
        throw std::invalid_argument("base edge index out of range");
      const TheoremReport report =
          verify_main_theorem(doc.graph, BasePoint::at_edge(doc.graph, edge_index),
                              parse_inject(inject));
      print_report(std::cout, report,
                   format == "record" ? ReportFormat::record
                                      : ReportFormat::text);
      return report.all_binding_pass() ? 0 : 1;
    }
    if (*fuzz_cmd) {
      const FuzzResult result =
          run_fuzz({n, k, trials, seed, parse_inject(inject)});
      for (const std::string& line : result.failure_lines())
        std::cout << line << "\n";
      std::cout << result.summary() << "\n";
      return result.all_passed() ? 0 : 1;
    }
    if (*snf_cmd) {
      const SnfDecomposition d = smith_normal_form(parse_matrix_file(path));
      std::cout << "U\n";
      emit_matrix(std::cout, d.u);
      std::cout << "S\n";
      emit_matrix(std::cout, d.s);
      std::cout << "V\n";
      emit_matrix(std::cout, d.v);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
