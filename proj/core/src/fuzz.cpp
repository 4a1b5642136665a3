#include "linecrit/fuzz.hpp"

#include <stdexcept>
#include <utility>

#include "sampling.hpp"

namespace linecrit {

namespace {

const char* inject_name(FaultInjection f) {
  switch (f) {
    case FaultInjection::rho_entry:
      return "rho_entry";
    case FaultInjection::tau_keep_base_column:
      return "tau_keep_base_column";
    default:
      return "none";
  }
}

}  // namespace

std::vector<std::string> FuzzResult::failure_lines() const {
  std::vector<std::string> out;
  out.reserve(failures.size());
  for (const FuzzFailure& f : failures) {
    std::string line = "fail trial=" + std::to_string(f.trial) + " checks=";
    for (std::size_t i = 0; i < f.checks.size(); ++i) {
      if (i > 0) line += ",";
      line += f.checks[i];
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string FuzzResult::summary() const {
  return "fuzz n=" + std::to_string(params.n) +
         " k=" + std::to_string(params.k) +
         " trials=" + std::to_string(params.trials) +
         " seed=" + std::to_string(params.seed) +
         " inject=" + inject_name(params.inject) +
         " passed=" + std::to_string(passed) +
         " failed=" + std::to_string(static_cast<int>(failures.size()));
}

FuzzResult run_fuzz(const FuzzParams& params) {
  if (params.trials < 0)
    throw std::invalid_argument("run_fuzz: negative trial count");
  FuzzResult result{params, 0, {}};
  for (int t = 0; t < params.trials; ++t) {
    const std::uint64_t trial_seed = detail::splitmix64(
        params.seed +
        0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
    const GeneratedInstance inst =
        random_k_out_regular(params.n, params.k, trial_seed);
    const TheoremReport report =
        verify_main_theorem(inst.graph, inst.base, params.inject);

    std::vector<std::string> failed = report.failed_binding_checks();
    if (!report.hypotheses_ok) failed.insert(failed.begin(), "hypotheses");

    if (inst.graph.vertex_count() <= 10 && inst.graph.edge_count() <= 20 &&
        kappa(inst.graph, inst.base.sink) !=
            enumerate_arborescences(inst.graph, inst.base.sink))
      failed.push_back("matrix_tree");
    const Multidigraph lg = line_graph(inst.graph);
    if (lg.vertex_count() <= 10 && lg.edge_count() <= 20 &&
        kappa(lg, inst.base.base_edge) !=
            enumerate_arborescences(lg, inst.base.base_edge))
      failed.push_back("matrix_tree_line_graph");

    if (failed.empty())
      ++result.passed;
    else
      result.failures.push_back({t, std::move(failed)});
  }
  return result;
}

}  // namespace linecrit
