// Acceptance gate: every release criterion runs end-to-end and prints one
// PASS/FAIL line.  The first argument is the path of the command line tool,
// used for the exit-code controls.  Exits 1 when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linecrit/abelian.hpp"
#include "linecrit/critical.hpp"
#include "linecrit/digraph.hpp"
#include "linecrit/exactint.hpp"
#include "linecrit/fuzz.hpp"
#include "linecrit/io.hpp"
#include "test_util.hpp"

using namespace linecrit;
using namespace testutil;

namespace {

bool all_ok = true;

void report(int number, bool ok, const std::string& text) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << text << "\n";
  if (!ok) all_ok = false;
}

struct CorpusTally {
  long long graphs = 0;
  long long root_checks = 0;
  long long count_mismatches = 0;
  long long order_pairs = 0;
  long long order_mismatches = 0;
};

void sweep(const Multidigraph& g, CorpusTally& tally) {
  ++tally.graphs;
  for (int r = 0; r < g.vertex_count(); ++r) {
    ++tally.root_checks;
    const Int counted = kappa(g, r);
    if (counted != Int(enumerate_arborescences(g, r)))
      ++tally.count_mismatches;
    const std::vector<bool> reach = reachable_to(g, r);
    const bool sink_reached =
        std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    if (sink_reached && counted > 0) {
      ++tally.order_pairs;
      const std::optional<Int> order = critical_group(g, r).order();
      if (!order || *order != counted) ++tally.order_mismatches;
    }
  }
}

void corpus_criteria() {
  CorpusTally tally;
  for (int n = 1; n <= 4; ++n)
    for_each_multigraph(n, 6, [&](const Multidigraph& g) { sweep(g, tally); });
  const long long exhaustive = tally.graphs;
  std::mt19937_64 rng(20260815);
  for (int t = 0; t < 200; ++t) sweep(random_graph(rng, 5, 10), tally);

  std::ostringstream c1;
  c1 << "arborescence counts: determinant vs direct enumeration at every "
        "root ("
     << exhaustive << " exhaustive + 200 random graphs, " << tally.root_checks
     << " root checks, " << tally.count_mismatches << " mismatches)";
  report(1, tally.count_mismatches == 0, c1.str());

  std::ostringstream c2;
  c2 << "group order equals the arborescence count on every sink-reachable "
        "pair ("
     << tally.order_pairs << " pairs, " << tally.order_mismatches
     << " mismatches)";
  report(2, tally.order_mismatches == 0, c2.str());
}

void snf_criterion() {
  std::mt19937_64 rng(50);
  int oracle_checks = 0;
  int bad = 0;
  std::string first;
  const auto note = [&](int trial, const std::string& what) {
    ++bad;
    if (first.empty())
      first = " first: trial " + std::to_string(trial) + " " + what;
  };
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + static_cast<std::size_t>(draw_below(rng, 8));
    const std::size_t cols = 1 + static_cast<std::size_t>(draw_below(rng, 8));
    const IntMatrix m = random_matrix(rng, rows, cols, -50, 50);
    const SnfDecomposition d = smith_normal_form(m);
    if (d.u * m * d.v != d.s) {
      note(t, "reconstruction");
      continue;
    }
    if (abs(determinant(d.u)) != 1 || abs(determinant(d.v)) != 1) {
      note(t, "transform not unimodular");
      continue;
    }
    bool chain = true;
    const std::size_t bound = std::min(rows, cols);
    for (std::size_t i = 0; i < bound && chain; ++i) {
      if (d.s(i, i) < 0) chain = false;
      if (i + 1 < bound && d.s(i, i) == 0 && d.s(i + 1, i + 1) != 0)
        chain = false;
      if (i + 1 < bound && d.s(i, i) != 0 && d.s(i + 1, i + 1) % d.s(i, i) != 0)
        chain = false;
    }
    if (!chain) {
      note(t, "divisibility chain");
      continue;
    }
    if (rows <= 4 && cols <= 4) {
      ++oracle_checks;
      if (nonzero_diagonal(d.s) != minor_gcd_diagonal(m))
        note(t, "minor gcd oracle");
    }
  }
  std::ostringstream line;
  line << "Smith forms on 500 random matrices up to 8x8: reconstruction, "
          "unimodularity, divisibility ("
       << oracle_checks << " of them against the minor-gcd oracle, " << bad
       << " failures" << first << ")";
  report(3, bad == 0, line.str());
}

void theorem_criterion() {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  int finite = 0;
  int infinite = 0;
  std::string first;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 7;
    const int k = 2 + (t / 7) % 2;
    const GeneratedInstance inst =
        random_k_out_regular(n, k, 1000003ULL * static_cast<std::uint64_t>(t));
    const TheoremReport r = verify_main_theorem(inst.graph, inst.base);
    bool good = r.hypotheses_ok && r.diagram_top_ok && r.diagram_bottom_ok &&
                r.rho0_involution_ok && r.rho_bar_defined &&
                r.rho_bar_surjective && r.divisibility_ok;
    if (good) {
      const GroupHom rb = rho_bar(inst.graph, inst.base);
      const Subgroup ker = kernel(rb);
      good = subgroups_equal(ker, k_torsion(rb.src(), Int(k)));
    }
    if (good && r.line_group_order) {
      ++finite;
      good = r.group_order && r.kernel_order &&
             *r.line_group_order == *r.group_order * *r.kernel_order;
    } else if (good) {
      ++infinite;
    }
    if (!good) {
      ++failures;
      if (first.empty()) first = " first failure at instance " +
                                 std::to_string(t) + " (n=" +
                                 std::to_string(n) + ", k=" +
                                 std::to_string(k) + ")";
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream line;
  line.precision(1);
  line << std::fixed << "line graph correspondence on 200 random regular "
                        "instances, n 2..8, k 2..3: diagrams, involution, "
                        "surjectivity, kernel = k-torsion lattice, order "
                        "factorization, divisibility ("
       << finite << " finite, " << infinite << " infinite, " << failures
       << " failures" << first << ", " << secs << " s)";
  report(4, failures == 0 && secs < 120.0, line.str());
}

void worked_instance_criterion() {
  const Multidigraph g = triangle();
  const TheoremReport r = verify_main_theorem(g, BasePoint::at_edge(g, 0));
  const Subgroup torsion = k_torsion(critical_group(line_graph(g), 0), 2);
  const std::optional<Int> torsion_order = torsion.structure().order();
  const bool ok = r.group_structure == "Z/3" && r.group_order == Int(3) &&
                  r.kappa_graph == 3 && r.line_group_order == Int(12) &&
                  torsion_order == Int(4) &&
                  *r.line_group_order / 3 == *torsion_order &&
                  r.all_binding_pass();
  std::ostringstream line;
  line << "bidirected triangle at base edge 0: group " << r.group_structure
       << " of order " << (r.group_order ? r.group_order->str() : "infinite")
       << ", line graph group " << r.line_group_structure
       << ", order quotient 12/3 = 4 = 2-torsion order, report "
       << (r.all_binding_pass() ? "passes" : "fails");
  report(5, ok, line.str());
}

void vacuity_criterion() {
  long long scanned = 0;
  long long bases = 0;
  long long admitted = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (;;) {
      Multidigraph g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, f[static_cast<std::size_t>(v)]);
      bool indegrees_ok = true;
      for (int v = 0; v < n && indegrees_ok; ++v)
        if (g.in_degree(v) < 1) indegrees_ok = false;
      if (indegrees_ok) {
        ++scanned;
        for (int e = 0; e < g.edge_count(); ++e) {
          ++bases;
          if (check_hypotheses(g, BasePoint::at_edge(g, e)).ok) ++admitted;
        }
      }
      std::size_t pos = 0;
      while (pos < f.size() && ++f[pos] == n) {
        f[pos] = 0;
        ++pos;
      }
      if (pos == f.size()) break;
    }
  }
  std::ostringstream line;
  line << "1-out-regular graphs on up to 5 vertices with positive in-degrees "
          "never meet the hypotheses ("
       << scanned << " graphs, " << bases << " base edges, " << admitted
       << " admitted)";
  report(6, admitted == 0, line.str());
}

int cli_exit(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

void negative_controls_criterion(const std::string& cli) {
  FuzzParams params;
  params.n = 6;
  params.k = 2;
  params.trials = 10;
  params.seed = 2026;

  params.inject = FaultInjection::rho_entry;
  const bool rho_caught = !run_fuzz(params).all_passed();
  params.inject = FaultInjection::tau_keep_base_column;
  const bool tau_caught = !run_fuzz(params).all_passed();
  params.inject = FaultInjection::none;
  const bool honest_clean = run_fuzz(params).all_passed();

  bool exits_ok = false;
  std::string exit_note = "no tool path supplied";
  if (!cli.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path graph_path = dir / "linecrit-acceptance-graph.txt";
    const fs::path broken_path = dir / "linecrit-acceptance-broken.txt";
    {
      std::ofstream out(graph_path);
      GraphDoc doc;
      doc.graph = triangle();
      doc.vertex_names = {"a", "b", "c"};
      emit_graph(out, doc);
      std::ofstream broken(broken_path);
      broken << "vertices\n";
    }
    const std::string fuzz_args = "fuzz --n 6 --k 2 --trials 10 --seed 2026";
    const std::string g = graph_path.string();
    struct Control {
      std::string args;
      int expect;
    };
    const std::vector<Control> controls = {
        {fuzz_args + " --inject rho", 1},
        {fuzz_args + " --inject tau", 1},
        {fuzz_args, 0},
        {"verify " + g + " --edge 0", 0},
        {"verify " + g + " --edge 0 --inject rho", 1},
        {"verify " + g + " --edge 99", 2},
        {"verify " + dir.string() + "/no-such-file.txt --edge 0", 2},
        {"critgroup " + broken_path.string() + " --sink a", 2},
    };
    exits_ok = true;
    exit_note.clear();
    for (const Control& c : controls) {
      const int got = cli_exit(cli, c.args);
      if (got != c.expect) {
        exits_ok = false;
        exit_note += " [" + c.args + " -> " + std::to_string(got) +
                     ", wanted " + std::to_string(c.expect) + "]";
      }
    }
    std::error_code ec;
    fs::remove(graph_path, ec);
    fs::remove(broken_path, ec);
  }

  std::ostringstream line;
  line << "negative controls: rho and tau defects caught within 10 trials "
          "(rho "
       << (rho_caught ? "caught" : "missed") << ", tau "
       << (tau_caught ? "caught" : "missed") << "), honest run "
       << (honest_clean ? "clean" : "dirty") << ", tool exit codes "
       << (exits_ok ? "as documented" : "wrong:" + exit_note);
  report(7, rho_caught && tau_caught && honest_clean && exits_ok, line.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  corpus_criteria();
  snf_criterion();
  theorem_criterion();
  worked_instance_criterion();
  vacuity_criterion();
  negative_controls_criterion(cli);

  std::cout << (all_ok ? "acceptance: all criteria passed"
                       : "acceptance: some criteria failed")
            << "\n";
  return all_ok ? 0 : 1;
}
