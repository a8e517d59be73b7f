// Acceptance suite: every check this project promises, one pass/fail line
// each. Exits nonzero when anything fails. An optional argv[1] names the
// synlab CLI binary so the byte-determinism check can run end to end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "synlab/approx_solver.hpp"
#include "synlab/binarizer.hpp"
#include "synlab/csp.hpp"
#include "synlab/dfa_io.hpp"
#include "synlab/exact_solver.hpp"
#include "synlab/expander.hpp"
#include "synlab/gadget.hpp"
#include "synlab/generators.hpp"
#include "synlab/reports.hpp"
#include "synlab/rng.hpp"

using namespace synlab;
using namespace synlab::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Constraint random_constraint(SplitMix64& rng, std::uint32_t n_vars, std::uint32_t max_d,
                             std::uint32_t max_rows) {
  std::uint32_t d = static_cast<std::uint32_t>(rng.below(std::min(max_d, n_vars) + 1));
  std::set<std::uint32_t> vars;
  while (vars.size() < d) vars.insert(static_cast<std::uint32_t>(rng.below(n_vars)));
  Constraint c;
  c.dep_vars.assign(vars.begin(), vars.end());
  std::uint64_t cap = d >= 20 ? max_rows : std::min<std::uint64_t>(max_rows, 1ull << d);
  std::uint64_t want = 1 + rng.below(cap);
  std::set<std::string> rows;
  while (rows.size() < want) {
    std::string row;
    for (std::uint32_t i = 0; i < d; ++i) row += static_cast<char>('0' + rng.below(2));
    rows.insert(row);
  }
  c.sat_rows.assign(rows.begin(), rows.end());
  return c;
}

// ---------------------------------------------------------------- criteria

// 1. The slow family needs exactly (n-1)^2 letters, n = 2..6.
Outcome criterion_cerny() {
  Outcome out;
  auto start = Clock::now();
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto res = shortest_reset(cerny(n));
    out.require(res.outcome == SearchOutcome::found, "family member did not reset");
    std::uint32_t expected = (n - 1) * (n - 1);
    if (res.certificate->length != expected)
      out.fail("cerny(" + std::to_string(n) + ") gave " +
               std::to_string(res.certificate->length) + ", expected " +
               std::to_string(expected));
  }
  out.require(seconds_since(start) < 10.0, "exceeded the 10 s budget");
  return out;
}

// 2. Satisfiable instances reset with the explicit word 2 v 0 of length N+2.
Outcome criterion_sat_upper() {
  Outcome out;
  for (int i = 0; i < 50; ++i) {
    std::uint32_t n = 3 + i % 6;                       // N in [3, 8]
    std::uint32_t m = 1 + i % 6;                       // M in [1, 6]
    CnfFormula f = random_planted_cnf(n, m, 52000 + i);
    CspInstance phi = from_cnf(f);
    auto val = value_search(phi);
    out.require(val.value == Fraction(1), "planted formula not satisfiable");
    ReductionOutput aut = build_automaton(phi);
    Word w{2};
    for (std::uint8_t bit : val.witness) w.push_back(bit);
    w.push_back(0);
    out.require(w.size() == n + 2, "certificate is not N+2 letters");
    StateSet end = image(aut.dfa, StateSet::full(aut.dfa.n_states), w);
    out.require(end.count() == 1 && end.first() == 0, "2v0 did not reach the sink");
  }
  return out;
}

// 3. Unsatisfiable formulas force reset words of length at least 2N+2.
Outcome criterion_unsat_lower() {
  Outcome out;
  auto start = Clock::now();
  for (const CnfFormula& f : unsat_cnf_corpus()) {
    out.require(!oracle_sat(f).has_value(), "corpus formula is satisfiable");
    out.require(f.n_vars <= 4 && f.clauses.size() <= 6, "corpus instance too large");
    ReductionOutput aut = build_automaton(from_cnf(f));
    auto res = shortest_reset(aut.dfa);
    out.require(res.outcome == SearchOutcome::found, "corpus automaton did not reset");
    if (res.certificate->length < 2 * f.n_vars + 2)
      out.fail("reset length " + std::to_string(res.certificate->length) + " below " +
               std::to_string(2 * f.n_vars + 2));
  }
  out.require(seconds_since(start) < 120.0, "exceeded the 2 min budget");
  return out;
}

// 4. Root set needs (N+1)/Val letters, with equality on the one-variable
//    contradiction.
Outcome criterion_root_lower() {
  Outcome out;
  const auto corpus = unsat_csp_corpus();
  for (const CspInstance& phi : corpus) {
    out.require(phi.n_vars <= 3, "corpus instance too large");
    Fraction val = value(phi);
    out.require(val < Fraction(1), "corpus instance is satisfiable");
    out.require(val > Fraction(0), "corpus instance has empty constraints");
    Fraction bound = val.reciprocal().scaled(phi.n_vars + 1);
    ReductionOutput aut = build_automaton(phi);
    auto res = shortest_sync_of_set(aut.dfa, root_set(aut));
    out.require(res.outcome == SearchOutcome::found, "root set did not synchronize");
    if (Fraction(res.certificate->length) < bound)
      out.fail("root-set length " + std::to_string(res.certificate->length) +
               " below " + bound.str());
  }
  // equality witness: Val = 1/2, N = 1, bound 4, achieved
  {
    const CspInstance& phi = corpus.front();
    ReductionOutput aut = build_automaton(phi);
    auto res = shortest_sync_of_set(aut.dfa, root_set(aut));
    out.require(res.certificate->length == 4, "equality witness not achieved");
  }
  return out;
}

// 5. Every full assignment walks a gadget to the leaf labeled with its
//    restriction, and one more letter routes by satisfaction.
Outcome criterion_leaf_labels() {
  Outcome out;
  SplitMix64 rng(550);
  std::vector<std::pair<CspInstance, int>> corpus;  // instance, constraint idx
  {
    CspInstance fig;
    fig.n_vars = 6;
    fig.constraints.push_back({{2, 4}, {"01", "10", "11"}});
    corpus.push_back({fig, 0});
  }
  for (int trial = 0; trial < 12; ++trial) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(9));  // up to 10
    CspInstance phi;
    phi.n_vars = n;
    phi.constraints.push_back(random_constraint(rng, n, 5, 32));
    corpus.push_back({phi, 0});
  }
  for (const auto& [phi, ci] : corpus) {
    const std::uint32_t n = phi.n_vars;
    const Constraint& c = phi.constraints[ci];
    std::set<std::string> rows(c.sat_rows.begin(), c.sat_rows.end());
    ReductionOutput aut = build_automaton(phi);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::string v;
      Word w;
      for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t bit = (mask >> i) & 1;
        v += static_cast<char>('0' + bit);
        w.push_back(bit);
      }
      std::string restricted;
      for (std::uint32_t var : c.dep_vars) restricted += v[var];
      const StateInfo& leaf = gadget_trace(aut, ci, w);
      if (leaf.role != StateRole::leaf || leaf.label != restricted) {
        out.fail("assignment " + v + " missed its leaf");
        break;
      }
      w.push_back(0);
      const StateInfo& after = gadget_trace(aut, ci, w);
      bool satisfied = rows.count(restricted) > 0;
      bool at_sink = after.role == StateRole::sink;
      bool at_root = after.role == StateRole::root && after.level == 0;
      if (satisfied != at_sink || satisfied == at_root) {
        out.fail("assignment " + v + " routed incorrectly");
        break;
      }
    }
  }
  return out;
}

// 6. The 2-erasing rewriter preserves the action on the root set and never
//    lengthens a word.
Outcome criterion_rewriter() {
  Outcome out;
  SplitMix64 rng(660);
  std::vector<CspInstance> instances = unsat_csp_corpus();
  for (const CnfFormula& f : unsat_cnf_corpus()) instances.push_back(from_cnf(f));
  instances.push_back(from_cnf(random_planted_cnf(5, 4, 661)));

  for (const CspInstance& phi : instances) {
    for (bool compressed : {false, true}) {
      ReductionOutput aut =
          compressed ? build_compressed_automaton(phi) : build_automaton(phi);
      StateSet roots = root_set(aut);
      for (int rep = 0; rep < 10000; ++rep) {
        Word w(rng.below(4 * (phi.n_vars + 1) + 1));
        for (Letter& a : w) a = static_cast<Letter>(rng.below(3));
        Word reduced = reduce_word(w, phi.n_vars);
        if (reduced.size() > w.size()) {
          out.fail("rewriter lengthened a word");
          break;
        }
        if (image(aut.dfa, roots, w) != image(aut.dfa, roots, reduced)) {
          out.fail("rewriter changed the root-set action");
          break;
        }
      }
      if (!out.ok) return out;
    }
  }
  return out;
}

// 7. Phase algorithm guarantee with every phase word certified shortest.
Outcome criterion_approx_guarantee() {
  Outcome out;
  SplitMix64 rng(770);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(11));  // up to 12
    std::uint32_t letters = 2 + static_cast<std::uint32_t>(rng.below(2));
    Dfa dfa = random_synchronizing_dfa(n, letters, 77000 + i);
    auto exact = shortest_reset(dfa);
    out.require(exact.outcome == SearchOutcome::found, "random automaton lost its reset");
    for (std::uint32_t k = 1; k <= 3 && k + 1 <= n; ++k) {
      ApproxResult res = approx_reset(dfa, k);
      std::uint64_t bound = static_cast<std::uint64_t>((n + k - 1) / k) *
                            exact.certificate->length;
      if (exact.certificate->length > 0 && res.word.size() > bound) {
        out.fail("approximation exceeded its factor at n=" + std::to_string(n));
        return out;
      }
      for (const ApproxPhase& phase : res.phases) {
        auto best = shortest_sync_of_set(dfa, phase.subset);
        if (best.certificate->length != phase.word.size()) {
          out.fail("phase word not shortest for its subset");
          return out;
        }
      }
    }
  }
  return out;
}

// 8. Compressed gadgets stay within the frozen size factor and behave like
//    the uncompressed trees from the root.
Outcome criterion_size_law() {
  Outcome out;
  SplitMix64 rng(880);
  for (std::uint32_t n = 2; n <= 12; ++n) {
    for (std::uint32_t k_rows = 1; k_rows <= 8; ++k_rows) {
      for (int rep = 0; rep < 4; ++rep) {
        Constraint c = random_constraint(rng, n, n, k_rows);
        CspInstance phi;
        phi.n_vars = n;
        phi.constraints.push_back(c);
        phi.constraints.push_back(random_constraint(rng, n, n, k_rows));
        std::uint64_t k = fsat(phi);
        ReductionOutput aut = build_compressed_automaton(phi);
        std::uint64_t law = kCompressedSizeFactor * phi.constraints.size() * n * n * k;
        if (aut.dfa.n_states > law) {
          out.fail("size law broken at N=" + std::to_string(n) +
                   " K=" + std::to_string(k));
          return out;
        }
      }
    }
  }

  // exhaustive bisimulation for N <= 4 over binary words up to 2(N+1)
  for (int trial = 0; trial < 10; ++trial) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
    CspInstance phi;
    phi.n_vars = n;
    phi.constraints.push_back(random_constraint(rng, n, n, 8));
    ReductionOutput tree = build_automaton(phi);
    ReductionOutput comp = build_compressed_automaton(phi);
    for (std::uint32_t len = 0; len <= 2 * (n + 1); ++len) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        Word w;
        for (std::uint32_t i = 0; i < len; ++i)
          w.push_back(static_cast<Letter>((mask >> i) & 1));
        const StateInfo& a = gadget_trace(tree, 0, w);
        const StateInfo& b = gadget_trace(comp, 0, w);
        bool same_sink = (a.role == StateRole::sink) == (b.role == StateRole::sink);
        bool same_level = a.role == StateRole::sink || a.level == b.level;
        bool same_root =
            (a.role == StateRole::root) == (b.role == StateRole::root);
        if (!same_sink || !same_level || !same_root) {
          out.fail("tree/compressed behavior diverged");
          return out;
        }
      }
    }
  }
  return out;
}

// 9. Binary simulation keeps the reset length inside [t*Syn, t*(1+Syn)].
Outcome criterion_binarizer_sandwich() {
  Outcome out;
  SplitMix64 rng(990);
  for (int i = 0; i < 20; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(4));  // up to 5
    Dfa dfa = random_synchronizing_dfa(n, 3, 99000 + i);
    BinarizedDfa bin = binarize(dfa);
    out.require(bin.t == 3, "three letters must cost t = 3 bits");
    auto a = shortest_reset(dfa);
    auto b = shortest_reset(bin.dfa);
    out.require(a.outcome == SearchOutcome::found, "original automaton lost its reset");
    out.require(b.outcome == SearchOutcome::found, "binary automaton did not reset");
    if (b.certificate->length < bin.t * a.certificate->length ||
        b.certificate->length > bin.t * (1 + a.certificate->length))
      out.fail("lengths " + std::to_string(a.certificate->length) + "/" +
               std::to_string(b.certificate->length) + " leave the sandwich");
  }
  return out;
}

// 10. Margulis graphs: 8-regular, symmetric as multigraphs, and spectrally
//     bounded by 5*sqrt(2)/8.
Outcome criterion_margulis() {
  Outcome out;
  for (std::uint32_t n = 2; n <= 12; ++n) {
    ExpanderGraph g = margulis(n);
    out.require(g.degree == 8, "degree must be 8");
    out.require(g.slots.size() == static_cast<std::size_t>(g.n_vertices) * 8,
                "slot table incomplete");
    std::vector<std::uint32_t> in_degree(g.n_vertices, 0);
    for (std::uint32_t v = 0; v < g.n_vertices; ++v)
      for (std::uint32_t s = 0; s < 8; ++s) ++in_degree[g.neighbor(v, s)];
    for (std::uint32_t v = 0; v < g.n_vertices; ++v)
      out.require(in_degree[v] == 8, "multigraph symmetry breaks in-degrees");
  }
  for (std::uint32_t n : {3u, 4u, 5u, 8u}) {
    SpectralResult res = spectral_lambda(margulis(n));
    out.require(res.dense, "expected the dense eigensolver");
    if (res.lambda > kMargulisLambdaBound + 1e-6)
      out.fail("lambda " + format_double(res.lambda) + " above the bound at n=" +
               std::to_string(n));
  }
  return out;
}

// 11. Walk concentration: the all-inside-bad-set rate stays under the
//     closed-form bound, whose beta=1/2, k=2 value is 0.965990 by direct
//     arithmetic.
Outcome criterion_walks() {
  Outcome out;
  auto start = Clock::now();
  const double direct = amplification_bound(0.5, 2);
  if (std::abs(direct - 0.9659902576697319) > 1e-5)
    out.fail("closed-form bound drifted: " + format_double(direct));

  ExpanderGraph g = margulis(5);
  for (double beta : {0.25, 0.5}) {
    std::vector<std::uint32_t> bad;
    for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(beta * g.n_vertices); ++v)
      bad.push_back(v);
    for (std::uint32_t k : {2u, 4u, 8u}) {
      AmplificationReport rep = amplification_experiment(g, bad, k, 100000, 0xace);
      double bound = amplification_bound(beta, k);
      double se = std::sqrt(rep.empirical * (1 - rep.empirical) / rep.trials);
      if (rep.empirical > bound + 3 * se)
        out.fail("rate " + format_double(rep.empirical) + " above bound " +
                 format_double(bound) + " at beta=" + format_double(beta) +
                 " k=" + std::to_string(k));
    }
  }
  out.require(seconds_since(start) < 60.0, "exceeded the 1 min budget");
  return out;
}

// 12. Fixed seeds give byte-identical CSV outputs, in process and through
//     the CLI binary.
Outcome criterion_determinism(const std::string& cli_path) {
  Outcome out;

  auto make_gap_csv = [] {
    std::vector<GapInstance> instances;
    int idx = 0;
    for (const CnfFormula& f : unsat_cnf_corpus())
      instances.push_back({"u" + std::to_string(idx++), from_cnf(f), true});
    instances.push_back({"sat", from_cnf(random_planted_cnf(5, 3, 121)), true});
    return gap_report_csv(gap_report(instances));
  };
  out.require(make_gap_csv() == make_gap_csv(), "in-process gap CSV not reproducible");

  auto make_amp_csv = [] {
    ExpanderGraph g = margulis(5);
    std::vector<AmplificationReport> reports;
    reports.push_back(amplification_experiment(g, {0, 1, 2, 3, 4, 5}, 4, 20000, 0xbeef));
    return amplification_csv(reports);
  };
  out.require(make_amp_csv() == make_amp_csv(), "in-process amplify CSV not reproducible");

  if (cli_path.empty()) {
    out.fail("CLI path not provided; pass the synlab binary as argv[1]");
    return out;
  }

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "synlab_acceptance";
  fs::create_directories(dir);
  fs::path cnf = dir / "inst.cnf";
  {
    std::ofstream f(cnf);
    f << "p cnf 3 4\n1 2 0\n-1 2 0\n-2 3 0\n-2 -3 0\n";
  }
  auto run_cli = [&](const std::string& args, const fs::path& out_file) {
    std::string cmd = cli_path + " " + args + " --out " + out_file.string() +
                      " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };

  fs::path g1 = dir / "gap1.csv", g2 = dir / "gap2.csv";
  int rc1 = run_cli("gap-report --input " + cnf.string(), g1);
  int rc2 = run_cli("gap-report --input " + cnf.string(), g2);
  out.require(rc1 == 0 && rc2 == 0, "CLI gap-report failed");
  out.require(!slurp(g1).empty() && slurp(g1) == slurp(g2),
              "CLI gap CSVs differ between runs");

  fs::path a1 = dir / "amp1.csv", a2 = dir / "amp2.csv";
  rc1 = run_cli("expander amplify --n 5 --beta 0.5 --steps 4 --trials 20000 --seed abc", a1);
  rc2 = run_cli("expander amplify --n 5 --beta 0.5 --steps 4 --trials 20000 --seed abc", a2);
  out.require(rc1 == 0 && rc2 == 0, "CLI amplify failed");
  out.require(!slurp(a1).empty() && slurp(a1) == slurp(a2),
              "CLI amplify CSVs differ between runs");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";

  struct Entry {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "slow family resets in exactly (n-1)^2 letters", criterion_cerny},
      {2, "satisfiable formulas reset with the N+2 certificate", criterion_sat_upper},
      {3, "unsatisfiable formulas need at least 2N+2 letters", criterion_unsat_lower},
      {4, "root sets need (N+1)/Val letters, equality attained", criterion_root_lower},
      {5, "assignments reach their labeled leaves and route by satisfaction",
       criterion_leaf_labels},
      {6, "the 2-erasing rewriter preserves root-set actions", criterion_rewriter},
      {7, "phase algorithm meets its ceil(n/k) guarantee", criterion_approx_guarantee},
      {8, "compressed gadgets obey the size law and bisimulate trees",
       criterion_size_law},
      {9, "binary simulation keeps Syn inside the two-sided bound",
       criterion_binarizer_sandwich},
      {10, "Margulis graphs are 8-regular with lambda below 5*sqrt(2)/8",
       criterion_margulis},
      {11, "expander walks concentrate below the closed-form bound", criterion_walks},
      {12, "fixed seeds give byte-identical CSV outputs",
       [&] { return criterion_determinism(cli_path); }},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    Outcome out;
    try {
      out = entry.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    if (out.ok) {
      std::printf("[PASS] %2d. %s\n", entry.id, entry.title);
    } else {
      std::printf("[FAIL] %2d. %s -- %s\n", entry.id, entry.title, out.detail.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
