// synlab command-line interface: automaton generators, reset-word solvers,
// CSP-to-automaton compilation, and expander experiments, glued into
// reproducible pipelines. Exit codes: 0 ok, 1 validation, 2 capacity,
// 3 property violation.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "synlab/approx_solver.hpp"
#include "synlab/binarizer.hpp"
#include "synlab/csp.hpp"
#include "synlab/dfa_io.hpp"
#include "synlab/errors.hpp"
#include "synlab/exact_solver.hpp"
#include "synlab/expander.hpp"
#include "synlab/gadget.hpp"
#include "synlab/generators.hpp"
#include "synlab/reports.hpp"

namespace {

using namespace synlab;

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write output file: " + path);
  out << content;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text(out_path, content);
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw ValidationError("seed must be hexadecimal");
}

std::uint64_t parse_hex_seed(const std::string& hex) {
  if (hex.empty() || hex.size() > 16)
    throw ValidationError("seed must be 1..16 hex digits");
  std::uint64_t value = 0;
  for (char c : hex) value = value << 4 | static_cast<std::uint64_t>(hex_digit(c));
  return value;
}

BitSeq hex_to_bits(const std::string& hex) {
  BitSeq bits;
  bits.reserve(hex.size() * 4);
  for (char c : hex) {
    int digit = hex_digit(c);
    for (int b = 3; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>(digit >> b & 1));
  }
  return bits;
}

bool looks_like_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == 'c' || line[pos] == '#') continue;
    return line[pos] == 'p';
  }
  throw ValidationError(path + ": empty input file");
}

CspInstance load_instance(const std::string& path, bool* cnf_derived) {
  if (looks_like_dimacs(path)) {
    if (cnf_derived) *cnf_derived = true;
    return from_cnf(parse_dimacs_file(path));
  }
  if (cnf_derived) *cnf_derived = false;
  return read_csp_file(path);
}

std::string stats_json(const SearchStats& stats) {
  std::ostringstream out;
  out << "{\"nodes_expanded\":" << stats.nodes_expanded
      << ",\"nodes_stored\":" << stats.nodes_stored
      << ",\"frontier_peak\":" << stats.frontier_peak << "}";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"synchronizing-automata lab: reset-word solvers, CSP gadget "
               "compilation, and expander experiments"};
  app.require_subcommand(1);

  std::uint64_t budget_nodes = SubsetBfsOptions{}.node_budget;
  app.add_option("--budget-nodes", budget_nodes, "subset-BFS node budget")
      ->envname("SYNLAB_BUDGET_NODES");

  // cerny
  auto* cmd_cerny = app.add_subcommand("cerny", "emit the classical slow family");
  std::uint32_t cerny_n = 0;
  std::string out_path;
  cmd_cerny->add_option("--n", cerny_n, "number of states")->required();
  cmd_cerny->add_option("--out", out_path, "output file (stdout when omitted)");

  // reduce
  auto* cmd_reduce =
      app.add_subcommand("reduce", "compile a CNF/CSP instance into an automaton");
  std::string input_path, mode = "tree";
  cmd_reduce->add_option("--input", input_path, "DIMACS CNF or CSP file")->required();
  cmd_reduce->add_option("--mode", mode, "tree|compressed")
      ->check(CLI::IsMember({"tree", "compressed"}));
  cmd_reduce->add_option("--out", out_path, "automaton file; map goes to <out>.map")
      ->required();

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "find a reset word for an automaton file");
  std::string alg = "exact";
  std::uint32_t approx_k = 1;
  cmd_solve->add_option("--input", input_path, "automaton file")->required();
  cmd_solve->add_option("--alg", alg, "exact|approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  cmd_solve->add_option("--k", approx_k, "phase parameter for --alg approx");
  cmd_solve->add_option("--out", out_path, "phase table CSV (approx only)");

  // binarize
  auto* cmd_bin =
      app.add_subcommand("binarize", "two-letter simulation of a multi-letter automaton");
  cmd_bin->add_option("--input", input_path, "automaton file")->required();
  cmd_bin->add_option("--out", out_path, "binary automaton file; map goes to <out>.map")
      ->required();

  // gap-report
  auto* cmd_gap =
      app.add_subcommand("gap-report", "value/reset-length gap table for instances");
  std::vector<std::string> gap_inputs;
  cmd_gap->add_option("--input", gap_inputs, "instance files (repeatable)")->required();
  cmd_gap->add_option("--mode", mode, "tree|compressed")
      ->check(CLI::IsMember({"tree", "compressed"}));
  cmd_gap->add_option("--out", out_path, "CSV file (stdout when omitted)");

  // expander
  auto* cmd_exp = app.add_subcommand("expander", "Margulis expander tools");
  cmd_exp->require_subcommand(1);
  std::uint32_t side = 0, steps = 1;
  double beta = 0.5;
  std::uint64_t trials = 100000;
  std::string seed_hex = "1";
  auto* cmd_lambda =
      cmd_exp->add_subcommand("lambda", "second eigenvalue of the walk matrix");
  cmd_lambda->add_option("--n", side, "grid side length")->required();
  auto* cmd_walk = cmd_exp->add_subcommand("walk", "replay a pseudorandom walk");
  cmd_walk->add_option("--n", side, "grid side length")->required();
  cmd_walk->add_option("--steps", steps, "walk sample length k (k-1 edges)")->required();
  cmd_walk->add_option("--seed", seed_hex, "hex bit source")->required();
  auto* cmd_amp = cmd_exp->add_subcommand("amplify", "all-inside-bad-set walk experiment");
  cmd_amp->add_option("--n", side, "grid side length")->required();
  cmd_amp->add_option("--beta", beta, "bad-set fraction in (0,1)")->required();
  cmd_amp->add_option("--steps", steps, "walk sample length k")->required();
  cmd_amp->add_option("--trials", trials, "Monte Carlo trials");
  cmd_amp->add_option("--seed", seed_hex, "hex seed");
  cmd_amp->add_option("--out", out_path, "CSV file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  SubsetBfsOptions bfs;
  bfs.node_budget = budget_nodes;

  if (app.got_subcommand(cmd_cerny)) {
    std::ostringstream text;
    write_dfa(text, cerny(cerny_n));
    emit(text.str(), out_path);
    return 0;
  }

  if (app.got_subcommand(cmd_reduce)) {
    CspInstance phi = load_instance(input_path, nullptr);
    ReductionOutput aut =
        mode == "compressed" ? build_compressed_automaton(phi) : build_automaton(phi);
    {
      std::ostringstream text;
      write_dfa(text, aut.dfa);
      write_text(out_path, text.str());
    }
    {
      std::ostringstream text;
      write_gadget_map(text, aut);
      write_text(out_path + ".map", text.str());
    }
    std::cout << "n_vars " << aut.n_vars << "\nn_constraints " << aut.n_constraints
              << "\nstates " << aut.dfa.n_states << "\n";
    if (mode == "compressed")
      std::cout << "size_budget "
                << compressed_size_budget(aut.n_constraints, aut.n_vars, fsat(phi))
                << "\n";
    for (std::uint32_t idx : aut.empty_constraints)
      std::cout << "warning: constraint " << idx
                << " has no satisfying rows; automaton is not synchronizing\n";
    return 0;
  }

  if (app.got_subcommand(cmd_solve)) {
    Dfa dfa = read_dfa_file(input_path);
    if (alg == "exact") {
      ResetSearchResult res = shortest_reset(dfa, bfs);
      if (res.outcome != SearchOutcome::found) {
        std::cout << "none\n" << stats_json(res.stats) << "\n";
        throw ValidationError("automaton is not synchronizing");
      }
      // shortest_reset replays internally; replay once more at the boundary.
      StateSet end = image(dfa, StateSet::full(dfa.n_states), res.certificate->word);
      if (end.count() != 1) throw PropertyViolation("emitted certificate failed replay");
      std::cout << res.certificate->length << "\n"
                << format_word(res.certificate->word) << "\n"
                << stats_json(res.stats) << "\n";
      return 0;
    }
    ApproxResult res = approx_reset(dfa, approx_k, bfs.node_budget);
    StateSet end = image(dfa, StateSet::full(dfa.n_states), res.word);
    if (end.count() != 1) throw PropertyViolation("emitted certificate failed replay");
    std::cout << res.word.size() << "\n" << format_word(res.word) << "\n";
    std::string csv = "phase,subset,word_length\n";
    for (std::size_t i = 0; i < res.phases.size(); ++i) {
      csv += std::to_string(i) + ",";
      auto members = res.phases[i].subset.to_vector();
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j) csv += ' ';
        csv += std::to_string(members[j]);
      }
      csv += "," + std::to_string(res.phases[i].word.size()) + "\n";
    }
    emit(csv, out_path);
    return 0;
  }

  if (app.got_subcommand(cmd_bin)) {
    Dfa dfa = read_dfa_file(input_path);
    BinarizedDfa bin = binarize(dfa);
    {
      std::ostringstream text;
      write_dfa(text, bin.dfa);
      write_text(out_path, text.str());
    }
    {
      std::ostringstream text;
      write_binarizer_map(text, bin);
      write_text(out_path + ".map", text.str());
    }
    std::cout << "t " << bin.t << "\nn_tilde " << bin.n_tilde << "\n";
    return 0;
  }

  if (app.got_subcommand(cmd_gap)) {
    std::vector<GapInstance> instances;
    for (const std::string& path : gap_inputs) {
      GapInstance inst;
      inst.id = path;
      inst.phi = load_instance(path, &inst.cnf_derived);
      instances.push_back(std::move(inst));
    }
    GapReportOptions opt;
    opt.bfs = bfs;
    opt.compressed = mode == "compressed";
    GapReport report = gap_report(instances, opt);
    emit(gap_report_csv(report), out_path);
    if (!report.all_ok) throw PropertyViolation("gap law violated; see report");
    return 0;
  }

  // expander subcommands
  ExpanderGraph g = margulis(side);
  if (cmd_exp->got_subcommand(cmd_lambda)) {
    SpectralResult res = spectral_lambda(g);
    std::printf("%.9f\n", res.lambda);
    std::printf("mode %s iterations %u\n", res.dense ? "dense" : "iterative",
                res.iterations);
    return 0;
  }
  if (cmd_exp->got_subcommand(cmd_walk)) {
    WalkSample sample = walk(g, hex_to_bits(seed_hex), steps);
    for (std::size_t i = 0; i < sample.vertices.size(); ++i)
      std::cout << (i ? " " : "") << sample.vertices[i];
    std::cout << "\nbits_consumed " << sample.bits_consumed << "\n";
    return 0;
  }
  if (beta <= 0.0 || beta >= 1.0) throw ValidationError("--beta must lie in (0,1)");
  std::vector<std::uint32_t> bad;
  for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(beta * g.n_vertices); ++v)
    bad.push_back(v);
  AmplificationReport report =
      amplification_experiment(g, bad, steps, trials, parse_hex_seed(seed_hex));
  emit(amplification_csv({report}), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const synlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const synlab::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const synlab::PropertyViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
