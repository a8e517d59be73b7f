#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synlab/csp.hpp"
#include "synlab/exact_solver.hpp"
#include "synlab/expander.hpp"
#include "synlab/gadget.hpp"

namespace synlab {

struct GapInstance {
  std::string id;
  CspInstance phi;
  bool cnf_derived = false;  // built from a CNF file: the 2N+2 law applies
};

struct GapRow {
  std::string id;
  std::uint32_t n_vars = 0;
  std::uint32_t n_constraints = 0;
  std::string val;      // exact rational, or "unknown" over the brute-force cap
  std::string upper;    // certificate length N+2 or exact reset length
  std::string lower;    // (N+1)/Val or the exact reset length
  std::string ratio;    // upper/lower when both known
  bool ok = true;
  std::string note;     // first violated law, or budget remark
};

struct GapReport {
  std::vector<GapRow> rows;
  bool all_ok = true;
};

struct GapReportOptions {
  GadgetBuildOptions build;
  SubsetBfsOptions bfs;
  std::uint32_t value_cap = kValueBruteForceCap;
  bool compressed = false;
};

// Per instance: build the automaton, compute the exact satisfiable fraction,
// derive both bounds, and check every law that applies:
//   satisfiable:   the word 2 v 0 resets the automaton and has length N+2;
//                  the exact reset length never exceeds N+2
//   unsatisfiable: exact reset length >= (N+1)/Val; the root set needs at
//                  least (N+1)/Val letters; CNF-derived instances need 2N+2
GapReport gap_report(const std::vector<GapInstance>& instances,
                     const GapReportOptions& opt = {});

std::string gap_report_csv(const GapReport& report);

// CSV with columns (n, k, beta, trials, empirical, bound, ci_low, ci_high).
std::string amplification_csv(const std::vector<AmplificationReport>& reports);

// Fixed-format float used by every CSV writer (deterministic, '.' separator).
std::string format_double(double v);

}  // namespace synlab
