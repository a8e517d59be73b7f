#pragma once

#include <cstdint>
#include <vector>

#include "synlab/dfa.hpp"

namespace synlab {

struct ApproxPhase {
  StateSet subset;  // the (k+1)-subset chosen for this phase
  Word word;        // a shortest word synchronizing it
};

struct ApproxResult {
  Word word;  // concatenation of the phase words; maps Q to a singleton
  std::vector<ApproxPhase> phases;
  std::uint32_t guarantee = 0;  // a-priori approximation factor ceil(n/k)
};

// Phase algorithm: repeatedly pick the k+1 lowest-indexed states of the
// remaining set, synchronize them by a shortest word (BFS over subsets of
// size <= k+1, materialized lazily from the start subset), and apply that
// word to the whole remaining set. The result is at most ceil(n/k) times
// longer than a shortest reset word. Requires a synchronizing automaton.
ApproxResult approx_reset(const Dfa& dfa, std::uint32_t k,
                          std::uint64_t node_budget = 5'000'000);

struct CubicPhaseBound {
  std::uint32_t length = 0;
  std::uint32_t bound = 0;  // n(n-1)/2, the pair-graph diameter bound
};

struct CubicReport {
  std::vector<CubicPhaseBound> phases;
  std::uint64_t total_length = 0;
  std::uint64_t total_bound = 0;  // (n-1) * n(n-1)/2
  bool within_bounds = false;
};

struct CubicCertificate {
  ApproxResult result;
  CubicReport report;
};

// k = 1 specialization: every phase merges one pair, each phase word is at
// most n(n-1)/2 long, so the full word certifies a cubic upper bound.
CubicCertificate cubic_certificate(const Dfa& dfa, std::uint64_t node_budget = 5'000'000);

}  // namespace synlab
