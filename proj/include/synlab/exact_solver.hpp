#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synlab/dfa.hpp"

namespace synlab {

struct SubsetBfsOptions {
  // Max number of distinct subsets stored before giving up with a capacity
  // error. Gadget automata have highly compressive letters, so reachable
  // frontiers stay small far beyond 20 raw states.
  std::uint64_t node_budget = 5'000'000;
  // Optional word-length bound; exceeding it is reported as an outcome, not
  // an error.
  std::optional<std::uint32_t> limit;
};

enum class SearchOutcome {
  found,
  not_synchronizing,  // reachable subsets exhausted, no singleton
  limit_exceeded,     // stopped at the length limit, inconclusive
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t nodes_stored = 0;
  std::uint64_t frontier_peak = 0;
};

struct ResetCertificate {
  Word word;
  std::uint32_t length = 0;
  State target = 0;  // the singleton state reached
};

struct ResetSearchResult {
  SearchOutcome outcome = SearchOutcome::not_synchronizing;
  std::optional<ResetCertificate> certificate;
  SearchStats stats;
};

// Breadth-first search over the subsets reachable from the start set by
// single letters. Among shortest synchronizing words, the lexicographically
// smallest is returned (letters ordered 0 < 1 < ...). Every certificate is
// replayed before being returned.
ResetSearchResult shortest_reset(const Dfa& dfa, const SubsetBfsOptions& opt = {});
ResetSearchResult shortest_sync_of_set(const Dfa& dfa, const StateSet& set,
                                       const SubsetBfsOptions& opt = {});

// Per-pair shortest merge lengths from one backward BFS over the pair
// automaton; kUnreachable marks pairs that never merge.
class PairTable {
 public:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;

  explicit PairTable(std::uint32_t n_states)
      : n_(n_states),
        dist_(static_cast<std::size_t>(n_states) * (n_states + 1) / 2, kUnreachable) {}

  std::uint32_t merge_length(State p, State q) const { return dist_[index(p, q)]; }
  void set(State p, State q, std::uint32_t d) { dist_[index(p, q)] = d; }

  bool all_merge() const;
  // Largest finite entry; 0 for a single-state table.
  std::uint32_t max_merge_length() const;

  std::uint32_t n_states() const { return n_; }

 private:
  std::size_t index(State p, State q) const {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(q) * (q + 1) / 2 + p;
  }

  std::uint32_t n_;
  std::vector<std::uint32_t> dist_;
};

PairTable pair_sync_table(const Dfa& dfa);

}  // namespace synlab
