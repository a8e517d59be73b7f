#include "synlab/approx_solver.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

// BFS over small subsets kept as sorted vectors. Deliberately a separate
// code path from the bitset subset search in the exact solver, so the two
// can cross-check each other.
Word small_subset_shortest_sync(const Dfa& dfa, std::vector<State> start,
                                std::uint64_t node_budget) {
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());

  struct Meta {
    std::uint32_t parent;
    Letter via;
  };
  std::vector<std::vector<State>> pool{start};
  std::vector<Meta> meta{{0, 0}};
  std::map<std::vector<State>, std::uint32_t> seen{{start, 0}};

  auto reconstruct = [&](std::uint32_t idx) {
    Word w;
    while (idx != 0) {
      w.push_back(meta[idx].via);
      idx = meta[idx].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  if (start.size() == 1) return {};

  for (std::size_t head = 0; head < pool.size(); ++head) {
    for (Letter a = 0; a < dfa.n_letters; ++a) {
      std::vector<State> next;
      next.reserve(pool[head].size());
      for (State q : pool[head]) next.push_back(dfa.step(q, a));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto [it, inserted] = seen.emplace(next, static_cast<std::uint32_t>(pool.size()));
      if (!inserted) continue;
      if (pool.size() >= node_budget)
        throw CapacityError("phase BFS node budget exceeded: " +
                            std::to_string(pool.size()) + " subsets stored");
      bool singleton = next.size() == 1;
      pool.push_back(std::move(next));
      meta.push_back({static_cast<std::uint32_t>(head), a});
      if (singleton) return reconstruct(static_cast<std::uint32_t>(pool.size() - 1));
    }
  }
  // Unreachable for synchronizing automata; approx_reset checks that first.
  throw PropertyViolation("phase subset cannot be synchronized");
}

}  // namespace

ApproxResult approx_reset(const Dfa& dfa, std::uint32_t k, std::uint64_t node_budget) {
  ensure_valid(dfa);
  const std::uint32_t n = dfa.n_states;
  if (k < 1 || (n > 1 && k > n - 1))
    throw ValidationError("k must satisfy 1 <= k <= n_states - 1");
  if (!is_synchronizing(dfa)) throw ValidationError("not synchronizing");

  ApproxResult result;
  result.guarantee = (n + k - 1) / k;

  StateSet remaining = StateSet::full(n);
  while (remaining.count() > 1) {
    // The k+1 lowest-indexed states of the remaining set (all of it when
    // fewer are left).
    std::uint32_t want = std::min<std::uint32_t>(k + 1, remaining.count());
    std::vector<State> chosen;
    remaining.for_each([&](State q) {
      if (chosen.size() < want) chosen.push_back(q);
    });

    ApproxPhase phase;
    phase.subset = StateSet(n);
    for (State q : chosen) phase.subset.insert(q);
    phase.word = small_subset_shortest_sync(dfa, chosen, node_budget);

    remaining = image(dfa, remaining, phase.word);
    result.word.insert(result.word.end(), phase.word.begin(), phase.word.end());
    result.phases.push_back(std::move(phase));
  }

  StateSet final = image(dfa, StateSet::full(n), result.word);
  if (final.count() != 1) throw PropertyViolation("approximate reset word failed replay");
  return result;
}

CubicCertificate cubic_certificate(const Dfa& dfa, std::uint64_t node_budget) {
  CubicCertificate cert;
  cert.result = approx_reset(dfa, 1, node_budget);

  const std::uint64_t n = dfa.n_states;
  const std::uint32_t per_phase = static_cast<std::uint32_t>(n * (n - 1) / 2);
  cert.report.total_bound = (n - 1) * n * (n - 1) / 2;
  cert.report.within_bounds = true;
  for (const ApproxPhase& phase : cert.result.phases) {
    CubicPhaseBound b;
    b.length = static_cast<std::uint32_t>(phase.word.size());
    b.bound = per_phase;
    if (b.length > b.bound) cert.report.within_bounds = false;
    cert.report.total_length += b.length;
    cert.report.phases.push_back(b);
  }
  if (cert.report.total_length > cert.report.total_bound)
    cert.report.within_bounds = false;
  return cert;
}

}  // namespace synlab
