#include "synlab/exact_solver.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

struct NodeMeta {
  std::uint32_t parent;
  Letter via;
  std::uint32_t depth;
};

Word reconstruct(const std::vector<NodeMeta>& meta, std::uint32_t idx) {
  Word w;
  while (idx != 0) {
    w.push_back(meta[idx].via);
    idx = meta[idx].parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

ResetSearchResult subset_bfs(const Dfa& dfa, const StateSet& start,
                             const SubsetBfsOptions& opt) {
  ResetSearchResult result;

  // Pool order is BFS order, so a plain head index serves as the queue.
  std::vector<StateSet> pool;
  std::vector<NodeMeta> meta;
  std::unordered_map<StateSet, std::uint32_t, StateSetHash> seen;

  auto finish = [&](std::uint32_t idx, State target) {
    ResetCertificate cert;
    cert.word = reconstruct(meta, idx);
    cert.length = static_cast<std::uint32_t>(cert.word.size());
    cert.target = target;
    // Replay before returning; a failure here is an implementation bug.
    StateSet check = image(dfa, start, cert.word);
    if (check.count() != 1 || check.first() != target)
      throw PropertyViolation("reset certificate failed replay");
    result.outcome = SearchOutcome::found;
    result.certificate = std::move(cert);
  };

  pool.push_back(start);
  meta.push_back({0, 0, 0});
  seen.emplace(start, 0);

  if (start.count() == 1) {
    finish(0, start.first());
    result.stats.nodes_stored = 1;
    return result;
  }

  bool pruned_by_limit = false;
  std::size_t head = 0;
  while (head < pool.size()) {
    if (opt.limit && meta[head].depth >= *opt.limit) {
      pruned_by_limit = true;
      ++head;
      continue;
    }
    ++result.stats.nodes_expanded;
    const std::uint32_t depth = meta[head].depth;
    for (Letter a = 0; a < dfa.n_letters; ++a) {
      StateSet next(dfa.n_states);
      pool[head].for_each([&](State q) { next.insert(dfa.step(q, a)); });
      auto [it, inserted] = seen.emplace(next, static_cast<std::uint32_t>(pool.size()));
      if (!inserted) continue;
      if (pool.size() >= opt.node_budget)
        throw CapacityError("subset BFS node budget exceeded: " +
                            std::to_string(pool.size()) + " subsets stored, frontier " +
                            std::to_string(pool.size() - head));
      pool.push_back(std::move(next));
      meta.push_back({static_cast<std::uint32_t>(head), a, depth + 1});
      result.stats.frontier_peak =
          std::max(result.stats.frontier_peak,
                   static_cast<std::uint64_t>(pool.size() - head));
      if (pool.back().count() == 1) {
        result.stats.nodes_stored = pool.size();
        finish(static_cast<std::uint32_t>(pool.size() - 1), pool.back().first());
        return result;
      }
    }
    ++head;
  }

  result.stats.nodes_stored = pool.size();
  result.outcome =
      pruned_by_limit ? SearchOutcome::limit_exceeded : SearchOutcome::not_synchronizing;
  return result;
}

}  // namespace

ResetSearchResult shortest_reset(const Dfa& dfa, const SubsetBfsOptions& opt) {
  ensure_valid(dfa);
  return subset_bfs(dfa, StateSet::full(dfa.n_states), opt);
}

ResetSearchResult shortest_sync_of_set(const Dfa& dfa, const StateSet& set,
                                       const SubsetBfsOptions& opt) {
  ensure_valid(dfa);
  if (set.universe() != dfa.n_states)
    throw ValidationError("state set universe does not match automaton");
  if (set.empty()) throw ValidationError("cannot synchronize the empty set");
  return subset_bfs(dfa, set, opt);
}

bool PairTable::all_merge() const {
  for (std::uint32_t d : dist_)
    if (d == kUnreachable) return false;
  return true;
}

std::uint32_t PairTable::max_merge_length() const {
  std::uint32_t best = 0;
  for (std::uint32_t d : dist_)
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

PairTable pair_sync_table(const Dfa& dfa) {
  ensure_valid(dfa);
  const std::uint32_t n = dfa.n_states;
  PairTable table(n);

  auto idx = [](State p, State q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(q) * (q + 1) / 2 + p;
  };
  const std::size_t n_pairs = static_cast<std::size_t>(n) * (n + 1) / 2;

  // CSR reverse adjacency over the pair automaton.
  std::vector<std::uint32_t> head(n_pairs + 1, 0);
  for (State q = 0; q < n; ++q)
    for (State p = 0; p <= q; ++p)
      for (Letter a = 0; a < dfa.n_letters; ++a)
        ++head[idx(dfa.step(p, a), dfa.step(q, a)) + 1];
  for (std::size_t i = 1; i <= n_pairs; ++i) head[i] += head[i - 1];
  std::vector<std::uint32_t> pred(head[n_pairs]);
  {
    std::vector<std::uint32_t> fill(head.begin(), head.end() - 1);
    for (State q = 0; q < n; ++q)
      for (State p = 0; p <= q; ++p)
        for (Letter a = 0; a < dfa.n_letters; ++a) {
          std::size_t t = idx(dfa.step(p, a), dfa.step(q, a));
          pred[fill[t]++] = static_cast<std::uint32_t>(idx(p, q));
        }
  }

  std::vector<std::uint32_t> dist(n_pairs, PairTable::kUnreachable);
  std::queue<std::uint32_t> queue;
  for (State q = 0; q < n; ++q) {
    dist[idx(q, q)] = 0;
    queue.push(static_cast<std::uint32_t>(idx(q, q)));
  }
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop();
    for (std::uint32_t e = head[cur]; e < head[cur + 1]; ++e) {
      if (dist[pred[e]] == PairTable::kUnreachable) {
        dist[pred[e]] = dist[cur] + 1;
        queue.push(pred[e]);
      }
    }
  }

  for (State q = 0; q < n; ++q)
    for (State p = 0; p <= q; ++p)
      if (dist[idx(p, q)] != PairTable::kUnreachable) table.set(p, q, dist[idx(p, q)]);
  return table;
}

}  // namespace synlab
