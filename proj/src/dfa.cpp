#include "synlab/dfa.hpp"

#include <queue>
#include <string>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

void check_state(const Dfa& dfa, State q) {
  if (q >= dfa.n_states) {
    throw ValidationError("state index " + std::to_string(q) + " out of range [0, " +
                          std::to_string(dfa.n_states) + ")");
  }
}

void check_word(const Dfa& dfa, const Word& w) {
  for (Letter a : w) {
    if (a >= dfa.n_letters) {
      throw ValidationError("letter index " + std::to_string(a) + " out of range [0, " +
                            std::to_string(dfa.n_letters) + ")");
    }
  }
}

}  // namespace

State apply(const Dfa& dfa, State q, const Word& w) {
  check_state(dfa, q);
  check_word(dfa, w);
  for (Letter a : w) q = dfa.step(q, a);
  return q;
}

StateSet image_letter(const Dfa& dfa, const StateSet& set, Letter a) {
  StateSet out(dfa.n_states);
  set.for_each([&](State q) { out.insert(dfa.step(q, a)); });
  return out;
}

StateSet image(const Dfa& dfa, const StateSet& set, const Word& w) {
  if (set.universe() != dfa.n_states)
    throw ValidationError("state set universe does not match automaton");
  if (set.empty()) throw ValidationError("image of the empty state set is undefined");
  check_word(dfa, w);
  StateSet cur = set;
  for (Letter a : w) cur = image_letter(dfa, cur, a);
  return cur;
}

bool is_synchronizing(const Dfa& dfa) {
  ensure_valid(dfa);
  const std::uint32_t n = dfa.n_states;
  if (n == 1) return true;

  // Unordered pairs {p, q} with p <= q, triangular indexing.
  auto idx = [](State p, State q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(q) * (q + 1) / 2 + p;
  };
  const std::size_t n_pairs = static_cast<std::size_t>(n) * (n + 1) / 2;

  // Reverse adjacency: which pairs map onto a given pair by one letter.
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

  // Backward BFS from all diagonal pairs.
  std::vector<char> merged(n_pairs, 0);
  std::queue<std::uint32_t> queue;
  for (State q = 0; q < n; ++q) {
    merged[idx(q, q)] = 1;
    queue.push(static_cast<std::uint32_t>(idx(q, q)));
  }
  std::size_t reached = n;
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop();
    for (std::uint32_t e = head[cur]; e < head[cur + 1]; ++e) {
      if (!merged[pred[e]]) {
        merged[pred[e]] = 1;
        ++reached;
        queue.push(pred[e]);
      }
    }
  }
  return reached == n_pairs;
}

std::vector<std::string> validate(const Dfa& dfa) {
  std::vector<std::string> defects;
  if (dfa.n_states == 0) defects.push_back("automaton has no states");
  if (dfa.n_letters == 0) defects.push_back("automaton has no letters");
  const std::size_t expected = static_cast<std::size_t>(dfa.n_states) * dfa.n_letters;
  if (dfa.table.size() != expected) {
    defects.push_back("incomplete transition table: " + std::to_string(dfa.table.size()) +
                      " entries, expected " + std::to_string(expected));
    return defects;  // entry checks would index out of bounds
  }
  for (State q = 0; q < dfa.n_states; ++q)
    for (Letter a = 0; a < dfa.n_letters; ++a)
      if (dfa.step(q, a) >= dfa.n_states)
        defects.push_back("state index out of range: delta(" + std::to_string(q) + ", " +
                          std::to_string(a) + ") = " + std::to_string(dfa.step(q, a)));
  return defects;
}

void ensure_valid(const Dfa& dfa) {
  auto defects = validate(dfa);
  if (!defects.empty()) throw ValidationError("invalid automaton: " + defects.front());
}

}  // namespace synlab
