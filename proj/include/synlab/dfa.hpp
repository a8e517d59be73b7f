#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synlab/state_set.hpp"

namespace synlab {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Complete deterministic transition structure over a finite alphabet.
// States and letters are dense integer indices; descriptive labels live in
// the structures that generate automata, not here.
struct Dfa {
  std::uint32_t n_states = 0;
  std::uint32_t n_letters = 0;
  std::vector<State> table;  // row-major: table[q * n_letters + a]

  Dfa() = default;
  Dfa(std::uint32_t states, std::uint32_t letters)
      : n_states(states), n_letters(letters),
        table(static_cast<std::size_t>(states) * letters, 0) {}

  State step(State q, Letter a) const {
    return table[static_cast<std::size_t>(q) * n_letters + a];
  }
  State& at(State q, Letter a) {
    return table[static_cast<std::size_t>(q) * n_letters + a];
  }
};

// Left-to-right fold of the transition table; apply(dfa, q, {}) == q.
State apply(const Dfa& dfa, State q, const Word& w);

// {apply(dfa, q, w) : q in set}. The empty set is rejected: nothing in this
// toolkit ever acts on it, and silently returning {} hides caller bugs.
StateSet image(const Dfa& dfa, const StateSet& set, const Word& w);
StateSet image_letter(const Dfa& dfa, const StateSet& set, Letter a);

// Pair-automaton reachability check: every unordered pair of states must be
// able to reach a merged pair. Polynomial in n_states.
bool is_synchronizing(const Dfa& dfa);

// Structural defects (out-of-range entries, wrong table size); empty when ok.
std::vector<std::string> validate(const Dfa& dfa);

// Throwing variant used at API boundaries.
void ensure_valid(const Dfa& dfa);

}  // namespace synlab
