#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "synlab/dfa.hpp"
#include "synlab/fraction.hpp"

namespace synlab {

// Binary-alphabet simulation of a multi-letter automaton. Letter a is
// triggered by the t-bit codeword 1 b_1 ... b_m, where b_1..b_m is a in
// binary (m = ceil(log2 |alphabet|), t = m + 1). At an anchor state, bit 0
// waits in place and bit 1 opens a selector chain; an invalid selector value
// restarts the chain at the same anchor. Reading any t zeros therefore parks
// every state at an anchor, which gives the two-sided relation
//   Syn(A) * t <= Syn(B) <= t * (1 + Syn(A)).
struct BinarizedDfa {
  Dfa dfa;                      // two letters
  std::uint32_t t = 0;          // bits per simulated letter
  std::vector<State> state_map; // original state -> its anchor in dfa
  std::uint32_t n_tilde = 0;    // == dfa.n_states, always <= 2 * |alphabet| * n
};

BinarizedDfa binarize(const Dfa& dfa);

// Codeword concatenation for a word of the original automaton.
Word encode_word(const BinarizedDfa& bin, std::uint32_t original_letters, const Word& w);

// x/t, the estimate transfer from the binary automaton back to the original.
Fraction lift_estimate(std::uint64_t x, std::uint32_t t);

// Sidecar: 't <t>' on the first line, then '<original> <anchor>' per state.
void write_binarizer_map(std::ostream& out, const BinarizedDfa& bin);

}  // namespace synlab
