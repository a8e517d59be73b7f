#include "synlab/binarizer.hpp"

#include <bit>
#include <ostream>
#include <string>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

std::uint32_t ceil_log2(std::uint32_t v) {
  std::uint32_t bits = 0;
  while ((std::uint32_t{1} << bits) < v) ++bits;
  return bits;
}

}  // namespace

BinarizedDfa binarize(const Dfa& dfa) {
  ensure_valid(dfa);
  if (dfa.n_letters < 2)
    throw ValidationError("binarization needs at least a two-letter alphabet");

  const std::uint32_t n = dfa.n_states;
  const std::uint32_t sigma = dfa.n_letters;
  const std::uint32_t m = ceil_log2(sigma);

  // Chain states per original state: one per selector prefix that can still
  // be completed to a valid letter. Prefix v of length k is valid iff
  // v <= (sigma-1) >> (m-k).
  std::vector<std::uint32_t> level_count(m), level_offset(m);
  std::uint32_t chain_per_state = 0;
  for (std::uint32_t k = 0; k < m; ++k) {
    level_offset[k] = chain_per_state;
    level_count[k] = ((sigma - 1) >> (m - k)) + 1;
    chain_per_state += level_count[k];
  }

  BinarizedDfa bin;
  bin.t = m + 1;
  bin.n_tilde = n * (1 + chain_per_state);
  bin.dfa = Dfa(bin.n_tilde, 2);
  bin.state_map.resize(n);

  // Anchors are states 0..n-1; the chains of state q follow in one block.
  auto chain_state = [&](State q, std::uint32_t k, std::uint32_t v) {
    return n + q * chain_per_state + level_offset[k] + v;
  };
  for (State q = 0; q < n; ++q) bin.state_map[q] = q;

  for (State q = 0; q < n; ++q) {
    bin.dfa.at(q, 0) = q;                                    // wait
    bin.dfa.at(q, 1) = m == 0 ? q : chain_state(q, 0, 0);    // open selector
    for (std::uint32_t k = 0; k < m; ++k) {
      for (std::uint32_t v = 0; v < level_count[k]; ++v) {
        const State cur = chain_state(q, k, v);
        for (std::uint32_t bit = 0; bit < 2; ++bit) {
          const std::uint32_t next_v = 2 * v + bit;
          State target;
          if (k + 1 == m) {
            // Final selector bit resolves the letter; invalid values restart
            // the chain at the same anchor.
            target = next_v < sigma ? dfa.step(q, next_v) : q;
          } else {
            target = next_v < level_count[k + 1] ? chain_state(q, k + 1, next_v) : q;
          }
          bin.dfa.at(cur, bit) = target;
        }
      }
    }
  }
  return bin;
}

Word encode_word(const BinarizedDfa& bin, std::uint32_t original_letters, const Word& w) {
  const std::uint32_t m = bin.t - 1;
  Word out;
  out.reserve(w.size() * bin.t);
  for (Letter a : w) {
    if (a >= original_letters) throw ValidationError("letter out of range for encoding");
    out.push_back(1);
    for (std::uint32_t k = 0; k < m; ++k) out.push_back((a >> (m - 1 - k)) & 1);
  }
  return out;
}

Fraction lift_estimate(std::uint64_t x, std::uint32_t t) {
  if (t < 2) throw ValidationError("lift_estimate requires t >= 2");
  if (x < t) throw ValidationError("estimate below t cannot come from a simulation");
  return Fraction(static_cast<std::int64_t>(x), static_cast<std::int64_t>(t));
}

void write_binarizer_map(std::ostream& out, const BinarizedDfa& bin) {
  out << "t " << bin.t << '\n';
  for (std::size_t q = 0; q < bin.state_map.size(); ++q)
    out << q << ' ' << bin.state_map[q] << '\n';
}

}  // namespace synlab
