#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "synlab/csp.hpp"
#include "synlab/dfa.hpp"

namespace synlab {

// Compiles CSP instances into synchronizing automata over the alphabet
// {0, 1, 2}. Each constraint becomes a tree gadget whose levels track a
// prefix of a boolean assignment; the state reached after reading a full
// assignment moves to the sink exactly when the assignment satisfies the
// constraint, and back to the gadget root otherwise. Letter 2 collapses
// every gadget to its root and fixes the sink.

enum class StateRole : std::uint8_t { sink, root, internal, leaf, path };

const char* role_name(StateRole role);

struct StateInfo {
  std::int32_t constraint = -1;  // -1 for the sink
  StateRole role = StateRole::sink;
  std::uint32_t level = 0;       // 0..N; path states carry their timing level
  std::string label;             // bits over the constraint's seen dep-vars
};

struct GadgetMap {
  std::vector<StateInfo> states;                      // indexed by global state
  std::vector<State> roots;                           // root of each gadget
  std::vector<std::pair<State, State>> gadget_ranges; // [first, last) per gadget
};

struct ReductionOutput {
  Dfa dfa;  // alphabet {0,1,2}; sink is state 0, gadgets follow in order
  GadgetMap map;
  std::uint32_t n_vars = 0;
  std::uint32_t n_constraints = 0;
  // Constraints with no satisfying row: their gadget degenerates to a root
  // plus a timing path, and the whole automaton is not synchronizing. The
  // build succeeds but reports them here.
  std::vector<std::uint32_t> empty_constraints;
  bool compressed = false;
};

// A single gadget with local state numbering (root = 0, BFS order) before
// it is stitched into an automaton.
struct GadgetFragment {
  static constexpr std::uint32_t kToSink = UINT32_MAX;

  std::uint32_t n_states = 0;
  std::vector<std::array<std::uint32_t, 2>> next01;  // per state, letters 0/1
  std::vector<StateInfo> info;
};

struct GadgetBuildOptions {
  // Uncompressed gadgets materialize 2^d leaves; refuse beyond this.
  std::uint32_t max_dep_vars = 16;
  // Compressed builds are refused when the size-law budget exceeds this.
  std::uint64_t max_states = 4'000'000;
};

// Size-law factor for compressed automata, frozen by measurement: for every
// N >= 2 grid point the state count stays below
// kCompressedSizeFactor * M * N^2 * K. The builder's own admission budget
// uses (N+1)^2 so that one-variable instances fit under the same factor.
inline constexpr std::uint64_t kCompressedSizeFactor = 2;
std::uint64_t compressed_size_budget(std::uint64_t n_constraints, std::uint64_t n_vars,
                                     std::uint64_t max_rows);

GadgetFragment build_tree_gadget(const Constraint& c, std::uint32_t n_vars,
                                 const GadgetBuildOptions& opt = {});
GadgetFragment build_compressed_gadget(const Constraint& c, std::uint32_t n_vars);

ReductionOutput build_automaton(const CspInstance& phi, const GadgetBuildOptions& opt = {});
ReductionOutput build_compressed_automaton(const CspInstance& phi,
                                           const GadgetBuildOptions& opt = {});

// Applies w from the root of the given gadget and reports where it landed.
const StateInfo& gadget_trace(const ReductionOutput& out, std::uint32_t constraint_index,
                              const Word& w);

// The set {r_1, ..., r_M} of gadget roots.
StateSet root_set(const ReductionOutput& out);

// Rewrites a word over {0,1,2} into a word over {0,1} that acts identically
// on the root set: each segment before a 2 is cut to its longest prefix of
// length divisible by (n_vars + 1), the tail after the last 2 is kept as is.
// Never longer than the input.
Word reduce_word(const Word& w, std::uint32_t n_vars);

// Sidecar map file: one line per state,
//   <state> <constraint|-> <role> <level> <label|->
void write_gadget_map(std::ostream& out, const ReductionOutput& out_aut);
std::string label_string(const StateInfo& info);

}  // namespace synlab
