#include "synlab/gadget.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <unordered_set>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

constexpr std::uint32_t kToSink = GadgetFragment::kToSink;

std::vector<char> dep_lookup(const Constraint& c, std::uint32_t n_vars) {
  std::vector<char> is_dep(n_vars, 0);
  for (std::uint32_t var : c.dep_vars) is_dep[var] = 1;
  return is_dep;
}

std::uint32_t push_state(GadgetFragment& frag, StateRole role, std::uint32_t level,
                         std::string label) {
  frag.next01.push_back({0, 0});
  StateInfo info;
  info.role = role;
  info.level = level;
  info.label = std::move(label);
  frag.info.push_back(std::move(info));
  return frag.n_states++;
}

// Straight path of `length` extra states hanging below `from`, one per level,
// whose endpoint returns to the root on both binary letters. Emulates the
// timing of a subtree with no satisfying leaves. length == 0 turns `from`
// itself into the endpoint.
void attach_path(GadgetFragment& frag, std::uint32_t from, std::uint32_t from_level,
                 std::uint32_t length, const std::string& label) {
  std::uint32_t cur = from;
  for (std::uint32_t i = 1; i <= length; ++i) {
    std::uint32_t next = push_state(frag, StateRole::path, from_level + i, label);
    frag.next01[cur] = {next, next};
    cur = next;
  }
  frag.next01[cur] = {0, 0};  // endpoint: both letters back to the root
}

}  // namespace

const char* role_name(StateRole role) {
  switch (role) {
    case StateRole::sink: return "sink";
    case StateRole::root: return "root";
    case StateRole::internal: return "internal";
    case StateRole::leaf: return "leaf";
    case StateRole::path: return "path";
  }
  return "?";
}

std::uint64_t compressed_size_budget(std::uint64_t n_constraints, std::uint64_t n_vars,
                                     std::uint64_t max_rows) {
  return kCompressedSizeFactor * n_constraints * (n_vars + 1) * (n_vars + 1) *
         std::max<std::uint64_t>(max_rows, 1);
}

GadgetFragment build_tree_gadget(const Constraint& c, std::uint32_t n_vars,
                                 const GadgetBuildOptions& opt) {
  if (n_vars == 0) throw ValidationError("gadget requires at least one variable");
  for (std::uint32_t var : c.dep_vars)
    if (var >= n_vars) throw ValidationError("constraint variable out of range");
  if (c.dep_vars.size() > opt.max_dep_vars)
    throw CapacityError("tree gadget over " + std::to_string(c.dep_vars.size()) +
                        " dependency variables exceeds the 2^" +
                        std::to_string(opt.max_dep_vars) +
                        " leaf cap; use the compressed mode");

  const std::vector<char> is_dep = dep_lookup(c, n_vars);
  const std::unordered_set<std::string> rows(c.sat_rows.begin(), c.sat_rows.end());

  GadgetFragment frag;
  std::vector<std::uint32_t> level{push_state(frag, StateRole::root, 0, "")};

  for (std::uint32_t j = 1; j <= n_vars; ++j) {
    const StateRole role = j == n_vars ? StateRole::leaf : StateRole::internal;
    std::vector<std::uint32_t> next_level;
    if (is_dep[j - 1]) {
      next_level.reserve(level.size() * 2);
      for (std::uint32_t parent : level) {
        // copy: push_state may reallocate the info vector under a reference
        const std::string w = frag.info[parent].label;
        std::uint32_t child0 = push_state(frag, role, j, w + '0');
        std::uint32_t child1 = push_state(frag, role, j, w + '1');
        frag.next01[parent] = {child0, child1};
        next_level.push_back(child0);
        next_level.push_back(child1);
      }
    } else {
      next_level.reserve(level.size());
      for (std::uint32_t parent : level) {
        std::uint32_t child = push_state(frag, role, j, frag.info[parent].label);
        frag.next01[parent] = {child, child};
        next_level.push_back(child);
      }
    }
    level = std::move(next_level);
  }

  // Last level: satisfying labels exit to the sink, the rest return to the root.
  for (std::uint32_t leaf : level) {
    bool satisfying = rows.count(frag.info[leaf].label) > 0;
    std::uint32_t target = satisfying ? kToSink : 0;
    frag.next01[leaf] = {target, target};
  }
  return frag;
}

GadgetFragment build_compressed_gadget(const Constraint& c, std::uint32_t n_vars) {
  if (n_vars == 0) throw ValidationError("gadget requires at least one variable");
  for (std::uint32_t var : c.dep_vars)
    if (var >= n_vars) throw ValidationError("constraint variable out of range");

  GadgetFragment frag;
  push_state(frag, StateRole::root, 0, "");

  if (c.sat_rows.empty()) {
    // No satisfying row at all: the root is the top dead node, so the whole
    // gadget is a root with a timing path of length N back to itself.
    attach_path(frag, 0, 0, n_vars, "");
    return frag;
  }

  const std::vector<char> is_dep = dep_lookup(c, n_vars);

  // Labels consistent with at least one satisfying row.
  std::unordered_set<std::string> live;
  for (const std::string& row : c.sat_rows)
    for (std::size_t len = 0; len <= row.size(); ++len) live.insert(row.substr(0, len));

  // BFS over the live tree. A dead child of a live node becomes the head of
  // a timing path that continues one state per level down to level N; path
  // states are enqueued like everything else, so numbering is level order.
  struct Item {
    std::uint32_t state;
    std::uint32_t level;
    bool on_path;
  };
  std::vector<Item> queue{{0, 0, false}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [state, level, on_path] = queue[head];
    if (level == n_vars) {
      // Endpoint: a live leaf is a satisfying row and exits to the sink; a
      // path endpoint returns to the root.
      std::uint32_t target = on_path ? 0 : kToSink;
      frag.next01[state] = {target, target};
      continue;
    }
    if (on_path) {
      std::uint32_t next =
          push_state(frag, StateRole::path, level + 1, frag.info[state].label);
      frag.next01[state] = {next, next};
      queue.push_back({next, level + 1, true});
      continue;
    }
    const StateRole child_role = level + 1 == n_vars ? StateRole::leaf : StateRole::internal;
    const std::string label = frag.info[state].label;
    if (is_dep[level]) {
      for (std::uint32_t bit = 0; bit < 2; ++bit) {
        std::string child_label = label + static_cast<char>('0' + bit);
        const bool child_live = live.count(child_label) > 0;
        std::uint32_t child =
            push_state(frag, child_live ? child_role : StateRole::path, level + 1,
                       child_label);
        frag.next01[state][bit] = child;
        queue.push_back({child, level + 1, !child_live});
      }
    } else {
      std::uint32_t child = push_state(frag, child_role, level + 1, label);
      frag.next01[state] = {child, child};
      queue.push_back({child, level + 1, false});
    }
  }
  return frag;
}

namespace {

ReductionOutput stitch(const CspInstance& phi, std::vector<GadgetFragment> fragments,
                       bool compressed) {
  ReductionOutput out;
  out.n_vars = phi.n_vars;
  out.n_constraints = static_cast<std::uint32_t>(phi.constraints.size());
  out.compressed = compressed;

  std::uint64_t total = 1;
  for (const GadgetFragment& f : fragments) total += f.n_states;
  if (total > UINT32_MAX) throw CapacityError("automaton too large for 32-bit states");

  out.dfa = Dfa(static_cast<std::uint32_t>(total), 3);
  out.map.states.resize(total);

  // Sink is state 0, fixed by every letter.
  out.dfa.at(0, 0) = out.dfa.at(0, 1) = out.dfa.at(0, 2) = 0;
  out.map.states[0] = StateInfo{};

  State offset = 1;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    GadgetFragment& frag = fragments[i];
    out.map.roots.push_back(offset);
    out.map.gadget_ranges.push_back({offset, offset + frag.n_states});
    for (std::uint32_t s = 0; s < frag.n_states; ++s) {
      const State g = offset + s;
      for (std::uint32_t bit = 0; bit < 2; ++bit) {
        std::uint32_t t = frag.next01[s][bit];
        out.dfa.at(g, bit) = t == kToSink ? 0 : offset + t;
      }
      out.dfa.at(g, 2) = offset;  // letter 2 collapses the gadget to its root
      frag.info[s].constraint = static_cast<std::int32_t>(i);
      out.map.states[g] = std::move(frag.info[s]);
    }
    offset += frag.n_states;
    if (phi.constraints[i].sat_rows.empty())
      out.empty_constraints.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace

ReductionOutput build_automaton(const CspInstance& phi, const GadgetBuildOptions& opt) {
  validate_csp(phi);
  std::vector<GadgetFragment> fragments;
  fragments.reserve(phi.constraints.size());
  for (const Constraint& c : phi.constraints)
    fragments.push_back(build_tree_gadget(c, phi.n_vars, opt));
  return stitch(phi, std::move(fragments), false);
}

ReductionOutput build_compressed_automaton(const CspInstance& phi,
                                           const GadgetBuildOptions& opt) {
  validate_csp(phi);
  const std::uint64_t budget =
      compressed_size_budget(phi.constraints.size(), phi.n_vars, fsat(phi));
  if (budget > opt.max_states)
    throw CapacityError("compressed automaton budget " + std::to_string(budget) +
                        " states exceeds the configured cap of " +
                        std::to_string(opt.max_states));

  std::vector<GadgetFragment> fragments;
  fragments.reserve(phi.constraints.size());
  for (const Constraint& c : phi.constraints)
    fragments.push_back(build_compressed_gadget(c, phi.n_vars));
  ReductionOutput out = stitch(phi, std::move(fragments), true);

  if (out.dfa.n_states > budget)
    throw PropertyViolation("compressed automaton exceeded its size budget");
  return out;
}

const StateInfo& gadget_trace(const ReductionOutput& out, std::uint32_t constraint_index,
                              const Word& w) {
  if (constraint_index >= out.map.roots.size())
    throw ValidationError("constraint index out of range");
  State q = apply(out.dfa, out.map.roots[constraint_index], w);
  return out.map.states[q];
}

StateSet root_set(const ReductionOutput& out) {
  StateSet roots(out.dfa.n_states);
  for (State r : out.map.roots) roots.insert(r);
  return roots;
}

Word reduce_word(const Word& w, std::uint32_t n_vars) {
  const std::size_t period = n_vars + 1;
  Word out;
  out.reserve(w.size());
  std::size_t seg_start = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const bool at_end = i == w.size();
    if (!at_end && w[i] != 2) continue;
    const std::size_t seg_len = i - seg_start;
    // A complete segment (followed by a 2) acts on every root like its
    // longest prefix of length divisible by n_vars+1; the unterminated tail
    // is kept verbatim.
    const std::size_t keep = at_end ? seg_len : seg_len - seg_len % period;
    out.insert(out.end(), w.begin() + seg_start, w.begin() + seg_start + keep);
    seg_start = i + 1;
  }
  return out;
}

std::string label_string(const StateInfo& info) {
  return info.label.empty() ? "-" : info.label;
}

void write_gadget_map(std::ostream& out, const ReductionOutput& aut) {
  for (State q = 0; q < aut.dfa.n_states; ++q) {
    const StateInfo& info = aut.map.states[q];
    out << q << ' ';
    if (info.constraint < 0)
      out << '-';
    else
      out << info.constraint;
    out << ' ' << role_name(info.role) << ' ' << info.level << ' ' << label_string(info)
        << '\n';
  }
}

}  // namespace synlab
