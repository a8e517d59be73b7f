#include "synlab/generators.hpp"

#include <algorithm>
#include <set>

#include "synlab/errors.hpp"
#include "synlab/rng.hpp"

namespace synlab {

Dfa cerny(std::uint32_t n) {
  if (n < 2) throw ValidationError("cerny family starts at 2 states");
  Dfa dfa(n, 2);
  for (State q = 0; q < n; ++q) {
    dfa.at(q, 0) = (q + 1) % n;
    dfa.at(q, 1) = q == 0 ? 1 : q;
  }
  return dfa;
}

Dfa random_dfa(std::uint32_t n_states, std::uint32_t n_letters, std::uint64_t seed) {
  if (n_states == 0 || n_letters == 0)
    throw ValidationError("random automaton needs states and letters");
  SplitMix64 rng(seed);
  Dfa dfa(n_states, n_letters);
  for (State q = 0; q < n_states; ++q)
    for (Letter a = 0; a < n_letters; ++a)
      dfa.at(q, a) = static_cast<State>(rng.below(n_states));
  return dfa;
}

Dfa random_synchronizing_dfa(std::uint32_t n_states, std::uint32_t n_letters,
                             std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Dfa dfa = random_dfa(n_states, n_letters, derive_seed(seed, attempt));
    if (is_synchronizing(dfa)) return dfa;
  }
}

namespace {

std::vector<std::uint32_t> pick_distinct_vars(SplitMix64& rng, std::uint32_t n_vars,
                                              std::uint32_t count) {
  std::set<std::uint32_t> vars;
  while (vars.size() < count)
    vars.insert(static_cast<std::uint32_t>(rng.below(n_vars)));
  return {vars.begin(), vars.end()};
}

}  // namespace

CnfFormula random_cnf(std::uint32_t n_vars, std::uint32_t n_clauses, std::uint64_t seed) {
  if (n_vars == 0) throw ValidationError("cnf needs variables");
  SplitMix64 rng(seed);
  CnfFormula f;
  f.n_vars = n_vars;
  for (std::uint32_t c = 0; c < n_clauses; ++c) {
    std::uint32_t width =
        static_cast<std::uint32_t>(1 + rng.below(std::min<std::uint32_t>(3, n_vars)));
    std::vector<Literal> clause;
    for (std::uint32_t var : pick_distinct_vars(rng, n_vars, width)) {
      Literal lit = static_cast<Literal>(var + 1);
      clause.push_back(rng.coin() ? lit : -lit);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

CnfFormula random_planted_cnf(std::uint32_t n_vars, std::uint32_t n_clauses,
                              std::uint64_t seed) {
  if (n_vars == 0) throw ValidationError("cnf needs variables");
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> hidden(n_vars);
  for (auto& bit : hidden) bit = rng.coin();

  CnfFormula f;
  f.n_vars = n_vars;
  for (std::uint32_t c = 0; c < n_clauses; ++c) {
    std::uint32_t width =
        static_cast<std::uint32_t>(1 + rng.below(std::min<std::uint32_t>(3, n_vars)));
    std::vector<std::uint32_t> vars = pick_distinct_vars(rng, n_vars, width);
    std::vector<Literal> clause;
    std::uint32_t forced = static_cast<std::uint32_t>(rng.below(width));
    for (std::uint32_t i = 0; i < width; ++i) {
      Literal lit = static_cast<Literal>(vars[i] + 1);
      bool positive = i == forced ? hidden[vars[i]] != 0 : rng.coin();
      clause.push_back(positive ? lit : -lit);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

namespace {

CnfFormula make_cnf(std::uint32_t n_vars, std::vector<std::vector<Literal>> clauses) {
  CnfFormula f;
  f.n_vars = n_vars;
  f.clauses = std::move(clauses);
  return f;
}

}  // namespace

std::vector<CnfFormula> unsat_cnf_corpus() {
  std::vector<CnfFormula> corpus;
  // x1, !x1
  corpus.push_back(make_cnf(1, {{1}, {-1}}));
  // all four 2-clauses on two variables
  corpus.push_back(make_cnf(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}));
  // chain forcing x1, x2, x3 and then forbidding the result
  corpus.push_back(make_cnf(3, {{1}, {-1, 2}, {-2, 3}, {-3, -1}}));
  // mixed widths over three variables
  corpus.push_back(make_cnf(3, {{1, 2, 3}, {1, -2}, {-1, 3}, {-3, 2}, {-2, -3}, {-1, -2}}));
  // four variables, six clauses
  corpus.push_back(make_cnf(4, {{1, 2}, {-2, 3}, {-3, 4}, {-4, -1}, {-2, -4, 1}, {2}}));
  // four variables with a width-3 clause in the forcing chain
  corpus.push_back(make_cnf(4, {{4}, {-4, 1}, {-1, 2, -4}, {-2, -4}}));
  return corpus;
}

std::vector<CspInstance> unsat_csp_corpus() {
  std::vector<CspInstance> corpus;

  // x1 and !x1 as explicit one-variable constraints; the bound N+1 over the
  // best satisfiable fraction is attained exactly here.
  {
    CspInstance phi;
    phi.n_vars = 1;
    phi.constraints.push_back({{0}, {"1"}});
    phi.constraints.push_back({{0}, {"0"}});
    corpus.push_back(std::move(phi));
  }

  // Odd cycle of parity constraints on three variables.
  {
    CspInstance phi;
    phi.n_vars = 3;
    phi.constraints.push_back({{0, 1}, {"01", "10"}});
    phi.constraints.push_back({{1, 2}, {"01", "10"}});
    phi.constraints.push_back({{0, 2}, {"01", "10"}});
    corpus.push_back(std::move(phi));
  }

  // Two variables, all four value combinations forbidden by one constraint each.
  {
    CspInstance phi;
    phi.n_vars = 2;
    phi.constraints.push_back({{0, 1}, {"01", "10", "11"}});
    phi.constraints.push_back({{0, 1}, {"00", "10", "11"}});
    phi.constraints.push_back({{0, 1}, {"00", "01", "11"}});
    phi.constraints.push_back({{0, 1}, {"00", "01", "10"}});
    corpus.push_back(std::move(phi));
  }
  return corpus;
}

}  // namespace synlab
