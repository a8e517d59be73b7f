#pragma once

#include <cstdint>
#include <vector>

#include "synlab/csp.hpp"
#include "synlab/dfa.hpp"

namespace synlab {

// Classical slowly-synchronizing family on two letters: letter 0 cycles
// i -> i+1 mod n, letter 1 maps 0 -> 1 and fixes everything else. Its
// shortest reset word has length (n-1)^2.
Dfa cerny(std::uint32_t n);

// Uniform random complete transition table.
Dfa random_dfa(std::uint32_t n_states, std::uint32_t n_letters, std::uint64_t seed);

// Retries random tables until one is synchronizing.
Dfa random_synchronizing_dfa(std::uint32_t n_states, std::uint32_t n_letters,
                             std::uint64_t seed);

// Random CNF with 1..3 distinct literals per clause.
CnfFormula random_cnf(std::uint32_t n_vars, std::uint32_t n_clauses, std::uint64_t seed);

// Random CNF guaranteed satisfiable: a hidden assignment is drawn first and
// every clause is forced to contain at least one literal it satisfies.
CnfFormula random_planted_cnf(std::uint32_t n_vars, std::uint32_t n_clauses,
                              std::uint64_t seed);

// Fixed unsatisfiable formulas with <= 4 variables and <= 6 clauses each.
// Unsatisfiability is re-verified by exhaustive search in the tests.
std::vector<CnfFormula> unsat_cnf_corpus();

// Fixed unsatisfiable CSP instances with <= 3 variables and every constraint
// individually satisfiable, in the explicit satisfying-row representation.
std::vector<CspInstance> unsat_csp_corpus();

}  // namespace synlab
