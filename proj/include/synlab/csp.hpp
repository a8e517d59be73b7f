#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "synlab/fraction.hpp"

namespace synlab {

// Boolean assignment, one entry (0/1) per variable.
using Assignment = std::vector<std::uint8_t>;

// A constraint is stored by the set of variables it is declared on and the
// explicit list of satisfying assignments restricted to those variables.
// dep_vars is ordered ascending; sat_rows entries are '0'/'1' strings of
// length |dep_vars|, pairwise distinct. dep_vars is treated syntactically:
// a listed variable is not required to actually influence the constraint.
struct Constraint {
  std::vector<std::uint32_t> dep_vars;
  std::vector<std::string> sat_rows;
};

struct CspInstance {
  std::uint32_t n_vars = 0;
  std::vector<Constraint> constraints;
};

// Signed 1-based variable index, DIMACS style: +v / -v, never 0.
using Literal = std::int32_t;

struct CnfFormula {
  std::uint32_t n_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

// Throws ValidationError when the structural invariants above fail.
void validate_csp(const CspInstance& phi);

// True iff the restriction of v to dep_vars equals some sat_row.
bool eval_constraint(const Constraint& c, const Assignment& v);

inline constexpr std::uint32_t kValueBruteForceCap = 24;

struct ValueResult {
  Fraction value;      // max fraction of satisfied constraints
  Assignment witness;  // an assignment attaining it
};

// Exhaustive search over all 2^N assignments. N above the cap is refused;
// every caller in this project stays far below it.
ValueResult value_search(const CspInstance& phi, std::uint32_t cap = kValueBruteForceCap);
Fraction value(const CspInstance& phi, std::uint32_t cap = kValueBruteForceCap);

// Max number of satisfying rows over all constraints.
std::uint32_t fsat(const CspInstance& phi);

// One constraint per clause: dep_vars are the clause variables (deduplicated,
// sorted), sat_rows all rows except those falsifying every literal. A clause
// containing both x and !x becomes the always-true constraint with no
// variables and a single empty row.
CspInstance from_cnf(const CnfFormula& f);

// DIMACS CNF ('p cnf N M' header, 0-terminated clauses, 'c' comments).
CnfFormula parse_dimacs(std::istream& in, const std::string& source_name = "<stream>",
                        bool allow_empty_clauses = false);
CnfFormula parse_dimacs_file(const std::string& path, bool allow_empty_clauses = false);

// CSP text format:
//   csp <N> <M>
//   per constraint: 'constraint <d> <K>', a line of d variable indices
//   (0-based), then K lines each a d-character '0'/'1' row.
CspInstance read_csp(std::istream& in, const std::string& source_name = "<stream>");
CspInstance read_csp_file(const std::string& path);
void write_csp(std::ostream& out, const CspInstance& phi);

}  // namespace synlab
