#include "synlab/csp.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ValidationError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void validate_csp(const CspInstance& phi) {
  if (phi.n_vars == 0) throw ValidationError("csp instance has no variables");
  if (phi.constraints.empty()) throw ValidationError("csp instance has no constraints");
  for (std::size_t i = 0; i < phi.constraints.size(); ++i) {
    const Constraint& c = phi.constraints[i];
    const std::string where = "constraint " + std::to_string(i);
    for (std::size_t j = 0; j < c.dep_vars.size(); ++j) {
      if (c.dep_vars[j] >= phi.n_vars)
        throw ValidationError(where + ": variable index out of range");
      if (j > 0 && c.dep_vars[j] <= c.dep_vars[j - 1])
        throw ValidationError(where + ": dep_vars must be strictly ascending");
    }
    if (c.dep_vars.size() < 64 && c.sat_rows.size() > (std::size_t{1} << c.dep_vars.size()))
      throw ValidationError(where + ": more rows than assignments to dep_vars");
    std::set<std::string> seen;
    for (const std::string& row : c.sat_rows) {
      if (row.size() != c.dep_vars.size())
        throw ValidationError(where + ": row length does not match dep_vars");
      for (char b : row)
        if (b != '0' && b != '1')
          throw ValidationError(where + ": row must consist of '0'/'1'");
      if (!seen.insert(row).second)
        throw ValidationError(where + ": duplicate satisfying row");
    }
  }
}

bool eval_constraint(const Constraint& c, const Assignment& v) {
  for (std::uint32_t var : c.dep_vars)
    if (var >= v.size())
      throw ValidationError("assignment shorter than constraint dependency set");
  for (const std::string& row : c.sat_rows) {
    bool match = true;
    for (std::size_t i = 0; i < c.dep_vars.size(); ++i) {
      if ((v[c.dep_vars[i]] != 0) != (row[i] == '1')) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

ValueResult value_search(const CspInstance& phi, std::uint32_t cap) {
  validate_csp(phi);
  if (phi.n_vars > cap || phi.n_vars > 62)
    throw CapacityError("value(): " + std::to_string(phi.n_vars) +
                        " variables exceed the brute-force cap of " + std::to_string(cap));

  // Packed representation: constraint satisfied iff the masked assignment
  // equals one of its scattered rows.
  struct Packed {
    std::uint64_t dep_mask = 0;
    std::vector<std::uint64_t> rows;
  };
  std::vector<Packed> packed(phi.constraints.size());
  for (std::size_t i = 0; i < phi.constraints.size(); ++i) {
    const Constraint& c = phi.constraints[i];
    Packed& p = packed[i];
    for (std::uint32_t var : c.dep_vars) p.dep_mask |= std::uint64_t{1} << var;
    for (const std::string& row : c.sat_rows) {
      std::uint64_t bits = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == '1') bits |= std::uint64_t{1} << c.dep_vars[j];
      p.rows.push_back(bits);
    }
  }

  const std::uint64_t total = std::uint64_t{1} << phi.n_vars;
  std::uint32_t best = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint32_t count = 0;
    for (const Packed& p : packed) {
      const std::uint64_t restricted = m & p.dep_mask;
      for (std::uint64_t row : p.rows) {
        if (row == restricted) {
          ++count;
          break;
        }
      }
    }
    if (count > best) {
      best = count;
      best_mask = m;
      if (best == phi.constraints.size()) break;
    }
  }

  Assignment witness(phi.n_vars, 0);
  for (std::uint32_t i = 0; i < phi.n_vars; ++i)
    witness[i] = static_cast<std::uint8_t>((best_mask >> i) & 1);
  return {Fraction(best, static_cast<std::int64_t>(phi.constraints.size())), witness};
}

Fraction value(const CspInstance& phi, std::uint32_t cap) {
  return value_search(phi, cap).value;
}

std::uint32_t fsat(const CspInstance& phi) {
  std::size_t best = 0;
  for (const Constraint& c : phi.constraints) best = std::max(best, c.sat_rows.size());
  return static_cast<std::uint32_t>(best);
}

CspInstance from_cnf(const CnfFormula& f) {
  if (f.n_vars == 0) throw ValidationError("cnf formula has no variables");
  CspInstance phi;
  phi.n_vars = f.n_vars;
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const auto& clause = f.clauses[ci];
    if (clause.empty())
      throw ValidationError("clause " + std::to_string(ci) + " is empty");

    // Deduplicate literals, detect tautologies (x with !x).
    std::set<std::uint32_t> pos, neg;
    for (Literal lit : clause) {
      if (lit == 0 || static_cast<std::uint32_t>(lit < 0 ? -lit : lit) > f.n_vars)
        throw ValidationError("clause " + std::to_string(ci) + ": literal out of range");
      if (lit > 0)
        pos.insert(static_cast<std::uint32_t>(lit - 1));
      else
        neg.insert(static_cast<std::uint32_t>(-lit - 1));
    }
    Constraint c;
    bool tautology = false;
    for (std::uint32_t var : pos)
      if (neg.count(var)) tautology = true;
    if (tautology) {
      c.sat_rows.push_back("");  // always true: no variables, one empty row
      phi.constraints.push_back(std::move(c));
      continue;
    }
    std::set<std::uint32_t> vars(pos.begin(), pos.end());
    vars.insert(neg.begin(), neg.end());
    c.dep_vars.assign(vars.begin(), vars.end());

    const std::size_t d = c.dep_vars.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
      std::string row(d, '0');
      bool satisfied = false;
      for (std::size_t i = 0; i < d; ++i) {
        bool bit = (m >> (d - 1 - i)) & 1;
        if (bit) row[i] = '1';
        if (bit ? pos.count(c.dep_vars[i]) : neg.count(c.dep_vars[i])) satisfied = true;
      }
      if (satisfied) c.sat_rows.push_back(std::move(row));
    }
    phi.constraints.push_back(std::move(c));
  }
  validate_csp(phi);
  return phi;
}

CnfFormula parse_dimacs(std::istream& in, const std::string& source_name,
                        bool allow_empty_clauses) {
  CnfFormula f;
  std::size_t line_no = 0;
  std::string line;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<Literal> current;
  bool clause_open = false;
  std::size_t clause_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == 'c') continue;
    if (line[pos] == 'p') {
      if (have_header) fail(source_name, line_no, "duplicate 'p' header");
      std::istringstream hs(line.substr(pos));
      std::string p, fmt;
      long long n = -1, m = -1;
      hs >> p >> fmt >> n >> m;
      if (p != "p" || fmt != "cnf" || hs.fail() || n <= 0 || m < 0)
        fail(source_name, line_no, "expected header 'p cnf <vars> <clauses>'");
      f.n_vars = static_cast<std::uint32_t>(n);
      declared_clauses = m;
      have_header = true;
      continue;
    }
    if (!have_header) fail(source_name, line_no, "clause data before 'p cnf' header");
    std::istringstream ls(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.empty() && !allow_empty_clauses)
          fail(source_name, line_no, "empty clause");
        f.clauses.push_back(current);
        current.clear();
        clause_open = false;
      } else {
        long long var = lit < 0 ? -lit : lit;
        if (var > f.n_vars)
          fail(source_name, line_no,
               "literal " + std::to_string(lit) + " out of range for " +
                   std::to_string(f.n_vars) + " variables");
        if (!clause_open) {
          clause_open = true;
          clause_line = line_no;
        }
        current.push_back(static_cast<Literal>(lit));
      }
    }
    if (!ls.eof()) fail(source_name, line_no, "malformed literal");
  }
  if (!have_header) fail(source_name, line_no, "missing 'p cnf' header");
  if (clause_open) fail(source_name, clause_line, "clause not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses)
    fail(source_name, line_no,
         "clause count mismatch: header declares " + std::to_string(declared_clauses) +
             ", found " + std::to_string(f.clauses.size()));
  return f;
}

CnfFormula parse_dimacs_file(const std::string& path, bool allow_empty_clauses) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open cnf file: " + path);
  return parse_dimacs(in, path, allow_empty_clauses);
}

CspInstance read_csp(std::istream& in, const std::string& source_name) {
  std::size_t line_no = 0;
  std::string line;

  auto next_line = [&](bool allow_empty) -> std::string {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) {
        if (allow_empty) return "";
        continue;
      }
      if (line[pos] == '#') continue;
      return line;
    }
    fail(source_name, line_no, "unexpected end of file");
  };

  std::istringstream header(next_line(false));
  std::string magic;
  long long n = -1, m = -1;
  header >> magic >> n >> m;
  if (magic != "csp" || header.fail() || n <= 0 || m <= 0)
    fail(source_name, line_no, "expected header 'csp <n_vars> <n_constraints>'");

  CspInstance phi;
  phi.n_vars = static_cast<std::uint32_t>(n);
  for (long long i = 0; i < m; ++i) {
    std::istringstream cs(next_line(false));
    std::string kw;
    long long d = -1, k = -1;
    cs >> kw >> d >> k;
    if (kw != "constraint" || cs.fail() || d < 0 || k < 0)
      fail(source_name, line_no, "expected 'constraint <d> <K>'");
    Constraint c;
    if (d > 0) {
      std::istringstream vs(next_line(false));
      for (long long j = 0; j < d; ++j) {
        long long var = -1;
        if (!(vs >> var) || var < 0 || var >= n)
          fail(source_name, line_no, "bad variable index list");
        c.dep_vars.push_back(static_cast<std::uint32_t>(var));
      }
    }
    for (long long j = 0; j < k; ++j) {
      // A nullary constraint's row is an empty line.
      std::string row = next_line(d == 0);
      std::istringstream rs(row);
      std::string bits;
      rs >> bits;
      if (static_cast<long long>(bits.size()) != d)
        fail(source_name, line_no, "row length does not match d");
      c.sat_rows.push_back(bits);
    }
    phi.constraints.push_back(std::move(c));
  }
  try {
    validate_csp(phi);
  } catch (const ValidationError& e) {
    throw ValidationError(source_name + ": " + e.what());
  }
  return phi;
}

CspInstance read_csp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open csp file: " + path);
  return read_csp(in, path);
}

void write_csp(std::ostream& out, const CspInstance& phi) {
  out << "csp " << phi.n_vars << ' ' << phi.constraints.size() << '\n';
  for (const Constraint& c : phi.constraints) {
    out << "constraint " << c.dep_vars.size() << ' ' << c.sat_rows.size() << '\n';
    if (!c.dep_vars.empty()) {
      for (std::size_t i = 0; i < c.dep_vars.size(); ++i) {
        if (i) out << ' ';
        out << c.dep_vars[i];
      }
      out << '\n';
    }
    for (const std::string& row : c.sat_rows) out << row << '\n';
  }
}

}  // namespace synlab
