#include "synlab/reports.hpp"

#include <cmath>
#include <cstdio>

#include "synlab/errors.hpp"

namespace synlab {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace {

// Exact reset search that degrades to "unknown" instead of failing the row.
std::optional<ResetSearchResult> try_exact(const Dfa& dfa, const SubsetBfsOptions& opt) {
  try {
    return shortest_reset(dfa, opt);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

}  // namespace

GapReport gap_report(const std::vector<GapInstance>& instances,
                     const GapReportOptions& opt) {
  GapReport report;
  for (const GapInstance& inst : instances) {
    GapRow row;
    row.id = inst.id;
    row.n_vars = inst.phi.n_vars;
    row.n_constraints = static_cast<std::uint32_t>(inst.phi.constraints.size());
    const std::uint32_t n_vars = inst.phi.n_vars;

    auto violate = [&](const std::string& what) {
      if (row.ok) {
        row.ok = false;
        row.note = what;
      }
      report.all_ok = false;
    };

    try {
      ReductionOutput aut = opt.compressed
                                ? build_compressed_automaton(inst.phi, opt.build)
                                : build_automaton(inst.phi, opt.build);

      std::optional<ValueResult> val;
      try {
        val = value_search(inst.phi, opt.value_cap);
        row.val = val->value.str();
      } catch (const CapacityError&) {
        row.val = "unknown";
      }

      std::optional<ResetSearchResult> exact = try_exact(aut.dfa, opt.bfs);
      std::optional<std::uint64_t> exact_len;
      if (exact && exact->outcome == SearchOutcome::found)
        exact_len = exact->certificate->length;

      if (!aut.empty_constraints.empty()) {
        // A constraint without satisfying rows degenerates to a timing loop;
        // the automaton cannot reset.
        row.note = "degenerate: constraint without satisfying rows";
        if (exact_len) violate("degenerate automaton reported a reset word");
        row.upper = row.lower = "inf";
      } else if (val) {
        const bool satisfiable = val->value == Fraction(1);
        // Every reset word has length at least (N+1)/Val; for satisfiable
        // instances this is just N+1.
        const Fraction bound = val->value.reciprocal().scaled(n_vars + 1);
        row.lower = bound.str();

        if (satisfiable) {
          // Certificate 2 v 0 from the satisfying assignment.
          Word cert;
          cert.push_back(2);
          for (std::uint8_t bit : val->witness) cert.push_back(bit);
          cert.push_back(0);
          StateSet end = image(aut.dfa, StateSet::full(aut.dfa.n_states), cert);
          if (end.count() != 1 || end.first() != 0)
            violate("satisfiable certificate 2v0 failed replay");
          if (cert.size() != n_vars + 2) violate("certificate length != N+2");
          if (exact_len && *exact_len > n_vars + 2) violate("exact reset exceeds N+2");
        } else if (exact_len && inst.cnf_derived && *exact_len < 2 * n_vars + 2) {
          violate("exact reset below 2N+2 for an unsatisfiable formula");
        }

        if (exact_len &&
            Fraction(static_cast<std::int64_t>(*exact_len)) < bound)
          violate("exact reset below (N+1)/Val");

        row.upper = exact_len ? std::to_string(*exact_len)
                   : satisfiable ? std::to_string(n_vars + 2)
                                 : "unknown";
        if (row.upper != "unknown")
          row.ratio = format_double(std::stod(row.upper) / bound.to_double());

        // With two or more gadgets the roots can only merge at the sink, so
        // the root set alone already needs (N+1)/Val letters.
        if (aut.map.roots.size() >= 2) {
          auto root_res = shortest_sync_of_set(aut.dfa, root_set(aut), opt.bfs);
          if (root_res.outcome == SearchOutcome::found &&
              Fraction(static_cast<std::int64_t>(root_res.certificate->length)) < bound)
            violate("root-set reset below (N+1)/Val");
        }
      } else {
        row.upper = exact_len ? std::to_string(*exact_len) : "unknown";
        row.lower = "unknown";
        row.note = "value over brute-force cap";
      }
    } catch (const CapacityError& e) {
      row.note = std::string("budget: ") + e.what();
      row.val = row.upper = row.lower = "unknown";
    }

    if (row.ok && row.note.empty()) row.note = "ok";
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string gap_report_csv(const GapReport& report) {
  std::string out = "instance,n_vars,n_constraints,val,upper_bound,lower_bound,gap_ratio,status\n";
  for (const GapRow& row : report.rows) {
    std::string status = row.ok ? row.note : "violation: " + row.note;
    for (char& c : status)
      if (c == ',') c = ';';
    out += row.id;
    out += ',' + std::to_string(row.n_vars);
    out += ',' + std::to_string(row.n_constraints);
    out += ',' + row.val;
    out += ',' + row.upper;
    out += ',' + row.lower;
    out += ',' + (row.ratio.empty() ? std::string("-") : row.ratio);
    out += ',' + status;
    out += '\n';
  }
  return out;
}

std::string amplification_csv(const std::vector<AmplificationReport>& reports) {
  std::string out = "n,k,beta,trials,empirical,bound,ci_low,ci_high\n";
  for (const AmplificationReport& r : reports) {
    out += std::to_string(r.n_vertices);
    out += ',' + std::to_string(r.k);
    out += ',' + format_double(r.beta);
    out += ',' + std::to_string(r.trials);
    out += ',' + format_double(r.empirical);
    out += ',' + format_double(r.bound);
    out += ',' + format_double(r.ci_low);
    out += ',' + format_double(r.ci_high);
    out += '\n';
  }
  return out;
}

}  // namespace synlab
