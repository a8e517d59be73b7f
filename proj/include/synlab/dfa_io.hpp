#pragma once

#include <iosfwd>
#include <string>

#include "synlab/dfa.hpp"

namespace synlab {

// Text automaton format, one automaton per file:
//   line 1:              dfa <n_states> <n_letters>
//   lines 2..n_states+1: n_letters whitespace-separated target states
// Lines starting with '#' are comments. ASCII, bit-exact (no float fields).
Dfa read_dfa(std::istream& in, const std::string& source_name = "<stream>");
Dfa read_dfa_file(const std::string& path);
void write_dfa(std::ostream& out, const Dfa& dfa);
void write_dfa_file(const std::string& path, const Dfa& dfa);

// Words serialize as whitespace-separated letter indices; "" is the empty word.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

}  // namespace synlab
