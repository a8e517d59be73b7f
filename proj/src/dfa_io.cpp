#include "synlab/dfa_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ValidationError(source + ":" + std::to_string(line) + ": " + what);
}

// Next non-comment, non-blank line; returns false at end of stream.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Dfa read_dfa(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no))
    fail(source_name, line_no, "missing 'dfa' header");

  std::istringstream header(line);
  std::string magic;
  long long n_states = -1, n_letters = -1;
  header >> magic >> n_states >> n_letters;
  if (magic != "dfa" || header.fail() || n_states <= 0 || n_letters <= 0)
    fail(source_name, line_no, "expected header 'dfa <n_states> <n_letters>'");

  Dfa dfa(static_cast<std::uint32_t>(n_states), static_cast<std::uint32_t>(n_letters));
  for (State q = 0; q < dfa.n_states; ++q) {
    if (!next_content_line(in, line, line_no))
      fail(source_name, line_no, "missing transition row for state " + std::to_string(q));
    std::istringstream row(line);
    for (Letter a = 0; a < dfa.n_letters; ++a) {
      long long target = -1;
      if (!(row >> target))
        fail(source_name, line_no, "incomplete transition row: expected " +
                                       std::to_string(dfa.n_letters) + " entries");
      if (target < 0 || target >= n_states)
        fail(source_name, line_no, "state index out of range: " + std::to_string(target));
      dfa.at(q, a) = static_cast<State>(target);
    }
    std::string excess;
    if (row >> excess)
      fail(source_name, line_no, "excess entries in transition row");
  }
  return dfa;
}

Dfa read_dfa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open automaton file: " + path);
  return read_dfa(in, path);
}

void write_dfa(std::ostream& out, const Dfa& dfa) {
  out << "dfa " << dfa.n_states << ' ' << dfa.n_letters << '\n';
  for (State q = 0; q < dfa.n_states; ++q) {
    for (Letter a = 0; a < dfa.n_letters; ++a) {
      if (a) out << ' ';
      out << dfa.step(q, a);
    }
    out << '\n';
  }
}

void write_dfa_file(const std::string& path, const Dfa& dfa) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write automaton file: " + path);
  write_dfa(out, dfa);
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  Word w;
  long long letter;
  while (in >> letter) {
    if (letter < 0) throw ValidationError("negative letter index in word");
    w.push_back(static_cast<Letter>(letter));
  }
  if (!in.eof()) throw ValidationError("malformed word: expected integer letter indices");
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace synlab
