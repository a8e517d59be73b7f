#include <doctest.h>

#include <sstream>

#include "synlab/dfa.hpp"
#include "synlab/dfa_io.hpp"
#include "synlab/errors.hpp"
#include "synlab/generators.hpp"
#include "synlab/rng.hpp"

using namespace synlab;

namespace {

// 3 states, sink at 0: everything falls into 0 on letter 0, letter 1 rotates.
Dfa sink_automaton() {
  Dfa dfa(3, 2);
  dfa.at(0, 0) = 0; dfa.at(0, 1) = 0;
  dfa.at(1, 0) = 0; dfa.at(1, 1) = 2;
  dfa.at(2, 0) = 0; dfa.at(2, 1) = 1;
  return dfa;
}

Word random_word(SplitMix64& rng, std::uint32_t n_letters, std::uint32_t max_len) {
  Word w(rng.below(max_len + 1));
  for (Letter& a : w) a = static_cast<Letter>(rng.below(n_letters));
  return w;
}

}  // namespace

TEST_CASE("apply folds the table letter by letter") {
  Dfa c4 = cerny(4);
  CHECK(apply(c4, 0, {}) == 0);
  CHECK(apply(c4, 0, {0, 0, 0, 0}) == 0);  // the cyclic letter returns after n steps
  CHECK(apply(c4, 2, {0}) == 3);
  CHECK(apply(c4, 0, {1}) == 1);

  CHECK_THROWS_AS(apply(c4, 4, {0}), ValidationError);
  CHECK_THROWS_AS(apply(c4, 0, {2}), ValidationError);
}

TEST_CASE("apply fold consistency on random splits") {
  SplitMix64 rng(101);
  Dfa dfa = random_dfa(9, 3, 11);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 3, 6);
    Word v = random_word(rng, 3, 6);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    State q = static_cast<State>(rng.below(9));
    CHECK(apply(dfa, q, uv) == apply(dfa, apply(dfa, q, u), v));
  }
}

TEST_CASE("image basics") {
  Dfa c3 = cerny(3);
  StateSet all = StateSet::full(3);

  CHECK(image(c3, all, {}) == all);
  CHECK(image(c3, all, {1}) == StateSet::of(3, {1, 2}));  // letter 1 maps 0 to 1
  CHECK(image(c3, StateSet::of(3, {2}), {0}) == StateSet::of(3, {0}));

  StateSet empty(3);
  CHECK_THROWS_AS(image(c3, empty, {0}), ValidationError);
  CHECK_THROWS_AS(image(c3, StateSet::full(4), {0}), ValidationError);
}

TEST_CASE("image never grows and respects sinks") {
  SplitMix64 rng(202);
  for (int trial = 0; trial < 50; ++trial) {
    Dfa dfa = random_dfa(8, 2, 300 + trial);
    StateSet set(8);
    while (set.empty())
      for (State q = 0; q < 8; ++q)
        if (rng.coin()) set.insert(q);
    Word w = random_word(rng, 2, 10);
    CHECK(image(dfa, set, w).count() <= set.count());
  }

  // A state fixed by every letter stays in every image containing it.
  Dfa dfa = sink_automaton();
  SplitMix64 rng2(203);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng2, 2, 8);
    CHECK(image(dfa, StateSet::of(3, {0, 2}), w).contains(0));
  }
}

TEST_CASE("is_synchronizing") {
  Dfa one(1, 2);
  CHECK(is_synchronizing(one));

  Dfa identity(2, 2);
  identity.at(0, 0) = 0; identity.at(0, 1) = 0;
  identity.at(1, 0) = 1; identity.at(1, 1) = 1;
  CHECK_FALSE(is_synchronizing(identity));

  CHECK(is_synchronizing(cerny(5)));
  CHECK(is_synchronizing(sink_automaton()));
}

TEST_CASE("validate reports defects instead of throwing") {
  Dfa ok = cerny(3);
  CHECK(validate(ok).empty());

  Dfa bad = cerny(3);
  bad.at(1, 0) = 3;  // == n_states
  auto defects = validate(bad);
  REQUIRE(defects.size() == 1);
  CHECK(defects[0].find("out of range") != std::string::npos);

  Dfa ragged = cerny(3);
  ragged.table.pop_back();
  defects = validate(ragged);
  REQUIRE(defects.size() == 1);
  CHECK(defects[0].find("incomplete") != std::string::npos);
}

TEST_CASE("dfa text format round-trip") {
  Dfa c4 = cerny(4);
  std::ostringstream out;
  write_dfa(out, c4);
  std::istringstream in(out.str());
  Dfa back = read_dfa(in);
  CHECK(back.n_states == c4.n_states);
  CHECK(back.n_letters == c4.n_letters);
  CHECK(back.table == c4.table);
}

TEST_CASE("dfa parser accepts comments and flags malformed input") {
  std::istringstream good("# two-state flip\ndfa 2 1\n1\n# middle comment\n0\n");
  Dfa dfa = read_dfa(good);
  CHECK(dfa.n_states == 2);
  CHECK(dfa.step(0, 0) == 1);

  std::istringstream bad_header("dfq 2 1\n1\n0\n");
  CHECK_THROWS_AS(read_dfa(bad_header), ValidationError);

  std::istringstream out_of_range("dfa 2 1\n2\n0\n");
  CHECK_THROWS_WITH_AS(read_dfa(out_of_range, "f"), doctest::Contains("f:2"),
                       ValidationError);

  std::istringstream short_row("dfa 2 2\n1\n0 0\n");
  CHECK_THROWS_WITH_AS(read_dfa(short_row), doctest::Contains("incomplete"),
                       ValidationError);

  std::istringstream excess("dfa 2 1\n1 0\n0\n");
  CHECK_THROWS_WITH_AS(read_dfa(excess), doctest::Contains("excess"), ValidationError);
}

TEST_CASE("word serialization") {
  CHECK(parse_word("1 0 0 0") == Word{1, 0, 0, 0});
  CHECK(parse_word("") == Word{});
  CHECK(format_word({2, 0, 1}) == "2 0 1");
  CHECK_THROWS_AS(parse_word("1 x"), ValidationError);
  CHECK_THROWS_AS(parse_word("-1"), ValidationError);
}
