#include <doctest.h>

#include "oracles.hpp"
#include "synlab/errors.hpp"
#include "synlab/exact_solver.hpp"
#include "synlab/generators.hpp"
#include "synlab/rng.hpp"

using namespace synlab;
using namespace synlab::testing;

TEST_CASE("shortest reset of the slow family") {
  // lengths (n-1)^2; words frozen from the enumeration oracle
  auto r3 = shortest_reset(cerny(3));
  REQUIRE(r3.outcome == SearchOutcome::found);
  CHECK(r3.certificate->length == 4);
  CHECK(r3.certificate->word == Word{1, 0, 0, 1});  // lexicographically smallest

  auto r4 = shortest_reset(cerny(4));
  CHECK(r4.certificate->length == 9);
  CHECK(r4.certificate->word == Word{1, 0, 0, 0, 1, 0, 0, 0, 1});

  // independent cross-check: plain word enumeration finds the same word and
  // no shorter one exists
  auto oracle = oracle_shortest_reset(cerny(3), 6);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == r3.certificate->word);
  CHECK(oracle_no_sync_of_length(cerny(4), {0, 1, 2, 3}, 8));
}

TEST_CASE("single state resets with the empty word") {
  Dfa one(1, 3);
  auto res = shortest_reset(one);
  REQUIRE(res.outcome == SearchOutcome::found);
  CHECK(res.certificate->length == 0);
  CHECK(res.certificate->word.empty());
  CHECK(res.certificate->target == 0);
}

TEST_CASE("non-synchronizing automata report none") {
  Dfa identity(3, 2);
  for (State q = 0; q < 3; ++q) identity.at(q, 0) = identity.at(q, 1) = q;
  auto res = shortest_reset(identity);
  CHECK(res.outcome == SearchOutcome::not_synchronizing);
  CHECK_FALSE(res.certificate.has_value());
}

TEST_CASE("length limit is reported distinctly") {
  SubsetBfsOptions opt;
  opt.limit = 5;
  auto res = shortest_reset(cerny(4), opt);
  CHECK(res.outcome == SearchOutcome::limit_exceeded);

  opt.limit = 9;
  res = shortest_reset(cerny(4), opt);
  CHECK(res.outcome == SearchOutcome::found);
}

TEST_CASE("node budget raises a capacity error") {
  SubsetBfsOptions opt;
  opt.node_budget = 4;
  CHECK_THROWS_AS(shortest_reset(cerny(6), opt), CapacityError);
}

TEST_CASE("shortest_sync_of_set") {
  Dfa c4 = cerny(4);
  auto singleton = shortest_sync_of_set(c4, StateSet::of(4, {2}));
  CHECK(singleton.certificate->word.empty());

  StateSet empty(4);
  CHECK_THROWS_AS(shortest_sync_of_set(c4, empty), ValidationError);

  // monotone in the start set: subsets never need longer words
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa dfa = random_synchronizing_dfa(7, 2, 600 + trial);
    StateSet big(7);
    while (big.count() < 2)
      big.insert(static_cast<State>(rng.below(7)));
    StateSet small = big;
    auto members = big.to_vector();
    small.erase(members[rng.below(members.size())]);
    if (small.empty()) continue;
    auto len_big = shortest_sync_of_set(dfa, big).certificate->length;
    auto len_small = shortest_sync_of_set(dfa, small).certificate->length;
    CHECK(len_small <= len_big);
  }
}

TEST_CASE("search agrees with the pair check on small random automata") {
  for (int i = 0; i < 60; ++i) {
    Dfa dfa = random_dfa(2 + i % 9, 2 + i % 2, 40 + i);
    bool via_pairs = is_synchronizing(dfa);
    bool via_search = shortest_reset(dfa).outcome == SearchOutcome::found;
    CHECK(via_pairs == via_search);
  }
}

TEST_CASE("pair table") {
  auto pt = pair_sync_table(cerny(3));
  CHECK(pt.merge_length(0, 0) == 0);
  CHECK(pt.merge_length(1, 1) == 0);
  CHECK(pt.merge_length(0, 1) == 1);
  CHECK(pt.merge_length(0, 2) == 2);
  CHECK(pt.merge_length(1, 2) == 3);
  CHECK(pt.all_merge());
  CHECK(pt.max_merge_length() == 3);

  Dfa identity(3, 2);
  for (State q = 0; q < 3; ++q) identity.at(q, 0) = identity.at(q, 1) = q;
  auto pt_id = pair_sync_table(identity);
  CHECK_FALSE(pt_id.all_merge());
  CHECK(pt_id.merge_length(0, 1) == PairTable::kUnreachable);
  CHECK(pt_id.merge_length(2, 2) == 0);
}

TEST_CASE("pair table matches forward search pair by pair") {
  for (int i = 0; i < 25; ++i) {
    Dfa dfa = random_dfa(6, 2, 800 + i);
    auto pt = pair_sync_table(dfa);
    for (State p = 0; p < 6; ++p) {
      for (State q = p + 1; q < 6; ++q) {
        auto res = shortest_sync_of_set(dfa, StateSet::of(6, {p, q}));
        if (res.outcome == SearchOutcome::found)
          CHECK(pt.merge_length(p, q) == res.certificate->length);
        else
          CHECK(pt.merge_length(p, q) == PairTable::kUnreachable);
      }
    }
  }
}

TEST_CASE("hardest pair never exceeds the reset length") {
  for (int i = 0; i < 30; ++i) {
    Dfa dfa = random_synchronizing_dfa(8, 2, 71 + i);
    auto res = shortest_reset(dfa);
    REQUIRE(res.outcome == SearchOutcome::found);
    CHECK(pair_sync_table(dfa).max_merge_length() <= res.certificate->length);
  }
}

TEST_CASE("no shorter word exists for moderate reset lengths") {
  // exhaustive enumeration one letter below the returned length
  int checked = 0;
  for (int i = 0; checked < 12 && i < 200; ++i) {
    Dfa dfa = random_synchronizing_dfa(2 + i % 6, 2, 4400 + i);
    auto res = shortest_reset(dfa);
    REQUIRE(res.outcome == SearchOutcome::found);
    std::uint32_t len = res.certificate->length;
    if (len == 0 || len > 8) continue;
    std::vector<State> all;
    for (State q = 0; q < dfa.n_states; ++q) all.push_back(q);
    CHECK(oracle_no_sync_of_length(dfa, all, len - 1));
    ++checked;
  }
  CHECK(checked == 12);
}
