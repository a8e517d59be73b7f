#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "synlab/errors.hpp"

namespace synlab {

using State = std::uint32_t;

// Fixed-width bit vector over a state universe chosen at construction.
// Subset BFS and image computation dominate solver runtime, so membership,
// insertion and word-wise iteration are all branch-light.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::uint32_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static StateSet full(std::uint32_t universe) {
    StateSet s(universe);
    for (std::uint32_t q = 0; q < universe; ++q) s.insert(q);
    return s;
  }

  static StateSet of(std::uint32_t universe, std::initializer_list<State> states) {
    StateSet s(universe);
    for (State q : states) s.insert(q);
    return s;
  }

  std::uint32_t universe() const { return universe_; }

  void insert(State q) {
    check(q);
    words_[q >> 6] |= std::uint64_t{1} << (q & 63);
  }
  void erase(State q) {
    check(q);
    words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
  }
  bool contains(State q) const {
    return q < universe_ && (words_[q >> 6] >> (q & 63)) & 1;
  }

  std::uint32_t count() const {
    std::uint32_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  // Lowest member; universe() when empty.
  State first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<State>(i * 64 + std::countr_zero(words_[i]));
    return universe_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<State>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<State> to_vector() const {
    std::vector<State> v;
    v.reserve(count());
    for_each([&](State q) { v.push_back(q); });
    return v;
  }

  bool is_subset_of(const StateSet& other) const {
    if (universe_ != other.universe_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool operator==(const StateSet&) const = default;

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void check(State q) const {
    if (q >= universe_) throw ValidationError("state index out of range for state set");
  }

  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace synlab
