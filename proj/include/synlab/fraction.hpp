#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "synlab/errors.hpp"

namespace synlab {

// Exact rational on 64-bit integers. Values handled here are tiny
// (constraint counts, word lengths), so overflow is not a concern.
class Fraction {
 public:
  Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ValidationError("fraction with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  explicit Fraction(std::int64_t value) : num_(value), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool operator==(const Fraction&) const = default;
  bool operator<(const Fraction& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Fraction& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Fraction& o) const { return o < *this; }
  bool operator>=(const Fraction& o) const { return o <= *this; }

  Fraction reciprocal() const { return Fraction(den_, num_); }
  Fraction scaled(std::int64_t m) const { return Fraction(num_ * m, den_); }

  // Smallest integer >= value; only meaningful for non-negative fractions.
  std::int64_t ceil() const { return (num_ + den_ - 1) / den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace synlab
