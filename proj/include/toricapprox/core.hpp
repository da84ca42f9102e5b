#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using IntVec = std::vector<mpz_class>;
using RatVec = std::vector<mpq_class>;

// Malformed or out-of-contract input (CLI exit 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bound, cap or internal self-check failed (CLI exit 3).
class ComputationDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of N ∪ {∞}.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_zero() const { return !inf_ && value_ == 0; }
  std::uint64_t value() const {
    if (inf_) throw std::logic_error("ExtNat: value() on infinity");
    return value_;
  }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const ExtNat& a, const ExtNat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(const ExtNat& a, const ExtNat& b) { return !(b < a); }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool inf_ = false;
};

using ExtVec = std::vector<ExtNat>;

// gcd with gcd(∞, a) = a and gcd(∞, ∞) = 0 (0 meaning "no finite generator").
std::uint64_t ext_gcd(const ExtVec& values);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);
std::string to_string(const ExtVec& v);

IntVec int_vec(std::initializer_list<long> xs);

}  // namespace toric
