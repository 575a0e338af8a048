#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace nielsen {

using BigInt = mpz_class;

// A cardinality: a non-negative integer or infinity.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(long v);  // NOLINT: implicit for literals in tables and tests
  static ExtNat finite(BigInt v);
  static ExtNat infinite();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  // Throws std::logic_error when infinite.
  const BigInt& value() const;

  std::string to_string() const;  // decimal or "infinite"

  friend bool operator==(const ExtNat& a, const ExtNat& b);
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

 private:
  BigInt value_{0};
  bool infinite_ = false;
};

std::string to_string(const BigInt& v);

}  // namespace nielsen
