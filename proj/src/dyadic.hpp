#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "bigint.hpp"

namespace tgf {

// Exact element of Z[1/2], stored as numerator / 2^exponent.
// Canonical form invariant: exponent == 0, or numerator is odd.
// Values are immutable; every operation returns a new canonical value.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long long n) : num_(n), exp_(0) {}  // NOLINT: integers embed
  explicit Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}

  // n / 2^exponent reduced to canonical form; exponent must be >= 0.
  static Dyadic normalized(BigInt numerator, std::int64_t exponent);

  // Text form: INT or INT"/2^"UINT, e.g. "-3", "7/2^4".  Accepts
  // non-canonical input and normalizes.  Throws Error(kNonDyadic).
  static Dyadic parse(const std::string& text);

  const BigInt& numerator() const { return num_; }
  std::int64_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  BigInt floor_int() const;  // greatest integer <= value
  BigInt ceil_int() const;   // least integer >= value

  // value * 2^e; e may be negative.
  Dyadic mul_pow2(std::int64_t e) const;

  // Canonical text form.
  std::string str() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt num_;
  std::int64_t exp_;
};

int sign(const Dyadic& a);
Dyadic abs(const Dyadic& a);

std::ostream& operator<<(std::ostream& os, const Dyadic& a);

}  // namespace tgf
