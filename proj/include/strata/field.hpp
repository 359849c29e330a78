#pragma once

#include "strata/errors.hpp"
#include "strata/rational.hpp"

#include <string>

namespace strata {

// Coefficient field for the whole pipeline: exact rationals or F_p for a
// prime p. Elements are carried as `rational` values; over F_p they are kept
// normalized to integers in [0, p). Every arithmetic op goes through the
// field so a single code path serves both cases.
class field {
 public:
  static field rationals() { return field(0); }
  static field prime(unsigned long p);  // throws invalid_field unless p is prime

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }

  // Canonical representative. Over F_p the denominator must be a unit.
  rational normalize(const rational& x) const;

  rational add(const rational& a, const rational& b) const { return normalize(a + b); }
  rational sub(const rational& a, const rational& b) const { return normalize(a - b); }
  rational mul(const rational& a, const rational& b) const { return normalize(a * b); }
  rational neg(const rational& a) const { return normalize(-a); }
  rational inv(const rational& a) const;
  rational div(const rational& a, const rational& b) const { return mul(a, inv(b)); }
  bool is_zero(const rational& a) const { return normalize(a) == 0; }
  rational from_int(long long n) const { return normalize(rational(n)); }

  std::string describe() const;

  bool operator==(const field&) const = default;

 private:
  explicit field(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;  // 0 means rationals
};

}  // namespace strata
