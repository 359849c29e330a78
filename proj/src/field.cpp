#include "strata/field.hpp"

namespace strata {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// x mod p as a nonnegative representative; |x| may be a big integer.
long long mod_p(const bigint& x, unsigned long p) {
  bigint r = x % static_cast<long long>(p);
  long long v = r.convert_to<long long>();
  if (v < 0) v += static_cast<long long>(p);
  return v;
}

long long inv_mod(long long a, long long p) {
  // extended Euclid; a in [1, p)
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw division_by_zero("element has no inverse mod p");
  if (t < 0) t += p;
  return t;
}

}  // namespace

field field::prime(unsigned long p) {
  if (p > (1ul << 31))
    throw invalid_field("prime characteristic too large: " + std::to_string(p));
  if (!is_prime(p))
    throw invalid_field("characteristic must be prime, got " + std::to_string(p));
  return field(p);
}

rational field::normalize(const rational& x) const {
  if (p_ == 0) return x;
  long long p = static_cast<long long>(p_);
  long long num = mod_p(numerator(x), p_);
  long long den = mod_p(denominator(x), p_);
  if (den == 0)
    throw division_by_zero("denominator of " + x.str() + " vanishes mod " + std::to_string(p_));
  if (den != 1) num = (num * inv_mod(den, p)) % p;
  return rational(num);
}

rational field::inv(const rational& a) const {
  if (p_ == 0) {
    if (a == 0) throw division_by_zero("division by zero");
    return 1 / a;
  }
  long long v = normalize(a).convert_to<long long>();
  if (v == 0) throw division_by_zero("division by zero mod " + std::to_string(p_));
  return rational(inv_mod(v, static_cast<long long>(p_)));
}

std::string field::describe() const {
  return p_ == 0 ? std::string("rational") : "F_" + std::to_string(p_);
}

}  // namespace strata
