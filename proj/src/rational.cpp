#include "strata/rational.hpp"

#include <cctype>

namespace strata {

std::optional<rational> parse_rational(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = (s[i] == '-');
    ++i;
  }

  auto read_digits = [&](bigint& out) -> std::size_t {
    std::size_t count = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out = out * 10 + (s[i] - '0');
      ++i;
      ++count;
    }
    return count;
  };

  bigint ipart = 0;
  std::size_t int_digits = read_digits(ipart);

  bigint num = ipart;
  bigint den = 1;

  if (i < s.size() && s[i] == '/') {
    if (int_digits == 0) return std::nullopt;
    ++i;
    bigint d = 0;
    if (read_digits(d) == 0 || d == 0) return std::nullopt;
    den = d;
  } else if (i < s.size() && s[i] == '.') {
    ++i;
    bigint frac = 0;
    std::size_t frac_digits = read_digits(frac);
    if (int_digits == 0 && frac_digits == 0) return std::nullopt;
    bigint scale = 1;
    for (std::size_t k = 0; k < frac_digits; ++k) scale *= 10;
    num = ipart * scale + frac;
    den = scale;
  } else if (int_digits == 0) {
    return std::nullopt;
  }

  if (i != s.size()) return std::nullopt;
  rational r(num, den);
  if (negative) r = -r;
  return r;
}

std::string to_string(const rational& x) { return x.str(); }

}  // namespace strata
