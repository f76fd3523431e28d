#include "qyd/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qyd {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  std::size_t slash = s.find('/');
  auto check_int = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    std::size_t i = from;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (i >= to) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    for (; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  };
  check_int(0, slash == std::string::npos ? s.size() : slash);
  if (slash != std::string::npos) check_int(slash + 1, s.size());
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string int_str(const Integer& z) { return z.get_str(); }

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

long bit_length(const Integer& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace qyd
