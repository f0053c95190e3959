#pragma once

// Exact integer/rational arithmetic on top of GMP, plus the few
// combinatorial helpers (factorials, generalized binomials) every other
// module needs.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbtaut {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Rational makeRational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool isInteger(const Rational &q) { return q.get_den() == 1; }

/// Parses "p", "-p" or "p/q" (whitespace not allowed). The result is
/// canonical.
inline Rational parseRational(std::string_view text) {
  if (text.empty())
    throw Error("empty rational literal");
  auto valid = [](std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
      ++i;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || (slash != std::string_view::npos && den.front() == '-'))
    throw Error("malformed rational literal '" + std::string(text) + "'");
  auto strip = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  return makeRational(Integer(strip(num)), Integer(strip(den)));
}

/// "p" for integers, "p/q" otherwise.
inline std::string toString(const Rational &q) {
  if (isInteger(q))
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

inline Integer binomial(long n, unsigned long m) {
  // falling-factorial definition, valid for negative n
  Integer num = 1;
  for (unsigned long i = 0; i < m; ++i)
    num *= Integer(n - static_cast<long>(i));
  return num / factorial(m);
}

/// binom(x, m) = x (x-1) ... (x-m+1) / m! for arbitrary rational x.
inline Rational binomial(const Rational &x, unsigned long m) {
  Rational num = 1;
  for (unsigned long i = 0; i < m; ++i)
    num *= x - static_cast<long>(i);
  return num / Rational(factorial(m));
}

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

} // namespace hilbtaut
