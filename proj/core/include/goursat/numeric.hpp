#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace goursat {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::optional<long> as_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

// Best rational approximation of x with denominator <= max_den, by the
// continued-fraction convergents. Used to lift numerically recovered
// constant combinations back to exact rationals (always confirmed
// symbolically afterwards).
std::optional<Rational> rationalize(double x, unsigned long max_den = 1024,
                                    double tol = 1e-6);

}  // namespace goursat
