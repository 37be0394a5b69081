#pragma once

#include <gmpxx.h>

#include <string>

namespace weylcoh {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// n! as a big integer.
Integer factorial(unsigned long k);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace weylcoh
