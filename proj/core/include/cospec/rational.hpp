#pragma once

#include <gmpxx.h>

#include <string>

namespace cospec {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cospec
