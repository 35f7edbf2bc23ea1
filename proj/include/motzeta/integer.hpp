#pragma once

#include <gmpxx.h>

#include <string>

namespace motzeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

/// Generalized binomial coefficient C(n, k) for any integer n and k >= 0.
Integer binomial(const Integer& n, unsigned long k);

} // namespace motzeta
