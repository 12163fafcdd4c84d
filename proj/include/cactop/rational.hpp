#pragma once

#include <gmpxx.h>

#include <string>

namespace cactop {

// Exact rationals, always kept in canonical reduced form.
using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

}  // namespace cactop
