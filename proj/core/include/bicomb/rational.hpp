#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bicomb {

using Rational = mpq_class;

// Accepts "p/q", "p" and plain decimals such as "-0.125".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Exact value of a finite double.
Rational exact_rational(double x);

Rational abs(const Rational& q);

// num/den in lowest terms; throws InvalidArgument when den is zero.
Rational ratio(long num, long den);

}  // namespace bicomb
