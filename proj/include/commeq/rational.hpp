#pragma once

#include <gmpxx.h>

#include <string>

namespace commeq {

// Exact rational scalar. mpq_class keeps values reduced with a positive
// denominator as long as construction goes through the helpers below;
// arithmetic on canonical operands stays canonical.
using Rational = mpq_class;

// Canonicalized num/den. Throws ValidationError on a zero denominator.
Rational rat(long num, long den = 1);

// Parses "num" or "num/den" in base 10 (optional leading '-', no spaces).
Rational rat_from_string(const std::string& text);

// Inverse of rat_from_string: "num" when the denominator is 1, else "num/den".
std::string rat_to_string(const Rational& value);

bool is_integer(const Rational& value);

} // namespace commeq
