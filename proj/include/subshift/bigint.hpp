#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace subshift {

using BigInt = mpz_class;
using Rational = mpq_class;

// Checked narrowing; throws Error(budget_exceeded) when the value does not fit.
std::size_t to_size(const BigInt& v, const char* what = "value");
std::uint64_t to_u64(const BigInt& v, const char* what = "value");

std::string to_string(const BigInt& v);

// Decimal rendering of an exact rational with `digits` digits after the point (truncated toward zero).
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned long exp);

}  // namespace subshift
