#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cdsw/error.hpp"

namespace cdsw {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Rat parse_rat(const std::string& s);

// "p/q" in lowest terms, or plain "p" when q = 1.
std::string rat_str(const Rat& r);

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

BigInt ipow(const BigInt& base, unsigned long e);

// 3^e for possibly negative e.
Rat pow3(long e);

Rat rat_pow(const Rat& base, long e);

BigInt floor_rat(const Rat& r);
BigInt ceil_rat(const Rat& r);

Rat rat_abs(const Rat& r);

double to_double(const Rat& r);

// Directed rational bounds on sqrt(r), r >= 0. Guarantees
// sqrt_lower(r)^2 <= r <= sqrt_upper(r)^2 with gap below 2^-prec_bits.
Rat sqrt_lower(const Rat& r, unsigned prec_bits = 64);
Rat sqrt_upper(const Rat& r, unsigned prec_bits = 64);

// Two-sided bounds on exp(y) for y >= 0 via the Taylor tail estimate.
// Adding terms tightens the bracket without bound.
void exp_bounds(const Rat& y, unsigned terms, Rat& lo, Rat& hi);

}  // namespace cdsw
