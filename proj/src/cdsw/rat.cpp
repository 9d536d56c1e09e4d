#include "cdsw/rat.hpp"

namespace cdsw {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) fail("ZeroDenominator", "in rational literal '" + s + "'");
    return Rat(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail("BadRational", "cannot parse '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat pow3(long e) {
  BigInt p = ipow(3, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rat(1, p) : Rat(p);
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) fail("ZeroDenominator", "0 to a negative power");
    return Rat(ipow(den(base), static_cast<unsigned long>(-e)),
               ipow(num(base), static_cast<unsigned long>(-e)));
  }
  return Rat(ipow(num(base), static_cast<unsigned long>(e)),
             ipow(den(base), static_cast<unsigned long>(e)));
}

BigInt floor_rat(const Rat& r) {
  BigInt q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

BigInt ceil_rat(const Rat& r) { return -floor_rat(-r); }

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat sqrt_lower(const Rat& r, unsigned prec_bits) {
  if (r < 0) fail("NegativeSqrt", "sqrt of " + rat_str(r));
  if (r == 0) return 0;
  // sqrt(p/q) = sqrt(p*q)/q; isqrt of the scaled integer gives a one-sided bound.
  BigInt scale = ipow(2, prec_bits);
  BigInt m = num(r) * den(r) * scale * scale;
  BigInt s = boost::multiprecision::sqrt(m);  // floor sqrt
  return Rat(s, den(r) * scale);
}

Rat sqrt_upper(const Rat& r, unsigned prec_bits) {
  if (r < 0) fail("NegativeSqrt", "sqrt of " + rat_str(r));
  if (r == 0) return 0;
  BigInt scale = ipow(2, prec_bits);
  BigInt m = num(r) * den(r) * scale * scale;
  BigInt s = boost::multiprecision::sqrt(m);
  if (s * s < m) ++s;
  return Rat(s, den(r) * scale);
}

void exp_bounds(const Rat& y, unsigned terms, Rat& lo, Rat& hi) {
  if (y < 0) fail("NegativeExpArg", "exp_bounds wants y >= 0");
  // Partial sum of y^i/i! up to m = terms, plus the geometric tail majorant
  // y^{m+1}/(m+1)! * 1/(1 - y/(m+2)), valid once m + 2 > y.
  unsigned long m = terms;
  unsigned long min_m = static_cast<unsigned long>(ceil_rat(y).convert_to<long>()) * 2 + 4;
  if (m < min_m) m = min_m;
  Rat sum = 1, term = 1;
  for (unsigned long i = 1; i <= m; ++i) {
    term *= y;
    term /= i;
    sum += term;
  }
  Rat next = term * y / (m + 1);
  Rat tail = next / (Rat(1) - y / (m + 2));
  lo = sum;
  hi = sum + tail;
}

}  // namespace cdsw
