#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdsw/geom.hpp"
#include "cdsw/rat.hpp"

namespace cdsw {

// Dense univariate polynomial over Q; index k holds the x^k coefficient.
// The canonical form has no trailing zero coefficients ({} is the zero
// polynomial); poly_trim produces it and every operation returns it.
using RatPoly = std::vector<Rat>;

RatPoly poly_trim(RatPoly p);
long poly_deg(const RatPoly& p);  // -1 for the zero polynomial
Rat poly_lead(const RatPoly& p);
Rat poly_eval(const RatPoly& p, const Rat& x);
RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& a, const Rat& c);
RatPoly poly_derivative(const RatPoly& p);

// Euclidean division by a nonzero divisor: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);

// Monic gcd; gcd(0, 0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

// p with repeated roots collapsed to simple ones: p / gcd(p, p').
RatPoly poly_squarefree(const RatPoly& p);

// Accepts forms like "3x^2 - 1/2x + 4" and "-x^3 + x".
RatPoly parse_poly(const std::string& text);
std::string poly_str(const RatPoly& p);

Rat seminorm_1(const RatPoly& p);    // sum of |coefficients|
Rat seminorm_inf(const RatPoly& p);  // max |coefficient|

struct Standardized {
  RatPoly ptilde;  // P / min{1, smallest nonzero |coefficient|}
  Rat s;           // seminorm_1 of the input
  Rat s_tilde;     // seminorm_1 of ptilde; always >= s
};
Standardized standardize(const RatPoly& p);

// Determinant of the Sylvester matrix of P and Q.
Rat resultant(const RatPoly& P, const RatPoly& Q);

// R(y) = res_x(Q(x), y - P(x)), recovered from deg(Q)+1 evaluations.
RatPoly resultant_y(const RatPoly& Q, const RatPoly& P);

using PolyMatrix = std::vector<std::vector<RatPoly>>;
RatPoly polymatrix_det(const PolyMatrix& m);

// Product over rows of the row's total 1-seminorm; dominates the
// 1-seminorm of the determinant.
Rat hadamard_bound(const PolyMatrix& m);

// |P|_inf / |lead| + 1; every real root lies within +-bound.
Rat cauchy_bound(const RatPoly& p);

// Certified lower bound for the minimum distance between distinct real
// roots inside [-1,1], for deg >= 2. Irrational factors are rounded in
// the sound direction.
Rat rsep_lower_bound(const RatPoly& p);

// Lower bound on |P(mu)| over the roots mu of Q that are not roots of P.
// Inputs are standardized internally.
Rat min_value_bound(const RatPoly& P, const RatPoly& Q);

// Lower bound on |P(c)| at critical points c of P with P(c) != 0; deg >= 2.
Rat crit_value_bound(const RatPoly& p);

// Number of distinct real roots in (a, b].
long sturm_count(const RatPoly& p, const Rat& a, const Rat& b);

// Disjoint intervals inside [window.lo, window.hi], one distinct real root
// each, widths below eps. A root sitting on a window endpoint comes back
// as a degenerate [r, r].
std::vector<Interval> isolate_real_roots(const RatPoly& p, const Interval& window,
                                         const Rat& eps);

struct SepBracket {
  Rat lower, upper;  // the true minimal root gap lies in [lower, upper]
};
SepBracket rsep_exact(const RatPoly& p, const Interval& window);

// D^(2^n) exactly; n capped well before the bits become unmanageable.
Rat halting_bound_1d(long n, const Rat& D);

// Positive real that is either q itself or ln(q), q rational.
struct PosReal {
  Rat q;
  bool is_log = false;
};

struct MixingParams {
  Rat C;        // > 0
  PosReal kappa;  // decay rate > 0
  Rat r;        // contraction in (0, 1)
  long n;       // >= 0
};

// Smallest integer N >= 0 with r^n > C * exp(-N * kappa), decided by
// exact comparison in the rational case and by certified two-sided
// exp brackets in the log case.
long anosov_mixing_steps(const MixingParams& mp);

}  // namespace cdsw
