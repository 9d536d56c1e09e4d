#include "cdsw/rootsep.hpp"

#include <algorithm>
#include <cctype>

namespace cdsw {

RatPoly poly_trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long poly_deg(const RatPoly& p) {
  long d = static_cast<long>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

Rat poly_lead(const RatPoly& p) {
  long d = poly_deg(p);
  if (d < 0) fail("ZeroPolynomial", "zero polynomial has no leading coefficient");
  return p[d];
}

Rat poly_eval(const RatPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

RatPoly poly_scale(const RatPoly& a, const Rat& c) {
  RatPoly out = a;
  for (auto& v : out) v *= c;
  return poly_trim(std::move(out));
}

RatPoly poly_derivative(const RatPoly& p) {
  RatPoly out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  return poly_trim(std::move(out));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
  long db = poly_deg(b);
  if (db < 0) fail("ZeroPolynomial", "division by the zero polynomial");
  RatPoly rem = poly_trim(a);
  RatPoly quot;
  long da = poly_deg(rem);
  if (da >= db) quot.assign(da - db + 1, Rat(0));
  while (da >= db) {
    Rat f = rem[da] / b[db];
    quot[da - db] = f;
    for (long i = 0; i <= db; ++i) rem[da - db + i] -= f * b[i];
    rem = poly_trim(std::move(rem));
    da = poly_deg(rem);
  }
  return {poly_trim(std::move(quot)), std::move(rem)};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    RatPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RatPoly poly_squarefree(const RatPoly& p) {
  RatPoly q = poly_trim(p);
  if (poly_deg(q) < 2) return q;
  RatPoly g = poly_gcd(q, poly_derivative(q));
  if (poly_deg(g) < 1) return q;
  return poly_divmod(q, g).first;
}

RatPoly parse_poly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("BadPoly", "empty polynomial literal");
  RatPoly p;
  size_t i = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  while (i < s.size()) {
    size_t j = i;
    std::string np, dp;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) np += s[j++];
    if (j < s.size() && s[j] == '/') {
      ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) dp += s[j++];
      if (dp.empty()) fail("BadPoly", text);
    }
    Rat coeff = 1;
    if (!np.empty()) coeff = dp.empty() ? Rat(BigInt(np)) : Rat(BigInt(np), BigInt(dp));
    long e = 0;
    if (j < s.size() && s[j] == 'x') {
      ++j;
      e = 1;
      if (j < s.size() && s[j] == '^') {
        ++j;
        std::string ep;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ep += s[j++];
        if (ep.empty()) fail("BadPoly", text);
        e = std::stol(ep);
      }
    } else if (np.empty()) {
      fail("BadPoly", "term without coefficient or x in '" + text + "'");
    }
    if (static_cast<long>(p.size()) <= e) p.resize(e + 1, Rat(0));
    p[e] += sign * coeff;
    if (j >= s.size()) break;
    if (s[j] == '+')
      sign = 1;
    else if (s[j] == '-')
      sign = -1;
    else
      fail("BadPoly", "unexpected '" + std::string(1, s[j]) + "' in '" + text + "'");
    i = j + 1;
    if (i >= s.size()) fail("BadPoly", "dangling sign in '" + text + "'");
  }
  return poly_trim(std::move(p));
}

std::string poly_str(const RatPoly& p) {
  long d = poly_deg(p);
  if (d < 0) return "0";
  std::string out;
  for (long k = d; k >= 0; --k) {
    if (p[k] == 0) continue;
    Rat c = p[k];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = rat_abs(c);
    if (a != 1 || k == 0) out += rat_str(a);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Rat seminorm_1(const RatPoly& p) {
  Rat s = 0;
  for (auto& c : p) s += rat_abs(c);
  return s;
}

Rat seminorm_inf(const RatPoly& p) {
  Rat s = 0;
  for (auto& c : p) s = std::max(s, rat_abs(c));
  return s;
}

Standardized standardize(const RatPoly& p) {
  RatPoly q = poly_trim(p);
  if (q.empty()) fail("ZeroPolynomial", "cannot standardize the zero polynomial");
  Rat mn = 0;
  for (auto& c : q)
    if (c != 0 && (mn == 0 || rat_abs(c) < mn)) mn = rat_abs(c);
  Rat scale = std::min(Rat(1), mn);
  Standardized out;
  out.s = seminorm_1(q);
  out.ptilde = poly_scale(q, 1 / scale);
  out.s_tilde = out.s / scale;
  return out;
}

namespace {

Rat mat_det(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

RatPoly poly_pow(const RatPoly& base, long e) {
  RatPoly out{Rat(1)};
  for (long i = 0; i < e; ++i) out = poly_mul(out, base);
  return out;
}

RatPoly lagrange_interp(const std::vector<std::pair<Rat, Rat>>& pts) {
  RatPoly acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    RatPoly basis{Rat(1)};
    Rat denom = 1;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, RatPoly{-pts[j].first, Rat(1)});
      denom *= pts[i].first - pts[j].first;
    }
    acc = poly_add(acc, poly_scale(basis, pts[i].second / denom));
  }
  return acc;
}

}  // namespace

Rat resultant(const RatPoly& P, const RatPoly& Q) {
  RatPoly a = poly_trim(P), b = poly_trim(Q);
  long n = poly_deg(a), m = poly_deg(b);
  if (n < 0 || m < 0) fail("ZeroPolynomial", "resultant needs nonzero polynomials");
  size_t sz = static_cast<size_t>(n + m);
  if (sz == 0) return 1;
  std::vector<std::vector<Rat>> s(sz, std::vector<Rat>(sz, Rat(0)));
  for (long i = 0; i < m; ++i)
    for (long t = 0; t <= n; ++t) s[i][i + t] = a[n - t];
  for (long i = 0; i < n; ++i)
    for (long t = 0; t <= m; ++t) s[m + i][i + t] = b[m - t];
  return mat_det(std::move(s));
}

RatPoly resultant_y(const RatPoly& Q, const RatPoly& P) {
  RatPoly q = poly_trim(Q), p = poly_trim(P);
  long m = poly_deg(q), dp = poly_deg(p);
  if (m < 0 || dp < 0) fail("ZeroPolynomial", "resultant needs nonzero polynomials");
  if (dp == 0) return poly_pow(RatPoly{-p[0], Rat(1)}, m);
  std::vector<std::pair<Rat, Rat>> pts;
  for (long y0 = 0; y0 <= m; ++y0) {
    RatPoly b = poly_sub(RatPoly{Rat(y0)}, p);
    pts.push_back({Rat(y0), resultant(q, b)});
  }
  return lagrange_interp(pts);
}

RatPoly polymatrix_det(const PolyMatrix& m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) fail("NotSquare", "polynomial matrix is not square");
  if (n == 0) return {Rat(1)};
  if (n == 1) return poly_trim(m[0][0]);
  RatPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (poly_deg(m[0][j]) < 0) continue;
    PolyMatrix minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<RatPoly> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    RatPoly term = poly_mul(m[0][j], polymatrix_det(minor));
    acc = j % 2 == 0 ? poly_add(acc, term) : poly_sub(acc, term);
  }
  return acc;
}

Rat hadamard_bound(const PolyMatrix& m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) fail("NotSquare", "polynomial matrix is not square");
  Rat prod = 1;
  for (auto& row : m) {
    Rat rownorm = 0;
    for (auto& entry : row) rownorm += seminorm_1(entry);
    prod *= rownorm;
  }
  return prod;
}

Rat cauchy_bound(const RatPoly& p) {
  RatPoly q = poly_trim(p);
  if (poly_deg(q) < 1) fail("ZeroPolynomial", "root bound needs degree >= 1");
  return seminorm_inf(q) / rat_abs(q.back()) + 1;
}

Rat rsep_lower_bound(const RatPoly& p) {
  RatPoly q = poly_trim(p);
  long n = poly_deg(q);
  if (n < 2) fail("DegreeTooSmall", "separation bound needs degree >= 2");
  Rat st = standardize(q).s_tilde;
  // n^(n/2+1), rounded up: for odd n the half power becomes sqrt(n).
  Rat pow_part = n % 2 == 0 ? Rat(ipow(BigInt(n), static_cast<unsigned long>(n / 2 + 1)))
                            : Rat(ipow(BigInt(n), static_cast<unsigned long>((n + 1) / 2))) *
                                  sqrt_upper(Rat(n));
  Rat denom = pow_part * rat_pow(st + 1, n);
  return sqrt_lower(Rat(8)) / denom;
}

Rat min_value_bound(const RatPoly& P, const RatPoly& Q) {
  Standardized sp = standardize(P), sq = standardize(Q);
  long n = poly_deg(sp.ptilde), m = poly_deg(sq.ptilde);
  return 1 / (rat_pow(sp.s_tilde + 1, n) * rat_pow(sq.s_tilde, m) + 1);
}

Rat crit_value_bound(const RatPoly& p) {
  Standardized sp = standardize(p);
  long n = poly_deg(sp.ptilde);
  if (n < 2) fail("DegreeTooSmall", "critical values need degree >= 2");
  return 1 / (Rat(ipow(BigInt(n), static_cast<unsigned long>(n))) *
              rat_pow(sp.s_tilde + 1, 2 * n - 1));
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, poly_derivative(p)};
  while (poly_deg(chain.back()) >= 0) {
    RatPoly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (poly_deg(r) < 0) break;
    chain.push_back(poly_scale(r, Rat(-1)));
  }
  return chain;
}

long sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  long v = 0;
  int prev = 0;
  for (auto& q : chain) {
    Rat val = poly_eval(q, x);
    if (val == 0) continue;
    int s = val > 0 ? 1 : -1;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

RatPoly deflate_root(const RatPoly& p, const Rat& r) {
  return poly_divmod(p, RatPoly{-r, Rat(1)}).first;
}

}  // namespace

long sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
  RatPoly sf = poly_squarefree(p);
  if (sf.empty()) fail("ZeroPolynomial", "root counting needs a nonzero polynomial");
  if (a >= b || poly_deg(sf) == 0) return 0;
  long extra = poly_eval(sf, b) == 0 ? 1 : 0;
  if (poly_eval(sf, a) == 0) sf = deflate_root(sf, a);
  if (poly_eval(sf, b) == 0) sf = deflate_root(sf, b);
  if (poly_deg(sf) < 1) return extra;
  auto chain = sturm_chain(sf);
  return extra + sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<Interval> isolate_real_roots(const RatPoly& p, const Interval& window,
                                         const Rat& eps) {
  if (eps <= 0) fail("BadParams", "eps must be positive");
  RatPoly sf = poly_squarefree(p);
  if (sf.empty()) fail("ZeroPolynomial", "cannot isolate roots of the zero polynomial");
  std::vector<Interval> out;
  if (window.lo > window.hi) return out;
  if (window.lo == window.hi) {
    if (poly_eval(sf, window.lo) == 0) out.push_back({window.lo, window.lo});
    return out;
  }
  if (poly_eval(sf, window.lo) == 0) {
    out.push_back({window.lo, window.lo});
    sf = deflate_root(sf, window.lo);
  }
  if (poly_eval(sf, window.hi) == 0) {
    out.push_back({window.hi, window.hi});
    sf = deflate_root(sf, window.hi);
  }
  if (poly_deg(sf) >= 1) {
    auto chain = sturm_chain(sf);
    struct Piece {
      Rat a, b;
      long count;
    };
    std::vector<Piece> stack{
        {window.lo, window.hi,
         sign_variations(chain, window.lo) - sign_variations(chain, window.hi)}};
    while (!stack.empty()) {
      Piece pc = stack.back();
      stack.pop_back();
      if (pc.count <= 0) continue;
      if (pc.count == 1 && pc.b - pc.a < eps) {
        out.push_back({pc.a, pc.b});
        continue;
      }
      Rat m = (pc.a + pc.b) / 2;
      Rat delta = (pc.b - m) / 3;
      while (poly_eval(sf, m) == 0) {
        m += delta;
        delta /= 2;
      }
      long vl = sign_variations(chain, pc.a), vm = sign_variations(chain, m),
           vr = sign_variations(chain, pc.b);
      stack.push_back({pc.a, m, vl - vm});
      stack.push_back({m, pc.b, vm - vr});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

SepBracket rsep_exact(const RatPoly& p, const Interval& window) {
  if (window.lo >= window.hi) fail("BadParams", "window must have positive width");
  Rat eps = window.width() / 8;
  for (int round = 0; round < 200; ++round) {
    auto iv = isolate_real_roots(p, window, eps);
    if (iv.size() < 2) fail("BadParams", "need at least two real roots in the window");
    bool separated = true;
    SepBracket br{Rat(0), Rat(0)};
    for (size_t i = 0; i + 1 < iv.size(); ++i) {
      Rat lo_gap = iv[i + 1].lo - iv[i].hi;
      Rat hi_gap = iv[i + 1].hi - iv[i].lo;
      if (lo_gap <= 0) {
        separated = false;
        break;
      }
      if (i == 0 || lo_gap < br.lower) br.lower = lo_gap;
      if (i == 0 || hi_gap < br.upper) br.upper = hi_gap;
    }
    if (separated) return br;
    eps /= 8;
  }
  fail("ResourceBudgetExceeded", "root separation refinement did not stabilize");
}

Rat halting_bound_1d(long n, const Rat& D) {
  if (n < 0 || D <= 1) fail("BadParams", "need n >= 0 and D > 1");
  if (n > 30) fail("Overflow", "2^n exponent exceeds the supported range");
  return rat_pow(D, 1L << n);
}

long anosov_mixing_steps(const MixingParams& mp) {
  if (mp.C <= 0 || mp.kappa.q <= 0 || mp.r <= 0 || mp.r >= 1 || mp.n < 0)
    fail("BadParams", "need C > 0, kappa > 0, 0 < r < 1, n >= 0");
  if (mp.kappa.is_log && mp.kappa.q <= 1)
    fail("BadParams", "log-form kappa needs its argument above 1");
  Rat target = mp.C / rat_pow(mp.r, mp.n);  // want exp(N * kappa) > target
  if (mp.kappa.is_log) {
    Rat pw = 1;
    for (long N = 0; N <= 1000000; ++N) {
      if (pw > target) return N;
      pw *= mp.kappa.q;
    }
    fail("Overflow", "mixing step search exceeded 10^6");
  }
  for (long N = 0; N <= 1000000; ++N) {
    if (N == 0) {
      if (Rat(1) > target) return 0;
      continue;
    }
    Rat y = mp.kappa.q * N;
    unsigned terms = 2 * static_cast<unsigned>(ceil_rat(y).convert_to<unsigned long>()) + 8;
    bool decided = false, holds = false;
    for (int round = 0; round < 12 && !decided; ++round, terms *= 2) {
      Rat lo, hi;
      exp_bounds(y, terms, lo, hi);
      if (lo > target) {
        decided = true;
        holds = true;
      } else if (hi <= target) {
        decided = true;
      }
    }
    if (!decided) fail("ResourceBudgetExceeded", "exp bracket failed to separate");
    if (holds) return N;
  }
  fail("Overflow", "mixing step search exceeded 10^6");
}

}  // namespace cdsw
