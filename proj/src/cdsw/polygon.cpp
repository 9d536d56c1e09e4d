#include "cdsw/polygon.hpp"

namespace cdsw {

Poly box_poly(const Region& r) {
  return {{r.x.lo, r.y.lo}, {r.x.hi, r.y.lo}, {r.x.hi, r.y.hi}, {r.x.lo, r.y.hi}};
}

Rat poly_area(const Poly& p) {
  if (p.size() < 3) return 0;
  Rat twice = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const Pt& u = p[i];
    const Pt& v = p[(i + 1) % p.size()];
    twice += u.x * v.y - v.x * u.y;
  }
  return rat_abs(twice) / 2;
}

Poly clip_halfplane(const Poly& p, const Rat& a, const Rat& b, const Rat& c) {
  Poly out;
  size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& cur = p[i];
    const Pt& nxt = p[(i + 1) % n];
    Rat fc = a * cur.x + b * cur.y - c;
    Rat fn = a * nxt.x + b * nxt.y - c;
    if (fc <= 0) out.push_back(cur);
    if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
      Rat t = fc / (fc - fn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

Poly clip_to_box(const Poly& p, const Region& r) {
  Poly q = clip_halfplane(p, 1, 0, r.x.hi);
  q = clip_halfplane(q, -1, 0, -r.x.lo);
  q = clip_halfplane(q, 0, 1, r.y.hi);
  q = clip_halfplane(q, 0, -1, -r.y.lo);
  return q;
}

Poly translate(const Poly& p, const Rat& dx, const Rat& dy) {
  Poly out = p;
  for (auto& v : out) {
    v.x += dx;
    v.y += dy;
  }
  return out;
}

Poly map_linear(const Poly& p, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Poly out;
  out.reserve(p.size());
  for (auto& v : p) out.push_back({a * v.x + b * v.y, c * v.x + d * v.y});
  return out;
}

bool poly_inside_box(const Poly& p, const Region& r) {
  for (auto& v : p)
    if (!r.contains(v)) return false;
  return true;
}

}  // namespace cdsw
