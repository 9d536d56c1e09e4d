#include "cdsw/disk.hpp"

#include <algorithm>
#include <cmath>

namespace cdsw {

namespace {

const Rat kLo(-1, 3);
const Rat kGapLo(1, 3);
const Rat kGapHi(5, 9);

bool in_blend(const RampSpec& s, const Rat& x) { return x > -s.b / 2 && x < 0; }

Rat left_branch(const RampSpec& s, const Rat& x) {
  return s.kind == RampKind::Q ? Rat(s.a * x) : x;
}

Rat right_branch(const RampSpec& s, const Rat& x) {
  return s.kind == RampKind::Q ? x : Rat(s.a * x);
}

// endpoint evaluation for box images; `hi_side` picks which way a
// blend-interior endpoint may be widened
Rat ramp_end(const RampSpec& s, const Rat& x, bool hi_side, bool enclose) {
  if (!in_blend(s, x)) return ramp_eval(s, x);
  if (!enclose) fail("BlendZoneCorner", "box corner strictly inside a blend zone");
  return hi_side ? right_branch(s, Rat(0)) : left_branch(s, Rat(-s.b / 2));
}

}  // namespace

RampSpec ramp_inverse(const RampSpec& s) {
  if (s.kind == RampKind::Q) return {RampKind::Q, 1 / s.a, s.a * s.b};
  return {RampKind::R, 1 / s.a, s.b};
}

Rat ramp_eval(const RampSpec& s, const Rat& x) {
  if (x <= -s.b / 2) return left_branch(s, x);
  if (x >= 0) return right_branch(s, x);
  fail("BlendZoneQuery", "exact ramp queried strictly inside (-b/2, 0)");
}

namespace {

double bump01(double t) {
  // C-infinity step: 0 below t=0, 1 above t=1, flat at both ends
  auto sig = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
  double lo = sig(t), hi = sig(1.0 - t);
  return lo / (lo + hi);
}

double smooth_blend_direct(const RampSpec& s, double x) {
  double a = to_double(s.a), b = to_double(s.b);
  double w = bump01((x + b / 2) / (b / 2));
  // Q with a >= 1 and R with a <= 1 are strictly monotone in this form
  return s.kind == RampKind::Q ? x * std::pow(a, 1.0 - w) : x * std::pow(a, w);
}

bool direct_form_ok(const RampSpec& s) {
  return s.kind == RampKind::Q ? s.a >= 1 : s.a <= 1;
}

}  // namespace

double ramp_eval_smooth(const RampSpec& s, double x) {
  double bd = to_double(s.b);
  if (x <= -bd / 2) return to_double(left_branch(s, Rat(1))) * x;
  if (x >= 0) return to_double(right_branch(s, Rat(1))) * x;
  if (direct_form_ok(s)) return smooth_blend_direct(s, x);
  // evaluate through the inverse ramp, whose blend is monotone in direct
  // form, and invert by bisection
  RampSpec inv = ramp_inverse(s);
  double lo = -to_double(inv.b) / 2, hi = 0;
  for (int i = 0; i < 80; ++i) {
    double mid = (lo + hi) / 2;
    if (smooth_blend_direct(inv, mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

namespace {

const RampSpec kR13{RampKind::R, Rat(1, 3), Rat(1, 3)};
const RampSpec kR31{RampKind::R, Rat(3), Rat(1, 3)};

void require_in_square(const Pt& p) {
  if (p.x < kLo || p.x > 1 || p.y < kLo || p.y > 1)
    fail("OutsideDomain", "point outside [-1/3,1]^2: " + pt_str(p));
}

}  // namespace

Pt baker_S(const Pt& p, bool lower_second_y) {
  require_in_square(p);
  if (p.y <= kGapLo) {
    Rat second = lower_second_y ? p.y : p.x;
    return {ramp_eval(kR13, p.x), ramp_eval(kR31, second)};
  }
  if (p.y >= kGapHi) return {p.x / 3 + Rat(2, 3), 3 * (p.y - Rat(2, 3))};
  fail("OutsideDomain", "y in the Baker gap: " + pt_str(p));
}

Pt baker_S_inv(const Pt& p) {
  require_in_square(p);
  if (p.x <= kGapLo) return {ramp_eval(kR31, p.x), ramp_eval(kR13, p.y)};
  if (p.x >= kGapHi) return {3 * (p.x - Rat(2, 3)), p.y / 3 + Rat(2, 3)};
  fail("OutsideDomain", "x in the Baker gap: " + pt_str(p));
}

namespace {

void require_box_in_square(const Region& r) {
  if (r.x.lo < kLo || r.x.hi > 1 || r.y.lo < kLo || r.y.hi > 1)
    fail("OutsideDomain", "box outside [-1/3,1]^2: " + region_str(r));
}

Interval ramp_interval(const RampSpec& s, const Interval& iv, bool enclose) {
  return {ramp_end(s, iv.lo, false, enclose), ramp_end(s, iv.hi, true, enclose)};
}

}  // namespace

Region baker_S_box(const Region& r, bool enclose, bool lower_second_y) {
  require_box_in_square(r);
  if (r.y.hi <= kGapLo) {
    Interval second = lower_second_y ? r.y : r.x;
    return {ramp_interval(kR13, r.x, enclose), ramp_interval(kR31, second, enclose)};
  }
  if (r.y.lo >= kGapHi)
    return {{r.x.lo / 3 + Rat(2, 3), r.x.hi / 3 + Rat(2, 3)},
            {3 * (r.y.lo - Rat(2, 3)), 3 * (r.y.hi - Rat(2, 3))}};
  fail("OutsideDomain", "box straddles the Baker blocks: " + region_str(r));
}

Region baker_S_inv_box(const Region& r, bool enclose) {
  require_box_in_square(r);
  if (r.x.hi <= kGapLo)
    return {ramp_interval(kR31, r.x, enclose), ramp_interval(kR13, r.y, enclose)};
  if (r.x.lo >= kGapHi)
    return {{3 * (r.x.lo - Rat(2, 3)), 3 * (r.x.hi - Rat(2, 3))},
            {r.y.lo / 3 + Rat(2, 3), r.y.hi / 3 + Rat(2, 3)}};
  fail("OutsideDomain", "box straddles the Baker preimage regions: " + region_str(r));
}

DiskMapSpec build_disk_map(const TuringMachine& m, const CodecParams& p) {
  validate_params(p);
  GeneralizedShift gs = tm_to_genshift(m);
  if (gs.k != p.k)
    fail("ShapeMismatch", "codec k does not match the machine's state window");
  DiskMapSpec spec;
  spec.k = gs.k;
  spec.gs = gs;
  int width = gs.k + 4;
  for (uint32_t w = 0; w < gs.G_table.size(); ++w) {
    Strip st;
    for (int i = 0; i < width; ++i) set_bit(st.z, i, (w >> i) & 1);
    st.z = canonical_bits(st.z);
    BiInfBits gb;
    for (int i = 0; i < width; ++i) set_bit(gb, i, (gs.G_table[w] >> i) & 1);
    gb = canonical_bits(gb);
    long lz = len_x(st.z), lg = len_x(gb);
    st.Xz = coord_X(st.z);
    st.XG = coord_X(gb);
    st.a = pow3(lz - lg);
    st.b = pow3(-lz - 1);
    st.F = gs.F_table[w >> 2];
    st.box = {{st.Xz - st.b, st.Xz + pow3(-width)}, {kLo, Rat(1)}};
    spec.strips.push_back(std::move(st));
  }
  std::sort(spec.strips.begin(), spec.strips.end(),
            [](const Strip& a, const Strip& b) { return a.box.x.lo < b.box.x.lo; });
  return spec;
}

const Strip& locate_strip(const DiskMapSpec& spec, const Rat& x) {
  auto it = std::partition_point(spec.strips.begin(), spec.strips.end(),
                                 [&](const Strip& s) { return s.box.x.hi < x; });
  if (it == spec.strips.end() || x < it->box.x.lo)
    fail("OutsideDomain", "x = " + rat_str(x) + " lies between strips");
  return *it;
}

Pt strip_G(const DiskMapSpec& spec, const Pt& p) {
  const Strip& st = locate_strip(spec, p.x);
  RampSpec ramp{RampKind::Q, st.a, st.b};
  return {ramp_eval(ramp, p.x - st.Xz) + st.XG, p.y};
}

Region strip_G_box(const DiskMapSpec& spec, const Region& r, bool enclose) {
  const Strip& st = locate_strip(spec, r.x.lo);
  if (!st.box.x.contains(r.x))
    fail("OutsideDomain", "box not contained in one strip: " + region_str(r));
  RampSpec ramp{RampKind::Q, st.a, st.b};
  Interval local{r.x.lo - st.Xz, r.x.hi - st.Xz};
  Interval img = ramp_interval(ramp, local, enclose);
  return {{img.lo + st.XG, img.hi + st.XG}, r.y};
}

namespace {

// S shifts one bit per application, so a head move (two bits) applies it
// twice; the exponent is -F since S itself deepens the ray
Pt apply_shift_stage(const Pt& p, int F) {
  Pt q = p;
  for (int i = 0; i < F; ++i) q = baker_S_inv(q);
  for (int i = 0; i < -F; ++i) q = baker_S(q);
  return q;
}

Region apply_shift_stage_box(const Region& r, int F, bool enclose, bool lower_second_y) {
  Region q = r;
  for (int i = 0; i < F; ++i) q = baker_S_inv_box(q, enclose);
  for (int i = 0; i < -F; ++i) q = baker_S_box(q, enclose, lower_second_y);
  return q;
}

}  // namespace

Pt f_eval(const DiskMapSpec& spec, const Pt& p) {
  const Strip& st = locate_strip(spec, p.x);
  RampSpec ramp{RampKind::Q, st.a, st.b};
  Pt g{ramp_eval(ramp, p.x - st.Xz) + st.XG, p.y};
  return apply_shift_stage(g, st.F);
}

Region f_box(const DiskMapSpec& spec, const Region& r) {
  const Strip& st = locate_strip(spec, r.x.lo);
  Region g = strip_G_box(spec, r, false);
  return apply_shift_stage_box(g, st.F, false, spec.baker_lower_second_y);
}

Region f_box_enclose(const DiskMapSpec& spec, const Region& r) {
  const Strip& st = locate_strip(spec, r.x.lo);
  Region g = strip_G_box(spec, r, true);
  return apply_shift_stage_box(g, st.F, true, spec.baker_lower_second_y);
}

std::pair<double, double> f_eval_smooth(const DiskMapSpec& spec, double x, double y) {
  auto it = std::find_if(spec.strips.begin(), spec.strips.end(), [&](const Strip& s) {
    return to_double(s.box.x.lo) <= x && x <= to_double(s.box.x.hi);
  });
  if (it == spec.strips.end()) fail("OutsideDomain", "x between strips");
  RampSpec ramp{RampKind::Q, it->a, it->b};
  double gx = ramp_eval_smooth(ramp, x - to_double(it->Xz)) + to_double(it->XG);
  double gy = y;
  auto third = 1.0 / 3.0, gap_hi = 5.0 / 9.0;
  for (int i = 0; i < it->F; ++i) {
    // Baker inverse
    if (gx <= third) {
      gx = ramp_eval_smooth(kR31, gx);
      gy = ramp_eval_smooth(kR13, gy);
    } else if (gx >= gap_hi) {
      gx = 3 * (gx - 2.0 / 3.0);
      gy = gy / 3 + 2.0 / 3.0;
    } else {
      fail("OutsideDomain", "smooth orbit hit the Baker gap");
    }
  }
  for (int i = 0; i < -it->F; ++i) {
    if (gy <= third) {
      gx = ramp_eval_smooth(kR13, gx);
      gy = ramp_eval_smooth(kR31, gy);
    } else if (gy >= gap_hi) {
      gx = gx / 3 + 2.0 / 3.0;
      gy = 3 * (gy - 2.0 / 3.0);
    } else {
      fail("OutsideDomain", "smooth orbit hit the Baker gap");
    }
  }
  return {gx, gy};
}

std::pair<Rat, Rat> area_probe(const std::function<Region(const Region&)>& f, const Region& r) {
  return {r.area(), f(r).area()};
}

}  // namespace cdsw
