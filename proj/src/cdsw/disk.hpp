#pragma once

#include <functional>
#include <utility>

#include "cdsw/codec.hpp"

namespace cdsw {

// One-sided slope ramps on [-1/3, 1]: Q joins slope a (left of -b/2) to
// slope 1 (right of 0), R joins slope 1 to slope a. On (-b/2, 0) the exact
// evaluator refuses; the smooth evaluator interpolates monotonely with
// flat junctions.
enum class RampKind { Q, R };

struct RampSpec {
  RampKind kind;
  Rat a;
  Rat b;
};

RampSpec ramp_inverse(const RampSpec& s);

// Exact branch values; x strictly inside (-b/2, 0) raises BlendZoneQuery.
Rat ramp_eval(const RampSpec& s, const Rat& x);

double ramp_eval_smooth(const RampSpec& s, double x);

struct Strip {
  BiInfBits z;    // window bits s_0..s_{k+3} as a ray
  Region box;
  Rat a, b;       // ramp parameters of this strip's x-map
  Rat Xz, XG;     // input and output ray anchors
  int F;          // shift exponent the strip's window demands
};

struct DiskMapSpec {
  int k = 1;
  GeneralizedShift gs;
  std::vector<Strip> strips;  // sorted by box.x.lo
  // second coordinate of the lower Baker block; the x-reading collapses
  // boxes and exists to demonstrate which reading survives the tests
  bool baker_lower_second_y = true;
};

DiskMapSpec build_disk_map(const TuringMachine& m, const CodecParams& p);

Pt baker_S(const Pt& p, bool lower_second_y = true);
Pt baker_S_inv(const Pt& p);
Region baker_S_box(const Region& r, bool enclose, bool lower_second_y = true);
Region baker_S_inv_box(const Region& r, bool enclose);

const Strip& locate_strip(const DiskMapSpec& spec, const Rat& x);

Pt strip_G(const DiskMapSpec& spec, const Pt& p);
Region strip_G_box(const DiskMapSpec& spec, const Region& r, bool enclose);

// Full step: strip map, then the Baker map S applied -F times (L-moves push
// content left, so they apply S itself; R-moves apply S inverse twice).
Pt f_eval(const DiskMapSpec& spec, const Pt& p);

// Box image via monotone corner evaluation. A corner strictly inside an
// open blend raises BlendZoneCorner.
Region f_box(const DiskMapSpec& spec, const Region& r);

// Like f_box, but a blend-interior corner is widened outward to the blend
// edge first. The result contains the image under every monotone map that
// agrees with the exact branches outside the blends.
Region f_box_enclose(const DiskMapSpec& spec, const Region& r);

std::pair<double, double> f_eval_smooth(const DiskMapSpec& spec, double x, double y);

std::pair<Rat, Rat> area_probe(const std::function<Region(const Region&)>& f, const Region& r);

}  // namespace cdsw
