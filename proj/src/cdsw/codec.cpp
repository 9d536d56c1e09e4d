#include "cdsw/codec.hpp"

#include <algorithm>
#include <map>

namespace cdsw {

void validate_params(const CodecParams& p) {
  if (p.k < 1) fail("BadParams", "k must be >= 1");
  if (p.depth_budget < p.k + 4) fail("BadParams", "depth_budget below one window");
}

long len_x(const BiInfBits& b) {
  for (long j = static_cast<long>(b.right.size()); j >= 1; --j)
    if (b.right[j - 1]) return j;
  return 0;
}

long len_y(const BiInfBits& b) {
  for (long j = static_cast<long>(b.left.size()); j >= 1; --j)
    if (b.left[j - 1]) return j;
  return 0;
}

long len_x_computable(const BiInfBits& b, int k) {
  int head = (bit_at(b, k + 2) << 1) | bit_at(b, k + 3);
  if (head != 0) {
    for (long j = k + 3;; ++j)
      if (!bit_at(b, j) && !bit_at(b, j + 1) && !bit_at(b, j + 2)) return j;
  }
  for (long j = k + 2; j >= 1; --j)
    if (bit_at(b, j - 1)) return j;
  return 0;
}

long len_y_computable(const BiInfBits& b) {
  for (long j = 0;; ++j)
    if (!bit_at(b, -j - 3) && !bit_at(b, -j - 2) && !bit_at(b, -j - 1)) return j;
}

Rat coord_X(const BiInfBits& b) {
  Rat x = 0;
  for (size_t j = 0; j < b.right.size(); ++j)
    if (b.right[j]) x += 2 * pow3(-static_cast<long>(j) - 1);
  return x;
}

Rat coord_Y(const BiInfBits& b) {
  Rat y = 0;
  for (size_t j = 0; j < b.left.size(); ++j)
    if (b.left[j]) y += 2 * pow3(-static_cast<long>(j) - 1);
  return y;
}

Region bits_region(const BiInfBits& b) {
  Rat X = coord_X(b), Y = coord_Y(b);
  Rat wx = pow3(-len_x(b) - 1), wy = pow3(-len_y(b) - 1);
  return {{X - wx, X}, {Y - wy, Y}};
}

Pt bits_encode(const BiInfBits& b) { return bits_region(b).center(); }

Region region(const TuringMachine& m, const CodecParams& p, const Configuration& c) {
  validate_params(p);
  return bits_region(config_to_bits(m, p.k, c));
}

Pt encode(const TuringMachine& m, const CodecParams& p, const Configuration& c) {
  validate_params(p);
  return bits_encode(config_to_bits(m, p.k, c));
}

const char* decode_status_str(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Ok: return "Ok";
    case DecodeStatus::GapPoint: return "GapPoint";
    case DecodeStatus::OutsideDomain: return "OutsideDomain";
    case DecodeStatus::BudgetExceeded: return "BudgetExceeded";
    case DecodeStatus::Malformed: return "Malformed";
  }
  return "?";
}

AxisDigits extract_digits(Rat u, int budget) {
  AxisDigits out;
  static const Rat third(1, 3), five_ninths(5, 9);
  for (;;) {
    ++out.steps;
    if (u < Rat(-1, 3) || u > 1) {
      out.status = DecodeStatus::OutsideDomain;
      return out;
    }
    if (u <= 0) return out;  // termination band [-1/3, 0]
    if (static_cast<long>(out.digits.size()) >= budget) {
      out.status = DecodeStatus::BudgetExceeded;
      return out;
    }
    if (u <= third) {
      out.digits.push_back(0);
      u *= 3;
    } else if (u >= five_ninths) {
      out.digits.push_back(1);
      u = u * 3 - 2;
    } else {
      out.status = DecodeStatus::GapPoint;
      return out;
    }
  }
}

DecodedBits decode_bits(const Pt& p, const CodecParams& params) {
  validate_params(params);
  DecodedBits out;
  AxisDigits dx = extract_digits(p.x, params.depth_budget);
  AxisDigits dy = extract_digits(p.y, params.depth_budget);
  out.steps = dx.steps + dy.steps;
  out.status = dx.status != DecodeStatus::Ok ? dx.status : dy.status;
  if (out.status != DecodeStatus::Ok) return out;
  for (size_t j = 0; j < dx.digits.size(); ++j) set_bit(out.bits, static_cast<long>(j), dx.digits[j]);
  for (size_t j = 0; j < dy.digits.size(); ++j)
    set_bit(out.bits, -static_cast<long>(j) - 1, dy.digits[j]);
  out.bits = canonical_bits(out.bits);
  return out;
}

DecodeResult decode(const TuringMachine& m, const CodecParams& p, const Pt& pt) {
  DecodedBits db = decode_bits(pt, p);
  if (db.status != DecodeStatus::Ok) return {std::nullopt, db.status};
  try {
    return {bits_to_config(m, p.k, db.bits), DecodeStatus::Ok};
  } catch (const Error& e) {
    if (e.code == "MalformedLayout") return {std::nullopt, DecodeStatus::Malformed};
    throw;
  }
}

Region window_region(const TuringMachine& m, int k, const ConfigWindow& w) {
  if (w.right_known.empty()) fail("BadParams", "window must pin the head cell");
  if (w.left_known.empty()) fail("BadParams", "window must pin the nearest left cell");
  Configuration probe{w.left_known, w.state, w.right_known};
  BiInfBits b = config_to_bits(m, k, probe);
  long p = k + 2 + 2 * static_cast<long>(w.right_known.size());
  long q = 2 * (static_cast<long>(w.left_known.size()) - 1);
  Rat X = coord_X(b), Y = coord_Y(b);
  return {{X - pow3(-len_x(b) - 1), X + pow3(-p)}, {Y - pow3(-len_y(b) - 1), Y + pow3(-q)}};
}

namespace {

// distinct sorted intervals must not overlap; touching endpoints are counted
void check_axis(std::vector<Interval> ivs, long& overlaps, long& touches) {
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  ivs.erase(std::unique(ivs.begin(), ivs.end()), ivs.end());
  for (size_t i = 0; i + 1 < ivs.size(); ++i) {
    if (ivs[i + 1].lo < ivs[i].hi)
      ++overlaps;
    else if (ivs[i + 1].lo == ivs[i].hi)
      ++touches;
  }
}

}  // namespace

CodecDiagnostics codec_diagnostics(const TuringMachine& m, const CodecParams& p,
                                   int tape_len_bound) {
  validate_params(p);
  CodecDiagnostics d;
  // the area profile ranges over strict tapes: each written cell costs a
  // factor of 3, whereas an interior blank adds length without set bits
  std::vector<Rat> max_area(static_cast<size_t>(tape_len_bound) + 1, Rat(0));
  auto strict = enumerate_configs(m, tape_len_bound, false);
  for (auto& c : strict) {
    auto r = decode(m, p, encode(m, p, c));
    if (!r.config || !(*r.config == c)) ++d.roundtrip_failures;
    Rat area = bits_region(config_to_bits(m, p.k, c)).area();
    size_t n = c.left.size() + c.right.size();
    if (area > max_area[n]) max_area[n] = area;
  }
  auto all = enumerate_configs(m, tape_len_bound, true);
  d.configs_checked = static_cast<long>(all.size());
  // boxes are products, so pairwise disjointness reduces per axis: distinct
  // x-intervals must be disjoint, and within one x-interval (same right ray
  // and state) distinct y-intervals must be
  std::map<std::pair<std::string, std::string>, std::vector<Interval>> by_x;
  std::vector<Interval> xs;
  for (auto& c : all) {
    BiInfBits b = config_to_bits(m, p.k, c);
    Region r = bits_region(b);
    if (!(r.x.width() > 0 && r.y.width() > 0)) d.closure_of_interior = false;
    xs.push_back(r.x);
    std::string xkey = rat_str(r.x.lo) + ":" + rat_str(r.x.hi);
    by_x[{xkey, ""}].push_back(r.y);
  }
  long overlaps = 0;
  check_axis(xs, overlaps, d.boundary_touch_pairs);
  for (auto& [k2, ys] : by_x) check_axis(ys, overlaps, d.boundary_touch_pairs);
  d.disjoint_violations = overlaps;
  d.max_area_by_len.assign(max_area.begin(), max_area.end());
  for (size_t n = 0; n + 1 < max_area.size(); ++n)
    if (!(max_area[n + 1] < max_area[n])) d.areas_shrink = false;
  for (size_t n = 0; n < max_area.size(); ++n)
    if (max_area[n] > pow3(-static_cast<long>(n)) / 9) d.areas_shrink = false;

  // head-aligned partial windows: refinements nest, same-shape distinct
  // windows stay apart
  std::vector<ConfigWindow> windows;
  std::vector<std::string> cells{""};
  for (int len = 1; len <= 2; ++len) {
    std::vector<std::string> next;
    for (auto& s : cells)
      if (static_cast<int>(s.size()) == len - 1)
        for (char c : m.alphabet) next.push_back(s + c);
    for (auto& s : next) cells.push_back(s);
  }
  for (auto& L : cells)
    for (auto& R : cells)
      if (!L.empty() && !R.empty())
        for (auto& q : m.states) windows.push_back({L, q, R});
  for (size_t i = 0; i < windows.size(); ++i) {
    Region ri = window_region(m, p.k, windows[i]);
    for (size_t j = i + 1; j < windows.size(); ++j) {
      Region rj = window_region(m, p.k, windows[j]);
      auto& a = windows[i];
      auto& b2 = windows[j];
      bool same_state = a.state == b2.state;
      auto prefix = [](const std::string& s, const std::string& t) {
        return s.size() <= t.size() && t.compare(0, s.size(), s) == 0;
      };
      bool i_in_j = same_state && prefix(b2.left_known, a.left_known) &&
                    prefix(b2.right_known, a.right_known);
      bool j_in_i = same_state && prefix(a.left_known, b2.left_known) &&
                    prefix(a.right_known, b2.right_known);
      bool same_shape = a.left_known.size() == b2.left_known.size() &&
                        a.right_known.size() == b2.right_known.size();
      if (i_in_j || j_in_i) {
        ++d.window_pairs_checked;
        const Region& outer = i_in_j ? rj : ri;
        const Region& inner = i_in_j ? ri : rj;
        if (!outer.contains(inner)) ++d.window_violations;
      } else if (same_shape) {
        ++d.window_pairs_checked;
        if (!ri.interior_disjoint(rj)) ++d.window_violations;
      }
    }
  }
  return d;
}

}  // namespace cdsw
