#pragma once

#include <string>

#include "cdsw/rat.hpp"

namespace cdsw {

struct Interval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  // disjoint interiors; closures may touch at an endpoint
  bool interior_disjoint(const Interval& o) const { return hi <= o.lo || o.hi <= lo; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

struct Pt {
  Rat x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

struct Region {
  Interval x, y;
  Rat area() const { return x.width() * y.width(); }
  Pt center() const { return {x.mid(), y.mid()}; }
  bool contains(const Pt& p) const { return x.contains(p.x) && y.contains(p.y); }
  bool contains(const Region& o) const { return x.contains(o.x) && y.contains(o.y); }
  bool disjoint(const Region& o) const { return x.disjoint(o.x) || y.disjoint(o.y); }
  bool interior_disjoint(const Region& o) const {
    return x.interior_disjoint(o.x) || y.interior_disjoint(o.y);
  }
  bool operator==(const Region& o) const { return x == o.x && y == o.y; }
};

inline std::string region_str(const Region& r) {
  return "[" + rat_str(r.x.lo) + "," + rat_str(r.x.hi) + "]x[" + rat_str(r.y.lo) + "," +
         rat_str(r.y.hi) + "]";
}

inline std::string pt_str(const Pt& p) { return "(" + rat_str(p.x) + "," + rat_str(p.y) + ")"; }

}  // namespace cdsw
