#pragma once

#include <vector>

#include "cdsw/geom.hpp"

namespace cdsw {

// Convex polygon, counterclockwise vertex order.
using Poly = std::vector<Pt>;

Poly box_poly(const Region& r);
Rat poly_area(const Poly& p);

// Keep the side a x + b y <= c.
Poly clip_halfplane(const Poly& p, const Rat& a, const Rat& b, const Rat& c);
Poly clip_to_box(const Poly& p, const Region& r);

Poly translate(const Poly& p, const Rat& dx, const Rat& dy);

// x' = a x + b y, y' = c x + d y
Poly map_linear(const Poly& p, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

bool poly_inside_box(const Poly& p, const Region& r);

}  // namespace cdsw
