#include "cdsw/verify.hpp"

#include <random>

namespace cdsw {

BigInt toral_det(const LinearToralMap& m) { return m.a * m.d - m.b * m.c; }

void require_unimodular(const LinearToralMap& m) {
  BigInt d = toral_det(m);
  if (d != 1 && d != -1) fail("NotUnimodular", "det = " + d.str());
}

std::vector<Poly> toral_apply(const LinearToralMap& m, const std::vector<Poly>& pieces) {
  std::vector<Poly> out;
  for (auto& p : pieces) {
    Poly q = map_linear(p, Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d));
    Rat xlo = q[0].x, xhi = q[0].x, ylo = q[0].y, yhi = q[0].y;
    for (auto& v : q) {
      xlo = std::min(xlo, v.x);
      xhi = std::max(xhi, v.x);
      ylo = std::min(ylo, v.y);
      yhi = std::max(yhi, v.y);
    }
    for (BigInt mx = floor_rat(xlo); mx < ceil_rat(xhi); ++mx) {
      for (BigInt my = floor_rat(ylo); my < ceil_rat(yhi); ++my) {
        Region cell{{Rat(mx), Rat(mx) + 1}, {Rat(my), Rat(my) + 1}};
        Poly piece = clip_to_box(q, cell);
        if (poly_area(piece) > 0) out.push_back(translate(piece, -Rat(mx), -Rat(my)));
      }
    }
  }
  return out;
}

std::vector<Poly> toral_iterate(const LinearToralMap& m, const Region& box, int n) {
  std::vector<Poly> pieces{box_poly(box)};
  for (int i = 0; i < n; ++i) pieces = toral_apply(m, pieces);
  return pieces;
}

VerifyReport verify_cds(const CdsBundle& b, const std::vector<Configuration>& configs,
                        int horizon) {
  if (!std::holds_alternative<const DiskMapSpec*>(b.dynamics))
    fail("UnsupportedDynamics", "the simulation checker runs on disk dynamics");
  const DiskMapSpec* spec = std::get<const DiskMapSpec*>(b.dynamics);
  if (!spec || !b.machine) fail("BadParams", "bundle is missing dynamics or machine");
  VerifyReport rep;
  for (auto& c0 : configs) {
    ++rep.configs;
    Configuration s = canonicalize(c0);
    Region r = region(*b.machine, b.codec, s);
    for (int t = 0; t < horizon; ++t) {
      try {
        for (long i = 0; i < b.slowdown; ++i) r = f_box(*spec, r);
      } catch (const Error& e) {
        rep.failures.push_back({c0, t, e.code});
        break;
      }
      s = tm_step(*b.machine, s);
      Region want = region(*b.machine, b.codec, s);
      ++rep.steps_checked;
      if (!want.contains(r)) {
        rep.failures.push_back({c0, t, "image escapes the target region"});
        break;
      }
    }
  }
  return rep;
}

ProbeReport robustness_probe(const CdsBundle& b, const Configuration& config, int n_samples,
                             uint64_t seed, int horizon) {
  if (!std::holds_alternative<const DiskMapSpec*>(b.dynamics))
    fail("UnsupportedDynamics", "the probe runs on disk dynamics");
  const DiskMapSpec* spec = std::get<const DiskMapSpec*>(b.dynamics);
  ProbeReport rep;
  Configuration s0 = canonicalize(config);
  Region r0 = region(*b.machine, b.codec, s0);
  std::vector<Configuration> trace{s0};
  for (int t = 0; t < horizon; ++t) trace.push_back(tm_step(*b.machine, trace.back()));
  std::mt19937_64 rng(seed);
  auto grid = [&](const Interval& iv) {
    // strictly interior rational offsets at resolution 1/4096
    long u = 1 + static_cast<long>(rng() % 4095);
    return iv.lo + iv.width() * u / 4096;
  };
  for (int i = 0; i < n_samples; ++i) {
    Pt p{grid(r0.x), grid(r0.y)};
    Region box{{p.x, p.x}, {p.y, p.y}};
    bool good = true;
    for (int t = 0; t < horizon && good; ++t) {
      try {
        for (long j = 0; j < b.slowdown; ++j) box = f_box_enclose(*spec, box);
      } catch (const Error& e) {
        rep.notes.push_back(e.code + " at step " + std::to_string(t));
        good = false;
        break;
      }
      Region want = region(*b.machine, b.codec, trace[t + 1]);
      if (!want.contains(box)) {
        rep.notes.push_back("enclosure escapes at step " + std::to_string(t));
        good = false;
        break;
      }
      auto dec = decode(*b.machine, b.codec, box.center());
      if (!dec.config || !(*dec.config == trace[t + 1])) {
        rep.notes.push_back("midpoint decodes wrong at step " + std::to_string(t));
        good = false;
      }
    }
    ++rep.samples;
    if (good) ++rep.correct;
  }
  return rep;
}

CensusVerdict measure_census(const MeasureCensus& mc, std::optional<BigInt> demanded) {
  if (!mc.disjoint) fail("CensusNotDisjoint", "pigeonhole needs disjoint regions");
  if (mc.total_measure <= 0) fail("NonpositiveArea", "total measure");
  if (mc.region_areas.empty()) fail("BadParams", "no regions listed");
  Rat min_area = mc.region_areas.front();
  for (auto& a : mc.region_areas) {
    if (a <= 0) fail("NonpositiveArea", "region of area " + rat_str(a));
    min_area = std::min(min_area, a);
  }
  BigInt bound = floor_rat(mc.total_measure / min_area);
  bool feasible = demanded.has_value() && *demanded <= bound;
  return {feasible, bound};
}

std::optional<int> mixing_first_hit(const LinearToralMap& m, const Region& U, const Region& V,
                                    int n_max) {
  Region unit{{0, 1}, {0, 1}};
  if (!unit.contains(U) || !unit.contains(V))
    fail("OutsideDomain", "U and V must lie in the unit square");
  std::vector<Poly> pieces{box_poly(U)};
  for (int n = 0; n <= n_max; ++n) {
    for (auto& p : pieces)
      if (poly_area(clip_to_box(p, V)) > 0) return n;
    pieces = toral_apply(m, pieces);
  }
  return std::nullopt;
}

InvariantCensusReport invariant_census_disk(const DiskMapSpec& spec,
                                            const std::vector<Region>& boxes, int n) {
  InvariantCensusReport rep;
  for (size_t i = 0; i < boxes.size(); ++i) {
    bool inv = true;
    try {
      Region r = boxes[i];
      for (int t = 0; t < n; ++t) r = f_box(spec, r);
      inv = boxes[i].contains(r);
    } catch (const Error&) {
      inv = false;
    }
    if (inv)
      ++rep.passed;
    else {
      ++rep.failed;
      rep.failing.push_back(i);
    }
  }
  return rep;
}

InvariantCensusReport invariant_census_toral(const LinearToralMap& m,
                                             const std::vector<Region>& boxes, int n) {
  InvariantCensusReport rep;
  for (size_t i = 0; i < boxes.size(); ++i) {
    bool inv = true;
    for (auto& p : toral_iterate(m, boxes[i], n))
      if (!poly_inside_box(p, boxes[i])) inv = false;
    if (inv)
      ++rep.passed;
    else {
      ++rep.failed;
      rep.failing.push_back(i);
    }
  }
  return rep;
}

}  // namespace cdsw
