#pragma once

#include <optional>
#include <variant>

#include "cdsw/disk.hpp"
#include "cdsw/polygon.hpp"

namespace cdsw {

// Integer matrix [[a, b], [c, d]] acting on the unit torus.
struct LinearToralMap {
  BigInt a, b, c, d;
};

BigInt toral_det(const LinearToralMap& m);
void require_unimodular(const LinearToralMap& m);

// Matrix image of convex pieces, wrapped back into [0,1]^2.
std::vector<Poly> toral_apply(const LinearToralMap& m, const std::vector<Poly>& pieces);
std::vector<Poly> toral_iterate(const LinearToralMap& m, const Region& box, int n);

struct CdsBundle {
  std::variant<const DiskMapSpec*, LinearToralMap> dynamics;
  const TuringMachine* machine = nullptr;
  CodecParams codec;
  long slowdown = 1;
};

struct StepFailure {
  Configuration config;
  int step;  // -1 marks a failure before the first step
  std::string reason;
};

struct VerifyReport {
  long configs = 0;
  long steps_checked = 0;
  std::vector<StepFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Exact simulation check: iterating the box map `slowdown` times from
// region(s) must land inside region(step(s)), for every config and every
// step up to the horizon. Horizon 0 passes vacuously.
VerifyReport verify_cds(const CdsBundle& b, const std::vector<Configuration>& configs,
                        int horizon);

struct ProbeReport {
  long samples = 0;
  long correct = 0;
  std::vector<std::string> notes;
};

// Samples interior points of region(config) on a rational grid, iterates
// them as degenerate boxes with blend-enclosing arithmetic, and requires the
// enclosure to stay inside the traced region while its midpoint decodes to
// the traced config.
ProbeReport robustness_probe(const CdsBundle& b, const Configuration& config, int n_samples,
                             uint64_t seed, int horizon);

struct MeasureCensus {
  Rat total_measure;
  std::vector<Rat> region_areas;
  bool disjoint = true;
};

struct CensusVerdict {
  bool feasible;
  BigInt bound;  // max disjoint regions of the smallest listed area
};

// Pigeonhole: demanded regions (nullopt = infinitely many) cannot exceed
// floor(total / min_area).
CensusVerdict measure_census(const MeasureCensus& mc, std::optional<BigInt> demanded);

// First n <= n_max with a positive-area overlap of T^n(U) and V; touching
// boundaries do not count.
std::optional<int> mixing_first_hit(const LinearToralMap& m, const Region& U, const Region& V,
                                    int n_max);

struct InvariantCensusReport {
  long passed = 0;
  long failed = 0;
  std::vector<size_t> failing;
};

// Counts boxes with f^n(box) inside box.
InvariantCensusReport invariant_census_disk(const DiskMapSpec& spec,
                                            const std::vector<Region>& boxes, int n);
InvariantCensusReport invariant_census_toral(const LinearToralMap& m,
                                             const std::vector<Region>& boxes, int n);

}  // namespace cdsw
