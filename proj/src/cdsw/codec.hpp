#pragma once

#include <optional>

#include "cdsw/genshift.hpp"
#include "cdsw/geom.hpp"

namespace cdsw {

struct CodecParams {
  int k = 1;
  int depth_budget = 256;  // max digits extracted per axis
};

void validate_params(const CodecParams& p);

// Ray lengths: smallest cut past the last set bit. len_x scans s_0, s_1, ...;
// len_y scans s_{-1}, s_{-2}, ....
long len_x(const BiInfBits& b);
long len_y(const BiInfBits& b);

// Same values computed without unbounded lookahead, valid on bit patterns
// that encode a tape (no blank code interior to a segment). len_x branches
// on the head pair: nonblank head scans for the first all-zero window past
// it, blank head takes the last set bit among s_0..s_{k+1}.
long len_x_computable(const BiInfBits& b, int k);
long len_y_computable(const BiInfBits& b);

Rat coord_X(const BiInfBits& b);
Rat coord_Y(const BiInfBits& b);

Region bits_region(const BiInfBits& b);
Pt bits_encode(const BiInfBits& b);  // center of the region

Region region(const TuringMachine& m, const CodecParams& p, const Configuration& c);
Pt encode(const TuringMachine& m, const CodecParams& p, const Configuration& c);

enum class DecodeStatus { Ok, GapPoint, OutsideDomain, BudgetExceeded, Malformed };

const char* decode_status_str(DecodeStatus s);

struct AxisDigits {
  std::vector<uint8_t> digits;
  DecodeStatus status = DecodeStatus::Ok;
  long steps = 0;
};

// Ternary-with-gap digit extraction: [-1/3, 0] ends the string, (0, 1/3]
// yields 0, [5/9, 1] yields 1, the middle gap and everything outside
// [-1/3, 1] are rejected.
AxisDigits extract_digits(Rat u, int budget);

struct DecodedBits {
  BiInfBits bits;
  DecodeStatus status = DecodeStatus::Ok;
  long steps = 0;
};

DecodedBits decode_bits(const Pt& p, const CodecParams& params);

struct DecodeResult {
  std::optional<Configuration> config;
  DecodeStatus status = DecodeStatus::Ok;
};

DecodeResult decode(const TuringMachine& m, const CodecParams& p, const Pt& pt);

// Partially known neighborhood of the head: `left_known` nearest-first and
// `right_known` head-first, all cells non-blank, right_known nonempty.
struct ConfigWindow {
  std::string left_known;
  std::string state;
  std::string right_known;
};

// Outer box guaranteed to contain region(c) for every config refining the
// window.
Region window_region(const TuringMachine& m, int k, const ConfigWindow& w);

struct CodecDiagnostics {
  long configs_checked = 0;
  long roundtrip_failures = 0;
  long disjoint_violations = 0;     // interior overlaps between distinct configs
  long boundary_touch_pairs = 0;    // closed boxes touching at the boundary only
  std::vector<Rat> max_area_by_len;
  bool areas_shrink = true;
  bool closure_of_interior = true;
  long window_pairs_checked = 0;
  long window_violations = 0;       // nested-or-disjoint failures across windows
};

CodecDiagnostics codec_diagnostics(const TuringMachine& m, const CodecParams& p,
                                   int tape_len_bound);

}  // namespace cdsw
