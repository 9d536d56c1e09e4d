#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdsw/tm.hpp"

namespace cdsw {

// Two-sided 0/1 sequence with finite support. right[j] holds s_j (j >= 0),
// left[j] holds s_{-(j+1)}. Canonical form drops trailing zeros.
struct BiInfBits {
  std::vector<uint8_t> left, right;
  bool operator==(const BiInfBits& o) const { return left == o.left && right == o.right; }
};

int bit_at(const BiInfBits& b, long i);
void set_bit(BiInfBits& b, long i, int v);
BiInfBits canonical_bits(BiInfBits b);
// result_i = s_{i+by}; positive `by` moves content toward the decimal point
BiInfBits shift_bits(const BiInfBits& b, long by);
long support_size(const BiInfBits& b);

// `...0 <left bits, deepest first> . <right bits> 0...`
std::string bits_str(const BiInfBits& b);
BiInfBits parse_bits(const std::string& s);

// Finite rule (F, G) acting on the window s_0..s_{k+3}: the image is
// sigma^F applied after G rewrites the window. F reads s_2..s_{k+3}
// (index bit i = s_{2+i}), G reads and writes s_0..s_{k+3} (bit i = s_i).
struct GeneralizedShift {
  int k = 1;
  std::vector<int> F_table;        // size 2^(k+2), values in {-2, 0, +2}
  std::vector<uint32_t> G_table;   // size 2^(k+4), packed output windows
};

int state_bit_count(size_t n_states);

// blank -> 0, i-th alphabet symbol -> i+1; two bits per cell
int symbol_code(const TuringMachine& m, char sym);
char symbol_from_code(const TuringMachine& m, int code);  // 0 gives blank

// Total on canonical configs. Layout: s_0 s_1 = nearest left cell,
// s_2..s_{k+1} = state index (most significant bit first), s_{k+2} s_{k+3} =
// head cell, further right cells at s_{k+4}..; deeper left cells pair up at
// (s_{-2j}, s_{-2j+1}), most significant bit at s_{-2j}.
BiInfBits config_to_bits(const TuringMachine& m, int k, const Configuration& c);

// Strict partial inverse: rejects layouts with a blank code interior to a
// tape segment, or state/symbol codes out of range.
Configuration bits_to_config(const TuringMachine& m, int k, const BiInfBits& b);

GeneralizedShift tm_to_genshift(const TuringMachine& m);

BiInfBits genshift_apply(const GeneralizedShift& gs, const BiInfBits& b);

struct ConjugacyReport {
  long checked = 0;
  std::vector<Configuration> failures;
};

// Exhaustively checks apply(encode(c)) == encode(step(c)) at the bit level.
ConjugacyReport verify_conjugacy(const TuringMachine& m, const GeneralizedShift& gs,
                                 const std::vector<Configuration>& configs);

std::string genshift_dump(const GeneralizedShift& gs);

}  // namespace cdsw
