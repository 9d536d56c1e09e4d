#include "cdsw/genshift.hpp"

#include <sstream>

namespace cdsw {

int bit_at(const BiInfBits& b, long i) {
  if (i >= 0) {
    size_t j = static_cast<size_t>(i);
    return j < b.right.size() ? b.right[j] : 0;
  }
  size_t j = static_cast<size_t>(-i - 1);
  return j < b.left.size() ? b.left[j] : 0;
}

void set_bit(BiInfBits& b, long i, int v) {
  auto& vec = i >= 0 ? b.right : b.left;
  size_t j = static_cast<size_t>(i >= 0 ? i : -i - 1);
  if (j >= vec.size()) {
    if (!v) return;
    vec.resize(j + 1, 0);
  }
  vec[j] = static_cast<uint8_t>(v ? 1 : 0);
}

BiInfBits canonical_bits(BiInfBits b) {
  while (!b.left.empty() && !b.left.back()) b.left.pop_back();
  while (!b.right.empty() && !b.right.back()) b.right.pop_back();
  return b;
}

BiInfBits shift_bits(const BiInfBits& b, long by) {
  BiInfBits out;
  long lo = -static_cast<long>(b.left.size()) - by;
  long hi = static_cast<long>(b.right.size()) - by;
  for (long i = lo; i < hi; ++i) set_bit(out, i, bit_at(b, i + by));
  return canonical_bits(out);
}

long support_size(const BiInfBits& b) {
  long n = 0;
  for (auto v : b.left) n += v;
  for (auto v : b.right) n += v;
  return n;
}

std::string bits_str(const BiInfBits& b) {
  BiInfBits c = canonical_bits(b);
  std::string out = "...0 ";
  for (auto it = c.left.rbegin(); it != c.left.rend(); ++it) out += char('0' + *it);
  out += " . ";
  for (auto v : c.right) out += char('0' + v);
  out += " 0...";
  return out;
}

BiInfBits parse_bits(const std::string& s) {
  std::string t = s;
  auto drop = [&](const std::string& pre) {
    auto p = t.find(pre);
    if (p != std::string::npos) t.erase(p, pre.size());
  };
  drop("...0");
  drop("0...");
  auto dot = t.find('.');
  if (dot == std::string::npos) fail("BadBits", "no '.' in '" + s + "'");
  BiInfBits b;
  long li = 0, ri = 0;
  for (auto it = t.rbegin() + (t.size() - dot); it != t.rend(); ++it) {
    if (*it == ' ' || *it == '\t') continue;
    if (*it != '0' && *it != '1') fail("BadBits", s);
    set_bit(b, -(++li), *it == '1');
  }
  for (size_t i = dot + 1; i < t.size(); ++i) {
    char c = t[i];
    if (c == ' ' || c == '\t') continue;
    if (c != '0' && c != '1') fail("BadBits", s);
    set_bit(b, ri++, c == '1');
  }
  return canonical_bits(b);
}

int state_bit_count(size_t n_states) {
  int k = 1;
  while ((1u << k) < n_states) ++k;
  return k;
}

int symbol_code(const TuringMachine& m, char sym) {
  if (m.alphabet.size() > 3) fail("AlphabetTooLarge", "two-bit cell codes hold 3 symbols plus blank");
  if (sym == kBlank) return 0;
  auto p = m.alphabet.find(sym);
  if (p == std::string::npos) fail("BadSymbol", std::string(1, sym));
  return static_cast<int>(p) + 1;
}

char symbol_from_code(const TuringMachine& m, int code) {
  if (code == 0) return kBlank;
  if (code < 0 || code > static_cast<int>(m.alphabet.size()))
    fail("MalformedLayout", "symbol code " + std::to_string(code) + " out of range");
  return m.alphabet[code - 1];
}

namespace {

void put_pair(BiInfBits& b, long msb_pos, int code) {
  set_bit(b, msb_pos, (code >> 1) & 1);
  set_bit(b, msb_pos + 1, code & 1);
}

int get_pair(const BiInfBits& b, long msb_pos) {
  return (bit_at(b, msb_pos) << 1) | bit_at(b, msb_pos + 1);
}

}  // namespace

BiInfBits config_to_bits(const TuringMachine& m, int k, const Configuration& c) {
  if (k < state_bit_count(m.states.size()))
    fail("ShapeMismatch", "k = " + std::to_string(k) + " cannot index the state set");
  size_t qi = 0;
  while (qi < m.states.size() && m.states[qi] != c.state) ++qi;
  if (qi == m.states.size()) fail("ShapeMismatch", "unknown state " + c.state);
  BiInfBits b;
  put_pair(b, 0, c.left.empty() ? 0 : symbol_code(m, c.left[0]));
  for (int i = 0; i < k; ++i) set_bit(b, 2 + i, (qi >> (k - 1 - i)) & 1);
  put_pair(b, k + 2, c.right.empty() ? 0 : symbol_code(m, c.right[0]));
  for (size_t t = 1; t < c.right.size(); ++t)
    put_pair(b, k + 2 + 2 * static_cast<long>(t), symbol_code(m, c.right[t]));
  for (size_t j = 1; j < c.left.size(); ++j)
    put_pair(b, -2 * static_cast<long>(j), symbol_code(m, c.left[j]));
  return canonical_bits(b);
}

Configuration bits_to_config(const TuringMachine& m, int k, const BiInfBits& b) {
  long rmax = static_cast<long>(b.right.size());
  long lmax = static_cast<long>(b.left.size());
  size_t qi = 0;
  for (int i = 0; i < k; ++i) qi = (qi << 1) | static_cast<unsigned>(bit_at(b, 2 + i));
  if (qi >= m.states.size()) fail("MalformedLayout", "state code out of range");
  Configuration c;
  c.state = m.states[qi];
  // right side: head cell then the chain outward; a blank code with more
  // content beyond it cannot come from a tape
  bool ended = false;
  for (long pos = k + 2; pos < rmax; pos += 2) {
    int code = get_pair(b, pos);
    if (code == 0) {
      ended = true;
      continue;
    }
    if (ended) fail("MalformedLayout", "blank code 00 interior to a tape segment");
    c.right += symbol_from_code(m, code);
  }
  int c0 = get_pair(b, 0);
  std::string deep;
  ended = (c0 == 0);
  for (long pos = -2; pos >= -lmax - 1; pos -= 2) {
    int code = get_pair(b, pos);
    if (code == 0) {
      ended = true;
      continue;
    }
    if (ended) fail("MalformedLayout", "blank code 00 interior to a tape segment");
    deep += symbol_from_code(m, code);
  }
  c.left = (c0 == 0 ? std::string() : std::string(1, symbol_from_code(m, c0))) + deep;
  return canonicalize(c);
}

GeneralizedShift tm_to_genshift(const TuringMachine& m) {
  int k = state_bit_count(m.states.size());
  GeneralizedShift gs;
  gs.k = k;
  gs.F_table.assign(1u << (k + 2), 0);
  gs.G_table.assign(1u << (k + 4), 0);
  for (uint32_t f = 0; f < gs.F_table.size(); ++f) {
    auto fbit = [&](int i) { return static_cast<int>((f >> i) & 1); };
    size_t qi = 0;
    for (int i = 0; i < k; ++i) qi = (qi << 1) | static_cast<unsigned>(fbit(i));
    int head = (fbit(k) << 1) | fbit(k + 1);
    if (qi >= m.states.size() || head > static_cast<int>(m.alphabet.size())) continue;
    if (m.halt.count(m.states[qi])) continue;
    auto it = m.delta.find({m.states[qi], symbol_from_code(m, head)});
    if (it == m.delta.end()) fail("IncompleteDelta", m.states[qi]);
    gs.F_table[f] = it->second.move == 'R' ? 2 : it->second.move == 'L' ? -2 : 0;
  }
  for (uint32_t w = 0; w < gs.G_table.size(); ++w) {
    auto wbit = [&](int i) { return static_cast<int>((w >> i) & 1); };
    int c0 = (wbit(0) << 1) | wbit(1);
    size_t qi = 0;
    for (int i = 0; i < k; ++i) qi = (qi << 1) | static_cast<unsigned>(wbit(2 + i));
    int head = (wbit(k + 2) << 1) | wbit(k + 3);
    uint32_t out = w;  // identity on windows no tape encoding reaches
    bool valid = qi < m.states.size() && head <= static_cast<int>(m.alphabet.size()) &&
                 c0 <= static_cast<int>(m.alphabet.size());
    if (valid && !m.halt.count(m.states[qi])) {
      char sym = symbol_from_code(m, head);
      auto it = m.delta.find({m.states[qi], sym});
      if (it == m.delta.end()) fail("IncompleteDelta", m.states[qi] + "," + std::string(1, sym));
      const TmRule& r = it->second;
      int wc = symbol_code(m, r.write);
      size_t q2 = 0;
      while (q2 < m.states.size() && m.states[q2] != r.next) ++q2;
      auto pack = [&](int pos, int bit) { out = (out & ~(1u << pos)) | (uint32_t(bit) << pos); };
      auto pack_pair = [&](int pos, int code) {
        pack(pos, (code >> 1) & 1);
        pack(pos + 1, code & 1);
      };
      auto pack_state = [&](int pos, size_t q) {
        for (int i = 0; i < k; ++i) pack(pos + i, (q >> (k - 1 - i)) & 1);
      };
      out = 0;
      if (r.move == 'S') {
        pack_pair(0, c0);
        pack_state(2, q2);
        pack_pair(k + 2, wc);
      } else if (r.move == 'R') {
        pack_pair(0, c0);
        pack_pair(2, wc);
        pack_state(4, q2);
      } else {
        pack_state(0, q2);
        pack_pair(k, c0);
        pack_pair(k + 2, wc);
      }
    }
    gs.G_table[w] = out;
  }
  return gs;
}

BiInfBits genshift_apply(const GeneralizedShift& gs, const BiInfBits& b) {
  int k = gs.k;
  uint32_t widx = 0, fidx = 0;
  for (int i = 0; i < k + 4; ++i) widx |= static_cast<uint32_t>(bit_at(b, i)) << i;
  fidx = widx >> 2;
  uint32_t g = gs.G_table[widx];
  BiInfBits rew = b;
  for (int i = 0; i < k + 4; ++i) set_bit(rew, i, (g >> i) & 1);
  return shift_bits(rew, gs.F_table[fidx]);
}

ConjugacyReport verify_conjugacy(const TuringMachine& m, const GeneralizedShift& gs,
                                 const std::vector<Configuration>& configs) {
  ConjugacyReport rep;
  for (auto& c : configs) {
    ++rep.checked;
    BiInfBits lhs = genshift_apply(gs, config_to_bits(m, gs.k, c));
    BiInfBits rhs = config_to_bits(m, gs.k, tm_step(m, c));
    if (!(lhs == rhs)) rep.failures.push_back(c);
  }
  return rep;
}

std::string genshift_dump(const GeneralizedShift& gs) {
  std::ostringstream out;
  out << "k: " << gs.k << "\n";
  auto bits = [](uint32_t v, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += char('0' + ((v >> i) & 1));
    return s;
  };
  for (uint32_t i = 0; i < gs.F_table.size(); ++i)
    out << "F " << bits(i, gs.k + 2) << " = " << gs.F_table[i] << "\n";
  for (uint32_t i = 0; i < gs.G_table.size(); ++i)
    out << "G " << bits(i, gs.k + 4) << " = " << bits(gs.G_table[i], gs.k + 4) << "\n";
  return out.str();
}

}  // namespace cdsw
