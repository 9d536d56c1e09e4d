// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Thresholds and time budgets are pinned here on purpose.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cdsw/bssc.hpp"
#include "cdsw/codec.hpp"
#include "cdsw/disk.hpp"
#include "cdsw/genshift.hpp"
#include "cdsw/polygon.hpp"
#include "cdsw/rootsep.hpp"
#include "cdsw/symdyn.hpp"
#include "cdsw/tm.hpp"
#include "cdsw/verify.hpp"

using namespace cdsw;

namespace {

const CodecParams kP{1, 256};

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

// 1. Iterating the box map once per machine step keeps every traced
//    configuration's region inside the region of its successor, over a
//    deep enumeration and a long horizon.
void crit_simulation(Check& c) {
  for (const char* name : {"inc2.tm", "flipflop.tm"}) {
    TuringMachine m = load_machine(fx(name));
    DiskMapSpec spec = build_disk_map(m, kP);
    CdsBundle b{&spec, &m, kP, 1};
    auto configs = enumerate_configs(m, 4, true);
    VerifyReport rep = verify_cds(b, configs, 25);
    c.require(rep.configs == static_cast<long>(configs.size()) && rep.configs > 500,
              std::string(name) + ": enumeration came up short");
    c.require(rep.steps_checked > rep.configs, std::string(name) + ": horizon not exercised");
    c.require(rep.ok(), std::string(name) + ": " +
                            (rep.failures.empty() ? "?" : rep.failures[0].reason));
  }
}

// 2. Points sampled from region interiors, not just centers, stay inside
//    the traced regions and decode back to the traced configurations.
void crit_robustness(Check& c) {
  for (const char* name : {"inc2.tm", "flipflop.tm"}) {
    TuringMachine m = load_machine(fx(name));
    DiskMapSpec spec = build_disk_map(m, kP);
    CdsBundle b{&spec, &m, kP, 1};
    auto configs = enumerate_configs(m, 2, false);
    c.require(configs.size() > 20, std::string(name) + ": strict enumeration too small");
    long samples = 0, correct = 0;
    for (size_t i = 0; i < configs.size(); ++i) {
      ProbeReport pr = robustness_probe(b, configs[i], 100, 1000 + i, 10);
      samples += pr.samples;
      correct += pr.correct;
      if (pr.correct != pr.samples) {
        c.require(false, std::string(name) + " " + config_str(configs[i]) + ": " +
                             (pr.notes.empty() ? "sample drifted" : pr.notes[0]));
        return;
      }
    }
    c.require(samples == correct && samples >= 100 * static_cast<long>(configs.size()),
              std::string(name) + ": probe undercounted");
  }
}

// 3. The bit-level shift dynamics commute with the tape encoding on an
//    exhaustive configuration family for every bundled machine.
void crit_conjugacy(Check& c) {
  long checked = 0;
  for (const char* name : {"inc2.tm", "flipflop.tm", "plus.tm", "lshift.tm"}) {
    TuringMachine m = load_machine(fx(name));
    GeneralizedShift gs = tm_to_genshift(m);
    auto configs = enumerate_configs(m, 5, true);
    ConjugacyReport rep = verify_conjugacy(m, gs, configs);
    c.require(rep.failures.empty(),
              std::string(name) + ": " + std::to_string(rep.failures.size()) + " mismatches");
    c.require(rep.checked == static_cast<long>(configs.size()),
              std::string(name) + ": skipped configs");
    checked += rep.checked;
  }
  c.require(checked > 4000, "family too small to be convincing");
}

// 4. Unit-determinant torus maps conserve area exactly, and measure
//    pigeonholes refuse demands that outrun the available measure; an
//    aperiodic machine is exactly such a demand.
void crit_measure(Check& c) {
  LinearToralMap cat{2, 1, 1, 1};
  Region b1{{Rat(0), Rat(1, 4)}, {Rat(0), Rat(1, 4)}};
  Region b2{{Rat(1, 3), Rat(2, 3)}, {Rat(0), Rat(1, 2)}};
  Region unit{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}};
  for (const Region& box : {b1, b2})
    for (int n = 0; n <= 10; ++n) {
      auto pieces = toral_iterate(cat, box, n);
      Rat total = 0;
      bool inside = true;
      for (auto& p : pieces) {
        total += poly_area(p);
        inside = inside && poly_inside_box(p, unit);
      }
      c.require(total == box.area(), "area drifted at iterate " + std::to_string(n));
      c.require(inside, "piece escaped the fundamental domain at " + std::to_string(n));
    }

  auto verdict = [&](Rat total, std::vector<Rat> areas, std::optional<BigInt> want) {
    return measure_census({total, std::move(areas), true}, std::move(want));
  };
  c.require(verdict(1, {Rat(1, 9)}, BigInt(9)).feasible, "9 ninths should fit");
  c.require(!verdict(1, {Rat(1, 9)}, BigInt(10)).feasible, "10 ninths cannot fit");
  c.require(verdict(1, {Rat(1, 9)}, BigInt(9)).bound == 9, "bound for ninths is 9");
  c.require(verdict(2, {Rat(1, 2), Rat(1, 3), Rat(1, 5)}, BigInt(10)).feasible,
            "ten fifths fit in measure two");
  c.require(!verdict(2, {Rat(1, 2), Rat(1, 3), Rat(1, 5)}, BigInt(11)).feasible,
            "eleven fifths cannot fit in measure two");
  c.require(!verdict(1, {Rat(1, 9)}, std::nullopt).feasible,
            "an endless demand can never fit");

  PeriodicReport pr = find_periodic(make_plus(), 2, 200000, 6);
  c.require(pr.escaped > 0 && pr.periodic.empty(),
            "the append-only machine should escape every growth budget");
}

// 5. First overlap times of iterated images are hit exactly, with
//    minimality certified by the shorter-horizon miss.
void crit_mixing(Check& c) {
  LinearToralMap cat{2, 1, 1, 1};
  Region u{{Rat(0), Rat(1, 4)}, {Rat(0), Rat(1, 4)}};
  Region v{{Rat(1, 2), Rat(3, 4)}, {Rat(1, 2), Rat(3, 4)}};
  auto hit = mixing_first_hit(cat, u, v, 10);
  c.require(hit.has_value() && *hit == 3, "corner-to-center first hit should be 3");
  c.require(!mixing_first_hit(cat, u, v, 2).has_value(), "horizon 2 must miss");
  Region w{{Rat(0), Rat(1, 2)}, {Rat(0), Rat(1, 2)}};
  auto zero = mixing_first_hit(cat, u, w, 10);
  c.require(zero.has_value() && *zero == 0, "overlapping sets hit at 0");
  Region v2{{Rat(1, 4), Rat(1)}, {Rat(1, 4), Rat(1)}};
  auto near = mixing_first_hit(cat, u, v2, 10);
  c.require(near.has_value() && *near <= 3, "a fatter target cannot be slower");
}

// 6. Closed-form lower bounds on root separation, determinant size, and
//    root magnitude hold against exact computation on random draws.
void crit_bounds(Check& c) {
  std::mt19937_64 rng(20260817);
  auto coeff = [&](int mag) { return Rat(static_cast<long>(rng() % (2 * mag + 1)) - mag); };
  auto draw_poly = [&](int dmin, int dmax, int mag) {
    long d = dmin + static_cast<long>(rng() % (dmax - dmin + 1));
    RatPoly p(d + 1, Rat(0));
    for (long i = 0; i <= d; ++i) p[i] = coeff(mag);
    while (p[d] == 0) p[d] = coeff(mag);
    return p;
  };

  Interval window{Rat(-1), Rat(1)};
  int accepted = 0;
  long attempts = 0;
  while (accepted < 300 && attempts < 100000) {
    ++attempts;
    RatPoly p = draw_poly(2, 6, 20);
    if (poly_deg(poly_gcd(p, poly_derivative(p))) > 0) continue;  // keep draws squarefree
    if (isolate_real_roots(p, window, Rat(1, 4)).size() < 2) continue;
    SepBracket br = rsep_exact(p, window);
    c.require(br.lower > 0 && br.lower <= br.upper, "bracket inverted: " + poly_str(p));
    c.require(rsep_lower_bound(p) <= br.upper, "separation bound too large: " + poly_str(p));
    ++accepted;
  }
  c.require(accepted == 300, "not enough multi-root draws: " + std::to_string(accepted));

  for (int t = 0; t < 200; ++t) {
    size_t n = 1 + rng() % 3;
    PolyMatrix m(n, std::vector<RatPoly>(n));
    for (auto& row : m)
      for (auto& e : row) e = draw_poly(0, 2, 5);
    c.require(seminorm_1(polymatrix_det(m)) <= hadamard_bound(m),
              "determinant outgrew its row bound");
  }

  for (int t = 0; t < 200; ++t) {
    RatPoly p = draw_poly(1, 6, 20);
    Rat b = cauchy_bound(p);
    c.require(sturm_count(p, -b, b) == sturm_count(p, -1000000 * b, 1000000 * b),
              "a real root escaped the magnitude bound: " + poly_str(p));
  }
}

// 7. The doubly exponential reachability bound and the minimal mixing
//    step count match first-principles recomputation.
void crit_growth(Check& c) {
  c.require(halting_bound_1d(3, Rat(2)) == Rat(256), "2^(2^3) should be 256");
  for (long n = 0; n < 5; ++n) {
    Rat prev = halting_bound_1d(n, Rat(3, 2));
    c.require(halting_bound_1d(n + 1, Rat(3, 2)) == prev * prev,
              "tower should square at level " + std::to_string(n));
  }

  std::mt19937_64 rng(7777);
  for (int t = 0; t < 10; ++t) {
    Rat C(1 + static_cast<long>(rng() % 5));
    Rat q(2 + static_cast<long>(rng() % 3));
    long a = 1 + static_cast<long>(rng() % 5);
    long bden = a + 1 + static_cast<long>(rng() % 3);
    Rat r(a, bden);
    long n = static_cast<long>(rng() % 5);
    long N = anosov_mixing_steps({C, {q, true}, r, n});
    Rat target = C / rat_pow(r, n);
    c.require(rat_pow(q, N) > target, "returned step misses the target");
    c.require(N == 0 || rat_pow(q, N - 1) <= target, "an earlier step already worked");
  }
  for (int t = 0; t < 10; ++t) {
    Rat kappa(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
    Rat C(1 + static_cast<long>(rng() % 5));
    long a = 1 + static_cast<long>(rng() % 5);
    long bden = a + 1 + static_cast<long>(rng() % 3);
    Rat r(a, bden);
    long n = static_cast<long>(rng() % 5);
    long N = anosov_mixing_steps({C, {kappa, false}, r, n});
    Rat target = C / rat_pow(r, n);
    auto exceeds = [&](long steps, bool& decided) {
      if (steps == 0) {
        decided = true;
        return Rat(1) > target;
      }
      Rat lo, hi;
      for (unsigned terms = 16; terms <= 1u << 14; terms *= 2) {
        exp_bounds(kappa * steps, terms, lo, hi);
        if (lo > target) {
          decided = true;
          return true;
        }
        if (hi <= target) {
          decided = true;
          return false;
        }
      }
      decided = false;
      return false;
    };
    bool d1 = false, d2 = false;
    bool at_n = exceeds(N, d1);
    bool before = N > 0 && exceeds(N - 1, d2);
    c.require(d1 && at_n, "series bracket rejects the returned step");
    c.require(N == 0 || (d2 && !before), "series bracket accepts an earlier step");
  }
}

// 8. The register programs reproduce the codec's digit arithmetic on
//    random rays, with exactly affine step counts in the digit count;
//    the value-stepped decoder fails the same fit.
void crit_programs(Check& c) {
  HybridProgram dec = load_bss(fx("decode_x.bss"));
  HybridProgram enc = load_bss(fx("encode_x.bss"));
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 200; ++t) {
    long len = static_cast<long>(rng() % 9);
    BiInfBits bits;
    for (long j = 0; j + 1 < len; ++j) set_bit(bits, j, rng() % 2);
    if (len > 0) set_bit(bits, len - 1, 1);
    Rat x = bits_encode(bits).x;

    AxisDigits ref = extract_digits(x, 256);
    VMState ds = vm_init(dec);
    ds.real_tape[0] = x;
    VMState dout = vm_run(dec, ds, 1000);
    c.require(dout.step_count == len + 1, "extractor step count drifted");
    c.require(dout.step_count == ref.steps, "extractor disagrees with the codec clock");
    c.require(static_cast<long>(ref.digits.size()) == len, "codec digit count drifted");
    for (long j = 0; j < len; ++j) {
      auto it = dout.disc_tape.find(j);
      c.require(it != dout.disc_tape.end() && it->second == bit_at(bits, j) + 1,
                "extracted digit mismatch at " + std::to_string(j));
    }

    VMState es = vm_init(enc);
    for (long j = 0; j < len; ++j) es.disc_tape[j] = bit_at(bits, j) + 1;
    VMState eout = vm_run(enc, es, 1000);
    c.require(eout.real_tape.at(eout.head1) == x, "folded value missed the center");
    c.require(eout.step_count == 2 * len + 2, "folder step count drifted");
  }

  std::vector<std::pair<VMState, long>> din, ein, uin;
  for (int n = 1; n <= 6; ++n) {
    BiInfBits bits;
    for (int j = 0; j < n; ++j) set_bit(bits, j, 1);
    VMState s = vm_init(dec);
    s.real_tape[0] = bits_encode(bits).x;
    din.push_back({s, n});
  }
  ComplexityReport dr = measure_complexity(dec, din, 1000);
  c.require(dr.linear_fit_ok && dr.c == Rat(1) && dr.d == Rat(1),
            "extractor cost is not steps = digits + 1");
  for (int n = 0; n <= 5; ++n) {
    VMState s = vm_init(enc);
    for (int j = 0; j < n; ++j) s.disc_tape[j] = 2;
    ein.push_back({s, n});
  }
  ComplexityReport er = measure_complexity(enc, ein, 1000);
  c.require(er.linear_fit_ok && er.c == Rat(2) && er.d == Rat(2),
            "folder cost is not steps = 2 digits + 2");
  HybridProgram uncon = load_bss(fx("uncon_decoder.bss"));
  for (int n = 0; n <= 5; ++n) {
    VMState s = vm_init(uncon);
    s.real_tape[0] = rat_pow(Rat(1, 2), n);
    uin.push_back({s, 1});
  }
  c.require(!measure_complexity(uncon, uin, 1000).linear_fit_ok,
            "value-stepped decoder should not look size-bounded");
}

// 9. Word counts and acceptance agree across presentations: brute
//    enumeration, transfer-matrix counting, and label-graph walks.
void crit_languages(Check& c) {
  Sft gm = load_sft(fx("golden_mean.sft"));
  std::vector<BigInt> counts;
  for (long n = 0; n <= 20; ++n) counts.push_back(count_words(gm, n));
  for (long n = 0; n <= 12; ++n)
    c.require(counts[n] == count_words_brute(gm, n),
              "transfer count disagrees with brute force at " + std::to_string(n));
  for (long n = 2; n <= 20; ++n)
    c.require(counts[n] == counts[n - 1] + counts[n - 2],
              "second-order recurrence breaks at " + std::to_string(n));

  LabeledGraph even = load_graph(fx("even_shift.graph"));
  auto interior_runs_even = [](const std::string& w) {
    size_t i = 0;
    while (i < w.size()) {
      if (w[i] != '1') {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < w.size() && w[j] == '1') ++j;
      bool bounded = i > 0 && j < w.size();
      if (bounded && (j - i) % 2 != 0) return false;
      i = j;
    }
    return true;
  };
  long tested = 0;
  for (long len = 0; len <= 10; ++len) {
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::string w;
      for (long b = 0; b < len; ++b) w += (mask >> b) & 1 ? '1' : '0';
      c.require(sofic_accepts(even, w) == interior_runs_even(w),
                "graph acceptance disagrees on '" + w + "'");
      ++tested;
    }
  }
  c.require(tested == 2047, "word sweep incomplete");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    void (*run)(Check&);
  };
  const Criterion table[] = {
      {"box orbits track every machine step", 30.0, crit_simulation},
      {"interior samples decode to the traced run", 30.0, crit_robustness},
      {"bit dynamics commute with the tape encoding", 10.0, crit_conjugacy},
      {"areas are conserved; over-demands are refused", 20.0, crit_measure},
      {"first overlap times are exact and minimal", 10.0, crit_mixing},
      {"algebraic bounds hold on random draws", 60.0, crit_bounds},
      {"tower growth and mixing counts recompute", 5.0, crit_growth},
      {"register programs mirror the codec", 30.0, crit_programs},
      {"language counts agree across presentations", 10.0, crit_languages},
  };

  int failures = 0;
  int idx = 0;
  for (const auto& cr : table) {
    ++idx;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const Error& e) {
      c.ok = false;
      c.why = std::string("unexpected error ") + e.code + ": " + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= cr.limit_s;
    bool pass = c.ok && in_time;
    std::printf("[%d/9] %-48s %s (%.2fs / %.0fs)\n", idx, cr.name, pass ? "PASS" : "FAIL", secs,
                cr.limit_s);
    if (!pass) {
      ++failures;
      if (!c.ok) std::printf("      %s\n", c.why.c_str());
      if (!in_time) std::printf("      exceeded the time budget\n");
    }
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
