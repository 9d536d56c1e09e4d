#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdsw/error.hpp"

namespace cdsw {

inline constexpr char kBlank = '_';

// Two-sided tape. `left` is stored nearest-cell-first (left[0] sits just left
// of the head), `right` head-first (right[0] is under the head). Canonical
// form has no blank at the deep end of either side.
struct Configuration {
  std::string left;
  std::string state;
  std::string right;
  bool operator==(const Configuration& o) const {
    return left == o.left && state == o.state && right == o.right;
  }
  bool operator<(const Configuration& o) const {
    if (left != o.left) return left < o.left;
    if (state != o.state) return state < o.state;
    return right < o.right;
  }
};

Configuration canonicalize(Configuration c);
std::string config_str(const Configuration& c);

struct TmRule {
  std::string next;
  char write;
  char move;  // 'L', 'R', 'S'
};

struct TuringMachine {
  std::vector<std::string> states;
  std::string start;
  std::set<std::string> halt;
  std::string alphabet;  // non-blank symbols, in code order
  std::map<std::pair<std::string, char>, TmRule> delta;

  bool is_state(const std::string& q) const;
  bool is_symbol(char s) const { return s == kBlank || alphabet.find(s) != std::string::npos; }
};

// Text format: `states:`, `alphabet:`, `start:`, `halt:` headers, then one
// `q,sym -> q',sym',L|R|S` line per rule. `_` is read-side only; writing it
// is rejected. Halting states get implicit self-loops; explicit halt rules
// must already be self-loops.
TuringMachine parse_machine(const std::string& text);
TuringMachine load_machine(const std::string& path);
std::string machine_str(const TuringMachine& m);

// Splits on whitespace; exactly one token must name a state. Tokens left of
// it become the left tape (deep-first on screen), tokens right of it the
// right tape.
Configuration parse_config(const TuringMachine& m, const std::string& text);

Configuration tm_step(const TuringMachine& m, const Configuration& c);

struct RunResult {
  Configuration config;
  long steps_used;
  bool halted;
};

RunResult machine_run(const TuringMachine& m, Configuration c, long max_steps);

// All canonical configs with total tape length <= bound. With
// interior_blanks, blank cells away from the deep ends are included.
std::vector<Configuration> enumerate_configs(const TuringMachine& m, int tape_len_bound,
                                             bool interior_blanks = true,
                                             long cap = 2000000);

// A machine reduced to its step rule, for dynamics-level tooling that does
// not care about tapes and deltas.
struct AbstractMachine {
  std::string name;
  std::function<Configuration(const Configuration&)> step;
  std::function<std::vector<Configuration>(int)> enumerate;
};

AbstractMachine wrap_tm(const TuringMachine& m);
AbstractMachine make_plus();      // appends one '1' per step, never repeats
AbstractMachine make_identity();  // fixes everything

struct PeriodicOrbit {
  Configuration config;
  long period;  // minimal
};

struct PeriodicReport {
  std::vector<PeriodicOrbit> periodic;
  long examined = 0;
  long escaped = 0;  // orbits that outgrew the growth budget (counted aperiodic)
};

// Classifies every enumerated config with tape length <= tape_len_bound.
// An orbit that outgrows growth_bound is reported as escaped; one that
// neither cycles nor escapes within step_cap raises ResourceBudgetExceeded.
PeriodicReport find_periodic(const AbstractMachine& m, int tape_len_bound,
                             long step_cap = 200000, int growth_bound = -1);

// Machine-level simulation witness: `outer` simulates `inner` with a
// per-config slowdown. Tags identify the machines so compositions cannot
// be chained across mismatched middles.
struct DiscreteCdsWitness {
  const void* inner_tag;
  const void* outer_tag;
  std::function<Configuration(const Configuration&)> inner_step;
  std::function<Configuration(const Configuration&)> outer_step;
  std::function<Configuration(const Configuration&)> encode;
  std::function<std::optional<Configuration>(const Configuration&)> decode;
  std::function<long(const Configuration&)> slowdown;
  long encoder_bound;
  long decoder_bound;
};

// (outer simulates mid) o (mid simulates inner). The composed slowdown on s
// sums the outer slowdown along the mid orbit for one inner step; work
// bounds combine by max.
DiscreteCdsWitness compose_witness(const DiscreteCdsWitness& outer,
                                   const DiscreteCdsWitness& inner);

struct WitnessFailure {
  Configuration config;
  int step;
  std::string reason;
};

std::vector<WitnessFailure> verify_witness(const DiscreteCdsWitness& w,
                                           const std::vector<Configuration>& configs,
                                           int horizon);

}  // namespace cdsw
