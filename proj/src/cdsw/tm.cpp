#include "cdsw/tm.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace cdsw {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Configuration canonicalize(Configuration c) {
  while (!c.left.empty() && c.left.back() == kBlank) c.left.pop_back();
  while (!c.right.empty() && c.right.back() == kBlank) c.right.pop_back();
  return c;
}

std::string config_str(const Configuration& c) {
  std::string out;
  if (!c.left.empty()) {
    out.assign(c.left.rbegin(), c.left.rend());
    out += ' ';
  }
  out += c.state;
  if (!c.right.empty()) {
    out += ' ';
    out += c.right;
  }
  return out;
}

bool TuringMachine::is_state(const std::string& q) const {
  return std::find(states.begin(), states.end(), q) != states.end();
}

TuringMachine parse_machine(const std::string& text) {
  TuringMachine m;
  std::istringstream in(text);
  std::string raw;
  std::vector<std::array<std::string, 2>> pending;  // lhs, rhs of rule lines
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    auto arrow = line.find("->");
    if (arrow != std::string::npos) {
      pending.push_back({strip(line.substr(0, arrow)), strip(line.substr(arrow + 2))});
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("BadMachineLine", line + where());
    std::string key = strip(line.substr(0, colon));
    auto vals = split_ws(line.substr(colon + 1));
    if (key == "states") {
      for (auto& v : vals) {
        if (m.is_state(v)) fail("DuplicateState", v + where());
        m.states.push_back(v);
      }
    } else if (key == "alphabet") {
      for (auto& v : vals) {
        if (v.size() != 1) fail("BadSymbol", v + where());
        char c = v[0];
        if (c == kBlank) fail("BadSymbol", "blank cannot be listed" + where());
        if (m.alphabet.find(c) != std::string::npos) fail("DuplicateSymbol", v + where());
        m.alphabet += c;
      }
    } else if (key == "start") {
      if (vals.size() != 1) fail("BadMachineLine", line + where());
      m.start = vals[0];
    } else if (key == "halt") {
      for (auto& v : vals) m.halt.insert(v);
    } else {
      fail("BadMachineLine", line + where());
    }
  }
  if (m.states.empty()) fail("BadMachine", "no states");
  if (!m.is_state(m.start)) fail("BadMachine", "start state '" + m.start + "' not declared");
  for (auto& h : m.halt)
    if (!m.is_state(h)) fail("BadMachine", "halt state '" + h + "' not declared");
  for (auto& [lhs, rhs] : pending) {
    auto c1 = lhs.find(',');
    if (c1 == std::string::npos || lhs.size() < c1 + 2) fail("BadRule", lhs + " -> " + rhs);
    std::string q = strip(lhs.substr(0, c1));
    std::string symtok = strip(lhs.substr(c1 + 1));
    auto c2 = rhs.find(',');
    auto c3 = rhs.rfind(',');
    if (c2 == std::string::npos || c3 == c2) fail("BadRule", lhs + " -> " + rhs);
    std::string q2 = strip(rhs.substr(0, c2));
    std::string wtok = strip(rhs.substr(c2 + 1, c3 - c2 - 1));
    std::string mtok = strip(rhs.substr(c3 + 1));
    if (symtok.size() != 1 || wtok.size() != 1 || mtok.size() != 1)
      fail("BadRule", lhs + " -> " + rhs);
    char sym = symtok[0], wr = wtok[0], mv = mtok[0];
    if (!m.is_state(q) || !m.is_state(q2)) fail("BadRule", "unknown state in " + lhs + " -> " + rhs);
    if (!m.is_symbol(sym)) fail("BadSymbol", symtok);
    if (wr == kBlank) fail("BlankWrite", lhs + " -> " + rhs);
    if (!m.is_symbol(wr)) fail("BadSymbol", wtok);
    if (mv != 'L' && mv != 'R' && mv != 'S') fail("BadRule", "move " + mtok);
    if (m.halt.count(q) && !(q2 == q && wr == sym && mv == 'S'))
      fail("HaltRuleNotSelfLoop", lhs + " -> " + rhs);
    auto key = std::make_pair(q, sym);
    if (m.delta.count(key)) fail("DuplicateRule", lhs);
    m.delta[key] = TmRule{q2, wr, mv};
  }
  // halting states absorb: implicit self-loops where no rule was written.
  // A halt state never writes, so the blank-write ban stays intact by
  // leaving (halt, _) ruleless; tm_step treats missing halt rules as stay.
  for (auto& q : m.states) {
    if (m.halt.count(q)) continue;
    for (char s : m.alphabet + kBlank)
      if (!m.delta.count({q, s}))
        fail("IncompleteDelta", q + "," + std::string(1, s) + " has no rule");
  }
  return m;
}

TuringMachine load_machine(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("FileNotFound", path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_machine(ss.str());
}

std::string machine_str(const TuringMachine& m) {
  std::ostringstream out;
  out << "states:";
  for (auto& q : m.states) out << ' ' << q;
  out << "\nalphabet:";
  for (char c : m.alphabet) out << ' ' << c;
  out << "\nstart: " << m.start << "\nhalt:";
  for (auto& q : m.halt) out << ' ' << q;
  out << "\n";
  for (auto& [k, r] : m.delta)
    out << k.first << ',' << k.second << " -> " << r.next << ',' << r.write << ',' << r.move
        << "\n";
  return out.str();
}

Configuration parse_config(const TuringMachine& m, const std::string& text) {
  auto toks = split_ws(text);
  int state_at = -1;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (m.is_state(toks[i])) {
      if (state_at >= 0) fail("BadConfig", "two state names in '" + text + "'");
      state_at = static_cast<int>(i);
    }
  }
  if (state_at < 0) fail("BadConfig", "no state name in '" + text + "'");
  std::string left_disp, right;
  for (int i = 0; i < state_at; ++i) left_disp += toks[i];
  for (size_t i = state_at + 1; i < toks.size(); ++i) right += toks[i];
  for (char c : left_disp + right)
    if (!m.is_symbol(c)) fail("BadSymbol", std::string(1, c) + " in '" + text + "'");
  Configuration c;
  c.left.assign(left_disp.rbegin(), left_disp.rend());
  c.state = toks[state_at];
  c.right = right;
  return canonicalize(c);
}

Configuration tm_step(const TuringMachine& m, const Configuration& c) {
  char sym = c.right.empty() ? kBlank : c.right[0];
  auto it = m.delta.find({c.state, sym});
  if (it == m.delta.end()) {
    if (m.halt.count(c.state)) return c;
    fail("IncompleteDelta", c.state + "," + std::string(1, sym));
  }
  const TmRule& r = it->second;
  std::string rest = c.right.empty() ? "" : c.right.substr(1);
  Configuration n;
  n.state = r.next;
  if (r.move == 'S') {
    n.left = c.left;
    n.right = r.write + rest;
  } else if (r.move == 'R') {
    n.left = r.write + c.left;
    n.right = rest;
  } else {
    char nearest = c.left.empty() ? kBlank : c.left[0];
    n.left = c.left.empty() ? "" : c.left.substr(1);
    n.right = std::string(1, nearest) + r.write + rest;
  }
  return canonicalize(n);
}

RunResult machine_run(const TuringMachine& m, Configuration c, long max_steps) {
  c = canonicalize(c);
  long used = 0;
  while (used < max_steps && !m.halt.count(c.state)) {
    c = tm_step(m, c);
    ++used;
  }
  return {c, used, m.halt.count(c.state) > 0};
}

std::vector<Configuration> enumerate_configs(const TuringMachine& m, int tape_len_bound,
                                             bool interior_blanks, long cap) {
  std::string cells = m.alphabet;
  if (interior_blanks) cells += kBlank;
  // tapes of length l with a non-blank deep cell, built shallow-to-deep
  auto side_strings = [&](int l) {
    std::vector<std::string> out{""};
    for (int i = 0; i < l; ++i) {
      std::vector<std::string> next;
      for (auto& s : out)
        for (char c : cells) next.push_back(s + c);
      out = std::move(next);
    }
    std::vector<std::string> keep;
    for (auto& s : out)
      if (s.empty() || s.back() != kBlank) keep.push_back(s);
    return keep;
  };
  std::vector<Configuration> res;
  for (int n = 0; n <= tape_len_bound; ++n) {
    for (int l = 0; l <= n; ++l) {
      auto lefts = side_strings(l);
      auto rights = side_strings(n - l);
      for (auto& L : lefts)
        for (auto& R : rights)
          for (auto& q : m.states) {
            if (static_cast<long>(res.size()) >= cap)
              fail("ResourceBudgetExceeded", "config enumeration cap " + std::to_string(cap));
            res.push_back(Configuration{L, q, R});
          }
    }
  }
  return res;
}

AbstractMachine wrap_tm(const TuringMachine& m) {
  auto mp = std::make_shared<TuringMachine>(m);
  AbstractMachine a;
  a.name = "tm";
  a.step = [mp](const Configuration& c) { return tm_step(*mp, c); };
  a.enumerate = [mp](int bound) { return enumerate_configs(*mp, bound); };
  return a;
}

AbstractMachine make_plus() {
  AbstractMachine a;
  a.name = "plus";
  a.step = [](const Configuration& c) {
    Configuration n = c;
    n.right += '1';
    return n;
  };
  a.enumerate = [](int bound) {
    std::vector<Configuration> out;
    for (int l = 0; l <= bound; ++l) out.push_back({"", "p", std::string(l, '1')});
    return out;
  };
  return a;
}

AbstractMachine make_identity() {
  AbstractMachine a;
  a.name = "identity";
  a.step = [](const Configuration& c) { return c; };
  a.enumerate = [](int bound) {
    std::vector<Configuration> out;
    for (int l = 0; l <= bound; ++l) out.push_back({"", "s", std::string(l, '1')});
    return out;
  };
  return a;
}

PeriodicReport find_periodic(const AbstractMachine& m, int tape_len_bound, long step_cap,
                             int growth_bound) {
  if (growth_bound < 0) growth_bound = tape_len_bound * 4 + 16;
  PeriodicReport rep;
  auto tape_len = [](const Configuration& c) {
    return static_cast<int>(c.left.size() + c.right.size());
  };
  for (auto& c0 : m.enumerate(tape_len_bound)) {
    ++rep.examined;
    std::map<Configuration, long> seen;
    Configuration cur = c0;
    long i = 0;
    for (;;) {
      if (tape_len(cur) > growth_bound) {
        // an orbit that outgrows the budget is counted aperiodic; machines
        // that shrink back under the budget afterwards need a larger budget
        ++rep.escaped;
        break;
      }
      auto it = seen.find(cur);
      if (it != seen.end()) {
        if (it->second == 0) rep.periodic.push_back({c0, i});
        break;
      }
      if (i > step_cap)
        fail("ResourceBudgetExceeded",
             "orbit of " + config_str(c0) + " unresolved after " + std::to_string(step_cap));
      seen[cur] = i;
      cur = m.step(cur);
      ++i;
    }
  }
  return rep;
}

DiscreteCdsWitness compose_witness(const DiscreteCdsWitness& outer,
                                   const DiscreteCdsWitness& inner) {
  if (outer.inner_tag != inner.outer_tag)
    fail("MachineMismatch", "outer witness does not simulate the inner witness's simulator");
  DiscreteCdsWitness w;
  w.inner_tag = inner.inner_tag;
  w.outer_tag = outer.outer_tag;
  w.inner_step = inner.inner_step;
  w.outer_step = outer.outer_step;
  w.encode = [eo = outer.encode, ei = inner.encode](const Configuration& s) {
    return eo(ei(s));
  };
  w.decode = [douter = outer.decode,
              dinner = inner.decode](const Configuration& x) -> std::optional<Configuration> {
    auto mid = douter(x);
    if (!mid) return std::nullopt;
    return dinner(*mid);
  };
  w.slowdown = [inner, outer](const Configuration& s) {
    Configuration mid = inner.encode(s);
    long total = 0;
    long tin = inner.slowdown(s);
    for (long i = 0; i < tin; ++i) {
      total += outer.slowdown(mid);
      mid = outer.inner_step(mid);
    }
    return total;
  };
  w.encoder_bound = std::max(outer.encoder_bound, inner.encoder_bound);
  w.decoder_bound = std::max(outer.decoder_bound, inner.decoder_bound);
  return w;
}

std::vector<WitnessFailure> verify_witness(const DiscreteCdsWitness& w,
                                           const std::vector<Configuration>& configs,
                                           int horizon) {
  std::vector<WitnessFailure> fails;
  for (auto& s0 : configs) {
    Configuration x = w.encode(s0);
    auto d0 = w.decode(x);
    if (!d0 || !(*d0 == s0)) {
      fails.push_back({s0, -1, "decode(encode(s)) != s"});
      continue;
    }
    Configuration s = s0;
    for (int t = 0; t < horizon; ++t) {
      long tau = w.slowdown(s);
      for (long i = 0; i < tau; ++i) x = w.outer_step(x);
      s = w.inner_step(s);
      auto d = w.decode(x);
      if (!d || !(*d == s)) {
        fails.push_back({s0, t, "trace diverges after slowdown steps"});
        break;
      }
    }
  }
  return fails;
}

}  // namespace cdsw
