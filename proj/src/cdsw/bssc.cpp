#include "cdsw/bssc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace cdsw {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

PolyExpr node(PolyExpr::Kind k, PolyExpr l, PolyExpr r) {
  PolyExpr e;
  e.kind = k;
  e.lhs = std::make_shared<PolyExpr>(std::move(l));
  e.rhs = std::make_shared<PolyExpr>(std::move(r));
  return e;
}

struct ExprParser {
  const std::string& s;
  size_t i = 0;

  char peek() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail("BadExpr", "expected '" + std::string(1, c) + "' in '" + s + "'");
    ++i;
  }

  PolyExpr sum() {
    PolyExpr e = product();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++i;
        e = node(c == '+' ? PolyExpr::Add : PolyExpr::Sub, std::move(e), product());
      } else {
        return e;
      }
    }
  }

  PolyExpr product() {
    PolyExpr e = unary();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++i;
        e = node(c == '*' ? PolyExpr::Mul : PolyExpr::Div, std::move(e), unary());
      } else {
        return e;
      }
    }
  }

  PolyExpr unary() {
    if (peek() == '-') {
      ++i;
      PolyExpr e;
      e.kind = PolyExpr::Neg;
      e.lhs = std::make_shared<PolyExpr>(unary());
      return e;
    }
    return postfix();
  }

  PolyExpr postfix() {
    PolyExpr e = atom();
    if (peek() == '^') {
      ++i;
      std::string digits;
      while (peek() >= '0' && peek() <= '9') digits += s[i++];
      if (digits.empty()) fail("BadExpr", "missing exponent in '" + s + "'");
      PolyExpr p;
      p.kind = PolyExpr::Pow;
      p.exponent = std::stol(digits);
      p.lhs = std::make_shared<PolyExpr>(std::move(e));
      return p;
    }
    return e;
  }

  PolyExpr atom() {
    char c = peek();
    if (c == '(') {
      ++i;
      PolyExpr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      PolyExpr e;
      e.kind = PolyExpr::Const;
      e.value = Rat(BigInt(digits));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) name += s[i++];
      PolyExpr e;
      e.kind = PolyExpr::Var;
      e.name = name;
      return e;
    }
    fail("BadExpr", "unexpected '" + std::string(1, c) + "' in '" + s + "'");
  }
};

Rat eval_expr(const PolyExpr& e, const std::function<Rat(const std::string&)>& env) {
  switch (e.kind) {
    case PolyExpr::Const: return e.value;
    case PolyExpr::Var: return env(e.name);
    case PolyExpr::Add: return eval_expr(*e.lhs, env) + eval_expr(*e.rhs, env);
    case PolyExpr::Sub: return eval_expr(*e.lhs, env) - eval_expr(*e.rhs, env);
    case PolyExpr::Mul: return eval_expr(*e.lhs, env) * eval_expr(*e.rhs, env);
    case PolyExpr::Div: {
      Rat d = eval_expr(*e.rhs, env);
      if (d == 0) fail("DivisionByZero", "in a transition expression");
      return eval_expr(*e.lhs, env) / d;
    }
    case PolyExpr::Neg: return -eval_expr(*e.lhs, env);
    case PolyExpr::Pow: return rat_pow(eval_expr(*e.lhs, env), e.exponent);
  }
  fail("BadExpr", "corrupt expression node");
}

}  // namespace

PolyExpr parse_expr(const std::string& text) {
  ExprParser p{text};
  PolyExpr e = p.sum();
  if (p.peek() != '\0') fail("BadExpr", "trailing input in '" + text + "'");
  return e;
}

namespace {

GuardAtom parse_guard_atom(const std::string& text) {
  GuardAtom g;
  size_t pos;
  if ((pos = text.find(">=")) != std::string::npos) {
    g.op = 'G';
    g.lhs = parse_expr(text.substr(0, pos));
    if (strip(text.substr(pos + 2)) != "0") fail("BadGuard", text);
  } else if ((pos = text.find('>')) != std::string::npos) {
    g.op = '>';
    g.lhs = parse_expr(text.substr(0, pos));
    if (strip(text.substr(pos + 1)) != "0") fail("BadGuard", text);
  } else if ((pos = text.find('=')) != std::string::npos) {
    g.op = '=';
    g.lhs = parse_expr(text.substr(0, pos));
    if (strip(text.substr(pos + 1)) != "0") fail("BadGuard", text);
  } else {
    fail("BadGuard", "no comparison in '" + text + "'");
  }
  return g;
}

char parse_move(const std::string& t) {
  std::string v = strip(t);
  if (v != "L" && v != "R" && v != "S") fail("BadMove", v);
  return v[0];
}

Transition parse_transition(const std::string& line) {
  Transition tr;
  auto arrow = line.find("->");
  if (line.rfind("if", 0) != 0 || arrow == std::string::npos) fail("BadTransition", line);
  std::string guard_part = line.substr(2, arrow - 2);
  size_t start = 0;
  while (true) {
    auto amp = guard_part.find('&', start);
    std::string atom = guard_part.substr(start, amp == std::string::npos ? amp : amp - start);
    tr.guards.push_back(parse_guard_atom(strip(atom)));
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  std::string rest = line.substr(arrow + 2);
  std::vector<std::string> parts;
  size_t p = 0;
  while (true) {
    auto semi = rest.find(';', p);
    parts.push_back(strip(rest.substr(p, semi == std::string::npos ? semi : semi - p)));
    if (semi == std::string::npos) break;
    p = semi + 1;
  }
  if (parts.size() != 3) fail("BadTransition", "want '-> updates; move; goto' in '" + line + "'");
  if (!parts[0].empty()) {
    size_t q = 0;
    while (true) {
      auto comma = parts[0].find(',', q);
      std::string upd = strip(parts[0].substr(q, comma == std::string::npos ? comma : comma - q));
      Update u;
      if (upd.rfind("erase", 0) == 0) {
        u.erase = true;
        u.var = strip(upd.substr(5));
        if (u.var != "r" && u.var != "d") fail("BadUpdate", upd);
      } else {
        auto asg = upd.find(":=");
        if (asg == std::string::npos) fail("BadUpdate", upd);
        u.var = strip(upd.substr(0, asg));
        u.expr = parse_expr(upd.substr(asg + 2));
      }
      tr.updates.push_back(std::move(u));
      if (comma == std::string::npos) break;
      q = comma + 1;
    }
  }
  if (parts[1].rfind("move", 0) != 0) fail("BadTransition", "missing move in '" + line + "'");
  std::string moves = parts[1].substr(4);
  auto comma = moves.find(',');
  if (comma == std::string::npos) fail("BadTransition", "move wants two tapes");
  tr.move1 = parse_move(moves.substr(0, comma));
  tr.move2 = parse_move(moves.substr(comma + 1));
  if (parts[2] == "halt" || parts[2] == "goto halt") {
    tr.halts = true;
  } else if (parts[2].rfind("goto", 0) == 0) {
    tr.next = strip(parts[2].substr(4));
  } else {
    fail("BadTransition", "missing goto/halt in '" + line + "'");
  }
  return tr;
}

}  // namespace

HybridProgram parse_bss(const std::string& text) {
  HybridProgram prog;
  std::istringstream in(text);
  std::string raw;
  StateBlock* cur = nullptr;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.rfind("alphabet:", 0) == 0) {
      prog.d_alphabet = std::stoi(strip(line.substr(9)));
      if (prog.d_alphabet < 2) fail("BadProgram", "alphabet needs at least blank and one symbol");
    } else if (line.rfind("registers:", 0) == 0) {
      prog.n_registers = std::stoi(strip(line.substr(10)));
    } else if (line.rfind("state", 0) == 0 && line.back() == ':') {
      prog.states.push_back({strip(line.substr(5, line.size() - 6)), {}});
      cur = &prog.states.back();
    } else if (line.rfind("if", 0) == 0) {
      if (!cur) fail("BadProgram", "transition before any state block");
      cur->transitions.push_back(parse_transition(line));
    } else {
      fail("BadProgram", "cannot read line '" + line + "'");
    }
  }
  if (prog.states.empty()) fail("BadProgram", "no states");
  for (auto& st : prog.states)
    for (auto& tr : st.transitions)
      if (!tr.halts) {
        bool known = false;
        for (auto& s2 : prog.states) known = known || s2.name == tr.next;
        if (!known) fail("BadProgram", "goto unknown state '" + tr.next + "'");
      }
  return prog;
}

HybridProgram load_bss(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("FileNotFound", path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_bss(ss.str());
}

VMState vm_init(const HybridProgram& p) {
  VMState s;
  s.state = p.states.front().name;
  s.regs.assign(p.n_registers, Rat(0));
  return s;
}

void vm_step(const HybridProgram& p, VMState& s) {
  if (s.halted) return;
  const StateBlock* block = nullptr;
  for (auto& st : p.states)
    if (st.name == s.state) block = &st;
  if (!block) fail("BadProgram", "lost in state '" + s.state + "'");
  auto env = [&](const std::string& name) -> Rat {
    if (name == "r") {
      auto it = s.real_tape.find(s.head1);
      return it == s.real_tape.end() ? Rat(0) : it->second;
    }
    if (name == "d") {
      auto it = s.disc_tape.find(s.head2);
      return it == s.disc_tape.end() ? Rat(0) : Rat(it->second);
    }
    if (name.size() >= 2 && name[0] == 'x') {
      size_t idx = std::stoul(name.substr(1));
      if (idx < s.regs.size()) return s.regs[idx];
    }
    fail("UnknownVariable", name);
  };
  const Transition* fired = nullptr;
  for (auto& tr : block->transitions) {
    bool hold = true;
    for (auto& g : tr.guards) {
      Rat v = eval_expr(g.lhs, env);
      hold = g.op == '>' ? v > 0 : g.op == '=' ? v == 0 : v >= 0;
      if (!hold) break;
    }
    if (hold) {
      fired = &tr;
      break;
    }
  }
  if (!fired) fail("NoGuardMatches", "state " + s.state + " has no enabled transition");
  for (auto& u : fired->updates) {
    if (u.erase) {
      if (u.var == "r")
        s.real_tape.erase(s.head1);
      else
        s.disc_tape.erase(s.head2);
      continue;
    }
    Rat v = eval_expr(u.expr, env);
    if (u.var == "r") {
      s.real_tape[s.head1] = v;
    } else if (u.var == "d") {
      if (den(v) != 1 || v < 0 || v >= p.d_alphabet)
        fail("BadDiscreteWrite", rat_str(v) + " is not a Z_" + std::to_string(p.d_alphabet) +
                                     " symbol");
      s.disc_tape[s.head2] = num(v).convert_to<long>();
    } else if (u.var.size() >= 2 && u.var[0] == 'x') {
      size_t idx = std::stoul(u.var.substr(1));
      if (idx >= s.regs.size()) fail("UnknownVariable", u.var);
      s.regs[idx] = v;
    } else {
      fail("UnknownVariable", u.var);
    }
  }
  auto shift = [](char m) { return m == 'R' ? 1 : m == 'L' ? -1 : 0; };
  s.head1 += shift(fired->move1);
  s.head2 += shift(fired->move2);
  if (fired->halts)
    s.halted = true;
  else
    s.state = fired->next;
  ++s.step_count;
}

VMState vm_run(const HybridProgram& p, VMState s, long step_cap) {
  while (!s.halted) {
    if (s.step_count >= step_cap)
      fail("StepCapExceeded", std::to_string(step_cap) + " steps without halting");
    vm_step(p, s);
  }
  return s;
}

ComplexityReport measure_complexity(const HybridProgram& p,
                                    const std::vector<std::pair<VMState, long>>& inputs,
                                    long step_cap) {
  ComplexityReport rep;
  for (auto& [init, size] : inputs) {
    VMState out = vm_run(p, init, step_cap);
    rep.points.push_back({size, out.step_count});
  }
  if (rep.points.empty()) fail("BadParams", "no inputs");
  auto [mn, mx] = std::minmax_element(
      rep.points.begin(), rep.points.end(),
      [](const ComplexityPoint& a, const ComplexityPoint& b) { return a.size < b.size; });
  if (mn->size == mx->size) {
    rep.c = 0;
    rep.d = rep.points.front().steps;
  } else {
    rep.c = Rat(mx->steps - mn->steps, mx->size - mn->size);
    rep.d = Rat(mn->steps) - rep.c * mn->size;
  }
  rep.linear_fit_ok = true;
  for (auto& pt : rep.points)
    if (Rat(pt.steps) != rep.c * pt.size + rep.d) rep.linear_fit_ok = false;
  return rep;
}

}  // namespace cdsw
