#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cdsw/rat.hpp"

namespace cdsw {

// Expression over the machine's named values: `r` is the real cell under
// head 1, `d` the discrete cell under head 2 (as a rational), `x0`, `x1`,
// ... the control registers. Division is exact rational division.
struct PolyExpr {
  enum Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow } kind;
  Rat value;          // Const
  std::string name;   // Var
  long exponent = 1;  // Pow
  std::shared_ptr<PolyExpr> lhs, rhs;
};

PolyExpr parse_expr(const std::string& text);

struct Update {
  bool erase = false;
  std::string var;
  PolyExpr expr;  // unused when erase
};

struct GuardAtom {
  PolyExpr lhs;
  char op;  // '>' strict, '=' equality, 'G' for >=; always against 0
};

struct Transition {
  std::vector<GuardAtom> guards;  // conjunction; empty never occurs
  std::vector<Update> updates;    // applied left to right
  char move1 = 'S', move2 = 'S';
  std::string next;  // empty when halting
  bool halts = false;
};

struct StateBlock {
  std::string name;
  std::vector<Transition> transitions;
};

// Guarded-command machine over one real tape and one Z_d tape. Format:
//   alphabet: <d>
//   registers: <m>
//   state <name>:
//     if <expr> {>|=|>=} 0 [& ...] -> [<upd>[, <upd>]*]; move <M>,<M>; goto <name>|halt
// where <upd> is `var := <expr>` or `erase r|d`.
struct HybridProgram {
  int d_alphabet = 2;
  int n_registers = 0;
  std::vector<StateBlock> states;
};

HybridProgram parse_bss(const std::string& text);
HybridProgram load_bss(const std::string& path);

struct VMState {
  std::map<long, Rat> real_tape;  // absent cells are blank and read as 0
  std::map<long, long> disc_tape; // absent cells are 0
  long head1 = 0, head2 = 0;
  std::string state;
  std::vector<Rat> regs;
  bool halted = false;
  long step_count = 0;
};

VMState vm_init(const HybridProgram& p);

// One guarded step: first transition of the current block whose guards all
// hold, evaluated exactly. No match raises NoGuardMatches.
void vm_step(const HybridProgram& p, VMState& s);

VMState vm_run(const HybridProgram& p, VMState s, long step_cap);

struct ComplexityPoint {
  long size;
  long steps;
};

struct ComplexityReport {
  std::vector<ComplexityPoint> points;
  bool linear_fit_ok = false;
  Rat c, d;  // steps = c * size + d when linear_fit_ok
};

// Runs every input and tests whether the step counts lie exactly on one
// affine line in the declared sizes.
ComplexityReport measure_complexity(const HybridProgram& p,
                                    const std::vector<std::pair<VMState, long>>& inputs,
                                    long step_cap);

}  // namespace cdsw
