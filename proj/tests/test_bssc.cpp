#include "doctest.h"

#include "cdsw/bssc.hpp"
#include "cdsw/codec.hpp"
#include "test_util.hpp"

using namespace cdsw;

namespace {

VMState run_text(const std::string& text, VMState s, long cap = 1000) {
  return vm_run(parse_bss(text), std::move(s), cap);
}

VMState fresh(const std::string& text) { return vm_init(parse_bss(text)); }

}  // namespace

TEST_CASE("a one-rule program writes and halts") {
  std::string text =
      "alphabet: 2\nregisters: 0\nstate s:\n  if 0 >= 0 -> r := 1; move R,S; halt\n";
  HybridProgram p = parse_bss(text);
  CHECK_EQ(p.d_alphabet, 2);
  CHECK_EQ(p.states.size(), 1u);
  VMState s = vm_run(p, vm_init(p), 10);
  CHECK(s.halted);
  CHECK_EQ(s.step_count, 1);
  CHECK_EQ(s.real_tape.at(0), Rat(1));
  CHECK_EQ(s.head1, 1);
  CHECK_EQ(s.head2, 0);
}

TEST_CASE("expressions evaluate over live state") {
  std::string text =
      "alphabet: 4\nregisters: 2\nstate s:\n"
      "  if 0 >= 0 -> x0 := 5, x1 := (x0 + 2*d - 2)/3, r := x1^3 - x0/2; move S,S; halt\n";
  VMState s = run_text(text, fresh(text));
  CHECK_EQ(s.regs[0], Rat(5));
  CHECK_EQ(s.regs[1], Rat(1));  // (5 + 0 - 2)/3, with blank d read as 0
  CHECK_EQ(s.real_tape.at(0), Rat(1) - Rat(5, 2));
}

TEST_CASE("guards pick the first matching transition") {
  std::string text =
      "alphabet: 3\nregisters: 0\nstate s:\n"
      "  if r - 1 > 0 -> d := 2; move S,S; halt\n"
      "  if r = 0 -> d := 1; move S,S; halt\n"
      "  if 0 >= 0 -> ; move S,S; halt\n";
  HybridProgram p = parse_bss(text);
  VMState a = vm_init(p);
  a.real_tape[0] = 7;
  CHECK_EQ(vm_run(p, a, 5).disc_tape.at(0), 2);
  VMState b = vm_init(p);
  CHECK_EQ(vm_run(p, b, 5).disc_tape.at(0), 1);
  VMState c = vm_init(p);
  c.real_tape[0] = Rat(1, 2);  // neither r-1>0 nor r=0: falls to the catch-all
  CHECK_EQ(vm_run(p, c, 5).disc_tape.count(0), 0);
}

TEST_CASE("erase leaves a blank cell behind") {
  std::string text =
      "alphabet: 2\nregisters: 0\n"
      "state a:\n  if 0 >= 0 -> r := 5; move S,S; goto b\n"
      "state b:\n  if 0 >= 0 -> erase r; move S,S; goto c\n"
      "state c:\n  if r = 0 -> ; move S,S; halt\n";
  VMState s = run_text(text, fresh(text));
  CHECK(s.halted);
  CHECK_EQ(s.step_count, 3);
  CHECK_EQ(s.real_tape.count(0), 0);
}

TEST_CASE("runtime faults carry their own codes") {
  std::string div =
      "alphabet: 2\nregisters: 1\nstate s:\n  if 0 >= 0 -> r := 1/x0; move S,S; halt\n";
  CHECK_EQ(error_code_of([&] { run_text(div, fresh(div)); }), "DivisionByZero");
  std::string loop =
      "alphabet: 2\nregisters: 0\nstate s:\n  if 0 >= 0 -> ; move S,S; goto s\n";
  CHECK_EQ(error_code_of([&] { run_text(loop, fresh(loop), 100); }), "StepCapExceeded");
  std::string wide =
      "alphabet: 4\nregisters: 0\nstate s:\n  if 0 >= 0 -> d := 7; move S,S; halt\n";
  CHECK_EQ(error_code_of([&] { run_text(wide, fresh(wide)); }), "BadDiscreteWrite");
  std::string frac =
      "alphabet: 4\nregisters: 0\nstate s:\n  if 0 >= 0 -> d := 1/2; move S,S; halt\n";
  CHECK_EQ(error_code_of([&] { run_text(frac, fresh(frac)); }), "BadDiscreteWrite");
  std::string ghost =
      "alphabet: 2\nregisters: 0\nstate s:\n  if x3 >= 0 -> ; move S,S; halt\n";
  CHECK_EQ(error_code_of([&] { run_text(ghost, fresh(ghost)); }), "UnknownVariable");
  std::string stuck =
      "alphabet: 2\nregisters: 0\nstate s:\n  if r > 0 -> ; move S,S; halt\n";
  CHECK_EQ(error_code_of([&] { run_text(stuck, fresh(stuck)); }), "NoGuardMatches");
}

TEST_CASE("malformed programs are rejected at parse time") {
  CHECK_EQ(error_code_of([] { parse_bss("alphabet: 2\nregisters: 0\n"); }), "BadProgram");
  CHECK_EQ(error_code_of([] { parse_bss("alphabet: 1\nregisters: 0\nstate s:\n"); }),
           "BadProgram");
  CHECK_EQ(error_code_of([] {
             parse_bss("alphabet: 2\nregisters: 0\n  if 0 >= 0 -> ; move S,S; halt\n");
           }),
           "BadProgram");
  CHECK_EQ(error_code_of([] {
             parse_bss("alphabet: 2\nregisters: 0\nstate s:\n"
                       "  if 0 >= 0 -> ; move S,S; goto nowhere\n");
           }),
           "BadProgram");
  auto bad_line = [](const std::string& tr) {
    return "alphabet: 2\nregisters: 0\nstate s:\n  " + tr + "\n";
  };
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if 0 >= 0 -> move S,S; halt")); }),
           "BadTransition");
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if r >= 1 -> ; move S,S; halt")); }),
           "BadGuard");
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if 0 >= 0 -> r + 1; move S,S; halt")); }),
           "BadUpdate");
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if 0 >= 0 -> erase q; move S,S; halt")); }),
           "BadUpdate");
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if 0 >= 0 -> ; move X,S; halt")); }),
           "BadMove");
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if 0 >= 0 -> ; move S,S; fly away")); }),
           "BadTransition");
  CHECK_EQ(error_code_of([&] { parse_bss(bad_line("if 0 >= 0 -> r := ((1; move S,S; halt")); }),
           "BadExpr");
}

TEST_CASE("the digit extractor program mirrors the codec") {
  HybridProgram dec = load_bss(fixture("decode_x.bss"));
  VMState s = vm_init(dec);
  s.real_tape[0] = Rat(11, 18);
  VMState out = vm_run(dec, s, 100);
  CHECK(out.halted);
  CHECK_EQ(out.step_count, 2);
  CHECK_EQ(out.disc_tape.at(0), 2);
  CHECK_EQ(out.disc_tape.size(), 1u);
  CHECK_EQ(out.real_tape.count(0), 0);

  VMState gap = vm_init(dec);
  gap.real_tape[0] = Rat(1, 2);
  CHECK_EQ(error_code_of([&] { vm_run(dec, gap, 100); }), "NoGuardMatches");

  // agreement with the exact codec on whole rays
  for (const char* ray : {".1", ".01", ".101", ".0011", ".111111"}) {
    BiInfBits bits = parse_bits(ray);
    VMState in = vm_init(dec);
    in.real_tape[0] = bits_encode(bits).x;
    VMState res = vm_run(dec, in, 100);
    CHECK_EQ(res.step_count, len_x(bits) + 1);
    for (long j = 0; j < len_x(bits); ++j) CHECK_EQ(res.disc_tape.at(j), bit_at(bits, j) + 1);
  }
}

TEST_CASE("the digit folder program inverts the extractor") {
  HybridProgram enc = load_bss(fixture("encode_x.bss"));
  VMState empty = vm_run(enc, vm_init(enc), 100);
  CHECK_EQ(empty.real_tape.at(0), Rat(-1, 6));
  CHECK_EQ(empty.step_count, 2);

  for (const char* ray : {".1", ".01", ".101", ".0011"}) {
    BiInfBits bits = parse_bits(ray);
    VMState in = vm_init(enc);
    for (long j = 0; j < len_x(bits); ++j) in.disc_tape[j] = bit_at(bits, j) + 1;
    VMState res = vm_run(enc, in, 100);
    CHECK(res.halted);
    CHECK_EQ(res.real_tape.at(res.head1), bits_encode(bits).x);
    CHECK_EQ(res.step_count, 2 * len_x(bits) + 2);
  }
}

TEST_CASE("step counts fit an affine law when the sizes are honest") {
  HybridProgram dec = load_bss(fixture("decode_x.bss"));
  std::vector<std::pair<VMState, long>> inputs;
  for (int n = 1; n <= 6; ++n) {
    BiInfBits bits;
    for (int j = 0; j < n; ++j) set_bit(bits, j, 1);
    VMState s = vm_init(dec);
    s.real_tape[0] = bits_encode(bits).x;
    inputs.push_back({s, n});
  }
  ComplexityReport rep = measure_complexity(dec, inputs, 1000);
  REQUIRE(rep.linear_fit_ok);
  CHECK_EQ(rep.c, Rat(1));
  CHECK_EQ(rep.d, Rat(1));

  HybridProgram enc = load_bss(fixture("encode_x.bss"));
  std::vector<std::pair<VMState, long>> einputs;
  for (int n = 0; n <= 5; ++n) {
    VMState s = vm_init(enc);
    for (int j = 0; j < n; ++j) s.disc_tape[j] = 2;
    einputs.push_back({s, n});
  }
  ComplexityReport erep = measure_complexity(enc, einputs, 1000);
  REQUIRE(erep.linear_fit_ok);
  CHECK_EQ(erep.c, Rat(2));
  CHECK_EQ(erep.d, Rat(2));
}

TEST_CASE("value-dependent runtimes fail the size fit") {
  HybridProgram p = load_bss(fixture("uncon_decoder.bss"));
  VMState s = vm_init(p);
  s.real_tape[0] = Rat(1, 8);
  CHECK_EQ(vm_run(p, s, 100).step_count, 4);

  std::vector<std::pair<VMState, long>> inputs;
  for (int n = 0; n <= 5; ++n) {
    VMState in = vm_init(p);
    in.real_tape[0] = rat_pow(Rat(1, 2), n);
    inputs.push_back({in, 1});  // every dyadic scalar is "one number"
  }
  ComplexityReport rep = measure_complexity(p, inputs, 1000);
  CHECK_FALSE(rep.linear_fit_ok);
  CHECK_EQ(error_code_of([&] { measure_complexity(p, {}, 10); }), "BadParams");
}

TEST_CASE("running twice gives identical states") {
  HybridProgram dec = load_bss(fixture("decode_x.bss"));
  VMState a = vm_init(dec);
  a.real_tape[0] = Rat(11, 486);
  VMState r1 = vm_run(dec, a, 100);
  VMState r2 = vm_run(dec, a, 100);
  CHECK_EQ(r1.disc_tape, r2.disc_tape);
  CHECK_EQ(r1.real_tape, r2.real_tape);
  CHECK_EQ(r1.step_count, r2.step_count);
  CHECK_EQ(r1.head2, r2.head2);
  CHECK_EQ(r1.state, r2.state);
}
