#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdsw/bssc.hpp"
#include "cdsw/codec.hpp"
#include "cdsw/disk.hpp"
#include "cdsw/rootsep.hpp"
#include "cdsw/symdyn.hpp"
#include "cdsw/verify.hpp"

namespace {

using namespace cdsw;

std::string out_path(const std::string& p) {
  const char* dir = std::getenv("CDSW_OUT_DIR");
  if (!dir || !*dir) return p;
  std::filesystem::path fp(p);
  if (fp.is_absolute()) return p;
  return (std::filesystem::path(dir) / fp).string();
}

// "-" writes to stdout
void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::string full = out_path(path);
  std::ofstream f(full);
  if (!f) fail("FileNotFound", "cannot open " + full + " for writing");
  f << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

int run_simulate(const std::string& machine, const std::string& input, long steps, int k,
                 int budget, const std::string& out) {
  TuringMachine tm = load_machine(machine);
  CodecParams params{k, budget};
  Configuration c = parse_config(tm, input);
  std::string csv = "step,config,x,y\n";
  for (long t = 0; t <= steps; ++t) {
    Pt pt = encode(tm, params, c);
    csv += std::to_string(t) + ",\"" + config_str(c) + "\"," + rat_str(pt.x) + "," +
           rat_str(pt.y) + "\n";
    if (t < steps) c = tm_step(tm, c);
  }
  write_text(out, csv);
  return 0;
}

int run_verify(const std::string& machine, int tape_len, int horizon, int k, int budget) {
  TuringMachine tm = load_machine(machine);
  CodecParams params{k, budget};
  DiskMapSpec spec = build_disk_map(tm, params);
  CdsBundle b{&spec, &tm, params, 1};
  auto configs = enumerate_configs(tm, tape_len);
  VerifyReport rep = verify_cds(b, configs, horizon);
  std::cout << "configs: " << rep.configs << "\nsteps_checked: " << rep.steps_checked
            << "\nfailures: " << rep.failures.size() << "\n";
  size_t shown = 0;
  for (auto& f : rep.failures) {
    if (++shown > 10) {
      std::cout << "...\n";
      break;
    }
    std::cout << "fail: " << config_str(f.config) << " step " << f.step << " (" << f.reason
              << ")\n";
  }
  return rep.ok() ? 0 : 1;
}

int run_robust(const std::string& machine, const std::string& input, int samples,
               uint64_t seed, int horizon, int k, int budget) {
  TuringMachine tm = load_machine(machine);
  CodecParams params{k, budget};
  DiskMapSpec spec = build_disk_map(tm, params);
  CdsBundle b{&spec, &tm, params, 1};
  Configuration c = parse_config(tm, input);
  ProbeReport rep = robustness_probe(b, c, samples, seed, horizon);
  std::cout << "samples: " << rep.samples << "\ncorrect: " << rep.correct << "\n";
  for (auto& n : rep.notes) std::cout << "note: " << n << "\n";
  return rep.correct == rep.samples ? 0 : 1;
}

int run_decode(const std::string& machine, const std::string& xs, const std::string& ys,
               int k, int budget) {
  CodecParams params{k, budget};
  Pt pt{parse_rat(xs), parse_rat(ys)};
  if (machine.empty()) {
    DecodedBits db = decode_bits(pt, params);
    std::cout << "status: " << decode_status_str(db.status) << "\n";
    if (db.status == DecodeStatus::Ok) std::cout << "bits: " << bits_str(db.bits) << "\n";
    return db.status == DecodeStatus::Ok ? 0 : 1;
  }
  TuringMachine tm = load_machine(machine);
  DecodeResult res = decode(tm, params, pt);
  std::cout << "status: " << decode_status_str(res.status) << "\n";
  if (res.config) std::cout << "config: " << config_str(*res.config) << "\n";
  return res.status == DecodeStatus::Ok ? 0 : 1;
}

int run_encode(const std::string& machine, const std::string& input, int k, int budget) {
  TuringMachine tm = load_machine(machine);
  CodecParams params{k, budget};
  Configuration c = parse_config(tm, input);
  Pt pt = encode(tm, params, c);
  Region r = region(tm, params, c);
  std::cout << "x: " << rat_str(pt.x) << "\ny: " << rat_str(pt.y)
            << "\nregion: " << region_str(r) << "\n";
  return 0;
}

int run_bounds(const std::vector<std::string>& polys, const std::vector<std::string>& haltings,
               const std::vector<std::string>& mixings, const std::string& out) {
  std::string csv = "kind,input,value\n";
  auto cell = [](std::string s) {
    return "\"" + s + "\"";
  };
  for (auto& ps : polys) {
    RatPoly p = parse_poly(ps);
    csv += "s_tilde," + cell(ps) + "," + rat_str(standardize(p).s_tilde) + "\n";
    csv += "cauchy," + cell(ps) + "," + rat_str(cauchy_bound(p)) + "\n";
    if (poly_deg(p) >= 2)
      csv += "rsep_lower," + cell(ps) + "," + rat_str(rsep_lower_bound(p)) + "\n";
  }
  for (auto& hs : haltings) {
    auto parts = split_commas(hs);
    if (parts.size() != 2) fail("BadParams", "halting wants n,D");
    Rat v = halting_bound_1d(std::stol(parts[0]), parse_rat(parts[1]));
    csv += "halting," + cell(hs) + "," + rat_str(v) + "\n";
  }
  for (auto& ms : mixings) {
    // C,r,n,q,log|lin
    auto parts = split_commas(ms);
    if (parts.size() != 5) fail("BadParams", "mixing wants C,r,n,q,log|lin");
    MixingParams mp{parse_rat(parts[0]),
                    PosReal{parse_rat(parts[3]), parts[4] == "log"},
                    parse_rat(parts[1]),
                    std::stol(parts[2])};
    csv += "mixing," + cell(ms) + "," + std::to_string(anosov_mixing_steps(mp)) + "\n";
  }
  write_text(out, csv);
  return 0;
}

Region parse_region_arg(const std::string& s) {
  auto parts = split_commas(s);
  if (parts.size() != 4) fail("BadParams", "region wants x0,y0,x1,y1");
  return {{parse_rat(parts[0]), parse_rat(parts[2])}, {parse_rat(parts[1]), parse_rat(parts[3])}};
}

int run_mixing(const std::string& us, const std::string& vs, int nmax, const std::string& mat) {
  auto parts = split_commas(mat);
  if (parts.size() != 4) fail("BadParams", "matrix wants a,b,c,d");
  LinearToralMap m{BigInt(parts[0]), BigInt(parts[1]), BigInt(parts[2]), BigInt(parts[3])};
  auto hit = mixing_first_hit(m, parse_region_arg(us), parse_region_arg(vs), nmax);
  if (hit) {
    std::cout << "first_hit: " << *hit << "\n";
    return 0;
  }
  std::cout << "first_hit: none\n";
  return 1;
}

int run_sft(const std::string& file, const std::string& graph_file, long count_n,
            const std::string& word, bool has_word) {
  if (!file.empty()) {
    Sft s = load_sft(file);
    if (count_n < 0 && !has_word) fail("BadParams", "sft wants --count or --word");
    if (count_n >= 0) std::cout << "count: " << count_words(s, count_n).str() << "\n";
    if (has_word) {
      bool ok = is_allowed(s, word);
      std::cout << "word: " << (ok ? "allowed" : "forbidden") << "\n";
      if (!ok) return 1;
    }
    return 0;
  }
  if (!graph_file.empty()) {
    LabeledGraph g = load_graph(graph_file);
    bool ok = sofic_accepts(g, word);
    std::cout << "word: " << (ok ? "accepted" : "rejected") << "\n";
    return ok ? 0 : 1;
  }
  fail("BadParams", "sft wants --file or --graph");
}

int run_bssc(const std::string& program, const std::vector<std::string>& reals,
             const std::string& discs, long cap) {
  HybridProgram p = load_bss(program);
  VMState s = vm_init(p);
  for (size_t i = 0; i < reals.size(); ++i) s.real_tape[static_cast<long>(i)] = parse_rat(reals[i]);
  if (!discs.empty()) {
    auto parts = split_commas(discs);
    for (size_t i = 0; i < parts.size(); ++i) s.disc_tape[static_cast<long>(i)] = std::stol(parts[i]);
  }
  VMState out = vm_run(p, s, cap);
  std::cout << "steps: " << out.step_count << "\nstate: " << out.state << "\n";
  for (auto& [cell, v] : out.real_tape) std::cout << "real " << cell << ": " << rat_str(v) << "\n";
  for (auto& [cell, v] : out.disc_tape) std::cout << "disc " << cell << ": " << v << "\n";
  for (size_t i = 0; i < out.regs.size(); ++i)
    std::cout << "x" << i << ": " << rat_str(out.regs[i]) << "\n";
  return 0;
}

int run_plot(int depth, const std::string& machine, int k, const std::string& out) {
  if (depth < 0 || depth > 8) fail("BadParams", "depth must lie in 0..8");
  // canvas covers [-1/3, 1]^2 with 600 px per unit
  auto sx = [](const Rat& v) { return to_double(v + Rat(1, 3)) * 600.0; };
  auto sy = [](const Rat& v) { return (1.0 - to_double(v)) * 600.0; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  if (!machine.empty()) {
    TuringMachine tm = load_machine(machine);
    CodecParams params{k, 256};
    DiskMapSpec spec = build_disk_map(tm, params);
    for (auto& st : spec.strips) {
      svg << "<rect class=\"strip\" x=\"" << sx(st.box.x.lo) << "\" y=\"" << sy(st.box.y.hi)
          << "\" width=\"" << to_double(st.box.x.width()) * 600.0 << "\" height=\""
          << to_double(st.box.y.width()) * 600.0
          << "\" fill=\"#ffe8c0\" stroke=\"#c08020\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (long lm = 0; lm < (1L << depth); ++lm)
    for (long rm = 0; rm < (1L << depth); ++rm) {
      BiInfBits b;
      for (int j = 0; j < depth; ++j) {
        if ((lm >> j) & 1) set_bit(b, -(j + 1), 1);
        if ((rm >> j) & 1) set_bit(b, j, 1);
      }
      Region r = bits_region(b);
      svg << "<rect class=\"region\" x=\"" << sx(r.x.lo) << "\" y=\"" << sy(r.y.hi)
          << "\" width=\"" << to_double(r.x.width()) * 600.0 << "\" height=\""
          << to_double(r.y.width()) * 600.0
          << "\" fill=\"none\" stroke=\"#2040a0\" stroke-width=\"0.8\"/>\n";
    }
  svg << "</svg>\n";
  write_text(out, svg.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for Turing machines compiled into disk dynamics"};
  app.require_subcommand(1);

  std::string machine, input, xs, ys, out = "-", graph_file, sft_file, word, program, discs;
  std::string mix_u, mix_v, mix_mat = "2,1,1,1";
  std::vector<std::string> polys, haltings, mixings, reals;
  long steps = 10, cap = 100000, count_n = -1;
  int k = 1, budget = 256, tape_len = 4, horizon = 25, samples = 100, depth = 3, nmax = 10;
  uint64_t seed = 7;

  auto* sim = app.add_subcommand("simulate", "run a machine and emit its encoded trace");
  sim->add_option("--machine", machine)->required();
  sim->add_option("--input", input)->required();
  sim->add_option("--steps", steps);
  sim->add_option("--k", k);
  sim->add_option("--budget", budget);
  sim->add_option("--out", out);
  sim->set_config("--config");

  auto* ver = app.add_subcommand("verify", "certify containment of encoded steps");
  ver->add_option("--machine", machine)->required();
  ver->add_option("--tape-len", tape_len);
  ver->add_option("--horizon", horizon);
  ver->add_option("--k", k);
  ver->add_option("--budget", budget);
  ver->set_config("--config");

  auto* rob = app.add_subcommand("robust", "probe interior points along a trace");
  rob->add_option("--machine", machine)->required();
  rob->add_option("--input", input)->required();
  rob->add_option("--samples", samples);
  rob->add_option("--seed", seed);
  rob->add_option("--horizon", horizon);
  rob->add_option("--k", k);
  rob->add_option("--budget", budget);
  rob->set_config("--config");

  auto* dec = app.add_subcommand("decode", "map a point back to a configuration");
  dec->add_option("--machine", machine);
  dec->add_option("--x", xs)->required();
  dec->add_option("--y", ys)->required();
  dec->add_option("--k", k);
  dec->add_option("--budget", budget);

  auto* enc = app.add_subcommand("encode", "map a configuration to its point and region");
  enc->add_option("--machine", machine)->required();
  enc->add_option("--input", input)->required();
  enc->add_option("--k", k);
  enc->add_option("--budget", budget);

  auto* bnd = app.add_subcommand("bounds", "evaluate root-separation and time bounds");
  bnd->add_option("--poly", polys);
  bnd->add_option("--halting", haltings, "n,D");
  bnd->add_option("--mixing", mixings, "C,r,n,q,log|lin");
  bnd->add_option("--out", out);

  auto* mix = app.add_subcommand("mixing", "first toral iterate that meets a target");
  mix->add_option("--u", mix_u)->required();
  mix->add_option("--v", mix_v)->required();
  mix->add_option("--nmax", nmax);
  mix->add_option("--matrix", mix_mat);

  auto* sft = app.add_subcommand("sft", "word counting and sofic acceptance");
  sft->add_option("--file", sft_file);
  sft->add_option("--graph", graph_file);
  sft->add_option("--count", count_n);
  sft->add_option("--word", word);

  auto* bss = app.add_subcommand("bssc", "run a guarded-command hybrid machine");
  bss->add_option("--program", program)->required();
  bss->add_option("--real", reals, "cell 0,1,... values");
  bss->add_option("--disc", discs, "comma-separated cells from 0");
  bss->add_option("--cap", cap);

  auto* plot = app.add_subcommand("plot-regions", "draw encoded regions and strips as SVG");
  plot->add_option("--depth", depth);
  plot->add_option("--machine", machine);
  plot->add_option("--k", k);
  plot->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  static const std::set<std::string> input_error_codes{
      "FileNotFound",   "BadMachineLine", "BadMachine",    "BadRule",
      "BadSymbol",      "DuplicateState", "DuplicateSymbol", "DuplicateRule",
      "BlankWrite",     "HaltRuleNotSelfLoop", "IncompleteDelta", "BadConfig",
      "BadSft",         "BadGraph",       "BadProgram",    "BadPoly",
      "BadRational",    "ZeroDenominator"};

  try {
    if (sim->parsed()) return run_simulate(machine, input, steps, k, budget, out);
    if (ver->parsed()) return run_verify(machine, tape_len, horizon, k, budget);
    if (rob->parsed()) return run_robust(machine, input, samples, seed, horizon, k, budget);
    if (dec->parsed()) return run_decode(machine, xs, ys, k, budget);
    if (enc->parsed()) return run_encode(machine, input, k, budget);
    if (bnd->parsed()) return run_bounds(polys, haltings, mixings, out);
    if (mix->parsed()) return run_mixing(mix_u, mix_v, nmax, mix_mat);
    if (sft->parsed()) return run_sft(sft_file, graph_file, count_n, word, sft->count("--word") > 0);
    if (bss->parsed()) return run_bssc(program, reals, discs, cap);
    if (plot->parsed()) return run_plot(depth, machine, k, out);
  } catch (const cdsw::Error& e) {
    std::cerr << e.what() << "\n";
    return input_error_codes.count(e.code) ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
