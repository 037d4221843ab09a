// twistcheck: verify the torsion generating set of the twist subgroup at the
// level of homology representations, and poke at the pieces by hand.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twistcheck/svg.hpp"
#include "twistcheck/verify.hpp"

#ifndef TWISTCHECK_DATA_DIR
#define TWISTCHECK_DATA_DIR "data"
#endif

namespace {

using namespace twistcheck;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 64;

struct Common {
  int genus = 0;
  std::string config = std::string(TWISTCHECK_DATA_DIR) + "/model.cfg";
  bool single_thread = false;

  unsigned threads() const { return single_thread ? 1 : thread_count_from_env(); }
};

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return kExitPass;
    case Status::Fail: return kExitFail;
    case Status::Indeterminate: return kExitIndeterminate;
  }
  return kExitFail;
}

bool write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return bool(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return bool(out);
}

int run_verify(const Common& c, bool mod3, std::size_t cap, bool timings, bool no_express, const std::string& out) {
  auto cfg = load_config(c.config);
  Model m(build_surface(c.genus), cfg);
  VerifyOptions opt;
  opt.mod3 = mod3;
  opt.cap = cap;
  opt.threads = c.threads();
  opt.express = !no_express;
  auto rep = cmd_verify(m, cfg, opt);
  if (!write_file(out, to_json(rep, timings).dump(2) + "\n")) {
    std::cerr << "twistcheck: cannot write " << out << "\n";
    return kExitUsage;
  }
  for (const auto& ck : rep.checks)
    std::cerr << (ck.status == Status::Pass ? "  ok   " : ck.status == Status::Fail ? "  FAIL " : "  ???  ") << ck.name
              << "\n";
  std::cerr << "overall: " << to_string(rep.overall()) << "\n";
  return exit_code(rep.overall());
}

int run_eval(const Common& c, const std::string& text) {
  Model m(build_surface(c.genus), load_config(c.config));
  GeneratorTable gens(m);
  auto w = free_reduce(parse_word(text, c.genus));
  auto f = evaluate(w, gens);
  std::cout << "word: " << (w.empty() ? "ID" : print_word(w)) << "\n";
  std::cout << "free part over Z:\n";
  for (int i = 0; i < f.mat_free().size(); ++i) {
    for (int j = 0; j < f.mat_free().size(); ++j) std::cout << (j ? " " : "  ") << f.mat_free()(i, j);
    std::cout << "\n";
  }
  std::cout << "H1 mod 2:\n";
  for (int i = 0; i < f.genus(); ++i) {
    std::cout << "  ";
    for (int j = 0; j < f.genus(); ++j) std::cout << (j ? " " : "") << int(f.mat_z2().get(i, j));
    std::cout << "\n";
  }
  std::cout << "identity: " << (is_identity_in_reps(f) ? "true" : "false") << "\n";
  std::cout << "det_free: " << f.det_free() << "\n";
  std::cout << "in_twist_subgroup: " << (in_twist_subgroup(f) ? "true" : "false") << "\n";
  return kExitPass;
}

int run_closure(const Common& c, const std::string& which, const std::string& rep, std::size_t cap,
                const std::string& export_path) {
  Model m(build_surface(c.genus), load_config(c.config));
  VerifyContext cx(m);
  auto sides = checks::generation_sides(cx, rep == "z3");
  const auto& gens = which == "torsion" ? sides.torsion : sides.twists;
  std::vector<ModMatrix> mats;
  std::vector<std::string> names;
  for (const auto& g : gens) {
    mats.push_back(g.m);
    names.push_back(g.name);
  }
  auto t0 = std::chrono::steady_clock::now();
  auto t = closure(mats, cap, c.threads());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "generators:";
  for (const auto& n : names) std::cout << " [" << n << "]";
  std::cout << "\nring: " << (rep == "z3" ? "free part mod 3" : "H1 mod 2") << "\n";
  std::cout << "order: " << t.order() << (t.cap_exceeded ? " (cap reached, partial)" : "") << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  std::cerr << "seconds: " << buf << "\n";
  if (!export_path.empty()) {
    std::ostringstream os;
    export_table(os, t, names);
    if (!write_file(export_path, os.str())) {
      std::cerr << "twistcheck: cannot write " << export_path << "\n";
      return kExitUsage;
    }
  }
  return t.cap_exceeded ? kExitIndeterminate : kExitPass;
}

int run_express(const Common& c, const std::string& target, int depth, std::size_t cap) {
  Model m(build_surface(c.genus), load_config(c.config));
  GeneratorTable g(m);
  auto goal = evaluate(parse_word(target, c.genus), g);
  std::vector<NamedClass> gens{{"SGM", g.at("SGM")},
                               {"T1B", compose(g.at("TAU1"), g.at("B0"))},
                               {"T2C", compose(g.at("TAU2"), g.at("C"))}};
  auto res = express_bounded(goal, gens, depth, cap);
  std::cout << "generators: SGM, T1B = TAU1 B0, T2C = TAU2 C\n";
  std::cout << "target: " << target << "\n";
  if (res.word)
    std::cout << "word: " << (res.word->empty() ? "ID" : print_word(*res.word)) << "\n";
  else
    std::cout << "word: none within depth " << res.depth_reached << "\n";
  std::cout << "visited: " << res.visited << (res.cap_exceeded ? " (cap reached)" : "") << "\n";
  if (res.word) return kExitPass;
  return res.cap_exceeded ? kExitIndeterminate : kExitFail;
}

int run_render(const Common& c, const std::vector<std::string>& curves, const std::string& out) {
  Model m(build_surface(c.genus), load_config(c.config));
  if (!write_file(out, render_svg(m, curves))) {
    std::cerr << "twistcheck: cannot write " << out << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--genus,-g", c.genus, "odd number of crosscaps")->required();
  sub->add_option("--config", c.config, "curve and symmetry transcription")->check(CLI::ExistingFile);
  sub->add_flag("--single-thread", c.single_thread, "ignore TWISTCHECK_THREADS");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistcheck: torsion generators of the twist subgroup, checked on homology"};
  app.require_subcommand(1);
  Common common;

  auto* verify = app.add_subcommand("verify", "run the full check suite and write a JSON report");
  bool mod3 = false, timings = false, no_express = false;
  std::size_t cap = kDefaultCap;
  std::string out;
  add_common(verify, common);
  verify->add_flag("--mod3", mod3, "also compare closures of the free part mod 3");
  verify->add_option("--cap", cap, "closure element cap")->check(CLI::PositiveNumber);
  verify->add_option("--out,-o", out, "report path, - for stdout")->required();
  verify->add_flag("--timings", timings, "include closure runtimes (breaks byte-identical reports)");
  verify->add_flag("--no-express", no_express, "skip the bounded word search");

  auto* eval = app.add_subcommand("eval", "evaluate a word in both representations");
  std::string word;
  add_common(eval, common);
  eval->add_option("--word,-w", word, "word, e.g. \"A1 B0' SGM\"")->required();

  auto* clos = app.add_subcommand("closure", "close a generating set over a finite ring");
  std::string gens = "torsion", rep = "z2", export_path;
  add_common(clos, common);
  clos->add_option("--gens", gens, "torsion: SGM, TAU1 B0, TAU2 C; omori: A_i, B0, C")
      ->check(CLI::IsMember({"torsion", "omori"}));
  clos->add_option("--rep", rep, "z2: H1 mod 2; z3: free part mod 3")->check(CLI::IsMember({"z2", "z3"}));
  clos->add_option("--cap", cap, "element cap")->check(CLI::PositiveNumber);
  clos->add_option("--export", export_path, "write sorted keys with words");

  auto* expr = app.add_subcommand("express", "shortest word in the torsion generators for a target");
  std::string target;
  int depth = 8;
  std::size_t express_cap = 2'000'000;
  add_common(expr, common);
  expr->add_option("--target", target, "generator token or word")->required();
  expr->add_option("--depth", depth, "maximum word length")->check(CLI::NonNegativeNumber);
  expr->add_option("--cap", express_cap, "visited-set cap")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "SVG sketch of the crosscap model");
  std::string curve_list;
  add_common(render, common);
  render->add_option("--curves", curve_list, "comma separated curve names");
  render->add_option("--out,-o", out, "SVG path, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(common, mod3, cap, timings, no_express, out);
    if (*eval) return run_eval(common, word);
    if (*clos) return run_closure(common, gens, rep, cap, export_path);
    if (*expr) return run_express(common, target, depth, express_cap);
    std::vector<std::string> curves;
    std::stringstream ss(curve_list);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) curves.push_back(item);
    return run_render(common, curves, out);
  } catch (const Error& e) {
    std::cerr << "twistcheck: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::OddGenusRequired:
      case ErrorCode::UnknownCurve:
      case ErrorCode::UnknownToken:
      case ErrorCode::MalformedExponent:
      case ErrorCode::BadConfig:
        return kExitUsage;
      default:
        return kExitFail;
    }
  }
}
