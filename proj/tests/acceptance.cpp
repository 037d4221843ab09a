// Acceptance gate: one line per criterion, with timings.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when every criterion passes, except those named with
// --expect-fail, which must fail. A listed criterion that starts passing is
// reported too, so the list cannot go stale silently.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "twistcheck/verify.hpp"

using namespace twistcheck;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

ModelConfig config() { return load_config(TWISTCHECK_DATA_DIR "/model.cfg"); }
Model load(int g) { return Model(build_surface(g), config()); }

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string gtag(int g) { return "g=" + std::to_string(g); }

bool passed(const CheckRecord& r) { return r.status == Status::Pass; }

Outcome homology_oracle() {
  Outcome o;
  for (int g : {3, 5, 7, 9}) {
    auto t0 = std::chrono::steady_clock::now();
    auto s = chain_complex_oracle(g);
    double secs = since(t0);
    o.require(s.h1.rank == g - 1 && s.h1.torsion == std::vector<long long>{2}, gtag(g) + " H1 = " + s.h1.describe());
    o.require(secs < 1.0, gtag(g) + " took " + std::to_string(secs) + " s");
  }
  if (o.ok) o.note("H1 = Z^(g-1) + Z/2 for g = 3,5,7,9");
  return o;
}

Outcome orders() {
  Outcome o;
  for (int g : {5, 7}) {
    auto m = load(g);
    VerifyContext cx(m);
    o.require(passed(checks::sigma_order(cx)), gtag(g) + " sigma order");
    o.require(passed(checks::torsion_product_order(cx, "TAU1", "B0", "tau1")), gtag(g) + " (tau1 B0)^2");
    o.require(passed(checks::torsion_product_order(cx, "TAU2", "C", "tau2")), gtag(g) + " (tau2 C)^2");
    // group-level upper bound: tau reverses orientation and preserves its curve,
    // so tau T tau^-1 = T^-1 by naturality, and tau^2 = 1
    for (auto [sym, curve] : {std::pair{"tau1", "b0"}, std::pair{"tau2", "c"}}) {
      auto r = m.symmetry(sym);
      auto k = m.curve(curve);
      auto img = apply_rigid_to_curve(r, k);
      bool same = img.class_z2 == k.class_z2 && (img.class_z == k.class_z || img.class_z == -k.class_z);
      o.require(same && r.orientation_sign() < 0 && rigid_order(r) == 2,
                gtag(g) + " " + sym + " does not preserve " + curve);
    }
  }
  if (o.ok) o.note("ord(sigma) = 2g rigid and in reps; ord(tau1 B0) = ord(tau2 C) = 2, g = 5,7");
  return o;
}

Outcome klein_bottle() {
  Outcome o;
  for (int g : {5, 7}) {
    auto m = load(g);
    VerifyContext cx(m);
    o.require(passed(checks::klein_bottle_relations(cx)), gtag(g));
  }
  if (o.ok) o.note("Y_i = A_i U_i, Y_i^2 = U_i^2 = T(delta_i) = 1 on reps, all i, g = 5,7");
  return o;
}

Outcome rigid_identities() {
  Outcome o;
  std::string ks;
  for (int g : {5, 7}) {
    auto m = load(g);
    VerifyContext cx(m);
    o.require(passed(checks::rigid_identities(cx)), gtag(g) + " identities");
    auto k = checks::conjugating_power(cx);
    o.require(passed(k), gtag(g) + " conjugating power");
    ks += (ks.empty() ? "" : ", ") + gtag(g) + " k=" + k.witness["k"].dump();
  }
  o.note(ks);
  return o;
}

Outcome membership() {
  Outcome o;
  for (int g : {5, 7}) {
    auto m = load(g);
    VerifyContext cx(m);
    auto t = checks::membership_table(cx);
    auto h = checks::half_twist_parity(cx);
    if (!passed(t)) o.require(false, gtag(g) + " det_free = -1 for " + t.witness["mismatches"].dump());
    if (!passed(h)) o.require(false, gtag(g) + " det_free(tau1 tau3) = " + h.witness["det_free"].dump());
  }
  if (o.ok) o.note("det_free matches the table at g = 5,7");
  return o;
}

Outcome curve_identity() {
  Outcome o;
  for (int g : {5, 7}) {
    auto m = load(g);
    VerifyContext cx(m);
    o.require(passed(checks::curve_identity(cx)), gtag(g));
  }
  if (o.ok) o.note("A1^-1 [e] = [c] and C = A1^-1 E A1 at g = 5,7");
  return o;
}

Outcome generation() {
  Outcome o;
  for (int g : {5, 7}) {
    auto m = load(g);
    VerifyContext cx(m);
    VerifyOptions opt;
    std::vector<ClosureStats> stats;
    auto t0 = std::chrono::steady_clock::now();
    auto r = checks::generation(cx, opt, false, stats);
    double secs = since(t0);
    o.require(passed(r), gtag(g) + " mod 2 verdict " + r.witness["verdict"].get<std::string>());
    if (g == 5) o.require(secs < 300, "g=5 mod 2 took " + std::to_string(secs) + " s");
    o.note(gtag(g) + " mod 2 orders " + std::to_string(stats[0].order) + "/" + std::to_string(stats[1].order));
  }
  {
    auto m = load(5);
    VerifyContext cx(m);
    VerifyOptions opt;
    std::vector<ClosureStats> stats;
    auto r = checks::generation(cx, opt, true, stats);
    o.require(passed(r), "g=5 mod 3 verdict " + r.witness["verdict"].get<std::string>());
    o.note("g=5 mod 3 orders " + std::to_string(stats[0].order) + "/" + std::to_string(stats[1].order));
  }
  return o;
}

Outcome pairing() {
  Outcome o;
  for (int g : {5, 7, 9}) {
    auto m = load(g);
    VerifyContext cx(m);
    auto t0 = std::chrono::steady_clock::now();
    auto r = checks::pairing_suite(cx);
    double secs = since(t0);
    o.require(passed(r), gtag(g) + " " + r.witness["failures"].dump());
    o.require(secs < 1.0, gtag(g) + " took " + std::to_string(secs) + " s");
  }
  if (o.ok) o.note("exhaustive over standard curves, g = 5,7,9");
  return o;
}

Outcome word_engine() {
  Outcome o;
  for (int g : {5, 7, 9}) {
    auto m = load(g);
    VerifyContext cx(m);
    auto a = checks::word_engine(cx, 100);
    auto b = checks::word_engine(cx, 100);
    o.require(passed(a), gtag(g) + " " + a.witness.dump());
    o.require(a.witness == b.witness, gtag(g) + " not deterministic");
  }
  if (o.ok) o.note("100 random pairs per genus, g = 5,7,9");
  return o;
}

int run_cli(const std::string& args) {
  std::string cmd = "'" TWISTCHECK_BIN "' " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / "twistcheck_acceptance";
  std::filesystem::create_directories(dir);
  auto a = dir / "first.json", b = dir / "second.json";
  int ca = run_cli("verify --genus 5 --out '" + a.string() + "'");
  int cb = run_cli("verify --genus 5 --out '" + b.string() + "'");
  o.require(ca == 0 && cb == 0, "exit codes " + std::to_string(ca) + ", " + std::to_string(cb));
  auto x = slurp(a), y = slurp(b);
  o.require(!x.empty() && x == y, "reports differ");
  if (o.ok) o.note(std::to_string(x.size()) + " bytes, identical");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expect_fail.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 64;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"homology oracle", homology_oracle},
      {"orders of sigma, tau1 B0, tau2 C", orders},
      {"Klein-bottle relations", klein_bottle},
      {"rigid identities and conjugating power", rigid_identities},
      {"membership table", membership},
      {"curve identity", curve_identity},
      {"generation on finite quotients", generation},
      {"pairing suite", pairing},
      {"word engine", word_engine},
      {"determinism of verify", determinism},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", since(t0));
    const bool expected_red = expect_fail.count(id) > 0;
    std::string tag = o.ok ? "PASS" : "FAIL";
    if (expected_red) tag += o.ok ? " (listed as expected failure)" : " (expected)";
    if (o.ok == expected_red) ++unexpected;
    std::cout << "[" << tag << "] " << id << ". " << criteria[i].first << " (" << secs << " s): " << o.detail
              << std::endl;
  }
  std::cout << (unexpected ? "acceptance: unexpected results" : "acceptance: results as expected") << std::endl;
  return unexpected ? 1 : 0;
}
