#pragma once

// The verification suite: one function per check, each returning a record
// with a status and witness data. cmd_verify runs them all in a fixed order.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "twistcheck/chain_complex.hpp"
#include "twistcheck/config.hpp"
#include "twistcheck/crosswalk.hpp"
#include "twistcheck/report.hpp"
#include "twistcheck/search.hpp"
#include "twistcheck/words.hpp"

namespace twistcheck {

struct VerifyOptions {
  bool mod3 = false;
  std::size_t cap = kDefaultCap;
  unsigned threads = 1;
  bool express = true;       // bounded word search for A1 in the torsion triple
  int express_depth = 12;
  std::size_t express_cap = 200'000;
};

struct VerifyContext {
  const Model& model;
  GeneratorTable gens;
  int g;

  explicit VerifyContext(const Model& m) : model(m), gens(m), g(m.genus()) {}
  const MappingClass& at(const std::string& tok) const { return gens.at(tok); }
  MappingClass word(const std::string& text) const { return evaluate(parse_word(text, g), gens); }
};

namespace checks {

inline Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string index_tokens(const std::string& prefix, int i) { return prefix + std::to_string(i); }

inline CheckRecord homology_oracle(const VerifyContext& cx) {
  CheckRecord r{"homology_oracle", "the cellular 2g-gon complex has H_1 = Z^(g-1) + Z/2", Status::Pass, {}};
  auto s = chain_complex_oracle(cx.g);
  bool ok = s.h0.rank == 1 && s.h0.torsion.empty() && s.h1.rank == cx.g - 1 &&
            s.h1.torsion == std::vector<long long>{2};
  r.witness["H0"] = s.h0.describe();
  r.witness["H1"] = s.h1.describe();
  r.witness["H2"] = s.h2.describe();
  r.status = status_of(ok);
  return r;
}

inline CheckRecord rigid_group_check(const VerifyContext& cx) {
  CheckRecord r{"rigid_group", "the rigid symmetries form a group of order 4g generated by t, tau1, tau3",
                Status::Pass, {}};
  auto all = rigid_group(cx.g);
  std::vector<RigidSymmetry> gens{cx.model.symmetry("t"), cx.model.symmetry("tau1"), cx.model.symmetry("tau3")};
  std::vector<RigidSymmetry> reached{RigidSymmetry::identity(cx.g)};
  for (std::size_t head = 0; head < reached.size(); ++head)
    for (const auto& s : gens) {
      auto x = rigid_compose(s, reached[head]);
      if (std::find(reached.begin(), reached.end(), x) == reached.end()) reached.push_back(x);
    }
  r.witness["group_order"] = all.size();
  r.witness["generated_order"] = reached.size();
  r.status = status_of(all.size() == static_cast<std::size_t>(4 * cx.g) && reached.size() == all.size());
  return r;
}

inline CheckRecord sigma_order(const VerifyContext& cx) {
  CheckRecord r{"sigma_order", "sigma has order 2g", Status::Pass, {}};
  int rigid = rigid_order(cx.model.symmetry("sigma"));
  auto rep = rep_order(cx.at("SGM"), 4 * cx.g);
  r.witness["rigid_order"] = rigid;
  r.witness["rep_order"] = rep ? Json(*rep) : Json(nullptr);
  r.status = status_of(rigid == 2 * cx.g && rep == 2 * cx.g);
  return r;
}

/// (tau o T)^2 = 1: the representation gives the lower bound, the conjugation
/// identity tau T tau^-1 = T^-1 with tau^2 = 1 gives the upper bound.
inline CheckRecord torsion_product_order(const VerifyContext& cx, const std::string& tau, const std::string& twist,
                                         const std::string& sym) {
  CheckRecord r{"order_" + tau + "_" + twist, "(" + tau + " o " + twist + ")^2 = 1", Status::Pass, {}};
  const auto& T = cx.at(tau);
  const auto& A = cx.at(twist);
  auto rep = rep_order(compose(T, A), 8);
  bool conj = equal_in_reps(compose(T, compose(A, inverse(T))), inverse(A));
  bool inv = rigid_order(cx.model.symmetry(sym)) == 2;
  r.witness["rep_order"] = rep ? Json(*rep) : Json(nullptr);
  r.witness["conjugation_inverts_twist"] = conj;
  r.witness["rigid_involution"] = inv;
  r.status = status_of(rep == 2 && conj && inv);
  return r;
}

inline CheckRecord klein_bottle_relations(const VerifyContext& cx) {
  CheckRecord r{"klein_bottle_relations", "Y = A U and Y^2 = U^2 = T_delta on representations", Status::Pass, {}};
  Json bad = Json::array();
  for (int i = 1; i <= cx.g; ++i) {
    const auto& A = cx.at(index_tokens("A", i));
    const auto& U = cx.at(index_tokens("U", i));
    const auto& Y = cx.at(index_tokens("Y", i));
    const auto& D = cx.at(index_tokens("D", i));
    bool ok = equal_in_reps(Y, compose(A, U)) && equal_in_reps(Y, crosscap_slide(cx.model, i)) &&
              is_identity_in_reps(compose(Y, Y)) && is_identity_in_reps(compose(U, U)) && is_identity_in_reps(D);
    if (!ok) bad.push_back(i);
  }
  r.witness["failing_indices"] = bad;
  r.status = status_of(bad.empty());
  return r;
}

inline CheckRecord rigid_identities(const VerifyContext& cx) {
  CheckRecord r{"rigid_identities", "sigma = t o tau3, tau3 = sigma^g, tau1^2 = tau2^2 = tau3^2 = 1", Status::Pass, {}};
  const auto& m = cx.model;
  auto sigma = m.symmetry("sigma");
  bool factor = sigma == rigid_compose(m.symmetry("t"), m.symmetry("tau3"));
  bool pw = rigid_power(sigma, cx.g) == m.symmetry("tau3");
  auto id = RigidSymmetry::identity(cx.g);
  bool inv = true;
  for (auto n : {"tau1", "tau2", "tau3"}) inv = inv && rigid_compose(m.symmetry(n), m.symmetry(n)) == id;
  bool rep = equal_in_reps(cx.at("SGM"), compose(cx.at("ROT"), cx.at("TAU3"))) &&
             equal_in_reps(power(cx.at("SGM"), cx.g), cx.at("TAU3"));
  r.witness["sigma_is_t_tau3"] = factor;
  r.witness["tau3_is_sigma_power_g"] = pw;
  r.witness["involutions"] = inv;
  r.witness["holds_in_representations"] = rep;
  r.status = status_of(factor && pw && inv && rep);
  return r;
}

inline CheckRecord conjugating_power(const VerifyContext& cx) {
  CheckRecord r{"conjugating_power", "tau2 = t^k tau1 t^-k for some k", Status::Pass, {}};
  const auto& m = cx.model;
  auto res = find_conjugating_power(cx.at("ROT"), cx.at("TAU1"), cx.at("TAU2"), m.symmetry("t"), m.symmetry("tau1"),
                                    m.symmetry("tau2"));
  r.witness["k"] = res.k ? Json(*res.k) : Json(nullptr);
  r.witness["rigid_k"] = res.rigid_k ? Json(*res.rigid_k) : Json(nullptr);
  r.status = status_of(res.k && res.rigid_k && *res.k == *res.rigid_k);
  return r;
}

inline std::vector<std::string> even_tokens(int g) {
  std::vector<std::string> out;
  for (int i = 1; i <= g; ++i) out.push_back(index_tokens("A", i));
  for (auto t : {"B0", "C", "E", "SGM", "ROT", "TAU1", "TAU2", "TAU3"}) out.push_back(t);
  return out;
}

inline CheckRecord membership_table(const VerifyContext& cx) {
  CheckRecord r{"membership_table", "twists and the rigid symmetries lie in the twist subgroup; U_i and Y_i do not",
                Status::Pass, {}};
  Json dets = Json::object(), mismatches = Json::array();
  auto record = [&](const std::string& tok, long long want) {
    long long d = cx.at(tok).det_free();
    dets[tok] = d;
    if (d != want) mismatches.push_back(tok);
  };
  for (const auto& t : even_tokens(cx.g)) record(t, 1);
  for (int i = 1; i <= cx.g; ++i) record(index_tokens("U", i), -1);
  for (int i = 1; i <= cx.g; ++i) record(index_tokens("Y", i), -1);
  r.witness["det_free"] = dets;
  r.witness["mismatches"] = mismatches;
  r.status = status_of(mismatches.empty());
  return r;
}

inline CheckRecord half_twist_parity(const VerifyContext& cx) {
  CheckRecord r{"half_twist_parity", "det_free(tau1 tau3) = +1", Status::Pass, {}};
  long long d = compose(cx.at("TAU1"), cx.at("TAU3")).det_free();
  r.witness["det_free"] = d;
  r.witness["det_tau1"] = cx.at("TAU1").det_free();
  r.witness["det_tau3"] = cx.at("TAU3").det_free();
  r.status = status_of(d == 1);
  return r;
}

inline CheckRecord curve_identity(const VerifyContext& cx) {
  CheckRecord r{"curve_identity", "A1^-1(e) = c and C = A1^-1 E A1", Status::Pass, {}};
  auto e = cx.model.curve("e"), c = cx.model.curve("c");
  const auto a1_inv = inverse(cx.at("A1"));
  auto img = a1_inv.apply(e.class_z);
  // unoriented curves: the class is determined up to sign
  bool cls = (img == c.class_z || -img == c.class_z) && reduce_mod2(img) == c.class_z2;
  bool twist = equal_in_reps(cx.at("C"), compose(a1_inv, compose(cx.at("E"), cx.at("A1"))));
  r.witness["image_of_e"] = to_string(img.coeffs());
  r.witness["class_of_c"] = to_string(c.class_z.coeffs());
  r.witness["twist_conjugation"] = twist;
  r.status = status_of(cls && twist);
  return r;
}

inline std::vector<std::string> two_sided_curves(const Model& m) {
  std::vector<std::string> out;
  for (const auto& n : m.curve_names())
    if (m.curve(n).two_sided) out.push_back(n);
  return out;
}

inline CheckRecord twist_naturality(const VerifyContext& cx) {
  CheckRecord r{"twist_naturality", "r T_k r^-1 = T_r(k)^(+-1), inverted exactly by orientation-reversing r",
                Status::Pass, {}};
  std::size_t cases = 0;
  Json bad = Json::array();
  std::vector<std::pair<RigidSymmetry, MappingClass>> rigid;
  for (const auto& s : rigid_group(cx.g)) rigid.push_back({s, from_rigid(cx.model, s)});
  for (const auto& name : two_sided_curves(cx.model)) {
    auto k = cx.model.curve(name);
    auto T = dehn_twist(k);
    for (const auto& [s, F] : rigid) {
      ++cases;
      auto lhs = compose(F, compose(T, inverse(F)));
      auto rhs = dehn_twist(apply_rigid_to_curve(s, k));
      if (s.orientation_sign() < 0) rhs = inverse(rhs);
      if (!equal_in_reps(lhs, rhs)) bad.push_back(name + " under " + describe(s));
      if (bad.size() > 8) break;
    }
  }
  r.witness["cases"] = cases;
  r.witness["failures"] = bad;
  r.status = status_of(bad.empty());
  return r;
}

inline CheckRecord pairing_suite(const VerifyContext& cx) {
  CheckRecord r{"pairing_suite",
                "pairings agree mod 2, two-sided curves have zero self-pairing and zero row sum, twists are unipotent",
                Status::Pass, {}};
  std::size_t pairs = 0;
  Json bad = Json::array();
  std::vector<CurveData> curves;
  for (const auto& n : cx.model.curve_names()) curves.push_back(cx.model.curve(n));
  for (const auto& c : curves) {
    if (!c.two_sided) continue;
    long long sum = 0;
    for (auto v : c.pairing_row) sum += v;
    if (sum != 0) bad.push_back("row sum " + c.name);
    if (signed_pairing_oracle(c, c) != 0) bad.push_back("self pairing " + c.name);
    if (dehn_twist(c).det_free() != 1) bad.push_back("det " + c.name);
    for (const auto& x : curves) {
      ++pairs;
      long long z = pair_row(x.class_z, c.pairing_row);
      long long o = signed_pairing_oracle(x, c);
      if (z != o) bad.push_back("oracle " + x.name + "," + c.name);
      if (((z % 2) + 2) % 2 != pair_z2(x.class_z2, c.class_z2)) bad.push_back("mod 2 " + x.name + "," + c.name);
    }
  }
  r.witness["pairs"] = pairs;
  r.witness["failures"] = bad;
  r.status = status_of(bad.empty());
  return r;
}

inline CheckRecord word_engine(const VerifyContext& cx, int samples = 100) {
  CheckRecord r{"word_engine", "words round-trip, free reduction is idempotent, evaluation is a homomorphism",
                Status::Pass, {}};
  std::mt19937_64 rng(0x7715u + static_cast<unsigned>(cx.g));
  int failures = 0, skipped = 0;
  for (int s = 0; s < samples; ++s) {
    auto u = random_word(rng, cx.g, 6), v = random_word(rng, cx.g, 6);
    if (parse_word(print_word(u), cx.g) != u) ++failures;
    auto fu = free_reduce(u);
    if (free_reduce(fu) != fu) ++failures;
    try {
      auto uv = evaluate(concat(u, v), cx.gens);
      if (!equal_in_reps(uv, compose(evaluate(u, cx.gens), evaluate(v, cx.gens)))) ++failures;
      if (!equal_in_reps(evaluate(fu, cx.gens), evaluate(u, cx.gens))) ++failures;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Overflow) throw;
      ++skipped;
    }
  }
  r.witness["samples"] = samples;
  r.witness["failures"] = failures;
  r.witness["overflow_skipped"] = skipped;
  r.status = status_of(failures == 0 && skipped == 0);
  return r;
}

inline CheckRecord crosswalk_check(const VerifyContext& cx) {
  CheckRecord r{"crosswalk", "the 2g-gon and crosscap models correspond: arcs, bands, symmetries and classes",
                Status::Pass, {}};
  auto cw = crosswalk(cx.model);
  r.witness["arcs"] = cw.arc_count_polygon;
  r.witness["arcs_bijective"] = cw.arcs_bijective;
  r.witness["bands_bijective"] = cw.bands_bijective;
  r.witness["symmetry_dictionary_isomorphic"] = cw.dictionary_isomorphic;
  r.witness["bands_equivariant"] = cw.bands_equivariant;
  r.witness["polygon_rotation_is_sigma"] = cw.rotation_is_sigma;
  Json refl = Json::object();
  for (const auto& [p, s] : cw.dictionary)
    for (auto n : {"tau1", "tau2"})
      if (s == cx.model.symmetry(n))
        refl[n] = "v_j -> v_(" + std::to_string(p.b) + (p.a > 0 ? "+j)" : "-j)") +
                  (s.pole_swap() ? " with pole swap" : " without pole swap");
  r.witness["reflections (derived)"] = refl;
  Json bad = Json::array();
  for (const auto& e : cw.classes)
    if (!e.agree()) bad.push_back(e.curve);
  r.witness["class_disagreements"] = bad;
  r.witness["curves_compared"] = cw.classes.size();
  r.status = status_of(cw.ok());
  return r;
}

struct GenerationSides {
  std::vector<NamedMatrix> torsion, twists;
};

inline GenerationSides generation_sides(const VerifyContext& cx, bool mod3) {
  auto red = [&](const MappingClass& f) { return mod3 ? reduce_free_z3(f) : reduce_z2(f); };
  GenerationSides s;
  s.torsion = {{"SGM", red(cx.at("SGM"))},
               {"TAU1 B0", red(compose(cx.at("TAU1"), cx.at("B0")))},
               {"TAU2 C", red(compose(cx.at("TAU2"), cx.at("C")))}};
  for (int i = 1; i <= cx.g; ++i) s.twists.push_back({index_tokens("A", i), red(cx.at(index_tokens("A", i)))});
  s.twists.push_back({"B0", red(cx.at("B0"))});
  s.twists.push_back({"C", red(cx.at("C"))});
  return s;
}

inline std::string flat_word(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s.empty() ? "ID" : s;
}

inline CheckRecord generation(const VerifyContext& cx, const VerifyOptions& opt, bool mod3,
                              std::vector<ClosureStats>& stats) {
  const std::string ring = mod3 ? "z3" : "z2";
  CheckRecord r{"generation_" + ring,
                std::string("sigma, tau1 B0, tau2 C generate the same subgroup as A_1..A_g, B0, C") +
                    (mod3 ? " on the free part mod 3" : " on homology mod 2"),
                Status::Pass, {}};
  auto sides = generation_sides(cx, mod3);
  auto t0 = std::chrono::steady_clock::now();
  auto cmp = subgroup_equal(sides.torsion, sides.twists, opt.cap, opt.threads);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  stats.push_back({"torsion_" + ring, cmp.order_a, cmp.cap_a, secs / 2});
  stats.push_back({"twists_" + ring, cmp.order_b, cmp.cap_b, secs / 2});

  // witnesses are words in the alphabet; re-evaluate them in the quotient
  std::map<std::string, ModMatrix> quotient;
  for (const auto& x : sides.torsion) quotient.emplace(x.name, x.m);
  for (const auto& x : sides.twists) quotient.emplace(x.name, x.m);
  auto replay = [&](const std::vector<std::string>& names, const ModMatrix& target) {
    ModMatrix acc = ModMatrix::identity(target.n, target.p);
    for (auto it = names.rbegin(); it != names.rend(); ++it) acc = quotient.at(*it) * acc;
    return acc == target;
  };
  bool replay_ok = true;
  Json words = Json::object();
  for (const auto& m : cmp.b_in_a) {
    words[m.name] = m.found ? Json(flat_word(m.witness)) : Json(nullptr);
    if (m.found) replay_ok = replay_ok && replay(m.witness, quotient.at(m.name));
  }
  Json back = Json::object();
  for (const auto& m : cmp.a_in_b) {
    back[m.name] = m.found ? Json(flat_word(m.witness)) : Json(nullptr);
    if (m.found) replay_ok = replay_ok && replay(m.witness, quotient.at(m.name));
  }
  r.witness["verdict"] = to_string(cmp.verdict);
  r.witness["order_torsion"] = cmp.order_a;
  r.witness["order_twists"] = cmp.order_b;
  r.witness["cap"] = opt.cap;
  r.witness["twists_in_torsion"] = words;
  r.witness["torsion_in_twists"] = back;
  r.witness["witnesses_replayed"] = replay_ok;
  if (cmp.verdict == Verdict::Indeterminate)
    r.status = Status::Indeterminate;
  else
    r.status = status_of(cmp.verdict == Verdict::Equal && replay_ok);
  return r;
}

inline Json express_search(const VerifyContext& cx, const VerifyOptions& opt) {
  std::vector<NamedClass> gens{{"SGM", cx.at("SGM")},
                               {"T1B", compose(cx.at("TAU1"), cx.at("B0"))},
                               {"T2C", compose(cx.at("TAU2"), cx.at("C"))}};
  auto res = express_bounded(cx.at("A1"), gens, opt.express_depth, opt.express_cap);
  Json j;
  j["target"] = "A1";
  j["generators"] = {"SGM", "T1B = TAU1 B0", "T2C = TAU2 C"};
  j["depth"] = opt.express_depth;
  j["word"] = res.word ? Json(print_word(*res.word)) : Json(nullptr);
  j["depth_reached"] = res.depth_reached;
  j["visited"] = res.visited;
  j["cap_exceeded"] = res.cap_exceeded;
  return j;
}

}  // namespace checks

inline Json convention_json(const Model& m, const ModelConfig& cfg) {
  std::string canon;
  for (const auto& rec : cfg.records) {
    canon += rec.type;
    for (const auto& [k, v] : rec.fields) canon += " " + k + "=" + v;
    canon += "\n";
  }
  Json j;
  j["transcription"] = m.transcription();
  j["transcription_fingerprint"] = hex64(fnv1a(canon));
  j["plane_model"] = "(1 + y) e^{i phi}, south pole at the center";
  j["curve_co_orientation"] = "left normal of the first segment, flipped at every crosscap passage";
  j["twist_sign"] = "+1: T_c(x) = x + <x, c> [c]";
  j["mu_orientation"] = "counterclockwise around the crosscap, through its southern side";
  j["equality"] = "representation level: free part over Z and H_1 mod 2";
  return j;
}

inline VerificationReport cmd_verify(const Model& m, const ModelConfig& cfg, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.genus = m.genus();
  rep.theorem_scope = m.surface().theorem_scope;
  if (m.surface().small_genus_warning)
    rep.warnings.push_back("genus below 5: the generation statement is only claimed for odd g >= 5");
  rep.convention = convention_json(m, cfg);
  VerifyContext cx(m);
  using namespace checks;
  rep.checks.push_back(homology_oracle(cx));
  rep.checks.push_back(rigid_group_check(cx));
  rep.checks.push_back(sigma_order(cx));
  rep.checks.push_back(torsion_product_order(cx, "TAU1", "B0", "tau1"));
  rep.checks.push_back(torsion_product_order(cx, "TAU2", "C", "tau2"));
  rep.checks.push_back(klein_bottle_relations(cx));
  rep.checks.push_back(rigid_identities(cx));
  rep.checks.push_back(conjugating_power(cx));
  rep.checks.push_back(membership_table(cx));
  rep.checks.push_back(half_twist_parity(cx));
  rep.checks.push_back(curve_identity(cx));
  rep.checks.push_back(twist_naturality(cx));
  rep.checks.push_back(pairing_suite(cx));
  rep.checks.push_back(word_engine(cx));
  rep.checks.push_back(crosswalk_check(cx));
  rep.checks.push_back(generation(cx, opt, false, rep.closures));
  if (opt.mod3) rep.checks.push_back(generation(cx, opt, true, rep.closures));
  if (opt.express) rep.searches["express_A1"] = express_search(cx, opt);
  return rep;
}

}  // namespace twistcheck
