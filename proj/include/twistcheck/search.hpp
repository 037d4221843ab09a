#pragma once

// Representation-level searches: subgroup equality over a finite quotient,
// the conjugating power of the rotation, and bounded word search.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcheck/closure.hpp"
#include "twistcheck/mcg.hpp"
#include "twistcheck/surface.hpp"
#include "twistcheck/words.hpp"

namespace twistcheck {

enum class Verdict { Equal, NotEqual, Indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::NotEqual: return "not_equal";
    default: return "indeterminate";
  }
}

struct NamedMatrix {
  std::string name;
  ModMatrix m;
};

struct Membership {
  std::string name;                  // generator being tested
  bool found = false;
  std::vector<std::string> witness;  // word in the other side's generators
};

struct SubgroupComparison {
  Verdict verdict = Verdict::Indeterminate;
  std::size_t order_a = 0, order_b = 0;
  bool cap_a = false, cap_b = false;
  std::vector<Membership> b_in_a, a_in_b;
};

namespace detail {
inline std::vector<Membership> memberships(const FiniteGroupTable& t, const std::vector<NamedMatrix>& side,
                                           const std::vector<NamedMatrix>& probes) {
  std::vector<Membership> out;
  for (const auto& pr : probes) {
    Membership m{pr.name, false, {}};
    if (auto id = t.find(pr.m)) {
      m.found = true;
      for (int gi : t.word(*id)) m.witness.push_back(side[static_cast<std::size_t>(gi)].name);
    }
    out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<ModMatrix> matrices(const std::vector<NamedMatrix>& v) {
  std::vector<ModMatrix> out;
  for (const auto& x : v) out.push_back(x.m);
  return out;
}
}  // namespace detail

/// Closes both sides and tests every generator of each for membership in
/// the other's closure. A missing generator in a complete table is decisive;
/// a cap hit otherwise leaves the verdict indeterminate.
inline SubgroupComparison subgroup_equal(const std::vector<NamedMatrix>& a, const std::vector<NamedMatrix>& b,
                                         std::size_t cap = kDefaultCap, unsigned threads = 1) {
  SubgroupComparison r;
  auto ta = closure(detail::matrices(a), cap, threads);
  r.order_a = ta.order();
  r.cap_a = ta.cap_exceeded;
  r.b_in_a = detail::memberships(ta, a, b);
  ta = FiniteGroupTable{};
  auto tb = closure(detail::matrices(b), cap, threads);
  r.order_b = tb.order();
  r.cap_b = tb.cap_exceeded;
  r.a_in_b = detail::memberships(tb, b, a);

  auto all_found = [](const std::vector<Membership>& v) {
    for (const auto& m : v)
      if (!m.found) return false;
    return true;
  };
  const bool ba = all_found(r.b_in_a), ab = all_found(r.a_in_b);
  if ((!ba && !r.cap_a) || (!ab && !r.cap_b))
    r.verdict = Verdict::NotEqual;
  else if (ba && ab)
    r.verdict = Verdict::Equal;  // witnesses are valid even from a partial table
  else
    r.verdict = Verdict::Indeterminate;
  return r;
}

struct ConjugatingPower {
  std::optional<int> k;        // least k with t^k tau1 t^-k = tau2 in both representations
  std::optional<int> rigid_k;  // same at the rigid-model level
};

inline ConjugatingPower find_conjugating_power(const MappingClass& t, const MappingClass& tau1,
                                               const MappingClass& tau2) {
  ConjugatingPower out;
  const int g = t.genus();
  MappingClass tk = MappingClass::identity(g), tk_inv = MappingClass::identity(g);
  const MappingClass t_inv = inverse(t);
  for (int k = 0; k < g; ++k) {
    if (equal_in_reps(compose(tk, compose(tau1, tk_inv)), tau2)) {
      out.k = k;
      break;
    }
    tk = compose(t, tk);
    tk_inv = compose(tk_inv, t_inv);
  }
  return out;
}

inline std::optional<int> find_conjugating_power(const RigidSymmetry& t, const RigidSymmetry& tau1,
                                                 const RigidSymmetry& tau2) {
  const int g = t.genus();
  for (int k = 0; k < g; ++k) {
    auto tk = rigid_power(t, k);
    if (rigid_compose(tk, rigid_compose(tau1, rigid_inverse(tk))) == tau2) return k;
  }
  return std::nullopt;
}

inline ConjugatingPower find_conjugating_power(const MappingClass& t, const MappingClass& tau1,
                                               const MappingClass& tau2, const RigidSymmetry& rt,
                                               const RigidSymmetry& rtau1, const RigidSymmetry& rtau2) {
  auto out = find_conjugating_power(t, tau1, tau2);
  out.rigid_k = find_conjugating_power(rt, rtau1, rtau2);
  return out;
}

struct NamedClass {
  std::string token;
  MappingClass f;
};

struct ExpressResult {
  std::optional<GeneratorWord> word;
  int depth_reached = 0;
  std::size_t visited = 0;
  bool cap_exceeded = false;
};

/// Breadth-first search by word length over the generators and their
/// inverses. Elements already reached at a shorter length are pruned, so the
/// first hit is a shortest word. Equality is representation-level only.
inline ExpressResult express_bounded(const MappingClass& target, const std::vector<NamedClass>& gens, int depth,
                                     std::size_t cap = 2'000'000) {
  ExpressResult res;
  if (depth < 1 || gens.empty()) return res;
  const int g = target.genus();
  struct Step {
    MappingClass f;
    GeneratorWord w;
  };
  std::vector<std::pair<Letter, MappingClass>> letters;
  for (const auto& x : gens) {
    letters.push_back({Letter{x.token, 1}, x.f});
    letters.push_back({Letter{x.token, -1}, inverse(x.f)});
  }
  auto key = [](const MappingClass& f) { return to_string(f.mat_free()) + "|" + to_string(f.mat_z2()); };
  std::map<std::string, bool> seen;
  std::vector<Step> layer{{MappingClass::identity(g), GeneratorWord{}}};
  seen[key(layer[0].f)] = true;
  if (equal_in_reps(layer[0].f, target)) {
    res.word = GeneratorWord{};
    return res;
  }
  for (int d = 1; d <= depth; ++d) {
    res.depth_reached = d;
    std::vector<Step> next;
    for (const auto& s : layer) {
      for (const auto& [letter, f] : letters) {
        MappingClass h = MappingClass::identity(g);
        try {
          h = compose(f, s.f);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::Overflow) continue;
          throw;
        }
        if (!seen.emplace(key(h), true).second) continue;
        GeneratorWord w;
        w.letters.push_back(letter);
        w.letters.insert(w.letters.end(), s.w.letters.begin(), s.w.letters.end());
        if (equal_in_reps(h, target)) {
          res.word = w;
          res.visited = seen.size();
          return res;
        }
        if (seen.size() >= cap) {
          res.cap_exceeded = true;
          res.visited = seen.size();
          return res;
        }
        next.push_back({std::move(h), std::move(w)});
      }
    }
    layer = std::move(next);
  }
  res.visited = seen.size();
  return res;
}

}  // namespace twistcheck
