#pragma once

// Correspondence between the 2g-gon model and the crosscap model.
//
// 2g-gon: vertices v_0..v_{2g-1} alternate N, S; side s_j runs v_j -> v_{j+1}
// and s_{j+g} is glued to s_j; a crosscap sits in the center. The g diameters
// M_j (v_j -> v_{j+g}, through the crosscap) cut the surface into g Moebius
// bands, the j-th one containing side s_j.
//
// Crosscap model: arc k (0-based) runs N -> S between crosscaps k+1 and k+2.
// Dictionary: M_j <-> arc j, oriented from the pole it starts at, and the
// band of side s_j <-> crosscap j+2.

#include <optional>
#include <string>
#include <vector>

#include "twistcheck/homology.hpp"
#include "twistcheck/model.hpp"
#include "twistcheck/surface.hpp"

namespace twistcheck {

/// Dihedral symmetry of the 2g-gon: v_j -> v_{a j + b}, a = +-1.
struct PolygonSymmetry {
  int genus = 0;
  int a = 1;
  int b = 0;
  bool operator==(const PolygonSymmetry&) const = default;
};

inline int polygon_vertex(const PolygonSymmetry& p, int j) {
  const int n = 2 * p.genus;
  return ((p.a * j + p.b) % n + n) % n;
}

inline std::vector<PolygonSymmetry> polygon_group(int genus) {
  std::vector<PolygonSymmetry> out;
  for (int a : {1, -1})
    for (int b = 0; b < 2 * genus; ++b) out.push_back({genus, a, b});
  return out;
}

/// Action on oriented meridians: arc index and whether N and S trade places.
struct ArcAction {
  std::vector<int> image;  // arc j -> image[j]
  bool pole_swap = false;
  bool operator==(const ArcAction&) const = default;
};

inline ArcAction arc_action(const PolygonSymmetry& p) {
  ArcAction act;
  for (int j = 0; j < p.genus; ++j) act.image.push_back(polygon_vertex(p, j) % p.genus);
  act.pole_swap = ((p.b % 2) + 2) % 2 == 1;  // a = +-1 preserves vertex parity
  return act;
}

inline ArcAction arc_action(const RigidSymmetry& r) {
  const int g = r.genus();
  ArcAction act;
  for (int j = 0; j < g; ++j) {
    int x = r.apply(j + 1), y = r.apply((j + 1) % g + 1);
    // the image arc lies between x and y, which are cyclically adjacent
    int lo = (y == x % g + 1) ? x : y;
    act.image.push_back(lo - 1);
  }
  act.pole_swap = r.pole_swap();
  return act;
}

/// Rigid counterpart of a polygon symmetry under the meridian dictionary.
inline std::optional<RigidSymmetry> rigid_counterpart(const PolygonSymmetry& p) {
  const auto want = arc_action(p);
  for (const auto& r : rigid_group(p.genus))
    if (arc_action(r) == want) return r;
  return std::nullopt;
}

/// Crosscap inside the band of side s_j, and back.
inline int crosscap_of_side(int genus, int j) { return (j + 1) % genus + 1; }
inline int side_of_crosscap(int genus, int k) { return ((k - 2) % genus + genus) % genus; }

/// Side of the 2g-gon a side maps to, reduced to 0..g-1.
inline int polygon_side(const PolygonSymmetry& p, int j) {
  // s_j has endpoints v_j, v_{j+1}; its image starts at the smaller-index endpoint mod g
  const int x = polygon_vertex(p, j), y = polygon_vertex(p, j + 1);
  const int n = 2 * p.genus;
  int start = (y == (x + 1) % n) ? x : y;
  return start % p.genus;
}

/// Class of a curve recovered from its signed crossings with the chain
/// a_1..a_g and its passage parity. Requires every a_k row to be
/// +-(e_k - e_{k+1}); returns nothing when the counts are inconsistent.
inline std::optional<H1ClassZ> class_from_crossings(const Model& m, const CurveData& c) {
  const int g = m.genus();
  IntVec diff(g), sign(g);
  for (int k = 1; k <= g; ++k) {
    auto ak = m.curve("a" + std::to_string(k));
    const int next = k % g;
    for (int i = 0; i < g; ++i) {
      long long want = i == k - 1 ? ak.pairing_row[k - 1] : i == next ? -ak.pairing_row[k - 1] : 0;
      if (ak.pairing_row[i] != want || (ak.pairing_row[k - 1] != 1 && ak.pairing_row[k - 1] != -1))
        return std::nullopt;
    }
    sign[k - 1] = ak.pairing_row[k - 1];
    diff[k - 1] = sign[k - 1] * signed_pairing_oracle(c, ak);  // x_k - x_{k+1}
  }
  IntVec x(g, 0);
  for (int k = 1; k < g; ++k) x[k] = x[k - 1] - diff[k - 1];
  if (x[g - 1] - x[0] != diff[g - 1]) return std::nullopt;
  // x is fixed up to adding multiples of the all-ones vector; parity picks one
  const BitVec bits = reduce_mod2(c.class_z);
  const bool flip = ((x[0] % 2) + 2) % 2 != bits[0];
  for (int i = 0; i < g; ++i) {
    if (flip) x[i] += 1;
    if (((x[i] % 2) + 2) % 2 != bits[i]) return std::nullopt;
  }
  return canonicalize(x);
}

struct CrosswalkEntry {
  std::string curve;
  H1ClassZ traced;
  std::optional<H1ClassZ> recovered;
  bool agree() const { return recovered && *recovered == traced; }
};

struct Crosswalk {
  int genus = 0;
  int arc_count_polygon = 0, arc_count_crosscap = 0;
  bool arcs_bijective = false;
  bool bands_bijective = false;
  bool dictionary_isomorphic = false;  // every polygon symmetry has a distinct rigid counterpart
  bool bands_equivariant = false;
  bool rotation_is_sigma = false;      // v_j -> v_{j+1} corresponds to t o tau3
  std::vector<std::pair<PolygonSymmetry, RigidSymmetry>> dictionary;
  std::vector<CrosswalkEntry> classes;

  bool ok() const {
    if (!(arcs_bijective && bands_bijective && dictionary_isomorphic && bands_equivariant && rotation_is_sigma))
      return false;
    for (const auto& e : classes)
      if (!e.agree()) return false;
    return true;
  }
};

inline Crosswalk crosswalk(const Model& m) {
  const int g = m.genus();
  Crosswalk cw;
  cw.genus = g;
  cw.arc_count_polygon = g;  // diameters M_0..M_{g-1}
  cw.arc_count_crosscap = m.surface().arc_count();

  std::vector<int> seen(g, 0);
  for (int j = 0; j < g; ++j) ++seen[arc_action(PolygonSymmetry{g, 1, 0}).image[j]];
  cw.arcs_bijective = cw.arc_count_polygon == cw.arc_count_crosscap;
  for (int s : seen) cw.arcs_bijective = cw.arcs_bijective && s == 1;

  std::vector<int> hit(g + 1, 0);
  for (int j = 0; j < g; ++j) ++hit[crosscap_of_side(g, j)];
  cw.bands_bijective = true;
  for (int k = 1; k <= g; ++k)
    cw.bands_bijective = cw.bands_bijective && hit[k] == 1 && side_of_crosscap(g, crosscap_of_side(g, k - 1)) == k - 1;

  cw.dictionary_isomorphic = true;
  cw.bands_equivariant = true;
  std::vector<RigidSymmetry> images;
  for (const auto& p : polygon_group(g)) {
    auto r = rigid_counterpart(p);
    if (!r) {
      cw.dictionary_isomorphic = false;
      continue;
    }
    for (const auto& prev : images) cw.dictionary_isomorphic = cw.dictionary_isomorphic && !(prev == *r);
    images.push_back(*r);
    cw.dictionary.push_back({p, *r});
    for (int j = 0; j < g; ++j)
      cw.bands_equivariant = cw.bands_equivariant && crosscap_of_side(g, polygon_side(p, j)) == r->apply(crosscap_of_side(g, j));
  }
  // composition must be respected too
  if (cw.dictionary_isomorphic)
    for (const auto& [p1, r1] : cw.dictionary)
      for (const auto& [p2, r2] : cw.dictionary) {
        PolygonSymmetry p{g, p1.a * p2.a, p1.a * p2.b + p1.b};
        p.b = ((p.b % (2 * g)) + 2 * g) % (2 * g);
        auto r = rigid_counterpart(p);
        cw.dictionary_isomorphic = cw.dictionary_isomorphic && r && *r == rigid_compose(r1, r2);
      }

  auto rho = rigid_counterpart(PolygonSymmetry{g, 1, 1});
  cw.rotation_is_sigma = rho && *rho == m.symmetry("sigma") &&
                         m.symmetry("sigma") == rigid_compose(m.symmetry("t"), m.symmetry("tau3"));

  for (const auto& name : m.curve_names()) {
    auto c = m.curve(name);
    cw.classes.push_back({name, c.class_z, class_from_crossings(m, c)});
  }
  return cw;
}

}  // namespace twistcheck
