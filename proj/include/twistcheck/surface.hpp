#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "twistcheck/error.hpp"

namespace twistcheck {

/// The g-crosscap model of N_g: a sphere with g crosscaps evenly spaced on
/// the equator, poles N and S, and g meridian arcs (arc k runs between
/// crosscaps k and k+1) cutting the surface into g Moebius bands.
struct SurfaceSpec {
  int genus = 0;
  bool theorem_scope = false;  // odd genus >= 5
  bool small_genus_warning = false;

  int crosscap_count() const { return genus; }
  int arc_count() const { return genus; }

  /// Label arithmetic on 1..g with wraparound.
  int wrap(int label) const { return ((label - 1) % genus + genus) % genus + 1; }
};

inline SurfaceSpec build_surface(int genus) {
  if (genus < 3 || genus % 2 == 0)
    throw Error(ErrorCode::OddGenusRequired,
                "genus " + std::to_string(genus) + " (need odd genus >= 3)");
  SurfaceSpec s;
  s.genus = genus;
  s.theorem_scope = genus >= 5;
  s.small_genus_warning = genus < 5;
  return s;
}

/// A rigid symmetry of the crosscap model. On the equator coordinate it is the
/// affine map phi -> orient * phi + shift * (2 pi / g); pole_swap exchanges
/// the hemispheres. The 4g such maps form D_g x Z/2.
class RigidSymmetry {
 public:
  RigidSymmetry() = default;
  RigidSymmetry(int genus, int shift, bool reflect, bool pole_swap)
      : genus_(genus), shift_(((shift % genus) + genus) % genus), reflect_(reflect),
        pole_swap_(pole_swap) {}

  static RigidSymmetry identity(int genus) { return {genus, 0, false, false}; }

  int genus() const { return genus_; }
  int shift() const { return shift_; }
  bool reflect() const { return reflect_; }
  bool pole_swap() const { return pole_swap_; }

  /// Image of crosscap label k (1-based).
  int apply(int label) const {
    int j = label - 1;
    int image = reflect_ ? shift_ - j : j + shift_;
    return ((image % genus_) + genus_) % genus_ + 1;
  }

  std::vector<int> perm() const {
    std::vector<int> p(genus_);
    for (int k = 1; k <= genus_; ++k) p[k - 1] = apply(k);
    return p;
  }

  /// +1 when the map preserves the orientation of the sphere.
  int orientation_sign() const { return (reflect_ != pole_swap_) ? -1 : 1; }

  bool operator==(const RigidSymmetry&) const = default;

 private:
  int genus_ = 0;
  int shift_ = 0;
  bool reflect_ = false;
  bool pole_swap_ = false;
};

/// r1 after r2.
inline RigidSymmetry rigid_compose(const RigidSymmetry& r1, const RigidSymmetry& r2) {
  if (r1.genus() != r2.genus())
    throw Error(ErrorCode::GenusMismatch, "rigid_compose");
  int a1 = r1.reflect() ? -1 : 1;
  int shift = a1 * r2.shift() + r1.shift();
  return {r1.genus(), shift, r1.reflect() != r2.reflect(), r1.pole_swap() != r2.pole_swap()};
}

inline RigidSymmetry rigid_inverse(const RigidSymmetry& r) {
  int a = r.reflect() ? -1 : 1;
  return {r.genus(), -a * r.shift(), r.reflect(), r.pole_swap()};
}

inline RigidSymmetry rigid_power(const RigidSymmetry& r, int n) {
  RigidSymmetry base = n < 0 ? rigid_inverse(r) : r;
  RigidSymmetry out = RigidSymmetry::identity(r.genus());
  for (int i = 0; i < std::abs(n); ++i) out = rigid_compose(base, out);
  return out;
}

inline int rigid_order(const RigidSymmetry& r) {
  const auto id = RigidSymmetry::identity(r.genus());
  RigidSymmetry p = r;
  int n = 1;
  while (!(p == id)) {
    p = rigid_compose(r, p);
    ++n;
  }
  return n;
}

/// All 4g rigid symmetries in a fixed order.
inline std::vector<RigidSymmetry> rigid_group(int genus) {
  std::vector<RigidSymmetry> out;
  for (int ps = 0; ps < 2; ++ps)
    for (int rf = 0; rf < 2; ++rf)
      for (int s = 0; s < genus; ++s) out.emplace_back(genus, s, rf == 1, ps == 1);
  return out;
}

inline std::string describe(const RigidSymmetry& r) {
  std::string s = "perm=(";
  auto p = r.perm();
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  s += ") pole_swap=" + std::to_string(r.pole_swap()) + " reflect=" + std::to_string(r.reflect());
  return s;
}

}  // namespace twistcheck
