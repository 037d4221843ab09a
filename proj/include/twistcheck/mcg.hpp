#pragma once

// Mapping classes as homology representations.
//
// A MappingClass carries an integral lift on Z^g (coefficients in the core
// basis) together with its inverse. The lift preserves the line spanned by
// mu_1 + ... + mu_g, so it descends to the free part Z^g / <u> = Z^{g-1}
// (mat_free) and to H_1(N_g; Z/2) (mat_z2). Equality of mapping classes is
// equality of these two representations only.

#include <optional>
#include <string>
#include <utility>

#include "twistcheck/homology.hpp"
#include "twistcheck/matrix.hpp"
#include "twistcheck/model.hpp"

namespace twistcheck {

class MappingClass {
 public:
  MappingClass() = default;
  MappingClass(IntMatrix lift, IntMatrix lift_inverse, std::string provenance)
      : lift_(std::move(lift)), lift_inv_(std::move(lift_inverse)), provenance_(std::move(provenance)) {
    derive();
  }

  static MappingClass identity(int genus) {
    return {IntMatrix::identity(genus), IntMatrix::identity(genus), "ID"};
  }

  int genus() const { return lift_.size(); }
  const IntMatrix& lift() const { return lift_; }
  const IntMatrix& lift_inverse() const { return lift_inv_; }
  const IntMatrix& mat_free() const { return free_; }
  const BitMatrix& mat_z2() const { return z2_; }
  int det_free() const { return det_; }
  const std::string& provenance() const { return provenance_; }

  MappingClass with_provenance(std::string p) const {
    MappingClass m = *this;
    m.provenance_ = std::move(p);
    return m;
  }

  H1ClassZ apply(const H1ClassZ& x) const { return canonicalize(lift_.apply(x.coeffs())); }

  BitVec apply_z2(const BitVec& x) const {
    BitVec out(x.size(), 0);
    for (int i = 0; i < genus(); ++i)
      for (int j = 0; j < genus(); ++j) out[i] ^= static_cast<std::uint8_t>(z2_.get(i, j) & x[j]);
    return out;
  }

 private:
  void derive() {
    const int g = lift_.size();
    free_ = IntMatrix(g - 1);
    // column j of mat_free: free coordinates of the image of mu_j
    for (int j = 0; j + 1 < g; ++j)
      for (int i = 0; i + 1 < g; ++i) free_(i, j) = lift_(i, j) - lift_(g - 1, j);
    z2_ = BitMatrix(g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) z2_.set(i, j, (lift_(i, j) & 1) != 0);
    long long d = determinant(free_);
    if (d != 1 && d != -1) throw Error(ErrorCode::SingularGenerator, "free-part determinant " + std::to_string(d));
    det_ = static_cast<int>(d);
  }

  IntMatrix lift_, lift_inv_, free_;
  BitMatrix z2_;
  int det_ = 1;
  std::string provenance_;
};

/// Representative of a class with the smallest coefficient sum in absolute value.
inline IntVec short_representative(const H1ClassZ& x) {
  IntVec a = x.coeffs(), b = x.coeffs();
  long long na = 0, nb = 0;
  for (auto& v : b) v -= 2;
  for (auto v : a) na += v < 0 ? -v : v;
  for (auto v : b) nb += v < 0 ? -v : v;
  return nb < na ? b : a;
}

inline MappingClass dehn_twist(const CurveData& c) {
  if (!c.two_sided) throw Error(ErrorCode::TwoSidedRequired, "dehn_twist(" + c.name + ")");
  const int g = static_cast<int>(c.pairing_row.size());
  IntVec v = short_representative(c.class_z);
  IntMatrix lift = IntMatrix::identity(g), inv = IntMatrix::identity(g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      lift(i, j) += v[i] * c.pairing_row[j];
      inv(i, j) -= v[i] * c.pairing_row[j];
    }
  return {lift, inv, "T(" + c.name + ")"};
}

namespace detail {

/// Lift whose columns are traced images of the cores.
inline IntMatrix lift_from_images(const std::vector<H1ClassZ>& images) {
  const int g = static_cast<int>(images.size());
  IntMatrix m(g);
  for (int j = 0; j < g; ++j) {
    IntVec col = short_representative(images[j]);
    for (int i = 0; i < g; ++i) m(i, j) = col[i];
  }
  return m;
}

inline std::vector<H1ClassZ> traced_core_images(const Model& model, const RigidSymmetry& r) {
  std::vector<H1ClassZ> out;
  for (int j = 1; j <= model.genus(); ++j)
    out.push_back(apply_rigid_to_curve(r, model.curve("mu" + std::to_string(j))).class_z);
  return out;
}

}  // namespace detail

inline MappingClass from_rigid(const Model& model, const RigidSymmetry& r, std::string name = "") {
  auto fwd = detail::lift_from_images(detail::traced_core_images(model, r));
  auto back = detail::lift_from_images(detail::traced_core_images(model, rigid_inverse(r)));
  return {fwd, back, name.empty() ? describe(r) : name};
}

/// Crosscap transposition U_i exchanging crosscaps i and i+1 by a half turn
/// supported near them; traced on the cores.
inline MappingClass crosscap_transposition(const Model& model, int i) {
  std::vector<H1ClassZ> images;
  for (int j = 1; j <= model.genus(); ++j) {
    CurveData mu = model.curve("mu" + std::to_string(j));
    CurveData moved;
    moved.name = mu.name;
    moved.line = geometry::local_half_turn(mu.line, i);
    moved.probe = geometry::local_half_turn(mu.probe, i);
    detail::fill_from_lines(moved);
    images.push_back(moved.class_z);
  }
  auto lift = detail::lift_from_images(images);
  // a half turn is its own inverse on the cores up to the boundary twist,
  // which is trivial in homology
  return {lift, lift.transpose(), "U" + std::to_string(i)};
}

inline MappingClass compose(const MappingClass& f, const MappingClass& h) {
  if (f.genus() != h.genus()) throw Error(ErrorCode::GenusMismatch, "compose");
  return {f.lift() * h.lift(), h.lift_inverse() * f.lift_inverse(), f.provenance() + " " + h.provenance()};
}

inline MappingClass inverse(const MappingClass& f) {
  return {f.lift_inverse(), f.lift(), "(" + f.provenance() + ")'"};
}

inline MappingClass power(const MappingClass& f, long long n) {
  MappingClass base = n < 0 ? inverse(f) : f;
  MappingClass out = MappingClass::identity(f.genus());
  unsigned long long k = n < 0 ? -static_cast<unsigned long long>(n) : n;
  while (k) {
    if (k & 1) out = compose(base, out);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return out.with_provenance("(" + f.provenance() + ")^" + std::to_string(n));
}

inline MappingClass crosscap_slide(const Model& model, int i) {
  auto y = compose(dehn_twist(model.curve("a" + std::to_string(i))), crosscap_transposition(model, i));
  return y.with_provenance("Y" + std::to_string(i));
}

inline bool in_twist_subgroup(const MappingClass& f) { return f.det_free() == 1; }

inline bool equal_in_reps(const MappingClass& f, const MappingClass& h) {
  if (f.genus() != h.genus()) throw Error(ErrorCode::GenusMismatch, "equal_in_reps");
  return f.mat_free() == h.mat_free() && f.mat_z2() == h.mat_z2();
}

inline bool is_identity_in_reps(const MappingClass& f) {
  return equal_in_reps(f, MappingClass::identity(f.genus()));
}

/// Least n <= bound with f^n trivial in both representations.
inline std::optional<int> rep_order(const MappingClass& f, int bound) {
  MappingClass p = f;
  for (int n = 1; n <= bound; ++n) {
    if (is_identity_in_reps(p)) return n;
    p = compose(f, p);
  }
  return std::nullopt;
}

/// The integral and mod-2 actions agree after reduction.
inline bool reps_compatible(const MappingClass& f) {
  const int g = f.genus();
  for (int j = 0; j < g; ++j) {
    auto img = f.apply(basis_class(g, j + 1));
    BitVec e(g, 0);
    e[j] = 1;
    if (reduce_mod2(img) != f.apply_z2(e)) return false;
  }
  return true;
}

}  // namespace twistcheck
