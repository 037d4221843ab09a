#pragma once

// First homology of N_g in the crosscap-core basis mu_1..mu_g.
//
// Over Z the only relation is 2(mu_1 + ... + mu_g) = 0, so
// H_1(N_g; Z) = Z^{g-1} + Z/2. Over Z/2 the intersection form is the
// identity form.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "twistcheck/error.hpp"

namespace twistcheck {

using IntVec = std::vector<long long>;
using BitVec = std::vector<std::uint8_t>;

/// Integral class, canonical form: last coordinate in {0, 1}.
class H1ClassZ {
 public:
  H1ClassZ() = default;

  const IntVec& coeffs() const { return coeffs_; }
  int genus() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const {
    for (auto c : coeffs_)
      if (c) return false;
    return true;
  }

  bool operator==(const H1ClassZ&) const = default;

  friend H1ClassZ canonicalize(IntVec v);

 private:
  explicit H1ClassZ(IntVec v) : coeffs_(std::move(v)) {}
  IntVec coeffs_;
};

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline H1ClassZ canonicalize(IntVec v) {
  if (v.empty()) return H1ClassZ(std::move(v));
  long long k = floor_div(v.back(), 2);
  for (auto& c : v) c -= 2 * k;
  return H1ClassZ(std::move(v));
}

inline H1ClassZ basis_class(int genus, int label) {
  IntVec v(genus, 0);
  v[label - 1] = 1;
  return canonicalize(std::move(v));
}

inline H1ClassZ torsion_class(int genus) { return canonicalize(IntVec(genus, 1)); }

inline H1ClassZ operator-(const H1ClassZ& a) {
  IntVec v = a.coeffs();
  for (auto& c : v) c = -c;
  return canonicalize(std::move(v));
}

inline H1ClassZ operator+(const H1ClassZ& a, const H1ClassZ& b) {
  IntVec v = a.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs()[i];
  return canonicalize(std::move(v));
}

inline H1ClassZ scale(const H1ClassZ& a, long long k) {
  IntVec v = a.coeffs();
  for (auto& c : v) c *= k;
  return canonicalize(std::move(v));
}

/// Free/torsion split: (x_1 - x_g, ..., x_{g-1} - x_g), x_g mod 2.
struct FreePart {
  IntVec free;
  int torsion = 0;
  bool operator==(const FreePart&) const = default;
};

inline FreePart free_part(const H1ClassZ& x) {
  const auto& c = x.coeffs();
  FreePart out;
  long long last = c.back();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) out.free.push_back(c[i] - last);
  out.torsion = static_cast<int>(((last % 2) + 2) % 2);
  return out;
}

/// Inverse of free_part.
inline H1ClassZ from_free_part(const FreePart& f) {
  IntVec v(f.free.size() + 1);
  long long last = f.torsion;
  for (std::size_t i = 0; i < f.free.size(); ++i) v[i] = f.free[i] + last;
  v.back() = last;
  return canonicalize(std::move(v));
}

inline BitVec reduce_mod2(const H1ClassZ& x) {
  BitVec b;
  for (auto c : x.coeffs()) b.push_back(static_cast<std::uint8_t>(((c % 2) + 2) % 2));
  return b;
}

/// Class of a sum of crosscap cores, as a bit vector.
inline BitVec bits_of(int genus, const std::vector<int>& labels) {
  BitVec b(genus, 0);
  for (int l : labels) b[l - 1] ^= 1;
  return b;
}

inline int pair_z2(const BitVec& x, const BitVec& y) {
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s ^= (x[i] & y[i]);
  return s;
}

/// Pairing of a class against an integral pairing row (a two-sided curve).
/// Well defined on classes because the row sums to zero.
inline long long pair_row(const H1ClassZ& x, const IntVec& row) {
  long long s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += x.coeffs()[i] * row[i];
  return s;
}

/// x + <x, c> [c].
inline H1ClassZ transvect_row(const H1ClassZ& x, const IntVec& row, const H1ClassZ& cls) {
  return x + scale(cls, pair_row(x, row));
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string to_string(const BitVec& v) {
  std::string s;
  for (auto b : v) s += b ? '1' : '0';
  return s;
}

}  // namespace twistcheck
