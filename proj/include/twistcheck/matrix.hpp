#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistcheck/error.hpp"

namespace twistcheck {

/// Dense square integer matrix, row-major, with overflow-checked products.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  long long& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  long long operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<long long>& data() const { return a_; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const {
    std::vector<long long> out(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
    return out;
  }

  static long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer matrix entry");
    return r;
  }
  static long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer matrix entry");
    return r;
  }

 private:
  int n_ = 0;
  std::vector<long long> a_;
};

inline IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::GenusMismatch, "matrix product");
  const int n = x.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long xik = x(i, k);
      if (!xik) continue;
      for (int j = 0; j < n; ++j)
        out(i, j) = IntMatrix::checked_add(out(i, j), IntMatrix::checked_mul(xik, y(k, j)));
    }
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline long long determinant(IntMatrix m) {
  const int n = m.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = static_cast<long long>(v / prev);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Square matrix over Z/2, one row per 64-bit word (g <= 64).
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), rows_(n, 0) {}

  static BitMatrix identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int size() const { return n_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool v) {
    if (v) rows_[r] |= (std::uint64_t{1} << c);
    else rows_[r] &= ~(std::uint64_t{1} << c);
  }
  std::uint64_t row(int r) const { return rows_[r]; }
  bool operator==(const BitMatrix&) const = default;

  friend BitMatrix operator*(const BitMatrix& x, const BitMatrix& y) {
    BitMatrix out(x.n_);
    for (int i = 0; i < x.n_; ++i) {
      std::uint64_t acc = 0, r = x.rows_[i];
      while (r) {
        int k = __builtin_ctzll(r);
        acc ^= y.rows_[k];
        r &= r - 1;
      }
      out.rows_[i] = acc;
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < m.size(); ++j) s += (j ? "," : "") + std::to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

inline std::string to_string(const BitMatrix& m) {
  std::string s;
  for (int i = 0; i < m.size(); ++i) {
    if (i) s += '/';
    for (int j = 0; j < m.size(); ++j) s += m.get(i, j) ? '1' : '0';
  }
  return s;
}

}  // namespace twistcheck
