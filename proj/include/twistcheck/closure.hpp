#pragma once

// Breadth-first closure of finite matrix groups over Z/2 or Z/3.
//
// Elements are keyed by a fixed-width packed encoding of their entries in
// row-major order (one bit per entry over Z/2, base-3 digits over Z/3).
// Every element keeps a parent link (predecessor, generator index), so a
// word in the generators can be read back for any element.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <ostream>
#include <thread>
#include <tuple>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcheck/error.hpp"
#include "twistcheck/mcg.hpp"

namespace twistcheck {

/// Square matrix over Z/p with p in {2, 3}.
struct ModMatrix {
  int n = 0;
  int p = 2;
  std::vector<std::uint8_t> a;  // row-major

  static ModMatrix identity(int n, int p) {
    ModMatrix m{n, p, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
  }

  std::uint8_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  bool operator==(const ModMatrix&) const = default;
};

inline ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
  ModMatrix out{x.n, x.p, std::vector<std::uint8_t>(x.a.size(), 0)};
  const int n = x.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += x(i, k) * y(k, j);
      out.a[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(s % x.p);
    }
  return out;
}

inline int mod_det(ModMatrix m) {
  const int n = m.n, p = m.p;
  int det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m.a[r * n + c]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(m.a[c * n + k], m.a[piv * n + k]);
      det = (p - det) % p;
    }
    int pv = m.a[c * n + c];
    det = det * pv % p;
    int inv = pv;  // over Z/2 and Z/3 every unit is its own inverse
    for (int r = c + 1; r < n; ++r) {
      int f = m.a[r * n + c] * inv % p;
      if (!f) continue;
      for (int k = c; k < n; ++k) m.a[r * n + k] = static_cast<std::uint8_t>((m.a[r * n + k] + (p - f) * m.a[c * n + k]) % p);
    }
  }
  return det;
}

inline ModMatrix reduce_z2(const MappingClass& f) {
  const int g = f.genus();
  ModMatrix m{g, 2, std::vector<std::uint8_t>(static_cast<std::size_t>(g) * g)};
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) m.a[static_cast<std::size_t>(i) * g + j] = f.mat_z2().get(i, j);
  return m;
}

inline ModMatrix reduce_free_z3(const MappingClass& f) {
  const auto& fr = f.mat_free();
  const int n = fr.size();
  ModMatrix m{n, 3, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.a[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(((fr(i, j) % 3) + 3) % 3);
  return m;
}

/// 128-bit packed key.
using MatrixKey = std::array<std::uint64_t, 2>;

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& k) const noexcept {
    // splitmix64 finalizer; the low bits pick the probe start
    std::uint64_t h = k[0] ^ (k[1] * 0x9E3779B97F4A7C15ull);
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ull;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

inline bool key_fits(int n, int p) {
  // Z/3 packs 5 digits per byte
  return p == 2 ? n * n <= 128 : (n * n + 4) / 5 <= 16;
}

inline MatrixKey encode(const ModMatrix& m) {
  MatrixKey k{0, 0};
  if (m.p == 2) {
    for (std::size_t i = 0; i < m.a.size(); ++i)
      if (m.a[i]) k[i / 64] |= std::uint64_t{1} << (i % 64);
    return k;
  }
  std::array<std::uint8_t, 16> bytes{};
  for (std::size_t i = 0; i < m.a.size(); i += 5) {
    int v = 0;
    for (std::size_t d = std::min(m.a.size(), i + 5); d-- > i;) v = v * 3 + m.a[d];
    bytes[i / 5] = static_cast<std::uint8_t>(v);
  }
  for (int b = 0; b < 16; ++b) k[b / 8] |= std::uint64_t{bytes[b]} << (8 * (b % 8));
  return k;
}

inline ModMatrix decode(const MatrixKey& k, int n, int p) {
  ModMatrix m{n, p, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n)};
  if (p == 2) {
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = static_cast<std::uint8_t>((k[i / 64] >> (i % 64)) & 1u);
    return m;
  }
  for (std::size_t i = 0; i < m.a.size(); i += 5) {
    int v = static_cast<int>((k[(i / 5) / 8] >> (8 * ((i / 5) % 8))) & 0xFF);
    for (std::size_t d = i; d < std::min(m.a.size(), i + 5); ++d) {
      m.a[d] = static_cast<std::uint8_t>(v % 3);
      v /= 3;
    }
  }
  return m;
}

inline std::string key_hex(const MatrixKey& k) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (int w = 1; w >= 0; --w)
    for (int b = 60; b >= 0; b -= 4) s += hex[(k[w] >> b) & 0xF];
  return s;
}

struct FiniteGroupTable {
  std::vector<ModMatrix> generators;
  std::vector<MatrixKey> keys;       // element i
  std::vector<std::uint32_t> parent;  // predecessor of element i
  std::vector<std::int8_t> via;       // generator index, -1 for the identity
  std::size_t cap = 0;
  bool cap_exceeded = false;

  std::size_t order() const { return keys.size(); }

  std::optional<std::uint32_t> find(const ModMatrix& m) const { return lookup(encode(m)); }

  std::optional<std::uint32_t> lookup(const MatrixKey& k) const {
    if (slots_.empty()) return std::nullopt;
    for (std::size_t s = MatrixKeyHash{}(k) & mask();; s = (s + 1) & mask()) {
      if (slots_[s] == kEmpty) return std::nullopt;
      if (keys[slots_[s]] == k) return slots_[s];
    }
  }

  /// Append a new element; the caller has checked it is absent.
  std::uint32_t add(const MatrixKey& k, std::uint32_t from, int gen) {
    if (2 * (keys.size() + 1) > slots_.size()) grow();
    auto id = static_cast<std::uint32_t>(keys.size());
    keys.push_back(k);
    parent.push_back(from);
    via.push_back(static_cast<std::int8_t>(gen));
    place(id);
    return id;
  }

  /// Generator indices, written left to right (applied right to left).
  std::vector<int> word(std::uint32_t element) const {
    std::vector<int> w;
    while (via[element] >= 0) {
      w.push_back(via[element]);
      element = parent[element];
    }
    return w;
  }

 private:
  // open addressing over element ids, load factor at most one half
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;
  std::vector<std::uint32_t> slots_;

  std::size_t mask() const { return slots_.size() - 1; }

  void place(std::uint32_t id) {
    std::size_t s = MatrixKeyHash{}(keys[id]) & mask();
    while (slots_[s] != kEmpty) s = (s + 1) & mask();
    slots_[s] = id;
  }

  void grow() {
    slots_.assign(std::max<std::size_t>(1024, 2 * slots_.size()), kEmpty);
    for (std::uint32_t id = 0; id < keys.size(); ++id) place(id);
  }
};

inline constexpr std::size_t kDefaultCap = 50'000'000;

/// Worker count from TWISTCHECK_THREADS, default 1.
inline unsigned thread_count_from_env() {
  const char* v = std::getenv("TWISTCHECK_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min<long>(n, 256));
}

/// Breadth-first closure under left multiplication by the generators, in
/// the given generator order. Stops with cap_exceeded once `cap` elements
/// are stored. For a finite group this is also closed under inverses.
///
/// Products for a slice of the frontier are computed by `threads` workers,
/// then inserted sequentially in (element, generator) order, so the table
/// does not depend on scheduling.
inline FiniteGroupTable closure(const std::vector<ModMatrix>& generators, std::size_t cap = kDefaultCap,
                                unsigned threads = 1) {
  if (generators.empty()) throw Error(ErrorCode::SingularGenerator, "closure of an empty generator list");
  const int n = generators[0].n, p = generators[0].p;
  if (p != 2 && p != 3) throw Error(ErrorCode::SingularGenerator, "coefficient ring must be Z/2 or Z/3");
  if (!key_fits(n, p)) throw Error(ErrorCode::SingularGenerator, "matrix too large for the packed key");
  if (generators.size() > 127) throw Error(ErrorCode::SingularGenerator, "too many generators");
  for (const auto& g : generators) {
    if (g.n != n || g.p != p) throw Error(ErrorCode::GenusMismatch, "closure generators differ in size or ring");
    if (mod_det(g) == 0) throw Error(ErrorCode::SingularGenerator, "singular generator");
  }
  FiniteGroupTable t;
  t.generators = generators;
  t.cap = cap;
  auto insert = [&](const MatrixKey& key, std::uint32_t parent, int via) {
    if (t.lookup(key)) return true;
    if (t.keys.size() >= cap) return false;
    t.add(key, parent, via);
    return true;
  };
  insert(encode(ModMatrix::identity(n, p)), 0, -1);
  const std::size_t ng = generators.size();
  const std::size_t slice = threads > 1 ? 4096 * threads : 1;
  std::vector<MatrixKey> products;
  // the key list doubles as the BFS queue
  for (std::size_t head = 0; head < t.keys.size();) {
    const std::size_t stop = std::min(t.keys.size(), head + slice);
    products.assign((stop - head) * ng, MatrixKey{});
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t e = lo; e < hi; ++e) {
        const ModMatrix cur = decode(t.keys[e], n, p);
        for (std::size_t gi = 0; gi < ng; ++gi) products[(e - head) * ng + gi] = encode(generators[gi] * cur);
      }
    };
    if (threads > 1 && stop - head > 1) {
      std::vector<std::thread> pool;
      const std::size_t chunk = (stop - head + threads - 1) / threads;
      for (std::size_t lo = head; lo < stop; lo += chunk) pool.emplace_back(work, lo, std::min(stop, lo + chunk));
      for (auto& th : pool) th.join();
    } else {
      work(head, stop);
    }
    for (std::size_t e = head; e < stop; ++e)
      for (std::size_t gi = 0; gi < ng; ++gi) {
        if (!insert(products[(e - head) * ng + gi], static_cast<std::uint32_t>(e), static_cast<int>(gi))) {
          t.cap_exceeded = true;
          return t;
        }
      }
    head = stop;
  }
  return t;
}

/// Plain-text export: one line per element, sorted by key, with the word
/// that reaches it.
inline void export_table(std::ostream& out, const FiniteGroupTable& t, const std::vector<std::string>& names) {
  std::vector<std::uint32_t> order(t.keys.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::tie(t.keys[a][1], t.keys[a][0]) < std::tie(t.keys[b][1], t.keys[b][0]);
  });
  for (auto id : order) {
    out << key_hex(t.keys[id]) << ' ';
    auto w = t.word(id);
    if (w.empty()) out << "ID";
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << names.at(static_cast<std::size_t>(w[i]));
    out << '\n';
  }
}

}  // namespace twistcheck
