#pragma once

// Cellular chain complex of the 2g-gon model: a 2g-gon whose opposite sides
// are glued by translation, with a crosscap (antipodally identified circle)
// in the middle. Cells:
//   0-cells  N, S (polygon vertices, alternating), P (point on the crosscap circle)
//   1-cells  e_0..e_{g-1} (sides; side k+g is side k reversed), m (half of the
//            crosscap circle), r (radius from P to the vertex v_0 = N)
//   2-cell   the polygon minus the crosscap disk, cut open along r
// Homology is computed from the Smith normal form of the boundary maps.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "twistcheck/error.hpp"

namespace twistcheck {

struct ChainComplex {
  int genus = 0;
  std::vector<std::string> cells0, cells1, cells2;
  // boundary matrices, rows indexed by (k-1)-cells, columns by k-cells
  std::vector<std::vector<long long>> d1, d2;
};

inline ChainComplex two_g_gon_complex(int genus) {
  if (genus < 3 || genus % 2 == 0) throw Error(ErrorCode::OddGenusRequired, "chain complex");
  const int g = genus;
  ChainComplex cx;
  cx.genus = g;
  cx.cells0 = {"N", "S", "P"};
  for (int k = 0; k < g; ++k) cx.cells1.push_back("e" + std::to_string(k));
  cx.cells1.push_back("m");
  cx.cells1.push_back("r");
  cx.cells2 = {"F"};
  const int ne = g + 2, m_idx = g, r_idx = g + 1;
  cx.d1.assign(3, std::vector<long long>(ne, 0));
  // vertex v_j is N for even j, S for odd j; e_k runs v_k -> v_{k+1}
  for (int k = 0; k < g; ++k) {
    int from = k % 2, to = (k + 1) % 2;
    cx.d1[to][k] += 1;
    cx.d1[from][k] -= 1;
  }
  cx.d1[0][r_idx] += 1;  // r: P -> N
  cx.d1[2][r_idx] -= 1;
  // boundary word of F: sides s_0..s_{2g-1}, then r^-1, the crosscap circle
  // (which covers m twice), then r
  std::vector<long long> face(ne, 0);
  for (int s = 0; s < 2 * g; ++s) {
    if (s < g) face[s] += 1;
    else face[s - g] -= 1;
  }
  face[r_idx] -= 1;
  face[m_idx] += 2;
  face[r_idx] += 1;
  cx.d2.assign(ne, std::vector<long long>(1, 0));
  for (int i = 0; i < ne; ++i) cx.d2[i][0] = face[i];
  return cx;
}

/// Diagonal of the Smith normal form (nonzero entries, divisibility chain).
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<long long> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        long long q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        long long q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: fold a non-divisible entry into the pivot row
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (int k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

struct HomologyGroup {
  int rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1

  bool operator==(const HomologyGroup&) const = default;

  std::string describe() const {
    std::string s = rank ? "Z^" + std::to_string(rank) : "";
    for (auto t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return s.empty() ? "0" : s;
  }
};

struct HomologySummary {
  HomologyGroup h0, h1, h2;
};

inline HomologySummary chain_complex_oracle(int genus) {
  auto cx = two_g_gon_complex(genus);
  auto s1 = smith_diagonal(cx.d1);
  auto s2 = smith_diagonal(cx.d2);
  const int n0 = static_cast<int>(cx.cells0.size());
  const int n1 = static_cast<int>(cx.cells1.size());
  const int n2 = static_cast<int>(cx.cells2.size());
  auto torsion_of = [](const std::vector<long long>& d) {
    std::vector<long long> t;
    for (auto v : d)
      if (v > 1) t.push_back(v);
    return t;
  };
  const int r1 = static_cast<int>(s1.size()), r2 = static_cast<int>(s2.size());
  HomologySummary out;
  out.h0 = {n0 - r1, torsion_of(s1)};
  out.h1 = {n1 - r1 - r2, torsion_of(s2)};
  out.h2 = {n2 - r2, {}};
  return out;
}

/// Plain-text dump of the boundary matrices for audit.
inline void dump_boundaries(std::ostream& os, const ChainComplex& cx) {
  auto dump = [&](const char* title, const std::vector<std::vector<long long>>& m,
                  const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
    os << title << "\n      ";
    for (const auto& c : cols) os << ' ' << c;
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << "  " << rows[i] << "  ";
      for (auto v : m[i]) os << ' ' << v;
      os << '\n';
    }
  };
  dump("d1", cx.d1, cx.cells0, cx.cells1);
  dump("d2", cx.d2, cx.cells1, cx.cells2);
}

}  // namespace twistcheck
