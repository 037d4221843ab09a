#pragma once

// Polyline realization of curves in the crosscap model.
//
// Model coordinates are (phi, y): phi runs along the equator, y > 0 is the
// northern hemisphere. Crosscap k sits at (2 pi (k-1)/g, 0) as a small box
// whose boundary is identified by the point reflection through its center.
// A curve is a closed polyline; a "jump" segment records a passage through a
// crosscap (entry point q, exit point 2c - q) and is not a geometric segment.
// Winding numbers are taken in the plane (1 + y) e^{i phi}, which is the
// sphere seen from the north pole.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "twistcheck/surface.hpp"

namespace twistcheck::geometry {

struct Point {
  double phi = 0;
  double y = 0;
};

struct Vertex {
  Point p;
  int jump_to_next = 0;  // crosscap label if the edge to the next vertex is a passage
};

struct Polyline {
  int genus = 0;
  std::vector<Vertex> vertices;  // closed: last vertex connects to the first

  int passage_count() const {
    int n = 0;
    for (const auto& v : vertices) n += v.jump_to_next != 0;
    return n;
  }
};

/// Geometry constants. `variant` perturbs lanes and offsets so two curves
/// built from the same data are in general position with each other.
struct Layout {
  double step;          // 2 pi / g
  double box_w, box_h;  // crosscap box half extents
  double column;        // phi offset of the vertical approach columns
  double entry_y;       // |y| of entry and exit points
  double lane;          // |y| of travel lanes
  double hug_w, hug_h;  // hugging loop half extents
  double enc_h;         // |y| of encircling loops

  Layout(int genus, int variant) {
    step = 2 * std::numbers::pi / genus;
    double v = variant;
    box_w = 0.12 * step;
    box_h = 0.08;
    column = box_w + (0.10 + 0.017 * v) * step;
    entry_y = 0.035 + 0.011 * v;
    lane = 0.21 + 0.023 * v;
    hug_w = box_w + (0.04 + 0.013 * v) * step;
    hug_h = box_h + 0.03 + 0.009 * v;
    enc_h = 0.17 + 0.007 * v;
  }

  double center(int label) const { return step * (label - 1); }
};

inline std::complex<double> embed(Point p) { return std::polar(1.0 + p.y, p.phi); }

/// Point reflection through a crosscap center at equator coordinate `center`.
inline Point antipode(double center, Point q) { return {2 * center - q.phi, -q.y}; }

/// Apply a rigid symmetry to a model point.
inline Point apply(const RigidSymmetry& r, const Layout& L, Point p) {
  double phi = (r.reflect() ? -p.phi : p.phi) + r.shift() * L.step;
  double y = r.pole_swap() ? -p.y : p.y;
  return {phi, y};
}

/// Half turn exchanging crosscaps `label` and `label + 1`, supported in an
/// elliptical disk around the equator point between them. Inside the inner
/// radius it is the point reflection through that point, so the two boxes and
/// their identifications are carried onto each other; outside it unwinds
/// linearly in the radius. Every other crosscap is left alone. Edges are
/// subdivided first so the image of a straight edge is followed closely.
inline Polyline local_half_turn(const Polyline& line, int label) {
  const int g = line.genus;
  Layout L(g, 0);
  const int next = label % g + 1;
  const double mid = L.center(label) + L.step / 2;
  const double ax = L.step, ay = 0.6, inner = 0.75;
  const double max_edge = 0.01;
  auto move = [&](Point p) {
    double d = std::remainder(p.phi - mid, 2 * std::numbers::pi);
    double u = d / ax, v = p.y / ay;
    double r = std::hypot(u, v);
    if (r >= 1) return p;
    double th = r <= inner ? std::numbers::pi : std::numbers::pi * (1 - r) / (1 - inner);
    double cu = std::cos(th) * u - std::sin(th) * v, cv = std::sin(th) * u + std::cos(th) * v;
    return Point{p.phi - d + cu * ax, cv * ay};
  };
  Polyline out{g, {}};
  const auto& vs = line.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int j = vs[i].jump_to_next;
    if (j == label) j = next;
    else if (j == next) j = label;
    if (vs[i].jump_to_next) {
      out.vertices.push_back({move(vs[i].p), j});
      continue;
    }
    // edges are chords in the plane, so subdivide there
    Point a = vs[i].p;
    auto za = embed(a), zb = embed(vs[(i + 1) % vs.size()].p);
    int n = std::max(1, static_cast<int>(std::ceil(std::abs(zb - za) / max_edge)));
    for (int k = 0; k < n; ++k) {
      auto z = za + (static_cast<double>(k) / n) * (zb - za);
      double phi = a.phi + std::arg(z / za);
      out.vertices.push_back({move({phi, std::abs(z) - 1}), 0});
    }
  }
  return out;
}

inline Polyline apply(const RigidSymmetry& r, const Polyline& line) {
  Layout L(line.genus, 0);
  Polyline out{line.genus, {}};
  out.vertices.reserve(line.vertices.size());
  for (const auto& v : line.vertices)
    out.vertices.push_back({apply(r, L, v.p), v.jump_to_next ? r.apply(v.jump_to_next) : 0});
  return out;
}

/// Winding numbers of the curve around every crosscap center, with each
/// passage replaced by the counterclockwise half-turn around its box.
inline std::vector<int> winding_numbers(const Polyline& line) {
  const int g = line.genus;
  Layout L(g, 0);
  std::vector<double> turn(g, 0.0);
  const auto& vs = line.vertices;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vs[i];
    const auto& b = vs[(i + 1) % n];
    auto za = embed(a.p), zb = embed(b.p);
    for (int k = 1; k <= g; ++k) {
      auto c = std::polar(1.0, L.center(k));
      double d = std::arg((zb - c) / (za - c));
      if (a.jump_to_next == k) {
        // counterclockwise detour: angle in (0, 2 pi)
        if (d <= 0) d += 2 * std::numbers::pi;
      }
      turn[k - 1] += d;
    }
  }
  std::vector<int> w(g);
  for (int k = 0; k < g; ++k) w[k] = static_cast<int>(std::lround(turn[k] / (2 * std::numbers::pi)));
  return w;
}

/// Integral class coefficients in the crosscap-core basis: for the detoured
/// loop, each box boundary is twice its core, and each passage removes one
/// core (the detour adds a full core loop that the passage does not make).
inline std::vector<long long> traced_class(const Polyline& line) {
  auto w = winding_numbers(line);
  std::vector<long long> x(line.genus, 0);
  for (int k = 0; k < line.genus; ++k) x[k] = 2LL * w[k];
  for (const auto& v : line.vertices)
    if (v.jump_to_next) x[v.jump_to_next - 1] -= 1;
  return x;
}

namespace detail {

inline double cross(std::complex<double> a, std::complex<double> b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

inline int sgn(double v) { return (v > 0) - (v < 0); }

}  // namespace detail

/// Signed count of crossings of x with the two-sided curve c. The
/// co-orientation of c starts as the left-hand normal of its first segment
/// in the plane and flips at every passage.
inline long long signed_crossings(const Polyline& x, const Polyline& c) {
  using detail::cross;
  using detail::sgn;
  long long total = 0;
  const auto& xs = x.vertices;
  const auto& cs = c.vertices;
  int flips = 0;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const auto& c0 = cs[j];
    if (c0.jump_to_next) {
      ++flips;
      continue;
    }
    auto p = embed(c0.p), q = embed(cs[(j + 1) % cs.size()].p);
    auto dc = q - p;
    std::complex<double> normal(-dc.imag(), dc.real());
    if (flips % 2) normal = -normal;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i].jump_to_next) continue;
      auto a = embed(xs[i].p), b = embed(xs[(i + 1) % xs.size()].p);
      int s1 = sgn(cross(dc, a - p)), s2 = sgn(cross(dc, b - p));
      int s3 = sgn(cross(b - a, p - a)), s4 = sgn(cross(b - a, q - a));
      // Half-open convention on both segments keeps shared vertices counted once.
      bool hit = (s1 != s2) && (s3 != s4) && s1 != 0 && s3 != 0 &&
                 ((s2 == 0) || (s1 == -s2)) && ((s4 == 0) || (s3 == -s4));
      if (!hit) continue;
      auto dx = b - a;
      total += sgn(dx.real() * normal.real() + dx.imag() * normal.imag());
    }
  }
  return total;
}

}  // namespace twistcheck::geometry
