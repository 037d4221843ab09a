#pragma once

// Named curves and symmetries of the crosscap model, built from the
// configuration file.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistcheck/config.hpp"
#include "twistcheck/geometry.hpp"
#include "twistcheck/homology.hpp"
#include "twistcheck/surface.hpp"

namespace twistcheck {

/// One hop of a chain curve: travel direction along the equator (+1 towards
/// increasing labels) and lane (+1 north, -1 south).
struct Hop {
  int dir = 1;
  int lane = -1;
  bool operator==(const Hop&) const = default;
};

/// Combinatorial description of a curve.
struct CurveShape {
  enum class Kind { Chain, Hug, Encircle };
  Kind kind = Kind::Chain;
  std::vector<int> passages;  // crosscap labels, in traversal order
  std::vector<Hop> hops;      // hop k leaves passage k
  int from = 0, to = 0;       // Encircle: boxes from..to in increasing direction
  std::vector<int> moves;     // crosscap transpositions applied after drawing, in order
};

struct CurveData {
  std::string name;
  CurveShape shape;
  geometry::Polyline line;   // drawn with the base layout
  geometry::Polyline probe;  // same curve, perturbed layout, used as a cycle
  std::vector<int> passages;
  bool two_sided = false;
  BitVec class_z2;
  H1ClassZ class_z;
  IntVec pairing_row;  // <mu_i, this>; empty when one-sided
};

namespace detail {

inline int parse_label(const std::string& tok, int index, int genus) {
  // "i", "i+N", "i-N", "g", "g-N" or a literal label
  long long v;
  if (!tok.empty() && (tok[0] == 'i' || tok[0] == 'g')) {
    v = tok[0] == 'i' ? index : genus;
    if (tok.size() > 1) v += std::stoll(tok.substr(1));
  } else {
    v = std::stoll(tok);
  }
  return static_cast<int>(((v - 1) % genus + genus) % genus + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline Hop parse_hop(const std::string& tok, int line) {
  if (tok.size() != 2 || (tok[0] != '+' && tok[0] != '-') || (tok[1] != 'N' && tok[1] != 'S'))
    throw Error(ErrorCode::BadConfig, "line " + std::to_string(line) + ": bad hop '" + tok + "'");
  return {tok[0] == '+' ? 1 : -1, tok[1] == 'N' ? 1 : -1};
}

inline std::string normalize_name(std::string n) {
  n.erase(std::remove(n.begin(), n.end(), '_'), n.end());
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return n;
}

}  // namespace detail

/// Polyline for a shape. Chain curves start at the exit of their first
/// passage, so the first geometric segment carries the initial co-orientation.
inline geometry::Polyline build_polyline(int genus, const CurveShape& shape, int variant = 0) {
  using geometry::Point;
  geometry::Layout L(genus, variant);
  geometry::Polyline line{genus, {}};
  auto& vs = line.vertices;
  auto add = [&](Point p, int jump = 0) { vs.push_back({p, jump}); };
  auto travel = [&](double y, double phi0, double phi1) {
    int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(phi1 - phi0) / (L.step / 12))));
    for (int s = 1; s < pieces; ++s) add({phi0 + (phi1 - phi0) * s / pieces, y});
  };

  switch (shape.kind) {
    case CurveShape::Kind::Hug: {
      int j = shape.passages.at(0);
      double c = L.center(j);
      Point entry{c - L.box_w, L.entry_y};
      Point exit = geometry::antipode(c, entry);
      add(exit);
      add({c + L.hug_w, exit.y});
      add({c + L.hug_w, -L.hug_h});
      add({c - L.hug_w, -L.hug_h});
      add({c - L.hug_w, entry.y});
      add(entry, j);
      break;
    }
    case CurveShape::Kind::Encircle: {
      double c0 = L.center(shape.from);
      int span = ((shape.to - shape.from) % genus + genus) % genus;
      double c1 = c0 + span * L.step;
      double w = (L.hug_w + L.column) / 2;
      // counterclockwise in the plane: east along the north side
      add({c0 - w, -L.enc_h});
      add({c0 - w, L.enc_h});
      travel(L.enc_h, c0 - w, c1 + w);
      add({c1 + w, L.enc_h});
      add({c1 + w, -L.enc_h});
      travel(-L.enc_h, c1 + w, c0 - w);
      break;
    }
    case CurveShape::Kind::Chain: {
      const auto& ps = shape.passages;
      const auto& hs = shape.hops;
      const std::size_t n = ps.size();
      double center = L.center(ps[0]);
      int din = hs[n - 1].dir, lin = hs[n - 1].lane;
      Point first_entry{center - din * L.box_w, lin * L.entry_y};
      Point exit = geometry::antipode(center, first_entry);
      for (std::size_t k = 0; k < n; ++k) {
        const Hop h = hs[k];
        add(exit);
        double col = center + din * L.column;
        add({col, exit.y});
        add({col, h.lane * L.lane});
        int next = ps[(k + 1) % n];
        int gaps = (((next - ps[k]) * h.dir) % genus + genus) % genus;
        if (gaps == 0) gaps = genus;
        double next_center = center + h.dir * gaps * L.step;
        double target = next_center - h.dir * L.column;
        travel(h.lane * L.lane, col, target);
        add({target, h.lane * L.lane});
        add({target, h.lane * L.entry_y});
        Point entry{next_center - h.dir * L.box_w, h.lane * L.entry_y};
        add(entry, next);
        exit = geometry::antipode(next_center, entry);
        center = next_center;
        din = h.dir;
        lin = h.lane;
      }
      break;
    }
  }
  return line;
}

/// Integral pairing <x, c> by counting signed crossings of polylines. The
/// cycle x is drawn with a perturbed layout so the two curves are in general
/// position; the count is a homotopy invariant of x.
inline long long signed_pairing_oracle(const CurveData& x, const CurveData& c) {
  if (!c.two_sided)
    throw Error(ErrorCode::TwoSidedRequired, "signed pairing against one-sided curve " + c.name);
  return geometry::signed_crossings(x.probe, c.line);
}

inline CurveShape hug_shape(int label) {
  CurveShape s;
  s.kind = CurveShape::Kind::Hug;
  s.passages = {label};
  return s;
}

/// Rigid image of a shape. Labels move by the permutation, a reflection
/// reverses travel directions, a pole swap exchanges lanes. The shape's
/// polyline is then the rigid image of the original polyline.
inline CurveShape apply_rigid(const RigidSymmetry& r, const CurveShape& s) {
  CurveShape out = s;
  for (auto& p : out.passages) p = r.apply(p);
  for (auto& h : out.hops) {
    if (r.reflect()) h.dir = -h.dir;
    if (r.pole_swap()) h.lane = -h.lane;
  }
  // U_k moves to the transposition of the image pair; a reflection reverses
  // the pair and the turning sense, which is invisible in homology
  for (auto& k : out.moves) k = r.reflect() ? r.apply(k + 1) : r.apply(k);
  if (s.kind == CurveShape::Kind::Encircle) {
    out.from = r.apply(s.from);
    out.to = r.apply(s.to);
    if (r.reflect()) std::swap(out.from, out.to);
  }
  return out;
}

namespace detail {

inline void fill_from_lines(CurveData& d) {
  const int genus = d.line.genus;
  d.passages.clear();
  for (const auto& v : d.line.vertices)
    if (v.jump_to_next) d.passages.push_back(v.jump_to_next);
  // the closing passage is stored last; traversal starts at its exit
  if (!d.passages.empty()) std::rotate(d.passages.rbegin(), d.passages.rbegin() + 1, d.passages.rend());
  d.two_sided = d.passages.size() % 2 == 0;
  d.class_z = canonicalize(geometry::traced_class(d.line));
  d.class_z2 = reduce_mod2(d.class_z);
  d.pairing_row.clear();
  if (d.two_sided) {
    d.pairing_row.resize(genus);
    for (int i = 1; i <= genus; ++i) {
      CurveData mu;
      mu.probe = build_polyline(genus, hug_shape(i), 1);
      d.pairing_row[i - 1] = geometry::signed_crossings(mu.probe, d.line);
    }
  }
}

}  // namespace detail

/// Trace a shape into full curve data.
inline CurveData trace_curve(int genus, const std::string& name, const CurveShape& shape) {
  CurveData d;
  d.name = name;
  d.shape = shape;
  d.line = build_polyline(genus, shape, 0);
  d.probe = build_polyline(genus, shape, 1);
  for (int k : shape.moves) {
    d.line = geometry::local_half_turn(d.line, k);
    d.probe = geometry::local_half_turn(d.probe, k);
  }
  detail::fill_from_lines(d);
  return d;
}

/// Image of a traced curve under a rigid symmetry: the polylines are moved
/// point by point and the classes and pairing row are traced again.
inline CurveData apply_rigid_to_curve(const RigidSymmetry& r, const CurveData& k) {
  CurveData d;
  d.name = k.name;
  d.line = geometry::apply(r, k.line);
  d.probe = geometry::apply(r, k.probe);
  detail::fill_from_lines(d);
  // hug orientation is not part of a shape, so only chain and encircle shapes are exact
  d.shape = apply_rigid(r, k.shape);
  return d;
}

class Model {
 public:
  Model(const SurfaceSpec& surface, const ModelConfig& cfg) : surface_(surface) {
    const int g = surface.genus;
    for (const auto& rec : cfg.records) {
      if (rec.type == "symmetry") {
        symmetry_records_.push_back(rec);
      } else if (rec.type == "family") {
        for (int i = 1; i <= g; ++i) add_curve(rec.get("name") + std::to_string(i), rec, i);
      } else if (rec.type == "curve") {
        add_curve(rec.get("name"), rec, 0);
      } else {
        throw Error(ErrorCode::BadConfig, "line " + std::to_string(rec.line) + ": unknown record type " + rec.type);
      }
    }
    transcription_ = "v" + std::to_string(cfg.version);
  }

  const std::string& transcription() const { return transcription_; }

  const SurfaceSpec& surface() const { return surface_; }
  int genus() const { return surface_.genus; }

  std::vector<std::string> curve_names() const { return order_; }

  bool has_curve(const std::string& name) const {
    return shapes_.count(detail::normalize_name(name)) > 0;
  }

  const CurveShape& shape(const std::string& name) const {
    auto it = shapes_.find(detail::normalize_name(name));
    if (it == shapes_.end()) throw Error(ErrorCode::UnknownCurve, name);
    return it->second;
  }

  CurveData curve(const std::string& name) const {
    auto key = detail::normalize_name(name);
    return trace_curve(genus(), key, shape(key));
  }

  RigidSymmetry symmetry(const std::string& name) const {
    const int g = genus();
    if (name == "identity") return RigidSymmetry::identity(g);
    for (const auto& rec : symmetry_records_) {
      if (rec.get("name") != name) continue;
      if (rec.fields.count("compose")) {
        auto parts = detail::split(rec.get("compose"), ',');
        RigidSymmetry out = RigidSymmetry::identity(g);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = rigid_compose(symmetry(*it), out);
        return out;
      }
      bool pole = rec.get_or("pole_swap", "0") == "1";
      const auto& kind = rec.get("kind");
      if (kind == "rotation") return {g, std::stoi(rec.get("shift")), false, pole};
      // reflection k -> sum - k
      if (kind == "reflection") return {g, std::stoi(rec.get("sum")) - 2, true, pole};
      throw Error(ErrorCode::BadConfig, "symmetry kind " + kind);
    }
    throw Error(ErrorCode::UnknownSymmetry, name);
  }

 private:
  void add_curve(const std::string& raw_name, const ConfigRecord& rec, int index) {
    const int g = genus();
    CurveShape s;
    const auto& kind = rec.get("kind");
    if (kind == "hug") {
      s = hug_shape(detail::parse_label(rec.get("at"), index, g));
    } else if (kind == "encircle") {
      s.kind = CurveShape::Kind::Encircle;
      s.from = detail::parse_label(rec.get("from"), index, g);
      s.to = detail::parse_label(rec.get("to"), index, g);
    } else if (kind == "chain") {
      for (const auto& t : detail::split(rec.get("passages"), ','))
        s.passages.push_back(detail::parse_label(t, index, g));
      for (const auto& t : detail::split(rec.get("hops"), ',')) s.hops.push_back(detail::parse_hop(t, rec.line));
      if (s.passages.empty() || s.passages.size() != s.hops.size())
        throw Error(ErrorCode::BadConfig, "line " + std::to_string(rec.line) + ": passages/hops mismatch");
    } else {
      throw Error(ErrorCode::BadConfig, "curve kind " + kind);
    }
    if (rec.fields.count("moves"))
      for (const auto& t : detail::split(rec.get("moves"), ',')) s.moves.push_back(detail::parse_label(t, index, g));
    auto name = detail::normalize_name(raw_name);
    order_.push_back(name);
    shapes_[name] = s;
  }

  SurfaceSpec surface_;
  std::vector<ConfigRecord> symmetry_records_;
  std::map<std::string, CurveShape> shapes_;
  std::vector<std::string> order_;
  std::string transcription_;
};

inline CurveData standard_curve(const Model& m, const std::string& name) { return m.curve(name); }

inline RigidSymmetry standard_symmetry(const Model& m, const std::string& name) {
  static const char* known[] = {"sigma", "t", "tau1", "tau2", "tau3"};
  if (std::find(std::begin(known), std::end(known), name) == std::end(known))
    throw Error(ErrorCode::UnknownSymmetry, name);
  return m.symmetry(name);
}

}  // namespace twistcheck
