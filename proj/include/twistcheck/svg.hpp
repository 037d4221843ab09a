#pragma once

// SVG sketch of the crosscap model in the plane (1 + y) e^{i phi}: the south
// pole is the center, the north pole is at infinity (drawn as the outer
// dashed circle). Output is deterministic: fixed precision, fixed order.

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "twistcheck/error.hpp"
#include "twistcheck/geometry.hpp"
#include "twistcheck/model.hpp"

namespace twistcheck {

namespace svg_detail {

constexpr double kSize = 640, kScale = 110;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

inline std::string xy(std::complex<double> z) {
  return num(kSize / 2 + kScale * z.real()) + "," + num(kSize / 2 - kScale * z.imag());
}

inline const char* color(std::size_t i) {
  static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65"};
  return palette[i % 6];
}

}  // namespace svg_detail

inline std::string render_svg(const Model& m, const std::vector<std::string>& curves) {
  using namespace svg_detail;
  for (const auto& c : curves)
    if (!m.has_curve(c)) throw Error(ErrorCode::UnknownCurve, "unknown curve " + c);
  const int g = m.genus();
  geometry::Layout L(g, 0);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
         "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double outer = 2.6;
  out += "<circle class=\"pole\" cx=\"" + num(kSize / 2) + "\" cy=\"" + num(kSize / 2) + "\" r=\"" +
         num(kScale * outer) + "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  out += "<text x=\"" + num(kSize / 2 + 6) + "\" y=\"" + num(kSize / 2 - 6) + "\" font-size=\"12\">S</text>\n";
  out += "<text x=\"" + num(kSize - 24) + "\" y=\"18\" font-size=\"12\">N</text>\n";
  out += "<circle cx=\"" + num(kSize / 2) + "\" cy=\"" + num(kSize / 2) + "\" r=\"2.5\"/>\n";

  // meridian arcs between consecutive crosscaps
  for (int k = 1; k <= g; ++k) {
    double phi = L.center(k) + L.step / 2;
    auto a = geometry::embed({phi, -1}), b = geometry::embed({phi, outer - 1});
    out += "<line class=\"arc\" x1=\"" + num(kSize / 2 + kScale * a.real()) + "\" y1=\"" +
           num(kSize / 2 - kScale * a.imag()) + "\" x2=\"" + num(kSize / 2 + kScale * b.real()) + "\" y2=\"" +
           num(kSize / 2 - kScale * b.imag()) + "\" stroke=\"#bbb\"/>\n";
  }

  // equator
  out += "<circle cx=\"" + num(kSize / 2) + "\" cy=\"" + num(kSize / 2) + "\" r=\"" + num(kScale) +
         "\" fill=\"none\" stroke=\"#ddd\"/>\n";

  for (int k = 1; k <= g; ++k) {
    const double c = L.center(k);
    std::string pts;
    const int per_side = 6;
    const geometry::Point corner[4] = {{c - L.box_w, -L.box_h}, {c + L.box_w, -L.box_h},
                                       {c + L.box_w, L.box_h}, {c - L.box_w, L.box_h}};
    for (int s = 0; s < 4; ++s)
      for (int i = 0; i < per_side; ++i) {
        double t = static_cast<double>(i) / per_side;
        geometry::Point p{corner[s].phi + t * (corner[(s + 1) % 4].phi - corner[s].phi),
                          corner[s].y + t * (corner[(s + 1) % 4].y - corner[s].y)};
        pts += (pts.empty() ? "" : " ") + xy(geometry::embed(p));
      }
    out += "<g class=\"crosscap\" id=\"crosscap" + std::to_string(k) + "\">\n";
    out += "<polygon points=\"" + pts + "\" fill=\"#eee\" stroke=\"black\"/>\n";
    auto d1a = geometry::embed({c - L.box_w, -L.box_h}), d1b = geometry::embed({c + L.box_w, L.box_h});
    auto d2a = geometry::embed({c - L.box_w, L.box_h}), d2b = geometry::embed({c + L.box_w, -L.box_h});
    out += "<path d=\"M" + xy(d1a) + " L" + xy(d1b) + " M" + xy(d2a) + " L" + xy(d2b) + "\" stroke=\"black\"/>\n";
    auto lab = geometry::embed({c, -0.32});
    out += "<text x=\"" + num(kSize / 2 + kScale * lab.real() - 4) + "\" y=\"" + num(kSize / 2 - kScale * lab.imag() + 4) +
           "\" font-size=\"12\">" + std::to_string(k) + "</text>\n";
    out += "</g>\n";
  }

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto data = m.curve(curves[i]);
    // shifted lanes keep overlapping curves apart
    const auto line = geometry::Polyline(build_polyline(g, data.shape, static_cast<int>(i % 4)));
    const auto& vs = line.vertices;
    std::string d;
    bool pen = false;
    for (std::size_t j = 0; j <= vs.size() && !vs.empty(); ++j) {
      const auto& v = vs[j % vs.size()];
      d += (pen ? " L" : (d.empty() ? "M" : " M")) + xy(geometry::embed(v.p));
      pen = v.jump_to_next == 0;  // a passage is not drawn
    }
    out += "<path class=\"curve\" id=\"" + data.name + "\" d=\"" + d + "\" fill=\"none\" stroke=\"" + color(i) +
           "\" stroke-width=\"1.6\"/>\n";
    if (!vs.empty()) {
      auto z = geometry::embed(vs[0].p);
      out += "<text x=\"" + num(kSize / 2 + kScale * z.real() + 4) + "\" y=\"" + num(kSize / 2 - kScale * z.imag() - 4) +
             "\" font-size=\"11\" fill=\"" + color(i) + "\">" + data.name + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace twistcheck
