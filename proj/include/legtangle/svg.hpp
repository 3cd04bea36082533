#pragma once

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "legtangle/invariants.hpp"
#include "legtangle/profile.hpp"

namespace legtangle {

enum class Layer { Template, Subdivision, Marks, Signs, Classes, Tangle, Unknot, Foliation };

inline Layer parse_layer(const std::string& s) {
  if (s == "template") return Layer::Template;
  if (s == "subdivision") return Layer::Subdivision;
  if (s == "marks") return Layer::Marks;
  if (s == "signs") return Layer::Signs;
  if (s == "classes") return Layer::Classes;
  if (s == "tangle") return Layer::Tangle;
  if (s == "unknot") return Layer::Unknot;
  if (s == "foliation") return Layer::Foliation;
  throw std::invalid_argument("unknown render layer: '" + s + "'");
}

struct RenderOptions {
  Int scale = 40;  // pixels per grid unit
  std::set<Layer> layers{Layer::Subdivision, Layer::Marks, Layer::Signs};
  std::string positive_color = "#cc2222";
  std::string negative_color = "#2244cc";

  void validate() const {
    if (scale <= 0) throw std::invalid_argument("render scale must be positive");
    if (layers.empty()) throw std::invalid_argument("render layer set must be non-empty");
  }
  bool has(Layer l) const { return layers.count(l) > 0; }
};

namespace detail {

/// Fixed-point SVG canvas; z axis points up.
class SvgCanvas {
 public:
  SvgCanvas(Int p, Int q, Int scale) : scale_(scale), q2_(2 * q) {
    width_ = px(2 * p) + 2 * margin_;
    height_ = px(q2_) + 2 * margin_;
  }

  double xpx(Int x2) const { return margin_ + px(x2); }
  double zpx(Int z2) const { return margin_ + px(q2_ - z2); }

  void open_group(const std::string& cls) { body_ << "<g class=\"" << cls << "\">\n"; }
  void close_group() { body_ << "</g>\n"; }

  void line(Pt a, Pt b, const std::string& cls, const std::string& stroke, double w) {
    body_ << "<line class=\"" << cls << "\" x1=\"" << fmt(xpx(a.x)) << "\" y1=\"" << fmt(zpx(a.z))
          << "\" x2=\"" << fmt(xpx(b.x)) << "\" y2=\"" << fmt(zpx(b.z)) << "\" stroke=\"" << stroke
          << "\" stroke-width=\"" << fmt(w) << "\"/>\n";
  }
  void circle(Pt c, double r, const std::string& cls, const std::string& fill) {
    body_ << "<circle class=\"" << cls << "\" cx=\"" << fmt(xpx(c.x)) << "\" cy=\"" << fmt(zpx(c.z))
          << "\" r=\"" << fmt(r) << "\" fill=\"" << fill << "\"/>\n";
  }
  void rect_glyph(Pt c, double half, const std::string& cls, const std::string& fill) {
    body_ << "<rect class=\"" << cls << "\" x=\"" << fmt(xpx(c.x) - half) << "\" y=\""
          << fmt(zpx(c.z) - half) << "\" width=\"" << fmt(2 * half) << "\" height=\""
          << fmt(2 * half) << "\" fill=\"" << fill << "\"/>\n";
  }
  void path(const std::string& d, const std::string& cls, const std::string& stroke, double w) {
    body_ << "<path class=\"" << cls << "\" d=\"" << d << "\" fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"" << fmt(w) << "\"/>\n";
  }
  void raw(const std::string& s) { body_ << s; }

  std::string str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_) << "\" height=\""
        << fmt(height_) << "\" viewBox=\"0 0 " << fmt(width_) << " " << fmt(height_) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width_) << "\" height=\"" << fmt(height_)
        << "\" fill=\"white\"/>\n";
    out << body_.str();
    out << "</svg>\n";
    return out.str();
  }

  double unit() const { return static_cast<double>(scale_); }

  static std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
  }

 private:
  double px(Int doubled) const { return static_cast<double>(doubled) * scale_ / 2.0; }
  Int scale_;
  Int q2_;
  double margin_ = 12.0;
  double width_ = 0, height_ = 0;
  std::ostringstream body_;
};

inline void draw_boxdot_layers(SvgCanvas& c, const BoxDotDiagram& d, const RenderOptions& o) {
  const double u = c.unit();
  if (o.has(Layer::Template)) {
    c.open_group("template");
    for (Pt m : d.tmpl.all_boxes())
      c.rect_glyph(m, u * 0.08, "template-box",
                   o.has(Layer::Signs) && d.tmpl.interior(m)
                       ? (d.tmpl.sign(m) > 0 ? o.positive_color : o.negative_color)
                       : "#bbbbbb");
    for (Pt m : d.tmpl.all_dots())
      c.circle(m, u * 0.08, "template-dot",
               o.has(Layer::Signs) ? (d.tmpl.sign(m) > 0 ? o.positive_color : o.negative_color)
                                   : "#bbbbbb");
    c.close_group();
  }
  if (o.has(Layer::Subdivision)) {
    c.open_group("subdivision");
    for (const auto& s : d.sub.squares) {
      Int e = 2 * s.size;
      Pt a{s.x, s.z}, b{s.x + e, s.z}, cc{s.x + e, s.z + e}, dd{s.x, s.z + e};
      c.line(a, b, "square-edge", "#888888", 1.0);
      c.line(b, cc, "square-edge", "#888888", 1.0);
      c.line(cc, dd, "square-edge", "#888888", 1.0);
      c.line(dd, a, "square-edge", "#888888", 1.0);
    }
    c.close_group();
  }
  if (o.has(Layer::Marks)) {
    c.open_group("marks");
    auto color = [&](const Mark& m) {
      return o.has(Layer::Signs) ? (m.sign > 0 ? o.positive_color : o.negative_color) : "#000000";
    };
    for (const auto& m : d.boxes) c.rect_glyph(m.pos, u * 0.14, "mark-box", color(m));
    for (const auto& m : d.dots) c.circle(m.pos, u * 0.14, "mark-dot", color(m));
    c.close_group();
  }
  if (o.has(Layer::Classes)) {
    c.open_group("classes");
    auto ring = [&](Pt m, const std::string& cls, const std::string& col) {
      c.raw("<circle class=\"" + cls + "\" cx=\"" + SvgCanvas::fmt(c.xpx(m.x)) + "\" cy=\"" +
            SvgCanvas::fmt(c.zpx(m.z)) + "\" r=\"" + SvgCanvas::fmt(u * 0.24) +
            "\" fill=\"none\" stroke=\"" + col + "\" stroke-width=\"1.5\"/>\n");
    };
    for (Pt m : d.classes.tagged) ring(m, "class-tagged", "#666600");
    for (Pt m : d.classes.shared) ring(m, "class-shared", "#006600");
    for (Pt m : d.classes.endpoint) ring(m, "class-endpoint", "#660066");
    c.close_group();
  }
}

inline void draw_front(SvgCanvas& c, const TangleFront& fp) {
  const double u = c.unit();
  c.open_group("tangle");
  // under-arcs drawn with a gap at each crossing
  for (const auto& cr : fp.crossings) {
    const auto& under = fp.arcs[static_cast<std::size_t>(cr.under)];
    double gx = c.xpx(cr.at.x), gz = c.zpx(cr.at.z);
    double ax = c.xpx(under.a.x), az = c.zpx(under.a.z);
    double bx = c.xpx(under.b.x), bz = c.zpx(under.b.z);
    double g = u * 0.12;
    double len = std::hypot(bx - ax, bz - az);
    double t = g / len;
    c.raw("<g class=\"crossing\">\n");
    auto seg = [&](double x1, double z1, double x2, double z2) {
      c.raw("<line class=\"under-arc\" x1=\"" + SvgCanvas::fmt(x1) + "\" y1=\"" + SvgCanvas::fmt(z1) +
            "\" x2=\"" + SvgCanvas::fmt(x2) + "\" y2=\"" + SvgCanvas::fmt(z2) +
            "\" stroke=\"#222222\" stroke-width=\"1.8\"/>\n");
    };
    seg(ax, az, gx + (ax - gx) * t / 0.5, gz + (az - gz) * t / 0.5);
    seg(gx + (bx - gx) * t / 0.5, gz + (bz - gz) * t / 0.5, bx, bz);
    c.raw("</g>\n");
  }
  for (const auto& a : fp.arcs) {
    if (!a.negative) continue;  // over-arcs drawn whole
    c.line(a.a, a.b, "over-arc", "#222222", 1.8);
  }
  // cusp glyphs with horizontal tangents
  for (int sid = 1; sid <= 2; ++sid) {
    for (const auto& ev : fp.strand(sid).events) {
      if (ev.kind != EventKind::CuspLeft && ev.kind != EventKind::CuspRight) continue;
      double x = c.xpx(ev.at.x), z = c.zpx(ev.at.z);
      double w = (ev.kind == EventKind::CuspRight ? 1.0 : -1.0) * u * 0.22;
      std::ostringstream d;
      d << "M " << SvgCanvas::fmt(x + w) << " " << SvgCanvas::fmt(z - u * 0.18) << " Q "
        << SvgCanvas::fmt(x) << " " << SvgCanvas::fmt(z) << " " << SvgCanvas::fmt(x + w) << " "
        << SvgCanvas::fmt(z + u * 0.18);
      c.path(d.str(), "cusp", "#222222", 1.8);
    }
  }
  c.close_group();
}

inline void draw_unknot(SvgCanvas& c, const UnknotFront& k) {
  const double u = c.unit();
  c.open_group("unknot");
  for (const auto& seg : k.segments) {
    Pt b{seg.start.x + seg.len * seg.dir.x, seg.start.z + seg.len * seg.dir.z};
    c.line(seg.start, b, seg.dir.x * seg.dir.z < 0 ? "unknot-over" : "unknot-under", "#444444",
           1.2);
  }
  for (const auto& cr : k.crossings) {
    // gap marker on the positive-slope strand
    c.circle(cr.mark, u * 0.06, "unknot-gap", "white");
  }
  for (const auto& cu : k.cusps) {
    double x = c.xpx(cu.dot.x), z = c.zpx(cu.dot.z);
    double w = (cu.dot.x == 0 ? 1.0 : -1.0) * u * 0.2;
    std::ostringstream d;
    d << "M " << SvgCanvas::fmt(x + w) << " " << SvgCanvas::fmt(z - u * 0.16) << " Q "
      << SvgCanvas::fmt(x) << " " << SvgCanvas::fmt(z) << " " << SvgCanvas::fmt(x + w) << " "
      << SvgCanvas::fmt(z + u * 0.16);
    c.path(d.str(), "cusp", "#444444", 1.2);
  }
  c.close_group();
}

inline void draw_foliation(SvgCanvas& c, const BoxDotDiagram& d, const RenderOptions& o) {
  const double u = c.unit();
  c.open_group("foliation");
  c.raw("<text class=\"schematic-label\" x=\"4\" y=\"10\" font-size=\"9\">schematic</text>\n");
  for (const auto& m : d.dots) {
    std::string col = m.sign > 0 ? o.positive_color : o.negative_color;
    c.circle(m.pos, u * 0.1, m.sign > 0 ? "elliptic elliptic-pos" : "elliptic elliptic-neg", col);
    for (int k = 0; k < 4; ++k) {
      double ang = k * 1.5707963267948966;
      double x = c.xpx(m.pos.x), z = c.zpx(m.pos.z);
      c.raw("<line class=\"elliptic-ray\" x1=\"" + SvgCanvas::fmt(x + 0.14 * u * std::cos(ang)) +
            "\" y1=\"" + SvgCanvas::fmt(z + 0.14 * u * std::sin(ang)) + "\" x2=\"" +
            SvgCanvas::fmt(x + 0.3 * u * std::cos(ang)) + "\" y2=\"" +
            SvgCanvas::fmt(z + 0.3 * u * std::sin(ang)) + "\" stroke=\"" + col +
            "\" stroke-width=\"1\"/>\n");
    }
  }
  for (const auto& m : d.boxes) {
    std::string over_col = m.sign > 0 ? o.positive_color : o.negative_color;
    std::string under_col = m.sign > 0 ? o.negative_color : o.positive_color;
    double x = c.xpx(m.pos.x), z = c.zpx(m.pos.z);
    c.raw("<g class=\"hyperbolic-pair\">\n");
    auto saddle = [&](double cx, const std::string& col, const std::string& cls) {
      std::ostringstream p1, p2;
      p1 << "M " << SvgCanvas::fmt(cx - 0.12 * u) << " " << SvgCanvas::fmt(z - 0.16 * u) << " Q "
         << SvgCanvas::fmt(cx) << " " << SvgCanvas::fmt(z) << " " << SvgCanvas::fmt(cx + 0.12 * u)
         << " " << SvgCanvas::fmt(z - 0.16 * u);
      p2 << "M " << SvgCanvas::fmt(cx - 0.12 * u) << " " << SvgCanvas::fmt(z + 0.16 * u) << " Q "
         << SvgCanvas::fmt(cx) << " " << SvgCanvas::fmt(z) << " " << SvgCanvas::fmt(cx + 0.12 * u)
         << " " << SvgCanvas::fmt(z + 0.16 * u);
      c.path(p1.str(), cls, col, 1.2);
      c.path(p2.str(), cls, col, 1.2);
    };
    saddle(x - 0.16 * u, over_col, m.sign > 0 ? "hyperbolic hyperbolic-pos" : "hyperbolic hyperbolic-neg");
    saddle(x + 0.16 * u, under_col, m.sign > 0 ? "hyperbolic hyperbolic-neg" : "hyperbolic hyperbolic-pos");
    c.raw("</g>\n");
  }
  c.close_group();
}

}  // namespace detail

inline std::string render_boxdot(const BoxDotDiagram& d, const RenderOptions& o) {
  o.validate();
  detail::SvgCanvas c(d.tmpl.p, d.tmpl.q, o.scale);
  detail::draw_boxdot_layers(c, d, o);
  return c.str();
}

inline std::string render_front(const TangleFront& fp, const RenderOptions& o) {
  o.validate();
  detail::SvgCanvas c(fp.sub.frac.p, fp.sub.frac.q, o.scale);
  detail::draw_front(c, fp);
  return c.str();
}

inline std::string render_unknot(const UnknotFront& k, const RenderOptions& o) {
  o.validate();
  detail::SvgCanvas c(k.tmpl.p, k.tmpl.q, o.scale);
  detail::draw_unknot(c, k);
  return c.str();
}

inline std::string render_foliation_schematic(const BoxDotDiagram& d, const RenderOptions& o) {
  o.validate();
  detail::SvgCanvas c(d.tmpl.p, d.tmpl.q, o.scale);
  detail::draw_foliation(c, d, o);
  return c.str();
}

/// One canvas honoring every requested layer.
inline std::string render(const BoxDotDiagram& d, const RenderOptions& o) {
  o.validate();
  detail::SvgCanvas c(d.tmpl.p, d.tmpl.q, o.scale);
  detail::draw_boxdot_layers(c, d, o);
  if (o.has(Layer::Unknot)) {
    UnknotFront k = build_unknot(d.tmpl);
    detail::draw_unknot(c, k);
  }
  if (o.has(Layer::Tangle)) {
    TangleFront fp = build_front(d);
    detail::draw_front(c, fp);
  }
  if (o.has(Layer::Foliation)) detail::draw_foliation(c, d, o);
  return c.str();
}

}  // namespace legtangle
