#include "symlab/cli/svg.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symlab {

namespace {

std::string num(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 4);
  return std::string(buf, res.ptr);
}

struct Box {
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  void take(double x, double y) {
    xlo = std::min(xlo, x); xhi = std::max(xhi, x);
    ylo = std::min(ylo, y); yhi = std::max(yhi, y);
  }
  void init(double x, double y) { xlo = xhi = x; ylo = yhi = y; }
};

}  // namespace

std::string render_svg(const AnySet& set, int slice) {
  constexpr double kView = 640.0;
  std::ostringstream body;
  Box box;
  bool first = true;
  auto take = [&](double x, double y) {
    if (first) { box.init(x, y); first = false; }
    else box.take(x, y);
  };

  struct Mark {
    enum Kind { rect, dot, bar } kind;
    double x = 0, y = 0, w = 0, h = 0;
  };
  std::vector<Mark> marks;
  std::vector<Eigen::Vector2d> poly;

  if (const auto* g = std::get_if<GridSet>(&set)) {
    double h = g->spacing().to_double();
    bool sliced = g->dim() == 3;
    if (sliced && slice == std::numeric_limits<int>::min())
      throw std::invalid_argument("3-D grids render per z-slice (--slice k)");
    g->for_each_cell([&](const Cell& c) {
      if (sliced && c[2] != slice) return;
      double x = static_cast<double>(c[0]) * h;
      double y = g->dim() >= 2 ? static_cast<double>(c[1]) * h : 0.0;
      double hh = g->dim() >= 2 ? h : h / 4.0;
      marks.push_back({Mark::rect, x, y, h, hh});
      take(x, y);
      take(x + h, y + hh);
    });
    if (marks.empty()) throw std::invalid_argument("slice contains no cells");
  } else if (const auto* p = std::get_if<FinitePointSet>(&set)) {
    if (p->dim() == 3) throw std::invalid_argument("3-D point sets are not rendered");
    for (std::size_t i = 0; i < p->size(); ++i) {
      double x = p->point(i)[0];
      double y = p->dim() >= 2 ? p->point(i)[1] : 0.0;
      marks.push_back({Mark::dot, x, y, 0, 0});
      take(x, y);
    }
  } else if (const auto* iv = std::get_if<IntervalUnion>(&set)) {
    for (const auto& part : iv->intervals()) {
      double x = part.lo.to_double();
      double w = part.length().to_double();
      marks.push_back({Mark::bar, x, 0.0, w, 0.0});
      take(x, -0.05);
      take(x + w, 0.05);
    }
  } else {
    const auto& v = std::get<ConvexPolygon>(set).vertices();
    for (const auto& q : v) {
      poly.push_back(q);
      take(q.x(), q.y());
    }
  }

  double spanx = std::max(box.xhi - box.xlo, 1e-9);
  double spany = std::max(box.yhi - box.ylo, 1e-9);
  double span = std::max(spanx, spany);
  double margin = 0.05 * span;
  double scale = kView / (span + 2 * margin);
  auto px = [&](double x) { return (x - box.xlo + margin) * scale; };
  auto py = [&](double y) { return kView - (y - box.ylo + margin) * scale; };
  double dot_r = 0.008 * kView;
  double bar_h = 0.02 * kView;

  for (const auto& m : marks) {
    switch (m.kind) {
      case Mark::rect:
        body << "<rect x=\"" << num(px(m.x)) << "\" y=\"" << num(py(m.y + m.h))
             << "\" width=\"" << num(m.w * scale) << "\" height=\"" << num(m.h * scale)
             << "\" fill=\"#4477aa\" stroke=\"#223355\" stroke-width=\"0.4\"/>\n";
        break;
      case Mark::dot:
        body << "<circle cx=\"" << num(px(m.x)) << "\" cy=\"" << num(py(m.y)) << "\" r=\""
             << num(dot_r) << "\" fill=\"#aa3311\"/>\n";
        break;
      case Mark::bar:
        body << "<rect x=\"" << num(px(m.x)) << "\" y=\"" << num(py(0) - bar_h / 2)
             << "\" width=\"" << num(std::max(m.w * scale, 1.2)) << "\" height=\""
             << num(bar_h) << "\" fill=\"#4477aa\"/>\n";
        break;
    }
  }
  if (!poly.empty()) {
    body << "<path d=\"";
    for (std::size_t i = 0; i < poly.size(); ++i)
      body << (i == 0 ? 'M' : 'L') << num(px(poly[i].x())) << ' ' << num(py(poly[i].y()));
    body << (poly.size() >= 3 ? " Z" : "")
         << "\" fill=\"#44aa77\" fill-opacity=\"0.5\" stroke=\"#115533\" stroke-width=\"1\"/>\n";
    if (poly.size() == 1)
      body << "<circle cx=\"" << num(px(poly[0].x())) << "\" cy=\"" << num(py(poly[0].y()))
           << "\" r=\"" << num(dot_r) << "\" fill=\"#115533\"/>\n";
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kView << "\" height=\""
      << kView << "\" viewBox=\"0 0 " << kView << ' ' << kView << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body.str() << "</svg>\n";
  return out.str();
}

void write_svg_file(const AnySet& set, const std::string& path, int slice) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << render_svg(set, slice);
}

}  // namespace symlab
