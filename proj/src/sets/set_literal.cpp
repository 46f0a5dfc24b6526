#include "symlab/sets/set_literal.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace symlab {

namespace {

std::string format_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);  // shortest round-trip
  return std::string(buf, res.ptr);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

double parse_num(const std::string& s) {
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number in set literal: " + s);
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer in set literal: " + s);
  return v;
}

}  // namespace

AnySet parse_set_literal(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ';') c = '\n';
  std::istringstream in(normalized);
  std::string line;
  std::string rep;
  int dim = 0;
  Dyadic h;
  bool has_h = false;
  double snap = -1.0;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    for (const auto& t : toks) {
      auto eq = t.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("set literal must start with a rep= header");
      std::string key = t.substr(0, eq), val = t.substr(eq + 1);
      if (key == "rep") rep = val;
      else if (key == "dim") dim = static_cast<int>(parse_int(val));
      else if (key == "h") { h = Dyadic::from_double(parse_num(val)); has_h = true; }
      else if (key == "snap") snap = parse_num(val);
      else throw std::invalid_argument("unknown header field: " + key);
    }
    break;
  }
  if (rep.empty()) throw std::invalid_argument("set literal missing rep= header");
  if (rep == "intervals") dim = 1;
  if (dim < 1 || dim > 3) throw std::invalid_argument("set literal needs dim in 1..3");

  std::vector<Vector> points;
  std::vector<IntervalUnion::Interval> intervals;
  std::vector<Cell> cells;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "point") {
      if (static_cast<int>(toks.size()) != dim + 1)
        throw std::invalid_argument("point record arity mismatch");
      Vector v(dim);
      for (int d = 0; d < dim; ++d) v[d] = parse_num(toks[static_cast<std::size_t>(d) + 1]);
      points.push_back(v);
    } else if (kind == "interval") {
      if (toks.size() != 3) throw std::invalid_argument("interval record arity mismatch");
      intervals.push_back(
          {Dyadic::from_double(parse_num(toks[1])), Dyadic::from_double(parse_num(toks[2]))});
    } else if (kind == "cell") {
      if (static_cast<int>(toks.size()) != dim + 1)
        throw std::invalid_argument("cell record arity mismatch");
      Cell c{0, 0, 0};
      for (int d = 0; d < dim; ++d)
        c[static_cast<std::size_t>(d)] = parse_int(toks[static_cast<std::size_t>(d) + 1]);
      cells.push_back(c);
    } else {
      throw std::invalid_argument("unknown record kind: " + kind);
    }
  }

  if (rep == "pointset") {
    if (points.empty()) throw std::invalid_argument("pointset literal has no points");
    return FinitePointSet::from_points(dim, points, snap);
  }
  if (rep == "intervals") {
    if (intervals.empty()) throw std::invalid_argument("intervals literal has no intervals");
    return IntervalUnion(std::move(intervals));
  }
  if (rep == "grid") {
    if (!has_h) throw std::invalid_argument("grid literal needs h=<spacing>");
    if (cells.empty()) throw std::invalid_argument("grid literal has no cells");
    return GridSet::from_cells(dim, h, cells);
  }
  if (rep == "polygon") {
    if (dim != 2) throw std::invalid_argument("polygon literal must have dim=2");
    if (points.empty()) throw std::invalid_argument("polygon literal has no points");
    std::vector<Eigen::Vector2d> v;
    v.reserve(points.size());
    for (const auto& p : points) v.emplace_back(p[0], p[1]);
    return ConvexPolygon::hull_of(v);
  }
  throw std::invalid_argument("unknown rep: " + rep);
}

std::string serialize_set_literal(const AnySet& set) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FinitePointSet>) {
          out << "rep=pointset dim=" << s.dim();
          if (s.snap_resolution() > 0.0) out << " snap=" << format_double(s.snap_resolution());
          out << "\n";
          for (std::size_t i = 0; i < s.size(); ++i) {
            out << "point";
            for (int d = 0; d < s.dim(); ++d) out << ' ' << format_double(s.point(i)[d]);
            out << "\n";
          }
        } else if constexpr (std::is_same_v<T, IntervalUnion>) {
          out << "rep=intervals dim=1\n";
          for (const auto& p : s.intervals())
            out << "interval " << format_double(p.lo.to_double()) << ' '
                << format_double(p.hi.to_double()) << "\n";
        } else if constexpr (std::is_same_v<T, GridSet>) {
          out << "rep=grid dim=" << s.dim() << " h="
              << format_double(s.spacing().to_double()) << "\n";
          s.for_each_cell([&](const Cell& c) {
            out << "cell " << c[0];
            if (s.dim() >= 2) out << ' ' << c[1];
            if (s.dim() >= 3) out << ' ' << c[2];
            out << "\n";
          });
        } else {
          out << "rep=polygon dim=2\n";
          for (const auto& p : s.vertices())
            out << "point " << format_double(p.x()) << ' ' << format_double(p.y()) << "\n";
        }
      },
      set);
  return out.str();
}

}  // namespace symlab
