#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace phicov::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 20.0;

struct View {
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -std::numeric_limits<double>::infinity(), ymax = xmax;
  double scale = 1.0;

  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  void fit() {
    const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    scale = kCanvas / span;
  }
  double width() const { return (xmax - xmin) * scale + 2 * kPad; }
  double height() const { return (ymax - ymin) * scale + 2 * kPad; }
  // SVG y grows downwards.
  double sx(double x) const { return (x - xmin) * scale + kPad; }
  double sy(double y) const { return (ymax - y) * scale + kPad; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::vector<std::pair<double, double>> outline(const Region& r) {
  std::vector<std::pair<double, double>> pts;
  if (const auto* p = std::get_if<ConvexPolygon>(&r)) {
    for (const Point& v : p->vertices()) pts.emplace_back(static_cast<double>(v.x), static_cast<double>(v.y));
  } else if (const auto* b = std::get_if<AABB>(&r)) {
    const auto x0 = static_cast<double>(b->xmin), x1 = static_cast<double>(b->xmax);
    const auto y0 = static_cast<double>(b->ymin), y1 = static_cast<double>(b->ymax);
    pts = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  }
  return pts;
}

}  // namespace

std::string render_svg(const Instance& inst, const CoverDocument* cover) {
  View view;
  for (const auto& t : inst.trees) {
    for (const Point& p : t.vertices) view.add(static_cast<double>(p.x), static_cast<double>(p.y));
  }
  if (cover) {
    for (const Region& r : cover->cover.regions) {
      if (const auto* c = std::get_if<Circle>(&r)) {
        view.add(c->cx - c->r, c->cy - c->r);
        view.add(c->cx + c->r, c->cy + c->r);
      }
      for (const auto& [x, y] : outline(r)) view.add(x, y);
    }
  }
  view.fit();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(view.width()) << "\" height=\""
     << num(view.height()) << "\" viewBox=\"0 0 " << num(view.width()) << " " << num(view.height()) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (cover) {
    os << "<g id=\"regions\" fill=\"#3b7dd8\" fill-opacity=\"0.25\" stroke=\"#3b7dd8\" stroke-width=\"1\">\n";
    for (const Region& r : cover->cover.regions) {
      if (const auto* c = std::get_if<Circle>(&r)) {
        os << "<circle cx=\"" << num(view.sx(c->cx)) << "\" cy=\"" << num(view.sy(c->cy)) << "\" r=\""
           << num(c->r * view.scale) << "\"/>\n";
        continue;
      }
      os << "<polygon points=\"";
      bool first = true;
      for (const auto& [x, y] : outline(r)) {
        os << (first ? "" : " ") << num(view.sx(x)) << "," << num(view.sy(y));
        first = false;
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g id=\"trees\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const auto& t : inst.trees) {
    os << "<path d=\"";
    for (auto [i, j] : t.edges) {
      const Point& a = t.vertices[static_cast<std::size_t>(i)];
      const Point& b = t.vertices[static_cast<std::size_t>(j)];
      os << "M" << num(view.sx(static_cast<double>(a.x))) << " " << num(view.sy(static_cast<double>(a.y))) << " L"
         << num(view.sx(static_cast<double>(b.x))) << " " << num(view.sy(static_cast<double>(b.y))) << " ";
    }
    os << "\"/>\n";
    for (const Point& p : t.vertices) {
      os << "<circle cx=\"" << num(view.sx(static_cast<double>(p.x))) << "\" cy=\"" << num(view.sy(static_cast<double>(p.y)))
         << "\" r=\"2\" fill=\"black\"/>\n";
    }
  }
  os << "</g>\n";

  if (cover && !cover->rays.empty()) {
    os << "<g id=\"rays\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"10\">\n";
    for (std::size_t i = 0; i < cover->rays.size(); ++i) {
      const ShotRecord& s = cover->rays[i];
      const double x0 = view.sx(static_cast<double>(s.origin.x)), y0 = view.sy(static_cast<double>(s.origin.y));
      const double x1 = view.sx(s.end.x()), y1 = view.sy(s.end.y());
      const char* colour = s.merged ? "red" : "gray";
      os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y1)
         << "\" stroke=\"" << colour << "\"/>\n";
      os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num((y0 + y1) / 2) << "\" fill=\"" << colour << "\">" << i + 1
         << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace phicov::cli
