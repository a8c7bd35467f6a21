#include "hpfold/render.hpp"

#include <algorithm>
#include <sstream>

namespace hpfold {

namespace {

// All SVG styling lives here; tests assert structure, never style.
namespace svg_style {
constexpr int scale = 32;
constexpr int margin = 24;
constexpr int node_radius = 9;
constexpr const char* h_fill = "#9e9e9e";
constexpr const char* p_fill = "#1a1a1a";
constexpr const char* chain_stroke = "#1a1a1a";
constexpr const char* bond_stroke = "#b0b0b0";
constexpr int chain_width = 3;
constexpr int bond_width = 3;
constexpr const char* bond_dash = "5,4";
}  // namespace svg_style

struct Box {
  int minx, maxx, miny, maxy;
};

Box bounding_box(const Embedding& pts) {
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const Point& p : pts) {
    b.minx = std::min(b.minx, p.x);
    b.maxx = std::max(b.maxx, p.x);
    b.miny = std::min(b.miny, p.y);
    b.maxy = std::max(b.maxy, p.y);
  }
  return b;
}

std::string render_ascii(const Chain& chain, const Embedding& pts, const BondGraph& bonds) {
  const Box b = bounding_box(pts);
  const int cols = 2 * (b.maxx - b.minx) + 1;
  const int rows = 2 * (b.maxy - b.miny) + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(cols), ' '));

  const auto col_of = [&](int x) { return 2 * (x - b.minx); };
  const auto row_of = [&](int y) { return 2 * (b.maxy - y); };
  const auto put_edge = [&](Point u, Point v, char horizontal, char vertical) {
    const int c = col_of(u.x) + (v.x - u.x);
    const int r = row_of(u.y) - (v.y - u.y);
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
        u.y == v.y ? horizontal : vertical;
  };

  const int n = chain.size();
  for (int i = 0; i + 1 < n; ++i)
    put_edge(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(i + 1)], '-', '|');
  if (chain.topology == Topology::closed && n >= 2)
    put_edge(pts[static_cast<std::size_t>(n - 1)], pts[0], '-', '|');
  for (const auto& [i, j] : bonds.contacts)
    put_edge(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], '=', ':');
  for (int i = 0; i < n; ++i) {
    const Point p = pts[static_cast<std::size_t>(i)];
    grid[static_cast<std::size_t>(row_of(p.y))][static_cast<std::size_t>(col_of(p.x))] =
        chain.is_h(i) ? 'H' : 'P';
  }

  std::string out;
  for (const std::string& line : grid) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Chain& chain, const Embedding& pts, const BondGraph& bonds) {
  namespace st = svg_style;
  const Box b = bounding_box(pts);
  const int width = (b.maxx - b.minx) * st::scale + 2 * st::margin;
  const int height = (b.maxy - b.miny) * st::scale + 2 * st::margin;
  const auto sx = [&](int x) { return (x - b.minx) * st::scale + st::margin; };
  const auto sy = [&](int y) { return (b.maxy - y) * st::scale + st::margin; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

  const int n = chain.size();
  const auto line = [&](Point u, Point v, const char* cls, const char* stroke, int w,
                        const char* dash) {
    out << "  <line class=\"" << cls << "\" x1=\"" << sx(u.x) << "\" y1=\"" << sy(u.y)
        << "\" x2=\"" << sx(v.x) << "\" y2=\"" << sy(v.y) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << w << "\"";
    if (dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
  };

  for (int i = 0; i + 1 < n; ++i)
    line(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(i + 1)], "chain",
         st::chain_stroke, st::chain_width, nullptr);
  if (chain.topology == Topology::closed && n >= 2)
    line(pts[static_cast<std::size_t>(n - 1)], pts[0], "chain", st::chain_stroke,
         st::chain_width, nullptr);
  for (const auto& [i, j] : bonds.contacts)
    line(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], "bond",
         st::bond_stroke, st::bond_width, st::bond_dash);
  for (int i = 0; i < n; ++i) {
    const Point p = pts[static_cast<std::size_t>(i)];
    out << "  <circle class=\"" << (chain.is_h(i) ? "node-h" : "node-p") << "\" cx=\""
        << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << st::node_radius << "\" fill=\""
        << (chain.is_h(i) ? st::h_fill : st::p_fill) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

RenderFormat render_format_from_name(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  throw input_error("unknown render format \"" + std::string(name) + "\"");
}

std::string render(const Chain& chain, const Folding& folding, RenderFormat format) {
  const Embedding pts = embed(chain, folding);
  const BondGraph bonds = contacts(chain, folding);
  return format == RenderFormat::ascii ? render_ascii(chain, pts, bonds)
                                       : render_svg(chain, pts, bonds);
}

}  // namespace hpfold
