#include "lensroots/report.hpp"

#include <cstdio>
#include <sstream>

#include "lensroots/error.hpp"

namespace lensroots {

nlohmann::json to_json(const Box& b) { return {b.x0, b.x1, b.y0, b.y1}; }

nlohmann::json to_json(const RootInventory& inv) {
  auto roots = nlohmann::json::array();
  for (const auto& r : inv.roots)
    roots.push_back({{"re", r.center.real()},
                     {"im", r.center.imag()},
                     {"radius", r.radius},
                     {"orientation", r.orientation},
                     {"residual", r.residual}});
  auto multiple = nlohmann::json::array();
  for (const auto& m : inv.multiple_roots)
    multiple.push_back({{"re", m.center.real()},
                        {"im", m.center.imag()},
                        {"radius", m.radius},
                        {"multiplicity", m.multiplicity},
                        {"exact", m.exact}});
  auto unresolved = nlohmann::json::array();
  for (const auto& b : inv.unresolved_boxes) unresolved.push_back(to_json(b));
  return {{"domain", to_json(inv.domain)},
          {"roots", roots},
          {"multiple_roots", multiple},
          {"unresolved_boxes", unresolved},
          {"rho", inv.rho},
          {"rho_nonzero", inv.rho_nonzero},
          {"signed_sum", inv.signed_sum},
          {"certified", inv.certified},
          {"all_simple", inv.all_simple},
          {"boxes_processed", inv.boxes_processed}};
}

std::vector<Segment> zero_contour(const std::vector<double>& v, int cells, const Box& box) {
  const int stride = cells + 1;
  if (cells < 1 || v.size() != static_cast<std::size_t>(stride) * stride)
    throw Error(ErrorCode::BadParameters, "contour grid has the wrong size");
  const double dx = box.width() / cells, dy = box.height() / cells;
  std::vector<Segment> out;
  struct Pt {
    double x, y;
  };
  for (int j = 0; j < cells; ++j) {
    for (int i = 0; i < cells; ++i) {
      const double x0 = box.x0 + i * dx, y0 = box.y0 + j * dy;
      // corners counter-clockwise from bottom-left
      const double c[4] = {v[j * stride + i], v[j * stride + i + 1], v[(j + 1) * stride + i + 1],
                           v[(j + 1) * stride + i]};
      const Pt p[4] = {{x0, y0}, {x0 + dx, y0}, {x0 + dx, y0 + dy}, {x0, y0 + dy}};
      int code = 0;
      for (int k = 0; k < 4; ++k)
        if (c[k] > 0.0) code |= 1 << k;
      if (code == 0 || code == 15) continue;
      auto edge = [&](int k) {
        const int a = k, b = (k + 1) % 4;
        const double t = c[a] / (c[a] - c[b]);
        return Pt{p[a].x + t * (p[b].x - p[a].x), p[a].y + t * (p[b].y - p[a].y)};
      };
      std::vector<int> crossing;
      for (int k = 0; k < 4; ++k)
        if ((c[k] > 0.0) != (c[(k + 1) % 4] > 0.0)) crossing.push_back(k);
      if (crossing.size() == 2) {
        const Pt a = edge(crossing[0]), b = edge(crossing[1]);
        out.push_back({a.x, a.y, b.x, b.y});
      } else if (crossing.size() == 4) {
        const double centre = 0.25 * (c[0] + c[1] + c[2] + c[3]);
        // Pair edges around the corners whose sign differs from the centre.
        const bool join_around_0 = (c[0] > 0.0) != (centre > 0.0);
        const int pairs[2][2] = {{3, 0}, {1, 2}};
        const int other[2][2] = {{0, 1}, {2, 3}};
        const auto& use = join_around_0 ? pairs : other;
        for (const auto& pr : use) {
          const Pt a = edge(pr[0]), b = edge(pr[1]);
          out.push_back({a.x, a.y, b.x, b.y});
        }
      }
    }
  }
  return out;
}

std::string render_svg(const MixedPolynomial& f, const Box& box, const RootInventory* inv, const PlotOptions& opt) {
  const int cells = opt.grid;
  const int stride = cells + 1;
  std::vector<double> re(static_cast<std::size_t>(stride) * stride), im(re.size());
  const double dx = box.width() / cells, dy = box.height() / cells;
  for (int j = 0; j <= cells; ++j)
    for (int i = 0; i <= cells; ++i) {
      const Complex v = f.evaluate({box.x0 + i * dx, box.y0 + j * dy});
      re[j * stride + i] = v.real();
      im[j * stride + i] = v.imag();
    }
  const double sx = opt.pixels / box.width(), sy = opt.pixels / box.height();
  auto px = [&](double x) { return (x - box.x0) * sx; };
  auto py = [&](double y) { return (box.y1 - y) * sy; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.pixels << "\" height=\"" << opt.pixels
     << "\" viewBox=\"0 0 " << opt.pixels << ' ' << opt.pixels << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto path = [&](const std::vector<Segment>& segs, const char* colour) {
    os << "<path fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1\" d=\"";
    for (const auto& s : segs)
      os << 'M' << num(px(s.x0)) << ' ' << num(py(s.y0)) << 'L' << num(px(s.x1)) << ' ' << num(py(s.y1));
    os << "\"/>\n";
  };
  path(zero_contour(re, cells, box), "green");
  path(zero_contour(im, cells, box), "red");
  if (inv)
    for (const auto& r : inv->roots)
      os << "<circle cx=\"" << num(px(r.center.real())) << "\" cy=\"" << num(py(r.center.imag()))
         << "\" r=\"3\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace lensroots
