#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lensroots/solver.hpp"

namespace lensroots {

nlohmann::json to_json(const Box& b);
nlohmann::json to_json(const RootInventory& inv);

struct Segment {
  double x0, y0, x1, y1;
};

/// Marching squares on node values v[j * (cells + 1) + i] at
/// x = box.x0 + i * dx, y = box.y0 + j * dy. Saddles are split by the
/// average of the four corners.
std::vector<Segment> zero_contour(const std::vector<double>& v, int cells, const Box& box);

struct PlotOptions {
  int grid = 800;
  int pixels = 800;
};

/// Zero curves of Re f (green) and Im f (red), certified roots as black dots.
std::string render_svg(const MixedPolynomial& f, const Box& box, const RootInventory* inv,
                       const PlotOptions& opt = {});

}  // namespace lensroots
