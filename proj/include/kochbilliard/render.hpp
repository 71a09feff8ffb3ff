#pragma once

#include <string>
#include <vector>

#include "kochbilliard/surface.hpp"
#include "kochbilliard/unfolding.hpp"

namespace kb {

struct RenderOptions {
  int widthPx = 800;
  int heightPx = 800;
  double margin = 0.05;       // fraction of the scene extent
  double tableStroke = 0.004; // stroke widths as fractions of the scene extent
  double orbitStroke = 0.003;
  std::string tableColor = "#000000";
  std::string orbitColor = "#d62728";
  std::vector<std::string> levelColors{"#000000", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"};
  int digits = 40;  // significant digits of emitted coordinates
};

struct SvgPath {
  std::vector<ApproxVec> points;
  bool closed = false;
  std::string stroke = "#000000";
  double width = 0.004;
  std::string fill = "none";
};

struct SvgScene {
  std::vector<SvgPath> paths;
};

/// Standalone SVG 1.1; identical scenes and options give identical bytes.
std::string renderScene(const SvgScene& scene, const RenderOptions& opt = {});

SvgPath tablePath(const ExactPolygon& table, const RenderOptions& opt, const std::string& color);
template <class S>
SvgPath orbitPath(const OrbitRecord<S>& orbit, const RenderOptions& opt);

std::string renderTable(const ExactPolygon& table, const RenderOptions& opt = {});
template <class S>
std::string renderOrbit(const ExactPolygon& table, const OrbitRecord<S>& orbit, const RenderOptions& opt = {});
/// Table copies of the development plus the chord.
std::string renderUnfolding(const ExactPolygon& table, const UnfoldedOrbit& u, const RenderOptions& opt = {});
/// The 2N copies reflected around a vertex of angle pi / N. Needs a surface
/// built from an exact polygon.
std::string renderGeneralizedPolygon(const FlatSurfaceModel& surface, const RenderOptions& opt = {});

}  // namespace kb
