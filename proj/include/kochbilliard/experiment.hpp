#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kochbilliard/render.hpp"

namespace kb {

enum class ExperimentKind { Table, Simulate, Gamma, Ppf, Surface, Quasi, Stability, Sweep };
const char* name(ExperimentKind k);

/// Flat `key = value` config. Lines starting with '#' are comments; unknown
/// or repeated keys are errors. Keys:
///   kind            table | simulate | gamma | ppf | surface | quasi | stability | sweep
///   level           prefractal level n (0..8)
///   levels          comma list, for sweep
///   sweepKind       kind run at each sweep level
///   basepoint       "x y", exact scalars such as 1/2 or 1/6+1/12√3
///   angle           pi6:<k> (k pi/6), radians:<a/b>, or cf:<order> (convergent of pi/3)
///   induce          true | false: slide the basepoint to where the line enters KS_n
///   kernel          exact | approx
///   maxEvents       event budget
///   horizon         shadowing horizon T
///   epsilon         shadowing tolerance; 0 means minimal (quasi) or twice the level-0 minimum (stability)
///   nMax            highest level for stability
///   precisionBits   approximate-kernel precision
///   outDir          output directory
///   render.width, render.height, render.digits, render.tableStroke, render.orbitStroke,
///   render.orbitColor, render.levelColors (comma list)
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Simulate;
  int level = 0;
  std::vector<int> levels;
  ExperimentKind sweepKind = ExperimentKind::Gamma;
  std::string basepoint = "1/2 0";
  std::string angle = "pi6:2";
  bool induce = true;
  bool exactKernel = true;
  std::size_t maxEvents = 10000;
  double horizon = 12.0;
  double epsilon = 0.0;
  int nMax = 2;
  unsigned precisionBits = 200;
  std::string outDir = "kochbilliard-out";
  RenderOptions render;
};

ExperimentConfig parseConfig(std::string_view text);
/// Canonical text form; parseConfig(configToText(c)) reproduces c.
std::string configToText(const ExperimentConfig& c);

struct SummaryRow {
  std::string run;
  std::string status;
  std::string period;
  std::string length;
  std::string label;
};

struct ExperimentResult {
  std::vector<std::filesystem::path> files;
  std::vector<SummaryRow> rows;
  bool ok = true;  // false when a checked property failed
};

/// Writes the artifacts and summary.csv under config.outDir.
ExperimentResult runExperiment(const ExperimentConfig& config);

}  // namespace kb
