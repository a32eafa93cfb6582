#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circles/group.hpp"
#include "circles/orbit.hpp"
#include "circles/region.hpp"

namespace circles {

// Experiment configuration, loaded from a single JSON file. Unknown keys are
// rejected; all regions must be bounded.
struct ExperimentConfig {
  // Packing spec: exactly one of these.
  struct ApollonianSpec {
    std::array<double, 4> curvatures{};
  };
  struct SchottkySpec {
    std::vector<SchottkyPair> pairs;
  };
  struct GeneratorSpec {
    GroupPresentation group;
    std::vector<GeneralizedCircle> seeds;
  };
  std::optional<ApollonianSpec> apollonian;
  std::optional<SchottkySpec> schottky;
  std::optional<GeneratorSpec> generators;

  double tmax = 100.0;
  int tgrid_points = 25;
  double tgrid_ratio = 1.4142135623730951;
  int max_word_len = 12;
  bool prune = false;
  int patience = 2;
  std::uint64_t seed = 0;

  std::map<std::string, Region> regions;

  int grid_nx = 16, grid_ny = 16;
  std::optional<std::array<double, 4>> grid_window;  // x0,y0,x1,y1; default: packing bbox + 5%

  std::string out_dir = "out";

  struct CountCfg {
    std::string region;
    std::string mode = "meets";
  };
  std::optional<CountCfg> count;

  struct FitCfg {
    std::string region;
    std::optional<std::array<double, 2>> window;
  };
  std::optional<FitCfg> fit;

  struct RatioCfg {
    std::string region1, region2;
  };
  std::optional<RatioCfg> ratio;

  struct MeasureCfg {
    double window_lo = 1000.0, window_hi = 2000.0;
    double s_offset = 0.02;
    double height_cut = 0.05;
    int depth = 12;
    std::optional<double> delta;
    std::vector<std::string> regions;  // for the constant-consistency report
  };
  std::optional<MeasureCfg> measure;

  std::string render_style = "outline";

  // Echo of the original JSON, for sidecars.
  std::string source_json;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

// Region from its JSON description (also used inside load_config).
Region region_from_json_text(const std::string& json_text);

// Builders over the validated config.
Packing build_packing(const ExperimentConfig& cfg, double tmax, int workers = 0);
// The symmetry group of the configured packing (dual-circle group for the
// apollonian spec, the generators otherwise).
GroupPresentation build_group(const ExperimentConfig& cfg);

}  // namespace circles
