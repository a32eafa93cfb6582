#include "circles/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "circles/errors.hpp"
#include "circles/io.hpp"

namespace circles {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw ConfigError(where, "unknown key '" + it.key() + "'");
  }
}

double num(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where, "expected a number");
  return j.get<double>();
}

Complex cplx(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(where, "expected [x, y]");
  return {num(j[0], where), num(j[1], where)};
}

Region parse_region(const json& j, const std::string& where) {
  reject_unknown(j, where,
                 {"type", "center", "radius", "lo", "hi", "normal", "offset", "parts", "of"});
  if (!j.contains("type")) throw ConfigError(where, "missing 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "disk") {
    return Region::disk(cplx(j.at("center"), where + ".center"), num(j.at("radius"), where + ".radius"));
  }
  if (type == "rect") {
    return Region::rectangle(cplx(j.at("lo"), where + ".lo"), cplx(j.at("hi"), where + ".hi"));
  }
  if (type == "halfplane") {
    return Region::halfplane(cplx(j.at("normal"), where + ".normal"),
                             num(j.at("offset"), where + ".offset"));
  }
  if (type == "union" || type == "intersection") {
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
      throw ConfigError(where, "'parts' must be a nonempty array");
    std::vector<Region> parts;
    int i = 0;
    for (const auto& part : j["parts"])
      parts.push_back(parse_region(part, where + ".parts[" + std::to_string(i++) + "]"));
    return type == "union" ? Region::union_of(std::move(parts))
                           : Region::intersection_of(std::move(parts));
  }
  if (type == "complement") {
    if (!j.contains("of")) throw ConfigError(where, "missing 'of'");
    return Region::complement(parse_region(j["of"], where + ".of"));
  }
  throw ConfigError(where, "unknown region type '" + type + "'");
}

GeneralizedCircle parse_seed(const json& j, const std::string& where) {
  reject_unknown(j, where, {"kind", "center", "radius", "normal", "offset", "orientation"});
  const std::string kind = j.value("kind", "circle");
  if (kind == "circle") {
    const bool positive = j.value("orientation", 1.0) >= 0.0;
    return GeneralizedCircle::from_center_radius(cplx(j.at("center"), where + ".center"),
                                                 num(j.at("radius"), where + ".radius"), positive);
  }
  if (kind == "line") {
    return GeneralizedCircle::from_line(cplx(j.at("normal"), where + ".normal"),
                                        num(j.at("offset"), where + ".offset"));
  }
  throw ConfigError(where, "unknown seed kind '" + kind + "'");
}

}  // namespace

Region region_from_json_text(const std::string& json_text) {
  return parse_region(json::parse(json_text), "region");
}

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("(root)", std::string("JSON parse error: ") + e.what());
  }
  reject_unknown(j, "(root)",
                 {"packing", "tmax", "tgrid", "max_word_len", "prune", "patience", "seed",
                  "regions", "grid", "out_dir", "count", "fit", "ratio", "measure", "render"});

  ExperimentConfig cfg;
  cfg.source_json = j.dump();

  if (!j.contains("packing")) throw ConfigError("packing", "missing");
  const json& pk = j["packing"];
  reject_unknown(pk, "packing", {"type", "curvatures", "pairs", "generators", "seeds"});
  const std::string type = pk.value("type", "");
  if (type == "apollonian") {
    const json& ks = pk.at("curvatures");
    if (!ks.is_array() || ks.size() != 4)
      throw ConfigError("packing.curvatures", "expected 4 curvatures");
    ExperimentConfig::ApollonianSpec spec;
    for (int i = 0; i < 4; ++i) spec.curvatures[i] = num(ks[i], "packing.curvatures");
    cfg.apollonian = spec;
  } else if (type == "schottky") {
    const json& ps = pk.at("pairs");
    if (!ps.is_array() || ps.empty()) throw ConfigError("packing.pairs", "expected pairs");
    ExperimentConfig::SchottkySpec spec;
    int i = 0;
    for (const auto& pr : ps) {
      const std::string where = "packing.pairs[" + std::to_string(i++) + "]";
      reject_unknown(pr, where, {"d", "dprime"});
      const json& d = pr.at("d");
      const json& dp = pr.at("dprime");
      if (!d.is_array() || d.size() != 3 || !dp.is_array() || dp.size() != 3)
        throw ConfigError(where, "disks are [cx, cy, r]");
      spec.pairs.push_back({Complex{num(d[0], where), num(d[1], where)}, num(d[2], where),
                            Complex{num(dp[0], where), num(dp[1], where)}, num(dp[2], where)});
    }
    cfg.schottky = spec;
  } else if (type == "generators") {
    ExperimentConfig::GeneratorSpec spec;
    const json& gs = pk.at("generators");
    if (!gs.is_array() || gs.empty()) throw ConfigError("packing.generators", "expected generators");
    int i = 0;
    for (const auto& g : gs) {
      const std::string where = "packing.generators[" + std::to_string(i++) + "]";
      reject_unknown(g, where, {"matrix", "conj", "involution", "label"});
      const json& m = g.at("matrix");
      if (!m.is_array() || m.size() != 4) throw ConfigError(where + ".matrix", "expected 4 complex entries");
      std::array<Complex, 4> e;
      for (int k = 0; k < 4; ++k) e[k] = cplx(m[k], where + ".matrix");
      Generator gen;
      gen.map = {MobiusMap::normalized(e[0], e[1], e[2], e[3]), g.value("conj", false)};
      gen.involution = g.value("involution", false);
      gen.label = g.value("label", "g" + std::to_string(i - 1));
      spec.group.generators.push_back(gen);
    }
    if (!pk.contains("seeds") || !pk["seeds"].is_array() || pk["seeds"].empty())
      throw ConfigError("packing.seeds", "generator packings need seed circles");
    int s = 0;
    for (const auto& seed : pk["seeds"])
      spec.seeds.push_back(parse_seed(seed, "packing.seeds[" + std::to_string(s++) + "]"));
    spec.group.validate();
    cfg.generators = std::move(spec);
  } else {
    throw ConfigError("packing.type", "expected apollonian | schottky | generators");
  }

  if (j.contains("tmax")) cfg.tmax = num(j["tmax"], "tmax");
  if (!(cfg.tmax > 0.0)) throw ConfigError("tmax", "must be positive");
  if (j.contains("tgrid")) {
    reject_unknown(j["tgrid"], "tgrid", {"points", "ratio"});
    cfg.tgrid_points = static_cast<int>(j["tgrid"].value("points", 25));
    cfg.tgrid_ratio = j["tgrid"].value("ratio", cfg.tgrid_ratio);
    if (cfg.tgrid_points < 1 || !(cfg.tgrid_ratio > 1.0))
      throw ConfigError("tgrid", "points >= 1 and ratio > 1 required");
  }
  if (j.contains("max_word_len")) cfg.max_word_len = static_cast<int>(num(j["max_word_len"], "max_word_len"));
  if (cfg.max_word_len < 0) throw ConfigError("max_word_len", "must be >= 0");
  if (j.contains("prune")) cfg.prune = j["prune"].get<bool>();
  if (j.contains("patience")) cfg.patience = static_cast<int>(num(j["patience"], "patience"));
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();

  if (j.contains("regions")) {
    if (!j["regions"].is_object()) throw ConfigError("regions", "expected an object");
    for (auto it = j["regions"].begin(); it != j["regions"].end(); ++it) {
      Region r = parse_region(it.value(), "regions." + it.key());
      if (!r.bounded()) throw ConfigError("regions." + it.key(), "region must be bounded");
      cfg.regions.emplace(it.key(), std::move(r));
    }
  }

  if (j.contains("grid")) {
    reject_unknown(j["grid"], "grid", {"nx", "ny", "window"});
    cfg.grid_nx = static_cast<int>(j["grid"].value("nx", 16));
    cfg.grid_ny = static_cast<int>(j["grid"].value("ny", 16));
    if (cfg.grid_nx < 1 || cfg.grid_ny < 1) throw ConfigError("grid", "nx, ny >= 1");
    if (j["grid"].contains("window")) {
      const json& w = j["grid"]["window"];
      if (!w.is_array() || w.size() != 4) throw ConfigError("grid.window", "expected [x0,y0,x1,y1]");
      cfg.grid_window = {num(w[0], "grid.window"), num(w[1], "grid.window"),
                         num(w[2], "grid.window"), num(w[3], "grid.window")};
    }
  }
  if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();

  if (j.contains("count")) {
    reject_unknown(j["count"], "count", {"region", "mode"});
    ExperimentConfig::CountCfg c;
    c.region = j["count"].at("region").get<std::string>();
    c.mode = j["count"].value("mode", "meets");
    if (c.mode != "meets" && c.mode != "center" && c.mode != "contained")
      throw ConfigError("count.mode", "expected meets | center | contained");
    if (!cfg.regions.count(c.region)) throw ConfigError("count.region", "no such region");
    cfg.count = c;
  }
  if (j.contains("fit")) {
    reject_unknown(j["fit"], "fit", {"region", "window"});
    ExperimentConfig::FitCfg f;
    f.region = j["fit"].at("region").get<std::string>();
    if (!cfg.regions.count(f.region)) throw ConfigError("fit.region", "no such region");
    if (j["fit"].contains("window")) {
      const json& w = j["fit"]["window"];
      if (!w.is_array() || w.size() != 2) throw ConfigError("fit.window", "expected [lo, hi]");
      f.window = {num(w[0], "fit.window"), num(w[1], "fit.window")};
    }
    cfg.fit = f;
  }
  if (j.contains("ratio")) {
    reject_unknown(j["ratio"], "ratio", {"region1", "region2"});
    ExperimentConfig::RatioCfg r;
    r.region1 = j["ratio"].at("region1").get<std::string>();
    r.region2 = j["ratio"].at("region2").get<std::string>();
    for (const auto& name : {r.region1, r.region2})
      if (!cfg.regions.count(name)) throw ConfigError("ratio", "no such region '" + name + "'");
    cfg.ratio = r;
  }
  if (j.contains("measure")) {
    reject_unknown(j["measure"], "measure",
                   {"window", "s_offset", "height_cut", "depth", "delta", "regions"});
    ExperimentConfig::MeasureCfg m;
    if (j["measure"].contains("window")) {
      const json& w = j["measure"]["window"];
      if (!w.is_array() || w.size() != 2) throw ConfigError("measure.window", "expected [lo, hi]");
      m.window_lo = num(w[0], "measure.window");
      m.window_hi = num(w[1], "measure.window");
    }
    m.s_offset = j["measure"].value("s_offset", m.s_offset);
    m.height_cut = j["measure"].value("height_cut", m.height_cut);
    m.depth = static_cast<int>(j["measure"].value("depth", m.depth));
    if (j["measure"].contains("delta")) m.delta = num(j["measure"]["delta"], "measure.delta");
    if (j["measure"].contains("regions")) {
      for (const auto& name : j["measure"]["regions"]) {
        m.regions.push_back(name.get<std::string>());
        if (!cfg.regions.count(m.regions.back()))
          throw ConfigError("measure.regions", "no such region '" + m.regions.back() + "'");
      }
    }
    cfg.measure = m;
  }
  if (j.contains("render")) {
    reject_unknown(j["render"], "render", {"style"});
    cfg.render_style = j["render"].value("style", "outline");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Packing build_packing(const ExperimentConfig& cfg, double tmax, int workers) {
  if (cfg.apollonian) {
    const DescartesQuadruple root = DescartesQuadruple::realize(cfg.apollonian->curvatures);
    Packing p = apollonian_enumerate(root, tmax);
    p.source = "apollonian";
    return p;
  }
  OrbitOptions opts;
  opts.curvature_bound = tmax;
  opts.max_word_len = cfg.max_word_len;
  opts.prune = cfg.prune;
  opts.patience = cfg.patience;
  opts.workers = workers;
  if (cfg.schottky) {
    const SchottkyGroup sg = schottky_build(cfg.schottky->pairs);
    Packing p = orbit_enumerate(sg.group, sg.seeds, opts);
    p.source = "schottky";
    return p;
  }
  Packing p = orbit_enumerate(cfg.generators->group, cfg.generators->seeds, opts);
  p.source = "generators";
  return p;
}

GroupPresentation build_group(const ExperimentConfig& cfg) {
  if (cfg.apollonian)
    return dual_circle_group(DescartesQuadruple::realize(cfg.apollonian->curvatures));
  if (cfg.schottky) return schottky_build(cfg.schottky->pairs).group;
  return cfg.generators->group;
}

}  // namespace circles
