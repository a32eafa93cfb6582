#include "circles/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace circles {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

constexpr const char* kPackingHeader = "kind,curvature,cx,cy,nx,ny,offset,word_len";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, std::size_t row, const char* field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("packing csv row " + std::to_string(row) + ": bad " + field + " '" +
                             s + "'");
  }
}

}  // namespace

std::string packing_to_csv(const Packing& p) {
  std::string out = kPackingHeader;
  out += '\n';
  for (const auto& e : p.entries) {
    if (e.geom.kind == CircleKind::circle) {
      out += "circle,";
      out += format_double(e.geom.signed_curvature);
      out += ',';
      out += format_double(e.geom.center.real());
      out += ',';
      out += format_double(e.geom.center.imag());
      out += ",,,,";
    } else {
      out += "line,0,,,";
      out += format_double(e.geom.normal.real());
      out += ',';
      out += format_double(e.geom.normal.imag());
      out += ',';
      out += format_double(e.geom.offset);
      out += ',';
    }
    out += std::to_string(e.word_len);
    out += '\n';
  }
  return out;
}

Packing packing_from_csv(const std::string& csv, double curvature_bound) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != split_csv_line(kPackingHeader))
    throw std::runtime_error("packing csv: missing or wrong header");
  Packing p;
  p.curvature_bound = curvature_bound;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 8)
      throw std::runtime_error("packing csv row " + std::to_string(row) + ": expected 8 fields");
    CircleGeometry g;
    if (f[0] == "circle") {
      g.kind = CircleKind::circle;
      g.signed_curvature = parse_double(f[1], row, "curvature");
      if (g.signed_curvature == 0.0)
        throw std::runtime_error("packing csv row " + std::to_string(row) + ": zero curvature circle");
      g.center = {parse_double(f[2], row, "cx"), parse_double(f[3], row, "cy")};
      g.radius = 1.0 / std::abs(g.signed_curvature);
    } else if (f[0] == "line") {
      g.kind = CircleKind::line;
      g.signed_curvature = 0.0;
      g.normal = {parse_double(f[4], row, "nx"), parse_double(f[5], row, "ny")};
      g.offset = parse_double(f[6], row, "offset");
    } else {
      throw std::runtime_error("packing csv row " + std::to_string(row) + ": unknown kind '" +
                               f[0] + "'");
    }
    PackedCircle e;
    e.geom = g;
    e.gc = from_geometry(g);
    e.word_len = static_cast<std::int32_t>(parse_double(f[7], row, "word_len"));
    e.parent = -1;
    p.entries.push_back(e);
  }
  return p;
}

std::string packing_sidecar_json(const Packing& p, const std::string& source_json) {
  json j;
  j["format"] = "circles-packing";
  j["curvature_bound"] = p.curvature_bound;
  j["rows"] = p.entries.size();
  j["suspect_collisions"] = p.suspect_collisions;
  if (!source_json.empty()) {
    j["source"] = json::parse(source_json);
  } else {
    j["source"] = p.source;
  }
  return j.dump(2) + "\n";
}

double sidecar_curvature_bound(const std::string& json_text) {
  const json j = json::parse(json_text);
  if (!j.contains("curvature_bound"))
    throw std::runtime_error("sidecar: missing curvature_bound");
  return j["curvature_bound"].get<double>();
}

std::string series_to_csv(const CountSeries& s) {
  std::string out = "T,N\n";
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    out += format_double(s.t[i]);
    out += ',';
    out += std::to_string(s.n[i]);
    out += '\n';
  }
  return out;
}

CountSeries series_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("series csv: empty");
  CountSeries s;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 2) throw std::runtime_error("series csv row " + std::to_string(row));
    s.t.push_back(parse_double(f[0], row, "T"));
    s.n.push_back(static_cast<long>(parse_double(f[1], row, "N")));
  }
  return s;
}

std::string ratio_to_csv(const RatioSeries& s) {
  std::string out = "T,ratio\n";
  for (const auto& pt : s.points) {
    out += format_double(pt.t);
    out += ',';
    out += pt.valid ? format_double(pt.ratio) : std::string("nan");
    out += '\n';
  }
  return out;
}

std::string fit_to_json(const FitResult& f) {
  json j;
  j["exponent"] = f.exponent;
  j["intercept"] = f.intercept;
  j["stderr"] = f.std_error;
  j["window"] = {f.window_lo, f.window_hi};
  j["points_used"] = f.points_used;
  return j.dump(2) + "\n";
}

std::string grid_to_csv(const MeasureGrid& m) {
  std::string out;
  for (int iy = 0; iy < m.spec.ny; ++iy) {
    for (int ix = 0; ix < m.spec.nx; ++ix) {
      if (ix) out += ',';
      out += format_double(m.w[static_cast<std::size_t>(iy * m.spec.nx + ix)]);
    }
    out += '\n';
  }
  return out;
}

std::string grid_header_json(const MeasureGrid& m) {
  json j;
  j["window"] = {m.spec.x0, m.spec.y0, m.spec.x1, m.spec.y1};
  j["nx"] = m.spec.nx;
  j["ny"] = m.spec.ny;
  j["normalized"] = m.normalized;
  j["raw_total"] = m.raw_total;
  return j.dump(2) + "\n";
}

MeasureGrid grid_from_csv(const std::string& csv, const std::string& header_json) {
  const json j = json::parse(header_json);
  MeasureGrid m;
  m.spec.x0 = j["window"][0].get<double>();
  m.spec.y0 = j["window"][1].get<double>();
  m.spec.x1 = j["window"][2].get<double>();
  m.spec.y1 = j["window"][3].get<double>();
  m.spec.nx = j["nx"].get<int>();
  m.spec.ny = j["ny"].get<int>();
  m.normalized = j["normalized"].get<bool>();
  m.raw_total = j.value("raw_total", 0.0);
  std::istringstream in(csv);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    for (const auto& tok : split_csv_line(line)) m.w.push_back(parse_double(tok, row, "cell"));
  }
  if (static_cast<int>(m.w.size()) != m.spec.cells())
    throw std::runtime_error("grid csv: cell count does not match header");
  return m;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace circles
