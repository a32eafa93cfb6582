#pragma once

#include <string>

#include "circles/counting.hpp"
#include "circles/fit.hpp"
#include "circles/measure_grid.hpp"
#include "circles/packing.hpp"

namespace circles {

// Packing CSV, header `kind,curvature,cx,cy,nx,ny,offset,word_len`; circle
// rows fill cx,cy, line rows fill nx,ny,offset. Doubles print with 17
// significant digits, so emit -> parse -> emit is byte-identical.
std::string packing_to_csv(const Packing& p);
Packing packing_from_csv(const std::string& csv, double curvature_bound);

// JSON sidecar carrying the generating spec and the enumeration bound.
std::string packing_sidecar_json(const Packing& p, const std::string& source_json);
// Reads `curvature_bound` (and source echo) back from a sidecar.
double sidecar_curvature_bound(const std::string& json_text);

std::string series_to_csv(const CountSeries& s);           // T,N
CountSeries series_from_csv(const std::string& csv);
std::string ratio_to_csv(const RatioSeries& s);            // T,ratio (invalid rows flagged nan)
std::string fit_to_json(const FitResult& f);

// MeasureGrid as a CSV matrix (ny rows of nx values) plus a JSON header.
std::string grid_to_csv(const MeasureGrid& m);
std::string grid_header_json(const MeasureGrid& m);
MeasureGrid grid_from_csv(const std::string& csv, const std::string& header_json);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// %.17g, the shortest representation that round-trips a double.
std::string format_double(double v);

}  // namespace circles
