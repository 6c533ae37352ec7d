#pragma once

#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polysol/linalg.hpp"
#include "polysol/polygon.hpp"

namespace polysol::io {

/// All numeric output uses 17 significant digits so a write/read round trip
/// reproduces the doubles exactly.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Polygon with optional per-vertex curve parameters (blank in the CSV when
/// the polygon was not sampled from a curve).
struct PolygonRecord {
  Polygon poly;
  std::vector<std::optional<double>> ts;
};

// CSV schema: optional '#' comment lines carrying topology metadata, then a
// header `j,t,x0,x1[,...]` and one row per vertex.
inline void write_csv(std::ostream& os, const PolygonRecord& rec) {
  const Polygon& p = rec.poly;
  if (p.is_closed())
    os << "# topology=closed N=" << p.count() << "\n";
  else
    os << "# topology=open jmin=" << p.j_min() << " jmax=" << p.j_max() << "\n";
  os << "j,t";
  for (std::size_t c = 0; c < p.dim(); ++c) os << ",x" << c;
  os << "\n";
  const long base = p.is_closed() ? 0 : p.j_min();
  for (std::size_t i = 0; i < p.count(); ++i) {
    os << (base + static_cast<long>(i)) << ",";
    if (i < rec.ts.size() && rec.ts[i]) os << format_double(*rec.ts[i]);
    for (std::size_t c = 0; c < p.dim(); ++c) os << "," << format_double(p.vertices()[i][c]);
    os << "\n";
  }
}

inline void write_csv(std::ostream& os, const Polygon& p) { write_csv(os, {p, {}}); }

/// Curve samples: header plus one row per point, no topology comment
/// (samples are not a polygon).
inline void write_samples_csv(std::ostream& os, const std::vector<std::pair<double, Vec>>& samples) {
  if (samples.empty()) throw std::invalid_argument("write_samples_csv: no samples");
  os << "j,t";
  for (std::size_t c = 0; c < samples[0].second.size(); ++c) os << ",x" << c;
  os << "\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << i << "," << format_double(samples[i].first);
    for (std::size_t c = 0; c < samples[i].second.size(); ++c)
      os << "," << format_double(samples[i].second[c]);
    os << "\n";
  }
}

inline PolygonRecord read_csv(std::istream& is) {
  bool closed = false;
  bool saw_topology = false;
  long jmin = 0;
  std::vector<Vec> vs;
  std::vector<std::optional<double>> ts;
  std::string line;
  bool first_row = true;

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("topology=closed") != std::string::npos) {
        closed = true;
        saw_topology = true;
      } else if (line.find("topology=open") != std::string::npos) {
        saw_topology = true;
        const auto pos = line.find("jmin=");
        if (pos != std::string::npos) jmin = std::stol(line.substr(pos + 5));
      }
      continue;
    }
    if (line.rfind("j,t", 0) == 0) continue;  // header

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    // allow a trailing empty coordinate list guard
    if (fields.size() < 3) throw std::runtime_error("malformed CSV row: " + line);

    if (first_row && !saw_topology) jmin = std::stol(fields[0]);
    first_row = false;

    if (fields[1].empty())
      ts.emplace_back(std::nullopt);
    else
      ts.emplace_back(std::stod(fields[1]));

    Vec v(fields.size() - 2);
    for (std::size_t c = 2; c < fields.size(); ++c) v[c - 2] = std::stod(fields[c]);
    vs.push_back(std::move(v));
  }
  if (vs.empty()) throw std::runtime_error("CSV contains no vertices");

  Polygon p = closed ? Polygon::closed(std::move(vs)) : Polygon::open_window(jmin, std::move(vs));
  return {std::move(p), std::move(ts)};
}

/// Single polyline with an auto-fit viewBox. Screen convention: y axis
/// points down, so coordinates are flipped. Stroke width is 0.5% of the
/// bounding-box diagonal.
inline void write_svg(std::ostream& os, const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("write_svg: no points");
  if (points[0].size() != 2) throw std::invalid_argument("write_svg: 2-d points required");

  double xmin = points[0][0], xmax = xmin, ymin = points[0][1], ymax = ymin;
  for (const Vec& p : points) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  double w = xmax - xmin, h = ymax - ymin;
  if (w <= 0.0) w = 1.0;
  if (h <= 0.0) h = 1.0;
  const double margin = 0.05 * std::max(w, h);
  const double diag = std::sqrt(w * w + h * h);
  const double stroke = 0.005 * diag;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << format_double(xmin - margin) << " " << format_double(ymin - margin) << " "
     << format_double(w + 2.0 * margin) << " " << format_double(h + 2.0 * margin) << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << format_double(stroke)
     << "\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) os << " ";
    // flip: y_svg = (ymin + ymax) - y
    os << format_double(points[i][0]) << "," << format_double(ymin + ymax - points[i][1]);
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace polysol::io
