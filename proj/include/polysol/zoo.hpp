#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polysol/polygon.hpp"
#include "polysol/soliton.hpp"

namespace polysol::zoo {

/// One catalogued planar soliton with its figure parameters and plot range.
struct ZooPreset {
  std::string case_id;
  std::map<std::string, double> params;
  double t_min = 0.0;
  double t_max = 0.0;
  std::string figure;

  double param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
      throw std::invalid_argument("preset " + case_id + " is missing parameter " + key);
    return it->second;
  }
};

/// The full catalogue. Stable ids: intro, 1a, 1b, 1c, 2a, 2b, 2c, 3, 3fig,
/// 4, 5, 6. Preset 3fig shares the parameters of 3 but samples the printed
/// quartic curve instead of the strict solution; see emit_samples.
inline std::vector<ZooPreset> preset_table() {
  std::vector<ZooPreset> t;
  t.push_back({"intro", {{"v1", 1}, {"v2", 1}, {"s_demo", 0.4}}, 0.0, 6.3, "scaling (intro)"});
  t.push_back({"1a",
               {{"lambda1", 4}, {"lambda2", 9}, {"w1", 1}, {"v2", 1}, {"v1", 0}, {"w2", 0}},
               0.0, 6.3, "scaling, Lissajous"});
  t.push_back({"1b",
               {{"lambda1", 8}, {"lambda2", 1}, {"v2", 1}, {"w1", 1}, {"v1", 0}, {"w2", 0}},
               -1.3, 1.3, "scaling"});
  // No canonical range exists for 1c; a symmetric two-period window is used.
  t.push_back({"1c", {{"variant", 0}}, -6.3, 6.3, "scaling, graph family"});
  t.push_back({"2a",
               {{"u1", 0.3}, {"u2", 4}, {"h11", 1}, {"h12", 0}, {"h21", 0}, {"h22", 0}},
               -3.0, 3.0, "rotate and scale, spira mirabilis"});
  t.push_back({"2b",
               {{"u1", 1}, {"u2", 20}, {"h11", 0.5}, {"h12", 0}, {"h21", 0.5}, {"h22", 0}},
               0.0, 1.2, "rotate and scale"});
  t.push_back({"2c",
               {{"u1", 1}, {"u2", 20}, {"h11", 1}, {"h12", 0}, {"h21", 1.3}, {"h22", 0}},
               -0.57, 0.885, "rotate and scale"});
  t.push_back({"3",
               {{"d2", 0.1}, {"a3", 0.2}, {"a2", -4}, {"a1", -1}, {"a0", 0}},
               -30.0, 25.0, "shear (strict solution)"});
  t.push_back({"3fig",
               {{"d2", 0.1}, {"a3", 0.2}, {"a2", -4}, {"a1", -1}, {"a0", 0}},
               -30.0, 25.0, "shear (printed quartic)"});
  t.push_back({"4",
               {{"b", -1}, {"v1", 1}, {"v2", -0.1}, {"w1", -10}, {"w2", 1}},
               -30.0, 40.0, "shear and scaling"});
  // Range chosen: symmetric window showing the vertex of the parabola.
  t.push_back({"5", {}, -3.0, 3.0, "translation, parabola"});
  t.push_back({"6", {{"b", -1}}, -10.0, 10.0, "translation and scaling"});
  return t;
}

inline ZooPreset find_preset(const std::string& id) {
  for (ZooPreset& p : preset_table())
    if (p.case_id == id) return std::move(p);
  throw std::invalid_argument("unknown preset id: " + id);
}

/// Convert a preset to the (B, d, v, w) data whose solution curve carries it.
/// For 3fig this is the strict solution of the printed equation (the quartic
/// figure curve itself is not one; see emit_samples).
inline SolitonSpec to_spec(const ZooPreset& p) {
  const std::string& id = p.case_id;

  if (id == "intro") {
    return {Mat::from_rows({{-4, 0}, {0, -9}}), Vec{0, 0}, Vec{p.param("v1"), p.param("v2")},
            Vec{0, 0}};
  }
  if (id == "1a" || id == "1b") {
    // Coordinates (w1 sin(l1 t), v2 cos-type(l2 t)); 1b has the hyperbolic
    // second coordinate, so its second diagonal entry is +l2^2.
    const double l1 = p.param("lambda1");
    const double l2 = p.param("lambda2");
    const double b2 = (id == "1a") ? -l2 * l2 : l2 * l2;
    Mat B(2);
    B(0, 0) = -l1 * l1;
    B(1, 1) = b2;
    return {B, Vec{0, 0}, Vec{p.param("v1"), p.param("v2")},
            Vec{p.param("w1") * l1, p.param("w2") * l2}};
  }
  if (id == "1c") {
    const int variant = static_cast<int>(p.param("variant"));
    Mat B(2);
    switch (variant) {
      case 0:  // (t, sin t)
        B(1, 1) = -1.0;
        return {B, Vec{0, 0}, Vec{0, 0}, Vec{1, 1}};
      case 1:  // (t, exp t)
        B(1, 1) = 1.0;
        return {B, Vec{0, 0}, Vec{0, 1}, Vec{1, 1}};
      case 2:  // (t, cosh t)
        B(1, 1) = 1.0;
        return {B, Vec{0, 0}, Vec{0, 1}, Vec{1, 0}};
      default:
        throw std::invalid_argument("1c: variant must be 0 (sin), 1 (exp) or 2 (cosh)");
    }
  }
  if (id == "2a" || id == "2b" || id == "2c") {
    // Complex picture: z'' = mu z with mu = w^2, w = u1 + i u2, solution
    // z(t) = h1 exp(wt) + h2 exp(-wt). Realified, mu acts as a similarity.
    const double u1 = p.param("u1");
    const double u2 = p.param("u2");
    const double mu_re = u1 * u1 - u2 * u2;
    const double mu_im = 2.0 * u1 * u2;
    const double dh_re = p.param("h11") - p.param("h21");
    const double dh_im = p.param("h12") - p.param("h22");
    return {Mat::from_rows({{mu_re, -mu_im}, {mu_im, mu_re}}), Vec{0, 0},
            Vec{p.param("h11") + p.param("h21"), p.param("h12") + p.param("h22")},
            Vec{u1 * dh_re - u2 * dh_im, u1 * dh_im + u2 * dh_re}};
  }
  if (id == "3" || id == "3fig") {
    return {Mat::from_rows({{0, 1}, {0, 0}}), Vec{0, p.param("d2")},
            Vec{p.param("a0"), p.param("a2")}, Vec{p.param("a1"), p.param("a3")}};
  }
  if (id == "4") {
    const double b = p.param("b");
    return {Mat::from_rows({{b, 1}, {0, b}}), Vec{0, 0}, Vec{p.param("v1"), p.param("v2")},
            Vec{p.param("w1"), p.param("w2")}};
  }
  if (id == "5") {
    return {Mat(2), Vec{0, 2}, Vec{0, 0}, Vec{1, 0}};
  }
  if (id == "6") {
    Mat B(2);
    B(1, 1) = p.param("b");
    return {B, Vec{2, 0}, Vec{0, 0}, Vec{0, 1}};
  }
  throw std::invalid_argument("unknown preset id: " + id);
}

/// The printed quartic figure curve of case 3 / 3fig.
inline Vec figure_curve(const ZooPreset& p, double t) {
  if (p.case_id != "3" && p.case_id != "3fig")
    throw std::invalid_argument("figure_curve: only defined for cases 3 and 3fig");
  const double d2 = p.param("d2");
  const double a3 = p.param("a3");
  const double a2 = p.param("a2");
  const double a1 = p.param("a1");
  const double a0 = p.param("a0");
  const double x =
      d2 * t * t * t * t / 24.0 + a3 * t * t * t / 6.0 + a2 * t * t / 2.0 + a1 * t + a0;
  return Vec{x, t};
}

/// Uniform t-grid samples over the preset range. 3fig samples the printed
/// quartic; every other preset samples its strict solution curve.
inline std::vector<std::pair<double, Vec>> emit_samples(const ZooPreset& p, int n_points) {
  if (n_points < 2) throw std::invalid_argument("emit_samples: need at least 2 points");
  const bool figure_mode = (p.case_id == "3fig");
  std::vector<std::pair<double, Vec>> out;
  out.reserve(static_cast<std::size_t>(n_points));

  if (figure_mode) {
    for (int i = 0; i < n_points; ++i) {
      const double t = (i == n_points - 1)
                           ? p.t_max
                           : p.t_min + (p.t_max - p.t_min) * i / (n_points - 1.0);
      out.emplace_back(t, figure_curve(p, t));
    }
    return out;
  }

  const SolitonSpec spec = to_spec(p);
  const InhomogeneityCase cls = classify(spec);
  for (int i = 0; i < n_points; ++i) {
    const double t = (i == n_points - 1)
                         ? p.t_max
                         : p.t_min + (p.t_max - p.t_min) * i / (n_points - 1.0);
    out.emplace_back(t, eval_curve_full(spec, t, cls).pos);
  }
  return out;
}

/// Standard 20-vertex polygon sampled across the preset range; 3fig samples
/// the quartic, everything else the strict curve.
inline Polygon sample_preset_polygon(const ZooPreset& p, int n_vertices = 20) {
  const double s = (p.t_max - p.t_min) / 64.0;
  if (p.case_id == "3fig") {
    std::vector<Vec> vs;
    vs.reserve(static_cast<std::size_t>(n_vertices));
    for (int j = 0; j < n_vertices; ++j) vs.push_back(figure_curve(p, p.t_min + s * j));
    return Polygon::open_window(0, std::move(vs));
  }
  return sample_polygon(to_spec(p), p.t_min, s, 0, n_vertices - 1);
}

}  // namespace polysol::zoo
