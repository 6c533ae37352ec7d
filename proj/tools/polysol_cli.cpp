// Command-line front end: zoo sample generation, the shortening and
// semidiscrete flows, soliton verification, eigenpolygons, and the soliton
// recursion, with CSV/SVG output.
//
// Exit codes: 0 success (or verification passed), 1 verification failed,
// 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polysol/polysol.hpp"

namespace {

using nlohmann::json;
using namespace polysol;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open output file: " + path);
  return os;
}

io::PolygonRecord load_polygon(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open input file: " + path);
  return io::read_csv(is);
}

void emit_polygon(const io::PolygonRecord& rec, const std::string& out_path) {
  if (out_path.empty()) {
    io::write_csv(std::cout, rec);
  } else {
    auto os = open_output(out_path);
    io::write_csv(os, rec);
  }
}

Vec vec_from_json(const json& j) {
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

Mat mat_from_json(const json& j, std::size_t n) {
  if (j.size() != n * n) throw UsageError("matrix JSON must hold n*n entries, row-major");
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) m(i, c) = j[i * n + c].get<double>();
  return m;
}

int run(int argc, char** argv) {
  CLI::App app{"discrete curve shortening: solitons, flows, and figure data"};
  app.require_subcommand(1);

  // zoo
  auto* zoo_cmd = app.add_subcommand("zoo", "emit samples of a catalogued soliton curve");
  std::string preset_id, zoo_out, zoo_format = "csv";
  int n_points = 256;
  zoo_cmd->add_option("preset", preset_id, "preset id (intro, 1a, ..., 6)")->required();
  zoo_cmd->add_option("--points", n_points, "number of sample points");
  zoo_cmd->add_option("--format", zoo_format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  zoo_cmd->add_option("--out", zoo_out, "output path (default stdout)");

  // shorten
  auto* shorten_cmd = app.add_subcommand("shorten", "apply the shortening map iteratively");
  std::string shorten_in, shorten_out;
  double alpha = 0.25;
  int iterations = 1;
  shorten_cmd->add_option("input", shorten_in, "polygon CSV")->required();
  shorten_cmd->add_option("--alpha", alpha, "map weight (default 1/4)");
  shorten_cmd->add_option("--iterations", iterations, "number of applications")
      ->check(CLI::PositiveNumber);
  shorten_cmd->add_option("--out", shorten_out, "output path (default stdout)");

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "run the semidiscrete flow on a closed polygon");
  std::string evolve_in, evolve_out;
  double evolve_s = 0.0;
  evolve_cmd->add_option("input", evolve_in, "polygon CSV")->required();
  evolve_cmd->add_option("--s", evolve_s, "flow time (nonnegative)")->required();
  evolve_cmd->add_option("--out", evolve_out, "output path (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a polygon for affine self-mapping");
  std::string verify_in, map_json;
  double tol = 1e-6;
  verify_cmd->add_option("input", verify_in, "polygon CSV")->required();
  verify_cmd->add_option("--map", map_json, "affine map as JSON {\"A\":[row-major],\"b\":[...]}");
  verify_cmd->add_option("--tol", tol, "acceptance threshold on the max residual");

  // eigen
  auto* eigen_cmd = app.add_subcommand("eigen", "construct an eigenpolygon");
  long eigen_n = 0, eigen_k = 0;
  std::string eigen_out;
  eigen_cmd->add_option("N", eigen_n, "vertex count")->required();
  eigen_cmd->add_option("k", eigen_k, "mode index")->required();
  eigen_cmd->add_option("--out", eigen_out, "output path (default stdout)");

  // recursion
  auto* rec_cmd = app.add_subcommand("recursion", "extend two seed vertices by the soliton recursion");
  std::string rec_a, rec_b, rec_u, rec_v, rec_out;
  long rec_j0 = 0, rec_jmin = 0, rec_jmax = 0;
  rec_cmd->add_option("--A", rec_a, "matrix, row-major JSON array")->required();
  rec_cmd->add_option("--b", rec_b, "offset, JSON array")->required();
  rec_cmd->add_option("--u", rec_u, "vertex at j0, JSON array")->required();
  rec_cmd->add_option("--v", rec_v, "vertex at j0+1, JSON array")->required();
  rec_cmd->add_option("--j0", rec_j0, "seed index");
  rec_cmd->add_option("--jmin", rec_jmin, "window start")->required();
  rec_cmd->add_option("--jmax", rec_jmax, "window end")->required();
  rec_cmd->add_option("--out", rec_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (zoo_cmd->parsed()) {
    const zoo::ZooPreset preset = zoo::find_preset(preset_id);
    const auto samples = zoo::emit_samples(preset, n_points);
    if (zoo_format == "svg") {
      std::vector<Vec> pts;
      pts.reserve(samples.size());
      for (const auto& [t, v] : samples) pts.push_back(v);
      if (zoo_out.empty()) {
        io::write_svg(std::cout, pts);
      } else {
        auto os = open_output(zoo_out);
        io::write_svg(os, pts);
      }
    } else {
      if (zoo_out.empty()) {
        io::write_samples_csv(std::cout, samples);
      } else {
        auto os = open_output(zoo_out);
        io::write_samples_csv(os, samples);
      }
    }
    return 0;
  }

  if (shorten_cmd->parsed()) {
    io::PolygonRecord rec = load_polygon(shorten_in);
    Polygon p = rec.poly;
    for (int i = 0; i < iterations; ++i) {
      // open windows lose two vertices per pass; refuse once the result
      // would drop below a 3-vertex window
      if (!p.is_closed() && p.count() < 5)
        throw UsageError("open window exhausted before all iterations");
      p = shorten_T(p, alpha);
    }
    emit_polygon({p, {}}, shorten_out);
    return 0;
  }

  if (evolve_cmd->parsed()) {
    io::PolygonRecord rec = load_polygon(evolve_in);
    emit_polygon({evolve_closed(rec.poly, evolve_s), {}}, evolve_out);
    return 0;
  }

  if (verify_cmd->parsed()) {
    io::PolygonRecord rec = load_polygon(verify_in);
    std::optional<AffineMap> map;
    if (!map_json.empty()) {
      const json j = json::parse(map_json);
      const std::size_t n = rec.poly.dim();
      map = AffineMap{mat_from_json(j.at("A"), n), vec_from_json(j.at("b"))};
    }
    const SolitonReport report = verify_soliton(rec.poly, map);
    json out;
    out["max_residual"] = report.max_residual;
    out["argmax_index"] = report.argmax_index;
    out["A"] = report.fitted_map.A.data();
    out["b"] = report.fitted_map.b.data();
    if (report.degenerate_fit) out["degenerate_fit"] = true;
    std::cout << out.dump(2) << "\n";
    return report.max_residual <= tol ? 0 : 1;
  }

  if (eigen_cmd->parsed()) {
    auto [poly, mu] = eigenpolygon(eigen_n, eigen_k);
    std::cerr << "mu = " << io::format_double(mu) << "\n";
    emit_polygon({poly, {}}, eigen_out);
    return 0;
  }

  if (rec_cmd->parsed()) {
    const Vec u = vec_from_json(json::parse(rec_u));
    const Vec v = vec_from_json(json::parse(rec_v));
    const Vec b = vec_from_json(json::parse(rec_b));
    const Mat A = mat_from_json(json::parse(rec_a), u.size());
    emit_polygon({soliton_recursion({A, b}, u, v, rec_j0, rec_jmin, rec_jmax), {}}, rec_out);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
