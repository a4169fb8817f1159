// ptorus: numerical toolkit for Kleinian once-punctured-torus groups.
// Subcommands cover Maskit-slice boundary tracing, cusp solving,
// twist-sequence convergence classification, cyclic geometric-limit checks,
// bump/Bers parameter clouds, and limit-set rendering.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptorus/clouds.hpp"
#include "ptorus/errors.hpp"
#include "ptorus/geom_limit.hpp"
#include "ptorus/io.hpp"
#include "ptorus/limit_classifier.hpp"
#include "ptorus/maskit.hpp"
#include "ptorus/parallel.hpp"
#include "ptorus/render.hpp"

namespace {

using namespace ptorus;
using nlohmann::json;

Complex parse_complex(const std::string& text) {
  const auto pos = text.find(',');
  if (pos == std::string::npos)
    throw std::invalid_argument("expected RE,IM, got '" + text + "'");
  return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 1))};
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!tok.empty()) out.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// Values in --config override the corresponding flags.
json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  in >> j;
  if (!j.is_object())
    throw std::invalid_argument("config file must hold a JSON object");
  return j;
}

template <class T>
void cfg_override(const json& cfg, const char* key, T& value) {
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

void cfg_override(const json& cfg, const char* key, std::string& value) {
  if (cfg.contains(key)) value = cfg.at(key).get<std::string>();
}

IntegerSequenceSpec sequence_from_json(const json& j, const std::string& at) {
  if (!j.is_object())
    throw std::invalid_argument(at + ": sequence spec must be an object");
  IntegerSequenceSpec s;
  s.quad = j.value("quad", 0ll);
  s.lin = j.value("lin", 0ll);
  if (j.contains("offsets")) {
    s.offsets = j.at("offsets").get<std::vector<long long>>();
    if (s.offsets.empty())
      throw std::invalid_argument(at + ".offsets: must be non-empty");
  }
  if (j.contains("prefix"))
    s.prefix = j.at("prefix").get<std::vector<long long>>();
  return s;
}

struct ParsedSide {
  BoundarySide side;
  std::optional<Complex> mu;  // from a rational u, when given as a slope
};

ParsedSide side_from_json(const json& j, const std::string& at) {
  if (!j.is_object()) throw std::invalid_argument(at + ": must be an object");
  if (j.value("infinity", false)) return {BoundarySide::at_infinity(), {}};
  if (j.contains("path")) {
    const json& p = j.at("path");
    auto pair = [&](const char* key) -> std::pair<double, double> {
      if (!p.contains(key))
        throw std::invalid_argument(at + ".path: missing '" +
                                    std::string(key) + "'");
      auto v = p.at(key).get<std::vector<double>>();
      if (v.size() != 2)
        throw std::invalid_argument(at + ".path." + key +
                                    ": expected [slope, offset]");
      return {v[0], v[1]};
    };
    const auto [rl, ro] = pair("re");
    const auto [il, io] = pair("im");
    return {BoundarySide::path(rl, ro, il, io), {}};
  }
  if (!j.contains("k"))
    throw std::invalid_argument(at + ": twist-orbit side needs 'k'");
  const IntegerSequenceSpec k = sequence_from_json(j.at("k"), at + ".k");
  if (j.contains("u_slope")) {
    const FareySlope s = parse_slope(j.at("u_slope").get<std::string>());
    const CuspPoint cusp = rational_end_invariant(s);
    const Complex u(static_cast<double>(s.p) / static_cast<double>(s.q), 0.0);
    return {BoundarySide::twist_orbit(u, k), cusp.mu};
  }
  if (!j.contains("u"))
    throw std::invalid_argument(at + ": twist-orbit side needs 'u' or 'u_slope'");
  auto uv = j.at("u").get<std::vector<double>>();
  if (uv.size() != 2)
    throw std::invalid_argument(at + ".u: expected [re, im]");
  return {BoundarySide::twist_orbit(Complex(uv[0], uv[1]), k), {}};
}

TwistSequenceSpec spec_from_json(const json& j, size_t index) {
  const std::string at = "specs[" + std::to_string(index) + "]";
  if (!j.is_object()) throw std::invalid_argument(at + ": must be an object");
  TwistSequenceSpec spec;
  spec.name = j.value("name", at);
  if (!j.contains("x") || !j.contains("y"))
    throw std::invalid_argument(at + ": needs 'x' and 'y' sides");
  ParsedSide px = side_from_json(j.at("x"), at + ".x");
  ParsedSide py = side_from_json(j.at("y"), at + ".y");
  spec.x = px.side;
  spec.y = py.side;
  auto complex_field = [&](const char* key) -> std::optional<Complex> {
    if (!j.contains(key)) return std::nullopt;
    auto v = j.at(key).get<std::vector<double>>();
    if (v.size() != 2)
      throw std::invalid_argument(at + "." + key + ": expected [re, im]");
    return Complex(v[0], v[1]);
  };
  spec.mu = complex_field("mu");
  spec.nu = complex_field("nu");
  if (!spec.mu) spec.mu = px.mu;
  if (!spec.nu) spec.nu = py.mu;
  return spec;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::fputs(content.c_str(), stdout);
  else
    write_file(path, content);
}

// Interior sample grid above the traced boundary columns.
std::vector<Complex> grid_samples(const BoundaryTrace& boundary, int cols,
                                  int rows, double margin, double spread) {
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(cols) * rows);
  for (int i = 0; i < cols; ++i) {
    const double re = 2.0 * (i + 0.5) / cols;
    const double base = boundary.column_max_im(re) + margin;
    for (int j = 0; j < rows; ++j)
      out.emplace_back(re, base + spread * (j + 0.5) / rows);
  }
  return out;
}

int run_maskit_trace(int qmax, const std::string& out,
                     const std::string& image, int width, int height,
                     std::uint64_t seed) {
  if (qmax < 1) throw std::invalid_argument("--qmax must be >= 1");
  JobConfig cfg;
  cfg.command = "maskit-trace";
  cfg.set("qmax", std::to_string(qmax));
  cfg.set("newton_tol", format_double(tol::cusp_residual));
  cfg.seed = seed;
  const BoundaryTrace trace = trace_boundary(qmax, env_worker_count());
  emit(out, boundary_csv(trace, cfg));
  if (!image.empty()) {
    std::vector<std::uint32_t> hist(
        static_cast<size_t>(width) * static_cast<size_t>(height), 0);
    const double x0 = 0.0, x1 = 2.0, y0 = 1.4, y1 = 2.2;
    for (const auto& c : trace.cusps) {
      const int px = static_cast<int>((c.mu.real() - x0) / (x1 - x0) * width);
      const int py = static_cast<int>((y1 - c.mu.imag()) / (y1 - y0) * height);
      if (px >= 0 && px < width && py >= 0 && py < height)
        ++hist[static_cast<size_t>(py) * width + px];
    }
    write_file(image, pgm_image(hist, width, height, cfg));
  }
  std::printf("cusps=%zu min_im=%s\n", trace.cusps.size(),
              format_double(trace.min_im).c_str());
  return 0;
}

int run_maskit_cusp(const std::string& slope_text, const std::string& guess) {
  const FareySlope s = parse_slope(slope_text);
  CuspPoint c;
  if (guess.empty()) {
    c = rational_end_invariant(s);
  } else {
    c = cusp_solve(s, parse_complex(guess));
  }
  std::printf("cusp %s: mu = %s  trace_sign = %+d  residual = %s\n",
              to_string(c.slope).c_str(), format_complex(c.mu).c_str(),
              c.trace_sign, format_double(c.residual).c_str());
  return 0;
}

int run_seq_classify(const std::string& spec_path, const std::string& out,
                     std::uint64_t seed) {
  std::ifstream in(spec_path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
  json root;
  try {
    in >> root;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("spec file is not valid JSON: ") +
                                e.what());
  }
  if (!root.contains("specs") || !root.at("specs").is_array())
    throw std::invalid_argument("spec file: missing 'specs' array");
  std::vector<NamedVerdict> results;
  size_t idx = 0;
  for (const json& j : root.at("specs")) {
    TwistSequenceSpec spec = spec_from_json(j, idx++);
    results.push_back({spec.name, classify_sequence(spec)});
  }
  JobConfig cfg;
  cfg.command = "seq-classify";
  cfg.set("spec_file", spec_path);
  cfg.set("spec_hash",
          std::to_string(fnv1a64(root.dump())));
  cfg.seed = seed;
  emit(out, verdicts_json(results, cfg));
  return 0;
}

int run_seq_limit(const std::string& mu_text, const std::string& nu_text,
                  long long p, long long q) {
  const Complex mu = parse_complex(mu_text);
  const Complex nu = parse_complex(nu_text);
  const Complex xi = predict_limit(mu, nu, p, q);
  std::printf("xi = %s\n", format_complex(xi).c_str());
  return 0;
}

int run_geom_check(const std::string& w_text, const std::string& m_list_text,
                   double radius, long long window, const std::string& out,
                   std::uint64_t seed) {
  const Complex w = parse_complex(w_text);
  const std::vector<long long> m_list = parse_int_list(m_list_text);
  SyntheticFamily fam{w, {}};
  fam.m.prefix = m_list;
  std::vector<long long> n_list(m_list.size());
  for (size_t i = 0; i < m_list.size(); ++i)
    n_list[i] = static_cast<long long>(i) + 1;

  GroupBallSnapshot ball =
      radius > 0.0
          ? lattice_ball(MoebiusMap::translation(2.0),
                         MoebiusMap::translation(w), radius)
          : lattice_window(MoebiusMap::translation(2.0),
                           MoebiusMap::translation(w), window, window);
  const auto power = power_limit_check(fam, n_list);
  const auto geom = cyclic_geom_limit_check(fam, ball, n_list);

  JobConfig cfg;
  cfg.command = "geom-check";
  cfg.set("w", format_complex(w));
  cfg.set("m_list", m_list_text);
  cfg.set("radius", format_double(ball.radius));
  cfg.seed = seed;
  emit(out, geom_csv(power, geom, cfg));
  std::printf("power residual trend: first=%s last=%s; sup decreasing=%d "
              "margin decreasing=%d\n",
              format_double(power.front().residual).c_str(),
              format_double(power.back().residual).c_str(),
              geom.sup_trend_decreasing() ? 1 : 0,
              geom.margin_trend_decreasing() ? 1 : 0);
  return 0;
}

RegionCloud load_or_grid_samples(const std::string& samples_path,
                                 const std::string& grid, int grid_qmax,
                                 JobConfig& cfg) {
  if (!samples_path.empty()) {
    cfg.set("samples", samples_path);
    return m_samples(read_samples_csv(samples_path));
  }
  int cols = 8, rows = 4;
  if (!grid.empty()) {
    const auto x = grid.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("--grid expects COLSxROWS");
    cols = std::stoi(grid.substr(0, x));
    rows = std::stoi(grid.substr(x + 1));
    if (cols < 1 || rows < 1)
      throw std::invalid_argument("--grid dimensions must be >= 1");
  }
  cfg.set("grid", std::to_string(cols) + "x" + std::to_string(rows));
  cfg.set("grid_qmax", std::to_string(grid_qmax));
  const BoundaryTrace boundary = trace_boundary(grid_qmax, env_worker_count());
  return m_samples(grid_samples(boundary, cols, rows, 0.1, 1.5));
}

int run_bump_cloud(long long p, const std::string& samples_path,
                   const std::string& grid, int grid_qmax,
                   const std::string& out, std::uint64_t seed) {
  if (p < 0) throw std::invalid_argument("-p must be >= 0");
  JobConfig cfg;
  cfg.command = "bump-cloud";
  cfg.set("p", std::to_string(p));
  cfg.seed = seed;
  const RegionCloud samples = load_or_grid_samples(samples_path, grid,
                                                   grid_qmax, cfg);
  const RegionCloud cloud = bump_set(p, samples);
  emit(out, cloud_csv(cloud, cfg));
  std::printf("points=%zu min_im=%s\n", cloud.points.size(),
              format_double(cloud.min_im()).c_str());
  return 0;
}

int run_bers_cloud(const std::string& nu_text, const std::string& samples_path,
                   const std::string& grid, int grid_qmax,
                   const std::string& out, std::uint64_t seed) {
  const Complex nu = parse_complex(nu_text);
  JobConfig cfg;
  cfg.command = "bers-cloud";
  cfg.set("nu", format_complex(nu));
  cfg.seed = seed;
  const RegionCloud samples = load_or_grid_samples(samples_path, grid,
                                                   grid_qmax, cfg);
  const RegionCloud cloud = bers_geom_limit_cloud(nu, samples);
  emit(out, cloud_csv(cloud, cfg));
  std::printf("points=%zu (two branches over %zu samples)\n",
              cloud.points.size(), samples.points.size());
  return 0;
}

int run_render(const std::string& mu_text, int depth, bool alpha_only,
               const std::string& points_path, const std::string& image_path,
               int width, int height, long long budget, double contraction,
               std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("--depth must be >= 1");
  RenderTarget target;
  const Complex mu = parse_complex(mu_text);
  const Representation rep = maskit_rep(mu);
  if (alpha_only)
    target.generators = {rep.A};
  else
    target.generators = {rep.A, rep.B};
  target.max_depth = depth;
  target.width = width;
  target.height = height;
  target.point_budget = budget;
  target.contraction_threshold = contraction;

  JobConfig cfg;
  cfg.command = "render-limitset";
  cfg.set("mu", format_complex(mu));
  cfg.set("depth", std::to_string(depth));
  cfg.set("alpha_only", alpha_only ? "1" : "0");
  cfg.set("budget", std::to_string(budget));
  cfg.set("contraction", format_double(contraction));
  cfg.seed = seed;

  const RenderResult result = render_limit_set(target, env_worker_count());
  if (!points_path.empty()) write_file(points_path, points_csv(result.points, cfg));
  if (!image_path.empty())
    write_file(image_path, pgm_image(result.histogram, width, height, cfg));
  std::printf("points=%zu in_box=%lld\n", result.points.size(), result.in_box);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ptorus: punctured-torus Kleinian group computations"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path,
                 "JSON config file; values override flags");
  app.add_option("--seed", seed, "seed recorded in output headers");

  std::function<int()> action;

  // maskit
  auto* maskit = app.add_subcommand("maskit", "Maskit slice computations");
  maskit->require_subcommand(1);
  {
    auto* trace = maskit->add_subcommand("trace", "trace the boundary cusps");
    auto qmax = std::make_shared<int>(20);
    auto out = std::make_shared<std::string>();
    auto image = std::make_shared<std::string>();
    auto width = std::make_shared<int>(512);
    auto height = std::make_shared<int>(256);
    trace->add_option("--qmax", *qmax, "max cusp denominator");
    trace->add_option("--out", *out, "output CSV path (default stdout)");
    trace->add_option("--image", *image, "optional PGM scatter image");
    trace->add_option("--width", *width, "image width");
    trace->add_option("--height", *height, "image height");
    trace->callback([=, &action, &config_path, &seed] {
      action = [=, &config_path, &seed] {
        const json cfg = load_config(config_path);
        int q = *qmax;
        std::string o = *out, img = *image;
        cfg_override(cfg, "qmax", q);
        cfg_override(cfg, "out", o);
        cfg_override(cfg, "image", img);
        return run_maskit_trace(q, o, img, *width, *height, seed);
      };
    });

    auto* cusp = maskit->add_subcommand("cusp", "solve one cusp point");
    auto slope = std::make_shared<std::string>();
    auto guess = std::make_shared<std::string>();
    cusp->add_option("slope", *slope, "slope P/Q")->required();
    cusp->add_option("--guess", *guess, "Newton start RE,IM");
    cusp->callback([=, &action] {
      action = [=] { return run_maskit_cusp(*slope, *guess); };
    });
  }

  // seq
  auto* seq = app.add_subcommand("seq", "twist-sequence classification");
  seq->require_subcommand(1);
  {
    auto* classify = seq->add_subcommand("classify", "classify specs from JSON");
    auto spec = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    classify->add_option("--spec", *spec, "JSON spec file")->required();
    classify->add_option("--out", *out, "output JSON path (default stdout)");
    classify->callback([=, &action, &seed] {
      action = [=, &seed] { return run_seq_classify(*spec, *out, seed); };
    });

    auto* limit = seq->add_subcommand("limit", "predicted limit parameter");
    auto mu = std::make_shared<std::string>();
    auto nu = std::make_shared<std::string>();
    auto p = std::make_shared<long long>(1);
    auto q = std::make_shared<long long>(0);
    limit->add_option("--mu", *mu, "mu as RE,IM")->required();
    limit->add_option("--nu", *nu, "nu as RE,IM")->required();
    limit->add_option("-p", *p, "integer p");
    limit->add_option("-q", *q, "integer q");
    limit->callback([=, &action] {
      action = [=] { return run_seq_limit(*mu, *nu, *p, *q); };
    });
  }

  // geom
  auto* geom = app.add_subcommand("geom", "cyclic geometric limit checks");
  geom->require_subcommand(1);
  {
    auto* check = geom->add_subcommand("check", "power-limit and ball checks");
    auto w = std::make_shared<std::string>();
    auto mlist = std::make_shared<std::string>("100,1000,10000");
    auto radius = std::make_shared<double>(0.0);
    auto window = std::make_shared<long long>(2);
    auto out = std::make_shared<std::string>();
    check->add_option("--w", *w, "target translation RE,IM")->required();
    check->add_option("--m-list", *mlist, "exponents, comma separated");
    check->add_option("--radius", *radius, "ball radius (default: index window)");
    check->add_option("--window", *window, "lattice index window");
    check->add_option("--out", *out, "output CSV path (default stdout)");
    check->callback([=, &action, &seed] {
      action = [=, &seed] {
        return run_geom_check(*w, *mlist, *radius, *window, *out, seed);
      };
    });
  }

  // bump
  auto* bump = app.add_subcommand("bump", "self-bumping parameter clouds");
  bump->require_subcommand(1);
  {
    auto* cloud = bump->add_subcommand("cloud", "sample the bump set");
    auto p = std::make_shared<long long>(1);
    auto samples = std::make_shared<std::string>();
    auto grid = std::make_shared<std::string>();
    auto gq = std::make_shared<int>(10);
    auto out = std::make_shared<std::string>();
    cloud->add_option("-p", *p, "bump index p >= 0");
    cloud->add_option("--samples", *samples, "CSV of slice samples (re,im)");
    cloud->add_option("--grid", *grid, "generate COLSxROWS interior samples");
    cloud->add_option("--grid-qmax", *gq, "boundary qmax for the grid");
    cloud->add_option("--out", *out, "output CSV path (default stdout)");
    cloud->callback([=, &action, &seed] {
      action = [=, &seed] {
        return run_bump_cloud(*p, *samples, *grid, *gq, *out, seed);
      };
    });
  }

  // bers
  auto* bers = app.add_subcommand("bers", "Bers-slice geometric limits");
  bers->require_subcommand(1);
  {
    auto* cloud = bers->add_subcommand("cloud", "two-branch limit cloud");
    auto nu = std::make_shared<std::string>();
    auto samples = std::make_shared<std::string>();
    auto grid = std::make_shared<std::string>();
    auto gq = std::make_shared<int>(10);
    auto out = std::make_shared<std::string>();
    cloud->add_option("--nu", *nu, "nu as RE,IM")->required();
    cloud->add_option("--samples", *samples, "CSV of slice samples (re,im)");
    cloud->add_option("--grid", *grid, "generate COLSxROWS interior samples");
    cloud->add_option("--grid-qmax", *gq, "boundary qmax for the grid");
    cloud->add_option("--out", *out, "output CSV path (default stdout)");
    cloud->callback([=, &action, &seed] {
      action = [=, &seed] {
        return run_bers_cloud(*nu, *samples, *grid, *gq, *out, seed);
      };
    });
  }

  // render
  auto* render = app.add_subcommand("render", "limit-set rendering");
  render->require_subcommand(1);
  {
    auto* ls = render->add_subcommand("limitset", "orbit-point render");
    auto mu = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(8);
    auto alpha_only = std::make_shared<bool>(false);
    auto points = std::make_shared<std::string>();
    auto image = std::make_shared<std::string>();
    auto width = std::make_shared<int>(512);
    auto height = std::make_shared<int>(342);
    auto budget = std::make_shared<long long>(1'000'000);
    auto contraction = std::make_shared<double>(1e-4);
    ls->add_option("--mu", *mu, "Maskit parameter RE,IM")->required();
    ls->add_option("--depth", *depth, "max word length");
    ls->add_flag("--alpha-only", *alpha_only,
                 "render the cyclic group of alpha alone");
    ls->add_option("--points", *points, "points CSV path");
    ls->add_option("--image", *image, "PGM image path");
    ls->add_option("--width", *width, "image width");
    ls->add_option("--height", *height, "image height");
    ls->add_option("--budget", *budget, "point budget");
    ls->add_option("--contraction", *contraction, "pruning threshold");
    ls->callback([=, &action, &config_path, &seed] {
      action = [=, &config_path, &seed] {
        const json cfg = load_config(config_path);
        int d = *depth;
        long long b = *budget;
        cfg_override(cfg, "depth", d);
        cfg_override(cfg, "budget", b);
        return run_render(*mu, d, *alpha_only, *points, *image, *width,
                          *height, b, *contraction, seed);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!action) {
      std::cerr << app.help() << "\n";
      return 2;
    }
    return action();
  } catch (const InvalidSlope& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
}
