#include "ptorus/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ptorus {

void JobConfig::set(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

std::string JobConfig::canonical() const {
  std::string s = "cmd=" + command;
  for (const auto& [k, v] : params) s += ";" + k + "=" + v;
  s += ";seed=" + std::to_string(seed);
  return s;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string config_hash_hex(const JobConfig& cfg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(cfg.canonical())));
  return std::string("0x") + buf;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") +
         format_double(std::abs(z.imag())) + "i";
}

std::string csv_header(const JobConfig& cfg, const std::string& schema,
                       const std::string& columns) {
  std::string out;
  out += "# " + schema + "\n";
  out += "# config " + cfg.canonical() + "\n";
  out += "# config_hash " + config_hash_hex(cfg) + "\n";
  out += "# seed " + std::to_string(cfg.seed) + "\n";
  out += columns + "\n";
  return out;
}

std::string boundary_csv(const BoundaryTrace& trace, const JobConfig& cfg) {
  std::string out = csv_header(cfg, "ptorus.maskit-boundary.csv.v1",
                               "p,q,re_mu,im_mu,trace_sign,residual");
  for (const auto& c : trace.cusps) {
    out += std::to_string(c.slope.p) + "," + std::to_string(c.slope.q) + "," +
           format_double(c.mu.real()) + "," + format_double(c.mu.imag()) +
           "," + std::to_string(c.trace_sign) + "," +
           format_double(c.residual) + "\n";
  }
  return out;
}

std::string cloud_csv(const RegionCloud& cloud, const JobConfig& cfg) {
  std::string out = csv_header(cfg, "ptorus.region-cloud.csv.v1",
                               "re,im,tag,branch,mu_index,nu_index");
  for (const auto& pt : cloud.points) {
    out += format_double(pt.xi.real()) + "," + format_double(pt.xi.imag()) +
           "," + to_string(cloud.tag) + "," + pt.branch + "," +
           std::to_string(pt.mu_index) + "," + std::to_string(pt.nu_index) +
           "\n";
  }
  return out;
}

std::string geom_csv(const std::vector<PowerResidualRow>& power,
                     const GeomConvergenceReport& geom,
                     const JobConfig& cfg) {
  std::string out =
      csv_header(cfg, "ptorus.geom-check.csv.v1",
                 "n,m_n,power_residual,sup_residual,spurious_margin,widened");
  const size_t rows = std::max(power.size(), geom.rows.size());
  for (size_t i = 0; i < rows; ++i) {
    const bool hp = i < power.size();
    const bool hg = i < geom.rows.size();
    const long long n = hp ? power[i].n : geom.rows[i].n;
    const long long m = hp ? power[i].m : geom.rows[i].m;
    out += std::to_string(n) + "," + std::to_string(m) + ",";
    out += hp ? format_double(power[i].residual) : "";
    out += ",";
    out += hg ? format_double(geom.rows[i].sup_residual) : "";
    out += ",";
    out += hg ? format_double(geom.rows[i].spurious_margin) : "";
    out += ",";
    out += hg ? (geom.rows[i].widened ? "1" : "0") : "";
    out += "\n";
  }
  return out;
}

std::string points_csv(const std::vector<Complex>& points,
                       const JobConfig& cfg) {
  std::string out = csv_header(cfg, "ptorus.points.csv.v1", "re,im");
  for (const Complex& z : points)
    out += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
  return out;
}

std::string verdicts_json(const std::vector<NamedVerdict>& verdicts,
                          const JobConfig& cfg) {
  nlohmann::ordered_json root;
  root["schema"] = "ptorus.seq.verdicts.v1";
  root["config"] = cfg.canonical();
  root["config_hash"] = config_hash_hex(cfg);
  root["seed"] = cfg.seed;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& nv : verdicts) {
    nlohmann::ordered_json v;
    v["name"] = nv.name;
    v["verdict"] = to_string(nv.verdict.kind);
    if (nv.verdict.kind == ConvergenceVerdict::Kind::ConvergesExotic) {
      v["p"] = nv.verdict.p;
      v["q"] = nv.verdict.q;
    }
    if (nv.verdict.xi) {
      v["xi_re"] = nv.verdict.xi->real();
      v["xi_im"] = nv.verdict.xi->imag();
    }
    v["reason"] = nv.verdict.reason;
    list.push_back(std::move(v));
  }
  root["verdicts"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string pgm_image(const std::vector<std::uint32_t>& histogram, int width,
                      int height, const JobConfig& cfg) {
  std::uint32_t peak = 0;
  for (std::uint32_t v : histogram) peak = std::max(peak, v);
  std::string out = "P2\n";
  out += "# config " + cfg.canonical() + "\n";
  out += "# config_hash " + config_hash_hex(cfg) + "\n";
  out += std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const std::uint32_t v =
          histogram[static_cast<size_t>(y) * width + x];
      const int g =
          peak == 0 ? 0 : static_cast<int>(255.0 * v / peak + 0.5);
      out += std::to_string(g);
      out += (x + 1 == width) ? '\n' : ' ';
    }
  }
  return out;
}

std::vector<Complex> read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open samples file: " + path);
  std::vector<Complex> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double re, im;
    if (ss >> re >> im) out.emplace_back(re, im);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace ptorus
