#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptorus/clouds.hpp"
#include "ptorus/geom_limit.hpp"
#include "ptorus/limit_classifier.hpp"
#include "ptorus/maskit.hpp"
#include "ptorus/render.hpp"

namespace ptorus {

/// A resolved job: command name, ordered parameters, seed. The canonical
/// string and its hash go into every output header, so identical configs
/// produce byte-identical files.
struct JobConfig {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;

  void set(const std::string& key, const std::string& value);
  std::string canonical() const;
};

std::uint64_t fnv1a64(const std::string& s);
std::string config_hash_hex(const JobConfig& cfg);

/// Deterministic shortest round-trip formatting ("%.17g").
std::string format_double(double x);
std::string format_complex(Complex z);

/// Common CSV preamble: schema line, config, hash, seed, column list.
std::string csv_header(const JobConfig& cfg, const std::string& schema,
                       const std::string& columns);

std::string boundary_csv(const BoundaryTrace& trace, const JobConfig& cfg);
std::string cloud_csv(const RegionCloud& cloud, const JobConfig& cfg);
std::string geom_csv(const std::vector<PowerResidualRow>& power,
                     const GeomConvergenceReport& geom, const JobConfig& cfg);
std::string points_csv(const std::vector<Complex>& points,
                       const JobConfig& cfg);

struct NamedVerdict {
  std::string name;
  ConvergenceVerdict verdict;
};

std::string verdicts_json(const std::vector<NamedVerdict>& verdicts,
                          const JobConfig& cfg);

/// Plain-text portable graymap (P2), 8-bit, max-scaled.
std::string pgm_image(const std::vector<std::uint32_t>& histogram, int width,
                      int height, const JobConfig& cfg);

/// Reads mu samples from a CSV with columns re,im (comment lines start
/// with '#'; a leading "re,im"-style header row is skipped).
std::vector<Complex> read_samples_csv(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace ptorus
