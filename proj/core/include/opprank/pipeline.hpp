#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opprank/characters.hpp"
#include "opprank/exactlinalg.hpp"
#include "opprank/finitegeom.hpp"
#include "opprank/jantzen.hpp"
#include "opprank/rootdata.hpp"
#include "opprank/weylgroup.hpp"

namespace opprank {

/// One job: flat `key = value` config (keys family, rank, cotype, p, t, out,
/// twist_orbits) plus command-line overrides.
struct JobConfig {
  RootSystemSpec system;
  TypeSet cotype;
  int p = 2;
  int t = 1;
  std::string out_dir = "opprank-out";
  std::optional<std::vector<std::vector<int>>> twist_orbits;
  bool use_cache = true;

  int q() const;
};

using ConfigMap = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment. Unknown keys are errors.
ConfigMap parse_config_text(std::string_view text);
ConfigMap read_config_file(const std::string& path);
/// Validates and converts; missing keys fall back to defaults except family/rank.
JobConfig make_config(const ConfigMap& values);

enum class Verdict { Match, Mismatch, UnresolvedPrediction, GeometryUnsupported };
std::string to_string(Verdict v);

struct Prediction {
  Weight lambda_opp;        // at q (or q0 for twisted groups)
  Weight lambda_opp_prime;  // the same shape at the prime p
  Resolution resolution;
  int steinberg_exponent = 1;
  std::optional<BigInt> dim_at_prime;
  std::optional<BigInt> predicted_rank;
  /// Type A with a single node outside J: truncated polynomial ring count at p.
  std::optional<BigInt> closed_form_at_prime;
  std::optional<std::string> note;
};

struct GeometryStats {
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::size_t w_star_length = 0;
  BigInt row_sum;
  TypeSet row_cotype;
  TypeSet col_cotype;
  std::string matrix_file;
  std::string row_label_file;
  std::string col_label_file;
  bool from_cache = false;
  std::optional<PolarForm> form;
};

struct SpectrumResult {
  int max_exp = 0;
  std::optional<EigenPowerCheck> check;
  std::optional<std::string> skipped;
};

struct VerifyReport {
  std::string command;
  JobConfig config;
  std::optional<Prediction> prediction;
  std::optional<GeometryStats> geometry;
  std::optional<std::string> geometry_unsupported;
  std::optional<std::size_t> measured_rank;
  std::optional<SpectrumResult> spectrum;
  std::optional<Verdict> verdict;
};

/// 0 success / MATCH, 2 MISMATCH, 3 UNRESOLVED_PREDICTION, 4 GEOMETRY_UNSUPPORTED.
int exit_code(const VerifyReport& report);
inline constexpr int kExitConfigError = 1;

Prediction predict(const JobConfig& config);

struct BuiltMatrix {
  IncidenceMatrix matrix;
  GeometryStats stats;
};
/// Builds (or reloads from the output directory) the oppositeness matrix at q.
BuiltMatrix build_or_load(const JobConfig& config);
std::string cache_key(const JobConfig& config);

SpectrumResult spectrum_of(const IncidenceMatrix& m, std::size_t w_star_length);

VerifyReport cmd_predict(const JobConfig& config);
VerifyReport cmd_build(const JobConfig& config);
VerifyReport cmd_rank(const JobConfig& config);
VerifyReport cmd_spectrum(const JobConfig& config);
VerifyReport cmd_verify(const JobConfig& config);

}  // namespace opprank
