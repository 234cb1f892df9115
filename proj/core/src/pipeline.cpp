#include "opprank/pipeline.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opprank/error.hpp"

namespace opprank {

namespace fs = std::filesystem;

namespace {

constexpr const char* kKnownKeys[] = {"family", "rank", "cotype", "p", "t", "out", "twist_orbits", "cache"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key + "' expects an integer, got '" + value + "'");
  }
  return v;
}

// FNV-1a, 64 bit.
std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

int JobConfig::q() const { return static_cast<int>(ipow(BigInt(p), static_cast<unsigned>(t))); }

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap values;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    values[key] = value;
  }
  return values;
}

ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

JobConfig make_config(const ConfigMap& values) {
  JobConfig cfg;
  auto get = [&](const char* key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };
  const std::string* family = get("family");
  const std::string* rank = get("rank");
  if (!family || !rank) throw ConfigError("config needs 'family' and 'rank'");
  if (family->size() != 1) throw ConfigError("family must be a single letter A-G");
  cfg.system = parse_root_system(*family + *rank);
  if (const auto* v = get("cotype")) cfg.cotype = parse_type_set(*v);
  if (const auto* v = get("p")) cfg.p = parse_int("p", *v);
  if (const auto* v = get("t")) cfg.t = parse_int("t", *v);
  if (const auto* v = get("out")) cfg.out_dir = *v;
  if (const auto* v = get("cache")) cfg.use_cache = (*v != "0" && *v != "false" && *v != "off");
  if (const auto* v = get("twist_orbits"); v && !v->empty()) cfg.twist_orbits = parse_orbits(*v);

  if (!is_prime(cfg.p)) throw ConfigError("p = " + std::to_string(cfg.p) + " is not prime");
  if (cfg.t < 1 || cfg.t > 64) throw ConfigError("t must lie in 1..64");
  if (cfg.twist_orbits) {
    const RootSystem rs(cfg.system);
    const TwistData tw = make_twist(rs, *cfg.twist_orbits);
    cfg.cotype.check(tw.orbits.size());
    if (cfg.t % tw.order != 0) throw ConfigError("twisted group needs q = q0^" + std::to_string(tw.order));
  } else {
    cfg.cotype.check(static_cast<std::size_t>(cfg.system.rank));
  }
  return cfg;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::UnresolvedPrediction: return "UNRESOLVED_PREDICTION";
    case Verdict::GeometryUnsupported: return "GEOMETRY_UNSUPPORTED";
  }
  return "MISMATCH";
}

int exit_code(const VerifyReport& report) {
  if (report.verdict) {
    switch (*report.verdict) {
      case Verdict::Match: return 0;
      case Verdict::Mismatch: return 2;
      case Verdict::UnresolvedPrediction: return 3;
      case Verdict::GeometryUnsupported: return 4;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- prediction

Prediction predict(const JobConfig& config) {
  const RootSystem rs(config.system);
  Prediction out;
  OppositeWeightSpec at_q{config.cotype, config.p, config.t, std::nullopt};
  OppositeWeightSpec at_p{config.cotype, config.p, 1, std::nullopt};
  if (config.twist_orbits) {
    const TwistData tw = make_twist(rs, *config.twist_orbits);
    at_q.twist = tw;
    at_p.twist = tw;
    at_p.t = tw.order;  // q0 = p
    out.steinberg_exponent = config.t / tw.order;
  } else {
    out.steinberg_exponent = config.t;
  }
  out.lambda_opp = lambda_opp(rs, at_q);
  out.lambda_opp_prime = lambda_opp(rs, at_p);
  out.resolution = resolve_simple(rs, out.lambda_opp_prime, config.p);
  if (out.resolution.dim) {
    out.dim_at_prime = *out.resolution.dim;
    out.predicted_rank = steinberg_rank_power(*out.resolution.dim, out.steinberg_exponent);
  }

  const auto outside = config.cotype.complement(rs.rank());
  if (!config.twist_orbits && config.system.family == Family::A && outside.size() == 1) {
    const int i = outside.nodes().front();
    const int l = config.system.rank;
    out.closed_form_at_prime = truncated_poly_dim(l + 1, config.p, (l + 1 - i) * (config.p - 1));
  }
  if (config.system.family == Family::E && config.system.rank == 6 && outside == TypeSet{1} && config.p < 11) {
    out.note = "E6 chain (p-1)w1 -> ... -> (p-11)w1+2w2 needs p >= 11; smaller p fall back to the generic resolver";
  }
  return out;
}

// ---------------------------------------------------------------- geometry

std::string cache_key(const JobConfig& config) {
  std::ostringstream os;
  os << to_string(config.system) << "|q=" << config.q() << "|J=" << to_string(config.cotype);
  return fnv1a_hex(os.str());
}

BuiltMatrix build_or_load(const JobConfig& config) {
  const GeometryProblem problem(config.system, config.q(), config.cotype);
  BuiltMatrix out;
  GeometryStats& stats = out.stats;
  stats.w_star_length = problem.w_star_length();
  stats.row_sum = problem.row_sum_target();
  stats.row_cotype = problem.cotype();
  stats.col_cotype = problem.opposite_cotype();
  stats.form = problem.form();

  const fs::path dir(config.out_dir);
  const std::string key = cache_key(config);
  const fs::path matrix_path = dir / ("matrix-" + key + ".txt");
  const fs::path rows_path = dir / ("labels-" + key + "-rows.txt");
  const fs::path cols_path = dir / ("labels-" + key + "-cols.txt");
  stats.matrix_file = matrix_path.string();
  stats.row_label_file = rows_path.string();
  stats.col_label_file = cols_path.string();

  if (config.use_cache && fs::exists(matrix_path)) {
    std::ifstream in(matrix_path);
    IncidenceMatrix cached = read_matrix(in);
    if (cached.system == config.system && cached.q == config.q() && cached.row_cotype == problem.cotype() &&
        cached.col_cotype == problem.opposite_cotype()) {
      check_row_sums(cached, stats.row_sum);
      stats.nrows = cached.nrows;
      stats.ncols = cached.ncols;
      stats.from_cache = true;
      out.matrix = std::move(cached);
      return out;
    }
  }

  out.matrix = build_incidence(problem);
  stats.nrows = out.matrix.nrows;
  stats.ncols = out.matrix.ncols;
  fs::create_directories(dir);
  {
    std::ofstream os(matrix_path);
    write_matrix(os, out.matrix);
  }
  {
    std::ofstream os(rows_path);
    write_labels(os, out.matrix.row_labels);
  }
  {
    std::ofstream os(cols_path);
    write_labels(os, out.matrix.col_labels);
  }
  return out;
}

SpectrumResult spectrum_of(const IncidenceMatrix& m, std::size_t w_star_length) {
  SpectrumResult s;
  s.max_exp = static_cast<int>(2 * w_star_length);
  if (m.nrows > kMaxSpectralSize) {
    s.skipped = "matrix has " + std::to_string(m.nrows) + " rows; spectral check limited to " +
                std::to_string(kMaxSpectralSize);
    return s;
  }
  s.check = check_eigen_powers(gram(m), m.q, s.max_exp);
  return s;
}

// ---------------------------------------------------------------- commands

namespace {

VerifyReport base_report(const char* command, const JobConfig& config) {
  VerifyReport r;
  r.command = command;
  r.config = config;
  return r;
}

std::optional<std::string> unsupported(const JobConfig& config) {
  if (config.twist_orbits) return "twisted-group geometries are not enumerated";
  return geometry_unsupported_reason(config.system, config.q(), config.cotype);
}

}  // namespace

VerifyReport cmd_predict(const JobConfig& config) {
  VerifyReport r = base_report("predict", config);
  r.prediction = predict(config);
  if (!r.prediction->resolution.resolved()) r.verdict = Verdict::UnresolvedPrediction;
  return r;
}

VerifyReport cmd_build(const JobConfig& config) {
  VerifyReport r = base_report("build", config);
  if (auto why = unsupported(config)) {
    r.geometry_unsupported = *why;
    r.verdict = Verdict::GeometryUnsupported;
    return r;
  }
  r.geometry = build_or_load(config).stats;
  return r;
}

VerifyReport cmd_rank(const JobConfig& config) {
  VerifyReport r = base_report("rank", config);
  if (auto why = unsupported(config)) {
    r.geometry_unsupported = *why;
    r.verdict = Verdict::GeometryUnsupported;
    return r;
  }
  BuiltMatrix built = build_or_load(config);
  r.geometry = built.stats;
  r.measured_rank = rank_mod_p(MatrixModP::from_incidence(built.matrix, static_cast<std::uint32_t>(config.p)));
  return r;
}

VerifyReport cmd_spectrum(const JobConfig& config) {
  VerifyReport r = base_report("spectrum", config);
  if (auto why = unsupported(config)) {
    r.geometry_unsupported = *why;
    r.verdict = Verdict::GeometryUnsupported;
    return r;
  }
  BuiltMatrix built = build_or_load(config);
  r.geometry = built.stats;
  r.spectrum = spectrum_of(built.matrix, built.stats.w_star_length);
  return r;
}

VerifyReport cmd_verify(const JobConfig& config) {
  VerifyReport r = base_report("verify", config);
  r.prediction = predict(config);
  if (auto why = unsupported(config)) {
    r.geometry_unsupported = *why;
    r.verdict = Verdict::GeometryUnsupported;
    return r;
  }
  BuiltMatrix built = build_or_load(config);
  r.geometry = built.stats;
  r.measured_rank = rank_mod_p(MatrixModP::from_incidence(built.matrix, static_cast<std::uint32_t>(config.p)));
  r.spectrum = spectrum_of(built.matrix, built.stats.w_star_length);
  if (!r.prediction->predicted_rank) {
    r.verdict = Verdict::UnresolvedPrediction;
  } else {
    r.verdict = (*r.prediction->predicted_rank == BigInt(*r.measured_rank)) ? Verdict::Match : Verdict::Mismatch;
  }
  return r;
}

}  // namespace opprank
