// opprank command-line front end.
//
// E6 node labels: 1-2-3-5-6 is the long chain and 4 hangs off 3. In Bourbaki
// labels this is opprank -> Bourbaki: 1->1, 2->3, 3->4, 4->2, 5->5, 6->6.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opprank/error.hpp"
#include "opprank/pipeline.hpp"
#include "opprank/report.hpp"

using namespace opprank;
using nlohmann::json;

namespace {

constexpr const char* kE6Note =
    "E6 labels: 1-2-3-5-6 chain with 4 attached to 3 (Bourbaki: 1->1, 2->3, 3->4, 4->2, 5->5, 6->6).";

struct JobOptions {
  std::string config_file;
  std::vector<std::string> sets;
  std::optional<std::string> system;
  std::optional<std::string> cotype;
  std::optional<int> p;
  std::optional<int> t;
  std::optional<std::string> out;
  std::optional<std::string> twist_orbits;
  bool no_cache = false;
};

void add_job_options(CLI::App* cmd, JobOptions& o, bool with_out) {
  cmd->add_option("--config", o.config_file, "key = value config file");
  cmd->add_option("--set", o.sets, "override a config key (key=value)");
  cmd->add_option("--system", o.system, "root system, e.g. A2, E6");
  cmd->add_option("--cotype", o.cotype, "cotype J as comma-separated nodes (empty for none)");
  cmd->add_option("--p", o.p, "characteristic");
  cmd->add_option("--t", o.t, "q = p^t");
  cmd->add_option("--twist-orbits", o.twist_orbits, "diagram automorphism orbits, e.g. 1,5/2,4/3");
  if (with_out) {
    cmd->add_option("--out", o.out, "output directory for matrices and labels");
    cmd->add_flag("--no-cache", o.no_cache, "rebuild even if a cached matrix exists");
  }
}

JobConfig resolve_job(const JobOptions& o) {
  ConfigMap values;
  if (!o.config_file.empty()) values = read_config_file(o.config_file);
  for (const auto& kv : o.sets) {
    const ConfigMap one = parse_config_text(kv);
    for (const auto& [k, v] : one) values[k] = v;
  }
  if (o.system) {
    const RootSystemSpec spec = parse_root_system(*o.system);
    values["family"] = std::string(1, family_letter(spec.family));
    values["rank"] = std::to_string(spec.rank);
  }
  if (o.cotype) values["cotype"] = *o.cotype;
  if (o.p) values["p"] = std::to_string(*o.p);
  if (o.t) values["t"] = std::to_string(*o.t);
  if (o.out) values["out"] = *o.out;
  if (o.twist_orbits) values["twist_orbits"] = *o.twist_orbits;
  if (o.no_cache) values["cache"] = "0";
  return make_config(values);
}

int emit(const VerifyReport& r) {
  std::cout << to_json(r).dump(2) << '\n';
  return exit_code(r);
}

IncidenceMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file " + path);
  return read_matrix(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-ranks of oppositeness matrices: character prediction and brute force"};
  app.footer(kE6Note);
  app.require_subcommand(1);

  JobOptions job;
  auto* predict_cmd = app.add_subcommand("predict", "lambda_opp, Jantzen resolution and predicted rank");
  add_job_options(predict_cmd, job, false);
  auto* build_cmd = app.add_subcommand("build", "enumerate the geometry and write the oppositeness matrix");
  add_job_options(build_cmd, job, true);
  auto* verify_cmd = app.add_subcommand("verify", "predict, build, rank and compare");
  add_job_options(verify_cmd, job, true);

  std::string matrix_file;
  std::optional<int> matrix_p;
  auto* rank_cmd = app.add_subcommand("rank", "rank mod p of a built matrix");
  add_job_options(rank_cmd, job, true);
  rank_cmd->add_option("--matrix", matrix_file, "matrix file instead of a job");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "check the eigenvalues of A A^T are powers of q");
  add_job_options(spectrum_cmd, job, true);
  spectrum_cmd->add_option("--matrix", matrix_file, "matrix file instead of a job");

  auto* lambda_cmd = app.add_subcommand("lambda-opp", "the highest weight lambda_opp");
  add_job_options(lambda_cmd, job, false);

  std::string weight_text;
  std::string system_text;
  int weight_p = 0;
  auto* jsum_cmd = app.add_subcommand("jantzen-sum", "Jantzen sum of a dominant weight");
  jsum_cmd->add_option("--system", system_text, "root system")->required();
  jsum_cmd->add_option("--weight", weight_text, "weight in fundamental-weight coordinates")->required();
  jsum_cmd->add_option("--p", weight_p, "characteristic")->required();
  auto* wdim_cmd = app.add_subcommand("weyl-dim", "dimension of the Weyl module");
  wdim_cmd->add_option("--system", system_text, "root system")->required();
  wdim_cmd->add_option("--weight", weight_text, "weight in fundamental-weight coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (*predict_cmd) return emit(cmd_predict(resolve_job(job)));
    if (*build_cmd) return emit(cmd_build(resolve_job(job)));
    if (*verify_cmd) return emit(cmd_verify(resolve_job(job)));

    if ((*rank_cmd || *spectrum_cmd) && !matrix_file.empty()) {
      const IncidenceMatrix m = load_matrix(matrix_file);
      json j = {{"schema", kReportSchema},
                {"system", to_string(m.system)},
                {"q", m.q},
                {"row_cotype", to_json(m.row_cotype)},
                {"col_cotype", to_json(m.col_cotype)},
                {"rows", m.nrows},
                {"cols", m.ncols},
                {"matrix_file", matrix_file}};
      if (*rank_cmd) {
        const int p = job.p ? *job.p : FiniteField::of_order(m.q).characteristic();
        if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
        j["command"] = "rank";
        j["p"] = p;
        j["rank"] = std::to_string(rank_mod_p(MatrixModP::from_incidence(m, static_cast<std::uint32_t>(p))));
      } else {
        const RootSystem rs(m.system);
        const std::size_t len = w_star(rs, m.row_cotype).length();
        const SpectrumResult s = spectrum_of(m, len);
        j["command"] = "spectrum";
        j["max_exp"] = s.max_exp;
        if (s.check) {
          j["result"] = to_json(*s.check);
          j["ok"] = s.check->ok;
        }
        if (s.skipped) j["skipped"] = *s.skipped;
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (*rank_cmd) return emit(cmd_rank(resolve_job(job)));
    if (*spectrum_cmd) return emit(cmd_spectrum(resolve_job(job)));

    if (*lambda_cmd) {
      const JobConfig cfg = resolve_job(job);
      const Prediction pr = predict(cfg);
      json j = {{"schema", kReportSchema},
                {"command", "lambda-opp"},
                {"system", to_string(cfg.system)},
                {"cotype", to_json(cfg.cotype)},
                {"p", cfg.p},
                {"t", cfg.t},
                {"q", cfg.q()},
                {"lambda_opp", to_json(pr.lambda_opp)},
                {"lambda_opp_at_p", to_json(pr.lambda_opp_prime)},
                {"steinberg_exponent", pr.steinberg_exponent}};
      if (cfg.twist_orbits) j["twist_orbits"] = *cfg.twist_orbits;
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    const RootSystem rs(parse_root_system(system_text));
    const Weight w = parse_weight(weight_text);
    rs.check_weight(w);
    if (*jsum_cmd) {
      if (!is_prime(weight_p)) throw ConfigError(std::to_string(weight_p) + " is not prime");
      const FormalCharacter s = jantzen_sum(rs, w, weight_p);
      json j = {{"schema", kReportSchema}, {"command", "jantzen-sum"}, {"system", to_string(rs.spec())},
                {"weight", to_json(w)},    {"p", weight_p},             {"jantzen_sum", to_json(s)},
                {"text", to_string(s)}};
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    json j = {{"schema", kReportSchema}, {"command", "weyl-dim"}, {"system", to_string(rs.spec())},
              {"weight", to_json(w)},    {"dim", weyl_dim(rs, w).str()}};
    std::cout << j.dump(2) << '\n';
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "opprank: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const UnsupportedError& e) {
    std::cerr << "opprank: unsupported: " << e.what() << '\n';
    return 4;
  } catch (const ConsistencyError& e) {
    std::cerr << "opprank: consistency check failed: " << e.what() << '\n';
    return 2;
  }
}
