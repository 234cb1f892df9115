#include "opprank/report.hpp"

#include "opprank/error.hpp"

namespace opprank {

using nlohmann::json;

json to_json(const Weight& w) { return json(w.coords()); }

json to_json(const TypeSet& s) { return json(s.nodes()); }

json to_json(const FormalCharacter& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"weight", to_json(w)}, {"coeff", c}});
  return terms;
}

FormalCharacter character_from_json(const RootSystemSpec& system, const json& j) {
  FormalCharacter x(system);
  for (const auto& term : j) {
    x.add(Weight(term.at("weight").get<std::vector<int>>()), term.at("coeff").get<std::int64_t>());
  }
  return x;
}

json to_json(const Resolution& r) {
  json chain = json::array();
  for (const auto& link : r.chain) chain.push_back({{"weight", to_json(link.weight)}, {"jantzen_sum", to_json(link.jantzen_sum)}});
  json j = {
      {"status", to_string(r.status)},
      {"weight", to_json(r.weight)},
      {"p", r.p},
      {"chain", chain},
      {"depth", r.depth()},
  };
  if (r.simple_char) j["simple_char"] = to_json(*r.simple_char);
  if (r.dim) j["dim"] = r.dim->str();
  return j;
}

json to_json(const EigenPowerCheck& c) {
  return {{"ok", c.ok}, {"exponents", c.exponents}, {"zero_eigenvalue", c.zero_eigenvalue}};
}

namespace {

json gram_rows(const PolarForm& form) {
  json rows = json::array();
  for (int i = 0; i < form.dim; ++i) {
    std::vector<int> row;
    for (int j = 0; j < form.dim; ++j) row.push_back(form.gram[static_cast<std::size_t>(i * form.dim + j)]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json to_json(const VerifyReport& r) {
  const JobConfig& c = r.config;
  json config = {
      {"system", to_string(c.system)},
      {"family", std::string(1, family_letter(c.system.family))},
      {"rank", c.system.rank},
      {"cotype", to_json(c.cotype)},
      {"p", c.p},
      {"t", c.t},
      {"q", c.q()},
  };
  if (c.twist_orbits) config["twist_orbits"] = *c.twist_orbits;

  json j = {{"schema", kReportSchema}, {"command", r.command}, {"config", config}};

  if (r.prediction) {
    const Prediction& p = *r.prediction;
    json pj = {
        {"lambda_opp", to_json(p.lambda_opp)},
        {"lambda_opp_at_p", to_json(p.lambda_opp_prime)},
        {"resolution", to_json(p.resolution)},
        {"status", to_string(p.resolution.status)},
        {"chain_depth", p.resolution.depth()},
        {"steinberg_exponent", p.steinberg_exponent},
    };
    if (p.dim_at_prime) pj["dim_at_p"] = p.dim_at_prime->str();
    if (p.predicted_rank) pj["predicted_rank"] = p.predicted_rank->str();
    if (p.closed_form_at_prime) pj["truncated_poly_dim_at_p"] = p.closed_form_at_prime->str();
    if (p.note) pj["note"] = *p.note;
    j["prediction"] = pj;
  }
  if (r.geometry) {
    const GeometryStats& g = *r.geometry;
    json gj = {
        {"rows", g.nrows},
        {"cols", g.ncols},
        {"row_cotype", to_json(g.row_cotype)},
        {"col_cotype", to_json(g.col_cotype)},
        {"w_star_length", g.w_star_length},
        {"row_sum", g.row_sum.str()},
        {"matrix_file", g.matrix_file},
        {"row_label_file", g.row_label_file},
        {"col_label_file", g.col_label_file},
    };
    if (g.form) gj["polar_gram"] = gram_rows(*g.form);
    j["geometry"] = gj;
  }
  if (r.geometry_unsupported) j["geometry_unsupported"] = *r.geometry_unsupported;
  if (r.measured_rank) j["measured_rank"] = std::to_string(*r.measured_rank);
  if (r.spectrum) {
    json sj = {{"max_exp", r.spectrum->max_exp}};
    if (r.spectrum->check) sj["result"] = to_json(*r.spectrum->check);
    if (r.spectrum->skipped) sj["skipped"] = *r.spectrum->skipped;
    j["spectrum"] = sj;
  }
  if (r.verdict) j["verdict"] = to_string(*r.verdict);
  return j;
}

}  // namespace opprank
