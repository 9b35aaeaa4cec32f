#include "nw/commands.hpp"

#include "nw/combinat.hpp"
#include "nw/hecke.hpp"
#include "nw/seminormal.hpp"
#include "nw/wcell.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace nw {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

nlohmann::json rational_list(const std::vector<Rational>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Rational& q : v) j.push_back(to_string(q));
  return j;
}

nlohmann::json record(const std::string& command, const ParamSet& ps, nlohmann::json body) {
  body["command"] = command;
  body["params"] = ps.to_json();
  return body;
}

nlohmann::json summary(const std::string& command, const ParamSet& ps, bool pass, nlohmann::json body = {}) {
  if (body.is_null()) body = nlohmann::json::object();
  body["summary"] = true;
  body["pass"] = pass;
  return record(command, ps, std::move(body));
}

}  // namespace

void RunConfig::validate() const {
  if (r < 1) throw UsageError("r must be at least 1");
  if (n < 0) throw UsageError("n must be nonnegative");
  if (precision_bits < 64) throw UsageError("precision must be at least 64 bits");
  if (u && static_cast<int>(u->size()) != r) throw UsageError("u must have exactly r entries");
  if (truncation && *truncation < 1) throw UsageError("truncation must be at least 1");
  if (A < 0) throw UsageError("A must be nonnegative");
}

void RunConfig::apply_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  if (j.contains("command")) command = j.at("command").get<std::string>();
  if (j.contains("r")) r = j.at("r").get<int>();
  if (j.contains("n")) n = j.at("n").get<int>();
  if (j.contains("u")) {
    const auto& v = j.at("u");
    if (v.is_string() && v.get<std::string>() == "default-generic") {
      u.reset();
    } else if (v.is_string()) {
      u = parse_rational_list(v.get<std::string>());
    } else {
      std::vector<Rational> list;
      for (const auto& x : v) list.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
      u = list;
    }
  }
  if (j.contains("precision")) precision_bits = j.at("precision").get<unsigned>();
  if (j.contains("trunc")) truncation = j.at("trunc").get<int>();
  if (j.contains("out")) out = j.at("out").get<std::string>();
  if (j.contains("lambda")) lambda = j.at("lambda").get<std::string>();
  if (j.contains("A")) A = j.at("A").get<int>();
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j{{"command", command}, {"r", r}, {"n", n}, {"precision", precision_bits}, {"A", A}};
  j["u"] = u ? rational_list(*u) : nlohmann::json("default-generic");
  if (truncation) j["trunc"] = *truncation;
  if (!lambda.empty()) j["lambda"] = lambda;
  return j;
}

std::vector<Rational> resolved_u(const RunConfig& cfg) { return cfg.u ? *cfg.u : default_u(cfg.r, std::max(cfg.n, 1)); }

ParamSet resolve_params(const RunConfig& cfg) {
  cfg.validate();
  const int N = cfg.truncation.value_or(default_truncation(cfg.r, cfg.n));
  return ParamSet::from_u(resolved_u(cfg), N, cfg.precision_bits);
}

CommandResult cmd_counts(const RunConfig& cfg) {
  const ParamSet ps = resolve_params(cfg);
  CommandResult res;
  BigInt total = 0;
  for (const Multipartition& lambda : updown_shapes(cfg.r, cfg.n)) {
    const BigInt f = count_updown(cfg.n, lambda);
    total += f * f;
    res.records.push_back(record("counts", ps, {{"lambda", lambda.to_string()}, {"f", to_string(f)}}));
  }
  const BigInt target = ipow(BigInt(cfg.r), cfg.n) * odd_double_factorial(cfg.n);
  res.pass = total == target;
  res.records.push_back(
      summary("counts", ps, res.pass, {{"total", to_string(total)}, {"target", to_string(target)}, {"equal", res.pass}}));
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const ParamSet ps = resolve_params(cfg);
  CommandResult res;
  try {
    require_real_regime(ps, cfg.n);
  } catch (const std::domain_error& e) {
    res.pass = false;
    res.records.push_back(summary("verify", ps, false, {{"error", "regime"}, {"detail", e.what()}}));
    return res;
  }
  PrecisionGuard guard(ps.precision_bits);
  std::vector<SeminormalRep> reps;
  for (const Multipartition& lambda : updown_shapes(cfg.r, cfg.n)) reps.push_back(build_rep(lambda, cfg.n, ps));
  const RelationReport rel = verify_relations(reps, ps);
  for (const auto& [fam, v] : rel.families)
    res.records.push_back(record("verify", ps,
                                 {{"check", "relation"},
                                  {"family", fam},
                                  {"max_residual", to_string(v.max_residual)},
                                  {"tolerance", to_string(v.tolerance)},
                                  {"pass", v.pass}}));
  bool ids_ok = true, branch_ok = true;
  const Real branch_tol = relation_tolerance(ps.precision_bits);
  for (const SeminormalRep& rep : reps) {
    const IdentityReport ids = check_identities(rep.lambda, cfg.n, ps);
    nlohmann::json tallies = nlohmann::json::object();
    for (const auto& [name, t] : ids.checks) tallies[name] = {{"instances", t.instances}, {"failures", t.failures}};
    ids_ok = ids_ok && ids.all_ok();
    res.records.push_back(record("verify", ps,
                                 {{"check", "identities"}, {"lambda", rep.lambda.to_string()}, {"tallies", tallies},
                                  {"pass", ids.all_ok()}}));
    if (cfg.n >= 2) {
      const BranchingReport br = branching_blocks(rep, ps);
      const bool ok = br.sizes_match && br.off_block_residual < branch_tol && br.block_residual < branch_tol * rep.dim();
      branch_ok = branch_ok && ok;
      nlohmann::json blocks = nlohmann::json::object();
      for (const auto& [mu, idx] : br.blocks) blocks[mu.to_string()] = idx.size();
      res.records.push_back(record("verify", ps,
                                   {{"check", "branching"}, {"lambda", rep.lambda.to_string()}, {"blocks", blocks},
                                    {"off_block_residual", to_string(br.off_block_residual)},
                                    {"block_residual", to_string(br.block_residual)}, {"pass", ok}}));
    }
  }
  res.pass = rel.all_pass() && ids_ok && branch_ok;
  res.records.push_back(summary("verify", ps, res.pass,
                                {{"relations", rel.all_pass()}, {"identities", ids_ok}, {"branching", branch_ok},
                                 {"representations", reps.size()}}));
  return res;
}

CommandResult cmd_gram(const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw UsageError("gram needs --lambda");
  Multipartition lambda = Multipartition::parse(cfg.lambda);
  if (lambda.r() != cfg.r) {
    if (lambda.r() > cfg.r) throw UsageError("lambda has more components than r");
    auto comps = lambda.comps;
    comps.resize(cfg.r);
    lambda = Multipartition(comps);
  }
  RunConfig c = cfg;
  c.n = lambda.size();
  const ParamSet ps = resolve_params(c);
  CommandResult res;
  if (!is_semisimple(c.r, c.n, ps.u)) {
    res.pass = false;
    res.records.push_back(summary("gram", ps, false, {{"lambda", lambda.to_string()}, {"error", "u is not generic"}}));
    return res;
  }
  const GammaResult g = gammas(lambda, ps.u);
  Rational det(1);
  for (const Rational& v : g.values) det *= v;
  const auto tabs = standard_tableaux(lambda);
  for (size_t i = 0; i < tabs.size(); ++i)
    res.records.push_back(record("gram", ps, {{"lambda", lambda.to_string()}, {"tableau", tabs[i].to_string()},
                                              {"gamma", to_string(g.values[i])}}));
  nlohmann::json body{{"lambda", lambda.to_string()},
                      {"gram_det", to_string(det)},
                      {"path_independent", g.path_independent},
                      {"edges_checked", g.edges_checked}};
  bool ok = g.path_independent;
  const HeckeAlgebra H(c.r, std::max(c.n, 1), ps.u);
  if (c.n >= 1 && H.dim() <= 400) {
    const MurphyBasis mb = build_murphy_basis(H);
    const Rational direct = exact_det(gram_matrix(H, mb, lambda));
    body["gram_matrix_det"] = to_string(direct);
    body["equal"] = direct == det;
    ok = ok && direct == det;
  }
  res.pass = ok;
  res.records.push_back(summary("gram", ps, ok, body));
  return res;
}

CommandResult cmd_cellrank(const RunConfig& cfg) {
  const ParamSet ps = resolve_params(cfg);
  CommandResult res;
  try {
    require_real_regime(ps, cfg.n);
  } catch (const std::domain_error& e) {
    res.pass = false;
    res.records.push_back(summary("cellrank", ps, false, {{"error", "regime"}, {"detail", e.what()}}));
    return res;
  }
  PrecisionGuard guard(ps.precision_bits);
  const CellularRankReport rep = cellular_rank_check(cfg.r, cfg.n, ps);
  res.pass = rep.pass();
  res.records.push_back(summary("cellrank", ps, res.pass, rep.to_json()));
  return res;
}

CommandResult cmd_omega(const RunConfig& cfg) {
  cfg.validate();
  const ParamSet ps = ParamSet::from_u(resolved_u(cfg), std::max(cfg.A, 1), cfg.precision_bits);
  CommandResult res;
  std::vector<Rational> omega(ps.omega.begin(), ps.omega.begin() + cfg.A + 1);
  for (int a = 0; a <= cfg.A; ++a)
    res.records.push_back(record("omega", ps, {{"a", a}, {"omega", to_string(ps.omega[a])}}));
  const AdmissibilityResult adm = check_admissible(ps.omega);
  res.pass = adm.ok;
  nlohmann::json body{{"omega", rational_list(omega)}, {"admissible", adm.ok}, {"checked_through", adm.checked_through}};
  if (adm.first_failure >= 0) body["first_failure"] = adm.first_failure;
  res.records.push_back(summary("omega", ps, res.pass, body));
  return res;
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "counts") return cmd_counts(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "gram") return cmd_gram(cfg);
  if (cfg.command == "cellrank") return cmd_cellrank(cfg);
  if (cfg.command == "omega") return cmd_omega(cfg);
  throw UsageError("unknown command: " + cfg.command);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and high-precision checks for cyclotomic Nazarov-Wenzl algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string u_text, config_path;
  std::optional<int> trunc;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "number of cyclotomic parameters");
    sub->add_option("--n", cfg.n, "number of strands");
    sub->add_option("--u", u_text, "comma-separated rationals u_1,...,u_r (default: generic)");
    sub->add_option("--precision", cfg.precision_bits, "mpfr precision in bits");
    sub->add_option("--trunc", trunc, "omega truncation N");
    sub->add_option("--out", cfg.out, "write JSON lines to this file");
    sub->add_option("--config", config_path, "JSON config; its keys override flags");
  };
  auto* counts = app.add_subcommand("counts", "sum of squared updown counts against r^n (2n-1)!!");
  auto* verify = app.add_subcommand("verify", "relation, identity and branching suite on the seminormal forms");
  auto* gram = app.add_subcommand("gram", "Gram determinant of a Hecke cell module");
  auto* cellrank = app.add_subcommand("cellrank", "numeric rank of the cellular words");
  auto* omega = app.add_subcommand("omega", "omega_a from u and the admissibility check");
  for (auto* s : {counts, verify, gram, cellrank, omega}) add_common(s);
  gram->add_option("--lambda", cfg.lambda, "multipartition, e.g. 2,1|1")->required();
  omega->add_option("--A", cfg.A, "largest index a");
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  for (auto* s : {counts, verify, gram, cellrank, omega})
    if (s->parsed()) cfg.command = s->get_name();
  try {
    if (!u_text.empty()) cfg.u = parse_rational_list(u_text);
    if (trunc) cfg.truncation = trunc;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config file " + config_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config file: ") + e.what());
      }
      const std::string command = cfg.command;
      cfg.apply_json(j);
      if (cfg.command != command) throw UsageError("config command differs from the subcommand");
    }
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  CommandResult res;
  try {
    res = run_command(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot write " << cfg.out << "\n";
      return 2;
    }
    sink = &file;
  }
  for (const auto& j : res.records) *sink << j.dump() << "\n";
  return res.pass ? 0 : 1;
}

}  // namespace nw
