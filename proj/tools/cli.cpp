#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "blowchern/io.hpp"

namespace blowchern::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kFormulas{"porteous", "oldrec", "main", "difflp", "simlem", "newnormal"};

int bound(const CliConfig& cfg, int d) { return cfg.max_degree.value_or(default_max_degree(d)); }

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs one check; library errors become a failed report instead of aborting the suite.
template <class F>
VerificationReport guarded(const std::string& name, json params, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    VerificationReport r;
    r.check = name;
    r.parameters = std::move(params);
    r.residual = std::string("error: ") + e.what();
    return r;
  }
}

}  // namespace

void validate(const CliConfig& cfg) {
  auto bad = [](const std::string& m) { throw Error(ErrorKind::invalid_argument, m); };
  switch (cfg.command) {
    case Command::verify: {
      if (cfg.max_codim < 1 || cfg.max_codim > 8) bad("--max-codim must be in 1..8");
      int rank = cfg.max_rank.value_or(cfg.max_codim + 3);
      if (rank < cfg.max_codim) bad("--max-rank must be at least --max-codim");
      if (rank > 16) bad("--max-rank must be at most 16");
      if (cfg.max_degree && *cfg.max_degree < cfg.max_codim + 1) {
        bad("--max-degree must exceed --max-codim");
      }
      break;
    }
    case Command::compute:
      if (!cfg.scenario_path) bad("compute needs --scenario");
      break;
    case Command::expand: {
      if (cfg.formula.empty()) bad("expand needs --formula");
      if (std::find(kFormulas.begin(), kFormulas.end(), cfg.formula) == kFormulas.end()) {
        bad("unknown formula '" + cfg.formula + "'");
      }
      if (!cfg.codim) bad("expand needs --codim");
      const int d = *cfg.codim;
      const bool proper = cfg.formula == "newnormal";
      if (d < (proper ? 0 : 1) || d > 12) bad("--codim out of range for " + cfg.formula);
      if (cfg.excess < 0 || cfg.excess > 12) bad("--excess must be in 0..12");
      if (cfg.excess != 0 && cfg.formula != "main" && cfg.formula != "newnormal") {
        bad("--excess is not a parameter of " + cfg.formula);
      }
      if (cfg.formula == "simlem") bad("simlem is computed in the blow-up ring and has no operator expansion");
      if (cfg.max_degree && (*cfg.max_degree < 0 || *cfg.max_degree > 40)) bad("--max-degree must be in 0..40");
      break;
    }
  }
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const int maxd = cfg.max_codim;
  const int max_rank = cfg.max_rank.value_or(maxd + 3);
  const std::optional<int> D = cfg.max_degree;
  std::vector<VerificationReport> reports;
  auto add = [&](const std::string& name, json params, auto&& f) {
    reports.push_back(guarded(name, std::move(params), f));
  };

  for (int d = 1; d <= maxd; ++d) {
    add("pushforward_identity", {{"d", d}}, [&] { return verify_pushforward_identity(d, D); });
    add("restriction_identity", {{"d", d}}, [&] { return verify_restriction_identity(d, D); });
  }
  for (int d = 1; d <= maxd; ++d) {
    for (int e = d; e <= max_rank; ++e) {
      add("oldrec_equals_porteous", {{"d", d}, {"rank_e", e}},
          [&] { return verify_oldrec_equals_porteous(d, e, D); });
    }
  }
  for (int d = 1; d <= maxd; ++d) {
    add("difflp_equals_porteous", {{"d", d}}, [&] { return verify_difflp_equals_porteous(d, D); });
  }
  for (int d = 1; d <= std::min(maxd, 5); ++d) {
    add("simlem_equals_main", {{"d", d}}, [&] { return verify_simlem_equals_main(d); });
  }
  add("codim_one_degeneracy", {{"d", 1}}, [&] { return verify_codim_one(D); });
  for (int dp = 0; dp <= std::min(maxd, 5); ++dp) {
    for (int e = 0; e <= 3; ++e) {
      add("newnormal_extremes", {{"dprime", dp}, {"e", e}},
          [&] { return verify_newnormal_extremes(dp, e, cfg.twist, D); });
    }
  }
  for (int d = 1; d <= maxd; ++d) {
    add("self_intersection", {{"d", d}}, [&] { return verify_self_intersection(d, D); });
  }
  for (int d = 1; d <= std::min(maxd, 4); ++d) {
    add("key_formula", {{"d", d}}, [&] { return verify_key_formula(d, D); });
  }
  for (const auto& s : catalog()) {
    add("euler_identity", {{"scenario", s.label}}, [&] { return euler_identity_check(s); });
  }

  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  if (cfg.format == Format::json) {
    out << reports_to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r) << "\n";
    out << "summary: " << reports.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kCheckFailed;
}

int run_compute(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  Scenario s = parse_scenario(read_file(*cfg.scenario_path));
  BlowupChern b = blowup_total_chern(s);
  VerificationReport euler = euler_identity_check(s);
  const std::string expected = euler.parameters["chi_expected"].get<std::string>();
  if (cfg.format == Format::json) {
    json j = {{"scenario", scenario_to_json(s)},
              {"total", {{"y", b.total.y_part().to_string()}, {"x", b.total.x_part().to_string()}}},
              {"pushforward", b.pushed.to_string()},
              {"restriction", b.restricted.to_string()},
              {"chi_center", to_string(b.chi_center)},
              {"chi", to_string(b.chi)},
              {"euler_identity", to_json(euler)}};
    j["euler_identity"].erase("elapsed_ms");
    out << j.dump(2) << "\n";
  } else {
    out << "scenario: " << s.label << "\n";
    out << "c(T) = " << b.total.to_string() << "\n";
    out << "pushforward = " << b.pushed.to_string() << "\n";
    out << "restriction = " << b.restricted.to_string() << "\n";
    out << "chi(center) = " << to_string(b.chi_center) << "\n";
    out << "chi = " << to_string(b.chi) << "\n";
    out << "euler identity: " << (euler.pass ? "PASS" : "FAIL") << " (expected " << expected << ")\n";
  }
  return euler.pass ? kOk : kCheckFailed;
}

int run_expand(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const int d = *cfg.codim;
  const int D = bound(cfg, std::max(d, 1));
  json j = {{"formula", cfg.formula}, {"codim", d}, {"max_degree", D}};
  std::vector<std::pair<std::string, std::string>> lines;

  if (cfg.formula == "porteous") {
    auto ctx = universal_context(d, 0, D);
    lines.emplace_back("alpha", porteous_alpha(*ctx).value().to_string());
  } else {
    TwistedOperator op;
    std::vector<GradedPoly> chern;
    const auto& name = cfg.formula;
    if (name == "main") {
      op = main_normal_chern(d, cfg.excess, D);
      j["excess"] = cfg.excess;
    } else if (name == "oldrec") {
      op = oldrec_operator(d, D);
    } else if (name == "difflp") {
      op = difflp_operator(d, D);
    } else {
      op = newnormal_chern(d, cfg.excess, cfg.twist, D);
      j["excess"] = cfg.excess;
      j["twist"] = to_string(cfg.twist);
    }
    lines.emplace_back("expr", op.expr.to_string());
    lines.emplace_back("F0", op.f0.to_string());
    lines.emplace_back("F+", op.fplus.to_string());
    // The proper-transform operator lives on a different projective bundle,
    // so it has no relation to impose here.
    if (name != "newnormal") {
      const auto& t = op.expr.table();
      chern.push_back(GradedPoly::constant(t, 1));
      std::vector<std::string> roots;
      for (int i = 1; i <= d; ++i) roots.push_back("Z" + std::to_string(i));
      for (int i = 1; i <= d; ++i) {
        chern.push_back(name == "difflp" ? elementary_symmetric(t, roots, i)
                                         : GradedPoly::variable(t, "n" + std::to_string(i)));
      }
      lines.emplace_back("reduced", reduce_on_exceptional(op.expr, chern, d, op.zeta, D).to_string());
    }
  }

  if (cfg.format == Format::json) {
    for (const auto& [k, v] : lines) j[k] = v;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : lines) out << k << " = " << v << "\n";
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Chern classes of blow-ups: verification, scenarios, operator expansion", "blowchern"};
  app.require_subcommand(1);

  std::string format = "text", twist = "minus";
  std::optional<int> max_rank, codim, max_degree;
  std::string scenario;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_twist = [&](CLI::App* sub) {
    sub->add_option("--twist", twist, "Line bundle twisting the excess bundle in the proper-transform operator")
        ->check(CLI::IsMember({"minus", "plus"}));
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", max_degree, "Truncation degree (default 2d+2)");
  };

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--max-codim", cfg.max_codim, "Largest codimension checked")->capture_default_str();
  verify->add_option("--max-rank", max_rank, "Largest rank of E in the operator equivalences (default max-codim+3)");
  add_degree(verify);
  add_twist(verify);
  add_format(verify);

  auto* compute = app.add_subcommand("compute", "Chern class of the blow-up of a scenario");
  compute->add_option("--scenario", scenario, "Scenario JSON file ('-' for stdin)")->required();
  add_format(compute);

  auto* expand = app.add_subcommand("expand", "Print an operator expansion");
  expand->add_option("--formula", cfg.formula, "porteous, oldrec, main, difflp or newnormal")->required();
  expand->add_option("--codim", codim, "Codimension d (rank of NN for newnormal)")->required();
  expand->add_option("--excess", cfg.excess, "Rank of the excess bundle CC");
  add_degree(expand);
  add_twist(expand);
  add_format(expand);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  if (app.got_subcommand(verify)) {
    cfg.command = Command::verify;
  } else if (app.got_subcommand(compute)) {
    cfg.command = Command::compute;
    cfg.scenario_path = scenario;
  } else {
    cfg.command = Command::expand;
  }
  cfg.max_rank = max_rank;
  cfg.codim = codim;
  cfg.max_degree = max_degree;
  cfg.format = format == "json" ? Format::json : Format::text;
  cfg.twist = twist == "plus" ? Twist::PlusExceptional : Twist::MinusExceptional;

  try {
    validate(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    switch (cfg.command) {
      case Command::verify:
        return run_verify(cfg, out, err);
      case Command::compute:
        return run_compute(cfg, out, err);
      case Command::expand:
        return run_expand(cfg, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::parse:
      case ErrorKind::invalid_argument:
      case ErrorKind::inconsistent_scenario:
        return kConfigError;
      default:
        return kCheckFailed;
    }
  }
  return kOk;
}

}  // namespace blowchern::cli
