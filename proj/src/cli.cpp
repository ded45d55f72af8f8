#include "riccisol/cli.hpp"
#include "riccisol/acceptance.hpp"
#include "riccisol/engine.hpp"
#include "riccisol/specfile.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>

namespace riccisol {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnknownId = 2;
constexpr int kExitBadSpec = 3;
constexpr int kExitBadParam = 4;
constexpr int kExitUsage = 5;

struct Options {
  bool table = false;
  bool serial = false;
  bool timing = false;
  std::vector<std::string> raw_params; // NAME VALUE pairs, flattened
  std::string samples_csv;
  std::string stages_csv;
  std::vector<std::string> ranges; // name=v1,v2 for sweep
  std::string target;
  std::string seed; // accepted, unused: everything is deterministic
};

Params parse_params(const std::vector<std::string>& raw) {
  if (raw.size() % 2 != 0) throw param_domain_error("--param expects NAME VALUE pairs");
  Params p;
  for (size_t i = 0; i < raw.size(); i += 2) p[raw[i]] = parse_rational(raw[i + 1]);
  return p;
}

// `--alpha 1 --eps -1` style conveniences: leftover long options are
// treated as parameter bindings
void absorb_extras(const std::vector<std::string>& extras, std::vector<std::string>& raw_params) {
  for (size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() <= 2)
      throw param_domain_error("unexpected argument '" + tok + "'");
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      raw_params.push_back(tok.substr(2, eq - 2));
      raw_params.push_back(tok.substr(eq + 1));
      continue;
    }
    if (i + 1 >= extras.size()) throw param_domain_error("option '" + tok + "' needs a value");
    raw_params.push_back(tok.substr(2));
    raw_params.push_back(extras[++i]);
  }
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else
      cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void print_reports(const std::vector<Report>& reports, const Options& opt, std::ostream& out) {
  if (opt.table) {
    for (const auto& r : reports) out << report_to_table(r);
    return;
  }
  out << "[\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    out << report_to_json(reports[i], opt.timing);
    if (i + 1 < reports.size()) out << ",";
    out << "\n";
  }
  out << "]\n";
}

int exit_code_for(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return kExitFail;
  return kExitOk;
}

int cmd_list(const Options& opt, std::ostream& out) {
  if (opt.table) {
    for (const auto& e : catalog()) {
      std::string kind = e.kind == CatalogEntry::Kind::Full
                             ? "full"
                             : (e.kind == CatalogEntry::Kind::Partial ? "partial" : "metadata");
      out << e.id << "  [" << kind << "]  " << e.name << "\n";
    }
    return kExitOk;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : catalog()) {
    nlohmann::json item;
    item["id"] = e.id;
    item["name"] = e.name;
    item["kind"] = e.kind == CatalogEntry::Kind::Full
                       ? "full"
                       : (e.kind == CatalogEntry::Kind::Partial ? "partial" : "metadata");
    nlohmann::json params = nlohmann::json::array();
    for (const auto& ps : e.params) params.push_back(ps.name);
    item["params"] = params;
    j.push_back(item);
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_show(const Options& opt, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(opt.target);
  nlohmann::json j;
  j["id"] = e.id;
  j["name"] = e.name;
  j["kind"] = e.kind == CatalogEntry::Kind::Full
                  ? "full"
                  : (e.kind == CatalogEntry::Kind::Partial ? "partial" : "metadata");
  if (e.kind == CatalogEntry::Kind::MetadataOnly) {
    j["table"] = e.metadata->table;
    j["metric"] = e.metadata->metric_expr;
    j["soliton_field"] = e.metadata->soliton_field;
    j["sigma"] = e.metadata->sigma;
    j["invariant"] = e.metadata->invariant;
    j["note"] = "row not verifiable from the printed tables; brackets live in the cited classification";
  } else {
    nlohmann::json params = nlohmann::json::array();
    for (const auto& ps : e.params) {
      nlohmann::json q;
      q["name"] = ps.name;
      q["domain"] = ps.domain == ParamSpec::Domain::NonZero
                        ? "nonzero"
                        : (ps.domain == ParamSpec::Domain::PlusMinusOne ? "+-1" : "any");
      params.push_back(q);
    }
    j["params"] = params;
    j["metric_status"] = e.metric_status == CatalogEntry::MetricStatus::Resolved ? "resolved" : "searched";
    const MetricResolution res = resolve_metric(e.id);
    j["metric"] = to_string(res.metric);
    if (res.searched) j["metric_survivors"] = res.survivors.size();
    j["fixtures"] = nlohmann::json::object();
    j["fixtures"]["printed_ricci"] = static_cast<bool>(e.printed_rho);
    j["fixtures"]["printed_connection"] = static_cast<bool>(e.printed_lambda);
    j["fixtures"]["printed_system"] = !e.fixture_system_id.empty();
    if (!e.expected_segre.empty()) j["expected_segre"] = e.expected_segre;
    const Params p = check_params(e, {});
    j["pair"] = nlohmann::json::parse(pair_to_json(e.build_with_metric(p, res.metric)));
    if (!e.fixture_system_id.empty())
      j["fixture_system"] = nlohmann::json::parse(system_to_json(load_fixture_system(e.fixture_system_id, p)));
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.target == "all") {
    const auto criteria = run_acceptance(!opt.serial);
    bool all_pass = true;
    if (opt.table) {
      for (const auto& c : criteria) {
        out << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << "\n";
        for (const auto& w : c.warns) out << "        WARN " << w << "\n";
        for (const auto& f : c.failures) out << "        - " << f << "\n";
        all_pass = all_pass && c.pass;
      }
    } else {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& c : criteria) {
        nlohmann::json e;
        e["criterion"] = c.number;
        e["title"] = c.title;
        e["status"] = c.pass ? (c.warns.empty() ? "PASS" : "WARN") : "FAIL";
        e["warnings"] = c.warns;
        e["failures"] = c.failures;
        j.push_back(e);
        all_pass = all_pass && c.pass;
      }
      out << j.dump(2) << "\n";
    }
    return all_pass ? kExitOk : kExitFail;
  }

  const CatalogEntry& e = catalog_entry(opt.target);
  std::vector<VerifyJob> jobs;
  const Params given = parse_params(opt.raw_params);
  if (!given.empty()) {
    jobs.push_back({e.id, check_params(e, given)});
  } else if (!opt.samples_csv.empty()) {
    // CSV samples bind the first free parameter; other parameters keep
    // their default sweep
    std::string target_param;
    for (const auto& ps : e.params)
      if (ps.domain == ParamSpec::Domain::NonZero) {
        target_param = ps.name;
        break;
      }
    if (target_param.empty())
      throw param_domain_error("--samples needs an entry with a free nonzero parameter");
    for (const auto& val : split_csv(opt.samples_csv)) {
      Params base;
      base[target_param] = parse_rational(val);
      jobs.push_back({e.id, check_params(e, base)});
    }
  } else {
    jobs = jobs_for(e.id);
  }
  const auto reports = run_verifications(jobs, !opt.serial);
  print_reports(reports, opt, out);
  return exit_code_for(reports);
}

int cmd_run(const Options& opt, std::ostream& out) {
  const auto stages = split_csv(opt.stages_csv);
  std::vector<Report> reports;
  if (std::filesystem::exists(opt.target)) {
    PairSpec spec = load_pair_spec(opt.target);
    for (const auto& [k, v] : parse_params(opt.raw_params)) spec.params[k] = v;
    const HomogeneousPair pair = build_pair(spec);
    reports.push_back(run_pipeline(pair, stages));
  } else if (catalog_has(opt.target)) {
    const HomogeneousPair pair = instantiate(opt.target, parse_params(opt.raw_params));
    reports.push_back(run_pipeline(pair, stages));
  } else {
    throw unknown_id_error(opt.target + " (not a catalog id, and no such spec file)");
  }
  print_reports(reports, opt, out);
  return exit_code_for(reports);
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(opt.target);
  std::vector<Params> combos{{}};
  for (const auto& range : opt.ranges) {
    const auto eq = range.find('=');
    if (eq == std::string::npos) throw param_domain_error("--range expects name=v1,v2,...");
    const std::string name = range.substr(0, eq);
    std::vector<Params> next;
    for (const auto& val : split_csv(range.substr(eq + 1)))
      for (const auto& base : combos) {
        Params p = base;
        p[name] = parse_rational(val);
        next.push_back(std::move(p));
      }
    combos = std::move(next);
  }
  std::vector<VerifyJob> jobs;
  for (const auto& p : combos) jobs.push_back({e.id, check_params(e, p)});
  const auto reports = run_verifications(jobs, !opt.serial);
  print_reports(reports, opt, out);
  return exit_code_for(reports);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification engine for invariant geometry of homogeneous 4-spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_params) {
    cmd->add_flag("--table", opt.table, "human-readable tables instead of JSON");
    cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
    cmd->add_flag("--serial", opt.serial, "disable the OpenMP sweep parallelism");
    cmd->add_flag("--timing", opt.timing, "include wall-clock timing in reports");
    cmd->add_option("--seed", opt.seed, "accepted for interface stability; everything is deterministic");
    if (with_params)
      cmd->add_option("--param", opt.raw_params, "parameter binding NAME VALUE (repeatable; VALUE is p/q)")
          ->take_all();
  };

  CLI::App* list = app.add_subcommand("list", "list catalog entries");
  add_common(list, false);

  CLI::App* show = app.add_subcommand("show", "show one catalog entry in the spec-file format");
  show->add_option("id", opt.target, "catalog id")->required();
  add_common(show, false);

  CLI::App* verify = app.add_subcommand("verify", "verify an entry against its printed fixtures, or 'all'");
  verify->add_option("id", opt.target, "catalog id or 'all'")->required();
  verify->add_option("--samples", opt.samples_csv, "CSV of values for the entry's first free parameter");
  verify->allow_extras();
  add_common(verify, true);

  CLI::App* run = app.add_subcommand("run", "run the pipeline on a spec file or catalog id");
  run->add_option("target", opt.target, "spec file path or catalog id")->required();
  run->add_option("--stages", opt.stages_csv, "CSV stage filter (validation,connection,curvature,ricci,weyl,segre,soliton)");
  run->allow_extras();
  add_common(run, true);

  CLI::App* sweep = app.add_subcommand("sweep", "verify an entry over explicit parameter ranges");
  sweep->add_option("id", opt.target, "catalog id")->required();
  sweep->add_option("--range", opt.ranges, "parameter range name=v1,v2,... (repeatable)")->take_all();
  sweep->allow_extras();
  add_common(sweep, true);

  std::vector<std::string> argv_like = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("riccisol");
    for (const auto& a : argv_like) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help() << "\n";
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(opt, out);
    if (show->parsed()) return cmd_show(opt, out);
    if (verify->parsed()) {
      absorb_extras(verify->remaining(), opt.raw_params);
      return cmd_verify(opt, out);
    }
    if (run->parsed()) {
      absorb_extras(run->remaining(), opt.raw_params);
      return cmd_run(opt, out);
    }
    if (sweep->parsed()) {
      absorb_extras(sweep->remaining(), opt.raw_params);
      return cmd_sweep(opt, out);
    }
  } catch (const unknown_id_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownId;
  } catch (const specfile_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const param_domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParam;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParam;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

} // namespace riccisol
