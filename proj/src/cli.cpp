#include "nsg/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsg/analysis.hpp"
#include "nsg/catalog.hpp"
#include "nsg/errors.hpp"
#include "nsg/verifier.hpp"
#include "nsg/version.hpp"

namespace nsg::cli {

namespace {

/// Failure to write a result; kept apart from input IoErrors.
struct OutputError : Error {
  using Error::Error;
};

struct RunConfig {
  std::optional<std::size_t> guard;
  VerifyConfig verify;
  std::string format;
  std::string out_path;
  std::string cache_dir;
  bool cache_check = false;
  std::string mode = "induced";
  std::vector<std::string> checks;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw OutputError("cannot write '" + cfg.out_path + "'");
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

/// Cache key: group generators, engine version and every result-affecting limit.
std::string cache_key(const std::string& command, const LoadedGroup& lg, const RunConfig& cfg) {
  std::ostringstream os;
  os << command << '\n' << kEngineVersion << '\n' << lg.spec.name << '\n' << lg.generators.degree << '\n';
  for (const auto& p : lg.generators.generators) os << p.to_cycle_string() << '\n';
  nlohmann::json params = to_json(cfg.verify.analysis);
  params["conjugator_samples"] = cfg.verify.conjugator_samples;
  params["max_overgroups"] = cfg.verify.max_overgroups;
  params["max_normal_subgroups"] = cfg.verify.max_normal_subgroups;
  params["checks"] = cfg.checks;
  os << params.dump();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
  return command + "-" + buf;
}

nlohmann::json verify_doc(Analysis& a, const std::string& name, const RunConfig& cfg) {
  if (cfg.checks.empty()) return to_json(verify_all(a, name, cfg.verify), cfg.verify.timings);
  VerificationReport report;
  report.group = group_descriptor(a.group(), name);
  report.params = to_json(cfg.verify.analysis);
  for (const auto& id : cfg.checks) {
    CheckResult r = verify_check(a, id, cfg.verify);
    switch (r.status) {
      case CheckStatus::pass: ++report.passed; break;
      case CheckStatus::fail: ++report.failed; break;
      case CheckStatus::skipped: ++report.skipped; break;
      case CheckStatus::not_applicable: ++report.not_applicable; break;
    }
    report.checks.push_back(std::move(r));
  }
  return to_json(report, cfg.verify.timings);
}

nlohmann::json ordsol_doc(Analysis& a, const std::string& name) {
  return {{"schema_version", kSchemaVersion},
          {"group", group_descriptor(a.group(), name)},
          {"profile", to_json(ord_sol(a.table()))}};
}

nlohmann::json compute(const std::string& command, const LoadedGroup& lg, const RunConfig& cfg) {
  Analysis a(lg.group, cfg.verify.analysis);
  if (command == "analyze") return analysis_report(a, lg.spec.name);
  if (command == "verify") return verify_doc(a, lg.spec.name, cfg);
  return ordsol_doc(a, lg.spec.name);
}

/// Computes a document, going through the disk cache when one is configured.
/// Timed reports are never cached since they differ run to run.
nlohmann::json cached(const std::string& command, const LoadedGroup& lg, const RunConfig& cfg, std::ostream& err) {
  if (cfg.cache_dir.empty() || cfg.verify.timings) return compute(command, lg, cfg);
  const auto path = std::filesystem::path(cfg.cache_dir) / (cache_key(command, lg, cfg) + ".json");
  if (std::filesystem::exists(path)) {
    std::ifstream f(path);
    nlohmann::json doc = nlohmann::json::parse(f, nullptr, false);
    if (!doc.is_discarded()) {
      if (cfg.cache_check && compute(command, lg, cfg) != doc) {
        throw InvariantViolation("cached result " + path.string() + " differs from a fresh computation");
      }
      return doc;
    }
    err << "warning: ignoring unreadable cache entry " << path.string() << "\n";
  }
  nlohmann::json doc = compute(command, lg, cfg);
  std::error_code ec;
  std::filesystem::create_directories(cfg.cache_dir, ec);
  std::ofstream f(path);
  if (!(f << doc.dump())) err << "warning: cannot write cache entry " << path.string() << "\n";
  return doc;
}

LoadedGroup load(const std::string& text, const RunConfig& cfg) { return load_group(resolve_group_spec(text, cfg.guard)); }

// ---- text renderings -------------------------------------------------------

std::string catalog_text() {
  std::ostringstream os;
  os << std::left << std::setw(8) << "name" << std::setw(8) << "order" << std::setw(8) << "degree"
     << std::setw(10) << "solvable" << "description\n";
  for (const auto& e : catalog()) {
    os << std::setw(8) << e.name << std::setw(8) << e.expected_order << std::setw(8) << e.degree << std::setw(10)
       << (e.solvable ? "yes" : "no") << e.description << "\n";
  }
  return os.str();
}

nlohmann::json catalog_json() {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& e : catalog()) {
    groups.push_back({{"name", e.name}, {"description", e.description}, {"degree", e.degree},
                      {"order", e.expected_order}, {"solvable", e.solvable}, {"generators", e.generators}});
  }
  return {{"schema_version", kSchemaVersion}, {"groups", std::move(groups)}};
}

std::string profile_text(const nlohmann::json& profile) {
  std::ostringstream os;
  for (const auto& p : profile) os << "  |Sol| = " << p["size"] << " : " << p["count"] << " elements\n";
  return os.str();
}

std::string analysis_text(const nlohmann::json& doc) {
  std::ostringstream os;
  const auto& g = doc["group"];
  os << "group " << g["name"].get<std::string>() << ": order " << g["order"] << ", degree " << g["degree"] << "\n";
  os << "radical order " << doc["radical"]["order"] << (doc["solvable"].get<bool>() ? " (solvable)" : "") << "\n";
  os << "classes (representative, size, order, |Sol|, degree):\n";
  for (const auto& c : doc["classes"]) {
    os << "  " << std::left << std::setw(28) << c["cycles"].get<std::string>() << std::setw(6) << c["class_size"].dump()
       << std::setw(6) << c["order"].dump() << std::setw(7) << c["members-count"].dump() << c["degree"] << "\n";
  }
  os << "profile:\n" << profile_text(doc["profile"]);
  const auto& ind = doc["invariants"]["induced"];
  os << "induced graph: " << ind["vertices"] << " vertices, " << ind["edges"] << " edges\n";
  for (const char* key : {"diameter", "regular", "tree", "bipartite", "planar"}) {
    if (ind.contains(key)) os << "  " << key << ": " << ind[key].dump() << "\n";
  }
  if (ind.contains("independence")) {
    os << "  alpha: " << ind["independence"]["value"] << " (" << ind["independence"]["kind"].get<std::string>() << ")\n";
  }
  const auto& full = doc["invariants"]["full"]["independence"];
  os << "full graph alpha: " << full["value"] << " (" << full["kind"].get<std::string>() << ")\n";
  return os.str();
}

std::string verify_text(const nlohmann::json& doc) {
  std::ostringstream os;
  for (const auto& c : doc["checks"]) {
    os << c["id"].get<std::string>() << "  " << std::left << std::setw(15) << c["status"].get<std::string>()
       << c["name"].get<std::string>();
    if (c.contains("reason")) os << "  (" << c["reason"].get<std::string>() << ")";
    os << "\n";
  }
  const auto& s = doc["summary"];
  os << s["pass"] << " pass, " << s["fail"] << " fail, " << s["skipped"] << " skipped, " << s["not_applicable"]
     << " not applicable\n";
  return os.str();
}

std::string graph_text(const NsGraph& g) {
  std::ostringstream os;
  os << to_string(g.mode()) << " graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << g.id(v) << " " << g.label(v) << " deg " << g.degree(v) << ":";
    for (std::size_t u = g.row(v).next(); u < g.vertex_count(); u = g.row(v).next(u + 1)) os << " " << g.id(u);
    os << "\n";
  }
  return os.str();
}

bool text_format(const RunConfig& cfg) { return cfg.format == "text"; }

// ---- commands --------------------------------------------------------------

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, out, text_format(cfg) || cfg.format.empty() ? catalog_text() : dump(catalog_json()));
  return kOk;
}

int cmd_document(const std::string& command, const std::string& spec, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  const LoadedGroup lg = load(spec, cfg);
  const nlohmann::json doc = cached(command, lg, cfg, err);
  if (text_format(cfg)) {
    if (command == "analyze") emit(cfg, out, analysis_text(doc));
    else if (command == "verify") emit(cfg, out, verify_text(doc));
    else emit(cfg, out, profile_text(doc["profile"]));
  } else {
    emit(cfg, out, dump(doc));
  }
  if (command == "verify") return doc["summary"]["fail"].get<std::size_t>() == 0 ? kOk : kVerifyFailed;
  return kOk;
}

int cmd_graph(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
  const LoadedGroup lg = load(spec, cfg);
  Analysis a(lg.group, cfg.verify.analysis);
  NsGraph& g = cfg.mode == "full" ? a.full_graph() : a.induced_graph();
  const std::string fmt = cfg.format.empty() ? "dot" : cfg.format;
  if (fmt == "text") {
    emit(cfg, out, graph_text(g));
    return kOk;
  }
  const ExportFormat ef = parse_export_format(fmt);
  if (ef == ExportFormat::json) compute_invariants(a);
  emit(cfg, out, export_graph(g, ef));
  return kOk;
}

int cmd_compare(const std::string& left, const std::string& right, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const LoadedGroup a = load(left, cfg);
  const LoadedGroup b = load(right, cfg);
  const nlohmann::json pa = cached("ordsol", a, cfg, err);
  const nlohmann::json pb = cached("ordsol", b, cfg, err);
  const bool equal = pa["profile"] == pb["profile"];
  if (text_format(cfg)) {
    std::ostringstream os;
    os << a.spec.name << " (order " << a.group.order() << ")\n" << profile_text(pa["profile"]);
    os << b.spec.name << " (order " << b.group.order() << ")\n" << profile_text(pb["profile"]);
    os << (equal ? "profiles equal" : "profiles differ") << "\n";
    if (equal && a.group.order() == b.group.order()) os << "(equal profiles say nothing about isomorphism)\n";
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out,
         dump({{"schema_version", kSchemaVersion},
               {"left", pa},
               {"right", pb},
               {"equal", equal},
               {"isomorphism", "not decided"}}));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-solvable graphs of finite permutation groups", "nsgraph"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", std::string(kEngineVersion));

  RunConfig cfg;
  auto& ac = cfg.verify.analysis;
  std::size_t guard = kDefaultOrderGuard;
  auto* guard_opt = app.add_option("--guard", guard, "Refuse groups larger than this")->check(CLI::PositiveNumber);
  app.add_option("--exact-independence", ac.exact_independence_limit,
                 "Exact independence number up to this many vertices")->check(CLI::NonNegativeNumber);
  app.add_option("--k44-budget", ac.k44_budget, "Adjacency probes allowed in the K44 search")->check(CLI::PositiveNumber);
  app.add_option("--audit", ac.audit_fraction, "Share of transported solvabilizers re-scanned")->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", ac.seed, "Seed for audit and sampling");
  app.add_option("--jobs", ac.jobs, "Worker threads for the solvabilizer sweep")->check(CLI::Range(1u, 256u));
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"dot", "graphml", "json", "text"}));
  app.add_option("--out", cfg.out_path, "Write the result here instead of stdout");
  app.add_option("--cache", cfg.cache_dir, "Directory for cached results");
  app.add_flag("--cache-check", cfg.cache_check, "Recompute cache hits and fail on any difference");
  app.add_flag("--timings", cfg.verify.timings, "Record per-check wall time (reports stop being reproducible)");

  std::string spec, spec2;
  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in groups");
  app.add_subcommand("list", "Alias of catalog")->alias("ls");
  auto* analyze = app.add_subcommand("analyze", "Full JSON analysis of a group");
  analyze->add_option("group", spec, "Catalog name or generator file")->required();
  auto* verify = app.add_subcommand("verify", "Run the registered checks");
  verify->add_option("group", spec, "Catalog name or generator file")->required();
  verify->add_option("--check", cfg.checks, "Run only these checks (id or name)");
  auto* graph = app.add_subcommand("graph", "Export the non-solvable graph");
  graph->add_option("group", spec, "Catalog name or generator file")->required();
  graph->add_option("--mode", cfg.mode, "induced (default) or full")->check(CLI::IsMember({"induced", "full"}));
  auto* ordsol = app.add_subcommand("ordsol", "Solvabilizer size profile");
  ordsol->add_option("group", spec, "Catalog name or generator file")->required();
  auto* compare = app.add_subcommand("compare", "Compare the solvabilizer profiles of two groups");
  compare->add_option("left", spec, "First group")->required();
  compare->add_option("right", spec2, "Second group")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kEngineVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (guard_opt->count()) cfg.guard = guard;

  try {
    auto* sub = app.get_subcommands().front();
    if (sub == catalog_cmd || sub->get_name() == "list") return cmd_catalog(cfg, out);
    if (sub == analyze) return cmd_document("analyze", spec, cfg, out, err);
    if (sub == verify) return cmd_document("verify", spec, cfg, out, err);
    if (sub == ordsol) return cmd_document("ordsol", spec, cfg, out, err);
    if (sub == graph) return cmd_graph(spec, cfg, out);
    if (sub == compare) return cmd_compare(spec, spec2, cfg, out, err);
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kOutputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceLimitError& e) {
    err << "limit exceeded (" << e.guard() << " = " << e.limit() << "): " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "engine error: " << e.what() << "\n";
    return kEngineError;
  }
  return kEngineError;
}

}  // namespace nsg::cli
