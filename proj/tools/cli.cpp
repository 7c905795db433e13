#include "cli.hpp"

#include "siggb/bench.hpp"
#include "siggb/errors.hpp"
#include "siggb/oracle.hpp"
#include "siggb/problem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace siggb::cli {

std::string stats_json(const RunStats& s) {
  nlohmann::ordered_json j;
  j["pairs_generated"] = s.pairs_generated;
  j["rejected_nonregular"] = s.rejected_nonregular;
  j["rejected_criterion"] = s.rejected_criterion;
  j["reduced"] = s.reduced;
  j["zero_reductions"] = s.zero_reductions;
  j["basis_nonzero"] = s.basis_nonzero;
  j["reduced_gb_size"] = s.reduced_gb_size;
  j["elapsed_ms"] = s.elapsed_ms;
  return j.dump();
}

namespace {

struct Options {
  std::string criterion = "ratio";
  std::string strategy = "sig";
  std::string modorder = "schreyer";
  bool no_koszul = false;
  bool signature_only = false;
  bool check_admissible = true;
  bool oracle = false;
  bool verify_vectors = false;
  bool no_timing = false;
  std::uint64_t cap = 1'000'000;
  std::string stats_json_path;
};

void add_engine_options(CLI::App& cmd, Options& o) {
  std::vector<std::string> criteria{"f5", "ratio", "gvw", "none"};
  if (unsound_order_available())
    criteria.emplace_back("earlier-unsound");
  cmd.add_option("--criterion", o.criterion, "Rewriting criterion")
      ->check(CLI::IsMember(criteria))
      ->capture_default_str();
  cmd.add_option("--strategy", o.strategy, "Pair selection strategy")
      ->check(CLI::IsMember({"sig", "deg", "fifo"}))
      ->capture_default_str();
  cmd.add_option("--modorder", o.modorder, "Module order on signatures")
      ->check(CLI::IsMember({"pot", "schreyer"}))
      ->capture_default_str();
  cmd.add_flag("--no-koszul", o.no_koszul, "Skip Koszul and principal syzygies");
  cmd.add_flag("--signature-only", o.signature_only, "Track signatures without module vectors");
  cmd.add_flag("--check-admissible,!--no-check-admissible", o.check_admissible,
               "Assert each new element is below its parent (default on)");
  cmd.add_flag("--oracle", o.oracle, "Compare the result with Buchberger's algorithm");
  cmd.add_flag("--verify-vectors", o.verify_vectors,
               "Recheck u . f and the signature of every inserted element");
  cmd.add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0 for reproducible output");
  cmd.add_option("--cap", o.cap, "Maximum number of selected critical pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--stats-json", o.stats_json_path, "Write the stats record to this file");
}

EngineConfig make_config(const Options& o) {
  static const std::map<std::string, CriterionMode> criteria{
      {"f5", CriterionMode::F5},
      {"ratio", CriterionMode::Ratio},
      {"gvw", CriterionMode::Gvw},
      {"none", CriterionMode::None},
      {"earlier-unsound", CriterionMode::EarlierUnsound}};
  static const std::map<std::string, Strategy> strategies{{"sig", Strategy::MinimalSignature},
                                                          {"deg", Strategy::MinimalDegree},
                                                          {"fifo", Strategy::Fifo}};
  EngineConfig cfg = EngineConfig::for_criterion(criteria.at(o.criterion));
  cfg.strategy = strategies.at(o.strategy);
  cfg.module_order = o.modorder == "pot" ? ModuleOrderKind::Pot : ModuleOrderKind::Schreyer;
  cfg.koszul = !o.no_koszul;
  cfg.full_vector = !o.signature_only;
  cfg.check_admissible = o.check_admissible;
  cfg.verify_vectors = o.verify_vectors && cfg.full_vector;
  cfg.iteration_cap = o.cap;
  return cfg;
}

// Runs one system and reports it; returns the exit code.
int solve(const Ring& ring, const std::vector<Polynomial>& polys, const Options& o,
          std::ostream& out, std::ostream& err) {
  const EngineConfig cfg = make_config(o);
  RunResult r = gbgc(ring, polys, cfg);
  if (o.no_timing)
    r.stats.elapsed_ms = 0;

  out << "config: " << cfg.label() << '\n';
  out << "basis (" << r.groebner_basis.size() << "):\n";
  for (const Polynomial& g : r.groebner_basis)
    out << "  " << ring.render(g) << '\n';
  const std::string record = stats_json(r.stats);
  out << "stats: " << record << '\n';

  if (!o.stats_json_path.empty()) {
    std::ofstream file(o.stats_json_path);
    if (!file) {
      err << "error: cannot write " << o.stats_json_path << '\n';
      return kUsage;
    }
    file << record << '\n';
  }

  int code = kOk;
  if (cfg.check_admissible && cfg.order) {
    out << "admissibility: " << r.admissibility_checks << " checks, " << r.violations.size()
        << " violations\n";
    if (!r.violations.empty())
      code = kVerificationFailed;
  }
  if (cfg.verify_vectors) {
    out << "vectors: " << r.audit.checked << " checked, " << r.audit.failures << " failures\n";
    if (r.audit.failures != 0)
      code = kVerificationFailed;
  }
  if (o.oracle) {
    const bool match = r.groebner_basis == reduce_gb(ring, buchberger(ring, polys));
    out << "oracle: " << (match ? "match" : "MISMATCH") << '\n';
    if (!match)
      code = kVerificationFailed;
  }
  return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature-based Groebner basis engine", "siggb"};
  app.require_subcommand(1);

  Options o;
  std::string file;
  CLI::App* run_cmd = app.add_subcommand("run", "Compute a Groebner basis of an ideal file");
  run_cmd->add_option("file", file, "Problem description")->required();
  add_engine_options(*run_cmd, o);

  std::string family;
  std::size_t index = 0;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark system");
  bench_cmd->add_option("family", family, "katsura or cyclic")
      ->required()
      ->check(CLI::IsMember({"katsura", "cyclic"}));
  bench_cmd->add_option("n", index, "Family index")->required();
  add_engine_options(*bench_cmd, o);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*run_cmd) {
      std::ifstream in(file);
      if (!in) {
        err << "error: cannot read " << file << '\n';
        return kUsage;
      }
      std::ostringstream text;
      text << in.rdbuf();
      const ProblemFile problem = parse_problem(text.str());
      return solve(problem.ring(), problem.polys, o, out, err);
    }
    const BenchmarkSystem sys = family == "katsura" ? katsura(index) : cyclic(index);
    out << "system: " << sys.name << '\n';
    return solve(sys.ring, sys.polys, o, out, err);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace siggb::cli
