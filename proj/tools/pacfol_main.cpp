#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pacfol/config.hpp"
#include "pacfol/harness.hpp"
#include "pacfol/implicit.hpp"
#include "pacfol/limited.hpp"
#include "pacfol/parse.hpp"
#include "pacfol/print.hpp"
#include "pacfol/sat.hpp"

namespace {

// exit codes: 0 ok, 1 not-entailed / below-threshold, 2 usage, 3 resource
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pacfol::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<pacfol::Name> parse_name_list(const std::string& csv) {
  std::set<pacfol::Name> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(pacfol::Name{item});
  return out;
}

int cmd_ground(const std::string& kb_path, const std::string& names_csv,
               int extra, const std::string& query_path) {
  using namespace pacfol;
  ProperPlusKB kb = parse_kb(read_file(kb_path));
  std::set<Name> c;
  if (!names_csv.empty()) c = parse_name_list(names_csv);
  if (!query_path.empty()) {
    GroundFormula q = parse_query(read_file(query_path));
    check_arities(kb, q);
    auto qn = names_of(q);
    c.insert(qn.begin(), qn.end());
  }
  if (extra > 0) {
    std::set<Name> avoid = names_of(kb);
    avoid.insert(c.begin(), c.end());
    for (const Name& n : fresh_names(avoid, size_t(extra))) c.insert(n);
  }
  auto clauses = gnd_with_names(kb, c);
  std::vector<std::string> lines;
  lines.reserve(clauses.size());
  for (const auto& cl : clauses) lines.push_back(print(cl));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << l << "\n";
  return 0;
}

int cmd_entail(const std::string& kb_path, const std::string& query_path,
               int extra_names, bool witness) {
  using namespace pacfol;
  ProperPlusKB kb = parse_kb(read_file(kb_path));
  GroundFormula q = parse_query(read_file(query_path));
  check_arities(kb, q);
  size_t extra = extra_names >= 0 ? size_t(extra_names) : kb.rank();
  if (extra < kb.rank()) {
    std::cerr << "error: --extra-names below the KB rank (" << kb.rank()
              << ") would make the grounding trick unsound\n";
    return kExitUsage;
  }
  GroundTask task = gnd_minus(kb, q, extra);
  SatResult r = satisfiable({task.kb_clauses, task.negated_query});
  if (r.status == SatStatus::Unsat) {
    std::cout << "ENTAILED\n";
    return 0;
  }
  std::cout << "NOT ENTAILED\n";
  if (witness && r.model) std::cout << to_json(*r.model) << "\n";
  return kExitNo;
}

int cmd_entail_limited(const std::string& kb_path,
                       const std::string& query_path, int z_max,
                       int extra_names) {
  using namespace pacfol;
  ProperPlusKB kb = parse_kb(read_file(kb_path));
  GroundFormula q = parse_query(read_file(query_path));
  check_arities(kb, q);
  size_t extra = extra_names >= 0 ? size_t(extra_names) : kb.rank();
  GroundTask task = gnd_minus(kb, q, extra);
  ClauseStore store = ClauseStore::of(task.kb_clauses);
  for (int z = 0; z <= z_max; ++z) {
    if (entails_z_formula(store, q, z)) {
      std::cout << "ENTAILED at z=" << z << "\n";
      return 0;
    }
  }
  std::cout << "UNKNOWN at z=" << z_max << "\n";
  return kExitNo;
}

int cmd_learn(const std::string& kb_path, const std::string& query_path,
              const std::string& examples_path, pacfol::LearnConfig cfg,
              bool trace, const std::string& threshold) {
  using namespace pacfol;
  ProperPlusKB kb = parse_kb(read_file(kb_path));
  GroundFormula q = parse_query(read_file(query_path));
  check_arities(kb, q);
  auto examples = load_examples(examples_path);
  Estimate est = learn_estimate(examples, kb, q, cfg);

  nlohmann::json j;
  j["v"] = est.v;
  j["m"] = est.m;
  j["p_hat"] = {{"num", est.v}, {"den", est.m}};
  j["p_hat_decimal"] = est.p_hat_double();
  j["k"] = cfg.k;
  if (cfg.z)
    j["z"] = *cfg.z;
  else
    j["z"] = nullptr;
  j["tuple_cap"] = cfg.tuple_cap;
  if (cfg.tuple_cap)
    j["note"] =
        "tuple_cap may lower p_hat: the soundness bound is unaffected, the "
        "completeness bound may weaken";
  j["pad_fresh"] = cfg.pad_fresh;
  if (trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : est.per_example) {
      nlohmann::json e;
      e["incremented"] = t.incremented;
      e["resource_error"] = t.resource_error;
      nlohmann::json tuple = nlohmann::json::array();
      for (const auto& n : t.witness_tuple) tuple.push_back(n.id);
      e["witness_tuple"] = tuple;
      arr.push_back(std::move(e));
    }
    j["per_example"] = std::move(arr);
  }
  std::cerr << "p_hat = " << est.v << "/" << est.m << " = "
            << est.p_hat_double() << "\n";
  std::cout << j.dump(2) << "\n";

  if (!threshold.empty() && !decide(est, Rational::parse(threshold)))
    return kExitNo;
  return 0;
}

int cmd_simulate(const std::string& config_path, uint64_t seed) {
  using namespace pacfol;
  SimulationConfig cfg = load_simulation_config(config_path);
  CalibrationReport rep =
      run_calibration(cfg.world, cfg.mask, cfg.kb, cfg.query, cfg.learn,
                      cfg.gamma, cfg.delta, cfg.trials, seed);
  std::cerr << rep.summary() << "\n";
  std::cout << rep.to_json() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reasoning about proper+ first-order knowledge bases under "
               "PAC semantics"};
  app.require_subcommand(1);

  std::string kb_path, query_path, names_csv, examples_path, config_path;
  std::string threshold;
  int extra = 0, extra_names = -1, z_max = 0;
  bool witness = false, trace = false, no_pad = false;
  uint64_t seed = 0;
  pacfol::LearnConfig learn_cfg;
  int learn_z = -1;

  auto* ground = app.add_subcommand("ground", "print a finite grounding");
  ground->add_option("--kb", kb_path, "KB file")->required();
  auto* names_opt = ground->add_option("--names", names_csv,
                                       "comma-separated extra names");
  ground->add_option("--extra", extra, "number of fresh names")
      ->excludes(names_opt);
  ground->add_option("--query", query_path, "query file (its names join in)");

  auto* entail = app.add_subcommand("entail", "classical entailment");
  entail->add_option("--kb", kb_path, "KB file")->required();
  entail->add_option("--query", query_path, "query file")->required();
  entail->add_option("--extra-names", extra_names,
                     "fresh names for grounding (default: KB rank)");
  entail->add_flag("--witness", witness, "print a countermodel when not "
                   "entailed");

  auto* lim = app.add_subcommand("entail-limited", "level-z limited "
                                 "entailment");
  lim->add_option("--kb", kb_path, "KB file")->required();
  lim->add_option("--query", query_path, "query file")->required();
  lim->add_option("-z", z_max, "maximum split level")->required();
  lim->add_option("--extra-names", extra_names,
                  "fresh names for grounding (default: KB rank)");

  auto* learn = app.add_subcommand("learn", "estimate validity from partial "
                                   "examples");
  learn->add_option("--kb", kb_path, "KB file")->required();
  learn->add_option("--query", query_path, "query file")->required();
  learn->add_option("--examples", examples_path, "examples file (one JSON "
                    "object per line)")->required();
  learn->add_option("-k", learn_cfg.k, "tuple width")->required();
  learn->add_option("-z", learn_z, "limited-reasoning level (default: full "
                    "SAT check)");
  learn->add_option("--tuple-cap", learn_cfg.tuple_cap,
                    "max tuples per example (0 = exhaustive)");
  learn->add_flag("--no-pad", no_pad, "do not pad short examples with fresh "
                  "names");
  learn->add_flag("--trace", trace, "include per-example traces in the "
                  "report");
  learn->add_option("--threshold", threshold,
                    "exit 1 when p_hat falls below this decimal");

  auto* ss = app.add_subcommand("samplesize", "Hoeffding sample bound");
  double gamma = 0, delta = 0;
  ss->add_option("--gamma", gamma, "accuracy")->required();
  ss->add_option("--delta", delta, "confidence")->required();

  auto* sim = app.add_subcommand("simulate", "run a calibration experiment");
  sim->add_option("--config", config_path, "TOML or JSON config")->required();
  sim->add_option("--seed", seed, "master RNG seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ground->parsed())
      return cmd_ground(kb_path, names_csv, extra, query_path);
    if (entail->parsed())
      return cmd_entail(kb_path, query_path, extra_names, witness);
    if (lim->parsed())
      return cmd_entail_limited(kb_path, query_path, z_max, extra_names);
    if (learn->parsed()) {
      if (learn_z >= 0) learn_cfg.z = learn_z;
      learn_cfg.pad_fresh = !no_pad;
      return cmd_learn(kb_path, query_path, examples_path, learn_cfg, trace,
                       threshold);
    }
    if (ss->parsed()) {
      std::cout << pacfol::sample_size(gamma, delta) << "\n";
      return 0;
    }
    if (sim->parsed()) return cmd_simulate(config_path, seed);
  } catch (const pacfol::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const pacfol::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
