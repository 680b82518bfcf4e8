#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "confalg/commands.hpp"

namespace {

using confalg::cli::ConfigError;
using confalg::cli::RunConfig;

// Collects command-line options that override the config file only when
// they were actually given.
class Overrides {
 public:
  explicit Overrides(CLI::App* app) : app_(app) {}

  template <class T>
  void option(const std::string& flags, const std::string& help, std::function<void(RunConfig&, const T&)> set) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app_->add_option(flags, *value, help);
    appliers_.push_back([opt, value, set](RunConfig& c) {
      if (opt->count() > 0) set(c, *value);
    });
  }

  void flag(const std::string& flags, const std::string& help, std::function<void(RunConfig&)> set) {
    CLI::Option* opt = app_->add_flag(flags, help);
    appliers_.push_back([opt, set](RunConfig& c) {
      if (opt->count() > 0) set(c);
    });
  }

  void text(const std::string& flags, const std::string& help, std::string RunConfig::*field) {
    option<std::string>(flags, help, [field](RunConfig& c, const std::string& v) { c.*field = v; });
  }

  void apply(RunConfig& c) const {
    for (const auto& f : appliers_) f(c);
  }

 private:
  CLI::App* app_;
  std::vector<std::function<void(RunConfig&)>> appliers_;
};

struct Subcommand {
  CLI::App* app = nullptr;
  std::unique_ptr<Overrides> overrides;
  std::string config_path;
};

void add_common(Subcommand& s) {
  Overrides& o = *s.overrides;
  s.app->add_option("--config", s.config_path, "JSON config file");
  o.text("--algebra", "algebra id: csv, chv, cw, sv, hv, cvir, mfam, tsv", &RunConfig::algebra);
  o.text("--a", "parameter a: a Gaussian rational or sym", &RunConfig::a);
  o.text("--b", "parameter b: a Gaussian rational or sym", &RunConfig::b);
  o.option<int>("--window", "basis window N", [](RunConfig& c, const int& v) { c.window = v; });
  o.option<int>("--gen-bound", "generator window K", [](RunConfig& c, const int& v) { c.gen_bound = v; });
  o.option<unsigned>("--degree", "degree bound D", [](RunConfig& c, const unsigned& v) { c.degree = v; });
  o.option<std::uint64_t>("--seed", "random seed", [](RunConfig& c, const std::uint64_t& v) { c.seed = v; });
  o.text("--report", "write the JSON report to this file", &RunConfig::report);
  o.option<std::string>("--format", "stdout format: text or json",
                        [](RunConfig& c, const std::string& v) { c.format = v; });
}

void add_module_options(Overrides& o) {
  o.text("--kind", "module kind: rank1, Vab or VAb", &RunConfig::kind);
  o.text("--alpha", "alpha: a Gaussian rational or sym", &RunConfig::alpha);
  o.text("--beta", "beta: a Gaussian rational or sym", &RunConfig::beta);
  o.text("--bits", "0/1 string for the sequence A", &RunConfig::bits);
  o.option<int>("--bits-lo", "index of the first bit", [](RunConfig& c, const int& v) { c.bits_lo = v; });
}

void finish(const confalg::cli::Report& report, const RunConfig& cfg) {
  if (!cfg.report.empty()) {
    std::ofstream out(cfg.report);
    if (!out) throw ConfigError("cannot write report to '" + cfg.report + "'");
    out << confalg::cli::to_json(report).dump(2) << '\n';
  }
  if (cfg.format == "json") {
    std::cout << confalg::cli::to_json(report).dump(2) << '\n';
  } else {
    std::cout << confalg::cli::to_text(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for graded Lie conformal algebras, their modules and derivations"};
  app.require_subcommand(1);

  std::map<std::string, Subcommand> subs;
  auto make = [&](const std::string& name, const std::string& help) -> Overrides& {
    Subcommand& s = subs[name];
    s.app = app.add_subcommand(name, help);
    s.overrides = std::make_unique<Overrides>(s.app);
    add_common(s);
    return *s.overrides;
  };

  {
    Overrides& o = make("verify-axioms", "check skew-symmetry and the Jacobi identity");
    o.flag("--exhaustive", "run Jacobi on every ordered family triple", [](RunConfig& c) { c.exhaustive = true; });
    o.text("--a-prime", "parameter a' of mfam", &RunConfig::a_prime);
    o.text("--b-prime", "parameter b' of mfam", &RunConfig::b_prime);
  }
  {
    Overrides& o = make("solve-construction", "solve for a' and b' making M(a, a', b, b') closed");
    o.option<std::vector<std::string>>("--only", "use only these residual monomials",
                                       [](RunConfig& c, const std::vector<std::string>& v) { c.only = v; });
  }
  {
    Overrides& o = make("check-module", "check the module axiom for a module");
    add_module_options(o);
    o.text("--c", "c: a Gaussian rational or sym", &RunConfig::c);
    o.text("--d", "extension scalar", &RunConfig::dext);
    o.text("--module-file", "module text file", &RunConfig::module_file);
    o.flag("--witness", "search for a reducibility witness", [](RunConfig& c) { c.witness = true; });
    o.option<unsigned>("--witness-degree", "maximum witness degree",
                       [](RunConfig& c, const unsigned& v) { c.witness_degree = v; });
  }
  {
    Overrides& o = make("classify", "classify module extensions over csv or chv");
    add_module_options(o);
    o.option<std::string>("--grid", "parameter points, e.g. 0,0;1,0",
                          [](RunConfig& c, const std::string& v) { c.grid = confalg::cli::parse_grid(v); });
    o.option<unsigned>("--samples", "base modules per grid point",
                       [](RunConfig& c, const unsigned& v) { c.samples = v; });
  }
  {
    Overrides& o = make("derivations", "solve, check or decompose derivations");
    o.text("--mode", "solve, check or decompose", &RunConfig::mode);
    o.option<std::vector<int>>("--degrees", "derivation degrees c",
                               [](RunConfig& c, const std::vector<int>& v) { c.degrees = v; });
    o.text("--dvec", "sequence for d_vec, e.g. 0:1,2:-1/2", &RunConfig::dvec);
    o.text("--derivation-file", "derivation text file", &RunConfig::derivation_file);
  }
  {
    Overrides& o = make("suite", "run the acceptance criteria");
    o.option<std::vector<int>>("--criteria", "criterion ids to run",
                               [](RunConfig& c, const std::vector<int>& v) { c.criteria = v; });
    o.flag("--no-enforce-budget", "do not fail criteria that exceed their time budget",
           [](RunConfig& c) { c.enforce_budget = false; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& name : confalg::cli::command_names()) {
      const Subcommand& s = subs.at(name);
      if (!s.app->parsed()) continue;
      RunConfig cfg = s.config_path.empty() ? RunConfig{} : confalg::cli::load_config_file(s.config_path);
      s.overrides->apply(cfg);
      if (cfg.format != "text" && cfg.format != "json") {
        throw ConfigError("field 'format': expected text or json, got '" + cfg.format + "'");
      }
      const confalg::cli::Report report = confalg::cli::run_command(name, cfg);
      finish(report, cfg);
      return report.ok() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "confalg: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "confalg: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
