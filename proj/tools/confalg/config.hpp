#ifndef CONFALG_TOOLS_CONFIG_HPP
#define CONFALG_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "confalg/mpoly.hpp"

namespace confalg::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a subcommand reads.  Parameters stay as text ("sym" or a
/// Gaussian rational literal) until a command interprets them.
struct RunConfig {
  std::string algebra = "csv";
  std::string a = "sym";
  std::string b = "sym";
  std::string a_prime = "sym";
  std::string b_prime = "sym";
  std::optional<int> window;
  std::optional<int> gen_bound;
  std::optional<unsigned> degree;
  unsigned witness_degree = 3;
  std::uint64_t seed = 20240611;
  std::string report;
  std::string format = "text";

  bool exhaustive = false;
  std::vector<std::string> only;

  std::string kind = "rank1";
  std::string alpha = "sym";
  std::string beta = "sym";
  std::string c = "sym";
  std::string dext = "0";
  std::string bits;
  std::optional<int> bits_lo;
  std::string module_file;
  bool witness = false;

  std::vector<std::pair<std::string, std::string>> grid;
  unsigned samples = 1;

  std::string mode = "solve";
  std::vector<int> degrees{-1, 0, 1};
  std::string dvec;
  std::string derivation_file;

  std::vector<int> criteria;
  bool enforce_budget = true;
};

/// Reads a JSON object whose keys are RunConfig field names; unknown keys,
/// type mismatches and syntax errors raise ConfigError naming the line or
/// field.
RunConfig load_config(const std::string& text, const std::string& origin = "config");
RunConfig load_config_file(const std::string& path);

nlohmann::ordered_json to_json(const RunConfig& c);

/// "sym" -> the variable; otherwise a Gaussian rational literal.
MPoly parameter(const std::string& field, const std::string& text, const Var& symbol);
/// A Gaussian rational literal; "sym" is rejected.
Scalar numeric(const std::string& field, const std::string& text);

/// "0,0;1,0;2,5"
std::vector<std::pair<std::string, std::string>> parse_grid(const std::string& text);

}  // namespace confalg::cli

#endif  // CONFALG_TOOLS_CONFIG_HPP
