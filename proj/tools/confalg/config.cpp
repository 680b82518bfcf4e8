#include "confalg/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace confalg::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& origin, const std::string& field, const std::string& what) {
  throw ConfigError(origin + ": field '" + field + "': " + what);
}

std::string as_text(const std::string& origin, const std::string& field, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) field_error(origin, field, "floating-point values are not exact; write \"p/q\" instead");
  field_error(origin, field, "expected a string or an integer");
}

long long as_integer(const std::string& origin, const std::string& field, const json& v) {
  if (!v.is_number_integer()) field_error(origin, field, "expected an integer");
  return v.get<long long>();
}

unsigned as_unsigned(const std::string& origin, const std::string& field, const json& v) {
  const long long x = as_integer(origin, field, v);
  if (x < 0) field_error(origin, field, "expected a non-negative integer");
  return static_cast<unsigned>(x);
}

bool as_bool(const std::string& origin, const std::string& field, const json& v) {
  if (!v.is_boolean()) field_error(origin, field, "expected true or false");
  return v.get<bool>();
}

std::vector<int> as_int_list(const std::string& origin, const std::string& field, const json& v) {
  if (!v.is_array()) field_error(origin, field, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(static_cast<int>(as_integer(origin, field, x)));
  return out;
}

using Setter = std::function<void(const std::string&, const json&, RunConfig&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto text = [&t](const std::string& name, std::string RunConfig::*f) {
      t[name] = [name, f](const std::string& o, const json& v, RunConfig& c) { c.*f = as_text(o, name, v); };
    };
    text("algebra", &RunConfig::algebra);
    text("a", &RunConfig::a);
    text("b", &RunConfig::b);
    text("a_prime", &RunConfig::a_prime);
    text("b_prime", &RunConfig::b_prime);
    text("report", &RunConfig::report);
    text("format", &RunConfig::format);
    text("kind", &RunConfig::kind);
    text("alpha", &RunConfig::alpha);
    text("beta", &RunConfig::beta);
    text("c", &RunConfig::c);
    text("d", &RunConfig::dext);
    text("bits", &RunConfig::bits);
    text("module_file", &RunConfig::module_file);
    text("mode", &RunConfig::mode);
    text("dvec", &RunConfig::dvec);
    text("derivation_file", &RunConfig::derivation_file);

    t["window"] = [](const std::string& o, const json& v, RunConfig& c) {
      c.window = static_cast<int>(as_integer(o, "window", v));
    };
    t["gen_bound"] = [](const std::string& o, const json& v, RunConfig& c) {
      c.gen_bound = static_cast<int>(as_integer(o, "gen_bound", v));
    };
    t["degree"] = [](const std::string& o, const json& v, RunConfig& c) { c.degree = as_unsigned(o, "degree", v); };
    t["witness_degree"] = [](const std::string& o, const json& v, RunConfig& c) {
      c.witness_degree = as_unsigned(o, "witness_degree", v);
    };
    t["seed"] = [](const std::string& o, const json& v, RunConfig& c) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        field_error(o, "seed", "expected a non-negative integer");
      }
      c.seed = v.get<std::uint64_t>();
    };
    t["bits_lo"] = [](const std::string& o, const json& v, RunConfig& c) {
      c.bits_lo = static_cast<int>(as_integer(o, "bits_lo", v));
    };
    t["samples"] = [](const std::string& o, const json& v, RunConfig& c) { c.samples = as_unsigned(o, "samples", v); };
    t["exhaustive"] = [](const std::string& o, const json& v, RunConfig& c) { c.exhaustive = as_bool(o, "exhaustive", v); };
    t["witness"] = [](const std::string& o, const json& v, RunConfig& c) { c.witness = as_bool(o, "witness", v); };
    t["enforce_budget"] = [](const std::string& o, const json& v, RunConfig& c) {
      c.enforce_budget = as_bool(o, "enforce_budget", v);
    };
    t["degrees"] = [](const std::string& o, const json& v, RunConfig& c) { c.degrees = as_int_list(o, "degrees", v); };
    t["criteria"] = [](const std::string& o, const json& v, RunConfig& c) {
      c.criteria = as_int_list(o, "criteria", v);
    };
    t["only"] = [](const std::string& o, const json& v, RunConfig& c) {
      if (!v.is_array()) field_error(o, "only", "expected an array of monomials");
      c.only.clear();
      for (const auto& x : v) c.only.push_back(as_text(o, "only", x));
    };
    t["grid"] = [](const std::string& o, const json& v, RunConfig& c) {
      if (v.is_string()) {
        c.grid = parse_grid(v.get<std::string>());
        return;
      }
      if (!v.is_array()) field_error(o, "grid", "expected \"a,b;a,b\" or an array of [a, b] pairs");
      c.grid.clear();
      for (const auto& p : v) {
        if (!p.is_array() || p.size() != 2) field_error(o, "grid", "each entry must be an [a, b] pair");
        c.grid.emplace_back(as_text(o, "grid", p[0]), as_text(o, "grid", p[1]));
      }
    };
    return t;
  }();
  return table;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') ++line;
  }
  return line;
}

}  // namespace

RunConfig load_config(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
  RunConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(origin + ": unknown field '" + key + "'");
    it->second(origin, value, cfg);
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str(), path);
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["algebra"] = c.algebra;
  j["a"] = c.a;
  j["b"] = c.b;
  if (c.algebra == "mfam") {
    j["a_prime"] = c.a_prime;
    j["b_prime"] = c.b_prime;
  }
  if (c.window) j["window"] = *c.window;
  if (c.gen_bound) j["gen_bound"] = *c.gen_bound;
  if (c.degree) j["degree"] = *c.degree;
  j["witness_degree"] = c.witness_degree;
  j["seed"] = c.seed;
  j["exhaustive"] = c.exhaustive;
  j["only"] = c.only;
  j["kind"] = c.kind;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["c"] = c.c;
  j["d"] = c.dext;
  j["bits"] = c.bits;
  if (c.bits_lo) j["bits_lo"] = *c.bits_lo;
  j["module_file"] = c.module_file;
  j["witness"] = c.witness;
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const auto& [a, b] : c.grid) grid.push_back({a, b});
  j["grid"] = grid;
  j["samples"] = c.samples;
  j["mode"] = c.mode;
  j["degrees"] = c.degrees;
  j["dvec"] = c.dvec;
  j["derivation_file"] = c.derivation_file;
  j["criteria"] = c.criteria;
  j["enforce_budget"] = c.enforce_budget;
  return j;
}

MPoly parameter(const std::string& field, const std::string& text, const Var& symbol) {
  if (text == "sym") return MPoly(symbol);
  return MPoly(numeric(field, text));
}

Scalar numeric(const std::string& field, const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const Error& e) {
    throw ConfigError("field '" + field + "': expected a Gaussian rational such as 1/2 or 1/2+3i, got '" + text +
                      "'");
  }
}

std::vector<std::pair<std::string, std::string>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ConfigError("field 'grid': entry '" + item + "' is not 'a,b'");
    out.emplace_back(item.substr(0, comma), item.substr(comma + 1));
  }
  return out;
}

}  // namespace confalg::cli
