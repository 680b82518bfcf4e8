#include <sstream>

#include "confalg/catalog.hpp"

namespace confalg {

LieAlgebraSpec build_tsv_lie() {
  const MPoly x(lie_vars::first);
  const MPoly y(lie_vars::second);
  const MPoly half(Scalar::fraction(1, 2));
  LieAlgebraSpec spec;
  spec.name = "tsv";
  spec.families = {"L", "M", "Y"};
  spec.table[{"L", "L"}] = {{"L", y - x}};
  spec.table[{"L", "M"}] = {{"M", y}};
  spec.table[{"M", "L"}] = {{"M", -x}};
  spec.table[{"L", "Y"}] = {{"Y", y - half * x}};
  spec.table[{"Y", "L"}] = {{"Y", half * y - x}};
  spec.table[{"Y", "Y"}] = {{"M", y - x}};
  return spec;
}

namespace {

// Structure constants evaluated once per (pair, m, n).
class LieTable {
 public:
  LieTable(const LieAlgebraSpec& spec) : spec_(spec) {}  // NOLINT

  const std::vector<std::pair<Generator, Scalar>>& get(const Generator& u, const Generator& v) {
    auto key = std::make_pair(u, v);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::pair<Generator, Scalar>> out;
    auto entry = spec_.table.find({u.family, v.family});
    if (entry != spec_.table.end()) {
      std::map<Var, Scalar> at{{lie_vars::first, Scalar(u.index)}, {lie_vars::second, Scalar(v.index)}};
      for (const auto& t : entry->second) {
        Scalar c = evaluate(t.coeff, at);
        if (!c.is_zero()) out.emplace_back(Generator{t.target, u.index + v.index}, c);
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  const LieAlgebraSpec& spec_;
  std::map<std::pair<Generator, Generator>, std::vector<std::pair<Generator, Scalar>>> cache_;
};

void accumulate(LieElement& into, const Generator& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

LieElement bracket_with(LieTable& table, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      for (const auto& [g, c] : table.get(u, v)) accumulate(out, g, cu * cv * c);
    }
  }
  return out;
}

std::string describe(const LieElement& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x) {
    if (!first) os << " + ";
    os << "(" << c << ")" << g.to_string();
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

LieElement lie_bracket(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y) {
  LieTable table(spec);
  return bracket_with(table, x, y);
}

LieCheckReport lie_jacobi_check(const LieAlgebraSpec& spec, int window) {
  if (window < 1) throw Error("lie_jacobi_check: window must be >= 1");
  LieCheckReport report;
  report.window = window;
  LieTable table(spec);
  std::vector<Generator> gens;
  for (const auto& f : spec.families) {
    for (int i = -window; i <= window; ++i) gens.push_back({f, i});
  }
  auto record = [&](const std::string& what) {
    ++report.failure_count;
    if (report.failures.size() < 10) report.failures.push_back(what);
  };
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      ++report.antisymmetry_checks;
      LieElement s = bracket_with(table, {{u, 1}}, {{v, 1}});
      for (const auto& [g, c] : bracket_with(table, {{v, 1}}, {{u, 1}})) accumulate(s, g, c);
      if (!s.empty()) record("[" + u.to_string() + ", " + v.to_string() + "] + [" + v.to_string() +
                             ", " + u.to_string() + "] = " + describe(s));
    }
  }
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      LieElement uv = bracket_with(table, {{u, 1}}, {{v, 1}});
      for (const auto& w : gens) {
        ++report.jacobi_checks;
        LieElement total = bracket_with(table, uv, {{w, 1}});
        LieElement vw = bracket_with(table, {{v, 1}}, {{w, 1}});
        for (const auto& [g, c] : bracket_with(table, vw, {{u, 1}})) accumulate(total, g, c);
        LieElement wu = bracket_with(table, {{w, 1}}, {{u, 1}});
        for (const auto& [g, c] : bracket_with(table, wu, {{v, 1}})) accumulate(total, g, c);
        if (!total.empty()) {
          record("Jacobi(" + u.to_string() + ", " + v.to_string() + ", " + w.to_string() +
                 ") = " + describe(total));
        }
      }
    }
  }
  return report;
}

}  // namespace confalg
