#include "confalg/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "confalg/catalog.hpp"
#include "confalg/classify.hpp"
#include "confalg/der.hpp"
#include "confalg/random.hpp"
#include "confalg/suite.hpp"

namespace confalg::cli {

namespace {

using ojson = nlohmann::ordered_json;

template <class F>
Record timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Record r = body();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Runs body; a library error becomes a failed record instead of aborting.
template <class F>
Record guarded(const std::string& id, const std::string& claim, F&& body) {
  return timed([&]() -> Record {
    try {
      return body();
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      Record r;
      r.id = id;
      r.claim = claim;
      r.status = Status::error;
      r.ok = false;
      r.details["error"] = e.what();
      return r;
    }
  });
}

Report start(const std::string& command, const RunConfig& config) {
  Report r;
  r.command = command;
  r.config = to_json(config);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraSpec algebra_of(const RunConfig& c) {
  const MPoly a = parameter("a", c.a, params::a);
  const MPoly b = parameter("b", c.b, params::b);
  try {
    if (c.algebra == "mfam") {
      return build_named("mfam", a, b, parameter("a_prime", c.a_prime, params::a_prime),
                         parameter("b_prime", c.b_prime, params::b_prime));
    }
    return build_named(c.algebra, a, b);
  } catch (const Error& e) {
    throw ConfigError(std::string("field 'algebra': ") + e.what());
  }
}

std::string family_list(std::initializer_list<std::string> fs) {
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : ",") + f;
  return out;
}

bool extension_expected(const std::string& algebra, const Scalar& a, const Scalar& b) {
  if (algebra == "csv") return a.is_zero() && b.is_zero();
  return a.is_one() && b.is_zero();
}

std::vector<std::pair<Scalar, Scalar>> grid_of(const RunConfig& c) {
  std::vector<std::pair<Scalar, Scalar>> out;
  if (c.grid.empty()) return {{0, 0}, {1, 0}, {0, 1}, {2, 5}, {1, 1}};
  for (const auto& [a, b] : c.grid) out.emplace_back(numeric("grid", a), numeric("grid", b));
  return out;
}

std::string point(const Scalar& a, const Scalar& b) { return "(" + a.to_string() + "," + b.to_string() + ")"; }

SeqC parse_seq(const std::string& text) {
  SeqC out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("field 'dvec': entry '" + item + "' is not 'c:value'");
    int c = 0;
    try {
      c = std::stoi(item.substr(0, colon));
    } catch (const std::exception&) {
      throw ConfigError("field 'dvec': bad position in '" + item + "'");
    }
    out.entries[c] += numeric("dvec", item.substr(colon + 1));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ verify-axioms

Report cmd_verify_axioms(const RunConfig& c) {
  Report rep = start("verify-axioms", c);
  if (c.algebra == "tsv") {
    const int window = c.window.value_or(5);
    rep.records.push_back(guarded("lie-jacobi", "antisymmetry and Jacobi for the tsv Lie algebra", [&] {
      const LieCheckReport lr = lie_jacobi_check(build_tsv_lie(), window);
      Record r;
      r.id = "lie-jacobi";
      r.claim = "antisymmetry and Jacobi for the tsv Lie algebra";
      r.inputs = {{"window", window}};
      r.status = lr.ok() ? Status::zero : Status::nonzero;
      r.ok = lr.ok();
      r.details = {{"antisymmetry_checks", lr.antisymmetry_checks},
                   {"jacobi_checks", lr.jacobi_checks},
                   {"failures", lr.failure_count}};
      if (!lr.ok()) r.residual = lr.failures.front();
      return r;
    }));
    rep.scope = "all index triples in [-" + std::to_string(window) + ", " + std::to_string(window) + "]";
    return rep;
  }
  const AlgebraSpec spec = algebra_of(c);
  const auto start_time = std::chrono::steady_clock::now();
  const AxiomReport ar = check_all_axioms(spec, c.exhaustive);
  const double each = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count() /
                      static_cast<double>(std::max<std::size_t>(1, ar.skew.size() + ar.jacobi.size()));
  for (const auto& s : ar.skew) {
    Record r = residual_record("skew:" + family_list({s.a, s.b}), "skew-symmetry for the pair", s.residual);
    r.inputs = {{"families", {s.a, s.b}}};
    r.seconds = each;
    rep.records.push_back(std::move(r));
  }
  for (const auto& j : ar.jacobi) {
    Record r = residual_record("jacobi:" + family_list({j.a, j.b, j.c}), "Jacobi identity for the triple", j.residual);
    r.inputs = {{"families", {j.a, j.b, j.c}}};
    r.seconds = each;
    rep.records.push_back(std::move(r));
  }
  rep.scope = "family templates; structure constants depend on indices only through their sum";
  if (c.algebra == "mfam") rep.notes.push_back("the axioms hold exactly on the locus a' = a/2 + 1, b' = b/2");
  return rep;
}

// ------------------------------------------------------- solve-construction

Report cmd_solve_construction(const RunConfig& c) {
  Report rep = start("solve-construction", c);
  std::vector<Monomial> only;
  for (const auto& text : c.only) {
    MPoly p;
    try {
      p = MPoly::parse(text);
    } catch (const Error&) {
      throw ConfigError("field 'only': cannot parse monomial '" + text + "'");
    }
    if (p.size() != 1 || !p.leading().second.is_one()) {
      throw ConfigError("field 'only': '" + text + "' is not a monic monomial");
    }
    only.push_back(p.leading().first);
  }
  const std::string claim = "(L, Y, Y) Jacobi residual of M(a, a', b, b') vanishes";
  rep.records.push_back(guarded("solve", claim, [&] {
    const ConstructionSolution sol = solve_construction(only.empty() ? nullptr : &only);
    Record r;
    r.id = "solve";
    r.claim = claim;
    r.status = Status::match;
    r.details["a_prime"] = sol.a_prime.to_string();
    r.details["b_prime"] = sol.b_prime.to_string();
    r.details["equations_used"] = sol.equations_used;
    ojson table = ojson::array();
    for (const auto& e : sol.equations) table.push_back({{"monomial", e.monomial.to_string()}, {"coefficient", e.coefficient.to_string()}});
    r.details["coefficients"] = table;

    const AlgebraSpec back = build_construction(MPoly(params::a), sol.a_prime, MPoly(params::b), sol.b_prime);
    r.ok = check_all_axioms(back, true).all_zero();
    if (!r.ok) r.status = Status::mismatch;
    r.details["solution_passes_axioms"] = r.ok;
    return r;
  }));
  rep.scope = "a, a', b, b' symbolic; coefficients of every monomial in d, l, m";
  return rep;
}

// ------------------------------------------------------------- check-module

Report cmd_check_module(const RunConfig& c) {
  Report rep = start("check-module", c);
  const AlgebraSpec spec = algebra_of(c);
  const int window = c.window.value_or(3);
  const int gen_bound = c.gen_bound.value_or(2);
  const MPoly alpha = parameter("alpha", c.alpha, mparams::alpha);
  const MPoly beta = parameter("beta", c.beta, mparams::beta);
  const MPoly cc = parameter("c", c.c, mparams::c);
  const MPoly dext = parameter("d", c.dext, mparams::dext);

  ModuleSpec module;
  try {
    if (!c.module_file.empty()) {
      module = module_from_text(read_file(c.module_file));
    } else if (c.kind == "rank1") {
      module = build_rank1(spec, alpha, beta, cc, dext, gen_bound);
    } else if (c.kind == "Vab") {
      module = build_graded_ab(spec, alpha, beta, dext, window, gen_bound);
    } else if (c.kind == "VAb") {
      const Window w{-window - gen_bound, window + gen_bound};
      Rng rng(c.seed);
      const BitSeq bits = c.bits.empty() ? BitSeq::random(w, rng) : BitSeq::from_string(c.bits_lo.value_or(w.lo), c.bits);
      module = build_graded_Ab(spec, bits, beta, dext, window, gen_bound);
    } else {
      throw ConfigError("field 'kind': expected rank1, Vab or VAb, got '" + c.kind + "'");
    }
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  } catch (const WindowTooSmall& e) {
    throw ConfigError(e.what());
  }

  ojson inputs = {{"module", module.name},
                  {"kind", to_string(module.params.kind)},
                  {"generators", {module.generators.lo, module.generators.hi}},
                  {"basis", {module.basis.lo, module.basis.hi}}};
  if (module.params.bits) inputs["bits"] = module.params.bits->to_string();

  bool axioms_zero = false;
  rep.records.push_back(guarded("module-axioms", "the action satisfies the module axiom", [&] {
    const ModuleAxiomReport ar = check_module_axioms(spec, module);
    axioms_zero = ar.all_zero();
    Record r = residual_record("module-axioms", "the action satisfies the module axiom",
                               ar.all_zero() ? MPoly() : ar.nonzero.front().residual);
    r.inputs = inputs;
    r.details["instances"] = ar.checked;
    r.details["nonzero"] = ar.nonzero.size();
    if (!ar.all_zero()) {
      const ModuleResidual& f = ar.nonzero.front();
      r.details["first_instance"] =
          f.a + "_" + std::to_string(f.i) + ", " + f.b + "_" + std::to_string(f.j) + " on v_" + std::to_string(f.k);
    }
    return r;
  }));

  if (spec.has_family("L") && spec.has_family("M") && spec.has_family("Y")) {
    const MPoly a = parameter("a", c.a, params::a);
    const MPoly b = parameter("b", c.b, params::b);
    bool relations_zero = false;
    rep.records.push_back(guarded("relations", "the five L/M/Y coefficient relations hold", [&] {
      const RelationResiduals rr = relations_oracle(a, b, module);
      relations_zero = rr.all_zero();
      Record r = residual_record("relations", "the five L/M/Y coefficient relations hold",
                                 rr.all_zero() ? MPoly() : rr.first.begin()->second);
      r.inputs = inputs;
      r.details["instances"] = rr.checked;
      ojson counts = ojson::object();
      for (const auto& id : kRelationIds) counts[id] = rr.nonzero.count(id) ? rr.nonzero.at(id) : 0;
      r.details["nonzero_by_relation"] = counts;
      return r;
    }));
    Record agree;
    agree.id = "oracle-agreement";
    agree.claim = "module axiom and coefficient relations agree";
    agree.ok = axioms_zero == relations_zero;
    agree.status = agree.ok ? Status::match : Status::mismatch;
    rep.records.push_back(std::move(agree));
  }

  if (c.witness) {
    rep.records.push_back(guarded("witness", "bounded search for a proper submodule C[d] q(d) v", [&] {
      const WitnessResult w = reducibility_witness(module, c.witness_degree);
      Record r;
      r.id = "witness";
      r.claim = "bounded search for a proper submodule C[d] q(d) v";
      r.status = Status::info;
      r.details["trivial_module"] = w.trivial_module;
      r.details["witness"] = w.witness ? w.witness->to_string() : "none";
      r.details["searched_degree"] = w.searched_degree;
      for (const auto& n : w.notes) rep.notes.push_back(n);
      return r;
    }));
  }
  rep.scope = "instances whose generator and basis indices stay inside the module windows";
  return rep;
}

// ----------------------------------------------------------------- classify

Report cmd_classify(const RunConfig& c) {
  Report rep = start("classify", c);
  if (c.algebra != "csv" && c.algebra != "chv") throw ConfigError("field 'algebra': classify supports csv and chv");
  if (c.kind != "rank1" && c.kind != "Vab" && c.kind != "VAb") {
    throw ConfigError("field 'kind': expected rank1, Vab or VAb, got '" + c.kind + "'");
  }
  const unsigned degree = c.degree.value_or(6);
  const int window = c.window.value_or(3);
  const int gen_bound = c.gen_bound.value_or(2);
  Rng rng(c.seed);

  for (const auto& [a, b] : grid_of(c)) {
    const bool expect = extension_expected(c.algebra, a, b);
    const std::string want = expect ? "extension" : "none";
    if (c.kind == "rank1") {
      const std::string id = c.algebra + point(a, b);
      rep.records.push_back(guarded(id, "rank-one classification", [&] {
        const Rank1Classification cls = classify_rank1(c.algebra, a, b, degree);
        Record r;
        r.id = id;
        r.claim = "rank-one classification";
        r.inputs = {{"a", a.to_string()}, {"b", b.to_string()}, {"degree", degree}};
        const bool steps = std::all_of(cls.steps.begin(), cls.steps.end(), [](const auto& s) { return s.holds; });
        r.ok = to_string(cls.outcome) == want && steps && cls.other_action.is_zero();
        r.status = r.ok ? Status::match : Status::mismatch;
        r.details["outcome"] = to_string(cls.outcome);
        r.details["expected"] = want;
        r.details["extension_family"] = cls.extension_family;
        r.details["extension_action"] = cls.extension_action.to_string();
        ojson s = ojson::array();
        for (const auto& st : cls.steps) s.push_back({{"id", st.id}, {"holds", st.holds}, {"statement", st.statement}});
        r.details["steps"] = s;
        return r;
      }));
      continue;
    }
    for (unsigned k = 0; k < std::max(1u, c.samples); ++k) {
      GradedBase base;
      base.kind = c.kind == "Vab" ? ModuleKind::v_ab : ModuleKind::v_Ab;
      base.alpha = c.alpha == "sym" ? random_scalar(rng, 5) : numeric("alpha", c.alpha);
      base.beta = c.beta == "sym" ? random_scalar(rng, 5) : numeric("beta", c.beta);
      if (base.kind == ModuleKind::v_Ab) {
        const Window w{-window - gen_bound, window + gen_bound};
        base.bits = c.bits.empty() ? BitSeq::random(w, rng) : BitSeq::from_string(c.bits_lo.value_or(w.lo), c.bits);
      }
      const std::string id = c.algebra + point(a, b) + " " + c.kind + "#" + std::to_string(k);
      rep.records.push_back(guarded(id, "graded classification", [&] {
        const GradedClassification cls = classify_graded(c.algebra, a, b, base, degree, window, gen_bound);
        Record r;
        r.id = id;
        r.claim = "graded classification";
        r.inputs = {{"a", a.to_string()}, {"b", b.to_string()}, {"beta", base.beta.to_string()}};
        if (base.bits) {
          r.inputs["bits"] = base.bits->to_string();
        } else {
          r.inputs["alpha"] = base.alpha.to_string();
        }
        bool solution_ok = false;
        if (cls.solution) solution_ok = check_module_axioms(build_named(c.algebra, MPoly(a), MPoly(b)), *cls.solution).all_zero();
        r.ok = to_string(cls.outcome) == want && cls.other_family_zero && solution_ok;
        r.status = r.ok ? Status::match : Status::mismatch;
        r.details["outcome"] = to_string(cls.outcome);
        r.details["expected"] = want;
        r.details["solution_dim"] = cls.solution_dim;
        r.details["other_family_zero"] = cls.other_family_zero;
        r.details["solution_is_module"] = solution_ok;
        return r;
      }));
    }
  }
  std::ostringstream scope;
  scope << "unknown coefficients of degree <= " << degree;
  if (c.kind != "rank1") scope << ", basis [-" << window << ", " << window << "], generators [-" << gen_bound << ", " << gen_bound << "]";
  rep.scope = scope.str();
  return rep;
}

// ------------------------------------------------------------- derivations

Report cmd_derivations(const RunConfig& c) {
  Report rep = start("derivations", c);
  const AlgebraSpec spec = algebra_of(c);
  const int window = c.window.value_or(2);
  const unsigned degree = c.degree.value_or(4);

  auto given = [&]() -> DerivationSpec {
    if (!c.derivation_file.empty()) {
      try {
        return derivation_from_text(read_file(c.derivation_file));
      } catch (const ParseError& e) {
        throw ConfigError(e.what());
      }
    }
    if (!c.dvec.empty()) return d_vec(spec, parse_seq(c.dvec), std::max(window, 1));
    throw ConfigError("mode '" + c.mode + "' needs 'dvec' or 'derivation_file'");
  };

  if (c.mode == "solve") {
    const bool has_expectation = (c.algebra == "csv" || c.algebra == "chv") && c.a != "sym";
    std::vector<std::string> scopes;
    for (int deg : c.degrees) {
      const std::string id = c.algebra + " c=" + std::to_string(deg);
      rep.records.push_back(guarded(id, "outer derivations of degree c modulo inner ones", [&] {
        const GradedDerivationSolution sol = solve_graded_derivations(spec, deg, degree, window);
        Record r;
        r.id = id;
        r.claim = "outer derivations of degree c modulo inner ones";
        r.inputs = {{"c", deg}, {"degree", degree}, {"window", window}};
        r.details["unknowns"] = sol.unknowns;
        r.details["solution_dim"] = sol.solution_dim;
        r.details["inner_rank"] = sol.inner_rank;
        r.details["quotient_dim"] = sol.quotient_dim;
        r.details["inner_contained"] = sol.inner_contained;
        r.status = Status::info;
        r.ok = sol.inner_contained;
        if (has_expectation) {
          const std::size_t expected = numeric("a", c.a).is_one() ? 1 : 0;
          r.details["expected_quotient_dim"] = expected;
          r.ok = r.ok && sol.quotient_dim == expected;
          r.status = r.ok ? Status::match : Status::mismatch;
        }
        scopes.push_back(sol.scope);
        return r;
      }));
    }
    for (const auto& s : scopes) rep.scope += (rep.scope.empty() ? "" : "; ") + s;
    return rep;
  }
  if (c.mode == "check") {
    const DerivationSpec der = given();
    rep.records.push_back(guarded("leibniz", "the map satisfies the Leibniz rule", [&] {
      const DerivationReport dr = check_derivation(spec, der);
      Record r = residual_record("leibniz", "the map satisfies the Leibniz rule",
                                 dr.all_zero() ? LambdaPoly() : dr.nonzero.front().residual);
      r.inputs = {{"derivation", der.name}, {"window", {der.window.lo, der.window.hi}}};
      r.details["pairs"] = dr.checked;
      r.details["nonzero"] = dr.nonzero.size();
      if (!dr.all_zero()) {
        r.details["first_pair"] = dr.nonzero.front().x.to_string() + ", " + dr.nonzero.front().y.to_string();
      }
      return r;
    }));
    rep.scope = "generator pairs x_i, y_j with i, j, i + j in the derivation window";
    return rep;
  }
  if (c.mode == "decompose") {
    const DerivationSpec der = given();
    if (!der.degree && c.degrees.size() != 1) {
      throw ConfigError("field 'degrees': decompose needs the degree of a non-homogeneous input");
    }
    const int deg = der.degree.value_or(c.degrees.front());
    rep.records.push_back(guarded("decompose", "the derivation is ad(x) plus a multiple of d_vec", [&] {
      const Decomposition dec = decompose(spec, der, deg, degree);
      Record r;
      r.id = "decompose";
      r.claim = "the derivation is ad(x) plus a multiple of d_vec";
      r.status = Status::match;
      r.inputs = {{"derivation", der.name}, {"c", deg}};
      r.details["x"] = dec.x.to_string();
      r.details["q"] = dec.q.to_string();
      r.details["dvec_allowed"] = dec.dvec_allowed;
      return r;
    }));
    rep.scope = "x = sum of p_F(d) F_c with deg p_F < " + std::to_string(degree);
    return rep;
  }
  throw ConfigError("field 'mode': expected solve, check or decompose, got '" + c.mode + "'");
}

// -------------------------------------------------------------------- suite

Report cmd_suite(const RunConfig& c) {
  Report rep = start("suite", c);
  SuiteOptions options;
  options.seed = c.seed;
  options.enforce_budget = c.enforce_budget;
  for (const auto& res : run_suite(options, c.criteria)) {
    Record r;
    r.id = "criterion-" + std::to_string(res.id);
    r.claim = res.name;
    r.ok = res.pass();
    r.status = !res.error.empty() ? Status::error : (r.ok ? Status::match : Status::mismatch);
    r.seconds = res.seconds;
    r.details["checks"] = res.checks.size();
    r.details["failed_checks"] = res.failed_checks();
    r.details["budget_seconds"] = res.budget_seconds;
    r.details["within_budget"] = res.within_budget;
    r.details["scope"] = res.scope;
    if (!res.error.empty()) r.details["error"] = res.error;
    ojson failures = ojson::array();
    for (const auto& ch : res.checks) {
      if (!ch.pass) failures.push_back({{"check", ch.label}, {"detail", ch.detail}});
    }
    if (!failures.empty()) r.details["failures"] = failures;
    rep.records.push_back(std::move(r));
  }
  rep.scope = suite_scope(options);
  return rep;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-axioms", "solve-construction", "check-module",
                                              "classify",      "derivations",        "suite"};
  return names;
}

Report run_command(const std::string& name, const RunConfig& config) {
  if (name == "verify-axioms") return cmd_verify_axioms(config);
  if (name == "solve-construction") return cmd_solve_construction(config);
  if (name == "check-module") return cmd_check_module(config);
  if (name == "classify") return cmd_classify(config);
  if (name == "derivations") return cmd_derivations(config);
  if (name == "suite") return cmd_suite(config);
  throw ConfigError("unknown command '" + name + "'");
}

}  // namespace confalg::cli
