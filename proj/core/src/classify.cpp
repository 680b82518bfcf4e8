#include "confalg/classify.hpp"

#include <algorithm>
#include <sstream>

#include "confalg/catalog.hpp"
#include "unknowns.hpp"

namespace confalg {

namespace {

const MPoly kD(vars::d);
const MPoly kL(vars::lambda);
const MPoly kM(vars::mu);
const VarSet kSpectral{vars::d, vars::lambda, vars::mu};

AlgebraSpec classifier_algebra(const std::string& id, const Scalar& a, const Scalar& b) {
  if (id != "csv" && id != "chv") throw Error("classification is implemented for csv and chv, got '" + id + "'");
  return build_named(id, MPoly(a), MPoly(b));
}

ClassifyStep step(std::string id, std::string statement, bool holds, std::string detail = "") {
  return {std::move(id), std::move(statement), holds, std::move(detail)};
}

// For g(d, l) = sum_p G_p(l) d^p of d-degree P >= 1, the d^(2P-1) coefficient
// of g(d+l, m) g(d, l) - g(d+m, l) g(d, m) is P (l - m) G_P(l) G_P(m) and no
// higher power of d survives.
bool top_coefficient_identity(unsigned P, unsigned degree_bound) {
  detail::UnknownPool pool("u");
  std::vector<MPoly> parts;
  MPoly g;
  for (unsigned p = 0; p <= P; ++p) {
    parts.push_back(pool.generic({vars::lambda}, degree_bound - std::min(p, degree_bound)));
    g += parts.back() * MPoly(1, Monomial::of(vars::d, p));
  }
  const MPoly q = substitute(g, {{vars::d, kD + kL}, {vars::lambda, kM}}) * g -
                  substitute(g, vars::d, kD + kM) * substitute(g, vars::lambda, kM);
  const VarSet only_d{vars::d};
  const auto by_d = coefficients(q, only_d);
  const MPoly expected =
      MPoly(static_cast<int>(P)) * (kL - kM) * parts[P] * substitute(parts[P], vars::lambda, kM);
  for (const auto& [m, coeff] : by_d) {
    const unsigned e = m.degree();
    if (e > 2 * P - 1 && !coeff.is_zero()) return false;
  }
  return coeff_extract(q, only_d, Monomial::of(vars::d, 2 * P - 1)) == expected;
}

bool top_coefficient_lemma(unsigned degree_bound, std::string& detail) {
  for (unsigned P = 1; P <= degree_bound; ++P) {
    if (!top_coefficient_identity(P, degree_bound)) {
      detail = "identity fails at d-degree " + std::to_string(P);
      return false;
    }
  }
  detail = "checked for d-degree 1.." + std::to_string(degree_bound);
  return true;
}

bool reaches_bound(const ScalarVector& v, const std::vector<std::size_t>& top_columns) {
  return std::any_of(top_columns.begin(), top_columns.end(), [&](std::size_t c) { return !v[c].is_zero(); });
}

}  // namespace

std::string to_string(ExtensionOutcome o) {
  switch (o) {
    case ExtensionOutcome::none: return "none";
    case ExtensionOutcome::extension: return "extension";
    case ExtensionOutcome::other: return "other";
  }
  return "other";
}

// ------------------------------------------------------------------ rank one

Rank1Classification classify_rank1(const std::string& algebra, const Scalar& a, const Scalar& b,
                                   unsigned degree_bound) {
  if (degree_bound < 2) throw Error("classify_rank1: degree bound must be at least 2");
  const AlgebraSpec spec = classifier_algebra(algebra, a, b);
  Rank1Classification out;
  out.algebra = algebra;
  out.a = a;
  out.b = b;
  out.degree_bound = degree_bound;
  out.extension_family = extension_family_of(spec);
  const std::string& ext = out.extension_family;
  const bool has_y = spec.has_family("Y");

  const MPoly ci(rank1_vars::ci);
  const MPoly cj(rank1_vars::cj);
  const MPoly dext(mparams::dext);
  const MPoly base = kD + MPoly(mparams::alpha) * kL + MPoly(mparams::beta);

  std::string detail;
  const bool lemma = top_coefficient_lemma(degree_bound, detail);
  out.steps.push_back(step("top-coefficient-lemma",
                           "a d-dependent g makes the top d-coefficient of g(d+l,m)g(d,l) - g(d+m,l)g(d,m) nonzero",
                           lemma, detail));
  out.steps.push_back(step("M-d-free", "the M-M relation with i = j forces g_i to be free of d", lemma));
  if (has_y) {
    out.steps.push_back(step("Y-d-free",
                             "the Y-Y relation with i = j has a d-free right side, so h_i is free of d",
                             lemma));
    // With g, h free of d the Y-Y relation collapses to -(l - m) g_{i+j}(l + m) = 0.
    detail::UnknownPool pool("u");
    const MPoly hi = pool.generic({vars::lambda}, degree_bound);
    const MPoly hj = pool.generic({vars::lambda}, degree_bound);
    const MPoly g = pool.generic({vars::lambda}, degree_bound);
    const MPoly r = module_residual(spec.entry("Y", "Y"), {hj, hi, hi, hj, {{"M", g}}});
    const bool collapses = r == -(kL - kM) * substitute(g, vars::lambda, kL + kM);
    out.steps.push_back(step("M-zero", "the Y-Y relation reduces to (l - m) g_{i+j}(l + m) = 0, so g = 0",
                             collapses, "residual " + r.to_string()));
    if (!collapses) throw Error("classify_rank1: Y-Y relation did not collapse as expected");
  }

  // The L-ext relation with i = 0 pins down every h_j up to the same space.
  detail::UnknownPool pool("u");
  const MPoly h = pool.generic({vars::lambda}, degree_bound);
  SparseEliminator slice(pool.size());
  detail::add_coefficient_rows(slice, module_residual(spec.entry("L", ext), {h, base, base, h, {{ext, h}}}),
                               kSpectral, pool.columns());
  const auto kernel = slice.kernel_basis();
  out.steps.push_back(step("ext-slice-i0", "the L-" + ext + " relation with i = 0 leaves a space of dimension " +
                                               std::to_string(kernel.size()) + " for each h_j",
                           true));
  if (kernel.empty()) {
    out.outcome = ExtensionOutcome::none;
    out.steps.push_back(step("ext-zero", ext + "_j acts by zero for every j", true));
    return out;
  }
  const std::size_t top = pool.size() - 1;  // coefficient of l^D
  for (const auto& v : kernel) {
    if (!v[top].is_zero()) {
      throw DegreeBoundExceeded("classify_rank1: solution of the i = 0 slice reaches degree " +
                                std::to_string(degree_bound));
    }
  }
  if (kernel.size() > 1) {
    out.outcome = ExtensionOutcome::other;
    out.steps.push_back(step("ext-slice-i0-dim", "expected at most one free scalar", false));
    return out;
  }
  const MPoly h0 = dext * detail::instantiate(h, pool.vars(), kernel[0]);

  // j = 0 expresses h_i through h_0.
  detail::UnknownPool pool_i("w");
  const MPoly hi = pool_i.generic({vars::lambda}, degree_bound);
  const MPoly fi = ci * base;
  SparseEliminator elim(pool_i.size());
  detail::add_coefficient_rows(elim, module_residual(spec.entry("L", ext), {h0, fi, fi, h0, {{ext, hi}}}),
                               kSpectral, pool_i.columns());
  LinearSolution sol = elim.solve();
  if (!sol.kernel_basis.empty()) {
    throw Error("classify_rank1: the j = 0 slice does not determine h_i");
  }
  std::map<Var, MPoly> values;
  for (std::size_t k = 0; k < pool_i.size(); ++k) values.emplace(pool_i.vars()[k], sol.solution[k]);
  const MPoly hi_value = substitute(hi, values);
  out.steps.push_back(step("ext-slice-j0", "the L-" + ext + " relation with j = 0 gives h_i = " + hi_value.to_string(),
                           true));

  // The closed form must satisfy the relation for independent i and j.
  const MPoly hj_value = substitute(hi_value, rank1_vars::ci, cj);
  const MPoly hij_value = substitute(hi_value, rank1_vars::ci, ci * cj);
  const MPoly general = module_residual(spec.entry("L", ext), {hj_value, fi, fi, hj_value, {{ext, hij_value}}});
  out.steps.push_back(step("ext-general", "h_i = " + hi_value.to_string() + " satisfies the L-" + ext +
                                               " relation for all i, j",
                           general.is_zero(), general.is_zero() ? "" : "residual " + general.to_string()));
  if (has_y) {
    const MPoly yy = module_residual(spec.entry("Y", "Y"), {hj_value, hi_value, hi_value, hj_value, {{"M", MPoly()}}});
    out.steps.push_back(step("Y-Y-consistent", "the Y-Y relation holds with g = 0", yy.is_zero()));
  }
  out.extension_action = hi_value;
  const bool canonical = hi_value == dext * ci && general.is_zero();
  out.outcome = canonical ? ExtensionOutcome::extension : ExtensionOutcome::other;
  return out;
}

// -------------------------------------------------------------------- graded

namespace {

struct UnknownTable {
  detail::UnknownPool pool;
  std::map<std::pair<int, int>, MPoly> polys;  // (i, m) -> generic polynomial
  std::vector<std::size_t> top_columns;        // unknowns of total degree D
};

UnknownTable make_table(const std::string& prefix, const ModuleSpec& shape, unsigned degree) {
  UnknownTable t{detail::UnknownPool(prefix), {}, {}};
  for (int i = shape.generators.lo; i <= shape.generators.hi; ++i) {
    for (int m = shape.basis.lo; m <= shape.basis.hi; ++m) {
      if (!shape.basis.contains(shape.target(i, m))) continue;
      const std::size_t first = t.pool.size();
      MPoly p = t.pool.generic({vars::d, vars::lambda}, degree);
      for (std::size_t c = first; c < t.pool.size(); ++c) {
        const Var& v = t.pool.vars()[c];
        for (const auto& [mono, coeff] : p.terms()) {
          if (mono.exponent(v) == 1 && mono.degree() == degree + 1) t.top_columns.push_back(c);
        }
      }
      t.polys.emplace(std::make_pair(i, m), std::move(p));
    }
  }
  return t;
}

// Applies f(i, j, k) to every index triple whose basis indices k, j + k,
// i + k and i + j + k all lie in the window.
template <class F>
void for_each_instance(const ModuleSpec& shape, bool zero_slice, F&& f) {
  const Window& g = shape.generators;
  const Window& v = shape.basis;
  for (int i = g.lo; i <= g.hi; ++i) {
    for (int j = g.lo; j <= g.hi; ++j) {
      if (!g.contains(i + j)) continue;
      if (zero_slice && (i != 0 || j != 0)) continue;
      for (int k = v.lo; k <= v.hi; ++k) {
        if (!v.contains(shape.target(j, k)) || !v.contains(shape.target(i, k))) continue;
        if (!v.contains(shape.target(i + j, k))) continue;
        f(i, j, k);
      }
    }
  }
}

}  // namespace

GradedClassification classify_graded(const std::string& algebra, const Scalar& a, const Scalar& b,
                                     const GradedBase& base, unsigned degree_bound, int window,
                                     int gen_bound) {
  if (degree_bound < 2) throw Error("classify_graded: degree bound must be at least 2");
  const AlgebraSpec spec = classifier_algebra(algebra, a, b);
  GradedClassification out;
  out.algebra = algebra;
  out.a = a;
  out.b = b;
  out.base = base;
  out.degree_bound = degree_bound;
  out.window = window;
  out.gen_bound = gen_bound;
  out.extension_family = extension_family_of(spec);
  const std::string& ext = out.extension_family;

  ModuleSpec shape;
  if (base.kind == ModuleKind::v_ab) {
    shape = build_graded_ab(spec, MPoly(base.alpha), MPoly(base.beta), MPoly(), window, gen_bound);
  } else if (base.kind == ModuleKind::v_Ab) {
    if (!base.bits) throw Error("classify_graded: VAb base needs a BitSeq");
    shape = build_graded_Ab(spec, *base.bits, MPoly(base.beta), MPoly(), window, gen_bound);
  } else {
    throw Error("classify_graded: base must be Vab or VAb");
  }

  std::vector<std::string> unknown_families;
  for (const auto& f : spec.families) {
    if (f != "L") unknown_families.push_back(f);
  }

  // Linear stage: the L-F relation is linear in the F coefficients.
  std::map<std::string, UnknownTable> tables;
  std::map<std::string, std::vector<ScalarVector>> kernels;
  for (const auto& fam : unknown_families) {
    UnknownTable t = make_table(fam == "M" ? "g" : "h", shape, degree_bound);
    const auto& bracket = spec.entry("L", fam);
    auto instance = [&](int i, int j, int k) {
      return module_residual(bracket, {t.polys.at({j, k}), shape.action("L", i, shape.target(j, k)),
                                       shape.action("L", i, k), t.polys.at({j, shape.target(i, k)}),
                                       {{fam, t.polys.at({i + j, k})}}});
    };

    SparseEliminator slice(t.pool.size());
    for_each_instance(shape, true, [&](int i, int j, int k) {
      detail::add_coefficient_rows(slice, instance(i, j, k), kSpectral, t.pool.columns());
    });
    const std::size_t slice_vars = static_cast<std::size_t>(shape.basis.size()) *
                                   ((degree_bound + 1) * (degree_bound + 2) / 2);
    const std::size_t slice_dim = slice_vars - slice.rank();
    out.steps.push_back(step("L-" + fam + "-slice",
                             "the L-" + fam + " relation with i = j = 0 leaves dimension " + std::to_string(slice_dim) +
                                 " for the index-0 coefficients",
                             true));

    SparseEliminator full(t.pool.size());
    for_each_instance(shape, false, [&](int i, int j, int k) {
      detail::add_coefficient_rows(full, instance(i, j, k), kSpectral, t.pool.columns());
    });
    auto kernel = full.kernel_basis();
    for (const auto& v : kernel) {
      if (reaches_bound(v, t.top_columns)) {
        throw DegreeBoundExceeded("classify_graded: an L-" + fam + " solution reaches degree " +
                                  std::to_string(degree_bound));
      }
    }
    out.steps.push_back(step("L-" + fam + "-full",
                             "the L-" + fam + " relation on the window leaves dimension " + std::to_string(kernel.size()),
                             true));
    kernels[fam] = std::move(kernel);
    tables.emplace(fam, std::move(t));
  }

  // Parametrize the linear solutions and impose the remaining relations.
  detail::UnknownPool params("t");
  std::map<std::string, std::map<std::pair<int, int>, MPoly>> coeff;
  for (const auto& fam : unknown_families) {
    const UnknownTable& t = tables.at(fam);
    std::map<Var, MPoly> values;
    for (const auto& v : t.pool.vars()) values.emplace(v, MPoly());
    for (const auto& kv : kernels.at(fam)) {
      const MPoly p(params.fresh());
      for (std::size_t c = 0; c < kv.size(); ++c) {
        if (!kv[c].is_zero()) values[t.pool.vars()[c]] += MPoly(kv[c]) * p;
      }
    }
    for (const auto& [key, poly] : t.polys) coeff[fam][key] = substitute(poly, values);
  }

  std::vector<MPoly> equations;
  if (params.size() > 0) {
    for (const auto& fa : unknown_families) {
      for (const auto& fb : unknown_families) {
        const auto& bracket = spec.entry(fa, fb);
        for_each_instance(shape, false, [&](int i, int j, int k) {
          AxiomInstance inst{coeff[fb].at({j, k}), coeff[fa].at({i, shape.target(j, k)}), coeff[fa].at({i, k}),
                             coeff[fb].at({j, shape.target(i, k)}), {}};
          for (const auto& t : bracket) inst.target_on_k[t.target] = coeff[t.target].at({i + j, k});
          for (auto& [m, c] : coefficients(module_residual(bracket, inst), kSpectral)) {
            if (!c.is_zero()) equations.push_back(std::move(c));
          }
        });
      }
    }
  }
  std::sort(equations.begin(), equations.end(), [](const MPoly& x, const MPoly& y) {
    return x.to_string() < y.to_string();
  });
  equations.erase(std::unique(equations.begin(), equations.end()), equations.end());
  const detail::PropagationResult prop = detail::propagate(equations, params.vars());
  if (!prop.consistent) throw Error("classify_graded: homogeneous system reported inconsistent");
  if (!prop.unresolved.empty()) {
    throw Error("classify_graded: " + std::to_string(prop.unresolved.size()) +
                " quadratic equations are outside the elimination rules");
  }
  out.steps.push_back(step("quadratic-relations",
                           std::to_string(equations.size()) + " equations from the remaining relations leave " +
                               std::to_string(prop.free.size()) + " free scalars",
                           true));

  for (auto& [fam, table] : coeff) {
    for (auto& [key, poly] : table) poly = substitute(poly, prop.assignment);
  }
  out.solution_dim = prop.free.size();
  auto all_zero = [&](const std::string& fam) {
    return std::all_of(coeff[fam].begin(), coeff[fam].end(), [](const auto& kv) { return kv.second.is_zero(); });
  };
  out.other_family_zero = true;
  for (const auto& fam : unknown_families) {
    if (fam != ext) out.other_family_zero = out.other_family_zero && all_zero(fam);
  }
  const bool nothing = std::all_of(unknown_families.begin(), unknown_families.end(), all_zero);

  if (nothing) {
    out.outcome = ExtensionOutcome::none;
    out.solution = shape;
  } else if (prop.free.size() == 1 && out.other_family_zero) {
    const MPoly t(prop.free[0]);
    const MPoly first = coeff[ext].begin()->second;
    bool uniform = true;
    for (const auto& [key, poly] : coeff[ext]) uniform = uniform && poly == first;
    // A uniform solution proportional to t means F_{i,m} = dext for all i, m.
    std::optional<Scalar> scale;
    if (uniform) {
      try {
        MPoly ratio = divide_exact(first, t);
        if (ratio.is_constant() && !ratio.is_zero()) scale = ratio.constant_value();
      } catch (const NotDivisible&) {
      }
    }
    if (uniform && scale) {
      out.outcome = ExtensionOutcome::extension;
      out.solution = base.kind == ModuleKind::v_ab
                         ? build_graded_ab(spec, MPoly(base.alpha), MPoly(base.beta), MPoly(mparams::dext), window,
                                           gen_bound)
                         : build_graded_Ab(spec, *base.bits, MPoly(base.beta), MPoly(mparams::dext), window, gen_bound);
    } else {
      out.outcome = ExtensionOutcome::other;
    }
  } else {
    out.outcome = ExtensionOutcome::other;
  }
  if (out.outcome == ExtensionOutcome::other) {
    std::ostringstream os;
    for (const auto& fam : unknown_families) {
      for (const auto& [key, poly] : coeff[fam]) {
        if (poly.is_zero()) continue;
        os << fam << "_{" << key.first << "," << key.second << "} = " << poly.to_string() << "; ";
        break;
      }
    }
    out.steps.push_back(step("outcome", "the solution set is not the expected family", false, os.str()));
  }
  return out;
}

}  // namespace confalg
