#include "confalg/module.hpp"

#include <algorithm>

namespace confalg {

namespace {

const MPoly kD(vars::d);
const MPoly kL(vars::lambda);
const MPoly kM(vars::mu);

bool is_nonzero_constant(const MPoly& p) { return p.is_constant() && !p.is_zero(); }

MPoly power(const MPoly& c, int i) {
  if (i >= 0) return c.pow(static_cast<unsigned>(i));
  return MPoly(c.constant_value().pow(i));
}

}  // namespace

BitSeq::BitSeq(int lo, std::vector<int> bits) : lo_(lo), bits_(std::move(bits)) {
  for (int b : bits_) {
    if (b != 0 && b != 1) throw Error("BitSeq entries must be 0 or 1");
  }
}

BitSeq BitSeq::from_string(int lo, std::string_view bits) {
  std::vector<int> out;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ParseError("BitSeq string may only contain 0 and 1");
    out.push_back(ch - '0');
  }
  return BitSeq(lo, std::move(out));
}

BitSeq BitSeq::random(Window w, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> out;
  for (int m = w.lo; m <= w.hi; ++m) out.push_back(coin(rng) ? 1 : 0);
  return BitSeq(w.lo, std::move(out));
}

BitSeq BitSeq::constant(Window w, int bit) {
  return BitSeq(w.lo, std::vector<int>(static_cast<std::size_t>(w.size()), bit));
}

int BitSeq::at(int m) const {
  if (!defined(m)) {
    throw WindowTooSmall("BitSeq is not defined at index " + std::to_string(m));
  }
  return bits_[static_cast<std::size_t>(m - lo_)];
}

bool BitSeq::is_constant() const {
  return std::adjacent_find(bits_.begin(), bits_.end(), std::not_equal_to<>()) == bits_.end();
}

std::string BitSeq::to_string() const {
  std::string out;
  for (int b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::rank_one: return "rank1";
    case ModuleKind::v_ab: return "Vab";
    case ModuleKind::v_Ab: return "VAb";
    case ModuleKind::table: return "table";
  }
  return "table";
}

ModuleKind module_kind_from_string(const std::string& s) {
  if (s == "rank1") return ModuleKind::rank_one;
  if (s == "Vab") return ModuleKind::v_ab;
  if (s == "VAb") return ModuleKind::v_Ab;
  if (s == "table") return ModuleKind::table;
  throw ParseError("unknown module kind '" + s + "'");
}

MPoly ModuleSpec::action(const std::string& family, int i, int m) const {
  if (std::find(families.begin(), families.end(), family) == families.end()) {
    throw UnknownFamily("family '" + family + "' does not act on module " + name);
  }
  if (!defined(i, m)) {
    throw WindowTooSmall("module " + name + " has no action of " + family + "_" +
                         std::to_string(i) + " on basis index " + std::to_string(m));
  }
  auto it = table.find({family, i, m});
  return it == table.end() ? MPoly() : it->second;
}

void ModuleSpec::set_action(const std::string& family, int i, int m, MPoly p) {
  if (std::find(families.begin(), families.end(), family) == families.end()) {
    throw UnknownFamily("family '" + family + "' does not act on module " + name);
  }
  if (!defined(i, m)) throw WindowTooSmall("action index outside the module windows");
  if (p.is_zero()) {
    table.erase({family, i, m});
  } else {
    table[{family, i, m}] = std::move(p);
  }
}

std::string extension_family_of(const AlgebraSpec& algebra) {
  if (algebra.has_family("Y")) return "Y";
  if (algebra.has_family("M")) return "M";
  return "";
}

ModuleSpec build_rank1(const AlgebraSpec& algebra, const MPoly& alpha, const MPoly& beta,
                       const MPoly& c, const MPoly& dext, int gen_bound) {
  if (gen_bound < 0) throw WindowTooSmall("generator bound must be non-negative");
  algebra.require_family("L");
  ModuleSpec out;
  out.name = "M(" + algebra.name + ")";
  out.graded = false;
  out.families = algebra.families;
  out.basis = {0, 0};
  if (algebra.indices == IndexRange::zero_only) {
    out.generators = {0, 0};
  } else if (is_nonzero_constant(c)) {
    out.generators = {-gen_bound, gen_bound};
  } else {
    out.generators = {0, gen_bound};
  }
  out.params = {ModuleKind::rank_one, algebra.name, alpha, beta, c, dext, std::nullopt,
                extension_family_of(algebra)};
  const MPoly base = kD + alpha * kL + beta;
  for (int i = out.generators.lo; i <= out.generators.hi; ++i) {
    MPoly ci = power(c, i);
    out.set_action("L", i, 0, ci * base);
    if (!out.params.extension_family.empty()) {
      out.set_action(out.params.extension_family, i, 0, dext * ci);
    }
  }
  return out;
}

namespace {

ModuleSpec graded_shell(const AlgebraSpec& algebra, int window, int gen_bound) {
  if (window < 1) throw WindowTooSmall("graded modules need a basis window N >= 1");
  if (gen_bound < 0) throw WindowTooSmall("generator bound must be non-negative");
  algebra.require_family("L");
  ModuleSpec out;
  out.graded = true;
  out.families = algebra.families;
  out.basis = {-window, window};
  out.generators = algebra.indices == IndexRange::zero_only ? Window{0, 0}
                                                            : Window{-gen_bound, gen_bound};
  return out;
}

void add_extension(ModuleSpec& out, const MPoly& dext) {
  const std::string& fam = out.params.extension_family;
  if (fam.empty() || dext.is_zero()) return;
  for (int i = out.generators.lo; i <= out.generators.hi; ++i) {
    for (int m = out.basis.lo; m <= out.basis.hi; ++m) out.set_action(fam, i, m, dext);
  }
}

}  // namespace

ModuleSpec build_graded_ab(const AlgebraSpec& algebra, const MPoly& alpha, const MPoly& beta,
                           const MPoly& dext, int window, int gen_bound) {
  ModuleSpec out = graded_shell(algebra, window, gen_bound);
  out.name = "Vab(" + algebra.name + ")";
  out.params = {ModuleKind::v_ab, algebra.name, alpha, beta, MPoly(), dext, std::nullopt,
                extension_family_of(algebra)};
  const MPoly f = kD + alpha * kL + beta;
  for (int i = out.generators.lo; i <= out.generators.hi; ++i) {
    for (int m = out.basis.lo; m <= out.basis.hi; ++m) out.set_action("L", i, m, f);
  }
  add_extension(out, dext);
  return out;
}

MPoly bitseq_action(int a_m, int a_target, const MPoly& beta) {
  if (a_m == 0 && a_target == 0) return kD + beta;
  if (a_m == 1 && a_target == 1) return kD + beta + kL;
  if (a_m == 0 && a_target == 1) return MPoly(1);
  return (kD + beta) * (kD + beta + kL);
}

ModuleSpec build_graded_Ab(const AlgebraSpec& algebra, const BitSeq& bits, const MPoly& beta,
                           const MPoly& dext, int window, int gen_bound) {
  ModuleSpec out = graded_shell(algebra, window, gen_bound);
  out.name = "VAb(" + algebra.name + ")";
  const Window needed{out.basis.lo + out.generators.lo, out.basis.hi + out.generators.hi};
  if (!bits.defined(needed.lo) || !bits.defined(needed.hi)) {
    throw WindowTooSmall("BitSeq must cover [" + std::to_string(needed.lo) + ", " +
                         std::to_string(needed.hi) + "]");
  }
  out.params = {ModuleKind::v_Ab, algebra.name, MPoly(), beta, MPoly(), dext, bits,
                extension_family_of(algebra)};
  for (int i = out.generators.lo; i <= out.generators.hi; ++i) {
    for (int m = out.basis.lo; m <= out.basis.hi; ++m) {
      out.set_action("L", i, m, bitseq_action(bits.at(m), bits.at(i + m), beta));
    }
  }
  add_extension(out, dext);
  return out;
}

MPoly module_residual(const std::vector<BracketTerm>& bracket, const AxiomInstance& inst) {
  MPoly lhs = substitute(inst.b_on_k, {{vars::d, kD + kL}, {vars::lambda, kM}}) * inst.a_on_jk;
  lhs -= substitute(inst.a_on_k, vars::d, kD + kM) * substitute(inst.b_on_ik, vars::lambda, kM);
  for (const auto& t : bracket) {
    auto it = inst.target_on_k.find(t.target);
    if (it == inst.target_on_k.end() || it->second.is_zero()) continue;
    lhs -= substitute(t.coeff, vars::d, -kL - kM) * substitute(it->second, vars::lambda, kL + kM);
  }
  return lhs;
}

ModuleAxiomReport check_module_axioms(const AlgebraSpec& algebra, const ModuleSpec& module) {
  for (const auto& f : algebra.families) {
    if (std::find(module.families.begin(), module.families.end(), f) == module.families.end()) {
      throw UnknownFamily("module " + module.name + " has no action of family " + f);
    }
  }
  ModuleAxiomReport report;
  const Window& g = module.generators;
  const Window& v = module.basis;
  for (const auto& a : algebra.families) {
    for (const auto& b : algebra.families) {
      const auto& bracket = algebra.entry(a, b);
      for (int i = g.lo; i <= g.hi; ++i) {
        for (int j = g.lo; j <= g.hi; ++j) {
          if (!g.contains(i + j)) continue;
          for (int k = v.lo; k <= v.hi; ++k) {
            const int jk = module.target(j, k);
            const int ik = module.target(i, k);
            if (!v.contains(jk) || !v.contains(ik)) continue;
            AxiomInstance inst{module.action(b, j, k), module.action(a, i, jk),
                               module.action(a, i, k), module.action(b, j, ik), {}};
            for (const auto& t : bracket) inst.target_on_k[t.target] = module.action(t.target, i + j, k);
            ++report.checked;
            MPoly r = module_residual(bracket, inst);
            if (!r.is_zero()) report.nonzero.push_back({a, b, i, j, k, std::move(r)});
          }
        }
      }
    }
  }
  return report;
}

RelationResiduals relations_oracle(const MPoly& a, const MPoly& b, const ModuleSpec& module) {
  auto coeff = [&](const std::string& fam, int i, int m) {
    if (std::find(module.families.begin(), module.families.end(), fam) == module.families.end()) {
      return MPoly();
    }
    return module.action(fam, i, m);
  };
  // p(d, l) -> p(d + s, t) and p(d, l) -> p(d, t)
  auto shifted = [](const MPoly& p, const MPoly& s, const MPoly& t) {
    return substitute(p, {{vars::d, kD + s}, {vars::lambda, t}});
  };
  auto at = [](const MPoly& p, const MPoly& t) { return substitute(p, vars::lambda, t); };

  const MPoly half(Scalar::fraction(1, 2));
  const MPoly lm_factor = (a - 1) * kL - kM + b;
  const MPoly ly_factor = half * a * kL - kM + half * b;

  RelationResiduals out;
  auto record = [&](const std::string& id, MPoly r) {
    ++out.checked;
    if (r.is_zero()) return;
    if (out.nonzero[id]++ == 0) out.first[id] = std::move(r);
  };

  const Window& g = module.generators;
  const Window& v = module.basis;
  for (int i = g.lo; i <= g.hi; ++i) {
    for (int j = g.lo; j <= g.hi; ++j) {
      if (!g.contains(i + j)) continue;
      for (int m = v.lo; m <= v.hi; ++m) {
        const int jm = module.target(j, m);
        const int im = module.target(i, m);
        if (!v.contains(jm) || !v.contains(im)) continue;
        const MPoly f_i_jm = coeff("L", i, jm), f_i_m = coeff("L", i, m);
        const MPoly g_j_m = coeff("M", j, m), g_j_im = coeff("M", j, im);
        const MPoly g_i_jm = coeff("M", i, jm), g_i_m = coeff("M", i, m);
        const MPoly g_ij_m = coeff("M", i + j, m);
        const MPoly h_j_m = coeff("Y", j, m), h_j_im = coeff("Y", j, im);
        const MPoly h_i_jm = coeff("Y", i, jm), h_i_m = coeff("Y", i, m);
        const MPoly h_ij_m = coeff("Y", i + j, m);

        record("LM", shifted(g_j_m, kL, kM) * f_i_jm - shifted(f_i_m, kM, kL) * at(g_j_im, kM) -
                         lm_factor * at(g_ij_m, kL + kM));
        record("LY", shifted(h_j_m, kL, kM) * f_i_jm - shifted(f_i_m, kM, kL) * at(h_j_im, kM) -
                         ly_factor * at(h_ij_m, kL + kM));
        record("YY", shifted(h_j_m, kL, kM) * h_i_jm - shifted(h_i_m, kM, kL) * at(h_j_im, kM) -
                         (kL - kM) * at(g_ij_m, kL + kM));
        record("MY", shifted(h_j_m, kL, kM) * g_i_jm - shifted(g_i_m, kM, kL) * at(h_j_im, kM));
        record("MM", shifted(g_j_m, kL, kM) * g_i_jm - shifted(g_i_m, kM, kL) * at(g_j_im, kM));
      }
    }
  }
  return out;
}

}  // namespace confalg
