#include <algorithm>
#include <sstream>

#include "confalg/der.hpp"
#include "text_util.hpp"
#include "unknowns.hpp"

namespace confalg {

namespace {

const MPoly kD(vars::d);
const MPoly kL(vars::lambda);
const MPoly kM(vars::mu);

}  // namespace

bool SeqC::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

LambdaPoly DerivationSpec::image(const Generator& g) const {
  if (std::find(families.begin(), families.end(), g.family) == families.end()) {
    throw UnknownFamily("derivation " + name + " has no family " + g.family);
  }
  if (!window.contains(g.index)) {
    throw WindowTooSmall("derivation " + name + " has no image for " + g.to_string());
  }
  auto it = images.find(g);
  return it == images.end() ? LambdaPoly() : it->second;
}

void DerivationSpec::set_image(const Generator& g, LambdaPoly p) {
  if (!window.contains(g.index)) throw WindowTooSmall("image index outside the derivation window");
  if (p.is_zero()) {
    images.erase(g);
  } else {
    images[g] = std::move(p);
  }
}

DerivationSpec combine(const Scalar& s1, const DerivationSpec& d1, const Scalar& s2, const DerivationSpec& d2) {
  if (d1.families != d2.families) throw Error("combine: derivations act on different families");
  DerivationSpec out;
  out.name = "combination";
  out.families = d1.families;
  out.window = {std::max(d1.window.lo, d2.window.lo), std::min(d1.window.hi, d2.window.hi)};
  if (out.window.lo > out.window.hi) throw WindowTooSmall("combine: windows do not overlap");
  if (d1.degree == d2.degree) out.degree = d1.degree;
  for (const auto& f : out.families) {
    for (int i = out.window.lo; i <= out.window.hi; ++i) {
      const Generator g{f, i};
      out.set_image(g, MPoly(s1) * d1.image(g) + MPoly(s2) * d2.image(g));
    }
  }
  return out;
}

Window derivation_window(const AlgebraSpec& algebra, int n) {
  if (algebra.indices == IndexRange::zero_only) return {0, 0};
  if (n < 1) throw WindowTooSmall("derivation window N must be at least 1");
  return {-n, n};
}

DerivationSpec ad(const AlgebraSpec& algebra, const Element& x, int window) {
  DerivationSpec out;
  out.name = "ad(" + x.to_string() + ")";
  out.families = algebra.families;
  out.window = derivation_window(algebra, window);
  std::optional<int> degree;
  bool homogeneous = !x.is_zero();
  for (const auto& [g, p] : x.terms()) {
    if (degree && *degree != g.index) homogeneous = false;
    degree = g.index;
  }
  if (homogeneous) out.degree = degree;
  for (const auto& f : algebra.families) {
    for (int i = out.window.lo; i <= out.window.hi; ++i) {
      const Generator g{f, i};
      out.set_image(g, bracket(algebra, x, Element::of(g)));
    }
  }
  return out;
}

DerivationSpec d_vec(const AlgebraSpec& algebra, const SeqC& a, int window) {
  algebra.require_family("L");
  algebra.require_family("M");
  DerivationSpec out;
  out.name = "d_vec";
  out.families = algebra.families;
  out.window = derivation_window(algebra, window);
  if (a.entries.size() == 1) out.degree = a.entries.begin()->first;
  for (int i = out.window.lo; i <= out.window.hi; ++i) {
    LambdaPoly image;
    for (const auto& [c, value] : a.entries) image.add(Generator{"M", i + c}, MPoly(value));
    out.set_image(Generator{"L", i}, std::move(image));
  }
  return out;
}

LambdaPoly apply_derivation(const DerivationSpec& der, const GenTerms& x) {
  LambdaPoly out;
  for (const auto& [g, p] : x) {
    const MPoly shifted = shift_outer(p, kL);
    const LambdaPoly image = der.image(g);
    for (const auto& [target, q] : image.terms()) out.add(target, shifted * q);
  }
  return out;
}

LambdaPoly leibniz_residual(const AlgebraSpec& algebra, const DerivationSpec& der, const Generator& x,
                            const Generator& y) {
  const GenTerms gx{{x, MPoly(1)}};
  const GenTerms gy{{y, MPoly(1)}};
  LambdaPoly r = apply_derivation(der, bracket_at(algebra, gx, gy, kM).terms());
  r -= bracket_at(algebra, der.image(x).terms(), gy, kL + kM);
  r -= bracket_at(algebra, gx, der.image(y).terms(), kM);
  return r;
}

DerivationReport check_derivation(const AlgebraSpec& algebra, const DerivationSpec& der) {
  if (der.window.lo > der.window.hi) throw WindowTooSmall("check_derivation: empty window");
  for (const auto& f : algebra.families) {
    if (std::find(der.families.begin(), der.families.end(), f) == der.families.end()) {
      throw UnknownFamily("derivation " + der.name + " has no family " + f);
    }
  }
  DerivationReport report;
  const Window& w = der.window;
  for (const auto& fx : algebra.families) {
    for (const auto& fy : algebra.families) {
      for (int i = w.lo; i <= w.hi; ++i) {
        for (int j = w.lo; j <= w.hi; ++j) {
          if (!w.contains(i + j)) continue;
          const Generator x{fx, i};
          const Generator y{fy, j};
          ++report.checked;
          LambdaPoly r = leibniz_residual(algebra, der, x, y);
          if (!r.is_zero()) report.nonzero.push_back({x, y, std::move(r)});
        }
      }
    }
  }
  return report;
}

Decomposition decompose(const AlgebraSpec& algebra, const DerivationSpec& der, int degree, unsigned degree_bound) {
  if (degree_bound < 1) throw Error("decompose: degree bound must be at least 1");
  const int n = std::max(-der.window.lo, der.window.hi);
  Decomposition out;
  out.dvec_allowed = algebra.has_family("L") && algebra.has_family("M") &&
                     check_derivation(algebra, d_vec(algebra, SeqC::delta(degree), std::max(n, 1))).all_zero();

  detail::UnknownPool pool("u");
  GenTerms x;
  for (const auto& f : algebra.families) {
    MPoly p;
    for (unsigned k = 0; k < degree_bound; ++k) p += MPoly(pool.fresh()) * MPoly(1, Monomial::of(vars::d, k));
    x.emplace(Generator{f, degree}, p);
  }
  std::optional<Var> q;
  if (out.dvec_allowed) q = pool.fresh();

  const VarSet spectral{vars::d, vars::lambda};
  SparseEliminator elim(pool.size());
  for (const auto& f : algebra.families) {
    for (int i = der.window.lo; i <= der.window.hi; ++i) {
      const Generator g{f, i};
      const GenTerms gy{{g, MPoly(1)}};
      LambdaPoly diff = der.image(g) - bracket_at(algebra, x, gy, kL);
      if (q && f == "L") diff.add(Generator{"M", i + degree}, -MPoly(*q));
      for (const auto& [target, poly] : diff.terms()) {
        detail::add_coefficient_rows(elim, poly, spectral, pool.columns());
      }
    }
  }
  if (elim.inconsistent()) throw NotDecomposable("derivation is not ad(x) + q d_vec at these bounds");
  LinearSolution sol = elim.solve();
  if (!sol.kernel_basis.empty()) throw Error("decompose: the decomposition is not unique at this window");
  std::map<Var, MPoly> values;
  for (std::size_t k = 0; k < pool.size(); ++k) values.emplace(pool.vars()[k], sol.solution[k]);
  for (const auto& [g, p] : x) out.x.add(g, substitute(p, values));
  if (q) {
    const MPoly qv = values.at(*q);
    if (!qv.is_constant()) throw Error("decompose: d_vec coefficient is not a scalar");
    out.q = qv.constant_value();
  }
  return out;
}

// Line-oriented text form, in the style of the module documents:
//
//   derivation d_vec
//   families L M Y
//   window -2 2
//   degree 0
//   image L 1 -> M 1 : 1
std::string to_text(const DerivationSpec& der) {
  std::ostringstream os;
  os << "derivation " << der.name << "\n";
  os << "families";
  for (const auto& f : der.families) os << " " << f;
  os << "\n";
  os << "window " << der.window.lo << " " << der.window.hi << "\n";
  if (der.degree) os << "degree " << *der.degree << "\n";
  for (const auto& [g, image] : der.images) {
    for (const auto& [target, poly] : image.terms()) {
      os << "image " << g.family << " " << g.index << " -> " << target.family << " " << target.index << " : "
         << poly.to_string() << "\n";
    }
  }
  return os.str();
}

DerivationSpec derivation_from_text(std::string_view text) {
  DerivationSpec der;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  auto fail = [&](const std::string& what) {
    throw ParseError("derivation document line " + std::to_string(line_no) + ": " + what);
  };
  std::map<Generator, LambdaPoly> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::content_of(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (keyword == "derivation") {
      std::string rest;
      std::getline(words, rest);
      der.name = detail::trim(rest);
      have_header = true;
    } else if (keyword == "families") {
      std::string f;
      while (words >> f) der.families.push_back(f);
    } else if (keyword == "window") {
      if (!(words >> der.window.lo >> der.window.hi) || der.window.lo > der.window.hi) {
        fail("expected 'window lo hi' with lo <= hi");
      }
    } else if (keyword == "degree") {
      int c = 0;
      if (!(words >> c)) fail("expected an integer degree");
      der.degree = c;
    } else if (keyword == "image") {
      std::string fam, arrow, target, colon;
      int i = 0, j = 0;
      if (!(words >> fam >> i >> arrow >> target >> j >> colon) || arrow != "->" || colon != ":") {
        fail("expected 'image F i -> G j : poly'");
      }
      std::string poly;
      std::getline(words, poly);
      try {
        pending[Generator{fam, i}].add(Generator{target, j}, MPoly::parse(poly));
      } catch (const ParseError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!have_header) throw ParseError("derivation document: missing 'derivation' line");
  for (auto& [g, image] : pending) {
    if (std::find(der.families.begin(), der.families.end(), g.family) == der.families.end()) {
      throw ParseError("derivation document: unknown family " + g.family);
    }
    try {
      der.set_image(g, std::move(image));
    } catch (const Error& e) {
      throw ParseError(std::string("derivation document: ") + e.what());
    }
  }
  return der;
}

}  // namespace confalg
