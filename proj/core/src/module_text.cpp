// Line-oriented text form of ModuleSpec:
//
//   module Vab(csv)
//   kind Vab
//   algebra csv
//   graded 1
//   generators -2 2
//   basis -3 3
//   families L M Y
//   alpha 2
//   beta 1
//   c 0
//   dext 0
//   extension Y
//   bits -5 01101001011
//   action L -2 -3 : d + 2*l + 1
//
// The action lines carry the full table; the other lines record how it was
// built.

#include <sstream>

#include "confalg/module.hpp"
#include "text_util.hpp"

namespace confalg {

std::string to_text(const ModuleSpec& module) {
  std::ostringstream os;
  const ModuleParams& p = module.params;
  os << "module " << module.name << "\n";
  os << "kind " << to_string(p.kind) << "\n";
  if (!p.algebra.empty()) os << "algebra " << p.algebra << "\n";
  os << "graded " << (module.graded ? 1 : 0) << "\n";
  os << "generators " << module.generators.lo << " " << module.generators.hi << "\n";
  os << "basis " << module.basis.lo << " " << module.basis.hi << "\n";
  os << "families";
  for (const auto& f : module.families) os << " " << f;
  os << "\n";
  os << "alpha " << p.alpha.to_string() << "\n";
  os << "beta " << p.beta.to_string() << "\n";
  os << "c " << p.c.to_string() << "\n";
  os << "dext " << p.dext.to_string() << "\n";
  if (!p.extension_family.empty()) os << "extension " << p.extension_family << "\n";
  if (p.bits) os << "bits " << p.bits->window().lo << " " << p.bits->to_string() << "\n";
  for (const auto& [key, poly] : module.table) {
    const auto& [fam, i, m] = key;
    os << "action " << fam << " " << i << " " << m << " : " << poly.to_string() << "\n";
  }
  return os.str();
}

ModuleSpec module_from_text(std::string_view text) {
  ModuleSpec module;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  auto fail = [&](const std::string& what) {
    throw ParseError("module document line " + std::to_string(line_no) + ": " + what);
  };
  auto rest_of = [](std::istringstream& words) {
    std::string rest;
    std::getline(words, rest);
    return detail::trim(rest);
  };
  auto window_of = [&](std::istringstream& words) {
    Window w;
    if (!(words >> w.lo >> w.hi) || w.lo > w.hi) fail("expected 'lo hi' with lo <= hi");
    return w;
  };
  std::vector<std::tuple<std::string, int, int, MPoly>> actions;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::content_of(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    try {
      if (keyword == "module") {
        module.name = rest_of(words);
        have_header = true;
      } else if (keyword == "kind") {
        std::string k;
        words >> k;
        module.params.kind = module_kind_from_string(k);
      } else if (keyword == "algebra") {
        words >> module.params.algebra;
      } else if (keyword == "graded") {
        int g = 0;
        if (!(words >> g) || (g != 0 && g != 1)) fail("graded must be 0 or 1");
        module.graded = g == 1;
      } else if (keyword == "generators") {
        module.generators = window_of(words);
      } else if (keyword == "basis") {
        module.basis = window_of(words);
      } else if (keyword == "families") {
        std::string f;
        while (words >> f) module.families.push_back(f);
      } else if (keyword == "alpha") {
        module.params.alpha = MPoly::parse(rest_of(words));
      } else if (keyword == "beta") {
        module.params.beta = MPoly::parse(rest_of(words));
      } else if (keyword == "c") {
        module.params.c = MPoly::parse(rest_of(words));
      } else if (keyword == "dext") {
        module.params.dext = MPoly::parse(rest_of(words));
      } else if (keyword == "extension") {
        words >> module.params.extension_family;
      } else if (keyword == "bits") {
        int lo = 0;
        std::string bits;
        if (!(words >> lo >> bits)) fail("expected 'bits lo 0101...'");
        module.params.bits = BitSeq::from_string(lo, bits);
      } else if (keyword == "action") {
        std::string fam, colon;
        int i = 0, m = 0;
        if (!(words >> fam >> i >> m >> colon) || colon != ":") {
          fail("expected 'action F i m : poly'");
        }
        actions.emplace_back(fam, i, m, MPoly::parse(rest_of(words)));
      } else {
        fail("unknown keyword '" + keyword + "'");
      }
    } catch (const ParseError& e) {
      if (std::string_view(e.what()).starts_with("module document")) throw;
      fail(e.what());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw ParseError("module document: missing 'module' line");
  if (!module.graded && module.basis != Window{0, 0}) {
    throw ParseError("module document: rank-one modules must have basis 0 0");
  }
  for (auto& [fam, i, m, poly] : actions) {
    try {
      module.set_action(fam, i, m, std::move(poly));
    } catch (const Error& e) {
      throw ParseError(std::string("module document: ") + e.what());
    }
  }
  return module;
}

}  // namespace confalg
