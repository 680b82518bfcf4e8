// Line-oriented text form of AlgebraSpec:
//
//   algebra csv
//   families L M Y
//   indices all
//   bracket L L -> L : d + 2*l
//
// One "bracket" line per summand; '#' starts a comment.

#include <sstream>

#include "confalg/lca.hpp"
#include "text_util.hpp"

namespace confalg {

std::string to_text(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "algebra " << spec.name << "\n";
  os << "families";
  for (const auto& f : spec.families) os << " " << f;
  os << "\n";
  os << "indices " << (spec.indices == IndexRange::all_integers ? "all" : "zero") << "\n";
  // Emit pairs in family order so the document is deterministic.
  for (const auto& a : spec.families) {
    for (const auto& b : spec.families) {
      for (const auto& t : spec.entry(a, b)) {
        os << "bracket " << a << " " << b << " -> " << t.target << " : " << t.coeff.to_string()
           << "\n";
      }
    }
  }
  return os.str();
}

AlgebraSpec algebra_from_text(std::string_view text) {
  AlgebraSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  std::map<std::pair<std::string, std::string>, std::vector<BracketTerm>> pending;
  auto fail = [&](const std::string& what) {
    throw ParseError("algebra document line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::content_of(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (keyword == "algebra") {
      words >> spec.name;
      have_header = true;
    } else if (keyword == "families") {
      std::string f;
      while (words >> f) spec.families.push_back(f);
    } else if (keyword == "indices") {
      std::string mode;
      words >> mode;
      if (mode == "all") {
        spec.indices = IndexRange::all_integers;
      } else if (mode == "zero") {
        spec.indices = IndexRange::zero_only;
      } else {
        fail("unknown index mode '" + mode + "'");
      }
    } else if (keyword == "bracket") {
      std::string a, b, arrow, target, colon;
      words >> a >> b >> arrow >> target >> colon;
      if (arrow != "->" || colon != ":") fail("expected 'bracket A B -> T : poly'");
      std::string poly_text;
      std::getline(words, poly_text);
      try {
        pending[{a, b}].push_back({target, MPoly::parse(poly_text)});
      } catch (const ParseError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!have_header) throw ParseError("algebra document: missing 'algebra' line");
  for (auto& [pair, terms] : pending) {
    try {
      spec.set_bracket(pair.first, pair.second, std::move(terms));
    } catch (const UnknownFamily& e) {
      throw ParseError(std::string("algebra document: ") + e.what());
    }
  }
  return spec;
}

}  // namespace confalg
