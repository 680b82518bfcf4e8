#include <cstdlib>
#include <iostream>
#include <string>

#include "confalg/suite.hpp"

int main(int argc, char** argv) {
  confalg::SuiteOptions options;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--no-enforce-budget") {
      options.enforce_budget = false;
    } else if (arg == "--seed" && k + 1 < argc) {
      options.seed = std::strtoull(argv[++k], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--seed N] [--no-enforce-budget]\n";
      return 2;
    }
  }

  bool all = true;
  for (const auto& info : confalg::criteria()) {
    const confalg::CriterionResult r = confalg::run_criterion(info.id, options);
    std::cout << r.line() << std::endl;
    all = all && r.pass();
  }
  std::cout << confalg::suite_scope(options) << "\n";
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all ? 0 : 1;
}
