#ifndef CONFALG_TOOLS_COMMANDS_HPP
#define CONFALG_TOOLS_COMMANDS_HPP

#include <string>
#include <vector>

#include "confalg/config.hpp"
#include "confalg/report.hpp"

namespace confalg::cli {

Report cmd_verify_axioms(const RunConfig& config);
Report cmd_solve_construction(const RunConfig& config);
Report cmd_check_module(const RunConfig& config);
Report cmd_classify(const RunConfig& config);
Report cmd_derivations(const RunConfig& config);
Report cmd_suite(const RunConfig& config);

const std::vector<std::string>& command_names();

/// Dispatches on a name from command_names().
Report run_command(const std::string& name, const RunConfig& config);

}  // namespace confalg::cli

#endif  // CONFALG_TOOLS_COMMANDS_HPP
