#ifndef CONFALG_TOOLS_REPORT_HPP
#define CONFALG_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "confalg/lca.hpp"

namespace confalg::cli {

inline constexpr const char* kSchemaVersion = "confalg-report/1";

enum class Status { zero, nonzero, match, mismatch, error, info };

std::string to_string(Status s);

struct Record {
  std::string id;
  std::string claim;  // the statement being checked, in plain words
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  Status status = Status::info;
  bool ok = true;
  std::string residual;  // canonical text of the first nonzero residual
  std::string sample;    // residual evaluated at the sample point
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double seconds = 0;
};

struct Report {
  std::string command;
  nlohmann::ordered_json config;
  std::vector<Record> records;
  std::vector<std::string> notes;
  std::string scope;

  bool ok() const;
  std::size_t failed() const;
};

/// Residual record: ok iff `residual` is zero (or nonzero when
/// `expect_zero` is false).
Record residual_record(std::string id, std::string claim, const MPoly& residual, bool expect_zero = true);
Record residual_record(std::string id, std::string claim, const LambdaPoly& residual, bool expect_zero = true);

/// Evaluates every variable at 2, 3, 5, 7, ... in variable order.
std::string sample_value(const MPoly& p);

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace confalg::cli

#endif  // CONFALG_TOOLS_REPORT_HPP
