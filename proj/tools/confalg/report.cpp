#include "confalg/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace confalg::cli {

namespace {

constexpr std::size_t kMaxResidualChars = 400;

std::string clip(std::string s) {
  if (s.size() > kMaxResidualChars) s = s.substr(0, kMaxResidualChars) + " ...";
  return s;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::zero: return "zero";
    case Status::nonzero: return "nonzero";
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::error: return "error";
    case Status::info: return "info";
  }
  return "info";
}

bool Report::ok() const { return failed() == 0; }

std::size_t Report::failed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.ok; }));
}

std::string sample_value(const MPoly& p) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::map<Var, Scalar> point;
  std::size_t k = 0;
  for (const auto& v : p.variables()) point.emplace(v, Scalar(primes[k++ % std::size(primes)]));
  return evaluate(p, point).to_string();
}

Record residual_record(std::string id, std::string claim, const MPoly& residual, bool expect_zero) {
  Record r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  r.status = residual.is_zero() ? Status::zero : Status::nonzero;
  r.ok = residual.is_zero() == expect_zero;
  if (!residual.is_zero()) {
    r.residual = clip(residual.to_string());
    r.sample = sample_value(residual);
  }
  return r;
}

Record residual_record(std::string id, std::string claim, const LambdaPoly& residual, bool expect_zero) {
  if (residual.is_zero()) return residual_record(std::move(id), std::move(claim), MPoly(), expect_zero);
  const auto& [g, p] = *residual.terms().begin();
  Record r = residual_record(std::move(id), std::move(claim), p, expect_zero);
  r.residual = clip(residual.to_string());
  r.details["first_generator"] = g.to_string();
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["config"] = r.config;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json x;
    x["id"] = rec.id;
    x["claim"] = rec.claim;
    x["inputs"] = rec.inputs;
    x["status"] = to_string(rec.status);
    x["ok"] = rec.ok;
    if (!rec.residual.empty()) x["residual"] = rec.residual;
    if (!rec.sample.empty()) x["residual_sample"] = rec.sample;
    if (!rec.details.empty()) x["details"] = rec.details;
    x["seconds"] = rec.seconds;
    records.push_back(std::move(x));
  }
  j["records"] = std::move(records);
  j["notes"] = r.notes;
  j["scope"] = r.scope;
  j["summary"] = {{"records", r.records.size()}, {"failed", r.failed()}, {"ok", r.ok()}};
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "confalg " << r.command << " (" << kSchemaVersion << ")\n";
  for (const auto& rec : r.records) {
    os << (rec.ok ? "  ok   " : "  FAIL ") << rec.id << ": " << to_string(rec.status);
    if (!rec.claim.empty()) os << " -- " << rec.claim;
    os << "  [" << std::fixed << std::setprecision(3) << rec.seconds << " s]\n";
    for (const auto& [k, v] : rec.details.items()) {
      os << "         " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (!rec.residual.empty()) os << "         residual " << rec.residual << "  (sample " << rec.sample << ")\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (!r.scope.empty()) os << "scope: " << r.scope << "\n";
  os << "summary: " << r.records.size() << " records, " << r.failed() << " failed\n";
  return os.str();
}

}  // namespace confalg::cli
