#include "dbl/report.hpp"

#include <sstream>

#include "json.hpp"

namespace dbl {

void Report::add(const std::string& name, bool pass, const std::string& details) {
  checks.push_back(CheckRecord{name, pass ? "pass" : "fail", details});
}

void Report::skip(const std::string& name, const std::string& reason) {
  checks.push_back(CheckRecord{name, "skip", reason});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

bool Report::all_ok() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string Report::overall() const { return all_ok() ? "pass" : "fail"; }

int Report::exit_code() const { return all_ok() ? 0 : 1; }

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "dblab";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    jc["details"] = c.details;
    j["checks"].push_back(jc);
  }
  j["overall"] = overall();
  return j.dump(2) + "\n";
}

std::string Report::to_console() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << '[' << c.status << "] " << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    os << '\n';
  }
  os << "overall: " << overall() << '\n';
  return os.str();
}

}  // namespace dbl
