#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dbl {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckRecord {
  std::string name;
  std::string status;  // pass | fail | skip
  std::string details;
};

// Machine-readable run record.  No timestamps and no timings in the
// serialised form: reports are byte-identical across repeated runs.
struct Report {
  std::string command;
  std::vector<CheckRecord> checks;

  void add(const std::string& name, bool pass, const std::string& details = "");
  void skip(const std::string& name, const std::string& reason);
  void merge(const Report& other);

  bool all_ok() const;         // no fail entries
  std::string overall() const; // "pass" or "fail"
  int exit_code() const;       // 0 = pass/skip, 1 = failure

  std::string to_json() const;
  std::string to_console() const;
};

}  // namespace dbl
