#pragma once

// Machine-readable result of one CLI command:
//   {command, params, checks: [{name, pass, value, tol}], pass, ...extras}

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace zmc::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  Json value;  // measured quantity; null when not numeric
  Json tol;    // threshold it was compared against; null for boolean checks
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& params() { return params_; }
  /// Extra top-level fields, emitted after "pass" in insertion order.
  Json& extras() { return extras_; }

  void add(Check check) { checks_.push_back(std::move(check)); }
  /// value <= tol passes. NaN never passes.
  void add_below(const std::string& name, double value, double tol);
  void add_flag(const std::string& name, bool pass, Json value = nullptr);

  const std::vector<Check>& checks() const { return checks_; }
  /// True iff every check passes (vacuously true with no checks).
  bool pass() const;

  Json to_json() const;
  /// Two-space indented JSON plus a trailing newline.
  std::string dump() const;

 private:
  std::string command_;
  Json params_ = Json::object();
  Json extras_ = Json::object();
  std::vector<Check> checks_;
};

/// %.17g, the format used for every CSV number.
std::string format_number(double x);

}  // namespace zmc::cli
