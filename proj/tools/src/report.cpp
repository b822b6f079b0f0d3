#include "zmc_cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zmc::cli {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

void Report::add_below(const std::string& name, double value, double tol) {
  add({name, value <= tol, number_or_null(value), tol});
}

void Report::add_flag(const std::string& name, bool pass, Json value) {
  add({name, pass, std::move(value), nullptr});
}

bool Report::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command_;
  out["params"] = params_;
  Json checks = Json::array();
  for (const auto& c : checks_)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tol", c.tol}});
  out["checks"] = std::move(checks);
  out["pass"] = pass();
  for (const auto& [key, value] : extras_.items()) out[key] = value;
  return out;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace zmc::cli
