#pragma once

// Check reports: JSON is the contract, text is rendered from it.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mcgstab {

inline constexpr const char* kVersion = "0.1.0";

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
  bool operator==(const Check&) const = default;
};

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  std::string version = kVersion;

  bool pass() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

nlohmann::json to_json(const Report& r);
/// Throws nlohmann::json::exception on schema violations.
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);

/// Runs `body`, which returns {pass, detail}, and records wall time.
template <class F>
Check timed_check(std::string name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::pair<bool, std::string> res = body();
  const auto t1 = std::chrono::steady_clock::now();
  return Check{std::move(name), res.first, std::move(res.second),
               std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

}  // namespace mcgstab
