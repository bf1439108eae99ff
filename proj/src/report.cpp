#include "mcgstab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace mcgstab {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"elapsed_ms", c.elapsed_ms}});
  }
  nlohmann::json j = {{"command", r.command}, {"params", r.params}, {"checks", checks},
                      {"pass", r.pass()},     {"version", r.version}};
  if (!r.data.empty()) j["data"] = r.data;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.version = j.at("version").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back(Check{c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                             c.at("detail").get<std::string>(), c.at("elapsed_ms").get<double>()});
  }
  if (j.contains("data")) r.data = j.at("data");
  if (j.at("pass").get<bool>() != r.pass()) throw nlohmann::json::other_error::create(501, "pass flag disagrees with checks", &j);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  if (!r.params.empty()) os << ' ' << r.params.dump();
  os << '\n';
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  if (!r.data.empty()) os << "data: " << r.data.dump(2) << '\n';
  os << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, version " << r.version << ")\n";
  return os.str();
}

}  // namespace mcgstab
