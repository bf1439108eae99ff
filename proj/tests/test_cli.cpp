#include "doctest.h"
#include "mcgstab/report.hpp"
#include "mcgstab/suite.hpp"

using namespace mcgstab;

namespace {

long long derangements_brute(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  long long count = 0;
  do {
    bool fixed = false;
    for (int i = 0; i < n; ++i) fixed = fixed || p[static_cast<std::size_t>(i)] == i;
    count += !fixed;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Report without_timings(Report r) {
  for (auto& c : r.checks) c.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("report JSON round trip") {
  Report r;
  r.command = "demo";
  r.params = {{"m", 3}};
  r.add(Check{"first", true, "ok", 1.5});
  r.add(Check{"second", false, "", 0.0});
  r.data = {{"x", {1, 2}}};
  const auto j = to_json(r);
  CHECK(j.at("pass") == false);
  CHECK(j.at("version") == kVersion);
  const Report back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.command == r.command);
  CHECK(back.params == r.params);
  CHECK(back.checks == r.checks);
  CHECK(back.data == r.data);
  CHECK(to_json(back) == j);
}

TEST_CASE("report schema violations") {
  auto j = to_json(run_verify_yb());
  j["pass"] = false;
  CHECK_THROWS_AS(report_from_json(j), nlohmann::json::exception);
  auto k = to_json(run_verify_yb());
  k.erase("checks");
  CHECK_THROWS_AS(report_from_json(k), nlohmann::json::exception);
}

TEST_CASE("text rendering") {
  const std::string t = render_text(run_verify_braid(5));
  CHECK(t.find("PASS") != std::string::npos);
  CHECK(t.find("braid relations m=5") != std::string::npos);
}

TEST_CASE("subcommand reports") {
  CHECK(run_verify_braid(5).pass());
  CHECK(run_surface(21).data["oracle"]["genus"] == 10);
  const Report cut = run_cut(3, 1, 1, 2);
  CHECK(cut.data.contains("formula"));
  CHECK(cut.data.contains("oracle"));
  const Report a = run_ranges({"A", 3});
  CHECK(a.data["map2"]["epi"] == 2);
  CHECK(a.data["table"].get<std::string>().find("epi") != std::string::npos);
  RangesRequest bad;
  bad.theorem = "Z";
  CHECK_THROWS_AS(run_ranges(bad), std::invalid_argument);
  DestabRequest d;
  d.family = "sym";
  d.n = 5;
  const Report h = run_homology(d);
  CHECK(h.pass());
  CHECK(h.data["connectivity_homological"] == 3);
  CHECK(h.data["degrees"].back()["betti"] == 44);
}

TEST_CASE("derangement counts") {
  for (int n = 0; n <= 8; ++n) CHECK(derangements(n) == derangements_brute(n));
}

TEST_CASE("the full suite is deterministic for a fixed seed") {
  const Report a = without_timings(run_all({5, ""}));
  const Report b = without_timings(run_all({5, ""}));
  CHECK(to_json(a) == to_json(b));
  // Criterion 4 is the only red one.
  for (const auto& c : a.checks) CHECK(c.pass == (c.name.rfind("criterion 4:", 0) != 0));
}
