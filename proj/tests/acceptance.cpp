// Acceptance run: one line per criterion.
//
//   acceptance [--golden-dir DIR] [--seed N] [--expect-red 4,...]
//
// Without --expect-red the exit status is 0 iff every criterion passes.  With
// it, the status is 0 iff the red set is exactly the listed one, so a known
// and analysed failure stays visible without masking new ones.

#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcgstab/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  mcgstab::SuiteOptions opt;
  std::vector<int> expect_red;
  app.add_option("--golden-dir", opt.golden_dir);
  app.add_option("--seed", opt.seed);
  app.add_option("--expect-red", expect_red)->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const auto criteria = mcgstab::run_acceptance(opt);
  std::set<int> red;
  for (const auto& c : criteria) {
    std::cout << "criterion " << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << ": " << c.title << " [" << std::fixed
              << std::setprecision(1) << c.elapsed_ms << " ms] -- " << c.detail << '\n';
    if (!c.pass) red.insert(c.id);
  }
  const auto props = mcgstab::random_property_checks(opt.seed);
  bool props_ok = true;
  for (const auto& p : props) {
    std::cout << "property " << (p.pass ? "PASS" : "FAIL") << ": " << p.name << " (" << p.detail << ")\n";
    props_ok = props_ok && p.pass;
  }
  const std::set<int> expected(expect_red.begin(), expect_red.end());
  std::cout << "summary: " << criteria.size() - red.size() << "/" << criteria.size() << " criteria pass";
  if (!red.empty()) {
    std::cout << "; red:";
    for (int id : red) std::cout << ' ' << id;
  }
  if (!expected.empty()) std::cout << "; expected red set " << (red == expected ? "matches" : "DOES NOT match");
  std::cout << '\n';
  return red == expected && props_ok ? 0 : 1;
}
