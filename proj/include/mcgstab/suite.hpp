#pragma once

// Verification suites shared by the mcgstab tool and the acceptance run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgstab/report.hpp"

namespace mcgstab {

Report run_surface(int m);
Report run_cut(int g, int r, int nu, int p);
Report run_verify_braid(int mmax);
Report run_verify_yb();
Report run_verify_block(int max_total);
Report run_refute_braiding(int K);
Report run_search_curve(int m, int max_len);

struct DestabRequest {
  std::string family = "sym";
  std::string family_file;  // overrides `family` when set
  int n = 3;
  int a = 0;
  std::optional<int> pmax;  // defaults to n - 1
  bool homology = false;
};
Report run_destab(const DestabRequest& req);
Report run_homology(DestabRequest req);

Report run_coeff(int k, int n, bool check_all, int maxdepth);

struct RangesRequest {
  std::string theorem = "A";  // A, B, stab, connectivity
  long long g = 0, k = 0, n = 0, N = 0;
  int nu = 1;
  bool split = false;
  std::string kind = "constant";
};
Report run_ranges(const RangesRequest& req);

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::string golden_dir;  // empty: the source-tree default
};

std::string default_golden_dir();
std::vector<Criterion> run_acceptance(const SuiteOptions& opt);
/// Seeded randomized sweeps: homomorphism and centralizer properties.
std::vector<Check> random_property_checks(std::uint64_t seed);
Report run_all(const SuiteOptions& opt);

/// n! * sum_{j<=n} (-1)^j / j!, by inclusion-exclusion.
long long derangements(int n);

}  // namespace mcgstab
