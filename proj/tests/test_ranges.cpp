#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mcgstab/ranges.hpp"

using namespace mcgstab;

namespace {

long long floor_real(double x) { return static_cast<long long>(std::floor(x)); }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("floor division") {
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(-3, 3) == -1);
  CHECK(floor_div(-4, 3) == -2);
  for (long long a = -20; a <= 20; ++a) CHECK(floor_div(a, 3) == floor_real(a / 3.0));
}

TEST_CASE("theorem A ranges") {
  auto [m1, m2] = range_theorem_A(3);
  CHECK(m1.iso == 2);
  CHECK(m1.injective_always);
  CHECK(m2.epi == 2);
  CHECK(m2.iso == 1);
  CHECK(range_theorem_A(0).second.iso < 0);
  CHECK(range_theorem_A(10).first.iso == 6);
  CHECK_THROWS_AS(range_theorem_A(-1), std::invalid_argument);
}

TEST_CASE("theorem B ranges") {
  auto [m1, m2] = range_theorem_B(6, 1, false);
  CHECK(m1.epi == 2);
  CHECK(m1.iso == 1);
  auto [s1, s2] = range_theorem_B(6, 1, true);
  CHECK(s1.epi == 3);
  CHECK(s1.iso == 2);
  (void)m2;
  (void)s2;
}

TEST_CASE("stability with twisted coefficients") {
  const auto c = range_stab(9, 0, 0, StabKind::constant);
  CHECK(c.epi == 3);
  CHECK(c.iso == 2);
  const auto d = range_stab(12, 1, 0, StabKind::degree);
  CHECK(d.epi == 2);
  CHECK(d.iso == 1);
  const auto s = range_stab(12, 1, 0, StabKind::split);
  CHECK(s.epi == 3);
  CHECK(s.iso == 2);
  CHECK_THROWS_AS(range_stab(3, 1, 3, StabKind::degree), OutOfValidity);
  CHECK_NOTHROW(range_stab(3, 0, 0, StabKind::constant));
  CHECK(parse_stab_kind("split-degree") == StabKind::split);
  CHECK_THROWS_AS(parse_stab_kind("weird"), std::invalid_argument);
}

TEST_CASE("connectivity bound") {
  CHECK(connectivity_bound(1, 2) == -1);
  CHECK(connectivity_bound(0, 1) == -2);
  CHECK(connectivity_bound(4, 1) == 1);
  CHECK_THROWS_AS(connectivity_bound(2, 3), std::invalid_argument);
}

TEST_CASE("property: ranges agree with rational floors") {
  for (long long g = 0; g <= 40; ++g) {
    auto [a1, a2] = range_theorem_A(g);
    CHECK(a1.epi == floor_real(2.0 * g / 3));
    CHECK(a2.epi == floor_real((2.0 * g + 1) / 3));
    CHECK(a2.iso == floor_real((2.0 * g - 2) / 3));
    for (long long k = 0; k <= 4; ++k) {
      auto [b1, b2] = range_theorem_B(g, k, false);
      CHECK(b1.epi == floor_real((2.0 * g - 3 * k - 2) / 3));
      CHECK(b1.iso == floor_real((2.0 * g - 3 * k - 5) / 3));
      CHECK(b2.epi == floor_real((2.0 * g - 3 * k - 1) / 3));
      CHECK(b2.iso == floor_real((2.0 * g - 3 * k - 4) / 3));
      auto [c1, c2] = range_theorem_B(g, k, true);
      CHECK(c1.epi == floor_real((2.0 * g - k - 2) / 3));
      CHECK(c2.iso == floor_real((2.0 * g - k - 4) / 3));
      CHECK(b1.iso <= b1.epi);
      CHECK(c1.epi >= b1.epi);
    }
  }
}

TEST_CASE("property: composing the theorem A maps gives genus stabilization") {
  for (long long g = 0; g <= 40; ++g) {
    auto [m1, m2] = range_theorem_A(g);
    CHECK(std::min(m1.epi, m2.epi) == floor_div(2 * g, 3));
    CHECK(std::min(m1.iso, m2.iso) == floor_div(2 * g - 2, 3));
  }
}

TEST_CASE("property: stab ranges are monotone in n") {
  for (StabKind kind : {StabKind::constant, StabKind::degree, StabKind::split}) {
    for (long long k = 0; k <= 3; ++k) {
      for (long long n = 2; n <= 30; ++n) {
        const auto a = range_stab(n - 1, k, 0, kind), b = range_stab(n, k, 0, kind);
        CHECK(a.epi <= b.epi);
        CHECK(a.iso <= b.iso);
      }
    }
  }
}

TEST_CASE("tables match the golden files") {
  const std::string dir = MCGSTAB_TEST_DATA "/../golden/";
  CHECK(table_theorem_A(12) == slurp(dir + "theorem_A.csv"));
  CHECK(table_theorem_B(12, 3) == slurp(dir + "theorem_B.csv"));
  CHECK(table_stab(24, 3) == slurp(dir + "stab.csv"));
}
