#include "doctest.h"
#include "mcgstab/surface.hpp"

using namespace mcgstab;

TEST_CASE("X_m examples") {
  CHECK(invariants(build_Xm(1)) == SurfaceInvariants{0, 1, 1, 1, 0});
  const auto cyl = invariants(build_Xm(2));
  CHECK(cyl.genus == 0);
  CHECK(cyl.boundary == 2);
  const auto x5 = invariants(build_Xm(5));
  CHECK(x5.genus == 2);
  CHECK(x5.boundary == 1);
  CHECK(invariants(glue_disk(disk())) == invariants(build_Xm(2)));
}

TEST_CASE("surface type closed form") {
  CHECK(surface_type(4) == SurfaceType{1, 2});
  CHECK(surface_type(1) == SurfaceType{0, 1});
  CHECK(surface_type(21) == SurfaceType{10, 1});
  for (int g = 0; g <= 6; ++g) {
    CHECK(surface_type(2 * g + 1) == SurfaceType{g, 1});
    CHECK(surface_type(2 * g + 2) == SurfaceType{g, 2});
  }
}

TEST_CASE("property: face tracing agrees with the closed form, m <= 30") {
  for (int m = 1; m <= 30; ++m) {
    const auto inv = invariants(build_Xm(m));
    CHECK(SurfaceType{inv.genus, inv.boundary} == surface_type(m));
    // chi = V - E + F for the closed-up surface minus one per boundary circle.
    CHECK(inv.euler == 2 - 2 * inv.genus - inv.boundary);
    CHECK(inv.euler == 2 - m);
  }
}

TEST_CASE("property: gluing a disk lowers chi by one and flips nu") {
  CombSurface s = disk();
  for (int m = 1; m <= 20; ++m) {
    const auto before = invariants(s);
    s = glue_disk(s);
    const auto after = invariants(s);
    CHECK(after.euler == before.euler - 1);
    CHECK(after.nu == 3 - before.nu);
  }
}

TEST_CASE("cut standard simplex") {
  for (int g = 1; g <= 4; ++g) {
    const auto a = cut_standard_simplex(disk(), 2 * g + 1, 0);
    CHECK(a.genus == invariants(build_Xm(2 * g + 1)).genus);
    CHECK(a.boundary == invariants(build_Xm(2 * g + 1)).boundary);
  }
  const auto b = cut_standard_simplex(disk(), 4, 0);
  CHECK(b.genus == 1);
  CHECK(b.boundary == 2);
  CHECK_THROWS_AS(cut_standard_simplex(disk(), 2, 2), TooManyArcs);
}

TEST_CASE("cut formula") {
  for (int g = 1; g <= 5; ++g) {
    const auto a = cut_formula(g, 1, 1, 0);
    CHECK(a.formula_genus == g - 1);
    CHECK(a.oracle_genus == g - 1);
    CHECK(a.oracle_boundary == 2);
    const auto b = cut_formula(g, 2, 2, 0);
    CHECK(b.oracle_genus == g);
    CHECK(b.oracle_boundary == 1);
  }
  for (int p = 1; p <= 5; p += 2) {
    const auto c = cut_formula(3, 2, 1, p);
    CHECK(c.oracle_boundary == 2);
    CHECK(c.formula_boundary == 2);
    CHECK(c.genus_agrees());
  }
  CHECK_THROWS_AS(cut_formula(0, 1, 1, 3), Unrealizable);
  CHECK_THROWS_AS(cut_formula(2, 1, 2, 0), Unrealizable);
}

TEST_CASE("property: oracle boundary after a cut is r - (-1)^nu for p even") {
  for (int g = 0; g <= 6; ++g) {
    for (int r = 1; r <= 3; ++r) {
      for (int nu = 1; nu <= 2; ++nu) {
        for (int p = 0; p <= 2 * g + nu - 2; ++p) {
          CutComparison c;
          try {
            c = cut_formula(g, r, nu, p);
          } catch (const Unrealizable&) {
            continue;
          }
          const int sign = nu == 1 ? -1 : 1;  // (-1)^nu
          CHECK(c.oracle_boundary == (p % 2 == 0 ? r - sign : r));
          CHECK(c.genus_agrees());
          // Euler characteristic drops by p+1 (one arc each) and stays consistent.
          CHECK(2 - 2 * c.oracle_genus - c.oracle_boundary == 2 - 2 * g - r + p + 1);
        }
      }
    }
  }
}

TEST_CASE("intersection form") {
  CHECK(intersection_form(2) == IntMatrix64{{0}});
  CHECK(intersection_form(3) == IntMatrix64{{0, -1}, {1, 0}});
  const auto j = intersection_form(5);
  for (std::size_t a = 0; a < j.size(); ++a) {
    for (std::size_t b = 0; b < j.size(); ++b) {
      CHECK(j[a][b] == -j[b][a]);
      const auto d = a > b ? a - b : b - a;
      CHECK((d == 1 ? (j[a][b] == 1 || j[a][b] == -1) : j[a][b] == 0));
    }
  }
}

TEST_CASE("combinatorial surface validation") {
  CHECK_THROWS(CombSurface({0, 0}, 0, 1));
}
