#include <random>

#include "doctest.h"
#include "mcgstab/coeff.hpp"
#include "mcgstab/surface.hpp"

using namespace mcgstab;

namespace {

// x -> x + <x, e_i> e_i written out from the raw intersection form.
Matrix transvection_from_form(int m, int i) {
  const IntMatrix64 j = intersection_form(m);
  const std::size_t n = static_cast<std::size_t>(m - 1), c = static_cast<std::size_t>(i - 1);
  Matrix t = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) t(c, col) += j[col][c];
  return t;
}

// Abelianize an image word by hand: signed count of each arc.
std::vector<long long> arc_counts(const ArcPath& p, int m) {
  std::vector<long long> v(static_cast<std::size_t>(m));
  for (const Letter& l : p.letters()) v[static_cast<std::size_t>(l.index - 1)] += l.forward ? 1 : -1;
  return v;
}

}  // namespace

TEST_CASE("h1 matrices") {
  CHECK(h1_matrix(MappingClass::identity(4)) == Matrix::identity(3));
  for (int m = 2; m <= 10; ++m) {
    for (int i = 1; i < m; ++i) {
      CHECK(h1_matrix(dehn_twist(m, i, 1)) == transvection_from_form(m, i));
      CHECK(transvection_oracle(m, i) == transvection_from_form(m, i));
    }
  }
  const auto t1 = dehn_twist(3, 1, 1), t2 = dehn_twist(3, 2, 1);
  CHECK(h1_matrix(product({t1, t2, t1}, 3)) == h1_matrix(product({t2, t1, t2}, 3)));
}

TEST_CASE("h1 matrix columns come from abelianized loop images") {
  // e_j = [rho_j R_{j+1}] has arc counts +1 at j and -1 at j+1; the image
  // class is recovered from partial sums of the arc counts of f(rho_j) f(rho_{j+1})^-1.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const int m = 3 + t % 4;
    MappingClass f = MappingClass::identity(m);
    for (int s = 0; s < 5; ++s) f = compose_mc(f, dehn_twist(m, std::uniform_int_distribution<int>(1, m - 1)(rng), s % 2 ? 1 : -1));
    const Matrix h = h1_matrix(f);
    for (int j = 1; j < m; ++j) {
      const auto counts = arc_counts(compose(f.image(j), invert(f.image(j + 1))), m);
      long long partial = 0;
      for (int r = 1; r < m; ++r) {
        partial += counts[static_cast<std::size_t>(r - 1)];
        CHECK(h(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(j - 1)) == partial);
      }
    }
  }
}

TEST_CASE("coefficient condition") {
  CHECK(check_coef_condition(1, 4));
  CHECK(check_coef_condition(3, 5));
  CHECK_FALSE(twist_fixes_double_suspension(1, 3, 3));
  for (int k = 1; k <= 3; ++k) {
    for (int n = 2; n <= 8; ++n) CHECK(check_coef_condition(k, n));
  }
}

TEST_CASE("tensor power systems") {
  const auto c = tensor_power_system(0, 4);
  for (const auto& lv : c.levels) {
    CHECK(lv.gens == 1);
    for (const auto& a : lv.act) CHECK(a == Matrix::identity(1));
  }
  const auto s1 = tensor_power_system(1, 5);
  for (int l = 0; l < s1.top(); ++l) {
    const auto& lv = s1.levels[static_cast<std::size_t>(l)];
    CHECK(lv.gens == static_cast<std::size_t>(l));
    CHECK(rank(lv.sigma) == static_cast<std::size_t>(l));
    CHECK(suspension_injective(s1, l));
  }
  const auto coker = cokernel_system(s1, true);
  for (const auto& lv : coker.levels) {
    const auto shape = group_shape(lv);
    CHECK(shape.free_rank == 1);
    CHECK(shape.torsion.empty());
  }
  CHECK(suspension_equivariant(tensor_power_system(2, 5)));
}

TEST_CASE("degree of tensor powers") {
  for (int k = 0; k <= 3; ++k) {
    const DegreeReport d = degree(tensor_power_system(k, std::max(k, 1) + 3), 5, true);
    CHECK_FALSE(d.exceeds);
    CHECK(d.degree == k);
    CHECK(d.N == 0);
  }
}

TEST_CASE("untwisted cokernel suspension does not give a finite degree") {
  CHECK(degree(tensor_power_system(0, 4), 4, false).degree == 0);
  CHECK(degree(tensor_power_system(1, 4), 4, false).exceeds);
}

TEST_CASE("property: h1 is a homomorphism") {
  std::mt19937_64 rng(23);
  auto word = [&](int m) {
    MappingClass f = MappingClass::identity(m);
    for (int s = 0; s < 6; ++s) {
      f = compose_mc(f, dehn_twist(m, std::uniform_int_distribution<int>(1, m - 1)(rng), std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1));
    }
    return f;
  };
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + t % 7;
    const MappingClass f = word(m), g = word(m);
    CHECK(h1_matrix(compose_mc(f, g)) == h1_matrix(f) * h1_matrix(g));
  }
}

TEST_CASE("property: twists preserve the intersection form") {
  for (int m = 2; m <= 8; ++m) {
    const IntMatrix64 j = intersection_form(m);
    std::vector<std::vector<long long>> rows(j.begin(), j.end());
    const Matrix J = Matrix::from_rows(rows);
    for (int i = 1; i < m; ++i) {
      const Matrix h = h1_matrix(dehn_twist(m, i, 1));
      CHECK(transpose(h) * J * h == J);
    }
  }
}
