#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mcgstab/homology.hpp"

using namespace mcgstab;

namespace {

long long det(std::vector<std::vector<long long>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

// Determinantal divisors: d_1 ... d_k = gcd of all k x k minors.
std::vector<long long> invariant_factors_by_minors(const std::vector<std::vector<long long>>& a) {
  const std::size_t r = a.size(), c = a[0].size();
  std::vector<long long> divisors{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    long long g = 0;
    std::vector<bool> rs(r), cs(c);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<long long>> minor;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          minor.emplace_back();
          for (std::size_t j = 0; j < c; ++j) {
            if (cs[j]) minor.back().push_back(a[i][j]);
          }
        }
        g = std::gcd(g, det(minor));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

std::vector<BigInt> big(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

Matrix diagonal_of(const SmithForm& s, std::size_t rows, std::size_t cols) {
  Matrix d(rows, cols);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) d(i, i) = s.diagonal[i];
  return d;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(invariant_factors(Matrix::from_rows({{2}})) == big({2}));
  CHECK(rank(Matrix::from_rows({{2}})) == 1);
  CHECK(invariant_factors(Matrix::identity(3)) == big({1, 1, 1}));
  CHECK(rank(Matrix::identity(3)) == 3);
  const Matrix m = Matrix::from_rows({{2, 4}, {6, 8}});
  CHECK(invariant_factors(m) == big({2, 4}));
  CHECK(rank(m) == 2);
  CHECK(invariant_factors(Matrix(0, 3)).empty());
  CHECK(rank(Matrix(4, 0)) == 0);
}

TEST_CASE("smith transforms") {
  const Matrix m = Matrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith(m, true);
  CHECK(s.diagonal == big({2, 6, 12}));
  CHECK(s.P * m * s.Q == diagonal_of(s, 3, 3));
  CHECK(s.P * s.Pinv == Matrix::identity(3));
}

TEST_CASE("smith promotes to exact arithmetic on overflow") {
  // det [[a,1,0],[0,a,1],[1,0,a]] = a^3 + 1 exceeds 64 bits for a = 3e9.
  const long long a = 3000000000LL;
  const Matrix m = Matrix::from_rows({{a, 1, 0}, {0, a, 1}, {1, 0, a}});
  const SmithForm s = smith(m, true);
  CHECK(s.promoted);
  CHECK(s.P * m * s.Q == diagonal_of(s, 3, 3));
  const BigInt ab = a;
  CHECK(s.diagonal[0] * s.diagonal[1] * s.diagonal[2] == ab * ab * ab + 1);
  CHECK_FALSE(smith(Matrix::from_rows({{2, 4}, {6, 8}})).promoted);
}

TEST_CASE("property: smith factors match determinantal divisors") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> entry(-6, 6);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
    for (auto& row : a) {
      for (auto& x : row) x = (t % 3 == 0 && entry(rng) > 2) ? 0 : entry(rng);
    }
    const Matrix m = Matrix::from_rows(a);
    const auto oracle = invariant_factors_by_minors(a);
    const auto got = invariant_factors(m);
    REQUIRE(got.size() == oracle.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == oracle[i]);
    const SmithForm s = smith(m, true);
    CHECK(s.P * m * s.Q == diagonal_of(s, r, c));
    CHECK(s.P * s.Pinv == Matrix::identity(r));
    const Matrix k = kernel_basis(m);
    CHECK(k.cols == c - s.rank);
    CHECK((m * k).is_zero());
    // Columns of m lie in their own span.
    CHECK(in_column_span(s, m));
  }
}

TEST_CASE("column span membership") {
  const Matrix m = Matrix::from_rows({{2, 0}, {0, 3}});
  const SmithForm s = smith(m, true);
  CHECK(in_column_span(s, Matrix::from_rows({{4}, {9}})));
  CHECK_FALSE(in_column_span(s, Matrix::from_rows({{1}, {0}})));
  CHECK_FALSE(in_column_span(smith(Matrix::from_rows({{1}, {1}}), true), Matrix::from_rows({{1}, {0}})));
}

TEST_CASE("chain complex of the injective-words complex") {
  const auto w = build_W(symmetric_family(3), 3, 0, 2);
  const ChainComplex cc = chain_complex(w, true);
  CHECK(cc.boundary[2].rows == 6);
  CHECK(cc.boundary[2].cols == 6);
  CHECK(cc.boundary[1].rows == 3);
  CHECK(cc.boundary[1].cols == 6);
  CHECK(cc.boundary[0].rows == 1);
  CHECK((cc.boundary[1] * cc.boundary[2]).is_zero());
  CHECK_FALSE(boundary_squared_failure(cc));
  CHECK(chain_complex(w, false).boundary[0].rows == 0);
}

TEST_CASE("a single point") {
  const auto w = build_W(trivial_family(1), 1, 0, 0);
  const HomologySummary h = homology(chain_complex(w, true));
  for (const auto& d : h.degrees) CHECK(d.vanishes());
  CHECK(h.acyclic);
  const HomologySummary u = homology(chain_complex(w, false));
  CHECK(u.at(0).betti == 1);
}

TEST_CASE("injective words: homology concentrated in the top degree") {
  const std::vector<std::size_t> tops{2, 9, 44};
  for (int n = 3; n <= 5; ++n) {
    const HomologySummary h = homology(chain_complex(build_W(symmetric_family(n), n, 0, n - 1), true));
    for (const auto& d : h.degrees) {
      if (d.p < n - 1) CHECK(d.vanishes());
    }
    CHECK(h.at(n - 1).betti == tops[static_cast<std::size_t>(n - 3)]);
    CHECK(h.at(n - 1).torsion.empty());
    REQUIRE(h.connectivity_homological.has_value());
    CHECK(*h.connectivity_homological == n - 2);
  }
}

TEST_CASE("torsion in the cyclic family") {
  const HomologySummary h3 = homology(chain_complex(build_W(cyclic_family(4), 3, 0, 2), true));
  CHECK(h3.at(0).betti == 1);
  CHECK(h3.at(1).torsion == big({3, 3}));
  CHECK(h3.at(2).betti == 4);
  const HomologySummary h4 = homology(chain_complex(build_W(cyclic_family(4), 4, 0, 3), true));
  CHECK(h4.at(2).torsion == big({2, 2, 2, 2}));
  CHECK(h4.at(3).betti == 12);
  CHECK(h4.euler_from_betti == h4.euler_from_counts);
}

TEST_CASE("truncated complexes only trust lower degrees") {
  const HomologySummary h = homology(chain_complex(build_W(symmetric_family(5), 5, 0, 2), true));
  CHECK(h.truncated);
  CHECK_FALSE(h.at(2).trusted);
  CHECK(h.connectivity_homological == 1);
  CHECK_FALSE(h.acyclic);
}

TEST_CASE("boundary squared check detects a broken complex") {
  const Matrix aug = Matrix::from_rows({{1}});
  CHECK(boundary_squared_failure(chain_complex_from({aug, Matrix::from_rows({{1, -1}})}, true)) == 1);
  CHECK_FALSE(boundary_squared_failure(chain_complex_from({Matrix::from_rows({{1, 1}}), Matrix::from_rows({{1}, {-1}})}, true)));
}

TEST_CASE("property: boundary squared is zero and Euler characteristics agree") {
  for (const std::string name : {"sym", "sym-id", "cyclic", "trivial"}) {
    const auto f = family_by_name(name, 5);
    for (int a = 0; a <= 1; ++a) {
      for (int n = 1; a + n <= 5; ++n) {
        for (bool reduced : {true, false}) {
          const ChainComplex cc = chain_complex(build_W(f, n, a, n - 1), reduced);
          CHECK_FALSE(boundary_squared_failure(cc));
          const HomologySummary h = homology(cc);
          CHECK(h.euler_from_counts == h.euler_from_betti);
        }
      }
    }
  }
}
