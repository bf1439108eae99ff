#include "mcgstab/coeff.hpp"

#include <algorithm>
#include <string>

#include "mcgstab/surface.hpp"

namespace mcgstab {

Matrix h1_matrix(const MappingClass& f) {
  const int m = f.rank();
  const std::size_t d = static_cast<std::size_t>(std::max(m - 1, 0));
  Matrix out(d, d);
  for (int j = 1; j < m; ++j) {
    const ArcPath loop = compose(f.image(j), invert(f.image(j + 1)));
    std::vector<long long> count(static_cast<std::size_t>(m) + 1, 0);
    for (const Letter& l : loop.letters()) count[static_cast<std::size_t>(l.index)] += l.forward ? 1 : -1;
    long long partial = 0;
    for (int i = 1; i < m; ++i) {
      partial += count[static_cast<std::size_t>(i)];
      out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = partial;
    }
  }
  return out;
}

Matrix transvection_oracle(int m, int i) {
  const IntMatrix64 J = intersection_form(m);
  const std::size_t d = static_cast<std::size_t>(m - 1);
  Matrix out = Matrix::identity(d);
  const std::size_t e = static_cast<std::size_t>(i - 1);
  for (std::size_t b = 0; b < d; ++b) out(e, b) += J[b][e];
  return out;
}

bool twist_fixes_double_suspension(int k, int n, int twist) {
  const Matrix t = kronecker_power(h1_matrix(dehn_twist(n + 2, twist, +1)), k);
  const std::size_t d = static_cast<std::size_t>(n + 1);
  const std::size_t keep = static_cast<std::size_t>(n - 1);
  for (std::size_t col = 0; col < t.cols; ++col) {
    bool inside = true;
    for (std::size_t rest = col, f = 0; f < static_cast<std::size_t>(k); ++f, rest /= d) {
      if (rest % d >= keep) inside = false;
    }
    if (!inside) continue;
    for (std::size_t row = 0; row < t.rows; ++row) {
      if (t(row, col) != (row == col ? 1 : 0)) return false;
    }
  }
  return true;
}

bool check_coef_condition(int k, int n) {
  if (k < 1 || n < 2) throw std::invalid_argument("check_coef_condition needs k >= 1, n >= 2");
  return twist_fixes_double_suspension(k, n, n + 1);
}

bool CoeffLevel::is_zero() const {
  const GroupShape g = group_shape(*this);
  return g.free_rank == 0 && g.torsion.empty();
}

GroupShape group_shape(const CoeffLevel& level) {
  GroupShape out;
  const SmithForm s = smith(level.relations);
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.diagonal[i] > 1) out.torsion.push_back(s.diagonal[i]);
  }
  out.free_rank = level.gens - s.rank;
  return out;
}

namespace {

Matrix inclusion(std::size_t from, std::size_t to) {
  Matrix m(to, from);
  for (std::size_t i = 0; i < from; ++i) m(i, i) = 1;
  return m;
}

// Every column of x lies in span(rel).
bool in_span(const Matrix& rel, const Matrix& x) {
  if (x.cols == 0) return true;
  if (rel.cols == 0) return x.is_zero();
  return in_column_span(smith(rel, true), x);
}

}  // namespace

MatrixCoeffSystem tensor_power_system(int k, int L) {
  if (k < 0 || L < 0) throw std::invalid_argument("tensor_power_system needs k >= 0, L >= 0");
  MatrixCoeffSystem sys;
  for (int l = 0; l <= L; ++l) {
    CoeffLevel lv;
    const std::size_t d = static_cast<std::size_t>(l);
    std::size_t g = 1;
    for (int f = 0; f < k; ++f) g *= d;
    lv.gens = g;
    lv.relations = Matrix(g, 0);
    for (int i = 1; i <= l; ++i) lv.act.push_back(kronecker_power(h1_matrix(dehn_twist(l + 1, i, +1)), k));
    if (l < L) lv.sigma = kronecker_power(inclusion(d, d + 1), k);
    sys.levels.push_back(std::move(lv));
  }
  return sys;
}

MatrixCoeffSystem simplify(const MatrixCoeffSystem& sys) {
  std::vector<Matrix> pi, iota;
  MatrixCoeffSystem out;
  for (const auto& lv : sys.levels) {
    const SmithForm s = smith(lv.relations, true);
    std::vector<std::size_t> keep;
    CoeffLevel nl;
    std::vector<BigInt> torsion;
    for (std::size_t i = 0; i < lv.gens; ++i) {
      if (i < s.rank && s.diagonal[i] == 1) continue;
      keep.push_back(i);
      if (i < s.rank) torsion.push_back(s.diagonal[i]);
    }
    nl.gens = keep.size();
    nl.relations = Matrix(nl.gens, torsion.size());
    for (std::size_t t = 0; t < torsion.size(); ++t) nl.relations(t, t) = torsion[t];
    pi.push_back(select_rows(s.P, keep));
    iota.push_back(select_cols(s.Pinv, keep));
    out.levels.push_back(std::move(nl));
  }
  for (std::size_t l = 0; l < sys.levels.size(); ++l) {
    for (const auto& a : sys.levels[l].act) out.levels[l].act.push_back(pi[l] * a * iota[l]);
    if (l + 1 < sys.levels.size()) out.levels[l].sigma = pi[l + 1] * sys.levels[l].sigma * iota[l];
  }
  return out;
}

MatrixCoeffSystem cokernel_system(const MatrixCoeffSystem& sys, bool twisted) {
  MatrixCoeffSystem out;
  const int L = sys.top();
  for (int l = 0; l + 1 <= L; ++l) {
    const auto& up = sys.levels[static_cast<std::size_t>(l + 1)];
    CoeffLevel lv;
    lv.gens = up.gens;
    lv.relations = hstack(up.relations, sys.levels[static_cast<std::size_t>(l)].sigma);
    for (int i = 1; i <= l; ++i) lv.act.push_back(up.act[static_cast<std::size_t>(i - 1)]);
    if (l + 2 <= L) {
      const auto& up2 = sys.levels[static_cast<std::size_t>(l + 2)];
      lv.sigma = twisted ? up2.act[static_cast<std::size_t>(l + 1)] * up.sigma : up.sigma;
    }
    out.levels.push_back(std::move(lv));
  }
  for (int l = 0; l + 1 <= out.top(); ++l) {
    const auto& lv = out.levels[static_cast<std::size_t>(l)];
    if (!in_span(out.levels[static_cast<std::size_t>(l + 1)].relations, lv.sigma * lv.relations)) {
      throw NonFreeObstruction("induced suspension on the cokernel at level " + std::to_string(l) +
                               " does not preserve relations");
    }
  }
  return simplify(out);
}

bool suspension_injective(const MatrixCoeffSystem& sys, int l) {
  const auto& a = sys.levels[static_cast<std::size_t>(l)];
  const auto& b = sys.levels[static_cast<std::size_t>(l + 1)];
  if (a.gens == 0) return true;
  Matrix neg_rel = b.relations;
  for (auto& x : neg_rel.a) x = -x;
  const Matrix ker = kernel_basis(hstack(a.sigma, neg_rel));
  std::vector<std::size_t> xs(a.gens);
  for (std::size_t i = 0; i < a.gens; ++i) xs[i] = i;
  return in_span(a.relations, select_rows(ker, xs));
}

bool suspension_equivariant(const MatrixCoeffSystem& sys) {
  for (int l = 0; l < sys.top(); ++l) {
    const auto& a = sys.levels[static_cast<std::size_t>(l)];
    const auto& b = sys.levels[static_cast<std::size_t>(l + 1)];
    for (std::size_t i = 0; i < a.act.size(); ++i) {
      if (!in_span(b.relations, a.sigma * a.act[i] - b.act[i] * a.sigma)) return false;
    }
  }
  return true;
}

std::optional<bool> has_degree(const MatrixCoeffSystem& sys, int k, int N, bool twisted) {
  const int from = std::max(N, 0);
  if (k < 0) {
    if (from > sys.top()) return std::nullopt;
    for (int l = from; l <= sys.top(); ++l) {
      if (!sys.levels[static_cast<std::size_t>(l)].is_zero()) return false;
    }
    return true;
  }
  if (from > sys.top() - 1) return std::nullopt;
  for (int l = from; l < sys.top(); ++l) {
    if (!suspension_injective(sys, l)) return false;
  }
  return has_degree(cokernel_system(sys, twisted), k - 1, N - 1, twisted);
}

DegreeReport degree(const MatrixCoeffSystem& sys, int maxdepth, bool twisted) {
  DegreeReport out;
  out.maxdepth = maxdepth;
  out.window = sys.top();
  out.twisted = twisted;
  const MatrixCoeffSystem s = simplify(sys);
  for (int k = -1; k <= maxdepth; ++k) {
    for (int N = 0; N <= s.top(); ++N) {
      const auto r = has_degree(s, k, N, twisted);
      if (r.value_or(false)) {
        out.exceeds = false;
        out.degree = k;
        out.N = N;
        return out;
      }
    }
  }
  return out;
}

}  // namespace mcgstab
