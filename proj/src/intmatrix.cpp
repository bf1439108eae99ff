#include "mcgstab/intmatrix.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mcgstab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (rows[i].size() != m.cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const BigInt& v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        if (y(k, j) != 0) out(i, j) += v * y(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out = x;
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out = x;
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] -= y.a[k];
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
  }
  return out;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(x.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) out(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) out(i, x.cols + j) = y(i, j);
  }
  return out;
}

Matrix kronecker(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      if (x(i, j) == 0) continue;
      for (std::size_t k = 0; k < y.rows; ++k) {
        for (std::size_t l = 0; l < y.cols; ++l) out(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
      }
    }
  }
  return out;
}

Matrix kronecker_power(const Matrix& x, int k) {
  Matrix out = Matrix::identity(1);
  for (int j = 0; j < k; ++j) out = kronecker(out, x);
  return out;
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(idx.size(), m.cols);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(idx[i], j);
  }
  return out;
}

Matrix select_cols(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(m.rows, idx.size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(i, idx[j]);
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

struct Overflow {};

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
  return r;
}
long long checked_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
  return r;
}
long long negate(long long x) {
  if (x == std::numeric_limits<long long>::min()) throw Overflow{};
  return -x;
}
BigInt negate(const BigInt& x) { return -x; }
long long magnitude(long long x) { return x < 0 ? negate(x) : x; }
BigInt magnitude(const BigInt& x) { return abs(x); }
long long quotient(long long x, long long y) {
  if (x == std::numeric_limits<long long>::min() && y == -1) throw Overflow{};
  return x / y;
}
BigInt quotient(const BigInt& x, const BigInt& y) { return x / y; }
long long sub_mul(long long a, long long q, long long b) { return checked_sub(a, checked_mul(q, b)); }
BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

template <class T>
struct Dense {
  std::size_t r = 0, c = 0;
  std::vector<T> a;
  Dense(std::size_t rr, std::size_t cc) : r(rr), c(cc), a(rr * cc, T(0)) {}
  T& at(std::size_t i, std::size_t j) { return a[i * c + j]; }

  static Dense eye(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = T(1);
    return d;
  }
  // row_dst -= q * row_src
  void row_sub(std::size_t dst, std::size_t src, const T& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < c; ++j) {
      if (at(src, j) != 0) at(dst, j) = sub_mul(at(dst, j), q, at(src, j));
    }
  }
  // col_dst -= q * col_src
  void col_sub(std::size_t dst, std::size_t src, const T& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < r; ++i) {
      if (at(i, src) != 0) at(i, dst) = sub_mul(at(i, dst), q, at(i, src));
    }
  }
  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < c; ++j) std::swap(at(x, j), at(y, j));
  }
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(at(i, x), at(i, y));
  }
  void negate_row(std::size_t x) {
    for (std::size_t j = 0; j < c; ++j) at(x, j) = negate(at(x, j));
  }
  void negate_col(std::size_t x) {
    for (std::size_t i = 0; i < r; ++i) at(i, x) = negate(at(i, x));
  }
};

template <class T>
struct SmithRun {
  Dense<T> A;
  std::optional<Dense<T>> P, Pinv, Q;

  void row_sub(std::size_t i, std::size_t t, const T& q) {
    A.row_sub(i, t, q);
    if (P) {
      P->row_sub(i, t, q);
      Pinv->col_sub(t, i, negate(q));
    }
  }
  void col_sub(std::size_t j, std::size_t t, const T& q) {
    A.col_sub(j, t, q);
    if (Q) Q->col_sub(j, t, q);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    A.swap_rows(x, y);
    if (P) {
      P->swap_rows(x, y);
      Pinv->swap_cols(x, y);
    }
  }
  void swap_cols(std::size_t x, std::size_t y) {
    A.swap_cols(x, y);
    if (Q) Q->swap_cols(x, y);
  }
  void negate_row(std::size_t x) {
    A.negate_row(x);
    if (P) {
      P->negate_row(x);
      Pinv->negate_col(x);
    }
  }

  void run() {
    const std::size_t lim = std::min(A.r, A.c);
    for (std::size_t t = 0; t < lim; ++t) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      T best_abs(0);
      for (std::size_t i = t; i < A.r; ++i) {
        for (std::size_t j = t; j < A.c; ++j) {
          if (A.at(i, j) == 0) continue;
          T v = magnitude(A.at(i, j));
          if (!best || v < best_abs) {
            best = {i, j};
            best_abs = v;
          }
        }
      }
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < A.r; ++i) {
          if (A.at(i, t) == 0) continue;
          row_sub(i, t, quotient(A.at(i, t), A.at(t, t)));
          if (A.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < A.c; ++j) {
          if (A.at(t, j) == 0) continue;
          col_sub(j, t, quotient(A.at(t, j), A.at(t, t)));
          if (A.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          std::size_t bi = t, bj = t;
          T bv = magnitude(A.at(t, t));
          for (std::size_t i = t + 1; i < A.r; ++i) {
            if (A.at(i, t) != 0 && magnitude(A.at(i, t)) < bv) {
              bv = magnitude(A.at(i, t));
              bi = i;
              bj = t;
            }
          }
          for (std::size_t j = t + 1; j < A.c; ++j) {
            if (A.at(t, j) != 0 && magnitude(A.at(t, j)) < bv) {
              bv = magnitude(A.at(t, j));
              bi = t;
              bj = j;
            }
          }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < A.r && !fixed; ++i) {
          for (std::size_t j = t + 1; j < A.c; ++j) {
            if (A.at(i, j) % A.at(t, t) != 0) {
              row_sub(t, i, T(-1));
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) break;
      }
      if (A.at(t, t) < 0) negate_row(t);
    }
  }
};

template <class T>
T convert(const BigInt& x);
template <>
long long convert<long long>(const BigInt& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min()) throw Overflow{};
  return static_cast<long long>(x);
}
template <>
BigInt convert<BigInt>(const BigInt& x) {
  return x;
}

template <class T>
Matrix to_matrix(const Dense<T>& d) {
  Matrix m(d.r, d.c);
  for (std::size_t k = 0; k < d.a.size(); ++k) m.a[k] = BigInt(d.a[k]);
  return m;
}

template <class T>
SmithForm smith_with(const Matrix& m, bool transforms) {
  SmithRun<T> run{Dense<T>(m.rows, m.cols), std::nullopt, std::nullopt, std::nullopt};
  for (std::size_t k = 0; k < m.a.size(); ++k) run.A.a[k] = convert<T>(m.a[k]);
  if (transforms) {
    run.P = Dense<T>::eye(m.rows);
    run.Pinv = Dense<T>::eye(m.rows);
    run.Q = Dense<T>::eye(m.cols);
  }
  run.run();
  SmithForm out;
  const std::size_t lim = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < lim; ++t) {
    out.diagonal.emplace_back(run.A.at(t, t));
    if (run.A.at(t, t) != 0) ++out.rank;
  }
  if (transforms) {
    out.P = to_matrix(*run.P);
    out.Pinv = to_matrix(*run.Pinv);
    out.Q = to_matrix(*run.Q);
  }
  return out;
}

}  // namespace

SmithForm smith(const Matrix& m, bool transforms) {
  try {
    return smith_with<long long>(m, transforms);
  } catch (const Overflow&) {
    SmithForm out = smith_with<BigInt>(m, transforms);
    out.promoted = true;
    return out;
  }
}

std::vector<BigInt> invariant_factors(const Matrix& m) {
  std::vector<BigInt> out;
  for (auto& d : smith(m).diagonal) {
    if (d != 0) out.push_back(d);
  }
  return out;
}

std::size_t rank(const Matrix& m) { return smith(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const SmithForm s = smith(m, true);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < m.cols; ++j) idx.push_back(j);
  return select_cols(s.Q, idx);
}

bool in_column_span(const SmithForm& s, const Matrix& x) {
  if (s.P.rows != x.rows) throw std::invalid_argument("in_column_span: needs transforms of matching shape");
  const Matrix y = s.P * x;
  for (std::size_t i = 0; i < y.rows; ++i) {
    for (std::size_t j = 0; j < y.cols; ++j) {
      if (y(i, j) == 0) continue;
      if (i >= s.rank || y(i, j) % s.diagonal[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace mcgstab
