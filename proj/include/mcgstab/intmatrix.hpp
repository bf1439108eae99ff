#pragma once

// Dense integer matrices over arbitrary-precision integers, Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace mcgstab {

using BigInt = boost::multiprecision::cpp_int;

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows);

  BigInt& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix kronecker(const Matrix& x, const Matrix& y);
Matrix kronecker_power(const Matrix& x, int k);
Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx);
Matrix select_cols(const Matrix& m, const std::vector<std::size_t>& idx);
std::string to_string(const Matrix& m);

/// P * M * Q = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithForm {
  std::vector<BigInt> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
  bool promoted = false;  // int64 arithmetic overflowed and the run was redone exactly
  Matrix P, Pinv, Q;      // filled only when transforms were requested
};

SmithForm smith(const Matrix& m, bool transforms = false);
/// Nonzero diagonal entries.
std::vector<BigInt> invariant_factors(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns spanning the integer kernel of m (a basis of a saturated lattice).
Matrix kernel_basis(const Matrix& m);
/// Every column of x lies in the integer column span of the matrix behind s.
bool in_column_span(const SmithForm& s, const Matrix& x);

}  // namespace mcgstab
