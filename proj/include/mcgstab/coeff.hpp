#pragma once

// H_1 coefficient systems at the matrix level and their degree.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgstab/intmatrix.hpp"
#include "mcgstab/mapclass.hpp"

namespace mcgstab {

class NonFreeObstruction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Action on H_1(X_m) in the basis e_i = [rho_i R_{i+1}], i = 1..m-1.
/// Column j holds the image of e_j.
Matrix h1_matrix(const MappingClass& f);
/// x -> x + <x, e_i> e_i with the pairing of intersection_form(m).
Matrix transvection_oracle(int m, int i);

/// Does T_{n+1}^{(x)k} on H_1(X_{n+2})^{(x)k} fix every tensor of e_1..e_{n-1}?
bool check_coef_condition(int k, int n);
/// Same test with an arbitrary twist index, for controls.
bool twist_fixes_double_suspension(int k, int n, int twist);

/// Level l is F(D # D^#l) = F(X_{l+1}): an abelian group presented as
/// Z^gens / (column span of relations), the twists T_1..T_l acting on it,
/// and the suspension into level l+1 (absent at the top level).
struct CoeffLevel {
  std::size_t gens = 0;
  Matrix relations;          // gens x r
  std::vector<Matrix> act;   // act[i-1] for T_i
  Matrix sigma;              // gens_{l+1} x gens
  bool is_zero() const;
};

struct MatrixCoeffSystem {
  std::vector<CoeffLevel> levels;
  int top() const { return static_cast<int>(levels.size()) - 1; }
};

/// F_k = H_1^{(x)k} on levels 0..L.
MatrixCoeffSystem tensor_power_system(int k, int L);

/// Per level: torsion coefficients and free rank, after simplification.
struct GroupShape {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;
};
GroupShape group_shape(const CoeffLevel& level);

/// Rewrites every level in Smith coordinates: unit relations drop out.
MatrixCoeffSystem simplify(const MatrixCoeffSystem& sys);
/// Cokernel of the suspension.  `twisted` uses T_{l+2} o sigma_{l+1} as the
/// new suspension; otherwise sigma_{l+1}.
MatrixCoeffSystem cokernel_system(const MatrixCoeffSystem& sys, bool twisted);
/// Is sigma_l injective on the presented groups?
bool suspension_injective(const MatrixCoeffSystem& sys, int l);
/// sigma_l o T_i == T_i o sigma_l modulo relations, for every l and i <= l.
bool suspension_equivariant(const MatrixCoeffSystem& sys);

/// nullopt when every level the condition talks about lies outside the window.
std::optional<bool> has_degree(const MatrixCoeffSystem& sys, int k, int N, bool twisted);

struct DegreeReport {
  bool exceeds = true;
  int degree = -2;
  int N = 0;
  int maxdepth = 0;
  int window = 0;
  bool twisted = true;
};

/// Smallest k <= maxdepth, then smallest N, with has_degree true.
DegreeReport degree(const MatrixCoeffSystem& sys, int maxdepth, bool twisted = true);

}  // namespace mcgstab
