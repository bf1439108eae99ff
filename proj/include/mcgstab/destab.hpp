#pragma once

// Destabilization semi-simplicial sets W_n(A, X) for finite group families
// G_0 -> G_1 -> ... with Yang-Baxter elements.

#include <string>
#include <string_view>
#include <vector>

#include "mcgstab/groupoid.hpp"
#include "mcgstab/perm.hpp"

namespace mcgstab {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyLevel {
  int degree = 1;
  std::vector<Perm> gens;
  /// Images in the next level of `gens`, in order.
  std::vector<Perm> inj;
  /// t_{n,1}, ..., t_{n,n-1}.
  std::vector<Perm> yb;
};

class StabilityFamily {
 public:
  /// Enumerates every level and validates the axioms eagerly.
  StabilityFamily(std::string name, std::vector<FamilyLevel> levels, std::size_t cap = 1000000);

  const std::string& name() const { return name_; }
  int top() const { return static_cast<int>(groups_.size()) - 1; }
  const PermGroup& group(int n) const { return groups_.at(static_cast<std::size_t>(n)); }
  const FamilyLevel& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  /// t_{n,j}, 1 <= j <= n-1.
  const Perm& yb(int n, int j) const;
  /// Image of x in G_from under s_{to-1} o ... o s_from.
  Perm stabilize(int from, int to, const Perm& x) const;
  /// Generators of s(G_from) inside G_to.
  std::vector<Perm> stabilized_gens(int from, int to) const;

 private:
  std::string name_;
  std::vector<FamilyLevel> levels_;
  std::vector<PermGroup> groups_;
  std::vector<std::vector<Perm>> s_table_;  // s_table_[n][element id of G_n]
};

StabilityFamily symmetric_family(int N, bool identity_yb = false);
/// G_n cyclic of order 2^n, s(x) = x^2, every t_{n,j} = g_n^{2^{n-2}}.
StabilityFamily cyclic_family(int N);
StabilityFamily trivial_family(int N);

/// Line format:
///   level n
///   points: k            (optional; otherwise the largest point mentioned)
///   gens: (1 2)(3 4), (1 3)
///   inj: g1 -> (1 2)     (image in level n+1 of the first generator)
///   yb j: (1 2)
/// Blank lines and `#` comments are ignored.
StabilityFamily load_family(std::string_view document, std::size_t cap = 1000000);
StabilityFamily load_family_file(const std::string& path, std::size_t cap = 1000000);
StabilityFamily family_by_name(const std::string& name, int N);

enum class BraidWordConvention { ascending, descending };
std::string to_string(BraidWordConvention c);

struct SemiSimplicialSet {
  std::vector<std::size_t> counts;                      // counts[p] = |W_p|
  std::vector<std::vector<std::vector<std::size_t>>> faces;  // faces[p][i][simplex]
  int full_dimension = 0;                               // n - 1
  BraidWordConvention convention = BraidWordConvention::ascending;
  std::vector<BraidWordConvention> valid_conventions;
  int pmax() const { return static_cast<int>(counts.size()) - 1; }
  bool truncated() const { return pmax() < full_dimension; }
  /// Throws IdentityViolation naming (p, i, j, simplex).
  void check_identities() const;
};

/// Cosets G_{a+n} / s(G_{a+n-p-1}) with d_i[f] = [f * beta_i], beta_i the
/// word for the inverse block braid in the last p+1 slots.  Both word
/// conventions are tried; the first valid one is used.
SemiSimplicialSet build_W(const StabilityFamily& fam, int n, int a, int pmax);

std::size_t pi0(const SemiSimplicialSet& w);
bool barucco_check(const StabilityFamily& fam, int n, int a);

}  // namespace mcgstab
