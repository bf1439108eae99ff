#pragma once

// Mapping classes of D^#m acting on the arc groupoid.

#include <optional>
#include <string>
#include <vector>

#include "mcgstab/groupoid.hpp"

namespace mcgstab {

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Which of T_i, T_i^{-1} is called positive.  `lemma` has
/// T_i(rho_i) = rho_i R_{i+1} rho_i and T_i(rho_{i+1}) = rho_i.
enum class TwistConvention { lemma, flipped };

/// Groupoid automorphism given by the images of rho_1..rho_m, together with
/// the images under its inverse.
class MappingClass {
 public:
  static MappingClass identity(int rank);
  /// Throws std::invalid_argument unless the two image lists are mutually
  /// inverse substitutions.
  static MappingClass from_images(std::vector<ArcPath> images, std::vector<ArcPath> inverse_images);

  int rank() const { return rank_; }
  const std::vector<ArcPath>& images() const { return images_; }
  const ArcPath& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<ArcPath>& inverse_images() const { return inverse_; }

  bool is_identity() const;

 private:
  MappingClass() = default;
  friend MappingClass compose_mc(const MappingClass&, const MappingClass&);
  friend MappingClass invert_mc(const MappingClass&);

  int rank_ = 0;
  std::vector<ArcPath> images_;
  std::vector<ArcPath> inverse_;
};

/// Signed Artin generators; letter +i is sigma_i, -i is sigma_i^{-1}.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

ArcPath apply(const MappingClass& f, const ArcPath& p);
ArcPath apply_letters(const std::vector<ArcPath>& images, const ArcPath& p);

/// f o g: g acts first.
MappingClass compose_mc(const MappingClass& f, const MappingClass& g);
MappingClass invert_mc(const MappingClass& f);
bool mc_equal(const MappingClass& f, const MappingClass& g);
MappingClass power(const MappingClass& f, int k);
/// Product of the list, rightmost acting first.
MappingClass product(const std::vector<MappingClass>& factors, int rank);

MappingClass dehn_twist(int m, int i, int sign, TwistConvention conv = TwistConvention::lemma);
MappingClass sum(const MappingClass& f, const MappingClass& g);
MappingClass phi(const BraidWord& b, TwistConvention conv = TwistConvention::lemma);

/// iota f iota^{-1}: each image word read backwards, orientations kept.
MappingClass bar_conjugate(const MappingClass& f);
/// Orientation flip composed with inversion; agrees with bar_conjugate.
MappingClass bar_conjugate_alt(const MappingClass& f);
ArcPath iota_image(const ArcPath& c);

MappingClass block_braid(int m, int n);
/// rho_1 iota(rho_2) ... iota^{n-1}(rho_n) iota^n(rho_{i+n}) iota^{n-1}(rho_n) ... rho_1, reduced.
ArcPath block_braid_closed_form(int m, int n, int i);

/// Boundary loops of D^#m read at b0 (starting along rho_1) and at b1.  For
/// m odd both are the single boundary component.
ArcPath boundary_loop_b0(int m);
ArcPath boundary_loop_b1(int m);
/// Twist about the boundary component through b0 (m even) or the boundary
/// (m odd).
MappingClass boundary_twist_b0(int m);
/// Twist about the boundary component through b1; m even only.
MappingClass boundary_twist_b1(int m);

struct BlockConjugationResult {
  bool pass = false;
  bool literal_pass = false;  // beta_{m,n} (f#g) beta_{n,m}^{-1}
  bool alt_bar_pass = false;
};

BlockConjugationResult block_conjugation(int m, int n, const MappingClass& f, const MappingClass& g);
bool verify_block_conjugation(int m, int n, const MappingClass& f, const MappingClass& g);

bool verify_yang_baxter(const MappingClass& tau);

enum class Hexagon { A, B };

struct BraidingCheck {
  std::string name;
  bool pass = false;
};

struct BraidingCandidate {
  int k = 0;
  Hexagon convention = Hexagon::A;
  std::vector<BraidingCheck> checks;
  std::string curve_image;  // cyclic normal form of the moved a_1 loop
  bool survives() const;
};

struct BraidingReport {
  std::vector<BraidingCandidate> candidates;
  /// True when every k has a failing check under both conventions.
  bool all_refuted() const;
  bool refuted(int k) const;
};

/// Candidates beta~_{1,1} = T_1^k for |k| <= K under both hexagon conventions.
BraidingReport refute_braiding_candidates(int K);

/// First cyclically reduced loop of length <= max_len (by length, then
/// lexicographically) whose iota image is not freely homotopic to it.
std::optional<CyclicWord> search_iota_asymmetric_curve(int m, int max_len);

}  // namespace mcgstab
