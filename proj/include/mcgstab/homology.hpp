#pragma once

// Integral chains of semi-simplicial sets and their homology.

#include <optional>
#include <vector>

#include "mcgstab/destab.hpp"
#include "mcgstab/intmatrix.hpp"

namespace mcgstab {

struct ChainComplex {
  bool reduced = false;
  bool truncated = false;           // the top degree has no outgoing boundary data
  std::vector<std::size_t> dims;    // dims[p], p = 0..top
  /// boundary[p] : C_p -> C_{p-1}.  boundary[0] is the augmentation (1 x dims[0])
  /// in reduced mode and a 0 x dims[0] matrix otherwise.
  std::vector<Matrix> boundary;
  int top() const { return static_cast<int>(dims.size()) - 1; }
};

ChainComplex chain_complex(const SemiSimplicialSet& w, bool reduced);
ChainComplex chain_complex_from(std::vector<Matrix> boundary, bool reduced);
/// First p with boundary[p-1] * boundary[p] != 0, or nullopt.
std::optional<int> boundary_squared_failure(const ChainComplex& cc);

struct DegreeHomology {
  int p = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;
  bool trusted = true;  // false for the top degree of a truncated complex
  bool vanishes() const { return betti == 0 && torsion.empty(); }
};

struct HomologySummary {
  bool reduced = false;
  bool truncated = false;
  std::vector<DegreeHomology> degrees;  // degree -1 first in reduced mode
  /// Largest c with reduced homology zero in every degree <= c among trusted
  /// degrees.  Only meaningful for reduced complexes.
  std::optional<int> connectivity_homological;
  bool acyclic = false;
  long long euler_from_counts = 0;
  long long euler_from_betti = 0;
  bool smith_promoted = false;

  const DegreeHomology& at(int p) const;
};

HomologySummary homology(const ChainComplex& cc);

}  // namespace mcgstab
