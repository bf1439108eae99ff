#pragma once

// Ribbon-graph (combinatorial map) model of bidecorated surfaces.
//
// Half-edges are 0..2E-1 and edge e consists of 2e (tail) and 2e+1 (head).
// `rotation` is the counter-clockwise successor at each vertex.  The marked
// points b0, b1 are vertices; each carries a gap corner where the boundary
// passes, recorded as the half-edge immediately before the gap.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcgstab {

class TooManyArcs : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Unrealizable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SurfaceInvariants {
  int genus = 0;
  int boundary = 1;
  int euler = 1;
  int nu = 1;
  int punctures = 0;
  bool operator==(const SurfaceInvariants&) const = default;
};

class CombSurface {
 public:
  /// Validates: rotation is a permutation, marks lie at distinct vertices,
  /// the map is connected.
  CombSurface(std::vector<int> rotation, int mark0, int mark1, int punctures = 0);

  int half_edges() const { return static_cast<int>(rotation_.size()); }
  int edges() const { return half_edges() / 2; }
  const std::vector<int>& rotation() const { return rotation_; }
  int mark0() const { return mark0_; }
  int mark1() const { return mark1_; }
  int punctures() const { return punctures_; }

  static constexpr int partner(int h) { return h ^ 1; }
  int face_step(int h) const { return rotation_[static_cast<std::size_t>(partner(h))]; }

  /// Vertex and face labels per half-edge.
  std::vector<int> vertex_labels() const;
  std::vector<int> face_labels() const;

  /// Half-edges at the vertex of `h`, in ccw order starting just after the
  /// gap (for a marked vertex) or at `h`.
  std::vector<int> vertex_order_after_gap(int mark) const;

  /// Drops the given edges (by edge id) and renumbers; marks move to the
  /// last surviving half-edge before the old gap.
  CombSurface delete_edges(const std::vector<int>& edge_ids) const;

 private:
  std::vector<int> rotation_;
  int mark0_;
  int mark1_;
  int punctures_;
};

SurfaceInvariants invariants(const CombSurface& s);

/// Boundary connected sum: the rotations at b0 (and at b1) are concatenated,
/// `a` first, and the marks are taken from `b`.
CombSurface glue(const CombSurface& a, const CombSurface& b);
CombSurface disk();
CombSurface glue_disk(const CombSurface& s);
CombSurface build_Xm(int m);
/// Genus 0, r boundary components, I0 and I1 on the same component.
CombSurface build_S0r(int r);

struct SurfaceType {
  int genus;
  int boundary;
  bool operator==(const SurfaceType&) const = default;
};
SurfaceType surface_type(int m);

/// Invariants after cutting the last p+1 disk cores of base # D^#n.
SurfaceInvariants cut_standard_simplex(const CombSurface& base, int n, int p);

struct CutComparison {
  int g = 0, r = 0, nu = 1, p = 0;
  int formula_genus = 0;
  int formula_boundary = 0;  // r + (-1)^nu for p even, r otherwise
  int oracle_genus = 0;
  int oracle_boundary = 0;
  bool genus_agrees() const { return formula_genus == oracle_genus; }
  bool boundary_agrees() const { return formula_boundary == oracle_boundary; }
};

/// Realizes S_{g,r} with the given nu as S_{0,r0} # D^#n and cuts.
CutComparison cut_formula(int g, int r, int nu, int p);

using IntMatrix64 = std::vector<std::vector<long long>>;

/// Algebraic intersection numbers <e_i, e_j> of the chain classes
/// e_i = [rho_i R_{i+1}] on X_m, sign normalized so <e_i, e_{i+1}> = -1.
IntMatrix64 intersection_form(int m);
/// Raw push-off pairing of two closed walks given as edge-letter sequences.
long long walk_intersection(const CombSurface& s, const std::vector<int>& walk_a, const std::vector<int>& walk_b);

}  // namespace mcgstab
