#pragma once

// Finite permutation groups: elements enumerated by breadth-first search.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mcgstab {

/// 0-based image array.  Composition (f*g)(x) = f(g(x)).
using Perm = std::vector<std::uint16_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Perm identity_perm(int degree);
Perm multiply(const Perm& f, const Perm& g);
Perm inverse(const Perm& f);
Perm pow(const Perm& f, int k);
Perm extend(const Perm& f, int degree);
/// Cycle notation on 1-based points, e.g. "(1 2)(3 4)" or "()".
Perm parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Perm& p);
int max_point(std::string_view cycles);

class PermGroup {
 public:
  /// Enumerates <gens> on `degree` points; throws ResourceError beyond `cap`.
  PermGroup(int degree, std::vector<Perm> gens, std::size_t cap = 1000000);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& gens() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t id) const { return elements_[id]; }
  /// Element id or -1.
  long long find(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p) >= 0; }

  /// BFS spanning tree: element id = parent * gens[via].
  std::size_t parent(std::size_t id) const { return parent_[id]; }
  int via(std::size_t id) const { return via_[id]; }

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> parent_;
  std::vector<int> via_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Order of the subgroup of `g` generated by `gens` (closure inside g).
std::size_t subgroup_order(int degree, const std::vector<Perm>& gens, std::size_t cap = 1000000);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

}  // namespace mcgstab
