#pragma once

// Stability-range arithmetic.  Every "i <= x" with rational x is reported as floor(x).

#include <stdexcept>
#include <string>
#include <utility>

namespace mcgstab {

class OutOfValidity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MapKind { boundary, genus, disk };
enum class StabKind { constant, degree, split };

struct RangeResult {
  MapKind map = MapKind::disk;
  long long epi = 0;
  long long iso = 0;
  bool injective_always = false;
  long long g = -1, n = -1, k = 0, N = 0;
  bool split = false;
};

long long floor_div(long long a, long long b);

/// first: S_{g,r} -> S_{g,r+1}, second: S_{g,r+1} -> S_{g+1,r}.
std::pair<RangeResult, RangeResult> range_theorem_A(long long g);
std::pair<RangeResult, RangeResult> range_theorem_B(long long g, long long k, bool split);
RangeResult range_stab(long long n, long long k, long long N, StabKind kind);
long long connectivity_bound(long long g, int nu);

std::string to_string(MapKind k);
std::string to_string(StabKind k);
StabKind parse_stab_kind(const std::string& s);

/// CSV tables over the acceptance grid; byte-compared against golden files.
std::string table_theorem_A(long long gmax);
std::string table_theorem_B(long long gmax, long long kmax);
std::string table_stab(long long nmax, long long kmax);

}  // namespace mcgstab
