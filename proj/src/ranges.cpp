#include "mcgstab/ranges.hpp"

#include <sstream>

namespace mcgstab {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::pair<RangeResult, RangeResult> range_theorem_A(long long g) {
  if (g < 0) throw std::invalid_argument("range_theorem_A needs g >= 0");
  RangeResult m1{MapKind::boundary, floor_div(2 * g, 3), floor_div(2 * g, 3), true, g};
  RangeResult m2{MapKind::genus, floor_div(2 * g + 1, 3), floor_div(2 * g - 2, 3), false, g};
  return {m1, m2};
}

std::pair<RangeResult, RangeResult> range_theorem_B(long long g, long long k, bool split) {
  if (g < 0 || k < 0) throw std::invalid_argument("range_theorem_B needs g, k >= 0");
  const long long c = split ? k : 3 * k;
  RangeResult m1{MapKind::boundary, floor_div(2 * g - c - 2, 3), floor_div(2 * g - c - 5, 3), false, g, -1, k, 0, split};
  RangeResult m2{MapKind::genus, floor_div(2 * g - c - 1, 3), floor_div(2 * g - c - 4, 3), false, g, -1, k, 0, split};
  return {m1, m2};
}

RangeResult range_stab(long long n, long long k, long long N, StabKind kind) {
  if (n < 0) throw std::invalid_argument("range_stab needs n >= 0");
  RangeResult r;
  r.map = MapKind::disk;
  r.n = n;
  r.k = k;
  r.N = N;
  r.split = kind == StabKind::split;
  switch (kind) {
    case StabKind::constant:
      r.k = 0;
      r.epi = floor_div(n, 3);
      r.iso = floor_div(n - 3, 3);
      return r;
    case StabKind::degree:
    case StabKind::split: {
      if (k < 0 || N < 0) throw std::invalid_argument("range_stab needs k, N >= 0");
      if (n <= N) throw OutOfValidity("n = " + std::to_string(n) + " must exceed N = " + std::to_string(N));
      const long long c = kind == StabKind::split ? k : 3 * k;
      r.epi = floor_div(n - c - 2, 3);
      r.iso = floor_div(n - c - 5, 3);
      return r;
    }
  }
  return r;
}

long long connectivity_bound(long long g, int nu) {
  if (g < 0 || (nu != 1 && nu != 2)) throw std::invalid_argument("connectivity_bound needs g >= 0, nu in {1, 2}");
  return floor_div(2 * g + nu - 5, 3);
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::boundary: return "boundary";
    case MapKind::genus: return "genus";
    case MapKind::disk: return "disk";
  }
  return "?";
}

std::string to_string(StabKind k) {
  switch (k) {
    case StabKind::constant: return "constant";
    case StabKind::degree: return "degree";
    case StabKind::split: return "split";
  }
  return "?";
}

StabKind parse_stab_kind(const std::string& s) {
  if (s == "constant") return StabKind::constant;
  if (s == "degree") return StabKind::degree;
  if (s == "split" || s == "split-degree") return StabKind::split;
  throw std::invalid_argument("unknown kind '" + s + "' (constant, degree, split)");
}

std::string table_theorem_A(long long gmax) {
  std::ostringstream os;
  os << "g,map1_iso,map2_epi,map2_iso\n";
  for (long long g = 0; g <= gmax; ++g) {
    auto [m1, m2] = range_theorem_A(g);
    os << g << ',' << m1.iso << ',' << m2.epi << ',' << m2.iso << '\n';
  }
  return os.str();
}

std::string table_theorem_B(long long gmax, long long kmax) {
  std::ostringstream os;
  os << "g,k,split,map1_epi,map1_iso,map2_epi,map2_iso\n";
  for (long long g = 0; g <= gmax; ++g) {
    for (long long k = 0; k <= kmax; ++k) {
      for (bool split : {false, true}) {
        auto [m1, m2] = range_theorem_B(g, k, split);
        os << g << ',' << k << ',' << (split ? 1 : 0) << ',' << m1.epi << ',' << m1.iso << ',' << m2.epi << ','
           << m2.iso << '\n';
      }
    }
  }
  return os.str();
}

std::string table_stab(long long nmax, long long kmax) {
  std::ostringstream os;
  os << "n,kind,k,N,epi,iso\n";
  for (long long n = 0; n <= nmax; ++n) {
    auto c = range_stab(n, 0, 0, StabKind::constant);
    os << n << ",constant,0,0," << c.epi << ',' << c.iso << '\n';
    for (StabKind kind : {StabKind::degree, StabKind::split}) {
      for (long long k = 0; k <= kmax; ++k) {
        os << n << ',' << to_string(kind) << ',' << k << ",0,";
        try {
          auto r = range_stab(n, k, 0, kind);
          os << r.epi << ',' << r.iso << '\n';
        } catch (const OutOfValidity&) {
          os << "invalid,invalid\n";
        }
      }
    }
  }
  return os.str();
}

}  // namespace mcgstab
