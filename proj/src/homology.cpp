#include "mcgstab/homology.hpp"

#include <stdexcept>
#include <string>

namespace mcgstab {

ChainComplex chain_complex(const SemiSimplicialSet& w, bool reduced) {
  std::vector<Matrix> boundary;
  const std::size_t n0 = w.counts.empty() ? 0 : w.counts[0];
  Matrix aug(reduced ? 1 : 0, n0);
  for (std::size_t j = 0; j < aug.cols && reduced; ++j) aug(0, j) = 1;
  boundary.push_back(std::move(aug));
  for (int p = 1; p <= w.pmax(); ++p) {
    Matrix d(w.counts[static_cast<std::size_t>(p - 1)], w.counts[static_cast<std::size_t>(p)]);
    for (int i = 0; i <= p; ++i) {
      const auto& face = w.faces[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
      for (std::size_t s = 0; s < face.size(); ++s) d(face[s], s) += (i % 2 == 0) ? 1 : -1;
    }
    boundary.push_back(std::move(d));
  }
  ChainComplex cc = chain_complex_from(std::move(boundary), reduced);
  cc.truncated = w.truncated();
  return cc;
}

ChainComplex chain_complex_from(std::vector<Matrix> boundary, bool reduced) {
  ChainComplex cc;
  cc.reduced = reduced;
  for (std::size_t p = 0; p < boundary.size(); ++p) {
    if (p > 0 && boundary[p].rows != boundary[p - 1].cols) {
      throw std::invalid_argument("boundary matrix " + std::to_string(p) + " has the wrong number of rows");
    }
    cc.dims.push_back(boundary[p].cols);
  }
  cc.boundary = std::move(boundary);
  return cc;
}

std::optional<int> boundary_squared_failure(const ChainComplex& cc) {
  for (int p = 1; p <= cc.top(); ++p) {
    if (!(cc.boundary[static_cast<std::size_t>(p - 1)] * cc.boundary[static_cast<std::size_t>(p)]).is_zero()) return p;
  }
  return std::nullopt;
}

const DegreeHomology& HomologySummary::at(int p) const {
  for (const auto& d : degrees) {
    if (d.p == p) return d;
  }
  throw std::out_of_range("no homology in degree " + std::to_string(p));
}

HomologySummary homology(const ChainComplex& cc) {
  HomologySummary out;
  out.reduced = cc.reduced;
  out.truncated = cc.truncated;
  const int top = cc.top();
  std::vector<SmithForm> snf;
  for (const auto& d : cc.boundary) {
    snf.push_back(smith(d));
    out.smith_promoted = out.smith_promoted || snf.back().promoted;
  }
  auto rank_of = [&](int p) -> std::size_t { return p <= top ? snf[static_cast<std::size_t>(p)].rank : 0; };
  auto torsion_of = [&](int p) {
    std::vector<BigInt> t;
    if (p > top) return t;
    for (const auto& d : snf[static_cast<std::size_t>(p)].diagonal) {
      if (d > 1) t.push_back(d);
    }
    return t;
  };
  if (cc.reduced) {
    DegreeHomology h;
    h.p = -1;
    h.betti = 1 - rank_of(0);
    out.degrees.push_back(h);
  }
  for (int p = 0; p <= top; ++p) {
    DegreeHomology h;
    h.p = p;
    h.betti = cc.dims[static_cast<std::size_t>(p)] - rank_of(p) - rank_of(p + 1);
    h.torsion = torsion_of(p + 1);
    h.trusted = !(cc.truncated && p == top);
    out.degrees.push_back(std::move(h));
  }
  long long sign = 1;
  if (cc.reduced) {
    out.euler_from_counts = -1;
    out.euler_from_betti = -static_cast<long long>(out.degrees.front().betti);
  }
  for (int p = 0; p <= top; ++p, sign = -sign) {
    out.euler_from_counts += sign * static_cast<long long>(cc.dims[static_cast<std::size_t>(p)]);
    out.euler_from_betti += sign * static_cast<long long>(out.at(p).betti);
  }
  if (cc.reduced) {
    int c = -2;
    bool all_zero = true;
    for (const auto& h : out.degrees) {
      if (!h.trusted) break;
      if (!h.vanishes()) {
        all_zero = false;
        break;
      }
      c = h.p;
    }
    out.connectivity_homological = c;
    out.acyclic = all_zero && !cc.truncated;
  }
  return out;
}

}  // namespace mcgstab
