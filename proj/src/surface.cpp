#include "mcgstab/surface.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mcgstab {

namespace {

std::vector<int> orbit_labels(int n, const std::function<int(int)>& step) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int h = 0; h < n; ++h) {
    if (label[static_cast<std::size_t>(h)] != -1) continue;
    for (int x = h; label[static_cast<std::size_t>(x)] == -1; x = step(x)) label[static_cast<std::size_t>(x)] = next;
    ++next;
  }
  return label;
}

int count_labels(const std::vector<int>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

}  // namespace

CombSurface::CombSurface(std::vector<int> rotation, int mark0, int mark1, int punctures)
    : rotation_(std::move(rotation)), mark0_(mark0), mark1_(mark1), punctures_(punctures) {
  const int n = half_edges();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("half-edge count must be positive and even");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : rotation_) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) throw std::invalid_argument("rotation is not a permutation");
    hit[static_cast<std::size_t>(x)] = 1;
  }
  if (mark0 < 0 || mark0 >= n || mark1 < 0 || mark1 >= n) throw std::invalid_argument("mark out of range");
  const auto v = vertex_labels();
  if (v[static_cast<std::size_t>(mark0)] == v[static_cast<std::size_t>(mark1)]) {
    throw std::invalid_argument("marks must sit at distinct vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int h = stack.back();
    stack.pop_back();
    for (int y : {rotation_[static_cast<std::size_t>(h)], partner(h)}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("combinatorial map is disconnected");
}

std::vector<int> CombSurface::vertex_labels() const {
  return orbit_labels(half_edges(), [this](int h) { return rotation_[static_cast<std::size_t>(h)]; });
}

std::vector<int> CombSurface::face_labels() const {
  return orbit_labels(half_edges(), [this](int h) { return face_step(h); });
}

std::vector<int> CombSurface::vertex_order_after_gap(int mark) const {
  std::vector<int> out;
  int h = rotation_[static_cast<std::size_t>(mark)];
  out.push_back(h);
  while (h != mark) {
    h = rotation_[static_cast<std::size_t>(h)];
    out.push_back(h);
  }
  return out;
}

CombSurface CombSurface::delete_edges(const std::vector<int>& edge_ids) const {
  std::vector<char> dead(static_cast<std::size_t>(edges()), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= edges()) throw std::invalid_argument("edge id out of range");
    dead[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<int> new_edge(static_cast<std::size_t>(edges()), -1);
  int ne = 0;
  for (int e = 0; e < edges(); ++e) {
    if (!dead[static_cast<std::size_t>(e)]) new_edge[static_cast<std::size_t>(e)] = ne++;
  }
  if (ne == 0) throw std::invalid_argument("cannot delete every edge");
  auto alive = [&](int h) { return !dead[static_cast<std::size_t>(h / 2)]; };
  auto renum = [&](int h) { return 2 * new_edge[static_cast<std::size_t>(h / 2)] + (h & 1); };
  std::vector<int> inv(rotation_.size());
  for (int h = 0; h < half_edges(); ++h) inv[static_cast<std::size_t>(rotation_[static_cast<std::size_t>(h)])] = h;
  auto last_alive_before_gap = [&](int mark) {
    int h = mark;
    for (int guard = 0; !alive(h); ++guard) {
      if (guard > half_edges()) throw std::invalid_argument("marked vertex loses all edges");
      h = inv[static_cast<std::size_t>(h)];
    }
    return h;
  };
  std::vector<int> rot(static_cast<std::size_t>(2 * ne));
  for (int h = 0; h < half_edges(); ++h) {
    if (!alive(h)) continue;
    int x = rotation_[static_cast<std::size_t>(h)];
    while (!alive(x)) x = rotation_[static_cast<std::size_t>(x)];
    rot[static_cast<std::size_t>(renum(h))] = renum(x);
  }
  return CombSurface(std::move(rot), renum(last_alive_before_gap(mark0_)), renum(last_alive_before_gap(mark1_)),
                     punctures_);
}

SurfaceInvariants invariants(const CombSurface& s) {
  const auto faces = s.face_labels();
  const int v = count_labels(s.vertex_labels());
  const int e = s.edges();
  const int f = count_labels(faces);
  SurfaceInvariants out;
  out.euler = v - e;
  out.boundary = f;
  out.genus = (2 - v + e - f) / 2;
  const int c0 = faces[static_cast<std::size_t>(s.rotation()[static_cast<std::size_t>(s.mark0())])];
  const int c1 = faces[static_cast<std::size_t>(s.rotation()[static_cast<std::size_t>(s.mark1())])];
  out.nu = c0 == c1 ? 1 : 2;
  out.punctures = s.punctures();
  return out;
}

CombSurface glue(const CombSurface& a, const CombSurface& b) {
  const int off = a.half_edges();
  std::vector<int> rot(static_cast<std::size_t>(a.half_edges() + b.half_edges()));
  for (int h = 0; h < a.half_edges(); ++h) rot[static_cast<std::size_t>(h)] = a.rotation()[static_cast<std::size_t>(h)];
  for (int h = 0; h < b.half_edges(); ++h) {
    rot[static_cast<std::size_t>(h + off)] = b.rotation()[static_cast<std::size_t>(h)] + off;
  }
  auto splice = [&](int ma, int mb) {
    std::vector<int> order = a.vertex_order_after_gap(ma);
    for (int h : b.vertex_order_after_gap(mb)) order.push_back(h + off);
    for (std::size_t k = 0; k < order.size(); ++k) {
      rot[static_cast<std::size_t>(order[k])] = order[(k + 1) % order.size()];
    }
  };
  splice(a.mark0(), b.mark0());
  splice(a.mark1(), b.mark1());
  return CombSurface(std::move(rot), b.mark0() + off, b.mark1() + off, a.punctures() + b.punctures());
}

CombSurface disk() { return CombSurface({0, 1}, 0, 1); }

CombSurface glue_disk(const CombSurface& s) { return glue(s, disk()); }

CombSurface build_Xm(int m) {
  if (m < 1) throw std::invalid_argument("build_Xm needs m >= 1");
  CombSurface s = disk();
  for (int k = 1; k < m; ++k) s = glue_disk(s);
  return s;
}

CombSurface build_S0r(int r) {
  if (r < 1) throw std::invalid_argument("build_S0r needs r >= 1");
  const int n = 2 * r;
  std::vector<int> rot(static_cast<std::size_t>(n));
  // b0: 0, then each loop's two half-edges side by side; b1: 1 alone.
  std::vector<int> order{0};
  for (int h = 2; h < n; ++h) order.push_back(h);
  for (std::size_t k = 0; k < order.size(); ++k) rot[static_cast<std::size_t>(order[k])] = order[(k + 1) % order.size()];
  rot[1] = 1;
  return CombSurface(std::move(rot), order.back(), 1);
}

SurfaceType surface_type(int m) {
  if (m < 1) throw std::invalid_argument("surface_type needs m >= 1");
  return m % 2 == 0 ? SurfaceType{m / 2 - 1, 2} : SurfaceType{(m - 1) / 2, 1};
}

SurfaceInvariants cut_standard_simplex(const CombSurface& base, int n, int p) {
  if (p < 0) throw std::invalid_argument("simplex dimension must be >= 0");
  if (p + 1 > n) {
    throw TooManyArcs("cannot cut " + std::to_string(p + 1) + " arcs from " + std::to_string(n) + " glued disks");
  }
  CombSurface s = base;
  for (int k = 0; k < n; ++k) s = glue_disk(s);
  std::vector<int> last;
  for (int e = s.edges() - p - 1; e < s.edges(); ++e) last.push_back(e);
  return invariants(s.delete_edges(last));
}

CutComparison cut_formula(int g, int r, int nu, int p) {
  if (g < 0 || r < 1 || (nu != 1 && nu != 2) || p < 0) throw Unrealizable("parameters out of domain");
  if (nu == 2 && r < 2) throw Unrealizable("nu = 2 needs at least two boundary components");
  if (p > 2 * g + nu - 2) throw Unrealizable("no disordered " + std::to_string(p) + "-simplex on this surface");
  const int n = nu == 1 ? 2 * g : 2 * g + 1;
  const CombSurface base = build_S0r(nu == 1 ? r : r - 1);
  CombSurface whole = base;
  for (int k = 0; k < n; ++k) whole = glue_disk(whole);
  const SurfaceInvariants before = invariants(whole);
  if (before.genus != g || before.boundary != r || before.nu != nu) {
    throw Unrealizable("realization does not have the requested type");
  }
  const SurfaceInvariants after = cut_standard_simplex(base, n, p);
  CutComparison c;
  c.g = g;
  c.r = r;
  c.nu = nu;
  c.p = p;
  c.formula_genus = g - floor_div(p + 3 - nu, 2);
  c.formula_boundary = p % 2 == 0 ? r + (nu % 2 == 0 ? 1 : -1) : r;
  c.oracle_genus = after.genus;
  c.oracle_boundary = after.boundary;
  return c;
}

long long walk_intersection(const CombSurface& s, const std::vector<int>& walk_a, const std::vector<int>& walk_b) {
  std::vector<long long> cochain(static_cast<std::size_t>(s.edges()), 0);
  const std::size_t k = walk_a.size();
  for (std::size_t j = 0; j < k; ++j) {
    const int in = CombSurface::partner(walk_a[j]);
    const int out = walk_a[(j + 1) % k];
    for (int x = s.rotation()[static_cast<std::size_t>(out)]; x != in; x = s.rotation()[static_cast<std::size_t>(x)]) {
      cochain[static_cast<std::size_t>(x / 2)] += (x % 2 == 0) ? 1 : -1;
    }
  }
  long long total = 0;
  for (int h : walk_b) total += cochain[static_cast<std::size_t>(h / 2)] * ((h % 2 == 0) ? 1 : -1);
  return total;
}

IntMatrix64 intersection_form(int m) {
  if (m < 2) throw std::invalid_argument("intersection_form needs m >= 2");
  const CombSurface s = build_Xm(m);
  const int d = m - 1;
  std::vector<std::vector<int>> walks;
  for (int i = 1; i <= d; ++i) walks.push_back({2 * (i - 1), 2 * i + 1});
  IntMatrix64 j(static_cast<std::size_t>(d), std::vector<long long>(static_cast<std::size_t>(d), 0));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          walk_intersection(s, walks[static_cast<std::size_t>(a)], walks[static_cast<std::size_t>(b)]);
    }
  }
  if (d >= 2 && j[0][1] > 0) {
    for (auto& row : j) {
      for (auto& x : row) x = -x;
    }
  }
  return j;
}

}  // namespace mcgstab
