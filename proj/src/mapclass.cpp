#include "mcgstab/mapclass.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace mcgstab {

namespace {

void require_same_rank(const MappingClass& f, const MappingClass& g, const char* what) {
  if (f.rank() != g.rank()) {
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(f.rank()) + " vs " + std::to_string(g.rank()));
  }
}

ArcPath word(int rank, std::initializer_list<Letter> letters) {
  const Endpoint src = letters.size() == 0 ? Endpoint::b0 : letters.begin()->start();
  return ArcPath(rank, src, letters);
}

ArcPath shift(const ArcPath& p, int by, int new_rank) {
  std::vector<Letter> ls = p.letters();
  for (Letter& l : ls) l.index += by;
  return ArcPath(new_rank, p.source(), ls);
}

std::vector<ArcPath> identity_images(int rank) {
  std::vector<ArcPath> out;
  out.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) out.push_back(ArcPath::arc(rank, i));
  return out;
}

// Alternating word starting with `first` on indices lo, lo+1, ..., hi.
std::vector<Letter> alternating(int lo, int hi, bool first_forward) {
  std::vector<Letter> out;
  bool fwd = first_forward;
  for (int i = lo; i <= hi; ++i) {
    out.push_back({i, fwd});
    fwd = !fwd;
  }
  return out;
}

}  // namespace

MappingClass MappingClass::identity(int rank) {
  MappingClass f;
  f.rank_ = rank;
  f.images_ = identity_images(rank);
  f.inverse_ = f.images_;
  return f;
}

MappingClass MappingClass::from_images(std::vector<ArcPath> images, std::vector<ArcPath> inverse_images) {
  const int rank = static_cast<int>(images.size());
  if (inverse_images.size() != images.size()) throw std::invalid_argument("image list sizes differ");
  for (const auto* list : {&images, &inverse_images}) {
    for (const ArcPath& p : *list) {
      if (p.rank() != rank || p.source() != Endpoint::b0 || p.target() != Endpoint::b1) {
        throw std::invalid_argument("image " + to_string(p) + " is not a b0->b1 path of rank " + std::to_string(rank));
      }
    }
  }
  for (int i = 1; i <= rank; ++i) {
    const ArcPath id = ArcPath::arc(rank, i);
    const auto k = static_cast<std::size_t>(i - 1);
    if (apply_letters(images, inverse_images[k]) != id || apply_letters(inverse_images, images[k]) != id) {
      throw std::invalid_argument("inverse witness fails on rho_" + std::to_string(i));
    }
  }
  MappingClass f;
  f.rank_ = rank;
  f.images_ = std::move(images);
  f.inverse_ = std::move(inverse_images);
  return f;
}

bool MappingClass::is_identity() const {
  for (int i = 1; i <= rank_; ++i) {
    if (image(i) != ArcPath::arc(rank_, i)) return false;
  }
  return true;
}

ArcPath apply_letters(const std::vector<ArcPath>& images, const ArcPath& p) {
  const int rank = static_cast<int>(images.size());
  if (p.rank() != rank) throw RankMismatch("apply: path rank " + std::to_string(p.rank()) + " vs " + std::to_string(rank));
  ArcPath out = ArcPath::empty(rank, p.source());
  for (const Letter& l : p.letters()) {
    const ArcPath& img = images[static_cast<std::size_t>(l.index - 1)];
    out = compose(out, l.forward ? img : invert(img));
  }
  return out;
}

ArcPath apply(const MappingClass& f, const ArcPath& p) { return apply_letters(f.images(), p); }

MappingClass compose_mc(const MappingClass& f, const MappingClass& g) {
  require_same_rank(f, g, "compose_mc");
  MappingClass h;
  h.rank_ = f.rank_;
  h.images_.reserve(g.images_.size());
  for (const ArcPath& p : g.images_) h.images_.push_back(apply_letters(f.images_, p));
  h.inverse_.reserve(f.inverse_.size());
  for (const ArcPath& p : f.inverse_) h.inverse_.push_back(apply_letters(g.inverse_, p));
  return h;
}

MappingClass invert_mc(const MappingClass& f) {
  MappingClass h;
  h.rank_ = f.rank_;
  h.images_ = f.inverse_;
  h.inverse_ = f.images_;
  return h;
}

bool mc_equal(const MappingClass& f, const MappingClass& g) {
  require_same_rank(f, g, "mc_equal");
  return f.images() == g.images();
}

MappingClass power(const MappingClass& f, int k) {
  MappingClass base = k < 0 ? invert_mc(f) : f;
  MappingClass out = MappingClass::identity(f.rank());
  for (int j = 0; j < (k < 0 ? -k : k); ++j) out = compose_mc(out, base);
  return out;
}

MappingClass product(const std::vector<MappingClass>& factors, int rank) {
  MappingClass out = MappingClass::identity(rank);
  for (const MappingClass& f : factors) out = compose_mc(out, f);
  return out;
}

MappingClass dehn_twist(int m, int i, int sign, TwistConvention conv) {
  if (i < 1 || i > m - 1) {
    throw IndexError("twist index " + std::to_string(i) + " outside 1.." + std::to_string(m - 1));
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
  std::vector<ArcPath> pos = identity_images(m);
  std::vector<ArcPath> neg = pos;
  const auto a = static_cast<std::size_t>(i - 1);
  pos[a] = word(m, {rho(i), rho_bar(i + 1), rho(i)});
  pos[a + 1] = ArcPath::arc(m, i);
  neg[a] = ArcPath::arc(m, i + 1);
  neg[a + 1] = word(m, {rho(i + 1), rho_bar(i), rho(i + 1)});
  const bool positive = (sign == 1) == (conv == TwistConvention::lemma);
  return positive ? MappingClass::from_images(pos, neg) : MappingClass::from_images(neg, pos);
}

MappingClass sum(const MappingClass& f, const MappingClass& g) {
  const int m = f.rank();
  const int r = m + g.rank();
  std::vector<ArcPath> img;
  std::vector<ArcPath> inv;
  for (int i = 0; i < m; ++i) {
    img.push_back(shift(f.images()[static_cast<std::size_t>(i)], 0, r));
    inv.push_back(shift(f.inverse_images()[static_cast<std::size_t>(i)], 0, r));
  }
  for (int i = 0; i < g.rank(); ++i) {
    img.push_back(shift(g.images()[static_cast<std::size_t>(i)], m, r));
    inv.push_back(shift(g.inverse_images()[static_cast<std::size_t>(i)], m, r));
  }
  return MappingClass::from_images(std::move(img), std::move(inv));
}

MappingClass phi(const BraidWord& b, TwistConvention conv) {
  MappingClass out = MappingClass::identity(b.strands);
  for (int s : b.letters) {
    const int i = s < 0 ? -s : s;
    if (s == 0 || i > b.strands - 1) throw IndexError("braid generator " + std::to_string(s) + " out of range");
    out = compose_mc(out, dehn_twist(b.strands, i, s > 0 ? -1 : 1, conv));
  }
  return out;
}

namespace {

ArcPath reversed_word(const ArcPath& p) {
  std::vector<Letter> ls(p.letters().rbegin(), p.letters().rend());
  // A b0->b1 word of odd length reads backwards as a b0->b1 word.
  return ArcPath(p.rank(), ls.empty() ? p.source() : ls.front().start(), ls);
}

}  // namespace

MappingClass bar_conjugate(const MappingClass& f) {
  std::vector<ArcPath> img;
  std::vector<ArcPath> inv;
  for (const ArcPath& p : f.images()) img.push_back(reversed_word(p));
  for (const ArcPath& p : f.inverse_images()) inv.push_back(reversed_word(p));
  return MappingClass::from_images(std::move(img), std::move(inv));
}

MappingClass bar_conjugate_alt(const MappingClass& f) {
  std::vector<ArcPath> img;
  std::vector<ArcPath> inv;
  for (const ArcPath& p : f.images()) img.push_back(invert(iota_image(p)));
  for (const ArcPath& p : f.inverse_images()) inv.push_back(invert(iota_image(p)));
  return MappingClass::from_images(std::move(img), std::move(inv));
}

ArcPath iota_image(const ArcPath& c) {
  std::vector<Letter> ls = c.letters();
  for (Letter& l : ls) l = l.flipped();
  return ArcPath(c.rank(), other(c.source()), ls);
}

MappingClass block_braid(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("block_braid needs m, n >= 1");
  const int r = m + n;
  MappingClass out = MappingClass::identity(r);
  for (int k = 1; k <= n; ++k) {
    // F_k = T_k o ... o T_{k+m-1}; F_k acts after F_{k-1}.
    MappingClass fk = MappingClass::identity(r);
    for (int j = k; j <= k + m - 1; ++j) fk = compose_mc(fk, dehn_twist(r, j, 1));
    out = compose_mc(fk, out);
  }
  return out;
}

ArcPath block_braid_closed_form(int m, int n, int i) {
  if (i < 1 || i > m) throw IndexError("closed form index outside 1..m");
  const int r = m + n;
  std::vector<Letter> ls;
  for (int j = 1; j <= n; ++j) ls.push_back({j, (j - 1) % 2 == 0});
  ls.push_back({i + n, n % 2 == 0});
  for (int j = n; j >= 1; --j) ls.push_back({j, (j - 1) % 2 == 0});
  return ArcPath(r, Endpoint::b0, ls);
}

ArcPath boundary_loop_b0(int m) {
  std::vector<Letter> ls = alternating(1, m, true);
  if (m % 2 == 1) {
    const auto tail = alternating(1, m, false);
    ls.insert(ls.end(), tail.begin(), tail.end());
  }
  return ArcPath(m, Endpoint::b0, ls);
}

ArcPath boundary_loop_b1(int m) {
  std::vector<Letter> ls = alternating(1, m, false);
  if (m % 2 == 1) {
    const auto tail = alternating(1, m, true);
    ls.insert(ls.end(), tail.begin(), tail.end());
  }
  return ArcPath(m, Endpoint::b1, ls);
}

MappingClass boundary_twist_b0(int m) {
  if (m < 2) throw std::invalid_argument("boundary twist needs m >= 2");
  const ArcPath d0 = boundary_loop_b0(m);
  const ArcPath d1 = boundary_loop_b1(m);
  std::vector<ArcPath> img;
  std::vector<ArcPath> inv;
  for (int i = 1; i <= m; ++i) {
    const ArcPath r = ArcPath::arc(m, i);
    if (m % 2 == 0) {
      img.push_back(compose(d0, r));
      inv.push_back(compose(invert(d0), r));
    } else {
      img.push_back(compose(compose(d0, r), invert(d1)));
      inv.push_back(compose(compose(invert(d0), r), d1));
    }
  }
  return MappingClass::from_images(std::move(img), std::move(inv));
}

MappingClass boundary_twist_b1(int m) {
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("boundary_twist_b1 needs even m");
  const ArcPath d1 = boundary_loop_b1(m);
  std::vector<ArcPath> img;
  std::vector<ArcPath> inv;
  for (int i = 1; i <= m; ++i) {
    const ArcPath r = ArcPath::arc(m, i);
    img.push_back(compose(r, invert(d1)));
    inv.push_back(compose(r, d1));
  }
  return MappingClass::from_images(std::move(img), std::move(inv));
}

BlockConjugationResult block_conjugation(int m, int n, const MappingClass& f, const MappingClass& g) {
  if (f.rank() != m || g.rank() != n) throw RankMismatch("block_conjugation: operand ranks do not match (m, n)");
  const MappingClass beta = block_braid(m, n);
  const MappingClass fg = sum(f, g);
  const MappingClass h = n % 2 == 1 ? bar_conjugate(f) : f;
  const MappingClass h_alt = n % 2 == 1 ? bar_conjugate_alt(f) : f;
  const MappingClass conj = compose_mc(compose_mc(beta, fg), invert_mc(beta));
  BlockConjugationResult out;
  out.pass = mc_equal(conj, sum(g, h));
  out.alt_bar_pass = mc_equal(conj, sum(g, h_alt));
  const MappingClass literal = compose_mc(compose_mc(beta, fg), invert_mc(block_braid(n, m)));
  out.literal_pass = mc_equal(literal, sum(g, h));
  return out;
}

bool verify_block_conjugation(int m, int n, const MappingClass& f, const MappingClass& g) {
  return block_conjugation(m, n, f, g).pass;
}

bool verify_yang_baxter(const MappingClass& tau) {
  if (tau.rank() != 2) throw RankMismatch("Yang-Baxter operator must have rank 2");
  const MappingClass one = MappingClass::identity(1);
  const MappingClass a = sum(tau, one);
  const MappingClass b = sum(one, tau);
  return mc_equal(compose_mc(compose_mc(a, b), a), compose_mc(compose_mc(b, a), b));
}

bool BraidingCandidate::survives() const {
  return std::all_of(checks.begin(), checks.end(), [](const BraidingCheck& c) { return c.pass; });
}

bool BraidingReport::refuted(int k) const {
  bool any = false;
  for (const auto& c : candidates) {
    if (c.k != k) continue;
    any = true;
    if (c.survives()) return false;
  }
  return any;
}

bool BraidingReport::all_refuted() const {
  return std::all_of(candidates.begin(), candidates.end(), [this](const BraidingCandidate& c) { return refuted(c.k); });
}

namespace {

// beta~_{m,1} built from T_1^k by the hexagon axiom; `A` composes
// T_1^k o ... o T_m^k, `B` the reverse order.
MappingClass hexagon_m1(int m, int k, Hexagon conv) {
  const int r = m + 1;
  std::vector<MappingClass> factors;
  for (int j = 1; j <= m; ++j) factors.push_back(power(dehn_twist(r, j, 1), k));
  if (conv == Hexagon::B) std::reverse(factors.begin(), factors.end());
  return product(factors, r);
}

// beta~_{1,n}: `A` composes T_n^k o ... o T_1^k, `B` the reverse order.
MappingClass hexagon_1n(int n, int k, Hexagon conv) {
  const int r = n + 1;
  std::vector<MappingClass> factors;
  for (int j = n; j >= 1; --j) factors.push_back(power(dehn_twist(r, j, 1), k));
  if (conv == Hexagon::B) std::reverse(factors.begin(), factors.end());
  return product(factors, r);
}

}  // namespace

BraidingReport refute_braiding_candidates(int K) {
  if (K < 1) throw std::invalid_argument("refute_braiding_candidates needs K >= 1");
  BraidingReport report;
  const MappingClass id1 = MappingClass::identity(1);
  const MappingClass t12 = dehn_twist(2, 1, 1);
  const MappingClass tb4 = boundary_twist_b0(4);
  const ArcPath a1 = ArcPath(3, Endpoint::b0, {rho(1), rho_bar(2)});
  const ArcPath a2 = ArcPath(3, Endpoint::b0, {rho(2), rho_bar(3)});
  for (int k = -K; k <= K; ++k) {
    for (Hexagon conv : {Hexagon::A, Hexagon::B}) {
      BraidingCandidate cand;
      cand.k = k;
      cand.convention = conv;
      const MappingClass b12 = hexagon_1n(2, k, conv);
      const MappingClass b21 = hexagon_m1(2, k, conv);
      const MappingClass b41 = hexagon_m1(4, k, conv);
      const MappingClass b14 = hexagon_1n(4, k, conv);
      cand.checks.push_back(
          {"naturality beta12 (id#T1) = (T1#id) beta12",
           mc_equal(compose_mc(b12, sum(id1, t12)), compose_mc(sum(t12, id1), b12))});
      cand.checks.push_back(
          {"naturality beta21 (T1#id) = (id#T1) beta21",
           mc_equal(compose_mc(b21, sum(t12, id1)), compose_mc(sum(id1, t12), b21))});
      cand.checks.push_back(
          {"naturality beta41 (Td0#id) = (id#Td0) beta41",
           mc_equal(compose_mc(b41, sum(tb4, id1)), compose_mc(sum(id1, tb4), b41))});
      cand.checks.push_back(
          {"naturality beta14 (id#Td0) = (Td0#id) beta14",
           mc_equal(compose_mc(b14, sum(id1, tb4)), compose_mc(sum(tb4, id1), b14))});
      const ArcPath moved = apply(b21, a1);
      bool curve = false;
      try {
        curve = free_homotopic(moved, a2, true);
        cand.curve_image = to_string(cyclic_normal_form(moved));
      } catch (const TrivialLoop&) {
        cand.curve_image = "trivial";
      }
      cand.checks.push_back({"curve beta21(a1) ~ a2", curve});
      report.candidates.push_back(std::move(cand));
    }
  }
  return report;
}

std::optional<CyclicWord> search_iota_asymmetric_curve(int m, int max_len) {
  if (m < 1) throw std::invalid_argument("search needs m >= 1");
  std::set<CyclicWord> seen;
  std::vector<Letter> w;
  std::optional<CyclicWord> found;
  std::function<void(int)> extend = [&](int len) {
    if (found) return;
    if (static_cast<int>(w.size()) == len) {
      if (w.back().index == w.front().index) return;
      const ArcPath loop(m, Endpoint::b0, w);
      const CyclicWord nf = cyclic_normal_form(loop);
      if (!seen.insert(nf).second) return;
      if (!free_homotopic(iota_image(loop), loop, true)) found = nf;
      return;
    }
    const bool fwd = w.size() % 2 == 0;
    for (int i = 1; i <= m && !found; ++i) {
      if (!w.empty() && w.back().index == i) continue;
      w.push_back({i, fwd});
      extend(len);
      w.pop_back();
    }
  };
  for (int len = 2; len <= max_len && !found; len += 2) extend(len);
  return found;
}

}  // namespace mcgstab
