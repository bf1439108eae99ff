#include "mcgstab/destab.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "mcgstab/groupoid.hpp"

namespace mcgstab {

namespace {

Perm transposition(int degree, int a, int b) {
  Perm p = identity_perm(degree);
  std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(b - 1)]);
  return p;
}

Perm rotation_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) p[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>((x + 1) % degree);
  return p;
}

}  // namespace

StabilityFamily::StabilityFamily(std::string name, std::vector<FamilyLevel> levels, std::size_t cap)
    : name_(std::move(name)), levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("family has no levels");
  for (const auto& lv : levels_) groups_.emplace_back(lv.degree, lv.gens, cap);
  const int top_level = top();
  s_table_.resize(static_cast<std::size_t>(top_level));
  for (int n = 0; n < top_level; ++n) {
    const auto& lv = levels_[static_cast<std::size_t>(n)];
    const PermGroup& g = groups_[static_cast<std::size_t>(n)];
    const PermGroup& h = groups_[static_cast<std::size_t>(n + 1)];
    if (lv.inj.size() != lv.gens.size()) {
      throw ValidationError("level " + std::to_string(n) + ": s_n must give one image per generator");
    }
    for (const Perm& img : lv.inj) {
      if (!h.contains(img)) throw ValidationError("level " + std::to_string(n) + ": s_n image outside G_{n+1}");
    }
    auto& table = s_table_[static_cast<std::size_t>(n)];
    table.resize(g.order());
    table[0] = identity_perm(h.degree());
    for (std::size_t id = 1; id < g.order(); ++id) {
      table[id] = multiply(table[g.parent(id)], lv.inj[static_cast<std::size_t>(g.via(id))]);
    }
    for (std::size_t id = 0; id < g.order(); ++id) {
      for (std::size_t gi = 0; gi < g.gens().size(); ++gi) {
        const auto xg = static_cast<std::size_t>(g.find(multiply(g.element(id), g.gens()[gi])));
        if (table[xg] != multiply(table[id], lv.inj[gi])) {
          throw ValidationError("level " + std::to_string(n) + ": s_n is not a homomorphism");
        }
      }
    }
    std::unordered_set<Perm, PermHash> image(table.begin(), table.end());
    if (image.size() != table.size()) throw ValidationError("level " + std::to_string(n) + ": s_n is not injective");
  }
  for (int n = 0; n <= top_level; ++n) {
    const auto& lv = levels_[static_cast<std::size_t>(n)];
    const std::size_t want = n >= 2 ? static_cast<std::size_t>(n - 1) : 0;
    if (lv.yb.size() != want) {
      throw ValidationError("level " + std::to_string(n) + ": expected " + std::to_string(want) + " Yang-Baxter elements");
    }
    for (const Perm& t : lv.yb) {
      if (!group(n).contains(t)) throw ValidationError("level " + std::to_string(n) + ": Yang-Baxter element outside G_n");
    }
    for (std::size_t j = 0; j + 1 < lv.yb.size(); ++j) {
      const Perm& a = lv.yb[j];
      const Perm& b = lv.yb[j + 1];
      if (multiply(multiply(a, b), a) != multiply(multiply(b, a), b)) {
        throw ValidationError("level " + std::to_string(n) + ": braid relation fails for t_" + std::to_string(j + 1));
      }
      for (std::size_t k = j + 2; k < lv.yb.size(); ++k) {
        if (multiply(a, lv.yb[k]) != multiply(lv.yb[k], a)) {
          throw ValidationError("level " + std::to_string(n) + ": far commutation fails for t_" + std::to_string(j + 1) +
                                ", t_" + std::to_string(k + 1));
        }
      }
    }
    if (n < top_level) {
      for (std::size_t j = 0; j < lv.yb.size(); ++j) {
        if (stabilize(n, n + 1, lv.yb[j]) != levels_[static_cast<std::size_t>(n + 1)].yb[j]) {
          throw ValidationError("level " + std::to_string(n) + ": s_n(t_{n," + std::to_string(j + 1) +
                                "}) != t_{n+1," + std::to_string(j + 1) + "}");
        }
      }
    }
  }
}

const Perm& StabilityFamily::yb(int n, int j) const {
  const auto& ts = level(n).yb;
  if (j < 1 || j > static_cast<int>(ts.size())) throw std::out_of_range("no Yang-Baxter element t_{" + std::to_string(n) + "," + std::to_string(j) + "}");
  return ts[static_cast<std::size_t>(j - 1)];
}

Perm StabilityFamily::stabilize(int from, int to, const Perm& x) const {
  Perm cur = x;
  for (int k = from; k < to; ++k) {
    const long long id = group(k).find(cur);
    if (id < 0) throw std::invalid_argument("stabilize: element not in G_" + std::to_string(k));
    cur = s_table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(id)];
  }
  return cur;
}

std::vector<Perm> StabilityFamily::stabilized_gens(int from, int to) const {
  std::vector<Perm> out;
  for (const Perm& g : group(from).gens()) out.push_back(stabilize(from, to, g));
  return out;
}

StabilityFamily symmetric_family(int N, bool identity_yb) {
  if (N < 0) throw std::invalid_argument("symmetric_family needs N >= 0");
  std::vector<FamilyLevel> levels;
  for (int n = 0; n <= N; ++n) {
    FamilyLevel lv;
    lv.degree = std::max(n, 1);
    const int next = std::max(n + 1, 1);
    for (int j = 1; j < n; ++j) {
      lv.gens.push_back(transposition(lv.degree, j, j + 1));
      lv.inj.push_back(transposition(next, j, j + 1));
      lv.yb.push_back(identity_yb ? identity_perm(lv.degree) : transposition(lv.degree, j, j + 1));
    }
    levels.push_back(std::move(lv));
  }
  return StabilityFamily(identity_yb ? "sym-id" : "sym", std::move(levels));
}

StabilityFamily cyclic_family(int N) {
  if (N < 0 || N > 12) throw std::invalid_argument("cyclic_family needs 0 <= N <= 12");
  std::vector<FamilyLevel> levels;
  for (int n = 0; n <= N; ++n) {
    FamilyLevel lv;
    lv.degree = 1 << n;
    const Perm g = rotation_perm(lv.degree);
    if (n >= 1) {
      lv.gens.push_back(g);
      lv.inj.push_back(pow(rotation_perm(lv.degree * 2), 2));
    }
    for (int j = 1; j < n; ++j) lv.yb.push_back(pow(g, 1 << (n - 2)));
    levels.push_back(std::move(lv));
  }
  return StabilityFamily("cyclic", std::move(levels));
}

StabilityFamily trivial_family(int N) {
  std::vector<FamilyLevel> levels;
  for (int n = 0; n <= N; ++n) {
    FamilyLevel lv;
    for (int j = 1; j < n; ++j) lv.yb.push_back(identity_perm(1));
    levels.push_back(std::move(lv));
  }
  return StabilityFamily("trivial", std::move(levels));
}

namespace {

struct RawLevel {
  std::optional<int> points;
  std::vector<std::string> gens;
  std::map<int, std::string> inj;
  std::map<int, std::string> yb;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_perms(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

StabilityFamily load_family(std::string_view document, std::size_t cap) {
  std::vector<RawLevel> raw;
  std::string name = "file";
  std::istringstream in{std::string(document)};
  std::string line;
  int lineno = 0;
  static const std::regex level_re(R"(^level\s+(\d+)$)");
  static const std::regex inj_re(R"(^inj\s*:\s*g(\d+)\s*->\s*(.+)$)");
  static const std::regex yb_re(R"(^yb\s+(\d+)\s*:\s*(.+)$)");
  static const std::regex gens_re(R"(^gens\s*:\s*(.*)$)");
  static const std::regex points_re(R"(^points\s*:\s*(\d+)$)");
  static const std::regex name_re(R"(^family\s+(\S+)$)");
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, level_re)) {
      const int n = std::stoi(m[1]);
      if (n != static_cast<int>(raw.size())) fail("levels must appear in order 0, 1, 2, ...");
      raw.emplace_back();
      continue;
    }
    if (std::regex_match(line, m, name_re)) {
      name = m[1];
      continue;
    }
    if (raw.empty()) fail("expected 'level 0' first");
    RawLevel& cur = raw.back();
    if (std::regex_match(line, m, gens_re)) {
      for (auto& p : split_perms(m[1])) cur.gens.push_back(p);
    } else if (std::regex_match(line, m, inj_re)) {
      cur.inj[std::stoi(m[1])] = trim(m[2]);
    } else if (std::regex_match(line, m, yb_re)) {
      cur.yb[std::stoi(m[1])] = trim(m[2]);
    } else if (std::regex_match(line, m, points_re)) {
      cur.points = std::stoi(m[1]);
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  if (raw.empty()) throw ParseError("no levels");
  std::vector<int> degree(raw.size(), 1);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    int d = 1;
    for (auto& g : raw[n].gens) d = std::max(d, max_point(g));
    for (auto& [j, t] : raw[n].yb) d = std::max(d, max_point(t));
    if (n > 0) {
      for (auto& [k, img] : raw[n - 1].inj) d = std::max(d, max_point(img));
    }
    if (raw[n].points) {
      if (*raw[n].points < d) throw ParseError("level " + std::to_string(n) + ": points smaller than a mentioned point");
      d = *raw[n].points;
    }
    degree[n] = d;
  }
  std::vector<FamilyLevel> levels;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    FamilyLevel lv;
    lv.degree = degree[n];
    for (auto& g : raw[n].gens) lv.gens.push_back(parse_cycles(g, lv.degree));
    if (n + 1 < raw.size()) {
      for (std::size_t k = 1; k <= lv.gens.size(); ++k) {
        auto it = raw[n].inj.find(static_cast<int>(k));
        if (it == raw[n].inj.end()) {
          throw ValidationError("level " + std::to_string(n) + ": missing inj for g" + std::to_string(k));
        }
        lv.inj.push_back(parse_cycles(it->second, degree[n + 1]));
      }
    }
    int expect = 1;
    for (auto& [j, t] : raw[n].yb) {
      if (j != expect++) throw ParseError("level " + std::to_string(n) + ": yb indices must be 1, 2, ...");
      lv.yb.push_back(parse_cycles(t, lv.degree));
    }
    levels.push_back(std::move(lv));
  }
  return StabilityFamily(name, std::move(levels), cap);
}

StabilityFamily load_family_file(const std::string& path, std::size_t cap) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open family file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_family(ss.str(), cap);
}

StabilityFamily family_by_name(const std::string& name, int N) {
  if (name == "sym") return symmetric_family(N);
  if (name == "sym-id") return symmetric_family(N, true);
  if (name == "cyclic") return cyclic_family(N);
  if (name == "trivial") return trivial_family(N);
  throw std::invalid_argument("unknown family '" + name + "' (sym, sym-id, cyclic, trivial)");
}

std::string to_string(BraidWordConvention c) {
  return c == BraidWordConvention::ascending ? "ascending" : "descending";
}

void SemiSimplicialSet::check_identities() const {
  for (int p = 2; p <= pmax(); ++p) {
    const auto& fp = faces[static_cast<std::size_t>(p)];
    const auto& fq = faces[static_cast<std::size_t>(p - 1)];
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j <= p; ++j) {
        for (std::size_t s = 0; s < counts[static_cast<std::size_t>(p)]; ++s) {
          const auto lhs = fq[static_cast<std::size_t>(i)][fp[static_cast<std::size_t>(j)][s]];
          const auto rhs = fq[static_cast<std::size_t>(j - 1)][fp[static_cast<std::size_t>(i)][s]];
          if (lhs != rhs) {
            throw IdentityViolation("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                                    std::to_string(j - 1) + " d_" + std::to_string(i) + " on " + std::to_string(p) +
                                    "-simplex " + std::to_string(s));
          }
        }
      }
    }
  }
}

namespace {

struct CosetLayer {
  std::vector<std::size_t> coset_of;  // element id -> simplex index
  std::vector<std::size_t> rep;       // simplex index -> element id
};

CosetLayer cosets(const PermGroup& g, const std::vector<Perm>& hgens) {
  DisjointSets ds(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (const Perm& h : hgens) ds.unite(x, static_cast<std::size_t>(g.find(multiply(g.element(x), h))));
  }
  std::map<std::size_t, std::size_t> best;  // root -> min element id
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t r = ds.find(x);
    auto it = best.find(r);
    if (it == best.end() || g.element(x) < g.element(it->second)) best[r] = x;
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (rep id, root)
  for (auto& [r, x] : best) order.emplace_back(x, r);
  std::sort(order.begin(), order.end(),
            [&](const auto& a, const auto& b) { return g.element(a.first) < g.element(b.first); });
  std::map<std::size_t, std::size_t> index;
  CosetLayer out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    index[order[k].second] = k;
    out.rep.push_back(order[k].first);
  }
  out.coset_of.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out.coset_of[x] = index[ds.find(x)];
  return out;
}

}  // namespace

SemiSimplicialSet build_W(const StabilityFamily& fam, int n, int a, int pmax) {
  const int L = a + n;
  if (n < 1 || a < 0 || L > fam.top()) throw std::invalid_argument("build_W needs n >= 1, a >= 0, a + n <= N");
  if (pmax < 0 || pmax > n - 1) throw std::invalid_argument("build_W needs 0 <= pmax <= n - 1");
  const PermGroup& g = fam.group(L);
  std::vector<CosetLayer> layers;
  for (int p = 0; p <= pmax; ++p) layers.push_back(cosets(g, fam.stabilized_gens(L - p - 1, L)));

  std::optional<SemiSimplicialSet> chosen;
  std::vector<BraidWordConvention> valid;
  std::string first_failure;
  for (BraidWordConvention conv : {BraidWordConvention::ascending, BraidWordConvention::descending}) {
    SemiSimplicialSet w;
    w.full_dimension = n - 1;
    w.convention = conv;
    for (auto& layer : layers) w.counts.push_back(layer.rep.size());
    w.faces.resize(static_cast<std::size_t>(pmax + 1));
    std::string failure;
    for (int p = 1; p <= pmax && failure.empty(); ++p) {
      const int c = L - p - 1;
      const auto& here = layers[static_cast<std::size_t>(p)];
      const auto& below = layers[static_cast<std::size_t>(p - 1)];
      for (int i = 0; i <= p && failure.empty(); ++i) {
        Perm beta = identity_perm(g.degree());
        for (int k = 1; k <= i; ++k) {
          const int j = conv == BraidWordConvention::ascending ? k : i + 1 - k;
          beta = multiply(beta, inverse(fam.yb(L, c + j)));
        }
        std::vector<std::size_t> face(here.rep.size());
        for (std::size_t s = 0; s < here.rep.size(); ++s) {
          face[s] = below.coset_of[static_cast<std::size_t>(g.find(multiply(g.element(here.rep[s]), beta)))];
        }
        for (std::size_t x = 0; x < g.order(); ++x) {
          const auto img = below.coset_of[static_cast<std::size_t>(g.find(multiply(g.element(x), beta)))];
          if (img != face[here.coset_of[x]]) {
            failure = "d_" + std::to_string(i) + " ill-defined on " + std::to_string(p) + "-simplices";
            break;
          }
        }
        w.faces[static_cast<std::size_t>(p)].push_back(std::move(face));
      }
    }
    if (failure.empty()) {
      try {
        w.check_identities();
      } catch (const IdentityViolation& e) {
        failure = e.what();
      }
    }
    if (failure.empty()) {
      valid.push_back(conv);
      if (!chosen) chosen = std::move(w);
    } else if (first_failure.empty()) {
      first_failure = to_string(conv) + ": " + failure;
    }
  }
  if (!chosen) throw IdentityViolation("no block-braid word convention is valid; " + first_failure);
  chosen->valid_conventions = valid;
  return *chosen;
}

std::size_t pi0(const SemiSimplicialSet& w) {
  if (w.counts.empty()) return 0;
  DisjointSets ds(w.counts[0]);
  if (w.pmax() >= 1) {
    for (std::size_t e = 0; e < w.counts[1]; ++e) ds.unite(w.faces[1][0][e], w.faces[1][1][e]);
  }
  return ds.components();
}

bool barucco_check(const StabilityFamily& fam, int n, int a) {
  const int L = a + n;
  if (n < 1 || a < 0 || L > fam.top()) throw std::invalid_argument("barucco_check needs n >= 1, a >= 0, a + n <= N");
  std::vector<Perm> gens = fam.stabilized_gens(L - 1, L);
  if (n >= 2) gens.push_back(fam.yb(L, L - 1));
  return subgroup_order(fam.group(L).degree(), gens) == fam.group(L).order();
}

}  // namespace mcgstab
