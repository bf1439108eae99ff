#include "mcgstab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "mcgstab/groupoid.hpp"

namespace mcgstab {

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

Perm multiply(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw std::invalid_argument("multiply: degree mismatch");
  Perm out(f.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

Perm inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<std::uint16_t>(x);
  return out;
}

Perm pow(const Perm& f, int k) {
  const Perm base = k < 0 ? inverse(f) : f;
  Perm out = identity_perm(static_cast<int>(f.size()));
  for (int j = 0; j < (k < 0 ? -k : k); ++j) out = multiply(out, base);
  return out;
}

Perm extend(const Perm& f, int degree) {
  if (static_cast<int>(f.size()) > degree) throw std::invalid_argument("extend: cannot shrink a permutation");
  Perm out = identity_perm(degree);
  std::copy(f.begin(), f.end(), out.begin());
  return out;
}

int max_point(std::string_view cycles) {
  int best = 0;
  int cur = -1;
  for (char c : cycles) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = (cur < 0 ? 0 : cur) * 10 + (c - '0');
    } else {
      best = std::max(best, cur);
      cur = -1;
    }
  }
  return std::max(best, cur);
}

Perm parse_cycles(std::string_view text, int degree) {
  Perm p = identity_perm(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("bad token in permutation '" + std::string(text) + "'");
      const int pt = std::stoi(std::string(text.substr(i, j - i)));
      if (pt < 1 || pt > degree) throw ParseError("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(pt - 1)]) throw ParseError("point repeated in '" + std::string(text) + "'");
      used[static_cast<std::size_t>(pt - 1)] = 1;
      cycle.push_back(pt - 1);
      i = j;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[static_cast<std::size_t>(cycle[k])] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    }
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
      y = p[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::size_t cap) : degree_(degree), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("generator degree mismatch");
  }
  const Perm e = identity_perm(degree);
  elements_.push_back(e);
  parent_.push_back(0);
  via_.push_back(-1);
  index_.emplace(e, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      Perm next = multiply(elements_[head], gens_[gi]);
      if (index_.count(next)) continue;
      if (elements_.size() >= cap) throw ResourceError("group order exceeds cap " + std::to_string(cap));
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
      parent_.push_back(head);
      via_.push_back(static_cast<int>(gi));
    }
  }
}

long long PermGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<long long>(it->second);
}

std::size_t subgroup_order(int degree, const std::vector<Perm>& gens, std::size_t cap) {
  return PermGroup(degree, gens, cap).order();
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

}  // namespace mcgstab
