#include "mcgstab/groupoid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mcgstab {

namespace {

void check_letter(int rank, Letter l) {
  if (l.index < 1 || l.index > rank) {
    throw CompositionError("arc index " + std::to_string(l.index) + " outside 1.." + std::to_string(rank));
  }
}

// Stack-based free reduction; the result is independent of cancellation order.
std::vector<Letter> freely_reduce(int rank, Endpoint source, std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  Endpoint at = source;
  for (const Letter& l : letters) {
    check_letter(rank, l);
    if (l.start() != at) {
      throw CompositionError("letters do not compose: " + to_string(letters));
    }
    at = l.end();
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::size_t least_rotation(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = w[(r + k) % n];
      const Letter& b = w[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = r;
      break;
    }
  }
  return best;
}

}  // namespace

ArcPath::ArcPath(int rank, Endpoint source, std::span<const Letter> letters)
    : rank_(rank), source_(source), target_(source), letters_(freely_reduce(rank, source, letters)) {
  if (rank < 0) throw RankMismatch("negative rank");
  // Parity of the original length fixes the target, even if everything cancels.
  target_ = (letters.size() % 2 == 0) ? source : other(source);
}

ArcPath ArcPath::arc(int rank, int i, bool forward) {
  const Letter l{i, forward};
  return ArcPath(rank, l.start(), {l});
}

ArcPath reduce(int rank, Endpoint source, std::span<const Letter> letters) {
  return ArcPath(rank, source, letters);
}

ArcPath compose(const ArcPath& p, const ArcPath& q) {
  if (p.rank_ != q.rank_) {
    throw RankMismatch("compose: rank " + std::to_string(p.rank_) + " vs " + std::to_string(q.rank_));
  }
  if (p.target_ != q.source_) {
    throw CompositionError("endpoint mismatch composing " + to_string(p) + " with " + to_string(q));
  }
  ArcPath out;
  out.rank_ = p.rank_;
  out.source_ = p.source_;
  out.target_ = q.target_;
  out.letters_ = p.letters_;
  for (const Letter& l : q.letters_) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

ArcPath invert(const ArcPath& p) {
  ArcPath out;
  out.rank_ = p.rank_;
  out.source_ = p.target_;
  out.target_ = p.source_;
  out.letters_.reserve(p.letters_.size());
  for (auto it = p.letters_.rbegin(); it != p.letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

ArcPath CyclicWord::as_loop() const {
  return ArcPath(rank_, letters_.front().start(), letters_);
}

CyclicWord cyclic_normal_form(const ArcPath& loop) {
  if (!loop.is_closed()) throw CompositionError("not a closed path: " + to_string(loop));
  std::vector<Letter> w = loop.letters();
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (hi == lo) throw TrivialLoop("loop is null-homotopic: " + to_string(loop));
  std::vector<Letter> core(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t r = least_rotation(core);
  std::rotate(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
  CyclicWord out;
  out.rank_ = loop.rank();
  out.letters_ = std::move(core);
  return out;
}

bool free_homotopic(const ArcPath& a, const ArcPath& b, bool unoriented) {
  if (a.rank() != b.rank()) throw RankMismatch("free_homotopic: rank mismatch");
  const CyclicWord na = cyclic_normal_form(a);
  if (na == cyclic_normal_form(b)) return true;
  return unoriented && na == cyclic_normal_form(invert(b));
}

ArcPath parse_path(int rank, std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'r' && tok[0] != 'R') ||
        !std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("bad arc token '" + tok + "'");
    }
    letters.push_back({std::stoi(tok.substr(1)), tok[0] == 'r'});
  }
  const Endpoint source = letters.empty() ? Endpoint::b0 : letters.front().start();
  return ArcPath(rank, source, letters);
}

std::string to_string(std::span<const Letter> letters) {
  std::string s;
  for (const Letter& l : letters) {
    if (!s.empty()) s += ' ';
    s += (l.forward ? 'r' : 'R');
    s += std::to_string(l.index);
  }
  return s;
}

std::string to_string(const ArcPath& p) {
  if (p.is_empty()) return p.source() == Endpoint::b0 ? "1@b0" : "1@b1";
  return to_string(std::span<const Letter>(p.letters()));
}

std::string to_string(const CyclicWord& w) { return "(" + to_string(std::span<const Letter>(w.letters())) + ")"; }

std::ostream& operator<<(std::ostream& os, const ArcPath& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const CyclicWord& w) { return os << to_string(w); }

}  // namespace mcgstab
