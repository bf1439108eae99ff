#pragma once

// Word calculus in the free groupoid generated by the core arcs rho_1..rho_m
// of D^#m.  Every arc runs from the marked point b0 to the marked point b1;
// a path is an alternating word in the arcs and their reverses.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcgstab {

enum class Endpoint : std::uint8_t { b0 = 0, b1 = 1 };

constexpr Endpoint other(Endpoint e) { return e == Endpoint::b0 ? Endpoint::b1 : Endpoint::b0; }

class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrivialLoop : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One arc rho_i (forward, b0 -> b1) or its reverse (backward, b1 -> b0).
/// Ordering is lexicographic on (index, orientation) with forward first; the
/// cyclic normal form depends on it.
struct Letter {
  int index = 1;
  bool forward = true;

  constexpr Endpoint start() const { return forward ? Endpoint::b0 : Endpoint::b1; }
  constexpr Endpoint end() const { return forward ? Endpoint::b1 : Endpoint::b0; }
  constexpr Letter inverse() const { return {index, !forward}; }
  constexpr Letter flipped() const { return inverse(); }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter& o) const {
    if (auto c = index <=> o.index; c != 0) return c;
    return static_cast<int>(!forward) <=> static_cast<int>(!o.forward);
  }
};

constexpr Letter rho(int i) { return {i, true}; }
constexpr Letter rho_bar(int i) { return {i, false}; }

/// A freely reduced path in the groupoid of D^#rank.
class ArcPath {
 public:
  /// Reduces `letters`; throws CompositionError if consecutive letters do not
  /// compose or the word does not start at `source`.
  ArcPath(int rank, Endpoint source, std::span<const Letter> letters);
  ArcPath(int rank, Endpoint source, std::initializer_list<Letter> letters)
      : ArcPath(rank, source, std::span<const Letter>(letters.begin(), letters.size())) {}

  static ArcPath empty(int rank, Endpoint at) { return ArcPath(rank, at, std::span<const Letter>{}); }
  /// The single arc rho_i (or its reverse) as a path.
  static ArcPath arc(int rank, int i, bool forward = true);

  int rank() const { return rank_; }
  Endpoint source() const { return source_; }
  Endpoint target() const { return target_; }
  bool is_closed() const { return source_ == target_; }
  bool is_empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  bool operator==(const ArcPath&) const = default;

 private:
  ArcPath() = default;
  friend ArcPath compose(const ArcPath&, const ArcPath&);
  friend ArcPath invert(const ArcPath&);

  int rank_ = 0;
  Endpoint source_ = Endpoint::b0;
  Endpoint target_ = Endpoint::b0;
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence starting at `source`.
ArcPath reduce(int rank, Endpoint source, std::span<const Letter> letters);

/// p followed by q.
ArcPath compose(const ArcPath& p, const ArcPath& q);
ArcPath invert(const ArcPath& p);

/// Free-homotopy class of an oriented closed curve: cyclically reduced,
/// stored in its lexicographically least rotation.
class CyclicWord {
 public:
  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool operator==(const CyclicWord&) const = default;
  auto operator<=>(const CyclicWord&) const = default;

  /// The word as a loop based at the start of its first letter.
  ArcPath as_loop() const;

 private:
  friend CyclicWord cyclic_normal_form(const ArcPath&);
  int rank_ = 0;
  std::vector<Letter> letters_;
};

CyclicWord cyclic_normal_form(const ArcPath& loop);

bool free_homotopic(const ArcPath& a, const ArcPath& b, bool unoriented);

/// Word syntax: whitespace separated tokens, `r3` = rho_3, `R3` = reverse.
/// The source endpoint is inferred from the first letter (b0 for empty input).
ArcPath parse_path(int rank, std::string_view text);
std::string to_string(const ArcPath& p);
std::string to_string(const CyclicWord& w);
std::string to_string(std::span<const Letter> letters);

std::ostream& operator<<(std::ostream& os, const ArcPath& p);
std::ostream& operator<<(std::ostream& os, const CyclicWord& w);

}  // namespace mcgstab
