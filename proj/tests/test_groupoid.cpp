#include <random>

#include "doctest.h"
#include "mcgstab/groupoid.hpp"

using namespace mcgstab;

namespace {

// Random composable letter sequence on few arcs, so cancellations are common.
std::vector<Letter> random_raw(std::mt19937_64& rng, int rank, int len) {
  std::vector<Letter> w;
  bool at_b0 = true;
  for (int i = 0; i < len; ++i) {
    const int idx = std::uniform_int_distribution<int>(1, rank)(rng);
    w.push_back({idx, at_b0});
    at_b0 = !at_b0;
  }
  return w;
}

// Cancels a randomly chosen adjacent inverse pair until none remain.
std::vector<Letter> reduce_by_schedule(std::vector<Letter> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == w[i].inverse()) spots.push_back(i);
    }
    if (spots.empty()) return w;
    const std::size_t at = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

}  // namespace

TEST_CASE("reduce cancels inverse pairs") {
  const std::vector<Letter> a{rho(1), rho_bar(1)};
  CHECK(reduce(3, Endpoint::b0, a).is_empty());
  CHECK(reduce(3, Endpoint::b0, a).target() == Endpoint::b0);
  const std::vector<Letter> b{rho(1), rho_bar(2), rho(2), rho_bar(3)};
  CHECK(reduce(3, Endpoint::b0, b).letters() == std::vector<Letter>{rho(1), rho_bar(3)});
  const std::vector<Letter> c{rho(1), rho_bar(2)};
  CHECK(reduce(3, Endpoint::b0, c).letters() == c);
}

TEST_CASE("compose") {
  const auto r1 = ArcPath::arc(3, 1), r2 = ArcPath::arc(3, 2);
  CHECK(compose(r1, ArcPath::arc(3, 2, false)) == parse_path(3, "r1 R2"));
  CHECK(compose(r1, invert(r1)).is_empty());
  CHECK(compose(r1, invert(r1)).source() == Endpoint::b0);
  CHECK_THROWS_AS(compose(r1, r2), CompositionError);
  CHECK_THROWS_AS(compose(r1, ArcPath::arc(4, 2, false)), RankMismatch);
}

TEST_CASE("invert") {
  CHECK(invert(parse_path(3, "r1 R2")) == parse_path(3, "r2 R1"));
  CHECK(invert(ArcPath::empty(3, Endpoint::b0)) == ArcPath::empty(3, Endpoint::b0));
  CHECK(invert(parse_path(3, "r1 R2 r1")) == parse_path(3, "R1 r2 R1"));
}

TEST_CASE("cyclic normal form") {
  CHECK(cyclic_normal_form(parse_path(3, "r1 R2")) == cyclic_normal_form(parse_path(3, "R2 r1")));
  CHECK(cyclic_normal_form(parse_path(3, "r1 R2 r2 R3")) == cyclic_normal_form(parse_path(3, "r1 R3")));
  CHECK_THROWS_AS(cyclic_normal_form(ArcPath(3, Endpoint::b0, {rho(1), rho_bar(1)})), TrivialLoop);
  CHECK(to_string(cyclic_normal_form(parse_path(3, "R2 r1"))) == "(r1 R2)");
}

TEST_CASE("free homotopy") {
  const auto a = parse_path(3, "r1 R2");
  CHECK(free_homotopic(a, parse_path(3, "R2 r1"), false));
  CHECK_FALSE(free_homotopic(a, parse_path(3, "r2 R1"), false));
  CHECK(free_homotopic(a, parse_path(3, "r2 R1"), true));
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"r1 R2 r3", "R4 r1", "r2"}) CHECK(to_string(parse_path(5, s)) == s);
  CHECK_THROWS_AS(parse_path(3, "r1 x2"), ParseError);
  CHECK_THROWS_AS(parse_path(3, "r1 r2"), CompositionError);
}

TEST_CASE("property: reduction is confluent and idempotent") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int rank = 1 + t % 3;
    const auto raw = random_raw(rng, rank, 2 * (t % 9));
    const ArcPath p = reduce(rank, Endpoint::b0, raw);
    for (int s = 0; s < 3; ++s) CHECK(reduce_by_schedule(raw, rng) == p.letters());
    CHECK(reduce(rank, Endpoint::b0, p.letters()) == p);
  }
}

TEST_CASE("property: groupoid laws") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const ArcPath p = reduce(3, Endpoint::b0, random_raw(rng, 3, 6));
    CHECK(invert(invert(p)) == p);
    CHECK(compose(p, invert(p)).is_empty());
    const ArcPath q = reduce(3, p.target(), random_raw(rng, 3, 4));
    CHECK(invert(compose(p, q)) == compose(invert(q), invert(p)));
  }
}

TEST_CASE("property: free homotopy is invariant under conjugation") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const ArcPath loop = reduce(3, Endpoint::b0, random_raw(rng, 3, 6));
    try {
      cyclic_normal_form(loop);
    } catch (const TrivialLoop&) {
      continue;
    }
    const ArcPath w = reduce(3, Endpoint::b0, random_raw(rng, 3, 4));
    const ArcPath conj = compose(compose(invert(w), loop), w);
    CHECK(free_homotopic(loop, conj, false));
    ++checked;
  }
  CHECK(checked > 100);
}
