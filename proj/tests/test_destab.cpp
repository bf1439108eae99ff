#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "mcgstab/destab.hpp"

using namespace mcgstab;

namespace {

const std::string kSym3 = R"(
family sym3
level 0
level 1
level 2
gens: (1 2)
inj: g1 -> (1 2)
yb 1: (1 2)
level 3
gens: (1 2), (2 3)
yb 1: (1 2)
yb 2: (2 3)
)";

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

}  // namespace

TEST_CASE("symmetric family") {
  const auto f = symmetric_family(4);
  CHECK(f.group(4).order() == 24);
  CHECK(f.top() == 4);
  CHECK(f.yb(4, 3) == parse_cycles("(3 4)", 4));
  CHECK_NOTHROW(symmetric_family(4, true));
  CHECK_THROWS_AS(f.yb(4, 4), std::out_of_range);
}

TEST_CASE("simplex counts") {
  const auto f = symmetric_family(5);
  CHECK(build_W(f, 3, 0, 2).counts == std::vector<std::size_t>{3, 6, 6});
  CHECK(build_W(f, 4, 0, 3).counts == std::vector<std::size_t>{4, 12, 24, 24});
  CHECK(build_W(f, 3, 2, 2).counts == std::vector<std::size_t>{5, 20, 60});
  for (int n = 1; n <= 5; ++n) {
    const auto w = build_W(f, n, 0, n - 1);
    for (int p = 0; p < n; ++p) CHECK(w.counts[static_cast<std::size_t>(p)] == factorial(n) / factorial(n - p - 1));
  }
}

TEST_CASE("word conventions") {
  const auto sym = build_W(symmetric_family(4), 4, 0, 3);
  CHECK(sym.convention == BraidWordConvention::descending);
  CHECK(sym.valid_conventions == std::vector<BraidWordConvention>{BraidWordConvention::descending});
  CHECK(build_W(symmetric_family(3, true), 3, 0, 2).valid_conventions.size() == 2);
  CHECK(build_W(cyclic_family(4), 3, 0, 2).valid_conventions.size() == 2);
}

TEST_CASE("identity-YB face maps coincide") {
  const auto w = build_W(symmetric_family(4, true), 4, 0, 3);
  for (int p = 1; p <= 3; ++p) {
    const auto& faces = w.faces[static_cast<std::size_t>(p)];
    for (std::size_t i = 1; i < faces.size(); ++i) CHECK(faces[i] == faces[0]);
  }
}

TEST_CASE("d_0 of the identity coset is the identity coset") {
  for (const auto& f : {symmetric_family(4), symmetric_family(4, true), cyclic_family(4), trivial_family(4)}) {
    const auto w = build_W(f, 3, 1, 2);
    for (int p = 1; p <= 2; ++p) CHECK(w.faces[static_cast<std::size_t>(p)][0][0] == 0);
  }
}

TEST_CASE("components") {
  CHECK(pi0(build_W(symmetric_family(3, true), 3, 0, 1)) == 3);
  CHECK(pi0(build_W(symmetric_family(3), 3, 0, 1)) == 1);
  CHECK(pi0(build_W(trivial_family(3), 3, 0, 1)) == 1);
  const std::vector<std::size_t> cyc{2, 1, 2, 2};
  for (int n = 1; n <= 4; ++n) CHECK(pi0(build_W(cyclic_family(4), n, 0, std::min(n - 1, 1))) == cyc[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("Barucco criterion") {
  CHECK(barucco_check(symmetric_family(4), 4, 0));
  CHECK_FALSE(barucco_check(symmetric_family(3, true), 3, 0));
  CHECK(barucco_check(trivial_family(1), 1, 0));
  CHECK_FALSE(barucco_check(symmetric_family(5), 1, 1));
}

TEST_CASE("property: Barucco agrees with pi0 and identity-YB components equal the index") {
  for (const std::string name : {"sym", "sym-id", "cyclic", "trivial"}) {
    const auto f = family_by_name(name, 5);
    for (int a = 0; a <= 2; ++a) {
      for (int n = 1; a + n <= 5; ++n) {
        const std::size_t c = pi0(build_W(f, n, a, std::min(n - 1, 1)));
        CHECK(barucco_check(f, n, a) == (c == 1));
        if (name == "sym-id") CHECK(c == f.group(a + n).order() / f.group(a + n - 1).order());
      }
    }
  }
}

TEST_CASE("property: every face index stays in range and identities hold") {
  for (const std::string name : {"sym", "sym-id", "cyclic", "trivial"}) {
    const auto f = family_by_name(name, 5);
    for (int n = 1; n <= 4; ++n) {
      const auto w = build_W(f, n, 1, n - 1);
      CHECK_NOTHROW(w.check_identities());
      for (int p = 1; p <= w.pmax(); ++p) {
        for (const auto& face : w.faces[static_cast<std::size_t>(p)]) {
          CHECK(face.size() == w.counts[static_cast<std::size_t>(p)]);
          CHECK(std::all_of(face.begin(), face.end(), [&](std::size_t x) { return x < w.counts[static_cast<std::size_t>(p - 1)]; }));
        }
      }
    }
  }
}

TEST_CASE("property: stabilization is an injective homomorphism") {
  const auto f = cyclic_family(5);
  for (int n = 0; n < 5; ++n) {
    const auto& g = f.group(n);
    std::set<Perm> images;
    for (const auto& x : g.elements()) {
      images.insert(f.stabilize(n, n + 1, x));
      for (const auto& y : g.elements()) {
        CHECK(f.stabilize(n, n + 1, multiply(x, y)) == multiply(f.stabilize(n, n + 1, x), f.stabilize(n, n + 1, y)));
      }
    }
    CHECK(images.size() == g.order());
  }
}

TEST_CASE("family files") {
  const auto f = load_family(kSym3);
  CHECK(f.name() == "sym3");
  CHECK(f.group(3).order() == 6);
  CHECK(build_W(f, 3, 0, 2).counts == std::vector<std::size_t>{3, 6, 6});
  CHECK(pi0(build_W(f, 3, 0, 1)) == 1);
  CHECK_NOTHROW(load_family_file(MCGSTAB_TEST_DATA "/s3.family"));
}

TEST_CASE("family with identity YB elements validates") {
  std::string doc = kSym3;
  doc.replace(doc.find("yb 1: (1 2)\nlevel 3"), 11, "yb 1: ()");
  doc.replace(doc.rfind("yb 1: (1 2)"), 11, "yb 1: ()");
  doc.replace(doc.find("yb 2: (2 3)"), 11, "yb 2: ()");
  const auto f = load_family(doc);
  CHECK(pi0(build_W(f, 3, 0, 1)) == 3);
}

TEST_CASE("family file errors") {
  // s_2 sends (1 2) to the identity: not injective.
  std::string noninj = kSym3;
  noninj.replace(noninj.find("inj: g1 -> (1 2)"), 16, "inj: g1 -> ()");
  CHECK_THROWS_WITH_AS(load_family(noninj), doctest::Contains("not injective"), ValidationError);

  // t_{3,1} must be the image of t_{2,1}.
  std::string compat = kSym3;
  compat.replace(compat.rfind("yb 1: (1 2)"), 11, "yb 1: (2 3)");
  compat.replace(compat.find("yb 2: (2 3)"), 11, "yb 2: (1 2)");
  CHECK_THROWS_AS(load_family(compat), ValidationError);

  std::string outside = kSym3;
  outside.replace(outside.find("yb 2: (2 3)"), 11, "yb 2: (3 4)");
  CHECK_THROWS_AS(load_family(outside), ValidationError);

  CHECK_THROWS_WITH_AS(load_family_file(MCGSTAB_TEST_DATA "/missing_inj.family"),
                       doctest::Contains("missing inj for g1"), ValidationError);
  CHECK_THROWS_AS(load_family("level 1\n"), ParseError);
  CHECK_THROWS_AS(load_family("level 0\nbogus line\n"), ParseError);
  CHECK_THROWS_AS(load_family("level 0\nlevel 1\nyb 2: ()\n"), ParseError);
  CHECK_THROWS_AS(load_family_file("/nonexistent/family"), ParseError);
  CHECK_THROWS_AS(family_by_name("nope", 3), std::invalid_argument);
}

TEST_CASE("build_W preconditions") {
  const auto f = symmetric_family(3);
  CHECK_THROWS_AS(build_W(f, 4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_W(f, 3, 0, 3), std::invalid_argument);
  const auto w = build_W(f, 3, 0, 1);
  CHECK(w.truncated());
}
