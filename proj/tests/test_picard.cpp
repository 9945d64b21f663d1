#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fatpoints/picard.hpp"

using namespace fatpoints;

namespace {

DivisorClass uniform(int r, Int d, Int m) { return UniformClass{r, d, m}.to_divisor(); }

// Every integer class with 0 <= d <= 6 and -1 <= m_i <= 3 satisfying
// E.E = -1 and E.K = -1, found without reference to the prototype list.
std::set<DivisorClass> brute_force_exceptional(int r) {
  std::set<DivisorClass> out;
  std::vector<Int> mults(static_cast<std::size_t>(r), -1);
  while (true) {
    Int sum = 0;
    Int squares = 0;
    for (const Int m : mults) {
      sum += m;
      squares += m * m;
    }
    for (Int d = 0; d <= 6; ++d) {
      // E.E = d^2 - sum m^2, E.K = -3d + sum m.
      if (d * d - squares == -1 && -3 * d + sum == -1) out.emplace(d, mults);
    }
    std::size_t i = 0;
    while (i < mults.size() && mults[i] == 3) mults[i++] = -1;
    if (i == mults.size()) break;
    ++mults[i];
  }
  return out;
}

DivisorClass random_class(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<Int> coeff(-20, 20);
  std::vector<Int> mults(static_cast<std::size_t>(r));
  for (auto& m : mults) m = coeff(rng);
  return {coeff(rng), std::move(mults)};
}

}  // namespace

TEST_CASE("intersection form") {
  CHECK(intersect(DivisorClass::line(3), DivisorClass::line(3)) == 1);
  CHECK(intersect(DivisorClass::exceptional(3, 1), DivisorClass::exceptional(3, 1)) == -1);
  CHECK(intersect(DivisorClass::exceptional(3, 0), DivisorClass::exceptional(3, 2)) == 0);

  const DivisorClass k8 = canonical_class(8);
  CHECK(intersect(k8, k8) == 1);

  // 17*6 - 3*6 - 7*(6*2) = 102 - 18 - 84
  const DivisorClass sextic(6, {3, 2, 2, 2, 2, 2, 2, 2});
  CHECK(intersect(uniform(8, 17, 6), sextic) == 0);

  CHECK_THROWS_AS(intersect(DivisorClass::line(2), DivisorClass::line(3)), Error);
  try {
    intersect(DivisorClass::line(2), DivisorClass::line(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("intersection form is symmetric and bilinear") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 9);
    const DivisorClass a = random_class(rng, r);
    const DivisorClass b = random_class(rng, r);
    const DivisorClass c = random_class(rng, r);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
    CHECK(intersect(a.scaled(3), c) == 3 * intersect(a, c));
  }
}

TEST_CASE("canonical class") {
  const DivisorClass k9 = canonical_class(9);
  CHECK(k9.degree() == -3);
  CHECK(std::all_of(k9.mults().begin(), k9.mults().end(), [](Int m) { return m == -1; }));
  CHECK(intersect(k9, k9) == 0);
  CHECK(intersect(-k9, DivisorClass::line(9)) == 3);
  CHECK(intersect(canonical_class(8), canonical_class(8)) == 1);
  CHECK_THROWS_AS(canonical_class(0), Error);
}

TEST_CASE("uniform classes convert both ways") {
  const UniformClass f{8, 579, 205};
  const DivisorClass c = f.to_divisor();
  CHECK(c.points() == 8);
  CHECK(c.is_uniform());
  REQUIRE(UniformClass::from_divisor(c).has_value());
  CHECK(*UniformClass::from_divisor(c) == f);
  CHECK_FALSE(UniformClass::from_divisor(DivisorClass(6, {3, 2, 2})).has_value());

  const UniformClass nine{9, 10, 3};
  CHECK(nine.t() == 1);
  CHECK(nine.s() == 3);
  // F = t e0 - s K
  CHECK(DivisorClass::line(9).scaled(nine.t()) - canonical_class(9).scaled(nine.s()) == nine.to_divisor());
}

TEST_CASE("class arithmetic") {
  const DivisorClass a(5, {2, 2, 1});
  const DivisorClass b(1, {1, 0, 0});
  CHECK(a + b == DivisorClass(6, {3, 2, 1}));
  CHECK(a - b == DivisorClass(4, {1, 2, 1}));
  CHECK(-b == DivisorClass(-1, {-1, 0, 0}));
  CHECK(2 * a == DivisorClass(10, {4, 4, 2}));
  CHECK(DivisorClass::zero(4).is_zero());
  CHECK(a.to_string() == "(5; 2, 2, 1)");
  CHECK_THROWS_AS(DivisorClass(1, {}), Error);
  CHECK_THROWS_AS(DivisorClass(1, std::vector<Int>(17, 0)), Error);
}

TEST_CASE("checked arithmetic reports overflow") {
  const DivisorClass big(Int{1} << 40, {Int{1} << 40});
  try {
    (void)intersect(big.scaled(1 << 20), big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("(-1)-classes for one point") {
  const auto& classes = exceptional_classes(1);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == DivisorClass::exceptional(1, 0));
}

TEST_CASE("(-1)-classes match an exhaustive search") {
  // Counts from brute_force_exceptional, frozen.
  const std::vector<std::size_t> expected_counts{1, 3, 6, 10, 16, 27, 56, 240};
  for (int r = 1; r <= 8; ++r) {
    CAPTURE(r);
    const auto& classes = exceptional_classes(r);
    const auto brute = brute_force_exceptional(r);
    CHECK(classes.size() == expected_counts[static_cast<std::size_t>(r - 1)]);
    CHECK(std::set<DivisorClass>(classes.begin(), classes.end()) == brute);
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    CHECK(std::adjacent_find(classes.begin(), classes.end()) == classes.end());

    const DivisorClass k = canonical_class(r);
    for (const auto& e : classes) {
      CHECK(intersect(e, e) == -1);
      CHECK(intersect(e, k) == -1);
    }
  }
}

TEST_CASE("(-1)-classes are not enumerated beyond eight points") {
  for (const int r : {0, 9, 12}) {
    try {
      (void)exceptional_classes(r);
      FAIL("expected refusal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedRank);
    }
  }
}
