#include <doctest.h>

#include "fatpoints/gens.hpp"

using namespace fatpoints;

namespace {

using Counts = std::map<Int, Int>;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("nef threshold") {
  CHECK(nef_threshold(8, 205) == 581);
  CHECK(nef_threshold(8, 18) == 51);
  CHECK(nef_threshold(7, 3) == 8);
  CHECK(nef_threshold(4, 5) == 10);
  CHECK(nef_threshold(1, 5) == 5);
  CHECK(nef_threshold(9, 4) == 12);
}

TEST_CASE("s_nef: exceptional families") {
  CHECK(s_nef({7, 24, 9}) == 7);
  CHECK(s_nef({8, 340, 120}) == 48);
  CHECK(s_nef({8, 105, 37}) == 16);
  for (Int m = 1; m <= 10; ++m) CHECK(s_nef({9, 3 * m, m}) == 3 * m);
  CHECK(s_nef({6, 5, 2}) == 1);
}

TEST_CASE("s_nef: minimal nef classes worked out case by case") {
  // Seven points: 8e0 - 3E and 16e0 - 6E.
  CHECK(s_nef({7, 8, 3}) == 4);
  CHECK(s_nef({7, 16, 6}) == 6);
  // Eight points.
  CHECK(s_nef({8, 3, 1}) == 1);
  CHECK(s_nef({8, 17, 6}) == 13);
  CHECK(s_nef({8, 34, 12}) == 24);
  CHECK(s_nef({8, 20, 7}) == 8);
  CHECK(s_nef({8, 37, 13}) == 13);
  CHECK(s_nef({8, 23, 8}) == 1);
  // Multiplicity 6s, s = 3..8, and s = 9 where the family value takes over.
  const std::vector<Int> multiples_of_f6{33, 40, 45, 48, 49, 48};
  for (Int s = 3; s <= 8; ++s) CHECK(s_nef({8, 17 * s, 6 * s}) == multiples_of_f6[static_cast<std::size_t>(s - 3)]);
  CHECK(s_nef({8, 153, 54}) == 48);
  // Multiplicity 6s+1, s = 3, 4, 5.
  CHECK(s_nef({8, 54, 19}) == 16);
  CHECK(s_nef({8, 71, 25}) == 17);
  CHECK(s_nef({8, 88, 31}) == 16);
}

TEST_CASE("s_nef vanishes for five or fewer points") {
  for (int r = 1; r <= 5; ++r) {
    for (Int m = 1; m <= 15; ++m) {
      for (Int d = nef_threshold(r, m); d <= nef_threshold(r, m) + 3; ++d) CHECK(s_nef({r, d, m}) == 0);
    }
  }
}

TEST_CASE("s_nef needs a nef class") {
  CHECK(kind_of([] { s_nef({8, 579, 205}); }) == ErrorKind::Precondition);
}

TEST_CASE("s_total and its split") {
  CHECK(s_total(8, 205, 579) == 201);
  CHECK(s_total(8, 205, 581) == 16);
  CHECK(s_total(8, 205, 578) == 10);

  const CokernelSplit at579 = cokernel_split(8, 205, 579);
  CHECK(at579.free_part == 33);
  CHECK(at579.fixed_part == 168);
  const CokernelSplit at580 = cokernel_split(8, 205, 580);
  CHECK(at580.free_part == 48);
  CHECK(at580.fixed_part == 160);
  const CokernelSplit at581 = cokernel_split(8, 205, 581);
  CHECK(at581.free_part == 16);
  CHECK(at581.fixed_part == 0);
}

TEST_CASE("hilbert_function") {
  CHECK(hilbert_function(8, 205, 579) == 10);
  CHECK(hilbert_function(8, 205, 578) == 0);
  // chi(581e0 - 205(e1+...+e8)) = (1361 + 103)/2 + 1
  CHECK(hilbert_function(8, 205, 581) == 733);
  for (Int m = 1; m <= 8; ++m) CHECK(hilbert_function(9, m, 3 * m - 1) == 0);
  CHECK(hilbert_function(3, 1, -4) == 0);
  CHECK(kind_of([] { hilbert_function(10, 1, 5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { hilbert_function(3, 0, 5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("generator_profile") {
  const GeneratorProfile p = generator_profile(8, 205);
  CHECK(p.nu == Counts{{579, 10}, {580, 201}, {581, 208}, {582, 16}});
  CHECK(p.alpha == 579);
  CHECK(p.tau == 581);
  CHECK(p.omega == 582);
  CHECK_FALSE(p.conjectural);

  CHECK(generator_profile(9, 1).nu == Counts{{3, 1}, {4, 3}});
  // I(2p) = (x, y)^2.
  CHECK(generator_profile(1, 2).nu == Counts{{2, 3}});
  for (Int m = 1; m <= 6; ++m) CHECK(generator_profile(1, m).nu == Counts{{m, m + 1}});

  CHECK(kind_of([] { generator_profile(0, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { generator_profile(3, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("generator profile invariants") {
  for (int r = 1; r <= 9; ++r) {
    for (Int m = 1; m <= 20; ++m) {
      CAPTURE(r);
      CAPTURE(m);
      const GeneratorProfile p = generator_profile(r, m);
      CHECK(p.generators_in_degree(p.alpha) == hilbert_function(r, m, p.alpha));
      CHECK(p.generators_in_degree(p.alpha) > 0);
      CHECK(p.omega <= p.tau + 1);
      for (const auto& [d, n] : p.nu) {
        CHECK(d >= p.alpha);
        CHECK(d <= p.tau + 1);
        CHECK(n > 0);
      }
    }
  }
}

TEST_CASE("resolution") {
  const BettiResolution res = resolution(8, 205);
  CHECK(res.generators == Counts{{579, 10}, {580, 201}, {581, 208}, {582, 16}});
  CHECK(res.syzygies == Counts{{581, 138}, {582, 216}, {583, 80}});

  const BettiResolution nine = resolution(9, 1);
  CHECK(nine.generators == Counts{{3, 1}, {4, 3}});
  CHECK(nine.syzygies == Counts{{5, 3}});
}

TEST_CASE("resolution reproduces the Hilbert function") {
  for (int r = 1; r <= 9; ++r) {
    for (Int m = 1; m <= 12; ++m) {
      CAPTURE(r);
      CAPTURE(m);
      const GeneratorProfile p = generator_profile(r, m);
      const BettiResolution res = resolution(r, m);
      Int rank = 0;
      for (const auto& [j, a] : res.generators) rank += a;
      for (const auto& [j, b] : res.syzygies) rank -= b;
      CHECK(rank == 1);
      for (Int t = p.alpha; t <= p.tau + 5; ++t) {
        Int predicted = 0;
        for (const auto& [j, a] : res.generators) predicted += a * choose2(t - j + 2);
        for (const auto& [j, b] : res.syzygies) predicted -= b * choose2(t - j + 2);
        CHECK(predicted == hilbert_function(r, m, t));
      }
    }
  }
}

TEST_CASE("mu_report") {
  const MultiplicationMapReport two = mu_report(2, 2, 3);
  CHECK(two.cokernel == 1);
  CHECK(two.kernel == 4);
  CHECK_FALSE(two.maximal_rank);

  for (Int m = 1; m <= 8; ++m) {
    const GeneratorProfile p = generator_profile(9, m);
    for (Int d = p.alpha - 1; d <= p.tau + 1; ++d) CHECK(mu_report(9, m, d).maximal_rank);
  }
  for (Int d = 0; d <= 5; ++d) CHECK(mu_report(2, 1, d).maximal_rank);
}

TEST_CASE("cokernel identities") {
  for (int r = 1; r <= 9; ++r) {
    for (Int m = 1; m <= 20; ++m) {
      const GeneratorProfile p = generator_profile(r, m);
      for (Int d = std::max<Int>(0, p.alpha - 1); d <= p.tau + 1; ++d) {
        const Int expected = hilbert_function(r, m, d + 1) - 3 * hilbert_function(r, m, d);
        const MultiplicationMapReport report = mu_report(r, m, d);
        CHECK(report.cokernel - report.kernel == expected);
        CHECK(report.cokernel >= std::max<Int>(0, expected));
      }
    }
  }
}

TEST_CASE("gigc_holds") {
  CHECK(gigc_holds(4, 50).holds);
  const GigcVerdict two = gigc_holds(2, 50);
  CHECK_FALSE(two.holds);
  REQUIRE(two.first_failure.has_value());
  CHECK(two.first_failure->m == 2);
  CHECK(gigc_holds(5, 2).holds);
  const GigcVerdict five = gigc_holds(5, 3);
  CHECK_FALSE(five.holds);
  CHECK(five.first_failure->m == 3);
  CHECK(kind_of([] { gigc_holds(3, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("conjectural mode") {
  const ConjecturalResult ten = conjectural_profile(10, 9, Mode::Conjectural);
  CHECK(ten.profile.nu == Counts{{29, 15}, {30, 1}});
  CHECK(ten.resolution.syzygies == Counts{{31, 15}});
  CHECK(ten.profile.conjectural);
  CHECK(ten.resolution.conjectural);

  const ConjecturalResult one = conjectural_profile(10, 1, Mode::Conjectural);
  CHECK(one.profile.alpha == 4);
  CHECK(conjectural_hilbert_function(10, 1, 4) == 5);
  for (Int d = 3; d <= 10; ++d) CHECK(conjectural_hilbert_function(10, 1, d) == std::max<Int>(0, choose2(d + 2) - 10));

  CHECK(kind_of([] { conjectural_profile(10, 9, Mode::Proven); }) == ErrorKind::ConjecturalModeRequired);
  CHECK(kind_of([] { conjectural_profile(9, 9, Mode::Conjectural); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { hilbert_function(12, 2, 8, Mode::Proven); }) == ErrorKind::ConjecturalModeRequired);
  CHECK(hilbert_function(12, 2, 8, Mode::Conjectural) == 45 - 36);

  for (int r = 10; r <= 30; ++r) {
    for (Int m = 1; m <= 15; ++m) {
      const ConjecturalResult res = conjectural_profile(r, m, Mode::Conjectural);
      Int rank = 0;
      for (const auto& [j, a] : res.resolution.generators) rank += a;
      for (const auto& [j, b] : res.resolution.syzygies) rank -= b;
      CHECK(rank == 1);
      CHECK(res.profile.generators_in_degree(res.profile.alpha) ==
            conjectural_hilbert_function(r, m, res.profile.alpha));
    }
  }
}
