#include "fatpoints/cones.hpp"

#include <algorithm>
#include <string>

namespace fatpoints {

namespace {

void require_uniform_input(const UniformClass& f) {
  require(f.r >= 1, ErrorKind::InvalidArgument, "point count must be positive");
  require(f.r <= 9, ErrorKind::UnsupportedRank,
          "closed forms cover r <= 9 general points, got r = " + std::to_string(f.r));
  require(f.m >= 0, ErrorKind::InvalidArgument, "multiplicity must be nonnegative");
  require_input_magnitude(f.d, "d");
  require_input_magnitude(f.m, "m");
}

}  // namespace

Rational effectivity_threshold(int r) {
  switch (r) {
    case 1:
    case 2: return {1, 1};
    case 3: return {3, 2};
    case 4:
    case 5: return {2, 1};
    case 6: return {12, 5};
    case 7: return {21, 8};
    case 8: return {48, 17};
    default: break;
  }
  fail(ErrorKind::UnsupportedRank, "effectivity thresholds exist for 1 <= r <= 8, got " + std::to_string(r));
}

bool is_effective(const UniformClass& f) {
  require_uniform_input(f);
  if (f.r == 9) return f.t() >= 0;
  const Rational eps = effectivity_threshold(f.r);
  return checked_mul(f.d, eps.den) >= checked_mul(f.m, eps.num);
}

bool is_nef(const DivisorClass& f) {
  const int r = f.points();
  require(r <= 9, ErrorKind::UnsupportedRank, "nef test covers r <= 9, got " + std::to_string(r));
  if (r == 9) {
    const auto uniform = UniformClass::from_divisor(f);
    require(uniform.has_value(), ErrorKind::UnsupportedRank, "nef test at nine points needs a uniform class");
    return uniform->t() >= 0 && uniform->s() >= 0;
  }
  const DivisorClass line = DivisorClass::line(r);
  if (intersect(f, line) < 0) return false;
  for (int i = 0; i < r; ++i) {
    if (intersect(f, line - DivisorClass::exceptional(r, i)) < 0) return false;
  }
  const auto& curves = exceptional_classes(r);
  return std::all_of(curves.begin(), curves.end(), [&](const DivisorClass& e) { return intersect(f, e) >= 0; });
}

Decomposition decompose(const UniformClass& f) {
  require(is_effective(f), ErrorKind::NotEffective,
          "F(" + std::to_string(f.d) + ", " + std::to_string(f.m) + ", " + std::to_string(f.r) +
              ") is not the class of an effective divisor");
  const DivisorClass original = f.to_divisor();
  if (f.r == 9) {
    // t > 0: fixed part free. t = 0: the unique divisor mC is its own fixed part.
    if (f.t() > 0) return {original, original, DivisorClass::zero(9), true};
    return {original, DivisorClass::zero(9), original, true};
  }

  // Each (-1)-curve E enters the fixed part max(0, -F.E) times.
  DivisorClass fixed = DivisorClass::zero(f.r);
  for (const auto& e : exceptional_classes(f.r)) {
    const Int meet = intersect(original, e);
    if (meet < 0) fixed = fixed + e.scaled(-meet);
  }
  DivisorClass free = original - fixed;
  if (!is_nef(free)) {
    fail(ErrorKind::InvariantViolation,
         "free part " + free.to_string() + " of " + original.to_string() + " is not nef");
  }
  return {original, std::move(free), std::move(fixed), true};
}

Int chi(const DivisorClass& f) {
  const DivisorClass k = canonical_class(f.points());
  const Int twice = checked_sub(intersect(f, f), intersect(k, f));
  if (twice % 2 != 0) fail(ErrorKind::InvariantViolation, "F^2 - K.F is odd for " + f.to_string());
  return twice / 2 + 1;
}

Int h0(const UniformClass& f) {
  if (!is_effective(f)) return 0;
  const Decomposition parts = decompose(f);
  return chi(parts.free_part);
}

Int h1(const UniformClass& f) {
  require(f.d >= -2, ErrorKind::OutOfDomain, "h1 is computed only for d >= -2, got d = " + std::to_string(f.d));
  const Int value = h0(f) - chi(f.to_divisor());
  if (value < 0) fail(ErrorKind::InvariantViolation, "negative h1 for F(" + std::to_string(f.d) + ", " +
                                                         std::to_string(f.m) + ", " + std::to_string(f.r) + ")");
  return value;
}

Int h2(const UniformClass& f) {
  require(f.d >= -2, ErrorKind::OutOfDomain, "h2 is computed only for d >= -2, got d = " + std::to_string(f.d));
  // K - F meets the nef class e0 in -3 - d < 0, so it is not effective.
  require_uniform_input(f);
  return 0;
}

std::optional<UniformClass> uniform_abnormal_class(int r) {
  require(r >= 1 && r <= 9, ErrorKind::InvalidArgument, "abnormal classes are tabulated for 1 <= r <= 9");
  switch (r) {
    case 2: return UniformClass{2, 1, 1};
    case 3: return UniformClass{3, 3, 2};
    case 5: return UniformClass{5, 2, 1};
    case 6: return UniformClass{6, 12, 5};
    case 7: return UniformClass{7, 21, 8};
    case 8: return UniformClass{8, 48, 17};
    default: return std::nullopt;
  }
}

}  // namespace fatpoints
