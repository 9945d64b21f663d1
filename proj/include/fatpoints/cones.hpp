#pragma once

#include <optional>

#include "fatpoints/picard.hpp"

namespace fatpoints {

struct Rational {
  Int num;
  Int den;
};

/// The constant e_r with F(d, m, r) effective iff d >= e_r * m, for r <= 8.
Rational effectivity_threshold(int r);

/// Split of an effective class into its nef free part and fixed part.
struct Decomposition {
  DivisorClass original;
  DivisorClass free_part;
  DivisorClass fixed_part;
  bool is_effective = false;
};

/// Effectivity of a uniform class at r <= 9 general points, decided exactly.
bool is_effective(const UniformClass& f);

/// Nefness at r <= 9 general points. Nine-point classes must be uniform.
bool is_nef(const DivisorClass& f);
inline bool is_nef(const UniformClass& f) { return is_nef(f.to_divisor()); }

/// Free/fixed decomposition of an effective uniform class. Throws
/// NotEffective for non-effective input and InvariantViolation if the
/// computed free part fails the nef test.
Decomposition decompose(const UniformClass& f);

/// Riemann-Roch value (F^2 - K.F)/2 + 1.
Int chi(const DivisorClass& f);

Int h0(const UniformClass& f);
/// Defined for d >= -2, where h2 vanishes.
Int h1(const UniformClass& f);
Int h2(const UniformClass& f);

/// An effective uniform class of negative self-intersection, when one
/// exists among the classes that govern fixed parts for this r.
std::optional<UniformClass> uniform_abnormal_class(int r);

}  // namespace fatpoints
