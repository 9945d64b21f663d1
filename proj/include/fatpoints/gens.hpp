#pragma once

#include <map>
#include <optional>

#include "fatpoints/cones.hpp"

namespace fatpoints {

/// Proven closed forms (r <= 9) versus the opt-in conjectural formulas for r > 9.
enum class Mode { Proven, Conjectural };

/// Minimal generator counts of I(m(p1+...+pr)) by degree.
struct GeneratorProfile {
  int r = 0;
  Int m = 0;
  Int alpha = 0;  // initial degree
  Int tau = 0;    // least t with h1 = 0 in every degree >= t
  Int omega = 0;  // largest generator degree
  std::map<Int, Int> nu;  // degree -> count, positive entries only
  bool conjectural = false;

  Int generators_in_degree(Int d) const;
  Int total_generators() const;
};

/// Graded ranks of 0 -> F1 -> F0 -> I -> 0.
struct BettiResolution {
  std::map<Int, Int> generators;  // a_j: F0 = sum R(-j)^{a_j}
  std::map<Int, Int> syzygies;    // b_j: F1 = sum R(-j)^{b_j}
  bool conjectural = false;
};

/// Kernel and cokernel dimensions of I_d (x) R_1 -> I_{d+1}.
struct MultiplicationMapReport {
  Int degree = 0;
  Int cokernel = 0;
  Int kernel = 0;
  bool maximal_rank = false;
};

/// The two summands of the cokernel dimension for an effective class:
/// the part carried by the free part H and the jump h0(F+e0) - h0(H+e0).
struct CokernelSplit {
  Int free_part = 0;
  Int fixed_part = 0;
  Int total() const { return free_part + fixed_part; }
};

struct GigcFailure {
  Int m = 0;
  Int d = 0;
};

struct GigcVerdict {
  bool holds = true;
  std::optional<GigcFailure> first_failure;
};

/// Least d with F(d, m, r) nef, for r <= 9.
Int nef_threshold(int r, Int m);

/// Cokernel dimension of H^0(H) (x) H^0(e0) -> H^0(H + e0) for a nef uniform class.
Int s_nef(const UniformClass& h);

/// Split cokernel for effective F(d, m, r). Throws NotEffective otherwise.
CokernelSplit cokernel_split(int r, Int m, Int d);

/// Cokernel dimension of the multiplication map out of degree d.
Int s_total(int r, Int m, Int d);

Int hilbert_function(int r, Int m, Int d);

GeneratorProfile generator_profile(int r, Int m);

BettiResolution resolution(int r, Int m);

MultiplicationMapReport mu_report(int r, Int m, Int d);

/// Scans every 1 <= m <= m_max across the degrees where a failure can occur.
GigcVerdict gigc_holds(int r, Int m_max);

/// Expected Hilbert function max(0, C(d+2,2) - r*C(m+1,2)).
Int conjectural_hilbert_function(int r, Int m, Int d);

struct ConjecturalResult {
  GeneratorProfile profile;
  BettiResolution resolution;
};

/// Generators and resolution for r > 9 assuming maximal rank and the
/// expected Hilbert function. Refused unless mode is Mode::Conjectural.
ConjecturalResult conjectural_profile(int r, Int m, Mode mode);

/// Degree d of the Hilbert function under either mode; r > 9 needs Conjectural.
Int hilbert_function(int r, Int m, Int d, Mode mode);

}  // namespace fatpoints
