#include "fatpoints/gens.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace fatpoints {

namespace {

void require_profile_input(int r, Int m) {
  require(r >= 1 && r <= 9, ErrorKind::InvalidArgument,
          "point count must be in [1, 9] for proven results, got r = " + std::to_string(r) +
              (r > 9 ? " (r > 9 needs conjectural mode)" : ""));
  require(m >= 1, ErrorKind::InvalidArgument, "multiplicity must be >= 1, got m = " + std::to_string(m));
  require_input_magnitude(m, "m");
}

Int ceil_div(Int num, Int den) {
  const Int q = num / den;
  return (num % den != 0 && ((num < 0) == (den < 0))) ? q + 1 : q;
}

std::string uniform_name(const UniformClass& f) {
  return "F(" + std::to_string(f.d) + ", " + std::to_string(f.m) + ", " + std::to_string(f.r) + ")";
}

bool in_family(Int d, Int m, Int d_step, Int m_step, Int d_offset, Int m_offset, Int min_multiple) {
  const Int dd = d - d_offset;
  const Int mm = m - m_offset;
  if (dd < 0 || mm < 0 || dd % d_step != 0 || mm % m_step != 0) return false;
  const Int l = dd / d_step;
  return l == mm / m_step && l >= min_multiple;
}

// Solves dim I_j = sum_i a_i C(j-i+2, 2) - sum_i b_i C(j-i+2, 2) for b, one
// degree at a time from alpha through last.
std::map<Int, Int> solve_syzygies(const std::map<Int, Int>& generators, const std::function<Int(Int)>& hf,
                                  Int alpha, Int last) {
  std::map<Int, Int> syzygies;
  for (Int j = alpha; j <= last; ++j) {
    Int value = -hf(j);
    for (const auto& [i, a] : generators) {
      if (i > j) break;
      value = checked_add(value, checked_mul(a, choose2(j - i + 2)));
    }
    for (const auto& [i, b] : syzygies) value = checked_sub(value, checked_mul(b, choose2(j - i + 2)));
    if (value < 0) {
      fail(ErrorKind::InvariantViolation, "negative syzygy count " + std::to_string(value) + " in degree " +
                                              std::to_string(j));
    }
    if (value > 0) syzygies[j] = value;
  }
  return syzygies;
}

void check_resolution(const BettiResolution& res, const std::function<Int(Int)>& hf, Int alpha, Int last) {
  Int rank = 0;
  for (const auto& [j, a] : res.generators) rank += a;
  for (const auto& [j, b] : res.syzygies) rank -= b;
  if (rank != 1) fail(ErrorKind::InvariantViolation, "resolution rank is " + std::to_string(rank) + ", not 1");
  for (Int t = alpha; t <= last; ++t) {
    Int predicted = 0;
    for (const auto& [j, a] : res.generators) predicted += a * choose2(t - j + 2);
    for (const auto& [j, b] : res.syzygies) predicted -= b * choose2(t - j + 2);
    if (predicted != hf(t)) {
      fail(ErrorKind::InvariantViolation, "resolution predicts dim I_" + std::to_string(t) + " = " +
                                              std::to_string(predicted) + ", expected " + std::to_string(hf(t)));
    }
  }
}

void finish_profile(GeneratorProfile& profile) {
  profile.omega = profile.nu.empty() ? profile.alpha : profile.nu.rbegin()->first;
}

}  // namespace

Int GeneratorProfile::generators_in_degree(Int d) const {
  const auto it = nu.find(d);
  return it == nu.end() ? 0 : it->second;
}

Int GeneratorProfile::total_generators() const {
  return std::accumulate(nu.begin(), nu.end(), Int{0}, [](Int acc, const auto& kv) { return acc + kv.second; });
}

Int nef_threshold(int r, Int m) {
  require_profile_input(r, m);
  if (r == 9) return checked_mul(3, m);
  // Uniform F meets e0 - e_i in d - m, and a (-1)-class E of degree e > 0 with
  // multiplicity sum k in d*e - m*k.
  Int threshold = m;
  for (const auto& e : exceptional_classes(r)) {
    if (e.degree() <= 0) continue;
    const Int weight = std::accumulate(e.mults().begin(), e.mults().end(), Int{0});
    threshold = std::max(threshold, ceil_div(checked_mul(m, weight), e.degree()));
  }
  if (!is_nef(UniformClass{r, threshold, m}) || is_nef(UniformClass{r, threshold - 1, m})) {
    fail(ErrorKind::InvariantViolation, "nef threshold " + std::to_string(threshold) + " is not sharp for r = " +
                                            std::to_string(r) + ", m = " + std::to_string(m));
  }
  return threshold;
}

Int s_nef(const UniformClass& h) {
  require(h.r >= 1 && h.r <= 9, ErrorKind::UnsupportedRank, "s_nef covers 1 <= r <= 9");
  require(is_nef(h), ErrorKind::Precondition, uniform_name(h) + " is not nef");
  if (h.r <= 5) return 0;
  if (h.r == 7 && in_family(h.d, h.m, 8, 3, 0, 0, 3)) return 7;
  if (h.r == 8 && in_family(h.d, h.m, 17, 6, 0, 0, 9)) return 48;
  if (h.r == 8 && in_family(h.d, h.m, 17, 6, 3, 1, 6)) return 16;
  // Maximal rank: the kernel or the cokernel vanishes.
  const Int expected = h0(h.plus_line()) - 3 * h0(h);
  return std::max<Int>(0, expected);
}

CokernelSplit cokernel_split(int r, Int m, Int d) {
  const UniformClass f{r, d, m};
  const Decomposition parts = decompose(f);
  const auto free = UniformClass::from_divisor(parts.free_part);
  if (!free) fail(ErrorKind::InvariantViolation, "free part of a uniform class is not uniform");
  return {s_nef(*free), h0(f.plus_line()) - h0(free->plus_line())};
}

Int s_total(int r, Int m, Int d) {
  require_profile_input(r, m);
  require(d >= 0, ErrorKind::InvalidArgument, "degree must be nonnegative");
  require_input_magnitude(d, "d");
  const UniformClass f{r, d, m};
  if (!is_effective(f)) return h0(f.plus_line());
  return cokernel_split(r, m, d).total();
}

Int hilbert_function(int r, Int m, Int d) {
  require_profile_input(r, m);
  require_input_magnitude(d, "d");
  if (d < 0) return 0;
  return h0(UniformClass{r, d, m});
}

GeneratorProfile generator_profile(int r, Int m) {
  require_profile_input(r, m);
  GeneratorProfile profile;
  profile.r = r;
  profile.m = m;

  const Int nef_from = nef_threshold(r, m);
  Int alpha = r == 9 ? 3 * m : ceil_div(checked_mul(m, effectivity_threshold(r).num), effectivity_threshold(r).den);
  if (!is_effective(UniformClass{r, alpha, m}) || is_effective(UniformClass{r, alpha - 1, m})) {
    fail(ErrorKind::InvariantViolation, "initial degree is not sharp");
  }
  profile.alpha = alpha;

  Int tau = nef_from;
  while (tau - 1 >= -2 && h1(UniformClass{r, tau - 1, m}) == 0) --tau;
  profile.tau = tau;

  for (Int d = alpha; d <= tau + 1; ++d) {
    const Int count = s_total(r, m, d - 1);
    if (count > 0) profile.nu[d] = count;
  }
  if (s_total(r, m, tau + 1) != 0) {
    fail(ErrorKind::InvariantViolation, "generators found beyond degree tau + 1 = " + std::to_string(tau + 1));
  }
  finish_profile(profile);
  return profile;
}

BettiResolution resolution(int r, Int m) {
  const GeneratorProfile profile = generator_profile(r, m);
  const auto hf = [r, m](Int t) { return hilbert_function(r, m, t); };
  BettiResolution res;
  res.generators = profile.nu;
  res.syzygies = solve_syzygies(res.generators, hf, profile.alpha, profile.tau + 5);
  check_resolution(res, hf, profile.alpha, profile.tau + 5);
  return res;
}

MultiplicationMapReport mu_report(int r, Int m, Int d) {
  MultiplicationMapReport report;
  report.degree = d;
  report.cokernel = s_total(r, m, d);
  const Int expected = hilbert_function(r, m, d + 1) - 3 * hilbert_function(r, m, d);
  report.kernel = report.cokernel - expected;
  if (report.kernel < 0) fail(ErrorKind::InvariantViolation, "negative kernel dimension in degree " + std::to_string(d));
  report.maximal_rank = report.cokernel == 0 || report.kernel == 0;
  return report;
}

GigcVerdict gigc_holds(int r, Int m_max) {
  require_profile_input(r, 1);
  require(m_max >= 1, ErrorKind::InvalidArgument, "max multiplicity must be >= 1");
  require_input_magnitude(m_max, "m_max");
  for (Int m = 1; m <= m_max; ++m) {
    const GeneratorProfile profile = generator_profile(r, m);
    for (Int d = std::max<Int>(0, profile.alpha - 1); d <= profile.tau + 1; ++d) {
      if (!mu_report(r, m, d).maximal_rank) return {false, GigcFailure{m, d}};
    }
  }
  return {true, std::nullopt};
}

Int conjectural_hilbert_function(int r, Int m, Int d) {
  require(r >= 1 && r <= 1'000'000, ErrorKind::InvalidArgument, "point count must be in [1, 1000000]");
  require(m >= 0, ErrorKind::InvalidArgument, "multiplicity must be nonnegative");
  require_input_magnitude(m, "m");
  if (d < 0) return 0;
  return std::max<Int>(0, checked_sub(choose2(checked_add(d, 2)), checked_mul(r, choose2(m + 1))));
}

ConjecturalResult conjectural_profile(int r, Int m, Mode mode) {
  require(mode == Mode::Conjectural, ErrorKind::ConjecturalModeRequired,
          "results for r > 9 rest on unproven conjectures; enable conjectural mode explicitly");
  require(r > 9, ErrorKind::InvalidArgument, "conjectural mode is for r > 9; use the proven engine for r <= 9");
  require(m >= 1, ErrorKind::InvalidArgument, "multiplicity must be >= 1, got m = " + std::to_string(m));
  const auto hf = [r, m](Int d) { return conjectural_hilbert_function(r, m, d); };
  const Int conditions = checked_mul(r, choose2(m + 1));

  // alpha: least d with C(d+2,2) > conditions; tau: least t with C(t+2,2) >= conditions.
  Int d = std::max<Int>(0, static_cast<Int>(std::sqrt(2.0L * static_cast<long double>(conditions))) - 4);
  while (d > 0 && choose2(d + 2) >= conditions) --d;
  while (choose2(d + 2) < conditions) ++d;
  const Int tau = d;
  while (choose2(d + 2) <= conditions) ++d;
  const Int alpha = d;

  GeneratorProfile profile;
  profile.r = r;
  profile.m = m;
  profile.alpha = alpha;
  profile.tau = tau;
  profile.conjectural = true;
  for (Int k = alpha; k <= tau + 1; ++k) {
    const Int count = std::max<Int>(0, hf(k) - 3 * hf(k - 1));
    if (count > 0) profile.nu[k] = count;
  }
  finish_profile(profile);

  BettiResolution res;
  res.conjectural = true;
  res.generators = profile.nu;
  res.syzygies = solve_syzygies(res.generators, hf, alpha, tau + 5);
  check_resolution(res, hf, alpha, tau + 5);
  return {std::move(profile), std::move(res)};
}

Int hilbert_function(int r, Int m, Int d, Mode mode) {
  if (r <= 9) return hilbert_function(r, m, d);
  require(mode == Mode::Conjectural, ErrorKind::ConjecturalModeRequired,
          "results for r > 9 rest on unproven conjectures; enable conjectural mode explicitly");
  return conjectural_hilbert_function(r, m, d);
}

}  // namespace fatpoints
