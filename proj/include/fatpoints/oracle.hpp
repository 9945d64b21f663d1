#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fatpoints/checked.hpp"

namespace fatpoints {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
inline constexpr std::size_t kDefaultColumnBudget = 5000;

/// Arithmetic in Z/p for a prime 2^30 < p < 2^32, so products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over Z/p.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

using ModVector = std::vector<std::uint64_t>;

/// Column order in which pivots are sought; different orders give
/// different kernel bases of the same space.
enum class PivotOrder { Forward, Reverse };

std::size_t rank(ModMatrix matrix, const PrimeField& field);
std::vector<ModVector> kernel_basis(ModMatrix matrix, const PrimeField& field,
                                    PivotOrder order = PivotOrder::Forward);

/// Degree-d monomials x^i y^j z^k, ordered lexicographically (x > y > z).
struct MonomialBasis {
  explicit MonomialBasis(Int degree);

  Int degree;
  std::vector<std::array<Int, 3>> exponents;
  std::size_t index_of(const std::array<Int, 3>& e) const;
  std::size_t size() const { return exponents.size(); }
};

struct ProjectivePoint {
  std::array<std::uint64_t, 3> coords{};  // last nonzero coordinate is 1
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Random points of P^2 over Z/p, pairwise distinct with no three collinear.
/// Reproducible bit for bit from (prime, seed, multiplicities).
struct PointConfiguration {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::vector<ProjectivePoint> points;
  std::vector<Int> multiplicities;

  static PointConfiguration sample(std::vector<Int> multiplicities, std::uint64_t prime, std::uint64_t seed);
  static PointConfiguration uniform(int r, Int m, std::uint64_t prime, std::uint64_t seed);
};

/// Conditions for a degree-d form to vanish to the assigned order at every
/// point: one row per Taylor coefficient of order < m_i in an affine chart.
ModMatrix condition_matrix(const PointConfiguration& config, Int d);

/// Rank of I_d (x) R_1 -> I_{d+1} spanned by x*f, y*f, z*f over a basis of I_d.
std::size_t multiplication_rank(const std::vector<ModVector>& kernel, Int d, const PrimeField& field);

struct OracleReport {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::map<Int, Int> dims;      // d -> dim I_d
  std::map<Int, Int> mu_ranks;  // d -> rank of I_d (x) R_1 -> I_{d+1}
  std::map<Int, Int> nu;        // d -> generators in degree d
};

OracleReport measure(const PointConfiguration& config, Int d_max,
                     std::size_t max_columns = kDefaultColumnBudget);

enum class MatchPolicy { All, Any };

struct VerifyOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;  // trial i uses seed + i
  MatchPolicy policy = MatchPolicy::All;
  std::size_t max_columns = kDefaultColumnBudget;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  bool matched = false;
  std::vector<std::string> mismatches;
  OracleReport report;
};

struct VerifyResult {
  bool passed = false;
  int r = 0;
  Int m = 0;
  Int first_degree = 0;
  Int last_degree = 0;
  std::uint64_t prime = 0;
  std::vector<TrialOutcome> trials;
};

/// Compares measured dim I_d and generator counts with the closed forms on
/// every degree in [alpha - 1, tau + 1].
VerifyResult verify(int r, Int m, int trials, const VerifyOptions& options = {});

}  // namespace fatpoints
