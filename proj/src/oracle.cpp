#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "fatpoints/gens.hpp"

namespace fatpoints {

namespace {

// Uniform draw from [0, p) using raw engine output, so the stream does not
// depend on the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& engine, std::uint64_t p) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  while (true) {
    const std::uint64_t x = engine();
    if (x < limit) return x % p;
  }
}

std::optional<ProjectivePoint> normalized(std::array<std::uint64_t, 3> c, const PrimeField& field) {
  for (int i = 2; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    const std::uint64_t scale = field.inv(c[static_cast<std::size_t>(i)]);
    for (auto& x : c) x = field.mul(x, scale);
    return ProjectivePoint{c};
  }
  return std::nullopt;
}

bool collinear(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c, const PrimeField& f) {
  const auto& u = a.coords;
  const auto& v = b.coords;
  const auto& w = c.coords;
  std::uint64_t det = f.mul(u[0], f.sub(f.mul(v[1], w[2]), f.mul(v[2], w[1])));
  det = f.sub(det, f.mul(u[1], f.sub(f.mul(v[0], w[2]), f.mul(v[2], w[0]))));
  det = f.add(det, f.mul(u[2], f.sub(f.mul(v[0], w[1]), f.mul(v[1], w[0]))));
  return det == 0;
}

// Row reduction to reduced echelon form; returns pivot columns in row order.
std::vector<std::size_t> reduce(ModMatrix& a, const PrimeField& f, const std::vector<std::size_t>& column_order) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (const std::size_t col : column_order) {
    if (row == a.rows()) break;
    std::size_t found = row;
    while (found < a.rows() && a.at(found, col) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(found, j), a.at(row, j));
    }
    const std::uint64_t scale = f.inv(a.at(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      const std::uint64_t factor = a.at(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.at(row, j) != 0) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

// Pascal's triangle mod p up to row n.
std::vector<std::vector<std::uint64_t>> binomials(Int n, const PrimeField& f) {
  std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(n + 1));
  for (Int i = 0; i <= n; ++i) {
    auto& row = table[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(i + 1), 1);
    for (Int k = 1; k < i; ++k) {
      const auto& prev = table[static_cast<std::size_t>(i - 1)];
      row[static_cast<std::size_t>(k)] = f.add(prev[static_cast<std::size_t>(k - 1)], prev[static_cast<std::size_t>(k)]);
    }
  }
  return table;
}

void require_prime_modulus(std::uint64_t p) {
  require(p > (std::uint64_t{1} << 30) && p < (std::uint64_t{1} << 32), ErrorKind::InvalidArgument,
          "prime must lie in (2^30, 2^32), got " + std::to_string(p));
  require(is_prime(p), ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) { require_prime_modulus(p); }

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = 1;
  base %= p_;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  require(a % p_ != 0, ErrorKind::InvariantViolation, "inverse of zero");
  return pow(a, p_ - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::size_t rank(ModMatrix matrix, const PrimeField& field) {
  return reduce(matrix, field, identity_order(matrix.cols())).size();
}

std::vector<ModVector> kernel_basis(ModMatrix matrix, const PrimeField& field, PivotOrder order) {
  std::vector<std::size_t> columns = identity_order(matrix.cols());
  if (order == PivotOrder::Reverse) std::reverse(columns.begin(), columns.end());
  const std::vector<std::size_t> pivots = reduce(matrix, field, columns);

  std::vector<bool> is_pivot(matrix.cols(), false);
  for (const std::size_t c : pivots) is_pivot[c] = true;

  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < matrix.cols(); ++free) {
    if (is_pivot[free]) continue;
    ModVector v(matrix.cols(), 0);
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      v[pivots[row]] = field.sub(0, matrix.at(row, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

MonomialBasis::MonomialBasis(Int d) : degree(d) {
  require(d >= 0, ErrorKind::InvalidArgument, "monomial degree must be nonnegative");
  for (Int i = d; i >= 0; --i) {
    for (Int j = d - i; j >= 0; --j) exponents.push_back({i, j, d - i - j});
  }
}

std::size_t MonomialBasis::index_of(const std::array<Int, 3>& e) const {
  // Blocks for x-exponent d, d-1, ..., i+1 hold 1, 2, ..., d-i monomials.
  const Int before = (degree - e[0]) * (degree - e[0] + 1) / 2;
  return static_cast<std::size_t>(before + (degree - e[0] - e[1]));
}

PointConfiguration PointConfiguration::sample(std::vector<Int> multiplicities, std::uint64_t prime,
                                              std::uint64_t seed) {
  const PrimeField field(prime);
  require(!multiplicities.empty(), ErrorKind::InvalidArgument, "at least one point is required");
  for (const Int m : multiplicities) {
    require(m >= 0, ErrorKind::InvalidArgument, "multiplicities must be nonnegative");
    require(static_cast<std::uint64_t>(m) < prime, ErrorKind::InvalidArgument, "multiplicity must be below p");
  }

  PointConfiguration config;
  config.prime = prime;
  config.seed = seed;
  config.multiplicities = std::move(multiplicities);

  std::mt19937_64 engine(seed);
  while (config.points.size() < config.multiplicities.size()) {
    const auto candidate = normalized({draw(engine, prime), draw(engine, prime), draw(engine, prime)}, field);
    if (!candidate) continue;
    const auto& pts = config.points;
    bool ok = std::find(pts.begin(), pts.end(), *candidate) == pts.end();
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j) ok = !collinear(pts[i], pts[j], *candidate, field);
    }
    if (ok) config.points.push_back(*candidate);
  }
  return config;
}

PointConfiguration PointConfiguration::uniform(int r, Int m, std::uint64_t prime, std::uint64_t seed) {
  require(r >= 1, ErrorKind::InvalidArgument, "point count must be positive");
  return sample(std::vector<Int>(static_cast<std::size_t>(r), m), prime, seed);
}

ModMatrix condition_matrix(const PointConfiguration& config, Int d) {
  require(d >= 0, ErrorKind::InvalidArgument, "degree must be nonnegative");
  const PrimeField field(config.prime);
  require(static_cast<std::uint64_t>(d) < config.prime, ErrorKind::InvalidArgument, "degree must be below p");
  const MonomialBasis monomials(d);
  const auto binom = binomials(d, field);

  std::size_t row_count = 0;
  for (const Int m : config.multiplicities) row_count += static_cast<std::size_t>(choose2(m + 1));
  ModMatrix out(row_count, monomials.size());

  std::size_t row = 0;
  for (std::size_t p = 0; p < config.points.size(); ++p) {
    const auto& coords = config.points[p].coords;
    const Int m = config.multiplicities[p];
    // Chart: the last nonzero coordinate is set to 1; the other two are affine.
    std::size_t chart = 3;
    for (std::size_t c = 3; c-- > 0;) {
      if (coords[c] != 0) {
        chart = c;
        break;
      }
    }
    if (chart == 3) fail(ErrorKind::InvariantViolation, "point has no affine chart");
    std::array<std::size_t, 2> affine{};
    for (std::size_t c = 0, k = 0; c < 3; ++c) {
      if (c != chart) affine[k++] = c;
    }
    const std::uint64_t u0 = coords[affine[0]];
    const std::uint64_t v0 = coords[affine[1]];

    // Coefficient of U^a V^b in (u0 + U)^eu (v0 + V)^ev.
    for (Int order = 0; order < m; ++order) {
      for (Int a = order; a >= 0; --a) {
        const Int b = order - a;
        for (std::size_t col = 0; col < monomials.size(); ++col) {
          const Int eu = monomials.exponents[col][affine[0]];
          const Int ev = monomials.exponents[col][affine[1]];
          if (a > eu || b > ev) continue;
          std::uint64_t value = field.mul(binom[static_cast<std::size_t>(eu)][static_cast<std::size_t>(a)],
                                          binom[static_cast<std::size_t>(ev)][static_cast<std::size_t>(b)]);
          value = field.mul(value, field.pow(u0, static_cast<std::uint64_t>(eu - a)));
          value = field.mul(value, field.pow(v0, static_cast<std::uint64_t>(ev - b)));
          out.at(row, col) = value;
        }
        ++row;
      }
    }
  }
  return out;
}

std::size_t multiplication_rank(const std::vector<ModVector>& kernel, Int d, const PrimeField& field) {
  if (kernel.empty()) return 0;
  const MonomialBasis source(d);
  const MonomialBasis target(d + 1);
  ModMatrix images(3 * kernel.size(), target.size());
  std::size_t row = 0;
  for (const ModVector& f : kernel) {
    for (std::size_t var = 0; var < 3; ++var, ++row) {
      for (std::size_t col = 0; col < source.size(); ++col) {
        if (f[col] == 0) continue;
        auto e = source.exponents[col];
        ++e[var];
        images.at(row, target.index_of(e)) = f[col];
      }
    }
  }
  return rank(std::move(images), field);
}

OracleReport measure(const PointConfiguration& config, Int d_max, std::size_t max_columns) {
  require(d_max >= 0, ErrorKind::InvalidArgument, "maximum degree must be nonnegative");
  const std::size_t columns = static_cast<std::size_t>(choose2(d_max + 2));
  require(columns <= max_columns, ErrorKind::BudgetExceeded,
          "degree " + std::to_string(d_max) + " needs " + std::to_string(columns) + " columns, budget is " +
              std::to_string(max_columns));
  require(static_cast<std::uint64_t>(d_max) + 1 < config.prime, ErrorKind::InvalidArgument,
          "prime must exceed the degree range");
  const PrimeField field(config.prime);

  OracleReport report;
  report.prime = config.prime;
  report.seed = config.seed;

  std::vector<ModVector> previous_kernel;
  for (Int d = 0; d <= d_max; ++d) {
    std::vector<ModVector> kernel = kernel_basis(condition_matrix(config, d), field);
    report.dims[d] = static_cast<Int>(kernel.size());
    if (d == 0) {
      report.nu[0] = report.dims[0];
    } else {
      const Int image = static_cast<Int>(multiplication_rank(previous_kernel, d - 1, field));
      report.mu_ranks[d - 1] = image;
      report.nu[d] = report.dims[d] - image;
    }
    previous_kernel = std::move(kernel);
  }
  return report;
}

VerifyResult verify(int r, Int m, int trials, const VerifyOptions& options) {
  require(trials >= 1, ErrorKind::InvalidArgument, "at least one trial is required");
  const GeneratorProfile profile = generator_profile(r, m);

  VerifyResult result;
  result.r = r;
  result.m = m;
  result.prime = options.prime;
  result.first_degree = std::max<Int>(0, profile.alpha - 1);
  result.last_degree = profile.tau + 1;

  for (int trial = 0; trial < trials; ++trial) {
    TrialOutcome outcome;
    outcome.seed = options.seed + static_cast<std::uint64_t>(trial);
    const auto config = PointConfiguration::uniform(r, m, options.prime, outcome.seed);
    outcome.report = measure(config, result.last_degree, options.max_columns);
    for (Int d = result.first_degree; d <= result.last_degree; ++d) {
      const Int dim = outcome.report.dims.at(d);
      const Int expected_dim = hilbert_function(r, m, d);
      if (dim != expected_dim) {
        outcome.mismatches.push_back("d=" + std::to_string(d) + ": dim I measured " + std::to_string(dim) +
                                     ", closed form " + std::to_string(expected_dim));
      }
      const Int gens = outcome.report.nu.at(d);
      const Int expected_gens = profile.generators_in_degree(d);
      if (gens != expected_gens) {
        outcome.mismatches.push_back("d=" + std::to_string(d) + ": generators measured " + std::to_string(gens) +
                                     ", closed form " + std::to_string(expected_gens));
      }
    }
    outcome.matched = outcome.mismatches.empty();
    result.trials.push_back(std::move(outcome));
  }

  const auto matched = std::count_if(result.trials.begin(), result.trials.end(),
                                     [](const TrialOutcome& t) { return t.matched; });
  result.passed = options.policy == MatchPolicy::All ? matched == trials : matched > 0;
  return result;
}

}  // namespace fatpoints
