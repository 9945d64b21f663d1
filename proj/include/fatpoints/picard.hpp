#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fatpoints/checked.hpp"

namespace fatpoints {

inline constexpr int kMaxPoints = 16;

/// A class d*e0 - (m1*e1 + ... + mr*er) in the Picard lattice of the plane
/// blown up at r points. Multiplicities are stored with the sign flipped so
/// that fat-point classes have nonnegative entries.
class DivisorClass {
 public:
  DivisorClass(Int degree, std::vector<Int> mults);

  /// The class of a line, e0.
  static DivisorClass line(int r);
  /// The exceptional curve e_i over point i (0-based).
  static DivisorClass exceptional(int r, int index);
  static DivisorClass zero(int r);

  int points() const { return static_cast<int>(mults_.size()); }
  Int degree() const { return degree_; }
  std::span<const Int> mults() const { return mults_; }
  Int mult(int i) const { return mults_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  /// True when every multiplicity is equal.
  bool is_uniform() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass scaled(Int factor) const;

  std::string to_string() const;

  // Lexicographic on (degree, mults).
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  Int degree_;
  std::vector<Int> mults_;
};

inline DivisorClass operator*(Int factor, const DivisorClass& c) { return c.scaled(factor); }

std::ostream& operator<<(std::ostream& os, const DivisorClass& c);

/// F(d, m, r) = d*e0 - m*(e1 + ... + er).
struct UniformClass {
  int r = 0;
  Int d = 0;
  Int m = 0;

  DivisorClass to_divisor() const;
  static std::optional<UniformClass> from_divisor(const DivisorClass& c);

  // Coordinates in the basis {e0, -K} used for nine points: F = t*e0 - s*K.
  Int t() const { return checked_sub(d, checked_mul(3, m)); }
  Int s() const { return m; }

  UniformClass plus_line() const { return {r, checked_add(d, 1), m}; }

  friend bool operator==(const UniformClass&, const UniformClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const UniformClass& c);

/// The intersection form: a.d*b.d - sum a.m_i*b.m_i.
Int intersect(const DivisorClass& a, const DivisorClass& b);

/// K = -3e0 + e1 + ... + er.
DivisorClass canonical_class(int r);

/// All (-1)-curve classes on the blowup of 1 <= r <= 8 general points,
/// sorted lexicographically on (degree, mults). The table is built once.
const std::vector<DivisorClass>& exceptional_classes(int r);

}  // namespace fatpoints
