#include "fatpoints/picard.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace fatpoints {

namespace {

void require_points(int r) {
  require(r >= 1 && r <= kMaxPoints, ErrorKind::InvalidArgument,
          "point count must be in [1, 16], got " + std::to_string(r));
}

void require_same_points(const DivisorClass& a, const DivisorClass& b) {
  require(a.points() == b.points(), ErrorKind::DimensionMismatch,
          "classes live on blowups at " + std::to_string(a.points()) + " and " +
              std::to_string(b.points()) + " points");
}

struct Prototype {
  Int degree;
  std::vector<Int> mults;  // nonzero part, descending
};

// Representatives of the (-1)-classes up to permutation of the points.
const std::array<Prototype, 7>& prototypes() {
  static const std::array<Prototype, 7> table{{
      {0, {-1}},
      {1, {1, 1}},
      {2, {1, 1, 1, 1, 1}},
      {3, {2, 1, 1, 1, 1, 1, 1}},
      {4, {2, 2, 2, 1, 1, 1, 1, 1}},
      {5, {2, 2, 2, 2, 2, 2, 1, 1}},
      {6, {3, 2, 2, 2, 2, 2, 2, 2}},
  }};
  return table;
}

std::vector<DivisorClass> expand_prototypes(int r) {
  std::set<DivisorClass> found;
  for (const auto& proto : prototypes()) {
    if (proto.mults.size() > static_cast<std::size_t>(r)) continue;
    std::vector<Int> slots(proto.mults);
    slots.resize(static_cast<std::size_t>(r), 0);
    std::sort(slots.begin(), slots.end());
    do {
      found.emplace(proto.degree, slots);
    } while (std::next_permutation(slots.begin(), slots.end()));
  }
  return {found.begin(), found.end()};
}

}  // namespace

DivisorClass::DivisorClass(Int degree, std::vector<Int> mults)
    : degree_(degree), mults_(std::move(mults)) {
  require_points(points());
}

DivisorClass DivisorClass::line(int r) {
  require_points(r);
  return {1, std::vector<Int>(static_cast<std::size_t>(r), 0)};
}

DivisorClass DivisorClass::exceptional(int r, int index) {
  require_points(r);
  require(index >= 0 && index < r, ErrorKind::InvalidArgument,
          "exceptional curve index out of range");
  std::vector<Int> mults(static_cast<std::size_t>(r), 0);
  mults[static_cast<std::size_t>(index)] = -1;
  return {0, std::move(mults)};
}

DivisorClass DivisorClass::zero(int r) {
  require_points(r);
  return {0, std::vector<Int>(static_cast<std::size_t>(r), 0)};
}

bool DivisorClass::is_zero() const {
  return degree_ == 0 && std::all_of(mults_.begin(), mults_.end(), [](Int m) { return m == 0; });
}

bool DivisorClass::is_uniform() const {
  return std::adjacent_find(mults_.begin(), mults_.end(), std::not_equal_to<>()) == mults_.end();
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_points(*this, other);
  std::vector<Int> out(mults_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(mults_[i], other.mults_[i]);
  return {checked_add(degree_, other.degree_), std::move(out)};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass DivisorClass::operator-() const { return scaled(-1); }

DivisorClass DivisorClass::scaled(Int factor) const {
  std::vector<Int> out(mults_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(mults_[i], factor);
  return {checked_mul(degree_, factor), std::move(out)};
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) {
  os << "(" << c.degree() << ";";
  for (int i = 0; i < c.points(); ++i) os << (i == 0 ? " " : ", ") << c.mult(i);
  return os << ")";
}

DivisorClass UniformClass::to_divisor() const {
  require_points(r);
  return {d, std::vector<Int>(static_cast<std::size_t>(r), m)};
}

std::optional<UniformClass> UniformClass::from_divisor(const DivisorClass& c) {
  if (!c.is_uniform()) return std::nullopt;
  return UniformClass{c.points(), c.degree(), c.mult(0)};
}

std::ostream& operator<<(std::ostream& os, const UniformClass& c) {
  return os << c.d << "e0 - " << c.m << "(e1+...+e" << c.r << ")";
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_points(a, b);
  Int total = checked_mul(a.degree(), b.degree());
  for (int i = 0; i < a.points(); ++i) total = checked_sub(total, checked_mul(a.mult(i), b.mult(i)));
  return total;
}

DivisorClass canonical_class(int r) {
  require(r >= 1, ErrorKind::InvalidArgument, "canonical class needs r >= 1");
  require_points(r);
  return {-3, std::vector<Int>(static_cast<std::size_t>(r), -1)};
}

const std::vector<DivisorClass>& exceptional_classes(int r) {
  require(r >= 1 && r <= 8, ErrorKind::UnsupportedRank,
          "(-1)-classes are enumerated only for 1 <= r <= 8 (the set is infinite for r >= 9), got r = " +
              std::to_string(r));
  static const std::array<std::vector<DivisorClass>, 8> table = [] {
    std::array<std::vector<DivisorClass>, 8> out;
    for (int r = 1; r <= 8; ++r) out[static_cast<std::size_t>(r - 1)] = expand_prototypes(r);
    return out;
  }();
  return table[static_cast<std::size_t>(r - 1)];
}

}  // namespace fatpoints
