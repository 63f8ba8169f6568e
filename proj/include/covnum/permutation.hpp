#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covnum {

/// Point label. Points are 1-based everywhere in the public API.
using Point = int;

/// Nontrivial cycle lengths of a permutation with multiplicities, fixed points
/// suppressed. Printed as "(2^2,4)", "(3,6)", "(8)" and "(1)" for the identity.
class CycleType {
 public:
  struct Part {
    int length = 0;
    int multiplicity = 0;
    auto operator<=>(const Part&) const = default;
  };

  CycleType() = default;
  /// `lengths` may contain 1s and appear in any order; they are normalised.
  CycleType(int degree, std::span<const int> lengths);

  /// Accepts "(2^2,4)", "2^2,4", "(8,2)", "8", "(1)" and "()". Lengths may be
  /// listed in any order.
  static CycleType parse(std::string_view text, int degree);

  int degree() const noexcept { return degree_; }
  const std::vector<Part>& parts() const noexcept { return parts_; }
  bool is_identity() const noexcept { return parts_.empty(); }
  int moved_points() const noexcept;
  int fixed_points() const noexcept { return degree_ - moved_points(); }
  /// lcm of the cycle lengths.
  std::uint64_t element_order() const noexcept;
  bool is_even() const noexcept;
  /// Cycle lengths including 1-cycles, descending.
  std::vector<int> full_partition() const;

  std::string to_string() const;
  /// Packed multiplicities of lengths 2..16 (4 bits each); equals
  /// Permutation::cycle_code() of any permutation of this type.
  std::uint64_t code() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  int degree_ = 0;
  std::vector<Part> parts_;
};

/// A permutation of {1..degree}. Composition reads left to right:
/// (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  /// images[i - 1] is the image of point i. Throws ArgumentError unless the
  /// sequence is a bijection of {1..n}.
  static Permutation from_images(std::span<const Point> images);
  /// Cycle notation: "(1,2,3)(4,5)", whitespace ignored, "()" is the identity.
  static Permutation parse(std::string_view text, int degree);
  static Permutation cycle(int degree, std::span<const Point> points);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Point operator()(Point point) const noexcept { return images_[point - 1] + 1; }
  /// 0-based image access for hot loops.
  std::uint16_t image0(std::size_t index) const noexcept { return images_[index]; }
  const std::vector<std::uint16_t>& raw() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Point smallest_moved_point() const noexcept;  // 0 for the identity
  std::vector<std::vector<Point>> cycles() const;
  CycleType cycle_type() const;
  std::uint64_t order() const;
  bool is_even() const;

  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  std::string to_string() const;
  std::size_t hash() const noexcept;
  /// Allocation-free cycle type fingerprint for degree <= 16, see CycleType::code.
  std::uint64_t cycle_code() const noexcept;

  /// out = p * q without allocating when out already has the right degree.
  static void compose_into(const Permutation& p, const Permutation& q, Permutation& out);

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  /// Lexicographic order of image sequences.
  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<std::uint16_t> images)
      : images_(std::move(images)) {}
  std::vector<std::uint16_t> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long long exponent);
Permutation conjugate(const Permutation& p, const Permutation& by);
CycleType cycle_type(const Permutation& p);
std::uint64_t order_of(const Permutation& p);
Permutation parse_cycles(std::string_view text, int degree);

}  // namespace covnum

template <>
struct std::hash<covnum::Permutation> {
  std::size_t operator()(const covnum::Permutation& p) const noexcept {
    return p.hash();
  }
};
