#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsg {

using Point = std::uint32_t;

/// A bijection on the points 1..degree, stored 0-based.
///
/// Products are read left to right: compose(a, b) applies a first, then b.
/// That convention holds everywhere in the library, so a conjugate written
/// g * x * g^-1 means "apply g, then x, then g^-1".
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// From a 0-based image array. Throws ParseError if not a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// Image of a 0-based point.
  Point operator()(Point p) const { return images_[p]; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Disjoint cycles of length >= 2, each starting at its least point, 1-based.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses "(1 2 3)(4 5)" style disjoint-cycle notation. "()" or an empty
/// string is the identity. Commas between points are accepted.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Apply a first, then b. Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// Least k >= 1 with a^k = identity.
std::uint64_t element_order(const Permutation& a);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace nsg

template <>
struct std::hash<nsg::Permutation> : nsg::PermutationHash {};
