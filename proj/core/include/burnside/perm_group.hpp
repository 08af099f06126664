#pragma once

// Finite groups as concrete permutation groups with full element enumeration.
//
// Composition is diagrammatic: compose(p, q) applies p first, then q, i.e.
// compose(p, q)[i] == q[p[i]]. With this convention the natural action
// x.g := g[x] is a right action, x.(gh) == (x.g).h.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

using Point = std::uint32_t;
using ElementIndex = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Cycle notation, fixed points omitted, cycles ordered by smallest moved
  /// point and each cycle starting at its smallest point; "()" for identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

class FiniteGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  /// Element indices of the generators, in generator order.
  std::span<const ElementIndex> generator_indices() const noexcept { return generator_indices_; }
  /// All elements, sorted lexicographically by image array. Index 0 is the identity.
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_.at(i); }
  static constexpr ElementIndex identity() noexcept { return 0; }

  /// Index of elements[a] composed with elements[b] (a first).
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_.at(a); }
  /// h^-1 g h.
  ElementIndex conjugate(ElementIndex g, ElementIndex h) const {
    return multiply(multiply(inverse(h), g), h);
  }
  std::size_t element_order(ElementIndex a) const;

  std::optional<ElementIndex> find(const Permutation& p) const;
  /// Like find(), but throws ValidationError for non-members.
  ElementIndex index_of(const Permutation& p) const;

  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

 private:
  friend FiniteGroup group_from_generators(std::size_t, std::vector<Permutation>,
                                           const Limits&);
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> generator_indices_;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> inverses_;
  std::vector<ElementIndex> cayley_;  // row-major, empty above the table threshold
};

/// Closure of `gens` under composition. The identity is always present, so an
/// empty generator list yields the trivial group on `degree` points.
FiniteGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                  const Limits& limits = default_limits());

enum class NamedGroup { cyclic, dihedral, symmetric, alternating, quaternion8 };

std::optional<NamedGroup> parse_named_group(std::string_view name);
std::string_view to_string(NamedGroup g);

/// Standard permutation representations:
///   cyclic n       one n-cycle on n points
///   dihedral n     rotation and reflection on n >= 3 points, order 2n
///   symmetric n    on n points
///   alternating n  on n points
///   quaternion8    right regular representation on 8 points, n ignored
FiniteGroup named_group(NamedGroup name, std::size_t n,
                        const Limits& limits = default_limits());

struct ConjugacyClass {
  ElementIndex representative;  // smallest index in the class
  std::vector<ElementIndex> members;  // sorted
  std::size_t centralizer_order;
};

/// Conjugation orbits, ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

/// Sorted indices of all h with gh == hg.
std::vector<ElementIndex> centralizer(const FiniteGroup& group, ElementIndex g);

}  // namespace burnside
