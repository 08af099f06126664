#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace burnside {

class FiniteGroup;

/// A finite group given only by its multiplication table. Element 0 need not
/// be the identity; the identity is located on construction.
class CayleyGroup {
 public:
  using Element = std::uint32_t;

  /// `table` is row-major, table[a * order + b] = a*b. Throws ValidationError
  /// unless the table is a Latin square with a two-sided identity.
  CayleyGroup(std::size_t order, std::vector<Element> table);
  static CayleyGroup of(const FiniteGroup& group);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  std::size_t element_order(Element a) const { return element_orders_[a]; }
  /// Element orders, sorted. Equal profiles are necessary for isomorphism.
  std::vector<std::size_t> order_profile() const;
  /// Exhaustive associativity check, O(order^3).
  bool is_associative() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::size_t> element_orders_;
};

/// Greedy generating set: repeatedly adds an element of largest order not
/// yet in the generated subgroup.
std::vector<CayleyGroup::Element> greedy_generators(const CayleyGroup& g);

/// Brute-force isomorphism search over generator images with order pruning.
/// Returns phi with phi[a] the image of a, or nullopt if none exists.
std::optional<std::vector<CayleyGroup::Element>> find_isomorphism(const CayleyGroup& a,
                                                                  const CayleyGroup& b);

}  // namespace burnside
