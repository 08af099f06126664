#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/perm_group.hpp"

namespace burnside {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A right action of a finite group on the points {0..set_size-1}, stored as
/// a full table. Every constructor validates x.e == x and (x.g).h == x.(gh).
class GroupAction {
 public:
  /// x.g = g[x] on the group's own degree.
  static GroupAction natural(GroupPtr group, const Limits& limits = default_limits());
  /// Every element fixes every one of `points` points.
  static GroupAction trivial(GroupPtr group, std::size_t points,
                             const Limits& limits = default_limits());
  /// Functions c: {0..degree-1} -> {0..colors-1}, encoded as the base-`colors`
  /// number sum c(i) * colors^i, with (c.g)(i) = c(i.g^-1).
  static GroupAction colorings(GroupPtr group, std::size_t colors,
                               const Limits& limits = default_limits());
  /// The group acting on its own elements by right multiplication, x.g = xg.
  static GroupAction translation(GroupPtr group, const Limits& limits = default_limits());
  /// rows[e][x] = x.e, one row per group element in canonical element order.
  static GroupAction from_table(GroupPtr group, std::size_t points,
                                const std::vector<std::vector<Point>>& rows,
                                const Limits& limits = default_limits());

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t set_size() const noexcept { return points_; }
  Point act(Point x, ElementIndex g) const { return table_[x * group_->order() + g]; }
  const std::string& description() const noexcept { return description_; }

 private:
  GroupAction(GroupPtr group, std::size_t points, std::vector<Point> table,
              std::string description);
  GroupPtr group_;
  std::size_t points_;
  std::vector<Point> table_;  // table_[x * |G| + g] = x.g
  std::string description_;
};

/// Exhaustive check over all x, g, h. Construction already guarantees the
/// laws (checked against generators); this is the independent brute force.
bool satisfies_action_laws(const GroupAction& action);

}  // namespace burnside
