#include "burnside/action.hpp"

#include <limits>

namespace burnside {

namespace {

void check_table_size(std::size_t points, std::size_t order, const Limits& limits) {
  // An action table is the morphism set of the action groupoid.
  if (order != 0 && points > limits.max_morphisms / order)
    throw CapExceeded("action table entries", points * order, limits.max_morphisms);
}

}  // namespace

GroupAction::GroupAction(GroupPtr group, std::size_t points, std::vector<Point> table,
                         std::string description)
    : group_(std::move(group)),
      points_(points),
      table_(std::move(table)),
      description_(std::move(description)) {
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();
  if (table_.size() != points_ * n) throw ValidationError("action table has the wrong size");
  for (Point v : table_)
    if (v >= points_) throw ValidationError("action table image out of range");
  for (Point x = 0; x < points_; ++x)
    if (act(x, FiniteGroup::identity()) != x)
      throw ValidationError("action violates x.e = x at point " + std::to_string(x));
  // Compatibility against generators suffices: by induction on word length it
  // extends to (x.g).h = x.(gh) for every h.
  for (Point x = 0; x < points_; ++x)
    for (ElementIndex e = 0; e < n; ++e)
      for (ElementIndex s : g.generator_indices())
        if (act(act(x, e), s) != act(x, g.multiply(e, s)))
          throw ValidationError("action violates (x.g).h = x.(gh) at point " + std::to_string(x));
}

GroupAction GroupAction::natural(GroupPtr group, const Limits& limits) {
  const FiniteGroup& g = *group;
  check_table_size(g.degree(), g.order(), limits);
  std::vector<Point> table(g.degree() * g.order());
  for (Point x = 0; x < g.degree(); ++x)
    for (ElementIndex e = 0; e < g.order(); ++e) table[x * g.order() + e] = g.element(e)[x];
  const std::size_t points = g.degree();
  return GroupAction(std::move(group), points, std::move(table), "natural");
}

GroupAction GroupAction::trivial(GroupPtr group, std::size_t points, const Limits& limits) {
  const std::size_t n = group->order();
  check_table_size(points, n, limits);
  std::vector<Point> table(points * n);
  for (Point x = 0; x < points; ++x)
    for (ElementIndex e = 0; e < n; ++e) table[x * n + e] = x;
  return GroupAction(std::move(group), points, std::move(table),
                     "trivial on " + std::to_string(points) + " points");
}

GroupAction GroupAction::colorings(GroupPtr group, std::size_t colors, const Limits& limits) {
  const FiniteGroup& g = *group;
  const std::size_t degree = g.degree();
  std::size_t points = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (colors != 0 && points > std::numeric_limits<std::size_t>::max() / colors)
      throw CapExceeded("coloring count", std::numeric_limits<std::size_t>::max(),
                        limits.max_morphisms);
    points *= colors;
    check_table_size(points, g.order(), limits);
  }
  check_table_size(points, g.order(), limits);

  std::vector<Point> table(points * g.order());
  std::vector<std::size_t> digits(degree), moved(degree);
  for (Point c = 0; c < points; ++c) {
    std::size_t rest = c;
    for (std::size_t i = 0; i < degree; ++i) {
      digits[i] = rest % colors;
      rest /= colors;
    }
    for (ElementIndex e = 0; e < g.order(); ++e) {
      // (c.g)(i) = c(i.g^-1), equivalently (c.g)(j.g) = c(j).
      const Permutation& p = g.element(e);
      for (std::size_t j = 0; j < degree; ++j) moved[p[static_cast<Point>(j)]] = digits[j];
      std::size_t code = 0;
      for (std::size_t i = degree; i-- > 0;) code = code * colors + moved[i];
      table[c * g.order() + e] = static_cast<Point>(code);
    }
  }
  return GroupAction(std::move(group), points, std::move(table),
                     "colorings with " + std::to_string(colors) + " colors");
}

GroupAction GroupAction::translation(GroupPtr group, const Limits& limits) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  check_table_size(n, n, limits);
  std::vector<Point> table(n * n);
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex e = 0; e < n; ++e) table[x * n + e] = g.multiply(x, e);
  return GroupAction(std::move(group), n, std::move(table), "translation");
}

GroupAction GroupAction::from_table(GroupPtr group, std::size_t points,
                                    const std::vector<std::vector<Point>>& rows,
                                    const Limits& limits) {
  const std::size_t n = group->order();
  check_table_size(points, n, limits);
  if (rows.size() != n)
    throw ValidationError("action table needs one row per group element (" + std::to_string(n) +
                          "), got " + std::to_string(rows.size()));
  std::vector<Point> table(points * n);
  for (ElementIndex e = 0; e < n; ++e) {
    if (rows[e].size() != points)
      throw ValidationError("action table row " + std::to_string(e) + " has the wrong length");
    for (Point x = 0; x < points; ++x) table[x * n + e] = rows[e][x];
  }
  return GroupAction(std::move(group), points, std::move(table), "table");
}

bool satisfies_action_laws(const GroupAction& action) {
  const FiniteGroup& g = action.group();
  for (Point x = 0; x < action.set_size(); ++x) {
    if (action.act(x, FiniteGroup::identity()) != x) return false;
    for (ElementIndex a = 0; a < g.order(); ++a)
      for (ElementIndex b = 0; b < g.order(); ++b)
        if (action.act(action.act(x, a), b) != action.act(x, g.multiply(a, b))) return false;
  }
  return true;
}

}  // namespace burnside
