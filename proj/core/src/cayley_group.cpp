#include "burnside/cayley_group.hpp"

#include <algorithm>
#include <functional>

#include "burnside/errors.hpp"
#include "burnside/perm_group.hpp"

namespace burnside {

using Element = CayleyGroup::Element;

CayleyGroup::CayleyGroup(std::size_t order, std::vector<Element> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw ValidationError("group table: empty group");
  if (table_.size() != order_ * order_) throw ValidationError("group table: wrong size");
  std::vector<bool> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < order_; ++c) {
      const Element v = table_[r * order_ + c];
      if (v >= order_ || seen[v]) throw ValidationError("group table: not a Latin square");
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < order_; ++r) {
      const Element v = table_[r * order_ + c];
      if (seen[v]) throw ValidationError("group table: not a Latin square");
      seen[v] = true;
    }
  }
  bool found = false;
  for (Element e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = multiply(e, x) == x && multiply(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group table: no identity");

  inverses_.resize(order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (multiply(a, b) == identity_) inverses_[a] = b;

  element_orders_.resize(order_);
  for (Element a = 0; a < order_; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = multiply(x, a)) {
      if (++k > order_) throw ValidationError("group table: element of unbounded order");
    }
    element_orders_[a] = k;
  }
}

CayleyGroup CayleyGroup::of(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<Element> table(n * n);
  for (ElementIndex i = 0; i < n; ++i)
    for (ElementIndex j = 0; j < n; ++j) table[i * n + j] = group.multiply(i, j);
  return CayleyGroup(n, std::move(table));
}

std::vector<std::size_t> CayleyGroup::order_profile() const {
  auto p = element_orders_;
  std::sort(p.begin(), p.end());
  return p;
}

bool CayleyGroup::is_associative() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      const Element ab = multiply(a, b);
      for (Element c = 0; c < order_; ++c)
        if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
    }
  return true;
}

namespace {

// Marks the subgroup generated by `gens` (closure under right multiplication).
std::vector<bool> generated_subgroup(const CayleyGroup& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Element s : gens) {
      const Element y = g.multiply(queue[k], s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  return in;
}

}  // namespace

std::vector<Element> greedy_generators(const CayleyGroup& g) {
  std::vector<Element> by_order(g.order());
  for (Element a = 0; a < g.order(); ++a) by_order[a] = a;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element x, Element y) {
    return g.element_order(x) > g.element_order(y);
  });
  std::vector<Element> gens;
  std::vector<bool> in = generated_subgroup(g, gens);
  for (Element a : by_order) {
    if (in[a]) continue;
    gens.push_back(a);
    in = generated_subgroup(g, gens);
  }
  return gens;
}

std::optional<std::vector<Element>> find_isomorphism(const CayleyGroup& a, const CayleyGroup& b) {
  if (a.order() != b.order() || a.order_profile() != b.order_profile()) return std::nullopt;
  const std::size_t n = a.order();
  const std::vector<Element> gens = greedy_generators(a);
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> images(gens.size());

  // Closure of the partial map on <gens[0..k]>; false on any inconsistency.
  std::vector<Element> phi(n), used(n);
  auto extend = [&](std::size_t k) -> bool {
    std::fill(phi.begin(), phi.end(), kUnset);
    std::fill(used.begin(), used.end(), kUnset);
    phi[a.identity()] = b.identity();
    used[b.identity()] = a.identity();
    std::vector<Element> queue{a.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element x = queue[q];
      for (std::size_t s = 0; s <= k; ++s) {
        const Element y = a.multiply(x, gens[s]);
        const Element img = b.multiply(phi[x], images[s]);
        if (phi[y] == kUnset) {
          if (used[img] != kUnset) return false;
          phi[y] = img;
          used[img] = y;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    // The image of gens[k] must lie outside the image of <gens[0..k-1]>.
    std::vector<bool> taken(n, false);
    if (k == 0) {
      taken[b.identity()] = true;
    } else {
      if (!extend(k - 1)) return false;
      for (Element y = 0; y < n; ++y)
        if (used[y] != kUnset) taken[y] = true;
    }
    for (Element cand = 0; cand < n; ++cand) {
      if (taken[cand] || b.element_order(cand) != a.element_order(gens[k])) continue;
      images[k] = cand;
      if (extend(k) && search(k + 1)) return true;
    }
    return false;
  };

  if (gens.empty()) return std::vector<Element>{b.identity()};
  if (!search(0) || !extend(gens.size() - 1)) return std::nullopt;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (phi[a.multiply(x, y)] != b.multiply(phi[x], phi[y])) return std::nullopt;
  return phi;
}

}  // namespace burnside
