#include "burnside/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace burnside {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw ValidationError("permutation image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point from = cycle[k];
      if (from >= degree || used[from])
        throw ValidationError("cycles are not disjoint or exceed the degree");
      used[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    Point p = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(p);
      done[p] = true;
      p = images_[p];
    } while (p != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ValidationError("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i) images[i] = q[p[i]];
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

// --- FiniteGroup ------------------------------------------------------------

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  if (a >= order() || b >= order()) throw ValidationError("element index out of range");
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * order() + b];
  return index_of(compose(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::element_order(ElementIndex a) const {
  std::size_t k = 1;
  for (ElementIndex x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

std::optional<ElementIndex> FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<ElementIndex>(it - elements_.begin());
}

ElementIndex FiniteGroup::index_of(const Permutation& p) const {
  if (auto i = find(p)) return *i;
  throw ValidationError("permutation " + p.cycle_string() + " is not a group element");
}

FiniteGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                  const Limits& limits) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw ValidationError("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " + std::to_string(degree));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation q = compose(p, s);
      if (seen.insert(q).second) {
        if (seen.size() > limits.max_elements)
          throw CapExceeded("group order", seen.size(), limits.max_elements);
        queue.push_back(std::move(q));
      }
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());
  const std::size_t n = g.elements_.size();

  g.inverses_.resize(n);
  for (ElementIndex i = 0; i < n; ++i) g.inverses_[i] = g.index_of(g.elements_[i].inverse());

  if (n <= limits.cayley_table_order && !gens.empty()) {
    // Right multiplication by generators, then a BFS word tree b = parent(b) s
    // so that a b = (a parent(b)) s fills each row in O(n).
    const std::size_t k = gens.size();
    std::vector<ElementIndex> rmul(n * k);
    for (ElementIndex i = 0; i < n; ++i)
      for (std::size_t s = 0; s < k; ++s) rmul[i * k + s] = g.index_of(compose(g.elements_[i], gens[s]));
    std::vector<ElementIndex> order{0}, parent(n, 0);
    std::vector<std::uint32_t> via(n, 0);
    std::vector<bool> reached(n, false);
    reached[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t s = 0; s < k; ++s) {
        const ElementIndex b = rmul[order[head] * k + s];
        if (reached[b]) continue;
        reached[b] = true;
        parent[b] = order[head];
        via[b] = static_cast<std::uint32_t>(s);
        order.push_back(b);
      }
    std::vector<ElementIndex> table(n * n);
    for (ElementIndex a = 0; a < n; ++a) {
      ElementIndex* row = &table[a * n];
      row[0] = a;
      for (std::size_t t = 1; t < n; ++t) {
        const ElementIndex b = order[t];
        row[b] = rmul[row[parent[b]] * k + via[b]];
      }
    }
    g.cayley_ = std::move(table);
  } else if (n == 1) {
    g.cayley_ = {0};
  }

  for (const auto& s : gens) g.generator_indices_.push_back(g.index_of(s));
  g.generators_ = std::move(gens);
  return g;
}

// --- named groups -------------------------------------------------------------

std::optional<NamedGroup> parse_named_group(std::string_view name) {
  if (name == "cyclic") return NamedGroup::cyclic;
  if (name == "dihedral") return NamedGroup::dihedral;
  if (name == "symmetric") return NamedGroup::symmetric;
  if (name == "alternating") return NamedGroup::alternating;
  if (name == "quaternion8") return NamedGroup::quaternion8;
  return std::nullopt;
}

std::string_view to_string(NamedGroup g) {
  switch (g) {
    case NamedGroup::cyclic: return "cyclic";
    case NamedGroup::dihedral: return "dihedral";
    case NamedGroup::symmetric: return "symmetric";
    case NamedGroup::alternating: return "alternating";
    case NamedGroup::quaternion8: return "quaternion8";
  }
  return "?";
}

namespace {

// Saturating n!/divisor, enough to compare against the element cap.
std::size_t factorial_over(std::size_t n, std::size_t divisor, std::size_t ceiling) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f / divisor > ceiling) return ceiling + 1;
  }
  return f / divisor;
}

Permutation quaternion_right_mult(std::size_t basis) {
  // Units ±1, ±i, ±j, ±k indexed as basis + 4 * sign, basis 0..3 = 1, i, j, k.
  // kTable[a][b] = (sign, basis) of e_a * e_b.
  static constexpr int kTable[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<Point> images(8);
  for (Point x = 0; x < 8; ++x) {
    const std::size_t xb = x % 4, xs = x / 4;
    const auto& prod = kTable[xb][basis];
    const std::size_t sign = (xs + static_cast<std::size_t>(prod[0])) % 2;
    images[x] = static_cast<Point>(static_cast<std::size_t>(prod[1]) + 4 * sign);
  }
  return Permutation(std::move(images));
}

}  // namespace

FiniteGroup named_group(NamedGroup name, std::size_t n, const Limits& limits) {
  constexpr std::size_t kMaxDegree = 1u << 16;
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ValidationError(std::string(to_string(name)) + ": " + what);
  };
  if (name != NamedGroup::quaternion8) require(n >= 1 && n <= kMaxDegree, "n out of supported range");

  std::vector<Permutation> gens;
  switch (name) {
    case NamedGroup::cyclic: {
      if (n > limits.max_elements) throw CapExceeded("group order", n, limits.max_elements);
      std::vector<Point> cycle(n);
      std::iota(cycle.begin(), cycle.end(), Point{0});
      gens.push_back(Permutation::from_cycles(n, {cycle}));
      break;
    }
    case NamedGroup::dihedral: {
      require(n >= 3, "dihedral group needs n >= 3 points to act faithfully");
      if (2 * n > limits.max_elements) throw CapExceeded("group order", 2 * n, limits.max_elements);
      std::vector<Point> rot(n), refl(n);
      for (Point i = 0; i < n; ++i) {
        rot[i] = static_cast<Point>((i + 1) % n);
        refl[i] = static_cast<Point>((n - i) % n);
      }
      gens.emplace_back(std::move(rot));
      gens.emplace_back(std::move(refl));
      break;
    }
    case NamedGroup::symmetric: {
      const std::size_t order = factorial_over(n, 1, limits.max_elements);
      if (order > limits.max_elements) throw CapExceeded("group order", order, limits.max_elements);
      if (n >= 2) {
        std::vector<Point> cycle(n);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
        if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cycle}));
      }
      break;
    }
    case NamedGroup::alternating: {
      const std::size_t order = n >= 2 ? factorial_over(n, 2, limits.max_elements) : 1;
      if (order > limits.max_elements) throw CapExceeded("group order", order, limits.max_elements);
      for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
      break;
    }
    case NamedGroup::quaternion8: {
      if (8 > limits.max_elements) throw CapExceeded("group order", 8, limits.max_elements);
      gens.push_back(quaternion_right_mult(1));
      gens.push_back(quaternion_right_mult(2));
      return group_from_generators(8, std::move(gens), limits);
    }
  }
  return group_from_generators(n, std::move(gens), limits);
}

// --- conjugacy ----------------------------------------------------------------

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  const auto gens = group.generator_indices();
  for (ElementIndex rep = 0; rep < n; ++rep) {
    if (assigned[rep]) continue;
    // Conjugation orbits under the generators are the orbits under the group.
    std::vector<ElementIndex> members{rep};
    assigned[rep] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (ElementIndex s : gens) {
        const ElementIndex c = group.conjugate(members[k], s);
        if (!assigned[c]) {
          assigned[c] = true;
          members.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    const std::size_t size = members.size();
    classes.push_back({rep, std::move(members), n / size});
  }
  return classes;
}

std::vector<ElementIndex> centralizer(const FiniteGroup& group, ElementIndex g) {
  if (g >= group.order()) throw ValidationError("centralizer: element index out of range");
  std::vector<ElementIndex> out;
  for (ElementIndex h = 0; h < group.order(); ++h)
    if (group.multiply(g, h) == group.multiply(h, g)) out.push_back(h);
  return out;
}

}  // namespace burnside
