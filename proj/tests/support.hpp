#pragma once

// Seeded families of actions, groupoids and functors shared by the property
// tests and the acceptance runner. Action tables are built here from the group
// elements directly; the reference side of each case is an oracle::Action.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "burnside/action.hpp"
#include "burnside/groupoid.hpp"
#include "burnside/verify.hpp"
#include "oracles.hpp"

namespace support {

using namespace burnside;

inline oracle::Perm to_oracle(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

inline std::vector<oracle::Perm> elements_of(const FiniteGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.elements()) out.push_back(to_oracle(p));
  return out;
}

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

inline GroupPtr named(NamedGroup n, std::size_t k) { return make_group(named_group(n, k)); }

struct Case {
  std::string name;
  GroupAction action;
  oracle::Action reference;
};

inline oracle::Action reference_of(const GroupAction& a) {
  oracle::Action r{elements_of(a.group()), static_cast<int>(a.set_size()), {}};
  for (ElementIndex g = 0; g < a.group().order(); ++g) {
    std::vector<int> row(a.set_size());
    for (Point x = 0; x < a.set_size(); ++x) row[x] = static_cast<int>(a.act(x, g));
    r.image.push_back(std::move(row));
  }
  return r;
}

// Coloring cases take their reference from the oracle's own coloring code so
// the encoding is checked too.
inline Case coloring_case(const std::string& name, GroupPtr g, int k) {
  auto act = GroupAction::colorings(g, k);
  return {name + " colorings k=" + std::to_string(k), std::move(act),
          oracle::colorings(elements_of(*g), k)};
}

inline Case table_case(const std::string& name, GroupPtr g, int points,
                       const std::vector<std::vector<Point>>& rows) {
  auto act = GroupAction::from_table(g, points, rows);
  oracle::Action ref{elements_of(*g), points, {}};
  for (const auto& r : rows) ref.image.emplace_back(r.begin(), r.end());
  return {name, std::move(act), std::move(ref)};
}

// A random group of order at most `max_order`: either a named group or the
// closure of random permutations.
inline std::pair<std::string, GroupPtr> random_group(std::mt19937_64& rng,
                                                     std::size_t max_order = 24) {
  for (;;) {
    const int pick = static_cast<int>(rng() % 8);
    std::string name;
    GroupPtr g;
    switch (pick) {
      case 0: {
        const std::size_t n = 1 + rng() % 12;
        g = named(NamedGroup::cyclic, n);
        name = "C" + std::to_string(n);
        break;
      }
      case 1: {
        const std::size_t n = 3 + rng() % 10;
        g = named(NamedGroup::dihedral, n);
        name = "D" + std::to_string(n);
        break;
      }
      case 2: {
        const std::size_t n = 1 + rng() % 4;
        g = named(NamedGroup::symmetric, n);
        name = "S" + std::to_string(n);
        break;
      }
      case 3:
        g = named(NamedGroup::alternating, 4);
        name = "A4";
        break;
      case 4:
        g = named(NamedGroup::quaternion8, 8);
        name = "Q8";
        break;
      default: {
        const int degree = 2 + static_cast<int>(rng() % 5);
        const int count = 1 + static_cast<int>(rng() % 2);
        std::vector<Permutation> gens;
        for (auto& p : oracle::random_generators(rng, degree, count))
          gens.emplace_back(std::vector<Point>(p.begin(), p.end()));
        g = make_group(group_from_generators(degree, gens));
        name = "<" + std::to_string(count) + " random in S" + std::to_string(degree) + ">";
      }
    }
    if (g->order() <= max_order) return {name, g};
  }
}

// Orbit building blocks on which any permutation group acts: its own points,
// a fixed point, the 2-subsets of its points and (for small groups) the group
// itself by right translation.
inline std::vector<std::vector<Point>> block_rows(const FiniteGroup& G, int kind,
                                                  int& size) {
  const std::size_t d = G.degree();
  std::vector<std::vector<Point>> rows(G.order());
  if (kind == 0) {
    size = static_cast<int>(d);
    for (ElementIndex e = 0; e < G.order(); ++e)
      rows[e].assign(G.element(e).images().begin(), G.element(e).images().end());
  } else if (kind == 1) {
    size = 1;
    for (auto& r : rows) r = {0};
  } else if (kind == 2) {
    std::vector<std::pair<Point, Point>> pairs;
    for (Point a = 0; a < d; ++a)
      for (Point b = a + 1; b < d; ++b) pairs.push_back({a, b});
    size = static_cast<int>(pairs.size());
    for (ElementIndex e = 0; e < G.order(); ++e)
      for (const auto& [a, b] : pairs) {
        Point x = G.element(e)[a], y = G.element(e)[b];
        if (x > y) std::swap(x, y);
        rows[e].push_back(static_cast<Point>(
            std::find(pairs.begin(), pairs.end(), std::make_pair(x, y)) - pairs.begin()));
      }
  } else {
    size = static_cast<int>(G.order());
    for (ElementIndex e = 0; e < G.order(); ++e)
      for (ElementIndex x = 0; x < G.order(); ++x) rows[e].push_back(G.multiply(x, e));
  }
  return rows;
}

// A random action with at most `max_points` points: a disjoint union of
// blocks, relabelled by a random permutation of the points.
inline Case random_action(std::mt19937_64& rng, std::size_t max_order = 24,
                          int max_points = 12) {
  auto [gname, g] = random_group(rng, max_order);
  const FiniteGroup& G = *g;
  std::vector<std::vector<Point>> rows(G.order());
  int total = 0;
  std::string blocks;
  const int want = static_cast<int>(rng() % 4);
  for (int tries = 0; tries < 8 && (total == 0 || tries < want + 1); ++tries) {
    const int kind = static_cast<int>(rng() % 4);
    int size = 0;
    auto block = block_rows(G, kind, size);
    if (size == 0 || total + size > max_points) continue;
    for (ElementIndex e = 0; e < G.order(); ++e)
      for (Point x : block[e]) rows[e].push_back(x + total);
    total += size;
    blocks += "nfpt"[kind];
  }
  if (total == 0) {
    for (auto& r : rows) r = {0};
    total = 1;
    blocks = "f";
  }
  std::vector<Point> relabel(total);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<std::vector<Point>> shuffled(G.order(), std::vector<Point>(total));
  for (ElementIndex e = 0; e < G.order(); ++e)
    for (int x = 0; x < total; ++x) shuffled[e][relabel[x]] = relabel[rows[e][x]];
  return table_case(gname + " on " + std::to_string(total) + " points [" + blocks + "]", g,
                    total, shuffled);
}

// The fixed part of the suite: small colorings, named natural actions and
// the degenerate cases.
inline std::vector<Case> golden_cases() {
  std::vector<Case> out;
  out.push_back(coloring_case("C3", named(NamedGroup::cyclic, 3), 2));
  out.push_back(coloring_case("C6", named(NamedGroup::cyclic, 6), 2));
  out.push_back(coloring_case("D6", named(NamedGroup::dihedral, 6), 2));
  out.push_back(coloring_case("D4", named(NamedGroup::dihedral, 4), 3));
  out.push_back(coloring_case("S3", named(NamedGroup::symmetric, 3), 3));
  out.push_back(coloring_case("C5", named(NamedGroup::cyclic, 5), 2));
  for (auto [n, k] : {std::pair{NamedGroup::symmetric, 3}, {NamedGroup::symmetric, 4},
                      {NamedGroup::alternating, 4}, {NamedGroup::dihedral, 5},
                      {NamedGroup::quaternion8, 8}, {NamedGroup::cyclic, 7}}) {
    auto g = named(n, k);
    auto act = GroupAction::natural(g);
    out.push_back({std::string(to_string(n)) + "(" + std::to_string(k) + ") natural", act,
                   reference_of(act)});
  }
  {
    auto g = named(NamedGroup::symmetric, 3);
    auto act = GroupAction::translation(g);
    out.push_back({"S3 translation", act, reference_of(act)});
  }
  {
    auto g = named(NamedGroup::dihedral, 4);
    auto act = GroupAction::trivial(g, 0);
    out.push_back({"D4 on the empty set", act, reference_of(act)});
  }
  {
    auto g = named(NamedGroup::cyclic, 1);
    auto act = GroupAction::trivial(g, 5);
    out.push_back({"trivial group on 5 points", act, reference_of(act)});
  }
  {
    auto g = named(NamedGroup::symmetric, 3);
    auto act = GroupAction::trivial(g, 1);
    out.push_back({"S3 on a point", act, reference_of(act)});
  }
  return out;
}

// Larger colorings (k^n <= 4096), used for the counting identities only.
inline std::vector<Case> big_coloring_cases() {
  std::vector<Case> out;
  out.push_back(coloring_case("C12", named(NamedGroup::cyclic, 12), 2));
  out.push_back(coloring_case("D12", named(NamedGroup::dihedral, 12), 2));
  out.push_back(coloring_case("D6", named(NamedGroup::dihedral, 6), 4));
  out.push_back(coloring_case("S4", named(NamedGroup::symmetric, 4), 8));
  out.push_back(coloring_case("C6", named(NamedGroup::cyclic, 6), 4));
  out.push_back(coloring_case("A4", named(NamedGroup::alternating, 4), 8));
  out.push_back(coloring_case("Q8", named(NamedGroup::quaternion8, 8), 2));
  out.push_back(coloring_case("D4", named(NamedGroup::dihedral, 4), 8));
  return out;
}

inline std::vector<Case> action_suite(std::uint64_t seed, int random_count) {
  std::vector<Case> out = golden_cases();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) out.push_back(random_action(rng));
  return out;
}

// Morphism count of the inertia groupoid: sum over x of |Aut(x)| |out(x)|.
inline std::size_t inertia_size(const FiniteGroupoid& x) {
  std::size_t n = 0;
  for (ObjectId o = 0; o < x.object_count(); ++o) n += x.automorphisms(o).size() * x.out(o).size();
  return n;
}

inline GroupoidPtr random_groupoid_raw(std::mt19937_64& rng, int depth);

// Random groupoids built from deloopings, action groupoids, sums and
// products, small enough that their inertia stays well inside the caps.
inline GroupoidPtr random_groupoid(std::mt19937_64& rng, int depth = 2) {
  for (;;) {
    auto x = random_groupoid_raw(rng, depth);
    if (inertia_size(*x) <= 20000) return x;
  }
}

inline GroupoidPtr random_groupoid_raw(std::mt19937_64& rng, int depth) {
  const int pick = static_cast<int>(rng() % (depth > 0 ? 6 : 3));
  switch (pick) {
    case 0:
      return delooping(*random_group(rng, 12).second);
    case 1:
      return action_groupoid(random_action(rng, 12, 6).action).groupoid;
    case 2:
      return discrete(rng() % 4);
    case 3:
    case 4: {
      auto a = random_groupoid(rng, depth - 1);
      auto b = random_groupoid(rng, depth - 1);
      return disjoint_sum(*a, *b);
    }
    default: {
      auto a = random_groupoid(rng, depth - 1);
      auto b = random_groupoid(rng, depth - 1);
      if (a->morphism_count() * b->morphism_count() > 3000) return disjoint_sum(*a, *b);
      return product(*a, *b);
    }
  }
}

// Largest homotopy fiber of f as (morphisms, composable pairs): over b a
// fiber morphism is a pair (m, phi) with m out of e and phi: f(e) -> b, and
// it composes with everything out of tgt(m).
inline std::pair<std::size_t, std::size_t> largest_fiber(const GroupoidFunctor& f) {
  const FiniteGroupoid& E = f.source();
  const FiniteGroupoid& B = f.target();
  std::size_t mor = 0, pairs = 0;
  for (ObjectId b = 0; b < B.object_count(); ++b) {
    std::size_t m = 0, p = 0;
    for (ObjectId e = 0; e < E.object_count(); ++e) {
      const std::size_t homs = B.hom(f.on_object(e), b).size();
      m += homs * E.out(e).size();
      for (MorphismId a : E.out(e)) p += homs * E.out(E.tgt(a)).size();
    }
    mor = std::max(mor, m);
    pairs = std::max(pairs, p);
  }
  return {mor, pairs};
}

// Functors for the fiberwise counting identity: projections to the weak
// quotient base, inertia projections, product projections and inertia maps.
inline std::vector<GroupoidFunctor> functor_suite(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<GroupoidFunctor> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const std::size_t before = out.size();
    switch (i % 4) {
      case 0:
        out.push_back(action_groupoid(random_action(rng).action).to_base);
        break;
      case 1: {
        out.push_back(inertia(random_groupoid(rng)).projection);
        break;
      }
      case 2: {
        auto a = random_groupoid(rng, 1);
        auto b = random_groupoid(rng, 1);
        if (a->morphism_count() * b->morphism_count() > 3000) b = discrete(2);
        auto p = homotopy_pullback(to_terminal(a), to_terminal(b));
        out.push_back(p.first);
        break;
      }
      default: {
        auto c = random_action(rng, 12, 8);
        out.push_back(inertia_map(action_groupoid(c.action).to_base).map);
      }
    }
    if (out.size() > before) {
      const auto [mor, pairs] = largest_fiber(out.back());
      if (mor > 50000 || pairs > 2000000) out.pop_back();
    }
  }
  return out;
}

}  // namespace support
