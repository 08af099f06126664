#pragma once

// Finite 1-groupoids, functors between them, skeleta, homotopy cardinality,
// homotopy pullbacks (iso-comma groupoids) and the inertia groupoid.
//
// Composition is diagrammatic throughout: compose(m, n) is "m, then n" and is
// defined when tgt(m) == src(n). Morphisms are identified by their index in a
// flat list; the out-going morphisms of each object are kept sorted by
// (target, id) so hom-sets are contiguous.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burnside/cayley_group.hpp"
#include "burnside/errors.hpp"
#include "burnside/rational.hpp"

namespace burnside {

class FiniteGroup;

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;

struct Arrow {
  ObjectId src;
  ObjectId tgt;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class Validation {
  structural,  // ranges, endpoints, identity and inverse laws
  full,        // additionally exhaustive associativity
};

class FiniteGroupoid {
 public:
  /// compose(m, n) is called once for every composable pair (tgt(m) == src(n)).
  using ComposeFn = std::function<MorphismId(MorphismId, MorphismId)>;

  /// Throws ValidationError on any law violation and CapExceeded when the
  /// morphism or composition count exceeds `limits`.
  static FiniteGroupoid build(std::size_t object_count, std::vector<Arrow> arrows,
                              std::vector<MorphismId> identities,
                              std::vector<MorphismId> inverses, const ComposeFn& compose,
                              const Limits& limits = default_limits(),
                              Validation validation = Validation::structural);

  std::size_t object_count() const noexcept { return object_count_; }
  std::size_t morphism_count() const noexcept { return arrows_.size(); }
  std::size_t composition_count() const noexcept { return compositions_.size(); }

  const Arrow& arrow(MorphismId m) const { return arrows_.at(m); }
  ObjectId src(MorphismId m) const { return arrow(m).src; }
  ObjectId tgt(MorphismId m) const { return arrow(m).tgt; }
  MorphismId identity(ObjectId x) const { return identities_.at(x); }
  MorphismId inverse(MorphismId m) const { return inverses_.at(m); }
  bool is_identity(MorphismId m) const { return identities_.at(src(m)) == m; }

  /// m then n; throws ValidationError if tgt(m) != src(n).
  MorphismId compose(MorphismId m, MorphismId n) const;

  /// Morphisms out of x, sorted by (target, id).
  std::span<const MorphismId> out(ObjectId x) const;
  /// Position of m within out(src(m)).
  std::size_t out_position(MorphismId m) const { return out_position_.at(m); }
  /// Hom(x, y), sorted by id.
  std::span<const MorphismId> hom(ObjectId x, ObjectId y) const;
  std::span<const MorphismId> automorphisms(ObjectId x) const { return hom(x, x); }

  /// Exhaustive associativity over all composable triples.
  bool is_associative() const;

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;

 private:
  std::size_t object_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<MorphismId> identities_;
  std::vector<MorphismId> inverses_;
  std::vector<std::size_t> out_offsets_;  // object_count + 1
  std::vector<MorphismId> out_list_;
  std::vector<std::size_t> out_position_;
  std::vector<std::size_t> composition_offsets_;  // morphism_count + 1
  std::vector<MorphismId> compositions_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Throws CapExceeded if `morphisms` would exceed the configured limit.
void check_morphism_cap(std::size_t morphisms, const Limits& limits);

class GroupoidFunctor {
 public:
  /// Validates that endpoints, identities and composition are preserved.
  GroupoidFunctor(GroupoidPtr source, GroupoidPtr target, std::vector<ObjectId> object_map,
                  std::vector<MorphismId> morphism_map);

  const FiniteGroupoid& source() const noexcept { return *source_; }
  const FiniteGroupoid& target() const noexcept { return *target_; }
  const GroupoidPtr& source_ptr() const noexcept { return source_; }
  const GroupoidPtr& target_ptr() const noexcept { return target_; }
  ObjectId on_object(ObjectId x) const { return object_map_.at(x); }
  MorphismId on_morphism(MorphismId m) const { return morphism_map_.at(m); }
  std::span<const ObjectId> object_map() const noexcept { return object_map_; }
  std::span<const MorphismId> morphism_map() const noexcept { return morphism_map_; }

 private:
  GroupoidPtr source_;
  GroupoidPtr target_;
  std::vector<ObjectId> object_map_;
  std::vector<MorphismId> morphism_map_;
};

/// Same pointer or structurally equal.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

GroupoidFunctor identity_functor(const GroupoidPtr& x);
/// f then g.
GroupoidFunctor compose_functors(const GroupoidFunctor& f, const GroupoidFunctor& g);
/// The functor discrete(1) -> X picking out x.
GroupoidFunctor point_inclusion(const GroupoidPtr& x, ObjectId object);
GroupoidFunctor to_terminal(const GroupoidPtr& x);

// --- constructions ------------------------------------------------------------

GroupoidPtr discrete(std::size_t n);
/// One object whose automorphisms are the group elements (morphism id ==
/// element index).
GroupoidPtr delooping(const FiniteGroup& group, const Limits& limits = default_limits());
/// Objects of x first, then objects of y (and likewise morphisms).
GroupoidPtr disjoint_sum(const FiniteGroupoid& x, const FiniteGroupoid& y,
                         const Limits& limits = default_limits());
/// Object (a, b) has index a * |obj y| + b; morphism (f, g) has index
/// f * |mor y| + g.
GroupoidPtr product(const FiniteGroupoid& x, const FiniteGroupoid& y,
                    const Limits& limits = default_limits());
/// <f, g> : S -> X x Y into product(f.target(), g.target()).
GroupoidFunctor pair_functor(const GroupoidFunctor& f, const GroupoidFunctor& g,
                             const Limits& limits = default_limits());
/// X -> X x X.
GroupoidFunctor diagonal(const GroupoidPtr& x, const Limits& limits = default_limits());

// --- skeleta and cardinality ----------------------------------------------------

struct SkeletonComponent {
  ObjectId representative;  // smallest member
  std::vector<ObjectId> members;
  std::size_t automorphism_order;
  std::vector<MorphismId> automorphisms;  // Hom(rep, rep), sorted
  /// Cayley table of Hom(rep, rep); element i is automorphisms[i]. Absent
  /// above Limits::cayley_table_order.
  std::optional<CayleyGroup> automorphism_group;
};

struct Skeleton {
  std::vector<SkeletonComponent> components;  // ordered by representative
  std::vector<std::size_t> component_of;      // per object
};

Skeleton skeleton(const FiniteGroupoid& x, const Limits& limits = default_limits());
/// Connected components as a per-object component index (ordered by smallest
/// member) plus the count.
std::pair<std::vector<std::size_t>, std::size_t> components(const FiniteGroupoid& x);
/// Homotopy cardinality: sum over components of 1 / |Aut(rep)|.
Rational cardinality(const FiniteGroupoid& x);

// --- equivalence ------------------------------------------------------------------

enum class Equivalence { equivalent, inequivalent, undecided };

struct EquivalenceResult {
  Equivalence outcome;
  std::string detail;
  explicit operator bool() const { return outcome == Equivalence::equivalent; }
};

/// Complete equivalence test for finite 1-groupoids: matching component
/// counts and a bijection of components with isomorphic automorphism groups.
/// Undecided when an isomorphism search would exceed Limits::max_iso_order.
EquivalenceResult groupoid_equivalent(const FiniteGroupoid& x, const FiniteGroupoid& y,
                                      const Limits& limits = default_limits());

// --- homotopy pullbacks -------------------------------------------------------------

struct PullbackObject {
  ObjectId left;
  ObjectId right;
  MorphismId comparison;  // f(left) -> g(right) in the common target
  friend bool operator==(const PullbackObject&, const PullbackObject&) = default;
};

struct HomotopyPullback {
  GroupoidPtr groupoid;
  GroupoidFunctor first;   // to f.source()
  GroupoidFunctor second;  // to g.source()
  std::vector<PullbackObject> objects;
  /// Per morphism, the pair (a, b) it is made of.
  std::vector<std::pair<MorphismId, MorphismId>> morphisms;
};

/// Iso-comma groupoid of f: X -> Z and g: Y -> Z. Objects are (x, y, phi) with
/// phi: f(x) -> g(y); a morphism (x, y, phi) -> (x', y', phi') is a pair
/// (a: x -> x', b: y -> y') with phi then g(b) == f(a) then phi'. Objects are
/// ordered by (x, y, phi).
HomotopyPullback homotopy_pullback(const GroupoidFunctor& f, const GroupoidFunctor& g,
                                   const Limits& limits = default_limits());

/// Pullback of f: E -> B along the inclusion of the object b. `first` is the
/// inclusion of the fiber into E.
HomotopyPullback homotopy_fiber(const GroupoidFunctor& f, ObjectId b,
                                const Limits& limits = default_limits());

// --- inertia ----------------------------------------------------------------------

/// The inertia (free loop) groupoid: objects (x, a) with a in Aut(x); a
/// morphism (x, a) -> (y, b) is f: x -> y with b == f^-1 then a then f.
struct Inertia {
  GroupoidPtr groupoid;
  GroupoidFunctor projection;  // (x, a) |-> x
  std::vector<ObjectId> base;  // per inertia object
  std::vector<MorphismId> loop;  // per inertia object
  std::vector<std::size_t> object_offsets;  // per base object
  std::vector<std::size_t> morphism_offsets;  // per inertia object

  ObjectId object_of(ObjectId x, MorphismId a) const;
  /// The morphism out of inertia object `from` lying over base morphism f.
  MorphismId morphism_of(ObjectId from, MorphismId f) const;
};

Inertia inertia(const GroupoidPtr& x, const Limits& limits = default_limits());

/// Lambda(f): (x, a) |-> (f(x), f(a)) between precomputed inertia groupoids.
GroupoidFunctor inertia_map(const GroupoidFunctor& f, const Inertia& source,
                            const Inertia& target);

struct InertiaMap {
  Inertia source;
  Inertia target;
  GroupoidFunctor map;
};

InertiaMap inertia_map(const GroupoidFunctor& f, const Limits& limits = default_limits());

}  // namespace burnside
