#pragma once

// Both sides of the homotopy Cauchy-Frobenius identities for a finite group
// action, built explicitly and compared as exact rationals or as equivalences
// of finite groupoids.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/action.hpp"
#include "burnside/groupoid.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// --- counting ---------------------------------------------------------------------

struct Orbits {
  std::size_t count = 0;
  std::vector<Point> representatives;  // smallest point of each orbit, ascending
  std::vector<std::size_t> orbit_of;   // per point, index into representatives
};

/// Union-find over x ~ x.s for the generators s.
Orbits orbits(const GroupAction& action);
std::size_t orbit_count(const GroupAction& action);

struct FixpointSet {
  ElementIndex element;
  std::vector<Point> points;  // sorted
};

FixpointSet fixpoint_set(const GroupAction& action, ElementIndex g);

/// (1/|G|) * sum over g of |F^g|. Throws std::logic_error if not integral.
Rational burnside_rhs(const GroupAction& action);
/// Sum over conjugacy classes of |F^rep| / |C_G(rep)|.
Rational burnside_cc_rhs(const GroupAction& action);

// --- groupoids of an action -----------------------------------------------------------

/// The weak quotient F//G: objects are points, the morphism x -> x.g has id
/// x * |G| + g, and (x, g) then (x.g, h) is (x, gh). `to_base` sends (x, g)
/// to g in the delooping of G.
struct ActionGroupoid {
  GroupoidPtr groupoid;
  GroupoidPtr base;
  GroupoidFunctor to_base;
};

ActionGroupoid action_groupoid(const GroupAction& action, const Limits& limits = default_limits());

/// The incidence correspondence, built as the homotopy pullback of
/// Lambda(E -> BG) along the loop inclusion Omega(BG) -> Lambda(BG), where
/// Omega(BG) is itself the homotopy pullback of the base point against itself.
struct IncidenceCorrespondence {
  ActionGroupoid weak_quotient;
  GroupoidPtr loops;  // Omega(BG); object g is the loop g
  HomotopyPullback pullback;  // `second` is the loop coordinate into `loops`
  /// Each component holds exactly one object whose comparison morphism is an
  /// identity; that object is labelled (x, g).
  std::vector<ObjectId> canonical_objects;
  std::vector<std::pair<Point, ElementIndex>> labels;  // sorted
  /// Every component has a trivial automorphism group and exactly one
  /// canonical object.
  bool discrete = false;
  GroupoidPtr discrete_model;  // discrete groupoid on `labels`
  GroupoidFunctor loop_coordinate;  // discrete_model -> discrete(|G|)
};

IncidenceCorrespondence incidence_groupoid(const GroupAction& action,
                                           const Limits& limits = default_limits());

/// Homotopy fiber of the incidence correspondence over the loop g.
struct FixpointGroupoid {
  HomotopyPullback fiber;
  std::vector<Point> points;  // labels of the canonical objects, sorted
  bool discrete = false;
};

FixpointGroupoid fixpoint_groupoid(const IncidenceCorrespondence& incidence, ElementIndex g,
                                   const Limits& limits = default_limits());
FixpointGroupoid fixpoint_groupoid(const GroupAction& action, ElementIndex g,
                                   const Limits& limits = default_limits());

/// Total space over BG of the loops and their fixpoints: objects (g, x) with
/// x.g = x, ordered by (g, x); a morphism h: (g, x) -> (h^-1 g h, x.h) has id
/// object * |G| + h.
GroupoidPtr formula1_rhs(const GroupAction& action, const Limits& limits = default_limits());

struct ShearConstruction {
  HomotopyPullback fiber;  // homotopy fiber of E -> BG over the base point
  GroupoidPtr fiber_model;  // discrete on the points; point x is the canonical fiber object
  GroupoidFunctor fiber_inclusion;  // fiber_model -> E
  HomotopyPullback fiber_square;  // F x_E F
  /// Per object of F x_E F: (x, g) where its comparison morphism is x -> x.g.
  std::vector<std::pair<Point, ElementIndex>> labels;
  HomotopyPullback diagonal_pullback;  // F x_E F pulled back along the diagonal of F
};

ShearConstruction shear_construction(const GroupAction& action,
                                     const Limits& limits = default_limits());

// --- reports ------------------------------------------------------------------------

enum class Outcome { pass, fail, undecided };

std::string_view to_string(Outcome o);

struct CheckResult {
  std::string name;
  std::string inputs;
  std::string left;
  std::string right;
  Outcome outcome = Outcome::fail;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string subject;
  std::optional<std::uint64_t> seed;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

CheckResult lambda_pi0_check(const GroupoidPtr& x, const Limits& limits = default_limits());
CheckResult class_equation_check(const FiniteGroup& group, const Limits& limits = default_limits());
/// cardinality(E) against the sum over base components b of
/// cardinality(fiber over b) / |Aut(b)|.
CheckResult fiberwise_cardinality_check(const GroupoidFunctor& f,
                                        const Limits& limits = default_limits());
/// Lambda(BG) against the disjoint sum of the deloopings of centralizers of
/// class representatives, plus component count against the class count.
CheckResult inertia_of_delooping_check(const FiniteGroup& group,
                                       const Limits& limits = default_limits());
/// Associativity of the multiplication table: exhaustive up to order 64,
/// seeded random triples above.
CheckResult group_laws_check(const FiniteGroup& group, std::uint64_t seed);
CheckResult incidence_discreteness_check(const GroupAction& action,
                                         const Limits& limits = default_limits());
CheckResult shear_check(const GroupAction& action, const Limits& limits = default_limits());

struct VerificationOptions {
  Limits limits{};
  std::uint64_t seed = 0;
  bool fail_fast = false;
};

VerificationReport run_full_verification(const GroupAction& action,
                                         const VerificationOptions& options = {});

}  // namespace burnside
