#include "burnside/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace burnside {

// --- counting ---------------------------------------------------------------------

Orbits orbits(const GroupAction& action) {
  const std::size_t n = action.set_size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Point x = 0; x < n; ++x)
    for (ElementIndex s : action.group().generator_indices()) {
      const std::size_t a = find(x), b = find(action.act(x, s));
      // Keep the smaller point as root so roots are orbit minima.
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  Orbits out;
  out.orbit_of.resize(n);
  std::vector<std::size_t> slot(n, 0);
  for (Point x = 0; x < n; ++x) {
    const std::size_t r = find(x);
    if (r == x) {
      slot[x] = out.representatives.size();
      out.representatives.push_back(x);
    }
    out.orbit_of[x] = slot[r];
  }
  out.count = out.representatives.size();
  return out;
}

std::size_t orbit_count(const GroupAction& action) { return orbits(action).count; }

FixpointSet fixpoint_set(const GroupAction& action, ElementIndex g) {
  if (g >= action.group().order()) throw ValidationError("fixpoint_set: element index out of range");
  FixpointSet fs{g, {}};
  for (Point x = 0; x < action.set_size(); ++x)
    if (action.act(x, g) == x) fs.points.push_back(x);
  return fs;
}

Rational burnside_rhs(const GroupAction& action) {
  const FiniteGroup& g = action.group();
  std::int64_t total = 0;
  for (ElementIndex e = 0; e < g.order(); ++e)
    total += static_cast<std::int64_t>(fixpoint_set(action, e).points.size());
  Rational r(total, static_cast<std::int64_t>(g.order()));
  if (!r.is_integer()) throw std::logic_error("burnside sum is not an integer: " + r.str());
  return r;
}

Rational burnside_cc_rhs(const GroupAction& action) {
  Rational total;
  for (const auto& cc : conjugacy_classes(action.group()))
    total += Rational(static_cast<std::int64_t>(fixpoint_set(action, cc.representative).points.size()),
                      static_cast<std::int64_t>(cc.centralizer_order));
  return total;
}

// --- groupoids of an action -------------------------------------------------------------

ActionGroupoid action_groupoid(const GroupAction& action, const Limits& limits) {
  const FiniteGroup& G = action.group();
  const std::size_t n = G.order();
  const std::size_t points = action.set_size();
  check_morphism_cap(points * n, limits);
  std::vector<Arrow> arrows(points * n);
  std::vector<MorphismId> inverses(points * n);
  std::vector<MorphismId> ids(points);
  for (Point x = 0; x < points; ++x) {
    ids[x] = static_cast<MorphismId>(x * n);
    for (ElementIndex g = 0; g < n; ++g) {
      const Point y = action.act(x, g);
      arrows[x * n + g] = {x, y};
      inverses[x * n + g] = static_cast<MorphismId>(y * n + G.inverse(g));
    }
  }
  auto groupoid = std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      points, std::move(arrows), std::move(ids), std::move(inverses),
      [&](MorphismId m, MorphismId k) {
        return static_cast<MorphismId>((m / n) * n + G.multiply(m % n, k % n));
      },
      limits));
  GroupoidPtr base = delooping(G, limits);
  std::vector<MorphismId> mors(points * n);
  for (std::size_t m = 0; m < mors.size(); ++m) mors[m] = static_cast<MorphismId>(m % n);
  GroupoidFunctor to_base(groupoid, base, std::vector<ObjectId>(points, 0), std::move(mors));
  return ActionGroupoid{std::move(groupoid), std::move(base), std::move(to_base)};
}

IncidenceCorrespondence incidence_groupoid(const GroupAction& action, const Limits& limits) {
  const std::size_t n = action.group().order();
  ActionGroupoid E = action_groupoid(action, limits);
  InertiaMap lambda = inertia_map(E.to_base, limits);

  const GroupoidFunctor base_point = point_inclusion(E.base, 0);
  HomotopyPullback loop_pb = homotopy_pullback(base_point, base_point, limits);
  GroupoidPtr loops = loop_pb.groupoid;
  if (loops->object_count() != n || loops->morphism_count() != n)
    throw std::logic_error("loop groupoid of BG is not discrete on |G| objects");
  for (ObjectId g = 0; g < n; ++g)
    if (loop_pb.objects[g].comparison != g) throw std::logic_error("loop groupoid out of order");

  // Omega(BG) -> Lambda(BG): the loop g is the inertia object (*, g).
  const Inertia& lambda_base = lambda.target;
  std::vector<ObjectId> j_objs(n);
  std::vector<MorphismId> j_mors(n);
  for (ObjectId g = 0; g < n; ++g) {
    j_objs[g] = lambda_base.object_of(0, g);
    j_mors[loops->identity(g)] = lambda_base.groupoid->identity(j_objs[g]);
  }
  GroupoidFunctor loop_inclusion(loops, lambda_base.groupoid, std::move(j_objs), std::move(j_mors));

  HomotopyPullback pb = homotopy_pullback(lambda.map, loop_inclusion, limits);
  const FiniteGroupoid& I = *pb.groupoid;
  const FiniteGroupoid& LB = *lambda_base.groupoid;

  std::vector<std::pair<std::pair<Point, ElementIndex>, ObjectId>> found;
  for (ObjectId o = 0; o < I.object_count(); ++o) {
    const PullbackObject& obj = pb.objects[o];
    if (!LB.is_identity(obj.comparison)) continue;
    const Point x = lambda.source.base[obj.left];
    const auto g = static_cast<ElementIndex>(lambda.source.loop[obj.left] % n);
    if (g != obj.right) throw std::logic_error("incidence: canonical object has mismatched loop");
    found.push_back({{x, g}, o});
  }
  std::sort(found.begin(), found.end());

  IncidenceCorrespondence out{std::move(E), loops, std::move(pb), {}, {}, false, nullptr,
                              identity_functor(loops)};
  for (const auto& [label, o] : found) {
    out.labels.push_back(label);
    out.canonical_objects.push_back(o);
  }

  const auto [comp, count] = components(I);
  std::vector<std::size_t> canon_per_comp(count, 0);
  for (ObjectId o : out.canonical_objects) ++canon_per_comp[comp[o]];
  bool discrete_ok = std::all_of(canon_per_comp.begin(), canon_per_comp.end(),
                                 [](std::size_t c) { return c == 1; });
  std::vector<bool> seen(count, false);
  for (ObjectId o = 0; o < I.object_count() && discrete_ok; ++o) {
    if (seen[comp[o]]) continue;
    seen[comp[o]] = true;
    discrete_ok = I.automorphisms(o).size() == 1;
  }
  out.discrete = discrete_ok;

  out.discrete_model = discrete(out.labels.size());
  std::vector<ObjectId> coord_objs(out.labels.size());
  std::vector<MorphismId> coord_mors(out.labels.size());
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    coord_objs[i] = out.labels[i].second;
    coord_mors[out.discrete_model->identity(static_cast<ObjectId>(i))] =
        loops->identity(out.labels[i].second);
  }
  out.loop_coordinate =
      GroupoidFunctor(out.discrete_model, loops, std::move(coord_objs), std::move(coord_mors));
  return out;
}

FixpointGroupoid fixpoint_groupoid(const IncidenceCorrespondence& incidence, ElementIndex g,
                                   const Limits& limits) {
  if (g >= incidence.loops->object_count())
    throw ValidationError("fixpoint_groupoid: element index out of range");
  FixpointGroupoid out{homotopy_fiber(incidence.pullback.second, g, limits), {}, false};
  const FiniteGroupoid& I = *incidence.pullback.groupoid;
  std::vector<long> label_of(I.object_count(), -1);
  for (std::size_t i = 0; i < incidence.canonical_objects.size(); ++i)
    label_of[incidence.canonical_objects[i]] = static_cast<long>(incidence.labels[i].first);

  const FiniteGroupoid& Fg = *out.fiber.groupoid;
  std::vector<ObjectId> canonical;
  for (ObjectId o = 0; o < Fg.object_count(); ++o) {
    const long label = label_of[out.fiber.objects[o].left];
    if (label >= 0) {
      out.points.push_back(static_cast<Point>(label));
      canonical.push_back(o);
    }
  }
  std::sort(out.points.begin(), out.points.end());

  const auto [comp, count] = components(Fg);
  std::vector<std::size_t> per_comp(count, 0);
  for (ObjectId o : canonical) ++per_comp[comp[o]];
  bool ok = std::all_of(per_comp.begin(), per_comp.end(), [](std::size_t c) { return c == 1; });
  for (ObjectId o = 0; o < Fg.object_count() && ok; ++o) ok = Fg.automorphisms(o).size() == 1;
  out.discrete = ok;
  return out;
}

FixpointGroupoid fixpoint_groupoid(const GroupAction& action, ElementIndex g, const Limits& limits) {
  return fixpoint_groupoid(incidence_groupoid(action, limits), g, limits);
}

GroupoidPtr formula1_rhs(const GroupAction& action, const Limits& limits) {
  const FiniteGroup& G = action.group();
  const std::size_t n = G.order();
  const std::size_t points = action.set_size();
  constexpr ObjectId kNone = static_cast<ObjectId>(-1);
  std::vector<ObjectId> index(n * points, kNone);
  std::vector<std::pair<ElementIndex, Point>> objects;
  for (ElementIndex g = 0; g < n; ++g)
    for (Point x = 0; x < points; ++x)
      if (action.act(x, g) == x) {
        index[g * points + x] = static_cast<ObjectId>(objects.size());
        objects.emplace_back(g, x);
      }
  check_morphism_cap(objects.size() * n, limits);

  std::vector<Arrow> arrows(objects.size() * n);
  std::vector<MorphismId> inverses(objects.size() * n);
  std::vector<MorphismId> ids(objects.size());
  for (ObjectId o = 0; o < objects.size(); ++o) {
    const auto [g, x] = objects[o];
    ids[o] = static_cast<MorphismId>(o * n);
    for (ElementIndex h = 0; h < n; ++h) {
      const ObjectId t = index[G.conjugate(g, h) * points + action.act(x, h)];
      arrows[o * n + h] = {o, t};
      inverses[o * n + h] = static_cast<MorphismId>(t * n + G.inverse(h));
    }
  }
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      objects.size(), std::move(arrows), std::move(ids), std::move(inverses),
      [&](MorphismId m, MorphismId k) {
        return static_cast<MorphismId>((m / n) * n + G.multiply(m % n, k % n));
      },
      limits));
}

ShearConstruction shear_construction(const GroupAction& action, const Limits& limits) {
  const std::size_t n = action.group().order();
  const std::size_t points = action.set_size();
  ActionGroupoid E = action_groupoid(action, limits);
  HomotopyPullback fiber = homotopy_fiber(E.to_base, 0, limits);
  // Fiber objects are (x, *, h) in (x, h) order; the canonical one has h = e.
  for (Point x = 0; x < points; ++x) {
    const auto& obj = fiber.objects.at(x * n);
    if (obj.left != x || obj.comparison != FiniteGroup::identity())
      throw std::logic_error("shear: unexpected fiber object order");
  }
  GroupoidPtr model = discrete(points);
  std::vector<ObjectId> incl_objs(points);
  std::vector<MorphismId> incl_mors(points);
  for (Point x = 0; x < points; ++x) {
    incl_objs[x] = x;
    incl_mors[model->identity(x)] = E.groupoid->identity(x);
  }
  GroupoidFunctor inclusion(model, E.groupoid, std::move(incl_objs), std::move(incl_mors));
  HomotopyPullback square = homotopy_pullback(inclusion, inclusion, limits);

  std::vector<std::pair<Point, ElementIndex>> labels;
  labels.reserve(square.objects.size());
  for (const auto& obj : square.objects)
    labels.emplace_back(obj.left, static_cast<ElementIndex>(obj.comparison % n));

  GroupoidFunctor projections = pair_functor(square.first, square.second, limits);
  HomotopyPullback diag = homotopy_pullback(diagonal(model, limits), projections, limits);
  return ShearConstruction{std::move(fiber), std::move(model), std::move(inclusion),
                           std::move(square), std::move(labels), std::move(diag)};
}

// --- reports ----------------------------------------------------------------------------

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::undecided: return "undecided";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.outcome == Outcome::pass; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Outcome outcome_of(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

Outcome outcome_of(const EquivalenceResult& r) {
  switch (r.outcome) {
    case Equivalence::equivalent: return Outcome::pass;
    case Equivalence::inequivalent: return Outcome::fail;
    case Equivalence::undecided: return Outcome::undecided;
  }
  return Outcome::fail;
}

std::string count_str(std::size_t n) { return std::to_string(n); }

std::string group_summary(const FiniteGroup& g) {
  return "|G|=" + std::to_string(g.order()) + " on " + std::to_string(g.degree()) + " points";
}

std::string action_summary(const GroupAction& a) {
  return a.description() + ", |F|=" + std::to_string(a.set_size()) + ", " +
         group_summary(a.group());
}

// One-object groupoid on a subgroup given by sorted element indices.
GroupoidPtr delooping_of_subgroup(const FiniteGroup& G, const std::vector<ElementIndex>& elems,
                                  const Limits& limits) {
  std::vector<MorphismId> local(G.order(), static_cast<MorphismId>(-1));
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<MorphismId>(i);
  std::vector<MorphismId> inverses(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) inverses[i] = local[G.inverse(elems[i])];
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      1, std::vector<Arrow>(elems.size(), Arrow{0, 0}), {local[FiniteGroup::identity()]},
      std::move(inverses),
      [&](MorphismId a, MorphismId b) { return local[G.multiply(elems[a], elems[b])]; }, limits));
}

std::string fixpoint_pairs_summary(const std::vector<std::pair<Point, ElementIndex>>& v) {
  return std::to_string(v.size()) + " pairs (x, g) with x.g = x";
}

std::vector<std::pair<Point, ElementIndex>> brute_force_incidence(const GroupAction& action) {
  std::vector<std::pair<Point, ElementIndex>> out;
  for (Point x = 0; x < action.set_size(); ++x)
    for (ElementIndex g = 0; g < action.group().order(); ++g)
      if (action.act(x, g) == x) out.emplace_back(x, g);
  return out;
}

}  // namespace

CheckResult lambda_pi0_check(const GroupoidPtr& x, const Limits& limits) {
  const Inertia in = inertia(x, limits);
  const Rational lhs = cardinality(*in.groupoid);
  const std::size_t pi0 = components(*x).second;
  return {"fundamental_identity",
          std::to_string(x->object_count()) + " objects, " + std::to_string(x->morphism_count()) +
              " morphisms",
          lhs.str(), count_str(pi0), outcome_of(lhs == Rational(static_cast<std::int64_t>(pi0))),
          "cardinality(inertia) vs component count"};
}

CheckResult class_equation_check(const FiniteGroup& group, const Limits& limits) {
  Rational sum;
  std::string terms;
  for (const auto& cc : conjugacy_classes(group)) {
    sum += Rational(1, static_cast<std::int64_t>(cc.centralizer_order));
    if (!terms.empty()) terms += " + ";
    terms += "1/" + std::to_string(cc.centralizer_order);
  }
  // The inertia of BG has |G|^2 morphisms and |G|^3 composable pairs; past
  // the caps only the class sum is checked.
  const std::size_t n = group.order();
  if (n * n > limits.max_morphisms || n * n * n > limits.max_compositions)
    return {"class_equation", group_summary(group), sum.str(), "1", outcome_of(sum == Rational(1)),
            terms + "; inertia(BG) cross-check skipped (size caps)"};
  const Rational lambda_card = cardinality(*inertia(delooping(group, limits), limits).groupoid);
  const bool ok = sum == Rational(1) && lambda_card == Rational(1);
  return {"class_equation", group_summary(group), sum.str(), "1", outcome_of(ok),
          terms + "; cardinality(inertia(BG)) = " + lambda_card.str()};
}

CheckResult fiberwise_cardinality_check(const GroupoidFunctor& f, const Limits& limits) {
  const FiniteGroupoid& B = f.target();
  const auto [comp, count] = components(B);
  std::vector<bool> done(count, false);
  Rational sum;
  for (ObjectId b = 0; b < B.object_count(); ++b) {
    if (done[comp[b]]) continue;
    done[comp[b]] = true;
    const HomotopyPullback fiber = homotopy_fiber(f, b, limits);
    sum += cardinality(*fiber.groupoid) /
           Rational(static_cast<std::int64_t>(B.automorphisms(b).size()));
  }
  const Rational total = cardinality(f.source());
  return {"fiberwise_cardinality",
          std::to_string(f.source().object_count()) + " -> " + std::to_string(B.object_count()) +
              " objects",
          total.str(), sum.str(), outcome_of(total == sum),
          "cardinality(E) vs sum over base components of cardinality(fiber) / |Aut|"};
}

CheckResult inertia_of_delooping_check(const FiniteGroup& group, const Limits& limits) {
  const Inertia lambda = inertia(delooping(group, limits), limits);
  const auto classes = conjugacy_classes(group);
  GroupoidPtr sum = discrete(0);
  for (const auto& cc : classes)
    sum = disjoint_sum(*sum, *delooping_of_subgroup(group, centralizer(group, cc.representative), limits),
                       limits);
  const EquivalenceResult eq = groupoid_equivalent(*lambda.groupoid, *sum, limits);
  const std::size_t comps = components(*lambda.groupoid).second;
  CheckResult r{"inertia_of_delooping", group_summary(group),
                std::to_string(comps) + " components", std::to_string(classes.size()) + " classes",
                outcome_of(eq), eq.detail};
  if (comps != classes.size()) r.outcome = Outcome::fail;
  return r;
}

CheckResult group_laws_check(const FiniteGroup& group, std::uint64_t seed) {
  const std::size_t n = group.order();
  bool ok = true;
  std::string how;
  auto check = [&](ElementIndex a, ElementIndex b, ElementIndex c) {
    return group.multiply(group.multiply(a, b), c) == group.multiply(a, group.multiply(b, c));
  };
  if (n <= 64) {
    how = "exhaustive associativity";
    for (ElementIndex a = 0; a < n && ok; ++a)
      for (ElementIndex b = 0; b < n && ok; ++b)
        for (ElementIndex c = 0; c < n && ok; ++c) ok = check(a, b, c);
  } else {
    constexpr int kSamples = 20'000;
    how = std::to_string(kSamples) + " random triples, seed " + std::to_string(seed);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(n - 1));
    for (int i = 0; i < kSamples && ok; ++i) ok = check(pick(rng), pick(rng), pick(rng));
  }
  for (ElementIndex a = 0; a < n && ok; ++a)
    ok = group.multiply(a, group.inverse(a)) == FiniteGroup::identity() &&
         group.multiply(FiniteGroup::identity(), a) == a;
  return {"group_laws", group_summary(group), ok ? "holds" : "violated", "holds", outcome_of(ok),
          how};
}

CheckResult incidence_discreteness_check(const GroupAction& action, const Limits& limits) {
  const IncidenceCorrespondence inc = incidence_groupoid(action, limits);
  const auto expected = brute_force_incidence(action);
  const bool labels_ok = inc.labels == expected;
  bool model_ok = inc.discrete_model->morphism_count() == inc.discrete_model->object_count();
  const bool ok = inc.discrete && labels_ok && model_ok;
  std::string detail = "raw pullback: " + std::to_string(inc.pullback.groupoid->object_count()) +
                       " objects, " + std::to_string(inc.pullback.groupoid->morphism_count()) +
                       " morphisms";
  if (!inc.discrete) detail += "; a component has nontrivial automorphisms";
  if (!labels_ok) detail += "; object set differs from {(x,g) : x.g = x}";
  return {"incidence_discreteness", action_summary(action), fixpoint_pairs_summary(inc.labels),
          fixpoint_pairs_summary(expected), outcome_of(ok), detail};
}

CheckResult shear_check(const GroupAction& action, const Limits& limits) {
  const ShearConstruction s = shear_construction(action, limits);
  const std::size_t n = action.group().order();
  const std::size_t points = action.set_size();
  const FiniteGroupoid& sq = *s.fiber_square.groupoid;
  std::string detail;
  bool ok = true;
  auto fail = [&](const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  };

  if (sq.object_count() != points * n) fail("wrong object count");
  if (sq.morphism_count() != sq.object_count()) fail("F x_E F is not discrete");
  std::set<std::pair<Point, ElementIndex>> distinct(s.labels.begin(), s.labels.end());
  if (distinct.size() != s.labels.size()) fail("labels (x, g) are not distinct");
  for (ObjectId o = 0; o < sq.object_count(); ++o) {
    const auto [x, g] = s.labels[o];
    if (s.fiber_square.first.on_object(o) != x || s.fiber_square.second.on_object(o) != action.act(x, g)) {
      fail("projections are not the shear map (x, g) -> (x, x.g)");
      break;
    }
  }

  std::vector<std::pair<Point, ElementIndex>> diag_labels;
  for (const auto& obj : s.diagonal_pullback.objects) diag_labels.push_back(s.labels[obj.right]);
  std::sort(diag_labels.begin(), diag_labels.end());
  if (s.diagonal_pullback.groupoid->morphism_count() != s.diagonal_pullback.groupoid->object_count())
    fail("diagonal pullback is not discrete");
  if (diag_labels != brute_force_incidence(action))
    fail("diagonal pullback does not reproduce {(x,g) : x.g = x}");

  const EquivalenceResult fib = groupoid_equivalent(*s.fiber.groupoid, *s.fiber_model, default_limits());
  if (!fib) fail("homotopy fiber is not equivalent to the discrete point set");

  return {"shear", action_summary(action), std::to_string(sq.object_count()) + " objects",
          std::to_string(points * n) + " = |F||G|", outcome_of(ok), detail};
}

// --- full run ------------------------------------------------------------------------------

VerificationReport run_full_verification(const GroupAction& action,
                                         const VerificationOptions& options) {
  const Limits& limits = options.limits;
  const FiniteGroup& G = action.group();
  VerificationReport report;
  report.subject = action_summary(action);
  report.seed = options.seed;

  const std::string inputs = action_summary(action);
  bool stop = false;
  auto run = [&](const std::function<CheckResult()>& body) {
    if (stop) return;
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = body();
    } catch (const std::logic_error& e) {
      r.outcome = Outcome::fail;
      r.detail = e.what();
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (r.inputs.empty()) r.inputs = inputs;
    if (options.fail_fast && r.outcome != Outcome::pass) stop = true;
    report.checks.push_back(std::move(r));
  };

  const ActionGroupoid E = action_groupoid(action, limits);
  const std::size_t orbit_n = orbit_count(action);
  const Rational orbit_q(static_cast<std::int64_t>(orbit_n));
  Rational burnside;

  run([&] {
    const bool ok = satisfies_action_laws(action);
    return CheckResult{"action_laws", inputs, ok ? "holds" : "violated", "holds", outcome_of(ok),
                       "x.e = x and (x.g).h = x.(gh) for all x, g, h"};
  });
  run([&] { return group_laws_check(G, options.seed); });
  run([&] {
    burnside = burnside_rhs(action);
    return CheckResult{"burnside", inputs, count_str(orbit_n), burnside.str(),
                       outcome_of(orbit_q == burnside), "orbit count vs (1/|G|) sum |F^g|"};
  });
  run([&] {
    const Rational cc = burnside_cc_rhs(action);
    return CheckResult{"burnside_conjugacy_classes", inputs, cc.str(), burnside_rhs(action).str(),
                       outcome_of(cc == burnside_rhs(action)),
                       "sum over classes of |F^g| / |C_G(g)| vs (1/|G|) sum |F^g|"};
  });
  run([&] {
    const Rational card = cardinality(*E.groupoid);
    const Rational expected(static_cast<std::int64_t>(action.set_size()),
                            static_cast<std::int64_t>(G.order()));
    return CheckResult{"weak_quotient_cardinality", inputs, card.str(), expected.str(),
                       outcome_of(card == expected), "cardinality(F//G) vs |F|/|G|"};
  });

  std::optional<Inertia> lambda_e;
  run([&] {
    lambda_e.emplace(inertia(E.groupoid, limits));
    const Rational card = cardinality(*lambda_e->groupoid);
    return CheckResult{"inertia_counts_orbits", inputs, card.str(), count_str(orbit_n),
                       outcome_of(card == orbit_q), "cardinality(inertia(F//G)) vs orbit count"};
  });
  run([&] { return lambda_pi0_check(E.groupoid, limits); });
  run([&] {
    CheckResult r = fiberwise_cardinality_check(E.to_base, limits);
    r.name = "fiberwise_weak_quotient";
    return r;
  });
  run([&] {
    if (!lambda_e) lambda_e.emplace(inertia(E.groupoid, limits));
    CheckResult r = fiberwise_cardinality_check(lambda_e->projection, limits);
    r.name = "fiberwise_inertia";
    return r;
  });
  run([&] {
    // Fibers of Lambda(E) -> Lambda(BG) over each class are the fixpoint sets.
    const InertiaMap lm = inertia_map(E.to_base, limits);
    std::string left, right;
    bool ok = true;
    for (const auto& cc : conjugacy_classes(G)) {
      const ObjectId loop = lm.target.object_of(0, cc.representative);
      const HomotopyPullback fiber = homotopy_fiber(lm.map, loop, limits);
      const std::size_t fix = fixpoint_set(action, cc.representative).points.size();
      const Rational card = cardinality(*fiber.groupoid);
      ok = ok && card == Rational(static_cast<std::int64_t>(fix)) &&
           groupoid_equivalent(*fiber.groupoid, *discrete(fix), limits);
      if (!left.empty()) {
        left += ",";
        right += ",";
      }
      left += card.str();
      right += count_str(fix);
    }
    const CheckResult fw = fiberwise_cardinality_check(lm.map, limits);
    ok = ok && fw.outcome == Outcome::pass;
    return CheckResult{"fixpoint_fibers", inputs, left, right, outcome_of(ok),
                       "fiber of inertia map over each class vs fixpoint set; sum " + fw.right};
  });
  run([&] {
    if (!lambda_e) lambda_e.emplace(inertia(E.groupoid, limits));
    const GroupoidPtr rhs = formula1_rhs(action, limits);
    const EquivalenceResult eq = groupoid_equivalent(*lambda_e->groupoid, *rhs, limits);
    return CheckResult{"loops_and_fixpoints_equivalence", inputs,
                       "inertia: " + cardinality(*lambda_e->groupoid).str(),
                       "loops and fixpoints over BG: " + cardinality(*rhs).str(), outcome_of(eq),
                       eq.detail};
  });

  std::optional<IncidenceCorrespondence> inc;
  run([&] {
    inc.emplace(incidence_groupoid(action, limits));
    const auto expected = brute_force_incidence(action);
    const bool ok = inc->discrete && inc->labels == expected;
    return CheckResult{"incidence_discreteness", inputs, fixpoint_pairs_summary(inc->labels),
                       fixpoint_pairs_summary(expected), outcome_of(ok),
                       inc->discrete ? "" : "a component has nontrivial automorphisms"};
  });
  run([&] {
    if (!inc) inc.emplace(incidence_groupoid(action, limits));
    bool ok = true;
    std::size_t total = 0, expected = 0;
    for (ElementIndex g = 0; g < G.order(); ++g) {
      const FixpointGroupoid fg = fixpoint_groupoid(*inc, g, limits);
      const auto fix = fixpoint_set(action, g).points;
      ok = ok && fg.discrete && fg.points == fix;
      total += fg.points.size();
      expected += fix.size();
    }
    return CheckResult{"fixpoint_groupoids", inputs, count_str(total) + " fixpoints",
                       count_str(expected) + " fixpoints", outcome_of(ok),
                       "fiber of the incidence correspondence over each loop g vs F^g"};
  });
  run([&] { return shear_check(action, limits); });
  run([&] { return class_equation_check(G, limits); });
  run([&] { return inertia_of_delooping_check(G, limits); });
  return report;
}

}  // namespace burnside
