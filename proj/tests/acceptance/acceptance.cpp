// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance [seed]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "burnside/verify.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace burnside;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
};

struct Criterion {
  const char* name;
  double budget_s;
  std::function<Verdict()> run;
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Random actions plus the golden cases: every groupoid-level criterion runs
// on this list.
const std::vector<support::Case>& suite(std::uint64_t seed) {
  static const auto cases = support::action_suite(seed, 200);
  return cases;
}

const std::vector<support::Case>& big_colorings() {
  static const auto cases = support::big_coloring_cases();
  return cases;
}

std::vector<GroupPtr> seven_groups() {
  using support::named;
  return {named(NamedGroup::cyclic, 6),     named(NamedGroup::symmetric, 3),
          named(NamedGroup::dihedral, 4),   named(NamedGroup::dihedral, 6),
          named(NamedGroup::quaternion8, 8), named(NamedGroup::alternating, 4),
          named(NamedGroup::symmetric, 4)};
}

Verdict burnside_equality(std::uint64_t seed) {
  Verdict v;
  std::size_t n = 0;
  auto check = [&](const support::Case& c) {
    ++n;
    const auto expect = static_cast<std::int64_t>(oracle::orbit_count(c.reference));
    const Rational lhs(static_cast<std::int64_t>(orbit_count(c.action)));
    if (lhs != Rational(expect) || burnside_rhs(c.action) != lhs ||
        burnside_cc_rhs(c.action) != lhs) {
      v.ok = false;
      v.note += " mismatch on " + c.name + ";";
    }
  };
  for (const auto& c : suite(seed)) check(c);
  for (const auto& c : big_colorings()) check(c);
  v.note = std::to_string(n) + " actions" + v.note;
  return v;
}

Verdict weak_quotient(std::uint64_t seed) {
  Verdict v;
  std::size_t n = 0;
  auto check = [&](const support::Case& c) {
    ++n;
    const Rational expect(static_cast<std::int64_t>(c.action.set_size()),
                          static_cast<std::int64_t>(c.action.group().order()));
    if (cardinality(*action_groupoid(c.action).groupoid) != expect) {
      v.ok = false;
      v.note += " mismatch on " + c.name + ";";
    }
  };
  for (const auto& c : suite(seed)) check(c);
  for (const auto& c : big_colorings()) check(c);
  v.note = std::to_string(n) + " actions" + v.note;
  return v;
}

Verdict inertia_of_bg() {
  Verdict v;
  for (const auto& g : seven_groups()) {
    const auto r = inertia_of_delooping_check(*g);
    if (r.outcome != Outcome::pass) {
      v.ok = false;
      v.note += " " + r.inputs + ": " + r.detail + ";";
    }
  }
  v.note = "C6 S3 D4 D6 Q8 A4 S4" + v.note;
  return v;
}

Verdict fundamental_identity(std::uint64_t seed) {
  Verdict v;
  std::mt19937_64 rng(seed ^ 0x5eed);
  const int count = 120;
  for (int i = 0; i < count; ++i) {
    const auto r = lambda_pi0_check(support::random_groupoid(rng));
    if (r.outcome != Outcome::pass) {
      v.ok = false;
      v.note += " " + r.inputs + ": " + r.left + " vs " + r.right + ";";
    }
  }
  v.note = std::to_string(count) + " groupoids" + v.note;
  return v;
}

Verdict loops_and_fixpoints(std::uint64_t seed) {
  Verdict v;
  const std::size_t golden = support::golden_cases().size();
  std::size_t undecided = 0, golden_undecided = 0, i = 0;
  for (const auto& c : suite(seed)) {
    const auto eq = groupoid_equivalent(*inertia(action_groupoid(c.action).groupoid).groupoid,
                                        *formula1_rhs(c.action));
    if (eq.outcome == Equivalence::inequivalent) {
      v.ok = false;
      v.note += " inequivalent on " + c.name + ";";
    } else if (eq.outcome == Equivalence::undecided) {
      ++undecided;
      if (i < golden) ++golden_undecided;
    }
    ++i;
  }
  if (golden_undecided) v.ok = false;
  v.note = std::to_string(i) + " actions, " + std::to_string(undecided) + " undecided (" +
           std::to_string(golden_undecided) + " golden)" + v.note;
  return v;
}

Verdict incidence(std::uint64_t seed) {
  Verdict v;
  std::size_t n = 0;
  for (const auto& c : suite(seed)) {
    ++n;
    const auto inc = incidence_groupoid(c.action);
    std::vector<std::pair<Point, ElementIndex>> expected;
    const auto& G = c.action.group();
    for (Point x = 0; x < c.action.set_size(); ++x)
      for (ElementIndex g = 0; g < G.order(); ++g)
        if (c.reference.image[g][x] == static_cast<int>(x))
          expected.push_back({x, g});
    const auto& model = *inc.discrete_model;
    bool only_identities = model.morphism_count() == model.object_count();
    for (MorphismId m = 0; m < model.morphism_count(); ++m)
      only_identities = only_identities && model.is_identity(m);
    if (!inc.discrete || !only_identities || inc.labels != expected) {
      v.ok = false;
      v.note += " " + c.name + ";";
    }
  }
  v.note = std::to_string(n) + " actions" + v.note;
  return v;
}

Verdict shear(std::uint64_t seed) {
  Verdict v;
  std::size_t n = 0;
  for (const auto& c : suite(seed)) {
    ++n;
    const auto s = shear_construction(c.action);
    const auto& sq = s.fiber_square;
    bool ok = sq.groupoid->object_count() == c.action.set_size() * c.action.group().order();
    std::set<std::pair<Point, ElementIndex>> seen;
    for (ObjectId o = 0; ok && o < sq.groupoid->object_count(); ++o) {
      const auto [x, g] = s.labels[o];
      ok = sq.first.on_object(o) == x &&
           sq.second.on_object(o) == static_cast<ObjectId>(c.reference.image[g][x]) &&
           seen.insert({x, g}).second;
    }
    if (!ok) {
      v.ok = false;
      v.note += " " + c.name + ";";
    }
  }
  v.note = std::to_string(n) + " actions" + v.note;
  return v;
}

Verdict class_equation(std::uint64_t seed) {
  Verdict v;
  std::size_t n = 0;
  auto check = [&](const FiniteGroup& g) {
    ++n;
    const auto r = class_equation_check(g);
    if (r.outcome != Outcome::pass) {
      v.ok = false;
      v.note += " " + r.inputs + ";";
    }
  };
  for (const auto& g : seven_groups()) check(*g);
  std::mt19937_64 rng(seed ^ 0xc1a55);
  for (int i = 0; i < 60; ++i) {
    const int degree = 2 + static_cast<int>(rng() % 6);
    std::vector<Permutation> gens;
    for (auto& p : oracle::random_generators(rng, degree, 1 + static_cast<int>(rng() % 2)))
      gens.emplace_back(std::vector<Point>(p.begin(), p.end()));
    check(group_from_generators(degree, gens));
  }
  v.note = std::to_string(n) + " groups" + v.note;
  return v;
}

Verdict fiberwise(std::uint64_t seed) {
  Verdict v;
  std::size_t n = 0;
  auto check = [&](const GroupoidFunctor& f) {
    ++n;
    CheckResult r;
    try {
      r = fiberwise_cardinality_check(f);
    } catch (const CapExceeded& e) {
      r.inputs = std::to_string(f.source().morphism_count()) + " -> " +
                 std::to_string(f.target().morphism_count()) + " morphisms: " + e.what();
    }
    if (r.outcome != Outcome::pass) {
      v.ok = false;
      v.note += " " + r.inputs + ";";
    }
  };
  for (const auto& c : suite(seed)) {
    const auto e = action_groupoid(c.action);
    check(e.to_base);
    check(inertia_map(e.to_base).map);
  }
  for (const auto& f : support::functor_suite(seed ^ 0xf1b, 40)) check(f);
  v.note = std::to_string(n) + " functors" + v.note;
  return v;
}

Verdict golden_cli() {
  Verdict v;
  struct Golden {
    const char* spec;
    oracle::Perm rotation;
    std::vector<oracle::Perm> extra;
    std::size_t expected;
  };
  const std::vector<Golden> goldens{
      {R"({"group":{"type":"named","name":"dihedral","n":6},"action":{"type":"colorings","colors":2}})",
       {1, 2, 3, 4, 5, 0}, {{0, 5, 4, 3, 2, 1}}, 13},
      {R"({"group":{"type":"named","name":"cyclic","n":6},"action":{"type":"colorings","colors":2}})",
       {1, 2, 3, 4, 5, 0}, {}, 14},
      {R"({"group":{"type":"named","name":"cyclic","n":3},"action":{"type":"colorings","colors":2}})",
       {1, 2, 0}, {}, 4},
  };
  for (const auto& g : goldens) {
    const auto start = std::chrono::steady_clock::now();
    auto gens = g.extra;
    gens.push_back(g.rotation);
    const auto group = oracle::closure(static_cast<int>(g.rotation.size()), gens);
    const auto reference = oracle::orbit_count(oracle::colorings(group, 2));
    std::istringstream in;
    std::ostringstream out, err;
    const int code =
        cli::run({"burnside", "orbits", "--format", "json", "--spec", g.spec}, in, out, err);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t got = 0;
    if (code == 0) got = nlohmann::json::parse(out.str())["orbits"].get<std::size_t>();
    const bool ok = code == 0 && reference == g.expected && got == reference && secs < 1.0;
    v.ok = v.ok && ok;
    if (!v.note.empty()) v.note += ", ";
    v.note += std::to_string(got) + (ok ? "" : " (expected " + std::to_string(g.expected) + ")");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240611;
  const std::vector<Criterion> criteria{
      {"burnside_equality", 10, [&] { return burnside_equality(seed); }},
      {"weak_quotient_cardinality", 5, [&] { return weak_quotient(seed); }},
      {"inertia_of_delooping", 10, [] { return inertia_of_bg(); }},
      {"fundamental_identity", 10, [&] { return fundamental_identity(seed); }},
      {"loops_and_fixpoints_equivalence", 30, [&] { return loops_and_fixpoints(seed); }},
      {"incidence_discreteness", 30, [&] { return incidence(seed); }},
      {"shear_identification", 30, [&] { return shear(seed); }},
      {"class_equation", 10, [&] { return class_equation(seed); }},
      {"fiberwise_counting", 30, [&] { return fiberwise(seed); }},
      {"golden_cli_values", 3, [] { return golden_cli(); }},
  };
  // Build the shared suite up front so its cost is not charged to the first
  // criterion that touches it.
  suite(seed);
  big_colorings();

  bool all = true;
  std::cout << "acceptance, seed " << seed << '\n';
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      v.ok = false;
      v.note += "; over the " + fmt_seconds(c.budget_s) + " budget";
    }
    all = all && v.ok;
    std::cout << (v.ok ? "PASS " : "FAIL ") << c.name << "  " << fmt_seconds(secs) << "  "
              << v.note << '\n';
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
