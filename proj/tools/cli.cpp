#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "burnside/io.hpp"
#include "burnside/verify.hpp"

namespace burnside::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string spec;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_elements;
  std::optional<std::size_t> max_morphisms;
};

enum class SpecKind { group, action, groupoid };

struct Input {
  SpecKind kind;
  json spec;
};

Input load(const Options& o, std::istream& in) {
  std::string text;
  if (!o.spec.empty()) {
    text = o.spec;
  } else if (o.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw ValidationError("cannot open " + o.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("spec must be a JSON object");
  if (j.contains("group")) return {SpecKind::action, j};
  if (j.contains("objects")) return {SpecKind::groupoid, j};
  if (j.contains("type")) return {SpecKind::group, j};
  throw ValidationError("unrecognized spec: expected a group, action or groupoid");
}

// A bare group spec stands for its natural action.
ParsedAction as_action(const Input& input, const Limits& limits) {
  switch (input.kind) {
    case SpecKind::action:
      return parse_action_spec(input.spec, limits);
    case SpecKind::group: {
      ParsedGroup g = parse_group_spec(input.spec, limits);
      auto act = GroupAction::natural(g.group, limits);
      return {std::move(act), g.name + ", " + "natural"};
    }
    case SpecKind::groupoid:
      break;
  }
  throw ValidationError("this command needs a group or action spec, not a groupoid");
}

ParsedGroup as_group(const Input& input, const Limits& limits) {
  switch (input.kind) {
    case SpecKind::group:
      return parse_group_spec(input.spec, limits);
    case SpecKind::action:
      return parse_group_spec(input.spec.at("group"), limits);
    case SpecKind::groupoid:
      break;
  }
  throw ValidationError("this command needs a group or action spec, not a groupoid");
}

struct Subject {
  GroupoidPtr groupoid;
  std::string name;
};

Subject as_groupoid(const Input& input, const Limits& limits) {
  switch (input.kind) {
    case SpecKind::groupoid:
      return {groupoid_from_json(input.spec, limits), "groupoid"};
    case SpecKind::group: {
      ParsedGroup g = parse_group_spec(input.spec, limits);
      return {delooping(*g.group, limits), "delooping of " + g.name};
    }
    case SpecKind::action: {
      ParsedAction a = parse_action_spec(input.spec, limits);
      return {action_groupoid(a.action, limits).groupoid, "weak quotient of " + a.name};
    }
  }
  return {};
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

int cmd_orbits(const Input& input, const Options& o, const Limits& limits, std::ostream& out) {
  const ParsedAction a = as_action(input, limits);
  const Orbits orb = orbits(a.action);
  const Rational lhs(static_cast<std::int64_t>(orb.count));
  const Rational rhs = burnside_rhs(a.action);
  const Rational cc = burnside_cc_rhs(a.action);
  const bool agree = lhs == rhs && rhs == cc;
  if (o.format == "json") {
    out << json{{"subject", a.name},
                {"orbits", orb.count},
                {"representatives", orb.representatives},
                {"burnside", rhs.str()},
                {"burnside_classes", cc.str()},
                {"consistent", agree}}
               .dump(2)
        << '\n';
  } else {
    out << a.name << '\n';
    out << "orbits: " << orb.count << '\n';
    std::vector<std::string> reps;
    for (Point p : orb.representatives) reps.push_back(std::to_string(p));
    out << "representatives: " << join(reps, " ") << '\n';
    out << "sum over elements: " << rhs << '\n';
    out << "sum over classes:  " << cc << '\n';
  }
  return agree ? ok : verification_failed;
}

int cmd_burnside(const Input& input, const Options& o, const Limits& limits, std::ostream& out) {
  const ParsedAction a = as_action(input, limits);
  const GroupAction& A = a.action;
  const FiniteGroup& G = A.group();
  std::vector<std::string> terms;
  std::size_t total = 0;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    const std::size_t f = fixpoint_set(A, g).points.size();
    total += f;
    terms.push_back(std::to_string(f));
  }
  const Rational rhs = burnside_rhs(A);
  const Rational cc = burnside_cc_rhs(A);
  const std::size_t count = orbit_count(A);
  const bool agree = rhs == Rational(static_cast<std::int64_t>(count)) && cc == rhs;
  if (o.format == "json") {
    out << json{{"subject", a.name},
                {"group_order", G.order()},
                {"fixed_points_total", total},
                {"burnside", rhs.str()},
                {"burnside_classes", cc.str()},
                {"orbits", count},
                {"consistent", agree}}
               .dump(2)
        << '\n';
  } else {
    out << a.name << '\n';
    out << "(" << join(terms, " + ") << ") / " << G.order() << " = " << rhs << '\n';
    out << "sum over classes: " << cc << '\n';
    out << "orbit count: " << count << (agree ? " (agrees)" : " (MISMATCH)") << '\n';
  }
  return agree ? ok : verification_failed;
}

int cmd_classes(const Input& input, const Options& o, const Limits& limits, std::ostream& out) {
  const ParsedGroup g = as_group(input, limits);
  const FiniteGroup& G = *g.group;
  const auto classes = conjugacy_classes(G);
  const CheckResult check = class_equation_check(G, limits);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& cc : classes)
      rows.push_back({{"representative", G.element(cc.representative).cycle_string()},
                      {"size", cc.members.size()},
                      {"centralizer_order", cc.centralizer_order}});
    out << json{{"subject", g.name},
                {"order", G.order()},
                {"classes", std::move(rows)},
                {"class_equation", check.left},
                {"outcome", std::string(to_string(check.outcome))}}
               .dump(2)
        << '\n';
  } else {
    out << g.name << ", order " << G.order() << ", " << classes.size() << " classes\n";
    for (const auto& cc : classes)
      out << "  size " << cc.members.size() << "  centralizer " << cc.centralizer_order << "  "
          << G.element(cc.representative).cycle_string() << '\n';
    out << "class equation: 1 = " << check.detail << "  [" << to_string(check.outcome) << "]\n";
  }
  return check.outcome == Outcome::pass ? ok : verification_failed;
}

int cmd_inertia(const Input& input, const Options& o, const Limits& limits, std::ostream& out) {
  const Subject s = as_groupoid(input, limits);
  const Inertia in = inertia(s.groupoid, limits);
  const Skeleton sk = skeleton(*in.groupoid, limits);
  const Rational card = cardinality(*in.groupoid);
  const std::size_t pi0 = components(*s.groupoid).second;
  const bool agree = card == Rational(static_cast<std::int64_t>(pi0));
  std::vector<std::size_t> orders;
  for (const auto& c : sk.components) orders.push_back(c.automorphism_order);
  if (o.format == "json") {
    out << json{{"subject", s.name},
                {"inertia_objects", in.groupoid->object_count()},
                {"inertia_morphisms", in.groupoid->morphism_count()},
                {"components", sk.components.size()},
                {"automorphism_orders", orders},
                {"cardinality", card.str()},
                {"pi0", pi0},
                {"consistent", agree}}
               .dump(2)
        << '\n';
  } else {
    out << "inertia of the " << s.name << '\n';
    out << "objects " << in.groupoid->object_count() << ", morphisms "
        << in.groupoid->morphism_count() << ", components " << sk.components.size() << '\n';
    std::vector<std::string> os;
    for (auto n : orders) os.push_back(std::to_string(n));
    out << "automorphism orders: " << join(os, " ") << '\n';
    out << "cardinality: " << card << '\n';
    out << "components of the original: " << pi0 << (agree ? " (agrees)" : " (MISMATCH)") << '\n';
  }
  return agree ? ok : verification_failed;
}

int cmd_card(const Input& input, const Options& o, const Limits& limits, std::ostream& out) {
  const Subject s = as_groupoid(input, limits);
  const auto [comp, count] = components(*s.groupoid);
  const Rational card = cardinality(*s.groupoid);
  if (o.format == "json") {
    out << json{{"subject", s.name},
                {"objects", s.groupoid->object_count()},
                {"morphisms", s.groupoid->morphism_count()},
                {"components", count},
                {"cardinality", card.str()}}
               .dump(2)
        << '\n';
  } else {
    out << s.name << '\n';
    out << "objects " << s.groupoid->object_count() << ", morphisms "
        << s.groupoid->morphism_count() << ", components " << count << '\n';
    out << "cardinality: " << card << '\n';
  }
  return ok;
}

void print_report(const VerificationReport& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << report_to_json(r).dump(2) << '\n';
    return;
  }
  out << r.subject << '\n';
  for (const auto& c : r.checks) {
    out << "[" << to_string(c.outcome) << "] " << c.name << ": " << c.left << " vs " << c.right;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << (r.all_passed() ? "all checks passed" : "some checks did not pass") << '\n';
}

int cmd_verify(const Input& input, const Options& o, const Limits& limits, std::ostream& out) {
  VerificationReport report;
  if (input.kind == SpecKind::groupoid) {
    const GroupoidPtr x = groupoid_from_json(input.spec, limits);
    report.subject = "groupoid";
    report.seed = o.seed.value_or(0);
    report.checks.push_back(lambda_pi0_check(x, limits));
  } else {
    const ParsedAction a = as_action(input, limits);
    VerificationOptions vo;
    vo.limits = limits;
    vo.seed = o.seed.value_or(0);
    report = run_full_verification(a.action, vo);
    report.subject = a.name;
  }
  print_report(report, o, out);
  return report.all_passed() ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite group actions, groupoids and the homotopy Burnside identities"};
  app.name(args.empty() ? "burnside" : args.front());
  Options o;
  app.require_subcommand(1);
  app.fallthrough();

  auto* input = app.add_option("-i,--input", o.input, "spec file, or - for stdin");
  auto* spec = app.add_option("--spec", o.spec, "inline JSON spec");
  input->excludes(spec);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--max-elements", o.max_elements, "group order cap");
  app.add_option("--max-morphisms", o.max_morphisms, "groupoid morphism cap");

  const std::pair<const char*, const char*> commands[] = {
      {"orbits", "orbit count, representatives and both Burnside sums"},
      {"burnside", "fixed point counts per element"},
      {"classes", "conjugacy classes and the class equation"},
      {"inertia", "skeleton and cardinality of the inertia groupoid"},
      {"card", "homotopy cardinality"},
      {"verify", "run every identity check"},
  };
  for (const auto& [name, help] : commands)
    app.add_subcommand(name, help)->fallthrough()->final_callback([&o, n = std::string(name)] {
      o.command = n;
    });

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return invalid_input;
  }
  if (o.input.empty() && o.spec.empty()) {
    err << "one of --input or --spec is required\n";
    return invalid_input;
  }

  Limits limits;
  if (o.max_elements) limits.max_elements = *o.max_elements;
  if (o.max_morphisms) limits.max_morphisms = *o.max_morphisms;

  try {
    const Input spec_in = load(o, in);
    if (o.command == "orbits") return cmd_orbits(spec_in, o, limits, out);
    if (o.command == "burnside") return cmd_burnside(spec_in, o, limits, out);
    if (o.command == "classes") return cmd_classes(spec_in, o, limits, out);
    if (o.command == "inertia") return cmd_inertia(spec_in, o, limits, out);
    if (o.command == "card") return cmd_card(spec_in, o, limits, out);
    return cmd_verify(spec_in, o, limits, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
}

}  // namespace burnside::cli
