#include "burnside/io.hpp"

#include <map>

namespace burnside {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::vector<Point> as_points(const json& j, const char* what) {
  try {
    return j.get<std::vector<Point>>();
  } catch (const json::exception&) {
    throw ValidationError(std::string(what) + ": expected an array of non-negative integers");
  }
}

}  // namespace

ParsedGroup parse_group_spec(const json& spec, const Limits& limits) {
  const auto type = get_field<std::string>(spec, "type");
  if (type == "permutation") {
    const auto degree = get_field<std::size_t>(spec, "degree");
    std::vector<Permutation> gens;
    if (spec.contains("generators")) {
      if (!spec["generators"].is_array()) throw ValidationError("\"generators\" must be an array");
      for (const auto& g : spec["generators"]) gens.emplace_back(as_points(g, "generator"));
    }
    const std::size_t k = gens.size();
    auto group = std::make_shared<const FiniteGroup>(group_from_generators(degree, std::move(gens), limits));
    return {group, "permutation group of degree " + std::to_string(degree) + " with " +
                       std::to_string(k) + " generators"};
  }
  if (type == "named") {
    const auto name = get_field<std::string>(spec, "name");
    const auto which = parse_named_group(name);
    if (!which) throw ValidationError("unknown named group \"" + name + "\"");
    std::size_t n = 8;
    if (*which != NamedGroup::quaternion8) n = get_field<std::size_t>(spec, "n");
    auto group = std::make_shared<const FiniteGroup>(named_group(*which, n, limits));
    return {group, *which == NamedGroup::quaternion8 ? name : name + "(" + std::to_string(n) + ")"};
  }
  throw ValidationError("unknown group spec type \"" + type + "\"");
}

ParsedAction parse_action_spec(const json& spec, const Limits& limits) {
  if (!spec.is_object() || !spec.contains("group") || !spec.contains("action"))
    throw ValidationError("action spec needs \"group\" and \"action\"");
  ParsedGroup g = parse_group_spec(spec["group"], limits);
  const json& a = spec["action"];
  const auto type = get_field<std::string>(a, "type");
  auto named = [&](GroupAction act) {
    std::string name = g.name + ", " + act.description();
    return ParsedAction{std::move(act), std::move(name)};
  };
  if (type == "natural") return named(GroupAction::natural(g.group, limits));
  if (type == "translation") return named(GroupAction::translation(g.group, limits));
  if (type == "trivial")
    return named(GroupAction::trivial(g.group, get_field<std::size_t>(a, "points"), limits));
  if (type == "colorings")
    return named(GroupAction::colorings(g.group, get_field<std::size_t>(a, "colors"), limits));
  if (type == "table") {
    const auto points = get_field<std::size_t>(a, "points");
    if (!a.contains("map") || !a["map"].is_array()) throw ValidationError("table action needs \"map\"");
    std::vector<std::vector<Point>> rows;
    for (const auto& row : a["map"]) rows.push_back(as_points(row, "action table row"));
    return named(GroupAction::from_table(g.group, points, rows, limits));
  }
  throw ValidationError("unknown action type \"" + type + "\"");
}

json rational_to_json(const Rational& r) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Rational rational_from_json(const json& j) {
  try {
    return Rational::from_strings(get_field<std::string>(j, "num"), get_field<std::string>(j, "den"));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  } catch (const std::domain_error& e) {
    throw ValidationError(e.what());
  }
}

json groupoid_to_json(const FiniteGroupoid& g) {
  json morphisms = json::array();
  for (MorphismId m = 0; m < g.morphism_count(); ++m)
    morphisms.push_back({{"id", m}, {"src", g.src(m)}, {"tgt", g.tgt(m)}});
  json compose = json::array();
  for (MorphismId m = 0; m < g.morphism_count(); ++m)
    for (MorphismId n : g.out(g.tgt(m))) compose.push_back({m, n, g.compose(m, n)});
  json identities = json::array();
  for (ObjectId x = 0; x < g.object_count(); ++x) identities.push_back(g.identity(x));
  return json{{"objects", g.object_count()},
              {"morphisms", std::move(morphisms)},
              {"compose", std::move(compose)},
              {"identities", std::move(identities)}};
}

GroupoidPtr groupoid_from_json(const json& j, const Limits& limits) {
  const auto n_obj = get_field<std::size_t>(j, "objects");
  const auto mors = get_field<json>(j, "morphisms");
  if (!mors.is_array()) throw ValidationError("\"morphisms\" must be an array");
  check_morphism_cap(mors.size(), limits);
  const std::size_t n_mor = mors.size();
  std::vector<Arrow> arrows(n_mor);
  std::vector<bool> seen(n_mor, false);
  for (const auto& m : mors) {
    const auto id = get_field<std::size_t>(m, "id");
    if (id >= n_mor || seen[id]) throw ValidationError("morphism ids must be 0..N-1, each once");
    seen[id] = true;
    arrows[id] = {get_field<ObjectId>(m, "src"), get_field<ObjectId>(m, "tgt")};
    if (arrows[id].src >= n_obj || arrows[id].tgt >= n_obj)
      throw ValidationError("morphism endpoint out of range");
  }
  const auto ids = get_field<std::vector<MorphismId>>(j, "identities");
  if (ids.size() != n_obj) throw ValidationError("one identity per object required");

  std::map<std::pair<MorphismId, MorphismId>, MorphismId> table;
  for (const auto& row : get_field<json>(j, "compose")) {
    std::vector<MorphismId> t;
    try {
      t = row.get<std::vector<MorphismId>>();
    } catch (const json::exception&) {
      throw ValidationError("compose rows must be [first, second, result]");
    }
    if (t.size() != 3 || t[0] >= n_mor || t[1] >= n_mor)
      throw ValidationError("compose rows must be [first, second, result]");
    if (!table.emplace(std::make_pair(t[0], t[1]), t[2]).second)
      throw ValidationError("compose lists a pair twice");
  }
  auto lookup = [&](MorphismId m, MorphismId n) {
    auto it = table.find({m, n});
    if (it == table.end())
      throw ValidationError("compose is missing the pair (" + std::to_string(m) + ", " +
                            std::to_string(n) + ")");
    return it->second;
  };
  for (ObjectId x = 0; x < n_obj; ++x)
    if (ids[x] >= n_mor) throw ValidationError("identity id out of range");

  std::vector<MorphismId> inverses(n_mor);
  for (MorphismId m = 0; m < n_mor; ++m) {
    bool found = false;
    for (MorphismId k = 0; k < n_mor && !found; ++k)
      if (arrows[k].src == arrows[m].tgt && arrows[k].tgt == arrows[m].src &&
          lookup(m, k) == ids[arrows[m].src]) {
        inverses[m] = k;
        found = true;
      }
    if (!found) throw ValidationError("morphism " + std::to_string(m) + " has no inverse");
  }
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      n_obj, std::move(arrows), ids, std::move(inverses), lookup, limits, Validation::full));
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"inputs", c.inputs},
                      {"left", c.left},
                      {"right", c.right},
                      {"outcome", std::string(to_string(c.outcome))},
                      {"detail", c.detail}});
  json out{{"subject", report.subject},
           {"all_passed", report.all_passed()},
           {"checks", std::move(checks)}};
  out["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  return out;
}

}  // namespace burnside
