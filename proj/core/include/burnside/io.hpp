#pragma once

// JSON formats: group specs, action specs, groupoid dumps, rationals and
// verification reports.
//
//   group   {"type":"permutation","degree":N,"generators":[[...],...]}
//           {"type":"named","name":"dihedral","n":6}
//   action  {"group":<group>,"action":{"type":"natural"}
//                                   | {"type":"colorings","colors":k}
//                                   | {"type":"trivial","points":m}
//                                   | {"type":"table","points":m,"map":[[...],...]}
//                                   | {"type":"translation"}}
//   "table" lists one row per group element in canonical element order;
//   row e holds the image of every point under element e.

#include <string>

#include <nlohmann/json.hpp>

#include "burnside/action.hpp"
#include "burnside/groupoid.hpp"
#include "burnside/rational.hpp"
#include "burnside/verify.hpp"

namespace burnside {

struct ParsedGroup {
  GroupPtr group;
  std::string name;  // e.g. "dihedral(6)"
};

struct ParsedAction {
  GroupAction action;
  std::string name;  // e.g. "dihedral(6), colorings with 2 colors"
};

/// All parse functions throw ValidationError on malformed input.
ParsedGroup parse_group_spec(const nlohmann::json& spec, const Limits& limits = default_limits());
ParsedAction parse_action_spec(const nlohmann::json& spec, const Limits& limits = default_limits());

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"objects":N,"morphisms":[{"id":k,"src":i,"tgt":j},...],
///  "compose":[[k1,k2,k3],...],"identities":[...]}; compose lists every
/// composable pair (k1 then k2 is k3).
nlohmann::json groupoid_to_json(const FiniteGroupoid& g);
/// Fully validated, including associativity. Inverses are recovered from the
/// composition table.
GroupoidPtr groupoid_from_json(const nlohmann::json& j, const Limits& limits = default_limits());

/// Deterministic: contains no timings.
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace burnside
