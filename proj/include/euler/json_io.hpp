#pragma once

#include "json.hpp"

#include "euler/cycles.hpp"
#include "euler/families.hpp"
#include "euler/graceful.hpp"
#include "euler/search.hpp"

namespace euler {

// JSON shapes shared by the CLI, the file formats and the tests.

// {"residues":[...], "counts":{"0":n0,...}, "truncated":bool}
nlohmann::json profile_json(const CycleTypeProfile& profile);

// {"epsilon":[...], "kind":"T2", "name":"e02"}
nlohmann::json class_json(const ClassName& name);

// [{"case":"013","i":0,"j":1,"parity":"even","expected":1,"got":1,
//   "witness":{"n1":4,"n2":5,"l":2,"combined_length":5},"pass":true}, ...]
nlohmann::json rule_report_json(const RuleTableReport& report);

nlohmann::json theorem_report_json(const TheoremReport& report);

nlohmann::json evenness_report_json(const EvennessReport& report);

// {"labels":{"0":v0,...}, "q":q}
nlohmann::json labeling_json(const GracefulLabeling& labeling, int q);
GracefulLabeling labeling_from_json(const nlohmann::json& j, int order);

// {"rows":2t, "cols":s+1, "grid":[[...], ...]}
nlohmann::json layout_json(const GtsLayout& layout);

nlohmann::json graceful_report_json(const GracefulReport& report);

nlohmann::json membership_report_json(const MembershipReport& report);

}  // namespace euler
