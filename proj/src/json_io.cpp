#include "euler/json_io.hpp"

namespace euler {

using nlohmann::json;

json profile_json(const CycleTypeProfile& profile) {
  json counts = json::object();
  for (int r = 0; r < 4; ++r) counts[std::to_string(r)] = profile.counts[r];
  return json{{"residues", profile.residues()}, {"counts", counts}, {"truncated", profile.truncated}};
}

json class_json(const ClassName& name) {
  return json{{"epsilon", name.epsilon}, {"kind", name.kind_name()}, {"name", name.name()}};
}

json rule_report_json(const RuleTableReport& report) {
  json checks = json::array();
  for (const RuleCheck& c : report.checks) {
    checks.push_back(json{{"case", c.case_id},
                          {"i", c.i},
                          {"j", c.j},
                          {"parity", c.parity == PathParity::even ? "even" : "odd"},
                          {"expected", c.expected},
                          {"got", c.formula},
                          {"realized", c.realized},
                          {"witness",
                           {{"n1", c.witness.n1},
                            {"n2", c.witness.n2},
                            {"l", c.witness.l},
                            {"combined_length", c.witness.combined_length}}},
                          {"pass", c.pass}});
  }
  return json{{"rows", report.rows}, {"all_pass", report.all_pass}, {"checks", checks}};
}

json theorem_report_json(const TheoremReport& report) {
  json counterexamples = json::array();
  for (const Graph& g : report.counterexamples) counterexamples.push_back(serialize_graph(g));
  return json{{"theorem", report.theorem},
              {"orders", {report.n_min, report.n_max}},
              {"degrees", report.degrees},
              {"instances", report.instances},
              {"work", report.work},
              {"counterexamples", counterexamples},
              {"notes", report.notes},
              {"consistent", report.consistent()}};
}

json evenness_report_json(const EvennessReport& report) {
  return json{{"samples", report.samples},
              {"seed", report.seed},
              {"handshake_failures", report.handshake_failures},
              {"odd_parity_failures", report.odd_parity_failures},
              {"flow_max_order", report.flow_max_order},
              {"flow_graphs", report.flow_graphs},
              {"flow_pairs", report.flow_pairs},
              {"flow_odd_failures", report.flow_odd_failures},
              {"all_pass", report.all_pass()}};
}

json labeling_json(const GracefulLabeling& labeling, int q) {
  json labels = json::object();
  for (std::size_t v = 0; v < labeling.labels.size(); ++v)
    labels[std::to_string(v)] = labeling.labels[v];
  return json{{"labels", labels}, {"q", q}};
}

GracefulLabeling labeling_from_json(const json& j, int order) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_object())
    throw Error(errc::malformed_input, "labeling JSON needs a \"labels\" object");
  GracefulLabeling labeling;
  labeling.labels.assign(order, -1);
  for (auto& [key, value] : j["labels"].items()) {
    int node = -1;
    try {
      node = std::stoi(key);
    } catch (...) {
      throw Error(errc::malformed_input, "labeling key is not a node id: " + key);
    }
    if (node < 0 || node >= order)
      throw Error(errc::labeling_mismatch, "labeling names node " + key + " outside the graph");
    if (!value.is_number_integer())
      throw Error(errc::malformed_input, "label of node " + key + " is not an integer");
    labeling.labels[node] = value.get<int>();
  }
  for (int v = 0; v < order; ++v)
    if (labeling.labels[v] == -1 &&
        !j["labels"].contains(std::to_string(v)))
      throw Error(errc::labeling_mismatch, "labeling misses node " + std::to_string(v));
  return labeling;
}

json layout_json(const GtsLayout& layout) {
  return json{{"rows", 2 * layout.t}, {"cols", layout.s + 1}, {"grid", layout.grid}};
}

json graceful_report_json(const GracefulReport& report) {
  return json{{"valid", report.valid}, {"violations", report.violations}};
}

json membership_report_json(const MembershipReport& report) {
  return json{{"eulerian", report.eulerian},
              {"profile", profile_json(report.profile)},
              {"member", report.member}};
}

}  // namespace euler
