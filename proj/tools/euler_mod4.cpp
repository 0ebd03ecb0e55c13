// euler-mod4: classify Euler graphs by their mod-4 cycle types, generate the
// library's graph families, label and verify graceful numberings, and sweep
// small orders for regular Euler graphs.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "euler/cycles.hpp"
#include "euler/families.hpp"
#include "euler/graceful.hpp"
#include "euler/graph.hpp"
#include "euler/json_io.hpp"
#include "euler/search.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

int exit_code_for(euler::errc code) {
  switch (code) {
    case euler::errc::scale_guard:
    case euler::errc::truncated_profile:
      return kExitScale;
    default:
      return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw euler::Error(euler::errc::malformed_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw euler::Error(euler::errc::malformed_input, "cannot write " + path);
  out << content;
}

// Every command funnels through here so that --json always yields exactly one
// document on stdout, including on errors.
int run_guarded(bool json_mode, const std::string& command, const json& inputs,
                const std::function<int(json&, std::ostream&)>& body) {
  json result;
  std::ostringstream text;
  int status = kExitOk;
  try {
    status = body(result, text);
  } catch (const euler::Error& e) {
    status = exit_code_for(e.code());
    if (json_mode) {
      json doc{{"command", command},
               {"inputs", inputs},
               {"error", {{"code", euler::errc_name(e.code())}, {"message", e.what()}}},
               {"status", status}};
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return status;
  }
  if (json_mode) {
    json doc{{"command", command}, {"inputs", inputs}, {"result", result}, {"status", status}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text.str();
  }
  return status;
}

std::string residue_set_text(const std::vector<int>& residues) {
  std::string s = "{";
  for (std::size_t i = 0; i < residues.size(); ++i)
    s += (i ? "," : "") + std::to_string(residues[i]);
  return s + "}";
}

struct ClassifyOpts {
  std::string file;
  std::int64_t cap = euler::kDefaultCycleCap;
  bool json_mode = false;
};

int cmd_classify(const ClassifyOpts& opt) {
  json inputs{{"file", opt.file}, {"cap", opt.cap}};
  return run_guarded(opt.json_mode, "classify", inputs, [&](json& result, std::ostream& out) {
    euler::Graph g = euler::parse_graph(read_file(opt.file));
    bool connected = euler::is_connected(g);
    bool eulerian = euler::is_eulerian(g);
    bool bipartite = euler::is_bipartite(g);
    std::vector<int> degrees = euler::degree_sequence(g);
    result = json{{"order", g.order()},     {"size", g.size()},       {"connected", connected},
                  {"eulerian", eulerian},   {"bipartite", bipartite}, {"degree_sequence", degrees},
                  {"profile", nullptr},     {"class", nullptr}};
    out << "order: " << g.order() << "\nsize: " << g.size() << '\n';
    out << "connected: " << (connected ? "yes" : "no") << '\n';
    out << "eulerian: " << (eulerian ? "yes" : "no") << '\n';
    out << "bipartite: " << (bipartite ? "yes" : "no") << '\n';
    out << "degrees:";
    for (int d : degrees) out << ' ' << d;
    out << '\n';
    if (!connected) {
      out << "profile: skipped (graph is disconnected)\n";
      return kExitOk;
    }
    euler::CycleTypeProfile profile = euler::cycle_type_profile(g, opt.cap);
    result["profile"] = euler::profile_json(profile);
    out << "profile: residues " << residue_set_text(profile.residues()) << " counts";
    for (int r = 0; r < 4; ++r) out << ' ' << r << ':' << profile.counts[r];
    out << (profile.truncated ? " (truncated)" : "") << '\n';
    if (profile.truncated) {
      out << "class: not exact, enumeration truncated at cap " << opt.cap << '\n';
      return kExitScale;
    }
    if (eulerian) {
      euler::ClassName cls{profile.residues()};
      result["class"] = euler::class_json(cls);
      out << "class: " << cls.name() << " (" << cls.kind_name() << ")\n";
    } else {
      out << "class: none (graph is not Eulerian)\n";
    }
    return kExitOk;
  });
}

struct GenerateOpts {
  std::string family;
  int n = 0, t = 1, s = 1;
  std::vector<int> lengths;
  std::string in_file, out_file;
  int u = 0, v = 0, len = 1, count = 1;
  bool classify = false;
  bool json_mode = false;
};

int cmd_generate(const GenerateOpts& opt) {
  json inputs{{"family", opt.family}};
  return run_guarded(opt.json_mode, "generate", inputs, [&](json& result, std::ostream& out) {
    euler::Graph g;
    json layout_block;
    if (opt.family == "cycle") {
      g = euler::cycle_graph(opt.n);
    } else if (opt.family == "blocks") {
      g = euler::block_cycle_graph(opt.lengths);
    } else if (opt.family == "hypercube") {
      g = euler::hypercube(opt.n);
    } else if (opt.family == "gts") {
      euler::GtsLayout layout = euler::gts({opt.t, opt.s});
      layout_block = euler::layout_json(layout);
      g = layout.graph;
    } else {
      euler::Graph host = euler::parse_graph(read_file(opt.in_file));
      g = euler::attach_handle(host, {opt.u, opt.v, opt.len, opt.count});
    }
    std::string text = euler::serialize_graph(g);
    if (!opt.out_file.empty()) write_file(opt.out_file, text);
    result = json{{"order", g.order()}, {"size", g.size()}};
    if (!layout_block.is_null()) result["layout"] = layout_block;
    if (opt.out_file.empty())
      result["graph"] = text;
    else
      result["file"] = opt.out_file;
    out << "p=" << g.order() << " q=" << g.size() << '\n';
    if (opt.classify) {
      euler::CycleTypeProfile profile = euler::cycle_type_profile(g);
      result["profile"] = euler::profile_json(profile);
      out << "profile: residues " << residue_set_text(profile.residues()) << '\n';
    }
    if (opt.out_file.empty())
      out << text;
    else
      out << "wrote " << opt.out_file << '\n';
    return kExitOk;
  });
}

struct LabelOpts {
  int t = 1, s = 1;
  bool check = false;
  bool serial = false;
  std::string out_file;
  bool json_mode = false;
};

int cmd_label(const LabelOpts& opt) {
  json inputs{{"t", opt.t}, {"s", opt.s}, {"check", opt.check}};
  return run_guarded(opt.json_mode, "label", inputs, [&](json& result, std::ostream& out) {
    euler::GtsLayout layout = euler::gts({opt.t, opt.s});
    euler::GracefulLabeling labeling = euler::gts_labeling({opt.t, opt.s});
    json doc = euler::labeling_json(labeling, layout.graph.size());
    result = json{{"labeling", doc}, {"order", layout.graph.order()}, {"size", layout.graph.size()}};
    if (opt.serial) {
      euler::SerialOrder order = euler::gts_serial_order({opt.t, opt.s});
      result["serial_order"] = order.rank;
    }
    if (!opt.out_file.empty()) {
      write_file(opt.out_file, doc.dump(2) + "\n");
      out << "wrote " << opt.out_file << '\n';
    } else {
      out << doc.dump(2) << '\n';
    }
    if (opt.check) {
      euler::GracefulReport report = euler::verify_graceful(layout.graph, labeling);
      result["check"] = euler::graceful_report_json(report);
      out << "check: " << (report.valid ? "valid" : "INVALID") << '\n';
      for (const std::string& v : report.violations) out << "  " << v << '\n';
      if (!report.valid) return kExitNegative;
    }
    return kExitOk;
  });
}

struct VerifyOpts {
  std::string graph_file, labeling_file;
  bool json_mode = false;
};

int cmd_verify_graceful(const VerifyOpts& opt) {
  json inputs{{"graph", opt.graph_file}, {"labeling", opt.labeling_file}};
  return run_guarded(opt.json_mode, "verify-graceful", inputs, [&](json& result, std::ostream& out) {
    euler::Graph g = euler::parse_graph(read_file(opt.graph_file));
    json doc;
    try {
      doc = json::parse(read_file(opt.labeling_file));
    } catch (const json::exception& e) {
      throw euler::Error(euler::errc::malformed_input, std::string("labeling JSON: ") + e.what());
    }
    euler::GracefulLabeling labeling = euler::labeling_from_json(doc, g.order());
    euler::GracefulReport report = euler::verify_graceful(g, labeling);
    result = euler::graceful_report_json(report);
    out << (report.valid ? "valid" : "INVALID") << '\n';
    for (const std::string& v : report.violations) out << "  " << v << '\n';
    return report.valid ? kExitOk : kExitNegative;
  });
}

struct SearchGracefulOpts {
  std::string graph_file;
  std::int64_t budget = euler::kDefaultGracefulBudget;
  bool json_mode = false;
};

int cmd_search_graceful(const SearchGracefulOpts& opt) {
  json inputs{{"graph", opt.graph_file}, {"budget", opt.budget}};
  return run_guarded(opt.json_mode, "search-graceful", inputs, [&](json& result, std::ostream& out) {
    euler::Graph g = euler::parse_graph(read_file(opt.graph_file));
    euler::GracefulSearchResult res = euler::search_graceful(g, opt.budget);
    result["assignments"] = res.assignments;
    switch (res.outcome) {
      case euler::SearchOutcome::found:
        result["outcome"] = "found";
        result["labeling"] = euler::labeling_json(res.labeling, g.size());
        out << "found\n" << euler::labeling_json(res.labeling, g.size()).dump(2) << '\n';
        return kExitOk;
      case euler::SearchOutcome::absent:
        result["outcome"] = "absence";
        out << "absence (search space exhausted)\n";
        return kExitNegative;
      case euler::SearchOutcome::inconclusive:
        break;
    }
    result["outcome"] = "inconclusive";
    out << "inconclusive (budget of " << opt.budget << " assignments exhausted)\n";
    return kExitScale;
  });
}

struct CheckOpts {
  std::string theorem;
  int max_order = 8;
  int min_order = 6;
  int samples = 10000;
  unsigned seed = 12345;
  bool json_mode = false;
};

int cmd_check(const CheckOpts& opt) {
  json inputs{{"theorem", opt.theorem}, {"max", opt.max_order}};
  return run_guarded(opt.json_mode, "check", inputs, [&](json& result, std::ostream& out) {
    if (opt.theorem == "evenness") {
      euler::EvennessReport report = euler::check_evenness(opt.max_order, opt.samples, opt.seed);
      result = euler::evenness_report_json(report);
      out << "evenness: " << (report.all_pass() ? "consistent" : "FAILED") << " ("
          << report.samples << " random graphs, " << report.flow_pairs
          << " flow pairs over orders <= " << report.flow_max_order << ")\n";
      return report.all_pass() ? kExitOk : kExitNegative;
    }
    euler::TheoremReport report;
    if (opt.theorem == "pure")
      report = euler::check_theorem_pure_regular(opt.max_order);
    else if (opt.theorem == "two")
      report = euler::check_theorem_two_types(opt.max_order);
    else if (opt.theorem == "conjecture")
      report = euler::check_conjecture_three_types(opt.min_order, opt.max_order);
    else
      throw euler::Error(euler::errc::bad_parameter,
                         "unknown theorem id (use pure, two, conjecture or evenness)");
    result = euler::theorem_report_json(report);
    out << report.theorem << ": " << (report.consistent() ? "consistent" : "COUNTEREXAMPLES")
        << " (" << report.instances << " regular Euler graphs over orders " << report.n_min << ".."
        << report.n_max << ")\n";
    for (const std::string& note : report.notes) out << "  note: " << note << '\n';
    for (const euler::Graph& g : report.counterexamples)
      out << "counterexample:\n" << euler::serialize_graph(g);
    return report.consistent() ? kExitOk : kExitNegative;
  });
}

struct RulesOpts {
  bool verify = true;
  bool json_mode = false;
};

int cmd_rules(const RulesOpts& opt) {
  json inputs = json::object();
  return run_guarded(opt.json_mode, "rules", inputs, [&](json& result, std::ostream& out) {
    euler::RuleTableReport report = euler::verify_rule_tables();
    result = euler::rule_report_json(report);
    int passed = 0;
    for (std::size_t i = 0; i + 1 < report.checks.size(); i += 2) {
      const euler::RuleCheck& even = report.checks[i];
      const euler::RuleCheck& odd = report.checks[i + 1];
      bool row_ok = even.pass && odd.pass;
      passed += row_ok;
      out << "case " << even.case_id << " (" << even.i << "," << even.j << "): even->"
          << even.expected << (even.pass ? " ok" : " FAIL") << " odd->" << odd.expected
          << (odd.pass ? " ok" : " FAIL") << '\n';
    }
    out << passed << "/" << report.rows << " rows pass\n";
    return report.all_pass ? kExitOk : kExitNegative;
  });
}

struct SearchRegularOpts {
  int order = 0;
  int degree = 0;
  bool include_disconnected = false;
  bool json_mode = false;
};

int cmd_search_regular(const SearchRegularOpts& opt) {
  json inputs{{"order", opt.order}, {"degree", opt.degree}};
  return run_guarded(opt.json_mode, "search-regular", inputs, [&](json& result, std::ostream& out) {
    std::vector<euler::Graph> graphs =
        euler::enumerate_regular_graphs(opt.order, opt.degree, !opt.include_disconnected);
    json list = json::array();
    for (const euler::Graph& g : graphs) list.push_back(euler::serialize_graph(g));
    result = json{{"count", graphs.size()}, {"graphs", list}};
    out << graphs.size() << " graph(s)\n";
    for (const euler::Graph& g : graphs) out << euler::serialize_graph(g);
    return kExitOk;
  });
}

struct DotOpts {
  std::string graph_file, labeling_file, out_file;
  bool json_mode = false;
};

int cmd_export_dot(const DotOpts& opt) {
  json inputs{{"graph", opt.graph_file}};
  return run_guarded(opt.json_mode, "export-dot", inputs, [&](json& result, std::ostream& out) {
    euler::Graph g = euler::parse_graph(read_file(opt.graph_file));
    std::string dot;
    if (!opt.labeling_file.empty()) {
      json doc;
      try {
        doc = json::parse(read_file(opt.labeling_file));
      } catch (const json::exception& e) {
        throw euler::Error(euler::errc::malformed_input, std::string("labeling JSON: ") + e.what());
      }
      euler::GracefulLabeling labeling = euler::labeling_from_json(doc, g.order());
      dot = euler::export_dot(g, labeling.labels);
    } else {
      dot = euler::export_dot(g);
    }
    result = json{{"dot", dot}};
    if (!opt.out_file.empty()) {
      write_file(opt.out_file, dot);
      out << "wrote " << opt.out_file << '\n';
    } else {
      out << dot;
    }
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler graph mod-4 cycle-type toolkit"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  auto classify_opt = std::make_shared<ClassifyOpts>();
  CLI::App* classify = app.add_subcommand("classify", "classify a graph by its mod-4 cycle types");
  classify->add_option("file", classify_opt->file, "edge-list file")->required();
  classify->add_option("--cap", classify_opt->cap, "cycle enumeration cap");
  classify->add_flag("--json", classify_opt->json_mode, "machine-readable output");
  classify->callback([&, classify_opt]() { exit_code = cmd_classify(*classify_opt); });

  auto generate_opt = std::make_shared<GenerateOpts>();
  CLI::App* generate = app.add_subcommand("generate", "generate a graph family member");
  generate->require_subcommand(1);
  auto add_generate_common = [&](CLI::App* sub) {
    sub->add_option("--out", generate_opt->out_file, "write the edge list here");
    sub->add_flag("--classify", generate_opt->classify, "also report the cycle profile");
    sub->add_flag("--json", generate_opt->json_mode, "machine-readable output");
    sub->callback([&, generate_opt, sub]() {
      generate_opt->family = sub->get_name();
      exit_code = cmd_generate(*generate_opt);
    });
  };
  CLI::App* gen_cycle = generate->add_subcommand("cycle", "cycle graph C_n");
  gen_cycle->add_option("--n", generate_opt->n, "cycle length")->required();
  add_generate_common(gen_cycle);
  CLI::App* gen_blocks = generate->add_subcommand("blocks", "chain of cycle blocks");
  gen_blocks->add_option("--lengths", generate_opt->lengths, "block lengths")
      ->required()
      ->delimiter(',');
  add_generate_common(gen_blocks);
  CLI::App* gen_cube = generate->add_subcommand("hypercube", "hypercube of a given dimension");
  gen_cube->add_option("--n", generate_opt->n, "dimension")->required();
  add_generate_common(gen_cube);
  CLI::App* gen_gts = generate->add_subcommand("gts", "ring family G(t,s)");
  gen_gts->add_option("--t", generate_opt->t, "quarter ring length")->required();
  gen_gts->add_option("--s", generate_opt->s, "middles per block")->required();
  add_generate_common(gen_gts);
  CLI::App* gen_handle = generate->add_subcommand("handle", "attach parallel u-v paths");
  gen_handle->add_option("--in", generate_opt->in_file, "host graph file")->required();
  gen_handle->add_option("--u", generate_opt->u, "first endpoint")->required();
  gen_handle->add_option("--v", generate_opt->v, "second endpoint")->required();
  gen_handle->add_option("--len", generate_opt->len, "path length in edges")->required();
  gen_handle->add_option("--count", generate_opt->count, "number of parallel paths")->required();
  add_generate_common(gen_handle);

  auto label_opt = std::make_shared<LabelOpts>();
  CLI::App* label = app.add_subcommand("label", "closed-form graceful labelings");
  label->require_subcommand(1);
  CLI::App* label_gts = label->add_subcommand("gts", "graceful labeling of G(t,s)");
  label_gts->add_option("--t", label_opt->t, "quarter ring length")->required();
  label_gts->add_option("--s", label_opt->s, "middles per block")->required();
  label_gts->add_flag("--check", label_opt->check, "verify the labeling too");
  label_gts->add_flag("--serial", label_opt->serial, "include the serial order");
  label_gts->add_option("--out", label_opt->out_file, "write the labeling JSON here");
  label_gts->add_flag("--json", label_opt->json_mode, "machine-readable output");
  label_gts->callback([&, label_opt]() { exit_code = cmd_label(*label_opt); });

  auto verify_opt = std::make_shared<VerifyOpts>();
  CLI::App* verify = app.add_subcommand("verify-graceful", "verify a labeling against a graph");
  verify->add_option("graph", verify_opt->graph_file, "edge-list file")->required();
  verify->add_option("labeling", verify_opt->labeling_file, "labeling JSON file")->required();
  verify->add_flag("--json", verify_opt->json_mode, "machine-readable output");
  verify->callback([&, verify_opt]() { exit_code = cmd_verify_graceful(*verify_opt); });

  auto sg_opt = std::make_shared<SearchGracefulOpts>();
  CLI::App* sg = app.add_subcommand("search-graceful", "search for a graceful labeling");
  sg->add_option("graph", sg_opt->graph_file, "edge-list file")->required();
  sg->add_option("--budget", sg_opt->budget, "node-label assignments to attempt");
  sg->add_flag("--json", sg_opt->json_mode, "machine-readable output");
  sg->callback([&, sg_opt]() { exit_code = cmd_search_graceful(*sg_opt); });

  auto check_opt = std::make_shared<CheckOpts>();
  CLI::App* check = app.add_subcommand("check", "exhaustive small-order checks");
  check->add_option("--theorem", check_opt->theorem, "pure | two | conjecture | evenness")
      ->required();
  check->add_option("--max", check_opt->max_order, "largest order scanned");
  check->add_option("--min", check_opt->min_order, "smallest order scanned (conjecture)");
  check->add_option("--samples", check_opt->samples, "random graphs for evenness");
  check->add_option("--seed", check_opt->seed, "random seed");
  check->add_flag("--json", check_opt->json_mode, "machine-readable output");
  check->callback([&, check_opt]() { exit_code = cmd_check(*check_opt); });

  auto rules_opt = std::make_shared<RulesOpts>();
  CLI::App* rules = app.add_subcommand("rules", "verify the combined-cycle rule tables");
  rules->add_flag("--verify", rules_opt->verify, "check every row (default)");
  rules->add_flag("--json", rules_opt->json_mode, "machine-readable output");
  rules->callback([&, rules_opt]() { exit_code = cmd_rules(*rules_opt); });

  auto sr_opt = std::make_shared<SearchRegularOpts>();
  CLI::App* sr = app.add_subcommand("search-regular", "enumerate regular graphs up to isomorphism");
  sr->add_option("--order", sr_opt->order, "number of nodes")->required();
  sr->add_option("--degree", sr_opt->degree, "regular degree")->required();
  sr->add_flag("--include-disconnected", sr_opt->include_disconnected,
               "also list disconnected graphs");
  sr->add_flag("--json", sr_opt->json_mode, "machine-readable output");
  sr->callback([&, sr_opt]() { exit_code = cmd_search_regular(*sr_opt); });

  auto dot_opt = std::make_shared<DotOpts>();
  CLI::App* dot = app.add_subcommand("export-dot", "emit a DOT rendering of a graph");
  dot->add_option("graph", dot_opt->graph_file, "edge-list file")->required();
  dot->add_option("--labeling", dot_opt->labeling_file, "labeling JSON to annotate with");
  dot->add_option("--out", dot_opt->out_file, "write the DOT text here");
  dot->add_flag("--json", dot_opt->json_mode, "machine-readable output");
  dot->callback([&, dot_opt]() { exit_code = cmd_export_dot(*dot_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return exit_code;
}
