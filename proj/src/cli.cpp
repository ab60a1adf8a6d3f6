#include "graft/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graft/dot_export.hpp"
#include "graft/enumerate.hpp"
#include "graft/errors.hpp"
#include "graft/generators.hpp"
#include "graft/graft_io.hpp"
#include "graft/tjoin.hpp"
#include "graft/verifier.hpp"

namespace graft {
namespace cli {

namespace {

using nlohmann::ordered_json;

struct Session {
  std::string input;
  std::string named;
  bool json = false;
  EngineOptions opt;
  std::ostream* out = nullptr;
};

struct GenParams {
  std::string name = "k2";
  int n = 4;
  int m = 4;
  double t_prob = 0.5;
  std::uint64_t seed = 1;
  int na = 2;
  int nb = 2;
  int max_tries = 1000;
};

struct Instance {
  io::GraftDocument doc;
  Graft graft;
};

Instance load_instance(const Session& s) {
  if (!s.named.empty()) {
    auto all = gen::named_instances();
    auto it = all.find(s.named);
    if (it == all.end())
      throw InputError("unknown named instance \"" + s.named + "\"");
    return Instance{io::from_graft(it->second), it->second};
  }
  if (s.input.empty())
    throw InputError("no instance: pass --input FILE or --named NAME");
  std::ifstream file(s.input, std::ios::binary);
  if (!file) throw InputError("cannot open \"" + s.input + "\"");
  std::stringstream buffer;
  buffer << file.rdbuf();
  io::GraftDocument doc = io::parse_graft_document(buffer.str());
  Graft g = io::to_graft(doc);
  return Instance{std::move(doc), std::move(g)};
}

std::string edge_text(const Multigraph& g, EdgeId e) {
  auto [u, v] = g.ends(e);
  return g.label(u) + "-" + g.label(v);
}

ordered_json labels_json(const Multigraph& g, const std::vector<VertexId>& vs) {
  auto arr = ordered_json::array();
  for (VertexId v : vs) arr.push_back(g.label(v));
  return arr;
}

ordered_json edges_json(const Multigraph& g, const EdgeSet& s) {
  auto arr = ordered_json::array();
  for (EdgeId e : s.ids()) {
    ordered_json row;
    row["id"] = e;
    row["ends"] = ordered_json::array(
        {g.label(g.ends(e).first), g.label(g.ends(e).second)});
    arr.push_back(std::move(row));
  }
  return arr;
}

ordered_json poset_json(const Multigraph& g, const DMPoset& p) {
  ordered_json j;
  auto comps = ordered_json::array();
  for (const auto& c : p.components) {
    ordered_json row;
    row["id"] = c.id;
    row["vertices"] = labels_json(g, c.vertices);
    comps.push_back(std::move(row));
  }
  j["components"] = std::move(comps);
  auto pairs = [&](bool base) {
    auto arr = ordered_json::array();
    int k = static_cast<int>(p.components.size());
    for (int i = 0; i < k; ++i)
      for (int jj = 0; jj < k; ++jj)
        if (i != jj && (base ? p.base[i][jj] : p.closure[i][jj]))
          arr.push_back(ordered_json::array({i, jj}));
    return arr;
  };
  j["base"] = pairs(true);
  j["order"] = pairs(false);
  auto hasse = ordered_json::array();
  for (auto [lo, hi] : p.hasse) hasse.push_back(ordered_json::array({lo, hi}));
  j["hasse"] = std::move(hasse);
  return j;
}

void emit(const Session& s, const ordered_json& report,
          const std::string& human) {
  if (s.json)
    *s.out << report.dump(2) << "\n";
  else
    *s.out << human;
}

std::string poset_human(const DMPoset& p) {
  std::string text;
  for (const auto& c : p.components) {
    text += "C" + std::to_string(c.id) + " = {";
    for (size_t i = 0; i < c.vertices.size(); ++i)
      text += (i ? "," : "") + std::to_string(c.vertices[i]);
    text += "}\n";
  }
  text += "covers:";
  if (p.hasse.empty()) text += " (none)";
  for (auto [lo, hi] : p.hasse)
    text += " C" + std::to_string(lo) + "<C" + std::to_string(hi);
  return text + "\n";
}

int exit_code_for_checks(const std::vector<verify::CheckResult>& checks) {
  bool failed = false, capped = false;
  for (const auto& c : checks) {
    failed |= c.status == verify::CheckResult::Status::failed;
    capped |= c.status == verify::CheckResult::Status::cap_exceeded;
  }
  if (failed) return 1;
  if (capped) return 3;
  return 0;
}

int dispatch(const std::string& command, Session& s,
             const std::vector<std::string>& pos, int c0_flag,
             const std::string& gen_family, const GenParams& gen_params,
             const std::string& out_path);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Session session;
  session.out = &out;

  CLI::App app{"minimum joins and canonical decompositions of grafts"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-i,--input", session.input, "graft document (JSON)");
  app.add_option("-n,--named", session.named, "built-in named instance");
  app.add_flag("--json", session.json, "machine-readable report");
  app.add_option("--max-t", session.opt.max_terminals,
                 "terminal cap for the engine")
      ->envname("GRAFT_MAX_T");
  app.add_option("--max-e", session.opt.max_oracle_edges,
                 "edge cap for exhaustive scans")
      ->envname("GRAFT_MAX_E");
  app.add_option("--max-path-len", session.opt.max_path_edges,
                 "path length cap for enumerations")
      ->envname("GRAFT_MAX_PATH_LEN");

  std::vector<std::string> positionals;
  int c0_flag = -1;
  std::string gen_family, out_path;
  GenParams gen_params;

  for (const char* name : {"nu", "minjoin", "allowed", "components", "kl",
                           "comb", "poset", "classic-dm", "verify"})
    app.add_subcommand(name);
  app.add_subcommand("dist")
      ->add_option("endpoints", positionals, "two vertex labels")
      ->expected(2);
  app.add_subcommand("attributes")
      ->add_option("c0", c0_flag, "base component id")
      ->required();
  app.add_subcommand("dot")->add_option("--c0", c0_flag,
                                        "annotate this component's uppers");
  auto* gen_cmd = app.add_subcommand("gen");
  gen_cmd->add_option("family", gen_family,
                      "named|random|comb|path|cycle|star")
      ->required();
  gen_cmd->add_option("--name", gen_params.name, "named instance");
  gen_cmd->add_option("--n", gen_params.n,
                      "vertex / path / cycle / tooth count");
  gen_cmd->add_option("--m", gen_params.m, "edge count");
  gen_cmd->add_option("--t-prob", gen_params.t_prob, "terminal probability");
  gen_cmd->add_option("--seed", gen_params.seed, "random seed");
  gen_cmd->add_option("--na", gen_params.na, "spine-side size");
  gen_cmd->add_option("--nb", gen_params.nb, "tooth-side size");
  gen_cmd->add_option("--max-tries", gen_params.max_tries,
                      "rejection budget");
  gen_cmd->add_option("-o,--output", out_path, "write document here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    int code = app.exit(e, sink, sink);
    (code == 0 ? out : err) << sink.str();
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, session, positionals, c0_flag, gen_family,
                    gen_params, out_path);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const AntisymmetryViolationError& e) {
    err << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const InconsistentLabelingError& e) {
    err << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int dispatch(const std::string& command, Session& s,
             const std::vector<std::string>& pos, int c0_flag,
             const std::string& gen_family, const GenParams& gen_params,
             const std::string& out_path) {
  if (command == "gen") {
    io::GraftDocument doc;
    if (gen_family == "named") {
      auto all = gen::named_instances();
      auto it = all.find(gen_params.name);
      if (it == all.end())
        throw InputError("unknown named instance \"" + gen_params.name +
                         "\"");
      doc = io::from_graft(it->second);
    } else if (gen_family == "random") {
      doc = io::from_graft(gen::gen_random_graft(
          gen_params.n, gen_params.m, gen_params.t_prob, gen_params.seed));
    } else if (gen_family == "comb") {
      auto sample =
          gen::gen_comb_random(gen_params.na, gen_params.nb, gen_params.m,
                               gen_params.seed, gen_params.max_tries, s.opt);
      doc = io::from_graft(sample.graft, sample.designation);
    } else if (gen_family == "path") {
      doc = io::from_graft(gen::path_graft(gen_params.n));
    } else if (gen_family == "cycle") {
      doc = io::from_graft(gen::cycle_graft(gen_params.n));
    } else if (gen_family == "star") {
      doc = io::from_graft(gen::star_graft(gen_params.n));
    } else {
      throw InputError("unknown family \"" + gen_family + "\"");
    }
    std::string text = io::serialize(doc);
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw InputError("cannot write \"" + out_path + "\"");
      file << text;
    } else {
      *s.out << text;
    }
    return 0;
  }

  Instance inst = load_instance(s);
  const Graft& g = inst.graft;
  const Multigraph& mg = g.graph;
  ordered_json report;
  report["command"] = command;

  if (command == "nu") {
    int value = tjoin::nu(g, s.opt);
    report["nu"] = value;
    emit(s, report, "nu = " + std::to_string(value) + "\n");
    return 0;
  }
  if (command == "minjoin") {
    auto result = tjoin::min_join(g, s.opt);
    report["nu"] = result.nu;
    report["join"] = edges_json(mg, result.join);
    std::string human = "nu = " + std::to_string(result.nu) + "\njoin =";
    for (EdgeId e : result.join.ids())
      human += " " + edge_text(mg, e) + "[" + std::to_string(e) + "]";
    emit(s, report, human + "\n");
    return 0;
  }
  if (command == "dist") {
    VertexId x = mg.vertex_id(pos[0]), y = mg.vertex_id(pos[1]);
    if (x < 0) throw InputError("unknown vertex label \"" + pos[0] + "\"");
    if (y < 0) throw InputError("unknown vertex label \"" + pos[1] + "\"");
    int value = tjoin::dist(g, x, y, s.opt);
    report["x"] = pos[0];
    report["y"] = pos[1];
    report["dist"] = value;
    std::string human = "dist(" + pos[0] + ", " + pos[1] +
                        ") = " + std::to_string(value) + "\n";
    if (x != y) {
      auto witness = tjoin::shortest_path_witness(g, x, y, s.opt);
      ordered_json w;
      w["weight"] = witness.weight;
      w["vertices"] = labels_json(mg, witness.walk.vertices);
      auto edge_arr = ordered_json::array();
      for (EdgeId e : witness.walk.edges) edge_arr.push_back(e);
      w["edges"] = std::move(edge_arr);
      report["witness"] = std::move(w);
      human += "witness:";
      for (VertexId v : witness.walk.vertices) human += " " + mg.label(v);
      human += "\n";
    }
    emit(s, report, human);
    return 0;
  }
  if (command == "allowed") {
    EdgeSet allowed = tjoin::allowed_edges(g, s.opt);
    report["allowed"] = edges_json(mg, allowed);
    std::string human = "allowed =";
    for (EdgeId e : allowed.ids())
      human += " " + edge_text(mg, e) + "[" + std::to_string(e) + "]";
    emit(s, report, human + "\n");
    return 0;
  }
  if (command == "components") {
    auto comps = factor_components(g, s.opt);
    auto arr = ordered_json::array();
    std::string human;
    for (const auto& c : comps) {
      ordered_json row;
      row["id"] = c.id;
      row["vertices"] = labels_json(mg, c.vertices);
      row["allowed_edges"] = edges_json(mg, c.edges);
      arr.push_back(std::move(row));
      human += "C" + std::to_string(c.id) + " = {";
      for (size_t i = 0; i < c.vertices.size(); ++i)
        human += (i ? "," : "") + mg.label(c.vertices[i]);
      human += "}\n";
    }
    report["components"] = std::move(arr);
    emit(s, report, human);
    return 0;
  }
  if (command == "kl") {
    auto kl = kl_partition(g, s.opt);
    auto arr = ordered_json::array();
    std::string human;
    for (size_t k = 0; k < kl.classes.size(); ++k) {
      ordered_json row;
      row["id"] = static_cast<int>(k);
      row["vertices"] = labels_json(mg, kl.classes[k]);
      arr.push_back(std::move(row));
      human += "S" + std::to_string(k) + " = {";
      for (size_t i = 0; i < kl.classes[k].size(); ++i)
        human += (i ? "," : "") + mg.label(kl.classes[k][i]);
      human += "}\n";
    }
    report["classes"] = std::move(arr);
    emit(s, report, human);
    return 0;
  }
  if (command == "comb") {
    auto designations = comb_designations(g, s.opt);
    auto arr = ordered_json::array();
    std::string human;
    for (const auto& d : designations) {
      ordered_json row;
      row["spine"] = labels_json(mg, d.spine);
      row["tooth"] = labels_json(mg, d.tooth);
      arr.push_back(std::move(row));
      human += "spine = {";
      for (size_t i = 0; i < d.spine.size(); ++i)
        human += (i ? "," : "") + mg.label(d.spine[i]);
      human += "}, tooth = {";
      for (size_t i = 0; i < d.tooth.size(); ++i)
        human += (i ? "," : "") + mg.label(d.tooth[i]);
      human += "}\n";
    }
    if (designations.empty()) human = "no comb designation\n";
    report["designations"] = std::move(arr);
    emit(s, report, human);
    return 0;
  }
  if (command == "poset" || command == "attributes" || command == "dot") {
    InstanceAnalysis analysis(g, s.opt);
    if (command == "dot" && c0_flag < 0) {
      // Decomposition picture alone is meaningful without a designation.
      const CombDesignation* d = nullptr;
      auto designations = analysis.designations();
      DMPoset p;
      if (!designations.empty()) {
        d = &io::pick_designation(inst.doc, g, designations);
        p = dm_relation(analysis, *d);
      }
      *s.out << io::dot_export(g, analysis.components(), analysis.kl(),
                               analysis.allowed(), d ? &p : nullptr, nullptr);
      return 0;
    }
    const CombDesignation& d =
        io::pick_designation(inst.doc, g, analysis.designations());
    DMPoset p = dm_relation(analysis, d);
    if (command == "poset") {
      report["spine"] = labels_json(mg, d.spine);
      report["tooth"] = labels_json(mg, d.tooth);
      report.update(poset_json(mg, p));
      emit(s, report, poset_human(p));
      return 0;
    }
    if (command == "attributes") {
      AttributeMap am = attributes(analysis, d, p, c0_flag);
      const auto& kl = analysis.kl();
      report["c0"] = c0_flag;
      auto arr = ordered_json::array();
      std::string human;
      for (auto [comp, cls] : am.attribute) {
        ordered_json row;
        row["component"] = comp;
        row["class"] = labels_json(mg, kl.classes[cls]);
        arr.push_back(std::move(row));
        human += "C" + std::to_string(comp) + " -> {";
        for (size_t i = 0; i < kl.classes[cls].size(); ++i)
          human += (i ? "," : "") + mg.label(kl.classes[cls][i]);
        human += "}\n";
      }
      if (am.attribute.empty()) human = "no strict upper bounds\n";
      report["upper_bounds"] = std::move(arr);
      auto buckets = ordered_json::array();
      for (const auto& [cls, comps] : am.buckets) {
        ordered_json row;
        row["class"] = labels_json(mg, kl.classes[cls]);
        row["components"] = comps;
        buckets.push_back(std::move(row));
      }
      report["buckets"] = std::move(buckets);
      emit(s, report, human);
      return 0;
    }
    // dot with a queried component
    AttributeMap am = attributes(analysis, d, p, c0_flag);
    *s.out << io::dot_export(g, analysis.components(), analysis.kl(),
                             analysis.allowed(), &p, &am);
    return 0;
  }
  if (command == "classic-dm") {
    DMPoset p = classic_dm(mg, s.opt);
    report.update(poset_json(mg, p));
    emit(s, report, poset_human(p));
    return 0;
  }
  if (command == "verify") {
    auto checks = verify::verify_all(g, s.opt);
    ordered_json caps;
    caps["max_terminals"] = s.opt.max_terminals;
    caps["max_oracle_edges"] = s.opt.max_oracle_edges;
    caps["max_path_edges"] = s.opt.max_path_edges;
    report["caps"] = std::move(caps);
    auto arr = ordered_json::array();
    std::string human = "caps: t<=" + std::to_string(s.opt.max_terminals) +
                        " e<=" + std::to_string(s.opt.max_oracle_edges) +
                        " walk<=" + std::to_string(s.opt.max_path_edges) +
                        "\n";
    bool all_passed = true;
    for (const auto& c : checks) {
      bool capped = c.status == verify::CheckResult::Status::cap_exceeded;
      const char* status =
          c.passed() ? "pass" : (capped ? "cap-exceeded" : "fail");
      all_passed &= c.passed();
      ordered_json row;
      row["name"] = c.name;
      row["status"] = status;
      row["witnesses"] = c.witnesses;
      row["detail"] = c.detail;
      arr.push_back(std::move(row));
      human += std::string(c.passed() ? "PASS" : (capped ? "CAP " : "FAIL")) +
               " " + c.name + " (witnesses=" + std::to_string(c.witnesses) +
               ")" + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    }
    report["checks"] = std::move(arr);
    report["all_passed"] = all_passed;
    emit(s, report, human);
    return exit_code_for_checks(checks);
  }
  throw InputError("unknown command \"" + command + "\"");
}

}  // namespace

}  // namespace cli
}  // namespace graft
