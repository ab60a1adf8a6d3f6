#include <doctest.h>

#include <fstream>
#include <sstream>

#include "graft/cli.hpp"
#include "graft/dot_export.hpp"
#include "graft/enumerate.hpp"
#include "graft/errors.hpp"
#include "graft/graft_io.hpp"
#include "graft/tjoin.hpp"
#include "test_support.hpp"

using namespace graft;
using test::named;

namespace {

std::string k2_text() {
  return R"({"version": 1,
             "vertices": ["u", "v"],
             "edges": [["u", "v"]],
             "terminals": ["u", "v"]})";
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/graft_test_" + name + ".json";
  std::ofstream file(path, std::ios::binary);
  file << text;
  return path;
}

}  // namespace

TEST_CASE("documents parse, validate, and round-trip") {
  io::GraftDocument doc = io::parse_graft_document(k2_text());
  Graft g = io::to_graft(doc);
  CHECK(tjoin::nu(g) == 1);

  std::string text = io::serialize(doc);
  io::GraftDocument again = io::parse_graft_document(text);
  CHECK(again.vertices == doc.vertices);
  CHECK(again.edges == doc.edges);
  CHECK(again.terminals == doc.terminals);
  CHECK(io::serialize(again) == text);

  for (const auto& [name, instance] : gen::named_instances()) {
    CAPTURE(name);
    io::GraftDocument d = io::from_graft(instance);
    io::GraftDocument back = io::parse_graft_document(io::serialize(d));
    CHECK(io::serialize(back) == io::serialize(d));
    CHECK(fingerprint(io::to_graft(back)) == fingerprint(instance));
  }
}

TEST_CASE("document errors are positioned or name the offending element") {
  CHECK_THROWS_AS(io::parse_graft_document("{"), InputError);
  try {
    io::parse_graft_document("{\n  \"version\": 1,\n  broken\n}");
  } catch (const InputError& e) {
    CHECK(e.line == 3);
  }

  CHECK_THROWS_WITH_AS(
      io::parse_graft_document(
          R"({"version": 1, "vertices": [], "edges": [], "terminals": [],
              "color": []})"),
      "unknown field \"color\"", InputError);

  io::GraftDocument doc = io::parse_graft_document(
      R"({"version": 1, "vertices": ["u", "v"], "edges": [["u","v"]],
          "terminals": ["w"]})");
  CHECK_THROWS_WITH_AS(io::to_graft(doc), "unknown terminal label \"w\"",
                       InputError);

  io::GraftDocument odd = io::parse_graft_document(
      R"({"version": 1, "vertices": ["u", "v"], "edges": [["u","v"]],
          "terminals": ["u"]})");
  CHECK_THROWS_AS(io::to_graft(odd), InputError);

  io::GraftDocument empty = io::parse_graft_document(
      R"({"version": 1, "vertices": ["u"], "edges": [], "terminals": []})");
  CHECK(io::to_graft(empty).terminals.empty());

  CHECK_THROWS_AS(io::parse_graft_document(
                      R"({"version": 2, "vertices": [], "edges": [],
                          "terminals": []})"),
                  InputError);
}

TEST_CASE("cli computes on named instances with documented exit codes") {
  auto nu = run_cli({"nu", "--named", "k2"});
  CHECK(nu.code == 0);
  CHECK(nu.out == "nu = 1\n");

  auto dist = run_cli({"dist", "b1", "b2", "--named", "star-4"});
  CHECK(dist.code == 0);
  CHECK(dist.out.find("dist(b1, b2) = -2") != std::string::npos);

  auto bad_label = run_cli({"dist", "b1", "zz", "--named", "star-4"});
  CHECK(bad_label.code == 2);

  auto verify = run_cli({"verify", "--named", "two-pendant"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("FAIL") == std::string::npos);

  auto missing = run_cli({"nu", "--named", "nope"});
  CHECK(missing.code == 2);

  auto capped = run_cli({"nu", "--named", "c8", "--max-t", "4"});
  CHECK(capped.code == 3);

  auto capped_verify = run_cli({"verify", "--named", "c8", "--max-t", "4"});
  CHECK(capped_verify.code == 3);
}

TEST_CASE("cli gen emits parseable documents for every family") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"gen", "named", "--name", "chain"},
           {"gen", "random", "--n", "5", "--m", "6", "--seed", "9"},
           {"gen", "comb", "--na", "2", "--nb", "2", "--m", "5", "--seed",
            "42"},
           {"gen", "path", "--n", "6"},
           {"gen", "cycle", "--n", "8"},
           {"gen", "star", "--n", "4"}}) {
    auto run = run_cli(args);
    CAPTURE(args[1]);
    CHECK(run.code == 0);
    io::GraftDocument doc = io::parse_graft_document(run.out);
    CHECK_NOTHROW(io::to_graft(doc));
  }
  // The comb family records its designation as a hint.
  auto comb = run_cli(
      {"gen", "comb", "--na", "2", "--nb", "2", "--m", "5", "--seed", "42"});
  CHECK(comb.out.find("spine_hint") != std::string::npos);

  auto bad = run_cli({"gen", "cycle", "--n", "7"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli reads documents and rejects non-comb poset requests") {
  std::string path = write_temp("k2", k2_text());
  auto nu = run_cli({"nu", "--input", path});
  CHECK(nu.code == 0);
  CHECK(nu.out == "nu = 1\n");

  std::string triangle = write_temp("triangle", R"({"version": 1,
      "vertices": ["a", "b", "c"],
      "edges": [["a","b"], ["b","c"], ["c","a"]],
      "terminals": []})");
  auto poset = run_cli({"poset", "--input", triangle});
  CHECK(poset.code == 2);
  CHECK(poset.err.find("not a comb") != std::string::npos);

  auto missing = run_cli({"nu", "--input", "/tmp/graft_no_such_file.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("cli honors the spine hint") {
  // p4 qualifies under both role assignments; the hint picks the second.
  std::string hinted = write_temp("p4hint", R"({"version": 1,
      "vertices": ["v1", "v2", "v3", "v4"],
      "edges": [["v1","v2"], ["v2","v3"], ["v3","v4"]],
      "terminals": ["v1", "v2", "v3", "v4"],
      "spine_hint": ["v2", "v4"]})");
  auto poset = run_cli({"poset", "--input", hinted, "--json"});
  CHECK(poset.code == 0);
  CHECK(poset.out.find("\"spine\": [\n    \"v2\",\n    \"v4\"") !=
        std::string::npos);
}

TEST_CASE("cli json reports are byte-stable") {
  for (const char* cmd : {"nu", "minjoin", "kl", "poset", "verify"}) {
    auto first = run_cli({cmd, "--named", "c4", "--json"});
    auto second = run_cli({cmd, "--named", "c4", "--json"});
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("dot export shows clusters, dashed frontier edges, hasse labels") {
  Graft p4 = named("p4");
  InstanceAnalysis a(p4);
  auto d = comb_designations(p4).front();
  DMPoset p = dm_relation(a, d);
  AttributeMap am = attributes(a, d, p, 0);
  std::string dot = io::dot_export(p4, a.components(), a.kl(), a.allowed(),
                                   &p, &am);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") != std::string::npos);
  CHECK(dot.find("subgraph cluster_2") == std::string::npos);
  CHECK(dot.find("[style=dashed]") != std::string::npos);  // v2v3
  CHECK(dot.find("C0 -> C1 [label=\"{v2}\"]") != std::string::npos);

  auto annotated = run_cli({"dot", "--named", "two-pendant", "--c0", "0"});
  CHECK(annotated.code == 0);
  CHECK(annotated.out.find("[label=\"{b1}\"]") != std::string::npos);
  CHECK(annotated.out.find("[label=\"{b2}\"]") != std::string::npos);

  auto cli_dot = run_cli({"dot", "--named", "c4"});
  CHECK(cli_dot.code == 0);
  CHECK(cli_dot.out.find("digraph hasse") != std::string::npos);
  CHECK(cli_dot.out.find("->") == std::string::npos);  // single component
}
