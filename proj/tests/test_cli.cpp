#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "bialg/fixture.hpp"

using namespace bialg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

std::string fx(const std::string& name) { return std::string(BIALG_FIXTURES) + "/" + name + ".json"; }

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / "bialg_cli_test";
  fs::create_directories(p);
  return p;
}

Run cli(const std::string& args) {
  std::string cmd = std::string(BIALG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

// Emits a fixture, checks it re-validates, and re-emits it through `check -o` byte for byte.
void round_trip(const std::string& args, const std::string& stem) {
  fs::path a = scratch() / (stem + ".json"), b = scratch() / (stem + "_again.json");
  Run r = cli(args + " -o " + a.string());
  INFO(r.out);
  REQUIRE(r.code == 0);
  REQUIRE(fs::exists(a));
  Run c = cli("check " + a.string() + " -o " + b.string());
  INFO(c.out);
  CHECK(c.code == 0);
  CHECK(read_text_file(a.string()) == read_text_file(b.string()));
}

}  // namespace

TEST_CASE("check reports pass and axiom failures through the exit code") {
  Run c2 = cli("check " + fx("c2") + " --left");
  CHECK(c2.code == 0);
  CHECK(contains(c2.out, "result: pass"));
  CHECK(cli("check " + fx("pair2") + " --left").code == 0);
  Run broken = cli("check " + fx("broken_counit") + " --left");
  CHECK(broken.code == 1);
  CHECK(contains(broken.out, "[FAIL] counit"));
  CHECK(contains(broken.out, "at "));
  CHECK(cli("check " + fx("broken_multiplicative")).code == 1);
}

TEST_CASE("usage and shape errors exit with 2") {
  CHECK(cli("check " + (scratch() / "missing.json").string()).code == 2);
  CHECK(cli("check").code == 2);
  CHECK(cli("frobnicate " + fx("c2")).code == 2);
  CHECK(cli("smash " + fx("c2") + " --r nosuchblock").code == 2);
  CHECK(cli("check " + fx("c2") + " --left --right").code == 2);
  fs::path bad = scratch() / "bad.json";
  write_text_file(bad.string(), "{\"base\": {\"dim\": 1}");
  CHECK(cli("check " + bad.string()).code == 2);
  CHECK(cli("vee " + fx("c2")).code == 2);
}

TEST_CASE("unmet hypotheses exit with 3") {
  Run r = cli("vee-smash " + fx("ap2") + " --r dual");
  CHECK(r.code == 3);
  CHECK(contains(r.out, "refused: "));
  CHECK(cli("weyl " + fx("monoid2")).code == 3);
}

TEST_CASE("pipeline commands pass on the shipped fixtures") {
  CHECK(cli("eta " + fx("sw4") + " --r weyl").code == 0);
  CHECK(cli("vee-smash " + fx("ap2") + " --trunc 4").code == 0);
  CHECK(cli("vee-smash " + fx("ap2") + " --trunc 4 --r dual_h").code == 0);
  CHECK(cli("hopf " + fx("sw4") + " --right").code == 0);
  CHECK(cli("hopf " + fx("monoid2")).code == 1);
  CHECK(cli("recognize " + fx("c2") + " --r weyl").code == 0);
  CHECK(cli("smash " + fx("sw4") + " --r weyl --right").code == 0);
  Run v = cli("vee " + fx("ap2_degree2"));
  CHECK(v.code == 1);
  CHECK(contains(v.out, "x ∉ J^2"));
}

TEST_CASE("pipeline commands run only on fixtures that pass their own check") {
  Run r = cli("smash " + fx("broken_counit"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "input left bialgebroid"));
}

TEST_CASE("emitted fixtures re-load and re-emit byte for byte") {
  round_trip("dual --left " + fx("pair2"), "pair2_dual");
  round_trip("dual --right " + fx("sw4"), "sw4_right_dual");
  round_trip("smash " + fx("sw4") + " --r weyl", "sw4_weyl");
  round_trip("weyl " + fx("pair2") + " --right", "pair2_weyl_right");
  round_trip("eta " + fx("c2") + " --r trivial", "c2_eta");
  round_trip("recognize " + fx("sw4") + " --r weyl", "sw4_recognized");
  round_trip("hopf " + fx("c2"), "c2_hopf");
  round_trip("vee " + fx("ap2"), "ap2_vee");
  round_trip("vee-smash " + fx("ap2") + " --r dual_h", "ap2_vee_smash");
  round_trip("smash " + fx("ap2") + " --r dual_h", "ap2_smash_materialized");
  round_trip("check " + fx("ap2"), "ap2_canonical");
  // the emitted dual is a right bialgebroid fixture
  json j = load_json_file((scratch() / "pair2_dual.json").string());
  CHECK(j["chirality"] == "right");
  CHECK(j["total"]["dim"] == 4);
}

TEST_CASE("reports and emitted fixtures are deterministic") {
  for (std::string args : {"eta " + fx("sw4") + " --r weyl", "vee-smash " + fx("ap2") + " --r dual_h",
                           "check " + fx("broken_counit"), "recognize " + fx("pair2") + " --r weyl"}) {
    CAPTURE(args);
    fs::path a = scratch() / "det.json";
    Run x = cli(args + " -o " + a.string());
    std::string first = fs::exists(a) ? read_text_file(a.string()) : "";
    fs::remove(a);
    Run y = cli(args + " -o " + a.string());
    std::string second = fs::exists(a) ? read_text_file(a.string()) : "";
    fs::remove(a);
    CHECK(x.code == y.code);
    CHECK(x.out == y.out);
    CHECK(first == second);
    CHECK(cli(args + " --machine").out == cli(args + " --machine").out);
  }
}

TEST_CASE("machine-readable reports carry command, digest and per-axiom witnesses") {
  Run r = cli("check " + fx("broken_counit") + " --machine");
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["digest"] == digest(read_text_file(fx("broken_counit"))));
  CHECK(j["exit"] == 1);
  bool witnessed = false;
  for (const auto& a : j["report"]["axioms"])
    if (a["axiom"] == "counit") {
      CHECK(a["pass"] == false);
      witnessed = !a["violations"].empty() && !a["violations"][0]["witness"].get<std::string>().empty();
    }
  CHECK(witnessed);
  json e = json::parse(cli("vee-smash " + fx("ap2") + " --r dual --machine").out);
  CHECK(e["exit"] == 3);
  CHECK(e.contains("error"));
}
