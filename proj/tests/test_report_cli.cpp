#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PERMCOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expect_code) {
  const RunResult r = run(args + " --format json");
  CHECK(r.code == expect_code);
  return json::parse(r.out);
}

void strip_elapsed(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_elapsed(v);
  }
}

}  // namespace

TEST_CASE("level set query") {
  json j = run_json("levelset --n 4 --i 2", 0);
  REQUIRE(j["tool"] == "permcount");
  REQUIRE(j["command"] == "levelset");
  REQUIRE(j["convention"] == "(a∘b)(x)=a(b(x))");
  REQUIRE(j["query"]["n"] == 4);
  REQUIRE(j["query"]["i"] == 2);
  REQUIRE(j["checks"][0]["counts"]["levelset(4,2)"] == 11);

  json l = run_json("levelset --n 4 --i 2 --list", 0);
  REQUIRE(l["checks"][0]["elements"].size() == 11);
}

TEST_CASE("class query") {
  json j = run_json("class --type 3,1", 0);
  REQUIRE(j["checks"][0]["counts"]["class(3,1)"] == 8);
  json l = run_json("class --type 2,2 --list", 0);
  REQUIRE(l["checks"][0]["elements"].size() == 3);
}

TEST_CASE("filtration pair count") {
  json j = run_json("count-f --m 3 --i 1 --j 1", 0);
  REQUIRE(j["order"] == "star-lex");
  REQUIRE(j["checks"][0]["counts"]["F0(1,1,id)"] == 6);

  json t = run_json("count-f --m 4 --k 0 --i 1 --j 1 --tau \"(1 2)\"", 0);
  REQUIRE(t["query"]["tau"] == "(1 2)");

  // the three-term descent disagrees here and the tool must say so
  json b = run_json("count-f --m 3 --k 1 --i 0 --j 2 --method both", 1);
  REQUIRE(b["checks"][0]["counts"]["brute:F1(0,2,id)"] == 0);
  REQUIRE(b["checks"][0]["counts"]["recursion:F1(0,2,id)"] == 1);
  REQUIRE(b["checks"][0]["verified"] == false);

  json ok = run_json("count-f --m 3 --k 0 --i 1 --j 1 --method both", 0);
  REQUIRE(ok["checks"][0]["verified"] == true);
}

TEST_CASE("marked-point product count") {
  json j = run_json("count-g --g 3 --i 2 --j 2", 0);
  REQUIRE(j["method"] == "reduced");
  REQUIRE(j["checks"][0]["counts"]["G(2,2)"] == 18);

  json a = run_json("count-g --g 3 --i 2 --j 2 --variant all --method brute", 0);
  REQUIRE(a["checks"][0]["counts"]["G_all(2,2)"] == 20);

  json f = run_json("count-g --g 3 --i 1 --j 1", 0);
  REQUIRE(f["checks"][0]["counts"]["G(1,1)"] == 3);
  REQUIRE(std::string(f["method"]).find("brute") != std::string::npos);

  json b = run_json("count-g --g 3 --i 2 --j 2 --method both", 0);
  REQUIRE(b["checks"][0]["verified"] == true);
}

TEST_CASE("verification subcommands") {
  json l2 = run_json("verify lemma2 --g 3", 0);
  const json expected = {{"G(2,2)", 18}, {"G(1,3)", 6}};
  REQUIRE(l2["checks"][0]["counts"] == expected);
  REQUIRE(l2["checks"][0]["verified"] == true);

  REQUIRE(run("verify lemma1 --m 3").code == 0);
  REQUIRE(run("verify covering --g 3").code == 0);
  REQUIRE(run("verify oracles --n 6").code == 0);

  json rec = run_json("verify recursion --m 3", 1);
  REQUIRE(rec["checks"][0]["verified"] == false);
  REQUIRE(rec["checks"][0]["counterexamples"][0] == "k=0 tau=id i=0 j=2: brute=2 recursive=3");

  json all = run_json("verify all --g-max 3", 1);
  for (const auto& c : all["checks"]) {
    REQUIRE_FALSE(c.contains("skipped"));
    if (c["name"] == "recursion") REQUIRE(c["verified"] == false);
    else if (c.contains("verified")) REQUIRE(c["verified"] == true);
  }
}

TEST_CASE("time budget skips and reports") {
  json j = run_json("verify all --g-max 4 --time-budget 0.000001", 1);
  bool any_skipped = false;
  for (const auto& c : j["checks"])
    if (c.contains("skipped")) any_skipped = true;
  REQUIRE(any_skipped);
}

TEST_CASE("diagonal coefficient") {
  json j = run_json("diag-coeff --g 3 --method both", 0);
  REQUIRE(j["checks"][0]["counts"]["Delta(3)"] == 48);
  REQUIRE(j["checks"][0]["counts"]["N(2,2)"] == 72);
  REQUIRE(j["checks"][0]["counts"]["N(1,3)"] == 24);
  REQUIRE(j["checks"][0]["verified"] == true);
}

TEST_CASE("csv and text renderings") {
  RunResult csv = run("count-g --g 3 --i 2 --j 2 --format csv");
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.rfind("check,params,value,verified,elapsed_ms\n", 0) == 0);
  REQUIRE(csv.out.find("count-g,\"g=3 variant=strict count=G(2,2)\",18,,") != std::string::npos);

  RunResult txt = run("verify lemma2 --g 3");
  REQUIRE(txt.code == 0);
  REQUIRE(txt.out.find("[PASS] lemma2") != std::string::npos);
  REQUIRE(txt.out.find("G(2,2)=18") != std::string::npos);

  RunResult ver = run("--version");
  REQUIRE(ver.code == 0);
  REQUIRE(ver.out.find("permcount") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  REQUIRE(run("no-such-command").code == 2);
  REQUIRE(run("count-g --g 3 --i 2").code == 2);                       // missing --j
  REQUIRE(run("levelset --n 20 --i 1").code == 2);                     // degree cap
  REQUIRE(run("levelset --n 4 --i 4").code == 2);                      // level range
  REQUIRE(run("count-g --g 3 --i 1 --j 1 --method both").code == 2);   // no reduced count here
  REQUIRE(run("count-g --g 10 --i 2 --j 2").code == 2);                // degree cap via g
  REQUIRE(run("count-f --m 3 --i 0 --j 0 --tau \"(1 7)\"").code == 2); // bad tau
  REQUIRE(run("count-f --m 3 --i 0 --j 0 --method fastest").code == 2);
  REQUIRE(run("verify").code == 2);
  REQUIRE(run("verify lemma2 --g 3 --format yaml").code == 2);
  REQUIRE(run("").code == 2);
}

TEST_CASE("reports are deterministic across worker counts") {
  json a = run_json("verify all --g-max 3 --workers 1", 1);
  json b = run_json("verify all --g-max 3 --workers 8", 1);
  strip_elapsed(a);
  strip_elapsed(b);
  REQUIRE(a == b);
}
