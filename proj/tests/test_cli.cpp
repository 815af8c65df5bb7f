#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary with stderr silenced; stdout comes back verbatim.
RunResult run(const std::string& args) {
  std::string cmd = std::string(KCUT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("cli family prints the text format") {
  RunResult r = run("family 'path(4)'");
  CHECK(r.code == 0);
  CHECK(r.out == "n 4\n1 2\n2 3\n3 4\n");

  RunResult j = run("--json family 'grid(2,2)'");
  CHECK(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["n"] == 4);
  CHECK(parsed["edges"].size() == 4);
}

TEST_CASE("cli cut-complex lists facets") {
  RunResult r = run("--json cut-complex --family 'cycle(5)' -k 2");
  CHECK(r.code == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["n"] == 5);
  CHECK(parsed["facets"].size() == 5);

  RunResult v = run("--json cut-complex --family 'complete(4)' -k 2");
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["facets"].empty());
}

TEST_CASE("cli fvector and hvector") {
  RunResult f = run("fvector --family 'cycle(5)' -k 2");
  CHECK(f.code == 0);
  CHECK(f.out == "1 5 10 5\n");
  RunResult fc = run("--csv fvector --family 'cycle(5)' -k 2");
  CHECK(fc.out == "1,5,10,5\n");
  RunResult h = run("--json hvector --family 'cycle(5)' -k 2");
  CHECK(h.code == 0);
  CHECK(json::parse(h.out)["h"] == json::array({1, 2, 3, -1}));
}

TEST_CASE("cli betti") {
  RunResult r = run("--json betti --family 'cycle(6)' -k 2");
  CHECK(r.code == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["betti"]["2"] == 1);
  CHECK(parsed["betti"]["0"] == 0);
  CHECK(parsed["torsion"].empty());
  CHECK(parsed["euler_reduced"] == 1);

  // a complex fed in as a file
  auto p = write_temp("kcut-cli-complex.json", R"({"n":4,"facets":[[1,3],[2,4]]})");
  RunResult file = run("--json betti --complex " + p.string());
  CHECK(file.code == 0);
  CHECK(json::parse(file.out)["betti"]["0"] == 1);

  RunResult voidc = run("betti --family 'complete(4)' -k 3");
  CHECK(voidc.code == 0);
  CHECK(voidc.out == "void complex: no homology\n");
}

TEST_CASE("cli shelling verify and find") {
  auto p = write_temp("kcut-cli-twoedges.json", R"({"n":6,"facets":[[1,3],[2,4]]})");
  RunResult none = run("--json shelling find --complex " + p.string());
  CHECK(none.code == 1);
  CHECK(json::parse(none.out)["status"] == "none");

  RunResult found = run("--json shelling find --family 'path(5)' -k 2");
  CHECK(found.code == 0);
  json fj = json::parse(found.out);
  CHECK(fj["status"] == "found");
  CHECK(fj["order"].size() == 6);

  // verify the order the finder produced
  auto order = write_temp("kcut-cli-order.json", fj["order"].dump());
  RunResult ver = run("--json shelling verify --family 'path(5)' -k 2 --order " + order.string());
  CHECK(ver.code == 0);
  CHECK(json::parse(ver.out)["ok"] == true);

  // the pentagon is exhaustively not shellable
  RunResult pent = run("--json shelling find --family 'cycle(5)' -k 2");
  CHECK(pent.code == 1);
  CHECK(json::parse(pent.out)["status"] == "none");

  RunResult undecided = run("--json shelling find --family 'path(5)' -k 2 --max-nodes 1");
  CHECK(undecided.code == 2);
  CHECK(json::parse(undecided.out)["status"] == "undecided");

  RunResult sq = run("--json shelling squared-path -n 8 -k 3");
  CHECK(sq.code == 0);
  json sj = json::parse(sq.out);
  CHECK(sj["full_restriction_count"] == 6);
}

TEST_CASE("cli morse grid-delta4") {
  RunResult r = run("--json morse grid-delta4 -m 2 -n 4");
  CHECK(r.code == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["valid"] == true);
  CHECK(parsed["acyclic"] == true);
  CHECK(parsed["critical"].size() == 14);
}

TEST_CASE("cli characters") {
  RunResult p = run("character path -n 5 -k 3");
  CHECK(p.code == 0);
  CHECK(p.out == "3\n");
  RunResult pf = run("--json character path -n 6 -k 3 --element flip");
  CHECK(pf.code == 0);

  RunResult cu = run("--json character clique-union -m 3 -n 3 -k 3 --left 1,1,1 --right 1,1,1");
  CHECK(cu.code == 0);
  CHECK(json::parse(cu.out)["trace"] == 8);

  RunResult cyc = run("character cycle -n 6 -k 3 --rotation 1");
  CHECK(cyc.code == 0);
  RunResult refl = run("character cycle -n 6 -k 3 --reflection 0");
  CHECK(refl.code == 0);
}

TEST_CASE("cli verify-formulas and tables exit clean") {
  RunResult vf = run("--budget-seconds 300 verify-formulas");
  CHECK(vf.code == 0);
  CHECK(vf.out.find("MISMATCH") == std::string::npos);

  RunResult t = run("--json tables grid-2n --max-universe 8");
  CHECK(t.code == 0);
  json parsed = json::parse(t.out);
  CHECK(parsed["table"] == "grid-2n");
  CHECK(parsed["mismatches"] == 0);
  CHECK(parsed["matches"].get<int>() > 0);

  RunResult csv = run("--csv tables grid-2n --max-universe 8");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("table,k,n,status") != std::string::npos);
}

TEST_CASE("cli rejects bad input with exit code 1") {
  RunResult r = run("family 'pentagon(5)'");
  CHECK(r.code == 1);
  RunResult missing = run("cut-complex --family 'path(4)'");
  CHECK(missing.code != 0);  // -k is required
  RunResult conflict = run("--json --csv fvector --family 'path(4)' -k 2");
  CHECK(conflict.code != 0);
}

TEST_CASE("cli version flag") {
  RunResult r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.0.0") != std::string::npos);
}
