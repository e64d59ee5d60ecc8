#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef BSSBP_CLI_PATH
#error "BSSBP_CLI_PATH must point at the built executable"
#endif

namespace {

using Json = nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string temp_path(const std::string& tag) {
  static int seq = 0;
  return "/tmp/bssbp_cli_test_" + std::to_string(getpid()) + "_" + tag + "_" +
         std::to_string(seq++);
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string out_file = temp_path("out"), err_file = temp_path("err");
  std::string cmd = env_prefix + std::string(BSSBP_CLI_PATH) + " " + args + " >" + out_file +
                    " 2>" + err_file;
  int raw = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  res.out = slurp(out_file);
  res.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return res;
}

const char* kSimpleInstance =
    R"({"m":1,"N":2,"A":[["1","2"]],"y":["1"],"epsilon":"1/2"})";

const char* kComplexInstance =
    R"({"m":1,"N":2,"A_re":[["0","0"]],"A_im":[["1","0"]],"y_re":["1"],"y_im":["0"],"epsilon":"1/2"})";

std::string write_instance(const char* text, const std::string& tag) {
  std::string path = temp_path(tag) + ".json";
  spit(path, text);
  return path;
}

}  // namespace

TEST_CASE("solve prints an exact certified solution") {
  std::string path = write_instance(kSimpleInstance, "solve");
  CliResult res = run_cli("solve " + path);
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["status"] == "Solved");
  CHECK(j["objective"]["a"] == "1/4");
  CHECK(j["certificate_ok"] == true);
  CHECK(j["point"][0]["a"] == "0/1");
  CHECK(j["point"][1]["a"] == "1/4");
  std::remove(path.c_str());
}

TEST_CASE("reruns and the serial path are byte identical") {
  std::string path = write_instance(kSimpleInstance, "det");
  CliResult a = run_cli("solve " + path);
  CliResult b = run_cli("solve " + path);
  CliResult c = run_cli("solve --serial " + path);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  std::remove(path.c_str());
}

TEST_CASE("output file option and approximate rendering") {
  std::string path = write_instance(kSimpleInstance, "out");
  std::string out = temp_path("solution") + ".json";
  CliResult res = run_cli("solve -o " + out + " " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  Json j = Json::parse(slurp(out));
  CHECK(j["objective"]["a"] == "1/4");
  CliResult approx = run_cli("solve --approx 6 " + path);
  CHECK(approx.exit_code == 0);
  CHECK(approx.out.find("0.250000") != std::string::npos);
  CHECK(approx.out.find("/") == std::string::npos);
  std::remove(path.c_str());
  std::remove(out.c_str());
}

TEST_CASE("complex solve pairs coordinates") {
  std::string path = write_instance(kComplexInstance, "cplx");
  CliResult res = run_cli("solve-complex " + path);
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["objective"]["a"] == "1/2");
  CHECK(j["point"][0]["im"]["a"] == "-1/2");
  CHECK(j["certificate_ok"] == true);
  std::remove(path.c_str());
}

TEST_CASE("verbs reject instances of the other kind") {
  std::string real_path = write_instance(kSimpleInstance, "real_wrong");
  std::string cplx_path = write_instance(kComplexInstance, "cplx_wrong");
  CHECK(run_cli("solve " + cplx_path).exit_code == 4);
  CHECK(run_cli("solve-complex " + real_path).exit_code == 4);
  // reduce and check-empty auto-detect instead
  CHECK(run_cli("reduce " + cplx_path).exit_code == 0);
  CHECK(run_cli("check-empty " + cplx_path).exit_code == 0);
  std::remove(real_path.c_str());
  std::remove(cplx_path.c_str());
}

TEST_CASE("exit codes by failure class") {
  // 2: empty feasible set
  std::string infeasible =
      write_instance(R"({"m":1,"N":2,"A":[["0","0"]],"y":["1"],"epsilon":"1/2"})", "inf");
  CHECK(run_cli("solve " + infeasible).exit_code == 2);
  // check-empty reports the emptiness as data, not as a failure
  CliResult ce = run_cli("check-empty " + infeasible);
  CHECK(ce.exit_code == 0);
  Json cj = Json::parse(ce.out);
  CHECK(cj["status"] == "Empty");
  CHECK(cj["min_residual_sq"] == "1/1");
  std::remove(infeasible.c_str());

  // 3: too many split variables for the fixed enumeration cap
  std::string wide = temp_path("wide") + ".json";
  {
    Json j;
    j["m"] = 1;
    j["N"] = 13;
    Json row = Json::array();
    for (int i = 0; i < 13; ++i) row.push_back("1");
    j["A"] = Json::array({row});
    j["y"] = Json::array({"1"});
    j["epsilon"] = "1/2";
    spit(wide, j.dump());
  }
  CHECK(run_cli("solve " + wide).exit_code == 3);
  std::remove(wide.c_str());

  // 4: malformed input in all its forms
  std::string garbage = temp_path("garbage") + ".json";
  spit(garbage, "{ not json");
  CHECK(run_cli("solve " + garbage).exit_code == 4);
  std::remove(garbage.c_str());
  std::string square =
      write_instance(R"({"m":2,"N":2,"A":[["1","0"],["0","1"]],"y":["1","1"],"epsilon":"1/2"})",
                     "square");
  CHECK(run_cli("solve " + square).exit_code == 4);
  std::remove(square.c_str());
  CHECK(run_cli("solve /nonexistent/file.json").exit_code == 4);
  CHECK(run_cli("no-such-verb").exit_code == 4);
  CHECK(run_cli("solve").exit_code == 4);  // missing required argument
}

TEST_CASE("check-empty distance on a reachable set") {
  std::string path = write_instance(kSimpleInstance, "empty0");
  CliResult res = run_cli("check-empty " + path);
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["status"] == "Feasible");
  CHECK(j["min_residual_sq"] == "0/1");
  std::remove(path.c_str());
}

TEST_CASE("reduce emits the split program") {
  std::string path = write_instance(kSimpleInstance, "reduce");
  CliResult res = run_cli("reduce " + path);
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["variable_count"] == 4);
  CHECK(j["recover"]["kind"] == "real_split");
  CHECK(j["recover"]["n"] == 2);
  CHECK(j["feasible_set"][0].size() == 5);
  std::remove(path.c_str());
}

TEST_CASE("oracle brackets the solve objective") {
  std::string path = write_instance(kSimpleInstance, "oracle");
  CliResult res = run_cli("oracle " + path);
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["lower"] == "1/4");
  // tolerance flag tightens the bracket
  CliResult tight = run_cli("oracle --tolerance 1/100 " + path);
  CHECK(tight.exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("demo gap writes a file and prints the table") {
  std::string out = temp_path("gap") + ".json";
  CliResult res = run_cli("demo-gap --epsilon 1/2 --n 3 -o " + out);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("input_distance") != std::string::npos);
  CHECK(res.out.find("1/8") != std::string::npos);
  CHECK(res.out.find("conditions (a) and (b): hold") != std::string::npos);
  Json j = Json::parse(slurp(out));
  CHECK(j["kappa"] == "1/2");
  CHECK(j["conditions_a_b_hold"] == true);
  CHECK(j["records"].size() == 3);
  CHECK(j["records"][2]["input_distance"] == "1/8");
  std::remove(out.c_str());
  // epsilon domain errors map to 4
  CHECK(run_cli("demo-gap --epsilon 2 --n 3").exit_code == 4);
}

TEST_CASE("network compilation and machine runs round trip") {
  std::string net = temp_path("net") + ".json";
  spit(net, R"({"weights":[[["1"],["-1"]],[["1","1"]]],"biases":[["0","0"],["0"]]})");
  std::string prog = temp_path("prog") + ".json";
  CliResult comp = run_cli("compile-nn -o " + prog + " " + net);
  CHECK(comp.exit_code == 0);
  CliResult run = run_cli("run-bss --args -3 " + prog);
  CHECK(run.exit_code == 0);
  Json j = Json::parse(run.out);
  CHECK(j["status"] == "Halted");
  CHECK(j["output"][0] == "3/1");
  CHECK(j["counters"]["steps"] == 10);

  // budget exhaustion is reported as data with exit 0
  CliResult starved = run_cli("run-bss --args -3 --budget 3 " + prog);
  CHECK(starved.exit_code == 0);
  Json sj = Json::parse(starved.out);
  CHECK(sj["status"] == "BudgetExceeded");
  CHECK(!sj.contains("output"));
  CHECK(sj["counters"]["steps"] == 3);

  // the environment variable sets the budget, the flag overrides it
  CliResult env_starved = run_cli("run-bss --args -3 " + prog, "BSSBP_BUDGET=3 ");
  CHECK(Json::parse(env_starved.out)["status"] == "BudgetExceeded");
  CliResult flag_wins = run_cli("run-bss --args -3 --budget 100 " + prog, "BSSBP_BUDGET=3 ");
  CHECK(Json::parse(flag_wins.out)["status"] == "Halted");

  // trace goes to stderr, one line per step
  CliResult traced = run_cli("run-bss --args -3 --trace " + prog);
  CHECK(traced.exit_code == 0);
  CHECK(std::count(traced.err.begin(), traced.err.end(), '\n') == 10);
  CHECK(traced.err.find("\"node\":") != std::string::npos);
  CHECK(traced.err.find("\"counters\":") != std::string::npos);

  std::remove(net.c_str());
  std::remove(prog.c_str());
}

TEST_CASE("run-bss surfaces division by zero as data") {
  std::string prog = temp_path("div") + ".json";
  Json j;
  j["entry"] = 0;
  Json nodes = Json::array();
  nodes.push_back({{"id", 0}, {"kind", "Input"}, {"params", Json::object()}, {"successors", {1}}});
  Json expr = {{"op", "div"},
               {"left", {{"op", "const"}, {"value", "1/1"}}},
               {"right", {{"op", "cell"}, {"cell", 0}}}};
  nodes.push_back({{"id", 1},
                   {"kind", "Computation"},
                   {"params", {{"target", 1}, {"expr", expr}}},
                   {"successors", {2}}});
  nodes.push_back(
      {{"id", 2}, {"kind", "Output"}, {"params", {{"start", 1}, {"count", 1}}}, {"successors", Json::array()}});
  j["nodes"] = nodes;
  spit(prog, j.dump());
  CliResult ok = run_cli("run-bss --args 4 " + prog);
  CHECK(ok.exit_code == 0);
  CHECK(Json::parse(ok.out)["output"][0] == "1/4");
  CliResult div0 = run_cli("run-bss --args 0 " + prog);
  CHECK(div0.exit_code == 0);
  CHECK(Json::parse(div0.out)["status"] == "DivisionByZero");
  // malformed program file maps to 4
  std::string bad = temp_path("badprog") + ".json";
  spit(bad, R"({"entry":0,"nodes":[{"id":0,"kind":"Nope","successors":[]}]})");
  CHECK(run_cli("run-bss --args 1 " + bad).exit_code == 4);
  std::remove(prog.c_str());
  std::remove(bad.c_str());
}
