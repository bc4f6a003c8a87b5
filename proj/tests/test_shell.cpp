#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "mcw/catalog.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  const std::string out_path = "shell_stdout.txt";
  const std::string err_path = "shell_stderr.txt";
  std::string cmd = std::string("'") + MCW_CLI_PATH + "' " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool python_schema_available() {
  static int cached = -1;
  if (cached < 0) {
    int status = std::system("python3 -c 'import json, jsonschema' >/dev/null 2>&1");
    cached = (WIFEXITED(status) && WEXITSTATUS(status) == 0) ? 1 : 0;
  }
  return cached == 1;
}

// Validates against the published schema when python3+jsonschema exist;
// structural spot checks below cover the rest either way.
void check_schema(const std::string& doc_path) {
  if (!python_schema_available()) return;
  std::string cmd =
      "python3 -c 'import json, sys, jsonschema; "
      "jsonschema.validate(json.load(open(sys.argv[1])), json.load(open(sys.argv[2])))' '" +
      doc_path + "' '" MCW_SCHEMA_PATH "' >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
}

}  // namespace

TEST_CASE("word info prints the tree summary") {
  CliResult r = run_cli("word info '[x1,x2,x3,x4]'");
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "check: word-info\n"
        "word: [[[x1,x2],x3],x4]\n"
        "height: 3\n"
        "leaves: 4\n"
        "vertices: 7\n"
        "defect: 8\n"
        "full_tree: no\n"
        "sections: 4\n"
        "verdict: pass\n\n");
  CliResult shortcut = run_cli("word info gamma4");
  CHECK(shortcut.code == 0);
  CHECK(shortcut.out == r.out);
  CliResult delta = run_cli("word info delta2");
  CHECK(delta.code == 0);
  CHECK(delta.out.find("word: [[x1,x2],[x3,x4]]\n") != std::string::npos);
  CHECK(delta.out.find("defect: 0\n") != std::string::npos);
  CHECK(delta.out.find("full_tree: yes\n") != std::string::npos);
}

TEST_CASE("word dot renders the tree") {
  const std::string golden =
      "digraph word {\n"
      "  node [shape=box];\n"
      "  n0 [label=\"[[x1,x2],x3]\"];\n"
      "  n1 [label=\"[x1,x2]\"];\n"
      "  n2 [label=\"x1\"];\n"
      "  n3 [label=\"x2\"];\n"
      "  n4 [label=\"x3\"];\n"
      "  n1 -> n0;\n"
      "  n2 -> n1;\n"
      "  n3 -> n1;\n"
      "  n4 -> n0;\n"
      "}\n";
  CliResult r = run_cli("word dot gamma3");
  CHECK(r.code == 0);
  CHECK(r.out == golden);
  CliResult to_file = run_cli("word dot gamma3 --dot shell_tree.dot");
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp("shell_tree.dot") == golden);
  std::remove("shell_tree.dot");
}

TEST_CASE("group info prints classification and invariants") {
  CliResult r = run_cli("group info 'SL(2,3)'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check: group-info\n"
        "group: SL(2,3)\n"
        "order: 24\n"
        "degree: 8\n"
        "generators: 2\n"
        "nilpotent: no\n"
        "soluble: yes\n"
        "metanilpotent: yes\n"
        "perfect: no\n"
        "simple: no\n"
        "derived_length: 3\n"
        "fitting_height: 2\n"
        "nonsoluble_length: 0\n"
        "min_generators: 2\n"
        "rank: 2\n"
        "verdict: pass\n\n");
}

TEST_CASE("group info accepts a group file path") {
  {
    std::ofstream out("shell_group.txt");
    out << mcw::group_to_text(mcw::quaternion_group());
  }
  CliResult r = run_cli("group info shell_group.txt");
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 8\n") != std::string::npos);
  CHECK(r.out.find("nilpotent: yes\n") != std::string::npos);
  std::remove("shell_group.txt");
}

TEST_CASE("verbal compute") {
  CliResult r = run_cli("verbal compute --group Q8 --word '[x1,x2]'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check: verbal\n"
        "group: Q8\n"
        "word: [x1,x2]\n"
        "mode: exhaustive\n"
        "group_order: 8\n"
        "subgroup_order: 2\n"
        "index: 4\n"
        "verified: yes\n"
        "verdict: pass\n\n");
  CliResult sampled = run_cli("verbal compute --group Q8 --word gamma2 --sampled --seed 7 --draws 64");
  CHECK(sampled.code == 0);
  CHECK(sampled.out.find("mode: sampled\n") != std::string::npos);
  CHECK(sampled.out.find("verified: no\n") != std::string::npos);
}

TEST_CASE("check focal matches the library report") {
  CliResult r = run_cli("check focal --group S4 --word '[x1,x2]' --prime 2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check: focal\n"
        "group: order 24 on 4 points\n"
        "word: [x1,x2]\n"
        "prime: 2\n"
        "sylow_order: 8\n"
        "verbal_order: 12\n"
        "intersection_order: 4\n"
        "generated_order: 4\n"
        "verdict: pass\n\n");
}

TEST_CASE("counterexample frobenius") {
  CliResult r = run_cli("counterexample frobenius --p 3 --m 1 --n 3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check: frobenius\n"
        "p: 3\n"
        "m: 1\n"
        "n: 3\n"
        "order: 6\n"
        "kernel_order: 3\n"
        "complement_order: 2\n"
        "frobenius: true\n"
        "kernel_power_order: 1\n"
        "complement_power_order: 2\n"
        "group_power_order: 6\n"
        "power_value_count: 4\n"
        "nilpotent_family_size: 4\n"
        "all_cyclic: true\n"
        "kernel_rank: 1\n"
        "verdict: pass\n\n");
}

TEST_CASE("multi-report commands end with a counts footer") {
  CliResult r = run_cli("check section --group S4 --word gamma3");
  CHECK(r.code == 0);
  CHECK(r.out.find("pass: 3\nfail: 0\nskipped: 0\n") != std::string::npos);
  CliResult leveled = run_cli("check section --group S4 --word gamma3 --level 0");
  CHECK(leveled.code == 0);
  CHECK(leveled.out.find("section: L R\n") != std::string::npos);
  CHECK(leveled.out.find("pass: 3") == std::string::npos);
}

TEST_CASE("exit codes distinguish usage, runtime and verdicts") {
  CHECK(run_cli("word bogus").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);

  CliResult parse = run_cli("word info '[x1,'");
  CHECK(parse.code == 2);
  CHECK(parse.err.rfind("usage error: cannot parse word", 0) == 0);

  CliResult level = run_cli("check section --group S4 --word gamma3 --level 7");
  CHECK(level.code == 2);
  CHECK(level.err.rfind("usage error:", 0) == 0);

  CliResult runtime = run_cli("counterexample frobenius --p 4 --m 1 --n 4");
  CHECK(runtime.code == 1);
  CHECK(runtime.err == "error: kernel prime must be prime\n");

  CliResult prime = run_cli("check focal --group S4 --word gamma2 --prime 6");
  CHECK(prime.code == 1);
  CHECK(prime.err == "error: focal check needs a prime\n");

  CliResult missing = run_cli("group info no_such_group_file.txt");
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("usage error: cannot resolve group ", 0) == 0);
}

TEST_CASE("json documents are written next to the text output") {
  CliResult r = run_cli("check focal --group S4 --word gamma2 --prime 2 --json shell_doc.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: pass\n") != std::string::npos);
  nlohmann::json doc = nlohmann::json::parse(slurp("shell_doc.json"));
  CHECK(doc["counts"]["total"] == 1);
  CHECK(doc["counts"]["pass"] == 1);
  CHECK(doc["counts"]["fail"] == 0);
  CHECK(doc["counts"]["skipped"] == 0);
  CHECK(doc["reports"][0]["check"] == "focal");
  CHECK(doc["reports"][0]["inputs"]["prime"] == "2");
  CHECK(doc["reports"][0]["quantities"]["sylow_order"] == "8");
  CHECK(doc["reports"][0]["verdict"] == "pass");
  CHECK(!doc["reports"][0].contains("millis"));
  check_schema("shell_doc.json");
  std::remove("shell_doc.json");

  CliResult timed =
      run_cli("check section --group S4 --word gamma3 --timings --json shell_doc2.json");
  CHECK(timed.code == 0);
  CHECK(timed.out.find("millis: ") != std::string::npos);
  nlohmann::json doc2 = nlohmann::json::parse(slurp("shell_doc2.json"));
  CHECK(doc2["reports"].size() == 3);
  CHECK(doc2["reports"][0].contains("millis"));
  check_schema("shell_doc2.json");
  std::remove("shell_doc2.json");
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string cmd = "check rank --group S4 --word gamma2 --json shell_det.json";
  CliResult a = run_cli(cmd);
  std::string doc_a = slurp("shell_det.json");
  CliResult b = run_cli(cmd);
  std::string doc_b = slurp("shell_det.json");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(!doc_a.empty());
  CHECK(doc_a == doc_b);
  std::remove("shell_det.json");
}
