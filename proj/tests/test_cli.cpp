/* revtk: a reversible-logic circuit toolkit
 * SPDX-License-Identifier: MIT
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct cli_result {
  int status = -1;
  std::string output; // stdout + stderr
};

cli_result run_cli(const std::string& args) {
  const std::string command = std::string(REVTK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  cli_result result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

fs::path work_dir() {
  const auto dir = fs::temp_directory_path() / "revtk_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string canon_file(const std::string& name) {
  const auto path = (work_dir() / (name + ".nl")).string();
  const auto result = run_cli("canon " + name + " -o " + path);
  REQUIRE(result.status == 0);
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("gates lists the catalog") {
  const auto result = run_cli("gates");
  CHECK(result.status == 0);
  CHECK(contains(result.output, "FEYNMAN width=2 quantum_cost=1"));
  CHECK(contains(result.output, "MUX width=3 quantum_cost=4"));
  CHECK(contains(result.output, "parity_preserving=true"));
}

TEST_CASE("metrics on the bundled full subtractor") {
  const auto result = run_cli("metrics " + canon_file("PP_FULL_SUB"));
  CHECK(result.status == 0);
  for (const char* line : {"quantum_cost = 10", "garbage_outputs = 4", "constant_inputs = 1",
                           "tlc_xor = 9", "tlc_and = 2", "tlc_not = 1"}) {
    CAPTURE(line);
    CHECK(contains(result.output, line));
  }
}

TEST_CASE("metrics respects --tr-cost") {
  const auto result = run_cli("--tr-cost 9 metrics " + canon_file("FULL_ADDSUB_R"));
  CHECK(result.status == 0);
  CHECK(contains(result.output, "quantum_cost = 22"));
  CHECK(contains(result.output, "quantum_cost_symbolic = 2m+5F+1TR"));
}

TEST_CASE("verify exit codes carry the verdict") {
  const auto file = canon_file("PP_HALF_SUB");
  const auto good = run_cli("verify --spec HALF_SUB " + file);
  CHECK(good.status == 0);
  CHECK(contains(good.output, "equivalence = true"));

  const auto bad = run_cli("verify --spec HALF_ADDER " + file);
  CHECK(bad.status == 2); // Sum/Carry labels do not bind to Diff/Borrow
}

TEST_CASE("simulate prints outputs and garbage lines") {
  const auto result = run_cli("simulate -i A=1,B=1,C=0 " + canon_file("PP_FULL_SUB"));
  CHECK(result.status == 0);
  CHECK(contains(result.output, "Diff = 0"));
  CHECK(contains(result.output, "Borr = 0"));
  CHECK(contains(result.output, "garbage line 1 ="));
}

TEST_CASE("simulate rejects bad bindings") {
  const auto result = run_cli("simulate -i A=1 " + canon_file("PP_HALF_SUB"));
  CHECK(result.status == 2);
  CHECK(contains(result.output, "error:"));
}

TEST_CASE("table output is deterministic") {
  const auto file = canon_file("PP_HALF_SUB");
  const auto first = run_cli("table " + file);
  const auto second = run_cli("table " + file);
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
  CHECK(contains(first.output, "00 -> 00"));
  CHECK(contains(first.output, "# outputs: Diff Borrow"));

  const auto all = run_cli("table --over all " + file);
  CHECK(all.status == 0);
  CHECK(contains(all.output, "0000 -> 0000"));
}

TEST_CASE("parity reports both verdicts") {
  const auto result = run_cli("parity " + canon_file("PP_HALF_SUB"));
  CHECK(result.status == 1); // not parity preserving
  CHECK(contains(result.output, "parity_strict = false"));
  CHECK(contains(result.output, "parity_free_inputs = false"));
  CHECK(contains(result.output, "strict_witness ="));
}

TEST_CASE("compare emits the full table in both formats") {
  const auto text = run_cli("compare");
  CHECK(text.status == 0);
  for (const char* needle :
       {"circuit = HALF_ADDSUB_R", "baseline_quantum_cost = 12", "delta_quantum_cost = -2",
        "circuit = PP_FULL_SUB", "baseline_quantum_cost_symbolic = 1fr+3D",
        "note = reconstructed, functionally verified"}) {
    CAPTURE(needle);
    CHECK(contains(text.output, needle));
  }
  const auto again = run_cli("compare");
  CHECK(text.output == again.output);

  const auto csv = run_cli("compare --format csv");
  CHECK(csv.status == 0);
  CHECK(contains(csv.output, "PP_FULL_SUB,10,1m+3D,4,4,1,9,2,1,false,false,true,11,1fr+3D"));
}

TEST_CASE("search writes deterministic candidates") {
  const auto dir = work_dir();
  const auto constraints = (dir / "constraints.txt").string();
  {
    std::ofstream out(constraints);
    out << "inventory MUX 1\nlines 3 3\nconst0 1 1\ntarget HALF_SUB\n";
  }
  const auto out1 = (dir / "out1").string();
  const auto out2 = (dir / "out2").string();
  const auto first = run_cli("search " + constraints + " -o " + out1 + " -j 1");
  const auto second = run_cli("search " + constraints + " -o " + out2 + " -j 3");
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
  CHECK(contains(first.output, "candidates = 1"));
  CHECK(contains(first.output, "exhausted = true"));

  std::ifstream c1(fs::path(out1) / "candidate_000.nl");
  std::ifstream c2(fs::path(out2) / "candidate_000.nl");
  REQUIRE(c1.good());
  REQUIRE(c2.good());
  const std::string t1((std::istreambuf_iterator<char>(c1)), std::istreambuf_iterator<char>());
  const std::string t2((std::istreambuf_iterator<char>(c2)), std::istreambuf_iterator<char>());
  CHECK(t1 == t2);
  CHECK(contains(t1, "gate MUX 1 2 3"));
}

TEST_CASE("search reports an infeasible inventory with status 1") {
  const auto dir = work_dir();
  const auto constraints = (dir / "infeasible.txt").string();
  {
    std::ofstream out(constraints);
    out << "inventory FEYNMAN 1\nlines 3 3\nconst0 1 1\ntarget HALF_SUB\n";
  }
  const auto result = run_cli("search " + constraints);
  CHECK(result.status == 1);
  CHECK(contains(result.output, "candidates = 0"));
  CHECK(contains(result.output, "exhausted = true"));
}

TEST_CASE("canon round-trips through parse and serialize") {
  const auto path = canon_file("HALF_ADDSUB_R");
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contains(text, "circuit HALF_ADDSUB_R"));
  CHECK(contains(text, "output 2 SD"));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("bogus").status == 2);
  CHECK(run_cli("metrics /nonexistent.nl").status == 2);
  CHECK(run_cli("canon NO_SUCH_CIRCUIT").status == 2);
  CHECK(run_cli("verify --spec NO_SUCH_SPEC " + canon_file("PP_HALF_SUB")).status == 2);
  const auto dir = work_dir();
  const auto bad = (dir / "bad.nl").string();
  {
    std::ofstream out(bad);
    out << "circuit t\nlines 2\nline 1 input A\ngate MUX 1 2 9\n";
  }
  const auto result = run_cli("metrics " + bad);
  CHECK(result.status == 2);
  CHECK(contains(result.output, "error:"));
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").status == 0);
}
