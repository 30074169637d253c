#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quivloc/cli.hpp"

using namespace quivloc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result runArgs(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = runCommandLine(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (fs::path(QUIVLOC_TEST_FIXTURES) / name).string(); }

fs::path scratch(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / ("quivloc_test_" + name);
  std::ofstream(p) << content;
  return p;
}

std::size_t countLines(const std::string& s, const std::string& prefix) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("fixed-points of the 3-Kronecker quiver") {
  auto r = runArgs({"fixed-points", fixture("kronecker3.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("fixed components: 13 (13 isolated)\n", 0) == 0);
  CHECK(countLines(r.out, "1: (i;0)^2") == 1);
}

TEST_CASE("toric trees of K(2,3)") {
  auto r = runArgs({"toric-gkm", "trees", fixture("k23.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("stable spanning trees: 6\n", 0) == 0);
  CHECK(r.out.find("1: {11,12,21,32} | complement x_22,x_31\n") != std::string::npos);
  auto machine = runArgs({"toric-gkm", "trees", fixture("k23.json"), "--format", "machine"});
  CHECK(countLines(machine.out, "tree ") == 6);
}

TEST_CASE("present reports graded dimensions") {
  auto r = runArgs({"present", fixture("p1.json"), "--max-degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graded quotient dimensions: 1 4 9 16\n") != std::string::npos);
  CHECK(runArgs({"present", fixture("p1.json")}).code == 2);
  CHECK(runArgs({"present", fixture("p1.json"), "--max-degree", "2", "--mode", "both"}).code == 2);
}

TEST_CASE("localize prints z tuples and constants") {
  auto r = runArgs({"localize", fixture("p2.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("z[i,j;1,1] = (x_0, x_1, x_2)\n") != std::string::npos);
  CHECK(r.out.find("x_2 = (x_2, x_2, x_2)\n") != std::string::npos);
  auto latex = runArgs({"localize", fixture("p1.json"), "--latex"});
  CHECK(latex.out.find("\\begin{pmatrix} x_{0} \\\\ x_{1} \\end{pmatrix}") != std::string::npos);
}

TEST_CASE("malformed input exits with 2") {
  auto bad = scratch("bad.json", "{\"vertices\": [\"i\"], \"arrows\": [");
  auto r = runArgs({"fixed-points", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(runArgs({"fixed-points", "/nonexistent/quiver.json"}).code == 2);
  CHECK(runArgs({"no-such-command"}).code == 2);
  CHECK(runArgs({}).code == 2);
}

TEST_CASE("unnormalized theta is a domain error") {
  std::ifstream in(fixture("p1.json"));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto pos = text.find("\"j\": -1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 7, "\"j\": 0");
  auto path = scratch("unnormalized.json", text);
  auto r = runArgs({"toric-gkm", "trees", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("theta(1) must be 0") != std::string::npos);
}

TEST_CASE("check command") {
  auto member = scratch("member.tuples", "# constant\n1: 1\n2: 1\n3: 1\n4: 1\n5: 1\n6: 1\n");
  auto r = runArgs({"toric-gkm", "check", fixture("k23.json"), member.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "in image: yes\n");

  auto corrupt = scratch("corrupt.tuples", "1: x_31\n2: 0\n3: 0\n4: 0\n5: 0\n6: 0\n");
  auto c = runArgs({"toric-gkm", "check", fixture("k23.json"), corrupt.string()});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("in image: no\n", 0) == 0);
  CHECK(countLines(c.out, "violation: ") == 1);

  auto missing = scratch("missing.tuples", "1: 1\n2: 1\n");
  CHECK(runArgs({"toric-gkm", "check", fixture("k23.json"), missing.string()}).code == 2);
  auto garbage = scratch("garbage.tuples", "1: x_99\n2: 0\n3: 0\n4: 0\n5: 0\n6: 0\n");
  CHECK(runArgs({"toric-gkm", "check", fixture("k23.json"), garbage.string()}).code == 2);
}

TEST_CASE("output does not depend on the thread count") {
  std::vector<std::vector<std::string>> jobs{{"localize", fixture("kronecker3.json")},
                                             {"present", fixture("p2.json"), "--max-degree", "3"},
                                             {"toric-gkm", "basis", fixture("k23.json"), "--max-degree", "2"}};
  for (const auto& job : jobs) {
    setenv("QUIVLOC_THREADS", "1", 1);
    auto one = runArgs(job);
    setenv("QUIVLOC_THREADS", "4", 1);
    auto four = runArgs(job);
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
  }
  unsetenv("QUIVLOC_THREADS");
}

TEST_CASE("verify-examples replays the golden cases") {
  auto r = runArgs({"verify-examples", QUIVLOC_TEST_FIXTURES});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(runArgs({"verify-examples", "/nonexistent"}).code == 2);
}
