// End-to-end checks of the command-line tool. argv[1] is the path to the
// binary; commands run through the shell with stderr folded into stdout.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sext/cayley_io.hpp"

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) return;
  ++g_failures;
  std::fprintf(stderr, "[FAIL] %s\n", what.c_str());
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
    return 2;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "sext_cli_tests";
  fs::create_directories(tmp);

  {
    // table output is a parseable .cay with family-literal labels
    RunResult r = run(bin + " build --expr C3 --ext lambda --out table");
    expect(r.code == 0, "build table exit code");
    std::istringstream in(r.out);
    try {
      sext::FiniteSemigroup s = sext::parse_cayley(in);
      expect(s.order() == 4, "extension of the 3-cycle has 4 elements");
      expect(s.label(0) == "{{0}}", "first label is the first point family");
      expect(s.label(3) == "{{0,1},{0,2},{1,2}}", "last label is the triangle");
      bool zero_row = true;
      for (int j = 0; j < 4; ++j) zero_row = zero_row && s.mul(3, j) == 3;
      expect(zero_row, "triangle row is constant");
    } catch (const std::exception& e) {
      expect(false, std::string("table output failed to parse: ") + e.what());
    }
  }
  {
    RunResult r = run(bin + " build --expr C3 --ext lambda --out elements");
    expect(r.code == 0, "build elements exit code");
    std::istringstream in(r.out);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    expect(lines.size() == 4, "one line per element");
    expect(!lines.empty() && lines.front() == "{{0}}" &&
               lines.back() == "{{0,1},{0,2},{1,2}}",
           "element lines are the canonical literals in order");
  }
  {
    RunResult r = run(bin + " build --expr \"L1 + C2\" --ext phi --json");
    expect(r.code == 0, "build json exit code");
    try {
      auto j = nlohmann::json::parse(r.out);
      expect(j.at("order") == 7, "filter extension order in json");
      expect(j.at("elements").size() == 7, "element list size in json");
      std::istringstream cay(j.at("cay").get<std::string>());
      expect(sext::parse_cayley(cay).order() == 7, "embedded table parses");
    } catch (const std::exception& e) {
      expect(false, std::string("build json unparseable: ") + e.what());
    }
  }

  {
    RunResult r = run(bin + " check --expr \"L1 + C2\" --props inverse");
    expect(r.code == 0 && contains(r.out, "inverse = true"),
           "base semigroup reported inverse");
  }
  {
    RunResult r =
        run(bin + " check --expr \"L1 + C2\" --ext n2 --props inverse");
    expect(r.code == 0 && contains(r.out, "inverse = false"),
           "linked-family extension reported non-inverse");
  }
  {
    RunResult r = run(bin + " check --expr V --json");
    try {
      auto j = nlohmann::json::parse(r.out);
      expect(r.code == 0 && j.at("properties").at("semilattice") == true,
             "two-generator semilattice classified via json");
      expect(j.at("properties").at("linear") == false,
             "branching idempotents are not a chain");
    } catch (const std::exception& e) {
      expect(false, std::string("check json unparseable: ") + e.what());
    }
  }

  {
    RunResult r = run(bin + " verify --theorem t1n --catalog exhaustive:2");
    expect(r.code == 0, "verify exit code");
    expect(contains(r.out, "satisfier"), "verify text mentions satisfiers");
  }
  {
    RunResult r =
        run(bin + " verify --theorem t1n --catalog exhaustive:2 --json");
    try {
      auto j = nlohmann::json::parse(r.out);
      expect(j.at("all_equivalent") == true, "verify json equivalence flag");
      std::vector<std::string> fams =
          j.at("satisfiers").at("families").get<std::vector<std::string>>();
      expect(fams == std::vector<std::string>({"C2", "L1", "L2"}),
             "verify json family list");
    } catch (const std::exception& e) {
      expect(false, std::string("verify json unparseable: ") + e.what());
    }
  }

  {
    RunResult r = run(bin + " iso C4 \"C(4)\"");
    expect(r.code == 0 && contains(r.out, "->"), "identical groups match");
  }
  {
    RunResult r = run(bin + " iso C4 C2xC2");
    expect(r.code == 1 && contains(r.out, "not isomorphic"),
           "distinct groups rejected");
  }
  {
    // a pair that is only anti-isomorphic, via .cay files
    fs::path a = tmp / "lz.cay", b = tmp / "rz.cay";
    std::ofstream(a) << "2\n0 0\n1 1\n";
    std::ofstream(b) << "2\n0 1\n0 1\n";
    std::string fa = "\"" + a.string() + "\"", fb = "\"" + b.string() + "\"";
    RunResult plain = run(bin + " iso " + fa + " " + fb);
    expect(plain.code == 1, "constant-row vs constant-column tables differ");
    RunResult anti = run(bin + " iso --anti " + fa + " " + fb);
    expect(anti.code == 0, "they match after reversing one product");
  }

  {
    RunResult r = run(bin + " enumerate --n 3 --class maximal-linked");
    std::istringstream in(r.out);
    int lines = 0;
    for (std::string l; std::getline(in, l);) ++lines;
    expect(r.code == 0 && lines == 4, "four maximal linked families on 3");
  }
  {
    RunResult r = run(bin + " enumerate --n 5 --class upfamily --json");
    expect(r.code == 2 && contains(r.out, "cap"),
           "dense listing beyond the default cap is rejected");
  }
  {
    RunResult r = run("SEXT_CAP_ENUM_DENSE=5 " + bin +
                      " enumerate --n 5 --class upfamily --json");
    try {
      auto j = nlohmann::json::parse(r.out);
      expect(r.code == 0 && j.at("count") == 7579,
             "raised cap lists all upfamilies on 5 points");
    } catch (const std::exception& e) {
      expect(false, std::string("enumerate json unparseable: ") + e.what());
    }
  }
  {
    RunResult r = run("SEXT_CAP_UPSILON=3 " + bin +
                      " build --expr C2xC2 --ext upsilon");
    expect(r.code == 2 && contains(r.out, "cap"),
           "lowered build cap rejects the order-4 base");
  }
  {
    RunResult r = run("SEXT_CAP_UPSILON=banana " + bin +
                      " build --expr C2 --ext upsilon");
    expect(r.code == 2 && contains(r.out, "SEXT_CAP_UPSILON"),
           "malformed cap value is an input error");
  }

  {
    RunResult r = run(bin + " catalog --max-order 2 --json");
    try {
      auto j = nlohmann::json::parse(r.out);
      expect(r.code == 0 && j.at("count") == 6,
             "six semigroups through order 2");
    } catch (const std::exception& e) {
      expect(false, std::string("catalog json unparseable: ") + e.what());
    }
  }

  {
    RunResult r = run(bin + " spotcheck");
    expect(r.code == 0 && contains(r.out, "all spot checks pass"),
           "spot checks all green");
  }

  {
    RunResult a = run(bin + " verify --theorem t1l --catalog default --json");
    RunResult b = run(bin + " verify --theorem t1l --catalog default --json");
    expect(a.code == 0 && a.out == b.out, "verify output is byte-stable");
    RunResult c = run(bin + " spotcheck --json");
    RunResult d = run(bin + " spotcheck --json");
    expect(c.code == 0 && c.out == d.out, "spotcheck output is byte-stable");
  }

  {
    RunResult r = run(bin + " check --expr Q9");
    expect(r.code == 2, "unknown constructor is an input error");
  }
  {
    RunResult r = run(bin + " check");
    expect(r.code == 2, "missing input is an input error");
  }
  {
    fs::path bad = tmp / "bad.cay";
    std::ofstream(bad) << "2\n1 0\n0 0\n";
    RunResult r = run(bin + " check --in \"" + bad.string() + "\"");
    expect(r.code == 2 && contains(r.out, "(0,0,1)"),
           "non-associative table rejected with its witness triple");
  }
  {
    RunResult r = run(bin + " verify --theorem t9z");
    expect(r.code == 2, "unknown statement id is an input error");
  }

  std::error_code ec;
  fs::remove_all(tmp, ec);

  if (g_failures == 0) {
    std::printf("cli tests: all passed\n");
    return 0;
  }
  std::printf("cli tests: %d failure(s)\n", g_failures);
  return 1;
}
