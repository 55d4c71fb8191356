#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HOLOCOUNT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("compute emits a schema-1 JSON report and exit code 0") {
  auto r = run_cli("compute cyclic:6 cyclic:6 --workers 1");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["e"] == 1);
  CHECK(j["reg_count"] == 2);
  CHECK(j["classification"]["rho"] == 1);
  CHECK(j["authoritative"] == true);
}

TEST_CASE("order mismatch and bad specs exit 1 with a diagnostic") {
  auto r = run_cli("compute cyclic:4 cyclic:6");
  CHECK(r.exitCode == 1);
  CHECK(r.out.find("order mismatch") != std::string::npos);
  auto r2 = run_cli("compute nope:1 nope:1");
  CHECK(r2.exitCode == 1);
  CHECK(r2.out.find("error") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2 and flags the report") {
  auto r = run_cli(
      "compute abelian:2,2,2 abelian:2,2,2 --budget 0.000001 --workers 1");
  CHECK(r.exitCode == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["authoritative"] == false);
}

TEST_CASE("csv and text formats") {
  auto r = run_cli("compute cyclic:6 sym:3 --format csv");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("schema,g,n,reg_count") != std::string::npos);
  CHECK(r.out.find("cyclic:6,sym:3") != std::string::npos);
  auto r2 = run_cli("compute cyclic:6 sym:3 --format text");
  CHECK(r2.exitCode == 0);
  CHECK(r2.out.find("e(cyclic:6, sym:3)") != std::string::npos);
}

TEST_CASE("catalog lists specs with completeness flags") {
  auto r = run_cli("catalog 27");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("complete: true") != std::string::npos);
  CHECK(r.out.find("heis:3") != std::string::npos);
  CHECK(r.out.find("c9xc3semi") != std::string::npos);
  auto r2 = run_cli("catalog 120");
  CHECK(r2.out.find("complete: false") != std::string::npos);
  CHECK(r2.out.find("sl2:5") != std::string::npos);
}

TEST_CASE("sweep over one order") {
  auto r = run_cli("sweep 4 --workers 1");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);  // 2x2 catalog pairs
  for (auto& rep : j) CHECK(rep["authoritative"] == true);
}

TEST_CASE("external table files join the catalog") {
  const char* path = "/tmp/holocount_cli_c3.tbl";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  auto r = run_cli(std::string("compute file:") + path +
                   " cyclic:3 --table " + path + " --format text");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("= 1") != std::string::npos);
  auto r2 = run_cli(std::string("sweep 3 --table ") + path + " --workers 1");
  CHECK(r2.exitCode == 0);
  auto j = nlohmann::json::parse(r2.out);
  CHECK(j.size() == 4);  // (cyclic:3 + file group)^2
  std::remove(path);
}

TEST_CASE("identical runs give identical JSON apart from elapsed_ms") {
  auto a = run_cli("compute quaternion:8 dihedral:4 --workers 1");
  auto b = run_cli("compute quaternion:8 dihedral:4 --workers 4");
  REQUIRE(a.exitCode == 0);
  REQUIRE(b.exitCode == 0);
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja["elapsed_ms"] = 0;
  jb["elapsed_ms"] = 0;
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("verify runs a fast suite end to end") {
  auto r = run_cli("verify cyclic-pn --workers 2");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  auto r2 = run_cli("verify no-such-suite");
  CHECK(r2.exitCode == 1);
}

TEST_CASE("automorphism cache is reused across processes") {
  const char* dir = "/tmp/holocount_cli_cache";
  std::string env = std::string("HOLOCOUNT_CACHE_DIR=") + dir + " ";
  std::system(("rm -rf " + std::string(dir) + " && mkdir -p " + dir).c_str());
  auto r1 = run_cli("compute cyclic:12 cyclic:12 --workers 1");
  (void)r1;
  RunResult warm, cold;
  {
    std::string cmd = env + std::string(HOLOCOUNT_CLI_PATH) +
                      " compute cyclic:12 cyclic:12 --workers 1 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
      cold.out.append(buf.data(), got);
    cold.exitCode = WEXITSTATUS(pclose(p));
    p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
      warm.out.append(buf.data(), got);
    warm.exitCode = WEXITSTATUS(pclose(p));
  }
  CHECK(cold.exitCode == 0);
  CHECK(warm.exitCode == 0);
  auto jc = nlohmann::json::parse(cold.out);
  auto jw = nlohmann::json::parse(warm.out);
  jc["elapsed_ms"] = 0;
  jw["elapsed_ms"] = 0;
  CHECK(jc.dump() == jw.dump());
  std::system(("ls " + std::string(dir) + "/aut_*.bin >/dev/null").c_str());
  std::system(("rm -rf " + std::string(dir)).c_str());
}
