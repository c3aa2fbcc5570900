#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(EDDEG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("quartic command") {
  auto r = run("quartic --n 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("5z1^2z2^2+4z0z2^3+4z1^3z3+34z0z1z2z3+33z0^2z3^2") != std::string::npos);
  auto one = run("quartic --n 1 --format json");
  CHECK(one.status == 0);
  CHECK(nlohmann::json::parse(one.out)["results"][0]["quartic"] == "z0^2z1^2");
  CHECK(run("quartic --n 0").status != 0);
  CHECK(run("quartic").status != 0);
}

TEST_CASE("formula table as JSON round-trips") {
  auto r = run("table --max-n 7 --format json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
  const long ed[] = {2, 7, 20, 53, 162, 463, 1312};
  const long chi[] = {0, 8, -16, 56, -156, 468, -1304};
  REQUIRE(j["results"].size() == 7);
  for (int k = 0; k < 7; ++k) {
    CHECK(j["results"][k]["n"] == k + 1);
    CHECK(j["results"][k]["ed_formula"] == ed[k]);
    CHECK(j["results"][k]["chi_YHQ"] == chi[k]);
    CHECK_FALSE(j["results"][k].contains("ed_numeric"));
  }
  CHECK(run("table --max-n 7 --format json").out == r.out);
}

TEST_CASE("csv output") {
  auto r = run("--format csv table --max-n 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("n,chi_Y,", 0) == 0);
  CHECK(r.out.find("\n3,4,4,4,-16,20,,40,true") != std::string::npos);
}

TEST_CASE("numeric table") {
  auto r = run("table --max-n 3 --numeric --format json --seed 2");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  for (int k = 0; k < 3; ++k) CHECK(j["results"][k]["ed_numeric"] == j["results"][k]["ed_formula"]);
}

TEST_CASE("verify command") {
  for (int n : {2, 3, 4, 5}) {
    auto r = run("verify --n " + std::to_string(n));
    CAPTURE(n);
    CHECK(r.status == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
  }
}

TEST_CASE("config errors") {
  const std::string path = "eddeg_cli_bad.ini";
  {
    std::ofstream out(path);
    out << "[tracker]\nspeed = 3\n";
  }
  CHECK(run("--config " + path + " table --max-n 2").status == 2);
  {
    std::ofstream out(path);
    out << "[n4]\nchi_yhq = 60\n";
  }
  auto r = run("--config " + path + " --format json table --max-n 4");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["results"][3]["ed_formula"] == 57);
  std::remove(path.c_str());
}
