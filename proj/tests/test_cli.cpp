#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "covnum_test_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

Run run(const std::string& args) {
  const auto capture = scratch_dir() / "stdout.txt";
  const std::string command = std::string(COVNUM_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
  const int status = std::system(command.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::stringstream text;
  text << in.rdbuf();
  r.out = text.str();
  return r;
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("inventory") {
  const auto s8 = run("inventory S8");
  CHECK(s8.code == 0);
  CHECK(contains(s8.out, "MS6\tS4 wr S2\t1152\t35"));
  CHECK(contains(s8.out, "erratum  (6) size"));
  CHECK(contains(s8.out, "all checks pass"));

  const auto s10 = run("inventory S10");
  CHECK(s10.code == 0);
  CHECK(contains(s10.out, "erratum  (2,6) x MS3"));

  const auto json = run("inventory M12 --format json");
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["passed"] == true);
  CHECK(j["classes"].size() == 11);
  CHECK(j["inventory_diff"].empty());

  const auto dir = scratch_dir() / "tables";
  CHECK(run("inventory S9 --out " + dir.string()).code == 0);
  CHECK(std::filesystem::exists(dir / "S9-classes.tsv"));
  CHECK(std::filesystem::exists(dir / "S9-inventory.tsv"));
  CHECK(std::filesystem::exists(dir / "S9-inventory.json"));
}

TEST_CASE("lp") {
  const auto path = scratch_dir() / "s9.lp";
  const auto r = run("lp S9 --type 3,6 --classes MS3,MS6,MS7 --out " + path.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rows 10080\tcolumns 1204\tnonzeros 80640"));
  const auto same = run("lp S9:3,6:MS3,MS6,MS7 --format json --out " + path.string());
  const auto j = nlohmann::json::parse(same.out);
  CHECK(j["nonzeros"] == 80640);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "Minimize");

  // one partitioning class: nonzeros equal rows
  const auto single = run("lp S8:8:MS6 --format json --out " + (scratch_dir() / "s8.lp").string());
  const auto s = nlohmann::json::parse(single.out);
  CHECK(s["nonzeros"] == s["rows"]);
}

TEST_CASE("solve") {
  const auto ekr = run("solve EKR");
  CHECK(ekr.code == 0);
  CHECK(ekr.out == "optimal 84\n");

  const auto s9 = run("solve S9:3,6:MS3,MS6,MS7 --nodes 200 --seconds 5");
  CHECK(s9.code == 3);
  CHECK(s9.out == "bounds [70, 84]\n");

  const auto part = run("solve S8:8:MS6 --format json");
  CHECK(part.code == 0);
  const auto j = nlohmann::json::parse(part.out);
  CHECK(j["status"] == "optimal");
  CHECK(j["upper"] == 35);
}

TEST_CASE("verify") {
  const auto good = scratch_dir() / "ms3.txt";
  const auto bad = scratch_dir() / "ms3-short.txt";
  {
    std::ofstream g(good), b(bad);
    for (int i = 1; i <= 84; ++i) {
      g << "MS3#" << i << '\n';
      if (i < 84) b << "MS3#" << i << '\n';
    }
  }
  const auto ok = run("verify S9:3,6:MS3,MS6,MS7 " + good.string());
  CHECK(ok.code == 0);
  CHECK(ok.out == "covers with 84 sets\n");
  const auto miss = run("verify S9:3,6:MS3,MS6,MS7 " + bad.string());
  CHECK(miss.code == 2);
  CHECK(contains(miss.out, "does not cover"));
  const auto unknown = scratch_dir() / "unknown.txt";
  std::ofstream(unknown) << "MS9#1\n";
  CHECK(run("verify S9:3,6:MS3,MS6,MS7 " + unknown.string()).code == 4);
}

TEST_CASE("theorem") {
  const auto s8 = run("theorem S8");
  CHECK(s8.code == 0);
  CHECK(contains(s8.out, "sigma(S8) = 64  evidence: complete"));

  const auto s12 = run("theorem S12 --format json");
  CHECK(s12.code == 0);
  CHECK(nlohmann::json::parse(s12.out)["sigma"] == 761);

  const auto s9 = run("theorem S9 --budget 0");
  CHECK(s9.code == 3);
  CHECK(contains(s9.out, "conditional s9.3-6-optimum"));
  CHECK(contains(s9.out, ", 256]  evidence: interval"));
}

TEST_CASE("input errors") {
  CHECK(run("inventory S7").code == 4);
  CHECK(run("theorem").code == 4);
  CHECK(run("lp S9:3,6").code == 4);
  CHECK(run("lp S9").code == 4);
  CHECK(run("solve S9:3,6:MS99").code == 4);
  CHECK(run("theorem S8 --format xml").code == 4);
  CHECK(run("theorem S9 --certificate nonsense").code == 4);
  CHECK(run("--help").code == 0);
}

TEST_CASE("outputs are deterministic") {
  CHECK(run("theorem S10").out == run("theorem S10 --threads 2").out);
  CHECK(run("solve EKR --format json").out == run("solve EKR --format json").out);
}
