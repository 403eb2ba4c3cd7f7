#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  nlohmann::json out;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "semihall_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& tag) {
  const fs::path out = scratch(tag + ".json");
  fs::remove(out);
  const std::string cmd = std::string(SEMIHALL_CLI) + " " + args + " --out " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, nullptr};
  if (fs::exists(out)) r.out = nlohmann::json::parse(slurp(out));
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("objects") {
    Run v = run("objects --q 2 --bound 2", "objects_vect");
    CHECK(v.code == 0);
    CHECK(v.out.at("version") == 1);
    CHECK(v.out.at("objects").size() == 3);
    CHECK(run("objects --backend a2 --bound 1,1", "objects_a2").out.at("objects").size() == 5);
    CHECK(run("objects --backend a2 --bound 0", "objects_zero").out.at("objects").size() == 1);
  }

  TEST_CASE("hall table") {
    Run t = run("hall-table --bound 2", "table");
    CHECK(t.code == 0);
    bool found = false;
    for (const auto& row : t.out.at("rows")) {
      if (row.at("M") == "V1" && row.at("N") == "V1" && row.at("R") == "V2") {
        found = true;
        CHECK(row.at("h").at("rat") == "1/2");
        CHECK(row.at("agree") == true);
      }
    }
    CHECK(found);
    Run empty = run("hall-table --bound 0", "table_empty");
    CHECK(empty.out.at("rows").size() == 1);
    Run bad = run("hall-table --bound 2 --inject-fault", "table_fault");
    CHECK(bad.code == 1);
    int disagreements = 0;
    for (const auto& row : bad.out.at("rows")) disagreements += row.at("agree") == false;
    CHECK(disagreements == 1);
  }

  TEST_CASE("verify") {
    Run all = run("verify --bound 2 --jobs 2", "verify_default");
    CHECK(all.code == 0);
    CHECK(all.out.at("suites").size() > 20);
    for (const auto& s : all.out.at("suites")) CHECK(s.at("failures").empty());
    CHECK(run("verify --backend a2 --bound 2,2 --suite green", "verify_green").code == 0);
    Run fault = run("verify --bound 2 --suite hall-double-entry --inject-fault", "verify_fault");
    CHECK(fault.code == 1);
    CHECK_FALSE(fault.out.at("suites").at(0).at("failures").empty());
    CHECK(run("verify --suite product-oracle --bound 2 --max-total 6", "verify_budget").code == 2);
  }

  TEST_CASE("output is deterministic") {
    const Run a = run("verify --backend a2 --bound 1,1 --suite sdh-coassociativity,double-d4 --jobs 1", "det_a");
    const Run b = run("verify --backend a2 --bound 1,1 --suite sdh-coassociativity,double-d4 --jobs 3", "det_b");
    CHECK(a.code == 0);
    CHECK(slurp(scratch("det_a.json")).size() > 0);
    nlohmann::json ca = a.out, cb = b.out;
    ca["config"].erase("jobs");
    cb["config"].erase("jobs");
    CHECK(ca.dump() == cb.dump());
  }

  TEST_CASE("sdh structure constants") {
    Run u = run("sdh mul '{}' '{}' --bound 1", "sdh_unit");
    CHECK(u.code == 0);
    REQUIRE(u.out.at("terms").size() == 1);
    CHECK(u.out.at("terms").at(0).at("key").at("A") == "V0");
    Run k = run("sdh coprod '{\"alpha\":[1]}' --bound 1", "sdh_k");
    REQUIRE(k.out.at("terms").size() == 1);
    const auto& pair = k.out.at("terms").at(0).at("key");
    CHECK(pair.at(0) == pair.at(1));
    Run m = run("sdh mul '{\"B\":\"V1\"}' '{\"A\":\"V1\"}' --bound 2", "sdh_mul");
    CHECK(m.out.at("terms").size() == 2);
  }

  TEST_CASE("configuration errors") {
    CHECK(run("objects --q 4", "bad_q").code == 3);
    CHECK(run("objects --bound 1,x", "bad_bound").code == 3);
    CHECK(run("verify --suite nonsense", "bad_suite").code == 3);
    CHECK(run("objects --backend quiver", "no_quiver").code == 3);
    CHECK(run("sdh mul '{\"A\":\"V9\"}' '{}' --bound 2", "bad_key").code == 3);
    const fs::path cyclic = scratch("cyclic_quiver.json");
    std::ofstream(cyclic) << R"({"vertices": 2, "arrows": [[0,1],[1,0]], "q": 2})";
    CHECK(run("objects --backend quiver --quiver " + cyclic.string(), "cyclic").code == 3);
    const fs::path a3 = scratch("a3_quiver.json");
    std::ofstream(a3) << R"({"vertices": 3, "arrows": [[0,1],[1,2]], "q": 2})";
    Run ok = run("objects --backend quiver --quiver " + a3.string() + " --bound 1", "a3");
    CHECK(ok.code == 0);
    CHECK(ok.out.at("objects").size() == 13);
  }
}
