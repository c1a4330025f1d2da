#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

#ifdef KGC_CLI_PATH

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "kgc_cli_tests";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(KGC_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("cli state reports") {
  const Run text = run("state --Z 68 --n 4 --l 1 --m 0");
  CHECK(text.code == 0);
  CHECK(text.out.find("l_prime") != std::string::npos);
  CHECK(text.out.find("I (Fisher)") != std::string::npos);

  const Run csv = run("state --n 1 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("measure,Z,mass,n,l,m,value_kg,value_sch,ratio,converged\n", 0) == 0);

  const Run json = run("state --n 2 --l 1 --m 1 --format json");
  CHECK(json.code == 0);
  CHECK(json.out.find("\"ratios\"") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  const Run bad = run("state --n 2 --l 2");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("l <= n-1") != std::string::npos);
  CHECK(run("state --n 3 --l 1 --m 2").code == 2);
  CHECK(run("state --Z 137.2 --n 1").code == 3);
  CHECK(run("state --Z 0 --n 1").code == 2);
  CHECK(run("scan --measures bogus").code == 2);
  CHECK(run("scan --range 3:1").code == 2);
  CHECK(run("scan --format xml").code == 2);
  CHECK(run("profile --spacing cubic").code == 2);
  CHECK(run("--no-such-flag").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("state --tol -1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli scans continue past supercritical rows") {
  const Run r = run("scan --axis Z --range 60:70:10 --states 1S --measures centroid");
  CHECK(r.code == 0);
  CHECK(r.err.find("supercritical") != std::string::npos);
  CHECK(r.out.find("centroid,70,273.132054,1,0,0,,") != std::string::npos);
}

TEST_CASE("cli scans are byte-identical across runs and thread counts") {
  const std::string args = "scan --axis n --family circular --range 1:6 --format json";
  const Run a = run(args + " --threads 1");
  const Run b = run(args + " --threads 4");
  const Run c = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.size() > 100);
}

TEST_CASE("cli config files and output files") {
  const fs::path dir = fs::temp_directory_path() / "kgc_cli_tests";
  fs::create_directories(dir);
  const fs::path cfg = dir / "scan.ini";
  std::ofstream(cfg) << "axis = m\nn = 5\nl = 4\nrange = \"0:4\"\nmeasures = fisher\nZ = 20\n";
  const fs::path out = dir / "scan.csv";
  const Run r = run("scan --config " + cfg.string() + " --Z 68 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const std::string body = slurp(out);
  CHECK(body.find("fisher,68,273.132054,5,4,4,") != std::string::npos);
  CHECK(body.find(",20,") == std::string::npos);

  const Run p = run("profile --Z 68 --n 1 --points 50");
  CHECK(p.code == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 51);
}

#endif
