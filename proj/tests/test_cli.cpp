#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "thermodiscrim/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = thermodiscrim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("binary report") {
  const auto r = run({"binary", "--alpha", "1", "--t1", "0.5", "--t2", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p_error = 0.44939164397\n"));
  CHECK(has(r.out, "dual certificate: verified"));
}

TEST_CASE("binary edge cases") {
  auto r = run({"binary", "--t1", "1", "--t2", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.err, "identical states"));
  CHECK(has(r.out, "p_error = 0.5\n"));

  r = run({"binary", "--t1", "0", "--t2", "1"});
  CHECK(has(r.out, "p_error = 0.440398538989"));
  CHECK(has(r.out, "p_failure"));

  CHECK(run({"binary", "--t1", "-1", "--t2", "1"}).code == 2);
  CHECK(run({"binary", "--t1", "1"}).code == 2);
  CHECK(run({"binary", "--t1", "1", "--t2", "2", "--convention", "traceless", "--d", "3"}).code == 2);
  CHECK(run({"binary", "--bogus"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("multi reports the zero effect") {
  const auto r = run({"multi", "--temps", "0.5,1,2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p_error = 0.583014929531"));
  CHECK(has(r.out, "state 2 (T = 1) receives the zero effect"));
}

TEST_CASE("threshold report") {
  const auto r = run({"threshold", "--temps", "0,1,2", "--tc", "0.5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "all outcomes conclude ABOVE; p_error = 0.333333333333"));
  CHECK(run({"threshold", "--temps", "0,1,2"}).code == 2);
}

TEST_CASE("critical report and classification") {
  auto r = run({"critical", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "T* = 0.91023922662"));
  r = run({"critical", "--convention", "traceless", "--t2", "1"});
  CHECK(has(r.out, "BestAtHighT"));
  CHECK(run({"critical", "--d", "2", "--bracket", "2,3"}).code == 2);
}

TEST_CASE("noncommuting report") {
  const auto r = run({"noncommuting", "--b", "1", "--t", "1", "--dir1", "0,0,1", "--dir2", "1,0,0"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p_error = 0.230735803906"));
  CHECK(run({"noncommuting", "--dir1", "0,0,1", "--dir2", "0,0,1"}).code == 0);
  CHECK(run({"noncommuting", "--dir1", "0,0,2"}).code == 2);
}

TEST_CASE("csv output files") {
  const auto dir = std::filesystem::temp_directory_path() / "thermodiscrim_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "fig4.csv").string();
  const auto r = run({"sweep", "--figure", "4", "--out", path});
  CHECK(r.code == 0);
  const auto text = read_file(path);
  CHECK(text.rfind("# thermodiscrim v", 0) == 0);
  CHECK(has(text, " cmd=sweep params={"));
  CHECK(has(text, "\nd,alpha,t_star\n"));
  CHECK(has(text, "\n2,5,4.55119613"));

  const auto sweep_path = (dir / "nc.csv").string();
  CHECK(run({"noncommuting", "--sweep-t", "--b", "0.1,1", "--t-range", "0:1:11", "--out", sweep_path}).code == 0);
  CHECK(has(read_file(sweep_path), "\nt,b,angle,p_error\n"));

  CHECK(run({"binary", "--t1", "1", "--t2", "2", "--out", (dir / "no" / "such" / "x.csv").string()}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("custom sweeps") {
  auto r = run({"sweep", "--model", "binary", "--variable", "T2", "--range", "0.5:2:4", "--param", "t1=0.5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "t1,t2,alpha,p_error\n0.5,0.5,1,0.5\n"));
  r = run({"sweep", "--model", "critical", "--variable", "dimension", "--values", "2..3", "--param", "alpha=1"});
  CHECK(has(r.out, "\n2,1,0.91023922662"));
  CHECK(run({"sweep", "--model", "critical", "--variable", "T1"}).code == 2);
  CHECK(run({"sweep", "--figure", "9"}).code == 1);
}

TEST_CASE("hamiltonian file") {
  const auto path = std::filesystem::temp_directory_path() / "thermodiscrim_problem.json";
  {
    std::ofstream f(path);
    f << R"({"hamiltonian": {"type": "lho", "d": 3, "alpha": 1}, "temperatures": [0.5, 1, 2]})";
  }
  const auto r = run({"multi", "--hamiltonian", path.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p_error = 0.546555686286"));
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(run({"multi", "--hamiltonian", path.string()}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("tolerance from the environment") {
  ::setenv("THERMODISCRIM_TOL", "1e-6", 1);
  auto r = run({"binary", "--t1", "0.5", "--t2", "1"});
  CHECK(has(r.out, "tol 1e-06"));
  r = run({"binary", "--t1", "0.5", "--t2", "1", "--tol", "1e-8"});
  CHECK(has(r.out, "tol 1e-08"));
  ::setenv("THERMODISCRIM_TOL", "abc", 1);
  CHECK(run({"binary", "--t1", "0.5", "--t2", "1"}).code == 2);
  ::unsetenv("THERMODISCRIM_TOL");
}
