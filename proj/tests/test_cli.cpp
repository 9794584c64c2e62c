#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(HETNET_SG_BIN) + " " + args + " > cli_test_stdout.txt 2> cli_test_stderr.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const char* path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("coverage to stdout") {
  CHECK(run("coverage --scenario Uniform --from -5 --to 0 --step 5") == 0);
  CHECK(slurp("cli_test_stdout.txt") ==
        "axis,axis_value,scenario,method,value,ci_low,ci_high\n"
        "sinr_threshold_db,-5,Uniform,Analytic,0.788668637,,\n"
        "sinr_threshold_db,0,Uniform,Analytic,0.585793535,,\n");
}

TEST_CASE("config file, flags and output file") {
  {
    std::ofstream f("cli_test.cfg");
    f << "scenario = NonUniformII\ninner_radius_m = 500\n";
  }
  CHECK(run("sweep --config cli_test.cfg --from 600 --to 600 --out cli_test_out.csv") == 0);
  const std::string csv = slurp("cli_test_out.csv");
  CHECK(csv.find("inner_radius_m,600,NonUniformII,Analytic,0.844322324,,") != std::string::npos);
  CHECK(run("throughput --config cli_test.cfg --from 0.01 --to 1 --points 3 --d-meters 300") == 0);
  CHECK(slurp("cli_test_stdout.txt").find("rate_bps,0.1,NonUniformII,Analytic,") != std::string::npos);
  std::remove("cli_test.cfg");
  std::remove("cli_test_out.csv");
}

TEST_CASE("distinct exit codes") {
  {
    std::ofstream f("cli_bad.cfg");
    f << "lambda_macro = 1e-6\nwhat = 1\n";
  }
  CHECK(run("coverage --config cli_bad.cfg") == 2);
  CHECK(slurp("cli_test_stderr.txt").find("unknown key 'what'") != std::string::npos);
  std::remove("cli_bad.cfg");
  CHECK(run("coverage --scenario Nowhere") == 2);
  CHECK(run("coverage --method mc --trials 10 --window 100") == 2);
  CHECK(run("coverage --scenario Uniform --out /nonexistent/dir/x.csv") == 3);
  CHECK(run("validate --scenario MacroOnly --trials 200 --window 4000 --tolerance 0.0") == 6);
  CHECK(run("figure 9") != 0);
}

TEST_CASE("figure preset runs") {
  CHECK(run("figure 4 --scenario Uniform --scenario NonUniformII") == 0);
  const std::string csv = slurp("cli_test_stdout.txt");
  CHECK(csv.find("inner_radius_m,600,NonUniformII|ratio=10|T_db=-5,Analytic,0.844322324,,") != std::string::npos);
  CHECK(csv.find("MacroOnly") == std::string::npos);
}
