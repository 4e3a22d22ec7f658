#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toro/commands.hpp"
#include "toro/input.hpp"
#include "toro/toroidalize.hpp"

using namespace toro;
namespace fs = std::filesystem;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream f(p);
  f << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("input parsing") {
  InputSpec in = parse_input(
      "# basic 1q example\n"
      "f_y1 = \"x1^2\"\n"
      "f_y2 = \"x1^3 + x1*x2\"  # comment after value\n"
      "boundary_x = [\"x1\"]\n"
      "boundary_y = [\"y1\"]\n"
      "max_steps = 12\n");
  CHECK(in.f_y1 == "x1^2");
  CHECK(in.f_y2 == "x1^3 + x1*x2");
  CHECK(in.boundary_x == std::vector<int>{1});
  CHECK(in.boundary_y == std::vector<int>{1});
  CHECK(in.max_steps == 12);

  CHECK_THROWS_AS(parse_input("f_y1 = \"x1\"\n"), ParseError);  // missing f_y2
  CHECK_THROWS_AS(parse_input("f_y1 = \"x1\"\nf_y2 = \"x2\"\nbogus = 1\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_input("f_y1 = \"x1\"\nf_y2 = \"x2\"\nboundary_x = [\"x9\"]\n"),
      ParseError);
}

TEST_CASE("initial state wiring") {
  InputSpec in;
  in.f_y1 = "x1*x2";
  in.f_y2 = "x1^3*x2^2";
  in.boundary_x = {1, 2};
  in.boundary_y = {1, 2};
  State s = initial_state(in);
  REQUIRE(s.xgerms.size() == 1);
  REQUIRE(s.ygerms.size() == 1);
  CHECK(s.xgerms[0].target == 0);
  CHECK(s.comp_name(*s.xgerms[0].boundary[1]) == "G2");
  CHECK(s.comp_name(*s.ygerms[0].boundary[0]) == "H1");
}

TEST_CASE("trace is byte-stable across repeated runs") {
  InputSpec in;
  in.f_y1 = "x1^2";
  in.f_y2 = "x1^3 + x1*x2";
  in.boundary_x = {1};
  in.boundary_y = {1};
  std::string a, b;
  for (std::string* out : {&a, &b}) {
    State s = initial_state(in);
    run(s, 8);
    *out = trace_json(s).dump(2);
  }
  CHECK(a == b);
  CHECK(a.find("\"kind\": \"YBlowup\"") != std::string::npos);
  CHECK(a.find("\"kind\": \"Done\"") != std::string::npos);
}

TEST_CASE("command exit codes") {
  std::string good = write_temp("toro_cli_good.toro",
                                "f_y1 = \"x1^2\"\n"
                                "f_y2 = \"x1^3 + x1*x2\"\n"
                                "boundary_x = [\"x1\"]\n"
                                "boundary_y = [\"y1\"]\n");
  CHECK(cmd_analyze(good) == 0);
  CHECK(cmd_run(good, RunOptions{}) == 0);

  std::string bad = write_temp("toro_cli_bad.toro", "f_y1 = \"x1^\"\n");
  CHECK(cmd_analyze(bad) == 1);

  std::string invalid = write_temp("toro_cli_invalid.toro",
                                   "f_y1 = \"x1\"\n"
                                   "f_y2 = \"x1^2\"\n"
                                   "boundary_x = [\"x1\"]\n"
                                   "boundary_y = [\"y1\"]\n");
  CHECK(cmd_analyze(invalid) == 2);
  CHECK(cmd_run(invalid, RunOptions{}) == 2);

  RunOptions capped;
  capped.max_steps = 0;
  CHECK(cmd_run(good, capped) == 4);

  std::string out = (fs::temp_directory_path() / "toro_cli_trace.json").string();
  RunOptions with_trace;
  with_trace.trace = out;
  CHECK(cmd_run(good, with_trace) == 0);
  std::string text = slurp(out);
  CHECK(!text.empty());
  CHECK(text.back() == '\n');
  CHECK(text.find("\"atlas\"") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("verify command") {
  fs::path dir = fs::temp_directory_path() / "toro_cli_corpus";
  fs::create_directories(dir);
  for (auto& e : fs::directory_iterator(dir)) fs::remove(e);
  std::ofstream(dir / "a.toro") << "f_y1 = \"x1^2\"\n"
                                   "f_y2 = \"x1^3 + x1*x2\"\n"
                                   "boundary_x = [\"x1\"]\n"
                                   "boundary_y = [\"y1\"]\n";
  CHECK(cmd_verify(dir.string()) == 0);
  std::ofstream(dir / "b.toro") << "f_y1 = \"x1\"\n";
  CHECK(cmd_verify(dir.string()) == 2);
  fs::remove_all(dir);
}

TEST_CASE("factor command") {
  std::string fa = write_temp("toro_cli_fa.json", "{\"rays\": [[1,0],[0,1]]}\n");
  std::string fb =
      write_temp("toro_cli_fb.json", "{\"rays\": [[1,0],[2,1],[1,1],[0,1]]}\n");
  std::string out = (fs::temp_directory_path() / "toro_cli_fs.json").string();
  CHECK(cmd_factor(fa, fb, out) == 0);
  std::string text = slurp(out);
  CHECK(text.find("\"ups\"") != std::string::npos);
  CHECK(text.find("\"downs\"") != std::string::npos);
  std::remove(out.c_str());

  std::string fc = write_temp("toro_cli_fc.json", "{\"rays\": [[1,1],[0,1]]}\n");
  CHECK(cmd_factor(fa, fc, "") == 2);
  std::string broken = write_temp("toro_cli_fx.json", "{\"rays\": [[1,0],[1,0]]}\n");
  CHECK(cmd_factor(fa, broken, "") == 1);
}

TEST_CASE("max steps resolution order") {
  std::string with_limit = write_temp("toro_cli_ms.toro",
                                      "f_y1 = \"x1^2\"\n"
                                      "f_y2 = \"x1^3 + x1*x2\"\n"
                                      "boundary_x = [\"x1\"]\n"
                                      "boundary_y = [\"y1\"]\n"
                                      "max_steps = 0\n");
  CHECK(cmd_run(with_limit, RunOptions{}) == 4);  // file limit applies
  RunOptions override_flag;
  override_flag.max_steps = 8;
  CHECK(cmd_run(with_limit, override_flag) == 0);  // flag beats file
}
