#include <CLI11.hpp>

#include "toro/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"toro — toroidalization of 2D log-smooth morphism germs"};
  app.require_subcommand(1);

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "validate and classify a germ");
  analyze->add_option("file", file, "input germ file")->required();

  toro::RunOptions opt;
  std::string run_file;
  auto* run = app.add_subcommand("run", "run the toroidalization loop");
  run->add_option("file", run_file, "input germ file")->required();
  run->add_option("--max-steps", opt.max_steps, "step limit (overrides file and env)");
  run->add_option("--trace", opt.trace, "write the JSON trace here");
  run->add_option("--dot-x", opt.dot_x, "write the X blowup forest (DOT)");
  run->add_option("--dot-y", opt.dot_y, "write the Y blowup forest (DOT)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "run a corpus file or directory");
  verify->add_option("path", verify_path, "germ file or corpus directory")->required();

  std::string fan_a, fan_b, script_out;
  auto* factor = app.add_subcommand("factor", "strong-factorize two smooth fans");
  factor->add_option("fanA", fan_a, "first fan (JSON)")->required();
  factor->add_option("fanB", fan_b, "second fan (JSON)")->required();
  factor->add_option("--out", script_out, "write the script JSON here");

  CLI11_PARSE(app, argc, argv);

  if (*analyze) return toro::cmd_analyze(file);
  if (*run) return toro::cmd_run(run_file, opt);
  if (*verify) return toro::cmd_verify(verify_path);
  if (*factor) return toro::cmd_factor(fan_a, fan_b, script_out);
  return 1;
}
