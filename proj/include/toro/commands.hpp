#pragma once
// Command implementations behind the toro CLI. Exit codes: 0 success,
// 1 parse error, 2 validation failure / support mismatch, 3 irrational
// center, 4 non-termination.

#include <string>

#include "toro/model.hpp"

namespace toro {

struct RunOptions {
  int max_steps = -1;  // -1: fall back to file option, TORO_MAX_STEPS, 64
  std::string trace, dot_x, dot_y;
};

int cmd_analyze(const std::string& file);
int cmd_run(const std::string& file, const RunOptions& opt);
int cmd_verify(const std::string& path);
int cmd_factor(const std::string& file_a, const std::string& file_b,
               const std::string& out);

// Deterministic serializations (shared with cmd_verify golden comparison).
Json trace_json(const State& s);
std::string dot_x_tree(const State& s);
std::string dot_y_tree(const State& s);

}  // namespace toro
