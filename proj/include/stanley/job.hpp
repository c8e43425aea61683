// One CLI invocation as a value: the requested computation, limits, and output
// format. run_job dispatches, assembles a report document, and renders it.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "stanley/dsl.hpp"

namespace stanley {

enum class Command { Gen, Bounds, Sdepth, Ass, BigSize, Depth, Verify, Reproduce };
enum class OutputFormat { Text, Json, Csv };

struct Job {
  Command command = Command::Gen;
  std::string input_text;  // DSL; unused for Reproduce
  OutputFormat format = OutputFormat::Text;
  std::string cache_dir;        // empty = caching off
  double deadline_seconds = 0;  // 0 = none
  int poset_cap = 24;
  int field_char = 2;
  int threads = 1;
  bool binary_search = false;
  bool memoize = false;
  std::optional<long> force_A;
};

// Exit codes: 0 ok, 1 reproduction mismatch, 2 validation error, 3 deadline.
struct RunOutcome {
  int exit_code = 0;
  nlohmann::json doc;
  std::string output;  // rendered document for stdout
  std::string error;   // diagnostic for stderr when exit_code != 0
};

RunOutcome run_job(const Job& job);

const char* command_name(Command command);

}  // namespace stanley
