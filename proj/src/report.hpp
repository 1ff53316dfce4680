#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "algebra.hpp"
#include "recognition.hpp"

namespace quatrec {

inline constexpr const char* kVersion = "0.1.0";

// Shared command knobs; the randomized-check parameters are embedded in
// every report so a run can be reproduced from its output alone.
struct RunOptions {
  std::uint64_t seed = 0;
  int samples = 64;
  long long height = 10;
  bool force = false;
};

// Exit codes: 0 affirmative, 1 definite refusal with witness, 2 inconclusive,
// 3 input error.  The JSON report is byte-stable for identical inputs and
// options (keys are sorted, no timestamps).
struct CommandResult {
  int exit_code = 0;
  nlohmann::json report;
};

CommandResult run_check(const AlgebraPresentation& a, const RunOptions& opts = {});
CommandResult run_recognize(const AlgebraPresentation& a, const RunOptions& opts = {});
CommandResult run_center(const AlgebraPresentation& a, const RunOptions& opts = {});
CommandResult run_decompose(const AlgebraPresentation& a, const Element& x,
                            const RunOptions& opts = {});
CommandResult run_quadratic(const AlgebraPresentation& a, const Element& x,
                            const RunOptions& opts = {});
CommandResult run_enumerate(std::size_t dim, std::int64_t p, const RunOptions& opts = {});
// Writes the builtin presentation to out_path and reports what was written.
CommandResult run_examples(const std::string& name, const std::string& out_path,
                           const RunOptions& opts = {});

// Uniform exit-3 report for input errors raised anywhere in a command.
CommandResult input_error_result(const std::string& command, const std::string& message);

// "c0,c1,...": one scalar string per coordinate in the presentation's basis.
Element parse_element(const AlgebraPresentation& a, const std::string& text);

// Human-readable rendering of any command report produced above.
std::string render_text(const nlohmann::json& report);

}  // namespace quatrec
