#include "quatrec/quatrec.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "algebra_json.hpp"
#include "builtin.hpp"
#include "errors.hpp"
#include "report.hpp"

struct quatrec_algebra {
  quatrec::AlgebraPresentation p;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error) *error = dup_string(message);
}

quatrec::RunOptions to_run_options(const quatrec_options* opts) {
  quatrec::RunOptions r;
  if (opts) {
    r.seed = opts->seed;
    r.samples = opts->samples;
    r.height = opts->height;
    r.force = opts->force != 0;
  }
  return r;
}

bool text_format(const quatrec_options* opts) {
  return opts && opts->format && std::string(opts->format) == "text";
}

std::string render(const quatrec::CommandResult& result, const quatrec_options* opts) {
  if (text_format(opts)) return quatrec::render_text(result.report);
  return result.report.dump(2) + "\n";
}

// Runs a command body, converting any escaping exception into an exit-3
// report so the C boundary never sees a throw.
template <typename F>
int run_command(const char* command, const quatrec_options* opts, char** report, F&& body) {
  try {
    quatrec::CommandResult result = body();
    if (report) *report = dup_string(render(result, opts));
    return result.exit_code;
  } catch (const std::exception& e) {
    quatrec::CommandResult err = quatrec::input_error_result(command, e.what());
    if (report) *report = dup_string(render(err, opts));
    return QUATREC_INPUT_ERROR;
  } catch (...) {
    quatrec::CommandResult err = quatrec::input_error_result(command, "unknown failure");
    if (report) *report = dup_string(render(err, opts));
    return QUATREC_INPUT_ERROR;
  }
}

}  // namespace

extern "C" {

void quatrec_options_init(quatrec_options* opts) {
  if (!opts) return;
  opts->format = "json";
  opts->seed = 0;
  opts->samples = 64;
  opts->height = 10;
  opts->force = 0;
}

const char* quatrec_version(void) { return quatrec::kVersion; }

quatrec_algebra* quatrec_algebra_parse(const char* json_text, char** error) {
  if (!json_text) {
    set_error(error, "null input");
    return nullptr;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(json_text);
    return new quatrec_algebra{quatrec::algebra_from_json(j)};
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return nullptr;
  }
}

quatrec_algebra* quatrec_algebra_load(const char* path, char** error) {
  if (!path) {
    set_error(error, "null path");
    return nullptr;
  }
  try {
    return new quatrec_algebra{quatrec::load_algebra(path)};
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return nullptr;
  }
}

quatrec_algebra* quatrec_algebra_builtin(const char* descriptor, char** error) {
  if (!descriptor) {
    set_error(error, "null descriptor");
    return nullptr;
  }
  try {
    return new quatrec_algebra{quatrec::builtin(descriptor)};
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return nullptr;
  }
}

void quatrec_algebra_free(quatrec_algebra* a) { delete a; }

size_t quatrec_algebra_dim(const quatrec_algebra* a) { return a ? a->p.dim : 0; }

char* quatrec_algebra_to_json(const quatrec_algebra* a) {
  if (!a) return nullptr;
  try {
    return dup_string(quatrec::algebra_to_json(a->p).dump(2) + "\n");
  } catch (const std::exception&) {
    return nullptr;
  }
}

int quatrec_check(const quatrec_algebra* a, const quatrec_options* opts, char** report) {
  if (!a) return QUATREC_INPUT_ERROR;
  return run_command("check", opts, report,
                     [&] { return quatrec::run_check(a->p, to_run_options(opts)); });
}

int quatrec_recognize(const quatrec_algebra* a, const quatrec_options* opts, char** report) {
  if (!a) return QUATREC_INPUT_ERROR;
  return run_command("recognize", opts, report,
                     [&] { return quatrec::run_recognize(a->p, to_run_options(opts)); });
}

int quatrec_center(const quatrec_algebra* a, const quatrec_options* opts, char** report) {
  if (!a) return QUATREC_INPUT_ERROR;
  return run_command("center", opts, report,
                     [&] { return quatrec::run_center(a->p, to_run_options(opts)); });
}

int quatrec_decompose(const quatrec_algebra* a, const char* element, const quatrec_options* opts,
                      char** report) {
  if (!a || !element) return QUATREC_INPUT_ERROR;
  return run_command("decompose", opts, report, [&] {
    quatrec::Element x = quatrec::parse_element(a->p, element);
    return quatrec::run_decompose(a->p, x, to_run_options(opts));
  });
}

int quatrec_quadratic(const quatrec_algebra* a, const char* element, const quatrec_options* opts,
                      char** report) {
  if (!a || !element) return QUATREC_INPUT_ERROR;
  return run_command("quadratic", opts, report, [&] {
    quatrec::Element x = quatrec::parse_element(a->p, element);
    return quatrec::run_quadratic(a->p, x, to_run_options(opts));
  });
}

int quatrec_enumerate(size_t dim, int64_t field, const quatrec_options* opts, char** report) {
  return run_command("enumerate", opts, report,
                     [&] { return quatrec::run_enumerate(dim, field, to_run_options(opts)); });
}

int quatrec_examples(const char* name, const char* out_path, const quatrec_options* opts,
                     char** report) {
  if (!name || !out_path) return QUATREC_INPUT_ERROR;
  return run_command("examples", opts, report, [&] {
    return quatrec::run_examples(name, out_path, to_run_options(opts));
  });
}

char* quatrec_error_report(const char* command, const char* message, const char* format) {
  quatrec::CommandResult err = quatrec::input_error_result(command ? command : "?",
                                                           message ? message : "unknown failure");
  if (format && std::string(format) == "text") return dup_string(quatrec::render_text(err.report));
  return dup_string(err.report.dump(2) + "\n");
}

void quatrec_string_free(char* s) { std::free(s); }

}  // extern "C"
