#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "quatrec/quatrec.h"

namespace {

int emit(int code, char* report) {
  if (report) {
    std::fputs(report, stdout);
    quatrec_string_free(report);
  }
  return code;
}

int input_failure(const char* command, const char* message, const std::string& format) {
  char* rep = quatrec_error_report(command, message, format.c_str());
  return emit(QUATREC_INPUT_ERROR, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact recognizer for quaternion structure in finitely presented algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  quatrec_options opts;
  quatrec_options_init(&opts);
  std::string format = "json";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opts.seed, "randomized-check seed");
  app.add_option("--samples", opts.samples, "randomized-check sample count");
  app.add_option("--height", opts.height, "random coefficient height bound");

  std::string file, element, name, out_path;
  std::size_t dim = 3;
  std::int64_t field = 2;
  bool force = false;

  CLI::App* check = app.add_subcommand("check", "test the two commutator hypotheses");
  check->add_option("file", file, "algebra presentation file")->required();

  CLI::App* recognize = app.add_subcommand("recognize", "run the full recognition pipeline");
  recognize->add_option("file", file, "algebra presentation file")->required();

  CLI::App* center =
      app.add_subcommand("center", "compute the center and decide whether it is a field");
  center->add_option("file", file, "algebra presentation file")->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "express an element over the recognized basis");
  decompose->add_option("file", file, "algebra presentation file")->required();
  decompose->add_option("--element", element, "comma-separated coordinates")->required();

  CLI::App* quadratic =
      app.add_subcommand("quadratic", "quadratic dependence certificate for an element");
  quadratic->add_option("file", file, "algebra presentation file")->required();
  quadratic->add_option("--element", element, "comma-separated coordinates")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "sweep every small structure table over a prime field");
  enumerate_cmd->add_option("--dim", dim, "basis size including the unit");
  enumerate_cmd->add_option("--field", field, "prime field size");
  enumerate_cmd->add_flag("--force", force, "lift the default field guard");

  CLI::App* examples = app.add_subcommand("examples", "write a builtin presentation to a file");
  examples->add_option("--name", name, "builtin descriptor")->required();
  examples->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return QUATREC_INPUT_ERROR;
  }

  opts.format = format.c_str();
  opts.force = force ? 1 : 0;

  auto with_algebra = [&](const char* command, auto&& fn) {
    char* error = nullptr;
    quatrec_algebra* a = quatrec_algebra_load(file.c_str(), &error);
    if (!a) {
      int rc = input_failure(command, error ? error : "load failed", format);
      quatrec_string_free(error);
      return rc;
    }
    char* report = nullptr;
    int rc = fn(a, &report);
    quatrec_algebra_free(a);
    return emit(rc, report);
  };

  if (*check)
    return with_algebra("check", [&](const quatrec_algebra* a, char** rep) {
      return quatrec_check(a, &opts, rep);
    });
  if (*recognize)
    return with_algebra("recognize", [&](const quatrec_algebra* a, char** rep) {
      return quatrec_recognize(a, &opts, rep);
    });
  if (*center)
    return with_algebra("center", [&](const quatrec_algebra* a, char** rep) {
      return quatrec_center(a, &opts, rep);
    });
  if (*decompose)
    return with_algebra("decompose", [&](const quatrec_algebra* a, char** rep) {
      return quatrec_decompose(a, element.c_str(), &opts, rep);
    });
  if (*quadratic)
    return with_algebra("quadratic", [&](const quatrec_algebra* a, char** rep) {
      return quatrec_quadratic(a, element.c_str(), &opts, rep);
    });
  if (*enumerate_cmd) {
    char* report = nullptr;
    int rc = quatrec_enumerate(dim, field, &opts, &report);
    return emit(rc, report);
  }
  if (*examples) {
    char* report = nullptr;
    int rc = quatrec_examples(name.c_str(), out_path.c_str(), &opts, &report);
    return emit(rc, report);
  }
  return QUATREC_INPUT_ERROR;
}
