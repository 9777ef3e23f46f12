// fp: Betti numbers and Poincare series of fiber products of power-series
// quotient rings. Thin front end over the fiberprod shared library.

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>

#include "fiberprod.h"

namespace {

struct SessionDeleter {
  void operator()(fp_session* s) const { fp_session_free(s); }
};

int fail(fp_session* s, fp_status st) {
  std::fprintf(stderr, "fp: error: %s\n", fp_last_error(s));
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers and Poincare series of fiber products"};
  app.require_subcommand(1);

  std::string spec_path, field, seed;
  unsigned long long max_gens = 0, max_degree = 0;
  bool oracle = false, json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("spec-file", spec_path, "ideal spec file")->required();
    cmd->add_flag("--oracle", oracle, "also run the brute-force Koszul-homology oracle");
    cmd->add_flag("--json", json, "emit the report as JSON");
    cmd->add_option("--field", field, "coefficient field: q or gf:<prime>");
    cmd->add_option("--max-gens", max_gens, "generator cap for the oracle path (default 14)");
    cmd->add_option("--max-degree", max_degree, "per-generator degree cap (default 50)");
    cmd->add_option("--seed", seed, "seed echoed into the report");
    return cmd;
  };
  for (const char* name : {"reduce", "betti", "poincare", "ranks", "verify"})
    add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  std::unique_ptr<fp_session, SessionDeleter> session(fp_session_new());
  fp_session* s = session.get();
  if (!s) {
    std::fprintf(stderr, "fp: error: out of memory\n");
    return static_cast<int>(FP_ERR_INTERNAL);
  }

  fp_status st;
  if (!field.empty() && (st = fp_session_set_option(s, "field", field.c_str())) != FP_OK)
    return fail(s, st);
  if (max_gens &&
      (st = fp_session_set_option(s, "max-gens", std::to_string(max_gens).c_str())) != FP_OK)
    return fail(s, st);
  if (max_degree &&
      (st = fp_session_set_option(s, "max-degree", std::to_string(max_degree).c_str())) != FP_OK)
    return fail(s, st);
  if (!seed.empty() && (st = fp_session_set_option(s, "seed", seed.c_str())) != FP_OK)
    return fail(s, st);
  if ((st = fp_session_set_option(s, "oracle", oracle ? "1" : "0")) != FP_OK)
    return fail(s, st);

  if ((st = fp_session_load_spec_file(s, spec_path.c_str())) != FP_OK) return fail(s, st);

  const std::string command = app.get_subcommands().front()->get_name();
  if ((st = fp_run(s, command.c_str())) != FP_OK) return fail(s, st);

  std::fputs(json ? fp_report_json(s) : fp_report_text(s), stdout);
  return fp_exit_code(s);
}
