// Command-line front end for the lieindex shared library. All computation
// goes through the C API in lieindex.h; this file only parses arguments,
// reads/writes files, and renders reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieindex.h"

namespace {

using ojson = nlohmann::ordered_json;

int exit_code_for(lx_status st) {
  switch (st) {
    case LX_OK: return 0;
    case LX_ERR_PARSE: return 2;
    case LX_ERR_MATH: return 3;
    case LX_ERR_INVALID: return 2;
    default: return 5;
  }
}

int fail(lx_status st) {
  std::cerr << "error: " << lx_last_error() << "\n";
  return exit_code_for(st);
}

bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  return true;
}

std::string render_index_text(const std::string& json_text) {
  const ojson j = ojson::parse(json_text);
  std::ostringstream os;
  os << "ind = " << j["value"].get<long long>() << "\n";
  os << "mode = " << j["mode"].get<std::string>() << "\n";
  os << "error_bound = " << j["error_bound"].get<std::string>() << "\n";
  os << "witness = [";
  bool first = true;
  for (const auto& c : j["witness"]) {
    os << (first ? "" : ", ") << c.get<std::string>();
    first = false;
  }
  os << "]\n";
  os << "trials = " << j["trials"].get<long long>() << "\n";
  os << "seed = " << j["seed"].get<unsigned long long>() << "\n";
  return os.str();
}

std::string render_suite_text(const std::string& json_text) {
  const ojson j = ojson::parse(json_text);
  std::ostringstream os;
  for (const auto& c : j["claims"]) {
    os << c["claim_id"].get<std::string>() << ": "
       << c["verdict"].get<std::string>() << " (expected "
       << c["expected"].get<std::string>() << ") "
       << (c["as_expected"].get<bool>() ? "ok" : "UNEXPECTED") << "\n";
  }
  os << "claims = " << j["claims"].size() << "\n";
  os << (j["all_expected"].get<bool>() ? "suite: all claims as expected\n"
                                       : "suite: unexpected verdicts\n");
  return os.str();
}

struct CommonOpts {
  lx_config cfg;
  bool json = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.cfg.seed, "RNG seed for generic-rank sampling")
      ->envname("LIEINDEX_SEED");
  cmd->add_option("--trials", o.cfg.trials, "random parameter points per rank");
  cmd->add_option("--coeff-bound", o.cfg.coeff_bound,
                  "sample box half-width for parameter points");
  cmd->add_flag_function(
      "--symbolic",
      [&o](int64_t) { o.cfg.force_symbolic = 1; },
      "force exact symbolic elimination (error bound 0)");
  cmd->add_flag("--json", o.json, "emit the JSON document instead of text");
  cmd->add_option("--out", o.out_path, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact index computations for finite-dimensional Lie algebras"};
  app.require_subcommand(1);

  CommonOpts index_opts;
  lx_config_init(&index_opts.cfg);
  std::string spec;
  CLI::App* cmd_index =
      app.add_subcommand("index", "index of an algebra given by a spec "
                                  "expression, e.g. \"iw(sl(3),borel)\"");
  cmd_index->add_option("spec", spec, "construction expression")->required();
  add_common(cmd_index, index_opts);

  CommonOpts suite_opts;
  lx_config_init(&suite_opts.cfg);
  std::string filter = "*";
  CLI::App* cmd_suite =
      app.add_subcommand("suite", "run the verification suite");
  cmd_suite->add_option("--filter", filter, "claim id glob, e.g. \"P1*\"");
  add_common(cmd_suite, suite_opts);

  std::string io_input, io_spec, io_out;
  CLI::App* cmd_io = app.add_subcommand(
      "io", "load an algebra (file or --spec), validate it, and write the "
            "canonical JSON serialization");
  cmd_io->add_option("input", io_input, "path to an algebra JSON file");
  cmd_io->add_option("--spec", io_spec, "construction expression instead of a file");
  cmd_io->add_option("--out", io_out, "write the canonical JSON to a file");

  CLI11_PARSE(app, argc, argv);

  if (cmd_index->parsed()) {
    lx_algebra* alg = nullptr;
    lx_status st = lx_algebra_from_spec(spec.c_str(), &alg);
    if (st != LX_OK) return fail(st);
    char* text = nullptr;
    st = lx_algebra_index(alg, &index_opts.cfg, &text);
    lx_algebra_free(alg);
    if (st != LX_OK) return fail(st);
    const std::string json_text(text);
    lx_string_free(text);
    const std::string payload =
        index_opts.json ? json_text : render_index_text(json_text);
    return emit(payload, index_opts.out_path) ? 0 : 2;
  }

  if (cmd_suite->parsed()) {
    char* text = nullptr;
    int32_t all_expected = 0;
    const lx_status st =
        lx_suite_run(&suite_opts.cfg, filter.c_str(), &text, &all_expected);
    if (st != LX_OK) return fail(st);
    const std::string json_text(text);
    lx_string_free(text);
    const std::string payload =
        suite_opts.json ? json_text : render_suite_text(json_text);
    if (!emit(payload, suite_opts.out_path)) return 2;
    return all_expected ? 0 : 1;
  }

  // io
  if (io_input.empty() == io_spec.empty()) {
    std::cerr << "error: io needs exactly one of <input> or --spec\n";
    return 2;
  }
  lx_algebra* alg = nullptr;
  lx_status st;
  if (!io_spec.empty()) {
    st = lx_algebra_from_spec(io_spec.c_str(), &alg);
  } else {
    std::ifstream f(io_input, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read " << io_input << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    st = lx_algebra_from_json(buf.str().c_str(), &alg);
  }
  if (st != LX_OK) return fail(st);
  char* text = nullptr;
  st = lx_algebra_to_json(alg, &text);
  lx_algebra_free(alg);
  if (st != LX_OK) return fail(st);
  std::string payload(text);
  lx_string_free(text);
  return emit(payload, io_out) ? 0 : 2;
}
