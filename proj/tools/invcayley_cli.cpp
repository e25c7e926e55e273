// Command-line front end for the invcayley shared library. Thin by design:
// argument handling here, everything else behind the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "invcayley.h"

namespace {

constexpr const char* kGrammarHelp = R"help(Ring spec grammar (whitespace-insensitive):
  spec := term ("x" term)*
  term := "Z" n            cyclic ring Z_n, n >= 2
        | "GF(" q ")"      finite field, q a prime power
        | "GF(" p "," k ")" finite field of order p^k
        | catalog id       Z2X2, Z2X3, Z4A, Z2XY, Z4B
        | quotient alias   Z2[x]/(x^2), Z2[x]/(x^3), Z4[x]/(2x,x^2-2),
                           Z2[x,y]/(x^2,xy,y^2), Z4[x]/(x^2,2x)
        | "(" spec ")"
  examples: "Z8", "Z3 x Z5", "GF(9) x Z2", "Z2[x,y]/(x^2,xy,y^2)")help";

int finish(icg_status status, char* output, char* error,
           const std::string& out_path) {
  if (output) {
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << out_path << "\n";
        icg_string_free(output);
        icg_string_free(error);
        return 1;
      }
      f << output;
    } else {
      std::cout << output;
    }
  }
  if (error) std::cerr << "error: " << error << "\n";
  icg_string_free(output);
  icg_string_free(error);
  switch (status) {
    case ICG_OK:
      return 0;
    case ICG_INDETERMINATE:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"involutory Cayley graphs of finite commutative rings: "
               "construction, classification, and genus certificates"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);

  std::string spec_text;
  std::string out_path;
  bool as_json = false;
  bool as_dot = false;
  uint64_t budget = 0;  // 0 = library default
  uint32_t max_order = 16;
  std::string theorems;

  auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
    if (with_spec)
      cmd->add_option("spec", spec_text, "ring spec (see grammar below)")
          ->required();
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
    cmd->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "ring and graph invariants plus the genus class");
  add_common(analyze);

  CLI::App* classify = app.add_subcommand(
      "classify", "genus class with the classification clause");
  add_common(classify);

  CLI::App* genus = app.add_subcommand(
      "genus", "exact genus with an embedding certificate, or bounds");
  add_common(genus);
  genus->add_option("--budget", budget, "search budget in face-trace steps");

  CLI::App* embed = app.add_subcommand(
      "embed", "constructive genus-1 rotation system for toroidal families");
  add_common(embed);

  CLI::App* exp = app.add_subcommand("export", "graph as DOT or JSON adjacency");
  add_common(exp);
  exp->add_flag("--dot", as_dot, "emit DOT (default unless --json)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the theorem verification suite over the ring catalog");
  add_common(verify, false);
  verify->add_option("--max-order", max_order, "catalog order bound")
      ->default_val(16);
  verify->add_option("--budget", budget, "per-instance search budget");
  verify->add_option("--theorems", theorems,
                     "comma-separated theorem ids (IMP1..IMP4, CONN, PLANAR, "
                     "MAIN, KMN_FORMULA, CYCLE_TENSOR)");

  CLI11_PARSE(app, argc, argv);

  icg_format format = as_json ? ICG_FORMAT_JSON : ICG_FORMAT_TEXT;
  char* output = nullptr;
  char* error = nullptr;
  icg_status status = ICG_ERROR_INVALID_ARGUMENT;

  if (analyze->parsed()) {
    status = icg_analyze(spec_text.c_str(), format, &output, &error);
  } else if (classify->parsed()) {
    status = icg_classify(spec_text.c_str(), format, &output, &error);
  } else if (genus->parsed()) {
    status = icg_genus(spec_text.c_str(), budget, format, &output, &error);
  } else if (embed->parsed()) {
    status = icg_embed(spec_text.c_str(), format, &output, &error);
  } else if (exp->parsed()) {
    icg_format efmt = as_json ? ICG_FORMAT_JSON : ICG_FORMAT_DOT;
    status = icg_export(spec_text.c_str(), efmt, &output, &error);
  } else if (verify->parsed()) {
    status = icg_verify(max_order, budget, theorems.c_str(), format, &output,
                        &error);
  }
  return finish(status, output, error, out_path);
}
