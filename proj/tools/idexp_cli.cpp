// Batch front end: one problem document, one command, one JSON report on
// standard output. Exit 0 on success, 1 on input/precondition errors, 2 when
// a search budget or the supported characteristic range is exceeded.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "idexp/document.hpp"
#include "idexp/error.hpp"
#include "idexp/fixtures.hpp"

namespace {

int emit_error(const std::string& kind, const std::string& reason, int code) {
  nlohmann::ordered_json err;
  err["error"] = {{"kind", kind}, {"reason", reason}};
  std::cout << err.dump(2) << "\n";
  return code;
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string command_list() {
  std::string out;
  for (const std::string& name : idexp::command_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idealistic-exponent toolkit: polyhedra, invariants and blow-up probes\n"
               "for weighted ideal systems, driven by JSON problem documents."};
  app.footer("Commands: " + command_list() +
             "\nInput is a document path, standard input, or --fixture NAME.");

  std::string command;
  std::string input_path;
  std::string fixture_name;
  std::string svg_path;
  int degree_bound = 64;
  int search_depth = 3;

  app.add_option("command", command, "Operation to run")->required();
  app.add_option("input", input_path, "Problem document path (default: stdin)");
  auto* db_opt = app.add_option("--degree-bound", degree_bound,
                                "Series truncation bound for preparation");
  auto* sd_opt = app.add_option("--search-depth", search_depth,
                                "Blow-up search depth for probe-equiv");
  app.add_option("--svg", svg_path, "Write the plot SVG to this path");
  auto* fx_opt = app.add_option("--fixture", fixture_name, "Run a named built-in fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  const auto& names = idexp::command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    std::cerr << "unknown command: " << command << "\n\n" << app.help();
    return 1;
  }

  try {
    std::string text;
    if (fx_opt->count() > 0) {
      if (!input_path.empty()) {
        throw idexp::input_error("give either an input path or --fixture, not both");
      }
      text = idexp::fixture(fixture_name).document;
    } else if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) throw idexp::input_error("cannot open input file: " + input_path);
      text = slurp(in);
    } else {
      text = slurp(std::cin);
    }

    idexp::RunOverrides overrides;
    if (db_opt->count() > 0) overrides.degree_bound = degree_bound;
    if (sd_opt->count() > 0) overrides.search_depth = search_depth;

    const idexp::CommandResult result = idexp::run_command(command, text, overrides);
    std::cout << result.report;
    if (result.svg && !svg_path.empty()) {
      std::ofstream out(svg_path);
      if (!out) throw idexp::input_error("cannot write svg file: " + svg_path);
      out << *result.svg;
    }
    return 0;
  } catch (const idexp::budget_error& e) {
    return emit_error("budget", e.what(), 2);
  } catch (const idexp::precondition_error& e) {
    return emit_error("precondition", e.what(), 1);
  } catch (const idexp::input_error& e) {
    return emit_error("input", e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), 1);
  }
}
