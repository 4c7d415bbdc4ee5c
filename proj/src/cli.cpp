#include "l2tree/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "l2tree/errors.hpp"
#include "l2tree/report.hpp"

namespace l2tree {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact l2-invariants of graphs of groups and quotient criteria for torsion presentations", "l2tree"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalysisOptions options;
  bool json = false;
  std::string out_file;
  std::size_t normal_generators = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "Emit the report as JSON");
    cmd->add_option("--out", out_file, "Write the report to this file instead of standard output");
    cmd->add_option("--limit", options.limit, "Coset limit for the enumeration oracle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  std::string presentation_arg;
  auto* pres = app.add_subcommand("analyze-presentation", "Apply the quotient criteria to a torsion presentation");
  pres->add_option("presentation", presentation_arg, "Presentation text, or a file containing it")->required();
  pres->add_flag("--enumerate", options.enumerate, "Run coset enumeration to check hypotheses and bounds");
  pres->add_flag("--emit-table", options.emit_table, "Include the completed coset table in the report");
  add_common(pres);

  std::string graph_file;
  auto* gog = app.add_subcommand("analyze-gog", "Compute chi and b1 of the fundamental group of a graph of groups");
  gog->add_option("file", graph_file, "Graph-of-groups JSON file")->required()->check(CLI::ExistingFile);
  auto* ngen = gog->add_option("--normal-generators", normal_generators,
                               "Number m of normal generators of N; enables the quotient verdict");
  gog->add_flag("--assume-class-C", options.assume_class_c,
                "Treat undetermined class-C checks on vertex and edge groups as asserted");
  add_common(gog);

  std::string census_dir;
  bool builtin = false;
  auto* census = app.add_subcommand("census", "Batch analysis of a directory or of the built-in triangle groups");
  auto* dir_opt = census->add_option("dir", census_dir, "Directory of presentation (*.txt, *.pres) and graph (*.json) files");
  auto* builtin_opt = census->add_flag("--builtin", builtin, "Use the built-in triangle-group census");
  dir_opt->excludes(builtin_opt);
  census->add_flag("--enumerate", options.enumerate, "Run coset enumeration on every presentation");
  add_common(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Report report;
  try {
    if (*pres) {
      const auto text = std::filesystem::is_regular_file(presentation_arg) ? read_file(presentation_arg) : presentation_arg;
      report = analyze_presentation(text, options);
    } else if (*gog) {
      if (*ngen) options.normal_generators = normal_generators;
      report = analyze_gog(read_file(graph_file), graph_file, options);
    } else {
      if (!builtin && census_dir.empty()) {
        err << "census: give a directory or --builtin\n";
        return kExitInputError;
      }
      report = run_census(builtin ? builtin_census() : directory_census(census_dir), options);
    }
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidInputError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInputError;
  }

  const auto rendered = json ? report.json.dump(2) + "\n" : report.text();
  if (out_file.empty()) {
    out << rendered;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_file << "\n";
      return kExitInputError;
    }
    f << rendered;
  }
  return report.exit_code;
}

}  // namespace l2tree
