#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "l2tree/coset_enumeration.hpp"
#include "l2tree/serialization.hpp"

namespace l2tree {

inline constexpr const char* kToolName = "l2tree";
inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
/// Oracle result contradicts a conclusion of the criteria engine.
inline constexpr int kExitContradiction = 3;

struct AnalysisOptions {
  bool enumerate = false;
  std::size_t limit = kDefaultCosetLimit;
  std::optional<std::size_t> normal_generators;
  bool assume_class_c = false;
  bool emit_table = false;
};

struct Report {
  Json json;
  int exit_code = kExitOk;

  /// Human-readable rendering; carries exactly the values in `json`.
  std::string text() const;
};

/// Throws ParseError on malformed input.
Report analyze_presentation(const std::string& text, const AnalysisOptions& options);

/// `source` labels the input (usually the file path). Throws
/// InvalidInputError on schema or graph-invariant violations.
Report analyze_gog(const std::string& contents, const std::string& source, const AnalysisOptions& options);

struct CensusInput {
  std::string name;
  std::string contents;
  bool is_graph = false;
};

/// Analyses every input in order. Per-row errors are recorded and do not
/// stop the run; the exit code is kExitContradiction if any row hit one.
Report run_census(const std::vector<CensusInput>& inputs, const AnalysisOptions& options);

std::vector<CensusInput> builtin_census();
/// Regular files of `dir` sorted by name; "*.json" files are graphs.
std::vector<CensusInput> directory_census(const std::string& dir);

}  // namespace l2tree
