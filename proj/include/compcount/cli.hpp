#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcount/exactnum.hpp"
#include "compcount/graphcomp.hpp"

namespace compcount::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, resource_error = 3 };

enum class Format { plain, csv, json };

/// One command's result. Sequence values carry a single index (n); triangle
/// entries carry (n, k).
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::vector<std::int64_t>, BigCount>> values;
  std::optional<LabeledGraph> graph;
};

void write_record(const OutputRecord& record, Format format, std::ostream& out);

/// Runs the command line (args excludes the program name). Results go to
/// `out`, diagnostics and help for usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compcount::cli
