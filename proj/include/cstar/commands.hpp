#ifndef CSTAR_COMMANDS_HPP
#define CSTAR_COMMANDS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cstar/io.hpp"

namespace cstar {

enum class ExitStatus { Ok = 0, Invalid = 1, NotFano = 2 };

struct RunConfig {
  std::optional<IntVector> alpha;
  AnalysisOptions options;
  unsigned jobs = 1;
};

struct CommandResult {
  ExitStatus status = ExitStatus::Ok;
  Json document;
  /// Present only for a successful analysis; used by the text formatter.
  std::optional<StabilityReport> report;
};

Json read_json_file(const std::filesystem::path& path);

CommandResult validate_command(const Json& doc);
CommandResult analyze_command(const Json& doc, const RunConfig& config);
CommandResult degenerations_command(const Json& doc, const RunConfig& config);

/// Directories are expanded to their *.json entries; everything is sorted by
/// file name before analysis.
std::vector<std::filesystem::path> collect_inputs(const std::vector<std::filesystem::path>& paths);

CommandResult batch_command(const std::vector<std::filesystem::path>& files, const RunConfig& config);

std::string batch_to_text(const Json& summary);

}  // namespace cstar

#endif  // CSTAR_COMMANDS_HPP
