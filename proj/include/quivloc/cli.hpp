#ifndef QUIVLOC_CLI_HPP
#define QUIVLOC_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quivloc/presentation.hpp"

namespace quivloc {

enum class Command { Present, FixedPoints, Localize, ToricGkm, VerifyExamples };
enum class OutputFormat { Text, Machine, Latex };
enum class ToricAction { Trees, Edges, Basis, Check };

struct JobSpec {
  Command command = Command::FixedPoints;
  std::string quiverPath;
  StabilityMode mode = StabilityMode::Stable;
  std::optional<unsigned> maxDegree;
  OutputFormat format = OutputFormat::Text;
  ToricAction toricAction = ToricAction::Trees;
  bool dot = false;
  std::string tuplePath;
  std::string fixtureDir;
};

/// Runs one job and writes its report to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 on domain errors, 2 on I/O or parse errors.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses the arguments (without the program name) and runs the job.
int runCommandLine(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivloc

#endif  // QUIVLOC_CLI_HPP
