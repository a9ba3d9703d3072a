#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointex/algebra.hpp"
#include "pointex/commpoly.hpp"

namespace pointex {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

/// Contents of a presentation file; see README for the grammar.
struct PresentationFile {
  Presentation presentation;
  std::optional<Matrix> skew;  // the shortcut matrix, when one was given
};

/// Parses a presentation file. Errors carry "line L, col C".
PresentationFile parse_presentation_file(const std::string& text);
PresentationFile read_presentation_file(const std::string& path);
/// Canonical text form; parsing it gives back the same presentation.
std::string serialize_presentation(const Presentation& p);

struct RunConfig {
  std::size_t length = 6;
  std::size_t cap = 8;
  MonomialOrder order;
  std::string side = "both";  // right | left | both
  std::uint64_t seed = 0;
  std::string element;        // quotient element, if any
  std::string point;          // comma-separated coordinates
  std::size_t max_degree = 3;
};

struct RunOutput {
  std::string json;
  std::string text;
};

/// Subcommands: resolve, point-variety, check-g1, check-point-exact,
/// quotient, shamash, sigma, report.
const std::vector<std::string>& subcommands();

/// Runs one subcommand. Mathematical verdicts (including negative ones)
/// are part of the output; exceptions signal input errors or faults.
RunOutput run_pipeline(const PresentationFile& file, const std::string& subcommand, const RunConfig& cfg);

}  // namespace pointex
