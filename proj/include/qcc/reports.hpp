#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcc/harness.hpp"

namespace qcc {

/// One closed-form constant, computed by the library rather than typed in.
struct AnalyzeRow {
  std::string key;
  std::string label;
  double value;
  std::string exact;
};

std::vector<AnalyzeRow> analyze();
std::string format_analyze(const std::vector<AnalyzeRow>& rows);
nlohmann::json analyze_json(const std::vector<AnalyzeRow>& rows);

nlohmann::json to_json(const TrialSummary& s);
std::string format_summary(const TrialSummary& s);

/// Optimum as a reduced fraction plus a witness. Throws UsageError for an
/// unsupported N.
nlohmann::json search_json(int parties, int n, unsigned workers = 1);
std::string format_search(const nlohmann::json& result);

nlohmann::json bell_json(std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);
std::string format_bell(const nlohmann::json& result);

struct RegionFiles {
  std::filesystem::path grid;
  std::filesystem::path boundary;
  std::size_t rows;
};

/// `out` gets the grid; the boundary goes next to it with `_boundary`
/// inserted before the extension. Throws std::runtime_error when a file
/// cannot be written.
RegionFiles write_region(int parties, int resolution, const std::filesystem::path& out, int n = 4);

std::filesystem::path boundary_path_for(const std::filesystem::path& out);

/// Fixed-point with 9 decimals, as used in the text reports.
std::string format_fixed9(double v);

}  // namespace qcc
