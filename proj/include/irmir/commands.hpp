#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irmir/channel.hpp"
#include "irmir/optimizer.hpp"
#include "irmir/report.hpp"

namespace irmir {

enum class OutputFormat { Csv, Json };

/// Flags shared by every subcommand.
struct CommonOptions {
    std::vector<ColorChannel> channels = {ColorChannel::Red, ColorChannel::Green,
                                          ColorChannel::Blue};
    OutputFormat format = OutputFormat::Csv;
    int precision = 6;
    bool scale_e03 = false;
    std::optional<std::filesystem::path> external_counts;
};

/// Parses "r", "g", "b", or "all" (red listed first for comparability).
std::vector<ColorChannel> parse_channel_selector(const std::string& selector);

struct CommandOutput {
    ReportTable table;
    std::vector<std::string> notes; // diagnostics for stderr; never part of the table
};

CommandOutput run_analyze(const std::filesystem::path& image, int distance,
                          const CommonOptions& common);

CommandOutput run_match(const std::filesystem::path& image_a,
                        const std::filesystem::path& image_b, int distance,
                        const CommonOptions& common);

struct SweepOptions {
    double k_min = 0.9;
    double k_step = 0.1;
    std::optional<double> k_max; // default: 255 / channel mean
};

CommandOutput run_sweep(const std::filesystem::path& image, int distance,
                        const SweepOptions& sweep_options, const CommonOptions& common);

CommandOutput run_optimize(const std::filesystem::path& image, const OptimizeConfig& config,
                           const CommonOptions& common);

enum class BatchMode { Analyze, Match, Optimize };

BatchMode parse_batch_mode(const std::string& mode);

/// Processes the manifest (entries in parallel, aggregation in manifest
/// order) and reports per-category means of every measure column. Failing
/// entries are excluded from the means and surfaced in `notes`.
CommandOutput run_batch(const std::filesystem::path& manifest, BatchMode mode,
                        const std::vector<int>& distances, const CommonOptions& common);

CommandOutput run_two_symbol(std::uint64_t nm, int grid_steps, const CommonOptions& common);

/// Writes the table to `out` in the selected format.
void emit(std::ostream& out, const CommandOutput& output, const CommonOptions& common);

} // namespace irmir
