#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irmir/commands.hpp"
#include "irmir/errors.hpp"

namespace {

struct CommonFlags {
    std::string channels = "all";
    std::string format = "csv";
    int precision = 6;
    bool scale_e03 = false;
    std::string external_counts;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--channel", flags.channels, "Channel selector: r, g, b, or all")
        ->default_val("all");
    cmd->add_option("--format", flags.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    cmd->add_option("--precision", flags.precision, "Significant digits in CSV output")
        ->check(CLI::Range(1, 17))
        ->default_val(6);
    cmd->add_flag("--scale-e03", flags.scale_e03,
                  "Report pixel-count columns in thousands (table-style scaling)");
    cmd->add_option("--external-counts", flags.external_counts,
                    "CSV of externally computed detector counts keyed by image path");
}

irmir::CommonOptions to_options(const CommonFlags& flags) {
    irmir::CommonOptions options;
    options.channels = irmir::parse_channel_selector(flags.channels);
    options.format =
        flags.format == "json" ? irmir::OutputFormat::Json : irmir::OutputFormat::Csv;
    options.precision = flags.precision;
    options.scale_e03 = flags.scale_e03;
    if (!flags.external_counts.empty()) {
        options.external_counts = flags.external_counts;
    }
    return options;
}

void print_output(const irmir::CommandOutput& output, const irmir::CommonOptions& options) {
    for (const auto& note : output.notes) {
        std::cerr << "note: " << note << "\n";
    }
    irmir::emit(std::cout, output, options);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information Ratio (IR) and Mutual Information Ratio (MIR) image features"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, match_flags, sweep_flags, optimize_flags, batch_flags,
        twosymbol_flags;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Entropy, IR, and LIR of one image");
    std::string analyze_image;
    int analyze_distance = 1;
    analyze->add_option("image", analyze_image, "Image file (PNG, JPEG, PPM, PGM)")
        ->required();
    analyze->add_option("--distance", analyze_distance, "Feature distance d")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    add_common_flags(analyze, analyze_flags);

    // match
    auto* match = app.add_subcommand("match", "MI, joint entropy, MIR, and LMIR of a pair");
    std::string match_a, match_b;
    int match_distance = 1;
    match->add_option("image_a", match_a, "First image")->required();
    match->add_option("image_b", match_b, "Second image (same dimensions)")->required();
    match->add_option("--distance", match_distance, "Feature distance d")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    add_common_flags(match, match_flags);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "IR/LIR curve over a brightness grid");
    std::string sweep_image;
    int sweep_distance = 1;
    double kmin = 0.9, kstep = 0.1;
    double kmax = 0.0;
    bool kmax_set = false;
    sweep->add_option("image", sweep_image, "Image file")->required();
    sweep->add_option("--distance", sweep_distance, "Feature distance d")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    sweep->add_option("--kmin", kmin, "First brightness coefficient")->default_val(0.9);
    sweep->add_option("--kstep", kstep, "Brightness grid step")->default_val(0.1);
    auto* kmax_opt =
        sweep->add_option("--kmax", kmax, "Last brightness coefficient (default 255/mean)");
    add_common_flags(sweep, sweep_flags);

    // optimize
    auto* optimize = app.add_subcommand("optimize", "Brightness coefficient search per channel");
    std::string optimize_image;
    irmir::OptimizeConfig optimize_config; // defaults: d=8, grid 0.9 + 0.1n up to 255/mean
    optimize->add_option("image", optimize_image, "Image file")->required();
    optimize->add_option("--distance", optimize_config.distance, "Feature distance d")
        ->check(CLI::PositiveNumber)
        ->default_val(8);
    optimize->add_option("--kstart", optimize_config.k_start, "First grid point")
        ->default_val(0.9);
    optimize->add_option("--kstep", optimize_config.k_step, "Grid step")->default_val(0.1);
    add_common_flags(optimize, optimize_flags);

    // batch
    auto* batch = app.add_subcommand("batch", "Per-category means over a dataset manifest");
    std::string batch_manifest;
    std::string batch_mode = "analyze";
    std::vector<int> batch_distances;
    batch->add_option("manifest", batch_manifest, "JSON manifest of dataset entries")
        ->required();
    batch->add_option("--mode", batch_mode, "analyze, match, or optimize")
        ->check(CLI::IsMember({"analyze", "match", "optimize"}))
        ->default_val("analyze");
    batch->add_option("--distance", batch_distances,
                      "Feature distance(s) d; repeat for several");
    add_common_flags(batch, batch_flags);

    // twosymbol
    auto* twosymbol =
        app.add_subcommand("twosymbol", "Normalized IR and entropy of a two-symbol source");
    std::uint64_t nm = 1000;
    int pgrid_steps = 200;
    twosymbol->add_option("--nm", nm, "Number of samples")->default_val(1000);
    twosymbol->add_option("--pgrid-steps", pgrid_steps, "Probability grid points")
        ->check(CLI::PositiveNumber)
        ->default_val(200);
    add_common_flags(twosymbol, twosymbol_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1
    }

    try {
        if (*analyze) {
            const auto options = to_options(analyze_flags);
            print_output(irmir::run_analyze(analyze_image, analyze_distance, options), options);
        } else if (*match) {
            const auto options = to_options(match_flags);
            print_output(irmir::run_match(match_a, match_b, match_distance, options), options);
        } else if (*sweep) {
            const auto options = to_options(sweep_flags);
            irmir::SweepOptions sweep_options;
            sweep_options.k_min = kmin;
            sweep_options.k_step = kstep;
            kmax_set = kmax_opt->count() > 0;
            if (kmax_set) {
                sweep_options.k_max = kmax;
            }
            print_output(irmir::run_sweep(sweep_image, sweep_distance, sweep_options, options),
                         options);
        } else if (*optimize) {
            const auto options = to_options(optimize_flags);
            print_output(irmir::run_optimize(optimize_image, optimize_config, options),
                         options);
        } else if (*batch) {
            const auto options = to_options(batch_flags);
            if (batch_distances.empty()) {
                batch_distances = batch_mode == "optimize" ? std::vector<int>{8}
                                                           : std::vector<int>{1};
            }
            print_output(irmir::run_batch(batch_manifest, irmir::parse_batch_mode(batch_mode),
                                          batch_distances, options),
                         options);
        } else if (*twosymbol) {
            const auto options = to_options(twosymbol_flags);
            print_output(irmir::run_two_symbol(nm, pgrid_steps, options), options);
        }
    } catch (const irmir::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const irmir::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
