#include "irmir/commands.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>

#include "irmir/histogram.hpp"
#include "irmir/ingest.hpp"
#include "irmir/measures.hpp"

namespace irmir {

std::vector<ColorChannel> parse_channel_selector(const std::string& selector) {
    if (selector == "all") {
        return {ColorChannel::Red, ColorChannel::Green, ColorChannel::Blue};
    }
    if (selector == "r") {
        return {ColorChannel::Red};
    }
    if (selector == "g") {
        return {ColorChannel::Green};
    }
    if (selector == "b") {
        return {ColorChannel::Blue};
    }
    throw UsageError("unknown channel selector \"" + selector + "\" (use r, g, b, or all)");
}

BatchMode parse_batch_mode(const std::string& mode) {
    if (mode == "analyze") {
        return BatchMode::Analyze;
    }
    if (mode == "match") {
        return BatchMode::Match;
    }
    if (mode == "optimize") {
        return BatchMode::Optimize;
    }
    throw UsageError("unknown batch mode \"" + mode + "\" (use analyze, match, or optimize)");
}

namespace {

MeasureReport analyze_channel(const Channel& channel, int distance) {
    const Channel quantized = quantize(channel, FeatureDistance(distance));
    return measure(build_histogram(quantized), distance);
}

MatchReport match_channels(const Channel& a, const Channel& b, int distance) {
    const FeatureDistance d(distance);
    const JointHistogram joint = build_joint_histogram(quantize(a, d), quantize(b, d));
    return measure_pair(joint, distance);
}

ExternalCounts maybe_load_external(const CommonOptions& common) {
    if (!common.external_counts) {
        return {};
    }
    return load_external_counts(*common.external_counts);
}

void append_external_columns(ReportTable& table, const ExternalCounts& external) {
    for (const auto& name : external.names()) {
        table.columns.push_back({name, true});
    }
}

void append_external_values(std::vector<ReportValue>& row,
                            const std::vector<std::optional<double>>& values) {
    for (const auto& v : values) {
        if (v) {
            row.emplace_back(*v);
        } else {
            row.emplace_back(std::monostate{});
        }
    }
}

std::string image_flags(const Image& image) {
    // JPEG decodes vary across decoders, so measured values are flagged.
    return image.jpeg_source ? "jpeg" : "";
}

} // namespace

CommandOutput run_analyze(const std::filesystem::path& image_path, int distance,
                          const CommonOptions& common) {
    const Image image = decode_image(image_path);
    const ExternalCounts external = maybe_load_external(common);

    CommandOutput output;
    output.table.columns = {{"image"},          {"channel"}, {"d"},
                            {"nm"},             {"levels"},  {"entropy"},
                            {"ir", true},       {"lir", true}};
    append_external_columns(output.table, external);
    output.table.columns.push_back({"flags"});

    const auto external_values = external.lookup(image_path);
    for (ColorChannel c : common.channels) {
        const MeasureReport report = analyze_channel(image.channel(c), distance);
        std::vector<ReportValue> row = {image_path.string(),
                                        std::string(color_channel_name(c)),
                                        static_cast<std::int64_t>(report.distance),
                                        static_cast<std::int64_t>(report.nm),
                                        static_cast<std::int64_t>(report.levels),
                                        report.entropy,
                                        report.ir,
                                        report.lir};
        append_external_values(row, external_values);
        row.emplace_back(image_flags(image));
        output.table.add_row(std::move(row));
    }
    return output;
}

CommandOutput run_match(const std::filesystem::path& image_a,
                        const std::filesystem::path& image_b, int distance,
                        const CommonOptions& common) {
    const Image a = decode_image(image_a);
    const Image b = decode_image(image_b);
    const ExternalCounts external = maybe_load_external(common);

    CommandOutput output;
    output.table.columns = {{"image_a"}, {"image_b"},      {"channel"},
                            {"d"},       {"nm"},           {"levels"},
                            {"mi"},      {"joint_entropy"}, {"mir", true},
                            {"lmir", true}};
    append_external_columns(output.table, external);
    output.table.columns.push_back({"flags"});

    const auto external_values = external.lookup(image_a);
    const std::string flags = a.jpeg_source || b.jpeg_source ? "jpeg" : "";
    for (ColorChannel c : common.channels) {
        const MatchReport report = match_channels(a.channel(c), b.channel(c), distance);
        std::vector<ReportValue> row = {image_a.string(),
                                        image_b.string(),
                                        std::string(color_channel_name(c)),
                                        static_cast<std::int64_t>(report.distance),
                                        static_cast<std::int64_t>(report.nm),
                                        static_cast<std::int64_t>(report.levels),
                                        report.mutual_information,
                                        report.joint_entropy,
                                        report.mir,
                                        report.lmir};
        append_external_values(row, external_values);
        row.emplace_back(flags);
        output.table.add_row(std::move(row));
    }
    return output;
}

CommandOutput run_sweep(const std::filesystem::path& image_path, int distance,
                        const SweepOptions& sweep_options, const CommonOptions& common) {
    const Image image = decode_image(image_path);

    CommandOutput output;
    output.table.columns = {{"channel"}, {"k"}, {"ir", true}, {"lir", true}};

    for (ColorChannel c : common.channels) {
        const Channel& channel = image.channel(c);
        double k_max;
        if (sweep_options.k_max) {
            k_max = *sweep_options.k_max;
        } else {
            const double mean = channel_mean(channel);
            if (mean == 0.0) {
                output.notes.push_back(std::string("channel ") + color_channel_name(c) +
                                       ": zero mean, no default grid upper bound; skipped");
                continue;
            }
            k_max = 255.0 / mean;
        }
        const auto grid = make_k_grid(sweep_options.k_min, sweep_options.k_step, k_max);
        const SweepCurve curve = sweep(channel, FeatureDistance(distance), grid);
        for (const SweepSample& sample : curve.samples) {
            output.table.add_row({std::string(color_channel_name(c)), sample.k, sample.ir,
                                  sample.lir});
        }
    }
    return output;
}

CommandOutput run_optimize(const std::filesystem::path& image_path,
                           const OptimizeConfig& config, const CommonOptions& common) {
    const Image image = decode_image(image_path);
    const ExternalCounts external = maybe_load_external(common);

    CommandOutput output;
    output.table.columns = {{"image"},           {"channel"},
                            {"d"},               {"k_optimizer"},
                            {"ir_at_k", true},   {"ir_at_one", true},
                            {"evaluations"}};
    append_external_columns(output.table, external);
    output.table.columns.push_back({"flags"});

    const auto external_values = external.lookup(image_path);
    for (ColorChannel c : common.channels) {
        OptimizeResult result;
        try {
            result = optimize_k(image.channel(c), config);
        } catch (const ZeroMeanChannel&) {
            output.notes.push_back(std::string("channel ") + color_channel_name(c) +
                                   ": zero mean, optimization skipped");
            continue;
        }
        // Elapsed time goes to stderr so repeated runs emit identical tables.
        char timing[128];
        std::snprintf(timing, sizeof(timing), "channel %s: %d evaluations in %.6f s",
                      color_channel_name(c), result.evaluations, result.elapsed_seconds);
        output.notes.emplace_back(timing);

        std::vector<ReportValue> row = {image_path.string(),
                                        std::string(color_channel_name(c)),
                                        static_cast<std::int64_t>(config.distance),
                                        result.k_optimizer,
                                        result.ir_at_k,
                                        result.ir_at_one,
                                        static_cast<std::int64_t>(result.evaluations)};
        append_external_values(row, external_values);
        row.emplace_back(image_flags(image));
        output.table.add_row(std::move(row));
    }
    return output;
}

namespace {

struct EntryMetrics {
    // metrics[channel][d] holds the mode's metric vector, or empty when the
    // channel was skipped (e.g. zero-mean under optimize)
    std::vector<std::vector<std::optional<std::vector<double>>>> metrics;
    bool ok = false;
    bool jpeg = false;
    std::string error;
    std::vector<std::string> channel_notes;
};

std::vector<double> batch_metric_values(BatchMode mode, const Channel& channel,
                                        const Channel* paired, int distance) {
    switch (mode) {
    case BatchMode::Analyze: {
        const MeasureReport r = analyze_channel(channel, distance);
        return {r.entropy, r.ir, r.lir};
    }
    case BatchMode::Match: {
        const MatchReport r = match_channels(channel, *paired, distance);
        return {r.mutual_information, r.joint_entropy, r.mir, r.lmir};
    }
    default: {
        OptimizeConfig config;
        config.distance = distance;
        const OptimizeResult r = optimize_k(channel, config);
        return {r.k_optimizer, r.ir_at_k, r.ir_at_one};
    }
    }
}

EntryMetrics process_batch_entry(const ManifestEntry& entry, BatchMode mode,
                                 const std::vector<ColorChannel>& channels,
                                 const std::vector<int>& distances) {
    EntryMetrics out;
    out.metrics.assign(channels.size(),
                       std::vector<std::optional<std::vector<double>>>(distances.size()));

    const Image image = decode_image(entry.path);
    out.jpeg = image.jpeg_source;

    Image paired;
    if (mode == BatchMode::Match) {
        if (!entry.pair_with) {
            throw Error("no pair_with given; entry cannot run in match mode");
        }
        paired = decode_image(*entry.pair_with);
        out.jpeg = out.jpeg || paired.jpeg_source;
        if (paired.width() != image.width() || paired.height() != image.height()) {
            throw DimensionMismatch("pair dimensions differ (" + std::to_string(image.width()) +
                                    "x" + std::to_string(image.height()) + " vs " +
                                    std::to_string(paired.width()) + "x" +
                                    std::to_string(paired.height()) + ")");
        }
    }

    for (std::size_t ci = 0; ci < channels.size(); ++ci) {
        const Channel& channel = image.channel(channels[ci]);
        const Channel* pair_channel =
            mode == BatchMode::Match ? &paired.channel(channels[ci]) : nullptr;
        for (std::size_t di = 0; di < distances.size(); ++di) {
            try {
                out.metrics[ci][di] =
                    batch_metric_values(mode, channel, pair_channel, distances[di]);
            } catch (const ZeroMeanChannel&) {
                out.channel_notes.push_back(std::string("channel ") +
                                            color_channel_name(channels[ci]) +
                                            ": zero mean, optimization skipped");
            }
        }
    }
    out.ok = true;
    return out;
}

const std::vector<ReportColumn>& batch_metric_columns(BatchMode mode) {
    static const std::vector<ReportColumn> analyze_cols = {
        {"entropy"}, {"ir", true}, {"lir", true}};
    static const std::vector<ReportColumn> match_cols = {
        {"mi"}, {"joint_entropy"}, {"mir", true}, {"lmir", true}};
    static const std::vector<ReportColumn> optimize_cols = {
        {"k_optimizer"}, {"ir_at_k", true}, {"ir_at_one", true}};
    switch (mode) {
    case BatchMode::Analyze: return analyze_cols;
    case BatchMode::Match: return match_cols;
    default: return optimize_cols;
    }
}

} // namespace

CommandOutput run_batch(const std::filesystem::path& manifest_path, BatchMode mode,
                        const std::vector<int>& distances, const CommonOptions& common) {
    if (distances.empty()) {
        throw UsageError("batch needs at least one feature distance");
    }
    for (int d : distances) {
        FeatureDistance check(d); // validate up front
        (void)check;
    }
    const auto entries = load_manifest(manifest_path);
    const ExternalCounts external = maybe_load_external(common);

    std::vector<EntryMetrics> results(entries.size());
    const std::int64_t n = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            results[static_cast<std::size_t>(i)] = process_batch_entry(
                entries[static_cast<std::size_t>(i)], mode, common.channels, distances);
        } catch (const std::exception& e) {
            results[static_cast<std::size_t>(i)].ok = false;
            results[static_cast<std::size_t>(i)].error = e.what();
        }
    }

    CommandOutput output;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!results[i].ok) {
            ++failed;
            output.notes.push_back("entry " + entries[i].path.string() + " skipped: " +
                                   results[i].error);
        }
        for (const auto& note : results[i].channel_notes) {
            output.notes.push_back("entry " + entries[i].path.string() + ": " + note);
        }
    }
    if (failed > 0) {
        output.notes.push_back(std::to_string(failed) + " of " +
                               std::to_string(entries.size()) +
                               " entries skipped and excluded from the means");
    }

    output.table.columns = {{"category"}, {"channel"}, {"d"}, {"images"}};
    for (const auto& col : batch_metric_columns(mode)) {
        output.table.columns.push_back(col);
    }
    append_external_columns(output.table, external);
    output.table.columns.push_back({"flags"});

    // Categories aggregate in first-appearance order so output is stable.
    std::vector<std::string> categories;
    for (const auto& entry : entries) {
        if (std::find(categories.begin(), categories.end(), entry.category) ==
            categories.end()) {
            categories.push_back(entry.category);
        }
    }

    const std::size_t metric_count = batch_metric_columns(mode).size();
    for (const auto& category : categories) {
        for (std::size_t ci = 0; ci < common.channels.size(); ++ci) {
            for (std::size_t di = 0; di < distances.size(); ++di) {
                std::vector<double> sums(metric_count, 0.0);
                std::uint64_t count = 0;
                bool any_jpeg = false;
                std::vector<double> ext_sums(external.names().size(), 0.0);
                std::vector<std::uint64_t> ext_counts(external.names().size(), 0);
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    if (entries[i].category != category || !results[i].ok) {
                        continue;
                    }
                    const auto& metrics = results[i].metrics[ci][di];
                    if (!metrics) {
                        continue;
                    }
                    for (std::size_t m = 0; m < metric_count; ++m) {
                        sums[m] += (*metrics)[m];
                    }
                    ++count;
                    any_jpeg = any_jpeg || results[i].jpeg;
                    const auto ext_values = external.lookup(entries[i].path);
                    for (std::size_t e = 0; e < ext_values.size(); ++e) {
                        if (ext_values[e]) {
                            ext_sums[e] += *ext_values[e];
                            ++ext_counts[e];
                        }
                    }
                }
                if (count == 0) {
                    continue;
                }
                std::vector<ReportValue> row = {category,
                                                std::string(color_channel_name(
                                                    common.channels[ci])),
                                                static_cast<std::int64_t>(distances[di]),
                                                static_cast<std::int64_t>(count)};
                for (std::size_t m = 0; m < metric_count; ++m) {
                    row.emplace_back(sums[m] / static_cast<double>(count));
                }
                for (std::size_t e = 0; e < ext_sums.size(); ++e) {
                    if (ext_counts[e] > 0) {
                        row.emplace_back(ext_sums[e] / static_cast<double>(ext_counts[e]));
                    } else {
                        row.emplace_back(std::monostate{});
                    }
                }
                row.emplace_back(std::string(any_jpeg ? "jpeg" : ""));
                output.table.add_row(std::move(row));
            }
        }
    }
    return output;
}

CommandOutput run_two_symbol(std::uint64_t nm, int grid_steps, const CommonOptions& common) {
    (void)common;
    if (nm < 4) {
        throw UsageError("--nm must be at least 4");
    }
    if (grid_steps < 1 || static_cast<std::uint64_t>(grid_steps) + 2 > nm) {
        throw UsageError("--pgrid-steps must lie in [1, nm-2]");
    }
    const auto grid = make_probability_grid(grid_steps, nm);
    const auto points = two_symbol_profile(nm, grid);

    CommandOutput output;
    output.table.columns = {{"p"}, {"normalized_ir"}, {"normalized_entropy"}, {"singleton"}};
    for (const auto& point : points) {
        output.table.add_row({point.p, point.normalized_ir, point.normalized_entropy,
                              static_cast<std::int64_t>(point.singleton ? 1 : 0)});
    }
    return output;
}

void emit(std::ostream& out, const CommandOutput& output, const CommonOptions& common) {
    if (common.format == OutputFormat::Json) {
        write_json(out, output.table, common.scale_e03);
    } else {
        write_csv(out, output.table, common.precision, common.scale_e03);
    }
}

} // namespace irmir
