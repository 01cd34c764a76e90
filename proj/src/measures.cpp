#include "irmir/measures.hpp"

#include <cmath>
#include <string>

namespace irmir {

namespace {

// Summations run in index order with extended-precision accumulators so
// results are reproducible and residues stay below the 1e-12 clamp.

long double prob(std::uint64_t count, std::uint64_t total) {
    return static_cast<long double>(count) / static_cast<long double>(total);
}

long double entropy_of_counts(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
    long double h = 0.0L;
    for (std::uint64_t c : counts) {
        if (c == 0) {
            continue;
        }
        const long double p = prob(c, total);
        h -= p * std::log(p);
    }
    return h;
}

double clamp_residue(long double x) {
    double v = static_cast<double>(x);
    if (std::fabs(v) < 1e-12) {
        v = 0.0;
    }
    return v;
}

} // namespace

double entropy(const ChannelHistogram& hist) {
    return static_cast<double>(entropy_of_counts(hist.counts, hist.total));
}

double joint_entropy(const JointHistogram& joint) {
    return static_cast<double>(entropy_of_counts(joint.counts, joint.total));
}

double mutual_information(const JointHistogram& joint) {
    const long double h1 = entropy_of_counts(joint.row_sums(), joint.total);
    const long double h2 = entropy_of_counts(joint.col_sums(), joint.total);
    const long double h12 = entropy_of_counts(joint.counts, joint.total);
    return clamp_residue(h1 + h2 - h12);
}

double level_information_ratio(const ChannelHistogram& hist, int level) {
    if (level < 0 || level >= hist.levels) {
        throw IndexOutOfRange("level " + std::to_string(level) + " outside [0, " +
                              std::to_string(hist.levels) + ")");
    }
    const std::uint64_t c = hist.counts[static_cast<std::size_t>(level)];
    if (c <= 1) {
        return 0.0; // a lone pixel carries no repeated-intensity information
    }
    const long double p = prob(c, hist.total);
    return static_cast<double>(-std::log(p) / std::log(static_cast<long double>(c)));
}

double information_ratio(const ChannelHistogram& hist) {
    long double sum = 0.0L;
    for (std::uint64_t c : hist.counts) {
        if (c <= 1) {
            continue;
        }
        const long double p = prob(c, hist.total);
        sum += static_cast<long double>(c) *
               (-std::log(p) / std::log(static_cast<long double>(c)));
    }
    return static_cast<double>(sum);
}

double lir(const ChannelHistogram& hist) {
    if (hist.total < 2) {
        throw DegenerateSize("LIR is undefined for a single-pixel histogram");
    }
    const long double h = entropy_of_counts(hist.counts, hist.total);
    return static_cast<double>(static_cast<long double>(hist.total) * h /
                               std::log(static_cast<long double>(hist.total)));
}

double mutual_information_ratio(const JointHistogram& joint) {
    const auto rows = joint.row_sums();
    const auto cols = joint.col_sums();
    long double sum = 0.0L;
    for (int i = 0; i < joint.levels; ++i) {
        const std::uint64_t row_total = rows[static_cast<std::size_t>(i)];
        if (row_total == 0) {
            continue;
        }
        const long double log_pi = std::log(prob(row_total, joint.total));
        const std::size_t base = static_cast<std::size_t>(i) * joint.levels;
        for (int j = 0; j < joint.levels; ++j) {
            const std::uint64_t c = joint.counts[base + static_cast<std::size_t>(j)];
            if (c <= 1) {
                continue; // same convention as the per-level information ratio
            }
            const long double log_pij = std::log(prob(c, joint.total));
            const long double log_pj =
                std::log(prob(cols[static_cast<std::size_t>(j)], joint.total));
            // Written as a difference of logs so a diagonal joint reproduces
            // the IR terms exactly.
            sum += static_cast<long double>(c) *
                   ((log_pij - log_pi - log_pj) / std::log(static_cast<long double>(c)));
        }
    }
    return static_cast<double>(sum);
}

double lmir(const JointHistogram& joint) {
    if (joint.total < 2) {
        throw DegenerateSize("LMIR is undefined for a single-pixel joint histogram");
    }
    const double mi = mutual_information(joint);
    const long double value = static_cast<long double>(joint.total) * mi /
                              std::log(static_cast<long double>(joint.total));
    return clamp_residue(value);
}

double ir_joint_upper_bound(const JointHistogram& joint, Marginal which) {
    const auto marginals = which == Marginal::First ? joint.row_sums() : joint.col_sums();
    long double sum = 0.0L;
    for (int i = 0; i < joint.levels; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * joint.levels;
        for (int j = 0; j < joint.levels; ++j) {
            const std::uint64_t c = joint.counts[base + static_cast<std::size_t>(j)];
            if (c <= 1) {
                continue;
            }
            const std::uint64_t m =
                marginals[static_cast<std::size_t>(which == Marginal::First ? i : j)];
            const long double p = prob(m, joint.total);
            sum += static_cast<long double>(c) *
                   (-std::log(p) / std::log(static_cast<long double>(c)));
        }
    }
    return static_cast<double>(sum);
}

bool bound_condition_holds(int depth_bits, std::uint64_t width, std::uint64_t height) {
    const long double nm = static_cast<long double>(width) * static_cast<long double>(height);
    const long double limit = std::log(nm) / (2.0L * std::log(2.0L));
    // Small slack keeps exact power-of-four boundaries on the true side.
    return static_cast<long double>(depth_bits) <= limit + 1e-9L;
}

MeasureReport measure(const ChannelHistogram& hist, int distance_used) {
    MeasureReport report;
    report.entropy = entropy(hist);
    report.ir = information_ratio(hist);
    report.lir = lir(hist);
    report.nm = hist.total;
    report.levels = hist.levels;
    report.distance = distance_used;
    return report;
}

MatchReport measure_pair(const JointHistogram& joint, int distance_used) {
    MatchReport report;
    report.mutual_information = mutual_information(joint);
    report.joint_entropy = joint_entropy(joint);
    report.mir = mutual_information_ratio(joint);
    report.lmir = lmir(joint);
    report.nm = joint.total;
    report.levels = joint.levels;
    report.distance = distance_used;
    return report;
}

} // namespace irmir
