#pragma once

#include <cstdint>

#include "irmir/histogram.hpp"

namespace irmir {

/// Sample entropy -sum p_i ln p_i over nonzero bins, in nats.
double entropy(const ChannelHistogram& hist);

/// Sample joint entropy over nonzero cells, in nats.
double joint_entropy(const JointHistogram& joint);

/// H(X1) + H(X2) - H(X1,X2) with marginals derived from row/column sums.
/// Tiny residues (|x| < 1e-12) are clamped to 0.
double mutual_information(const JointHistogram& joint);

/// Information ratio of one intensity level: -ln(p_i)/ln(h_i) when the bin
/// holds more than one pixel, 0 otherwise.
double level_information_ratio(const ChannelHistogram& hist, int level);

/// IR feature count: sum_i h_i * level ratio, in pixels. Base-invariant.
double information_ratio(const ChannelHistogram& hist);

/// Entropy lower bound on the IR: NM * H / ln(NM).
/// Throws DegenerateSize when the histogram holds a single pixel.
double lir(const ChannelHistogram& hist);

/// MIR feature count: sum over cells with more than one pixel of
/// h_ij * ln(p_ij/(p_i p_j)) / ln(h_ij), in pixels. Base-invariant.
double mutual_information_ratio(const JointHistogram& joint);

/// Mutual-information lower bound on the MIR: NM * I / ln(NM).
/// Throws DegenerateSize when the joint holds a single pixel.
double lmir(const JointHistogram& joint);

enum class Marginal { First, Second };

/// Joint-histogram upper bound on the IR of one of the two channels:
/// -sum over cells with more than one pixel of h_ij * ln(p_marginal)/ln(h_ij).
double ir_joint_upper_bound(const JointHistogram& joint, Marginal which);

/// True iff depth_bits <= ln(N*M) / (2 ln 2), the regime in which IR and MIR
/// cannot exceed the pixel count.
bool bound_condition_holds(int depth_bits, std::uint64_t width, std::uint64_t height);

/// Single-channel measures at one feature distance.
struct MeasureReport {
    double entropy = 0; // nats
    double ir = 0;      // pixels
    double lir = 0;     // pixels
    std::uint64_t nm = 0;
    int levels = 0;
    int distance = 1;
};

/// Cross-channel measures at one feature distance.
struct MatchReport {
    double mutual_information = 0; // nats
    double joint_entropy = 0;      // nats
    double mir = 0;                // pixels
    double lmir = 0;               // pixels
    std::uint64_t nm = 0;
    int levels = 0;
    int distance = 1;
};

MeasureReport measure(const ChannelHistogram& hist, int distance_used);
MatchReport measure_pair(const JointHistogram& joint, int distance_used);

} // namespace irmir
