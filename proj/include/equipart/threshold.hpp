#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "equipart/part_sizes.hpp"
#include "equipart/qpartition.hpp"

namespace equipart {

/// Why the level scan stopped at h.
struct StopReason {
    enum class Kind {
        // Some part n_i has no h-partition: n_i > (h+1) * floor(n_i/h).
        NoQPartition,
        // Two distinct parts are both not divisible by h.
        TwoNondivisible,
    };

    Kind kind = Kind::NoQPartition;
    // One index for NoQPartition, two ascending indices for TwoNondivisible.
    std::vector<std::size_t> witnesses;

    friend bool operator==(const StopReason&, const StopReason&) = default;
};

std::string_view to_string(StopReason::Kind kind) noexcept;

struct CriticalLevel {
    Int h = 0;
    StopReason reason;

    friend bool operator==(const CriticalLevel&, const CriticalLevel&) = default;
};

struct ThresholdReport {
    PartSizes parts;
    Int s_star = 0;
    Int h = 0;
    StopReason reason;
    Int chi_star = 0;
    // Minimal (h-1)-partition of each part, in part order.
    std::vector<QPartition> initial_partitions;
};

/// Least s >= 2 that does not divide n. Throws InvalidArgument for n < 1.
Int s_star(Int n);

/// min_i s_star(n_i).
Int s_star_all(const PartSizes& parts);

/// Reference definition of the critical level h: tries q = 1, 2, 3, ... and
/// stops at the first q where some part has no q-partition (condition A) or
/// two parts are not divisible by q (condition B). B wins when both hold.
/// Witnesses are the smallest qualifying indices.
CriticalLevel compute_h_scan(const PartSizes& parts);

/// Level search that starts at s_star_all(parts) and only tests the single
/// non-divisible part for condition A. Levels where every part is divisible
/// are skipped. Always agrees with compute_h_scan.
CriticalLevel compute_h_fast(const PartSizes& parts);

/// Equitable chromatic threshold of K_{n_1,...,n_l}: sum_i ceil(n_i / h).
/// Throws UnsupportedInstance for a single part.
ThresholdReport chi_star(const PartSizes& parts);

/// Threshold for r equal parts of size n: r * ceil(n / s_star(n)).
/// Throws InvalidArgument for n < 1 or r < 2.
Int chi_star_equal(Int n, Int r);

// OpenMP kernels. Same results as the serial versions above, which stay the
// reference for testing.
CriticalLevel compute_h_parallel(const PartSizes& parts);
ThresholdReport chi_star_parallel(const PartSizes& parts);

} // namespace equipart
