#include <algorithm>
#include <limits>

#include "equipart/error.hpp"
#include "equipart/threshold.hpp"

namespace equipart {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Int s_star_all_parallel(const PartSizes& parts) {
    const auto sizes = parts.view();
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(sizes.size());
    Int best = std::numeric_limits<Int>::max();
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        Int s = 2;
        while (sizes[i] % s == 0) ++s;
        best = std::min(best, s);
    }
    return best;
}

// Smallest index >= from whose part is not divisible by q, or kNone.
std::size_t first_nondivisible(std::span<const Int> sizes, Int q, std::size_t from) {
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(sizes.size());
    std::size_t found = kNone;
#pragma omp parallel for reduction(min : found) schedule(static)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(from); i < count; ++i) {
        if (sizes[i] % q != 0) found = std::min(found, static_cast<std::size_t>(i));
    }
    return found;
}

} // namespace

CriticalLevel compute_h_parallel(const PartSizes& parts) {
    const auto sizes = parts.view();
    for (Int h = s_star_all_parallel(parts);; ++h) {
        const std::size_t first = first_nondivisible(sizes, h, 0);
        if (first == kNone) continue;
        const std::size_t second = first_nondivisible(sizes, h, first + 1);
        if (second != kNone) {
            return {h, {StopReason::Kind::TwoNondivisible, {first, second}}};
        }
        const Int n = sizes[first];
        if (n > (h + 1) * (n / h)) {
            return {h, {StopReason::Kind::NoQPartition, {first}}};
        }
    }
}

ThresholdReport chi_star_parallel(const PartSizes& parts) {
    if (parts.count() < 2) {
        throw UnsupportedInstance("the threshold formula needs at least two parts");
    }
    auto level = compute_h_parallel(parts);
    ThresholdReport report{parts, s_star_all_parallel(parts), level.h, std::move(level.reason), 0,
                           std::vector<QPartition>(parts.count())};

    const auto sizes = parts.view();
    const Int q = report.h - 1;
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(sizes.size());
    Int total = 0;
    auto& out = report.initial_partitions;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        // Minimal q-partition inlined: t = ceil(n/(q+1)), b = n - q*t.
        const Int n = sizes[i];
        const Int t = ceil_div(n, q + 1);
        const Int b = n - q * t;
        out[i] = QPartition{n, q, t - b, b};
        total += t;
    }
    report.chi_star = total;
    return report;
}

} // namespace equipart
