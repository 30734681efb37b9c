#include "equipart/threshold.hpp"

#include <optional>
#include <string>

#include "equipart/error.hpp"

namespace equipart {

namespace {

// Condition A at level q: n has no q-partition, n > (q+1) * floor(n/q).
bool lacks_qpartition(Int n, Int q) { return n > (q + 1) * (n / q); }

struct LevelProbe {
    std::size_t nondivisible = 0; // capped at 2
    std::size_t first = 0;
    std::size_t second = 0;
};

LevelProbe probe_level(const PartSizes& parts, Int q) {
    LevelProbe probe;
    for (std::size_t i = 0; i < parts.count() && probe.nondivisible < 2; ++i) {
        if (parts[i] % q == 0) continue;
        (probe.nondivisible == 0 ? probe.first : probe.second) = i;
        ++probe.nondivisible;
    }
    return probe;
}

} // namespace

std::string_view to_string(StopReason::Kind kind) noexcept {
    switch (kind) {
    case StopReason::Kind::NoQPartition: return "NO_Q_PARTITION";
    case StopReason::Kind::TwoNondivisible: return "TWO_NONDIVISIBLE";
    }
    return "?";
}

Int s_star(Int n) {
    if (n < 1) throw InvalidArgument("s_star needs n >= 1, got " + std::to_string(n));
    Int s = 2;
    while (n % s == 0) ++s;
    return s;
}

Int s_star_all(const PartSizes& parts) {
    Int best = s_star(parts[0]);
    for (std::size_t i = 1; i < parts.count(); ++i) {
        // Once best == 2 nothing smaller is possible.
        if (best == 2) break;
        const Int s = s_star(parts[i]);
        if (s < best) best = s;
    }
    return best;
}

CriticalLevel compute_h_scan(const PartSizes& parts) {
    for (Int q = 1;; ++q) {
        std::vector<std::size_t> nondivisible;
        std::optional<std::size_t> no_partition;
        for (std::size_t i = 0; i < parts.count(); ++i) {
            if (parts[i] % q != 0) nondivisible.push_back(i);
            if (!no_partition && lacks_qpartition(parts[i], q)) no_partition = i;
        }
        if (nondivisible.size() >= 2) {
            return {q, {StopReason::Kind::TwoNondivisible, {nondivisible[0], nondivisible[1]}}};
        }
        if (no_partition) {
            return {q, {StopReason::Kind::NoQPartition, {*no_partition}}};
        }
    }
}

CriticalLevel compute_h_fast(const PartSizes& parts) {
    for (Int h = s_star_all(parts);; ++h) {
        const LevelProbe probe = probe_level(parts, h);
        if (probe.nondivisible >= 2) {
            return {h, {StopReason::Kind::TwoNondivisible, {probe.first, probe.second}}};
        }
        // A part divisible by h always has an h-partition, so only the lone
        // non-divisible part (if any) can stop the search here.
        if (probe.nondivisible == 1 && lacks_qpartition(parts[probe.first], h)) {
            return {h, {StopReason::Kind::NoQPartition, {probe.first}}};
        }
    }
}

ThresholdReport chi_star(const PartSizes& parts) {
    if (parts.count() < 2) {
        throw UnsupportedInstance("the threshold formula needs at least two parts");
    }
    auto level = compute_h_fast(parts);
    ThresholdReport report{parts, s_star_all(parts), level.h, std::move(level.reason), 0, {}};
    report.initial_partitions.reserve(parts.count());
    for (Int n : parts) {
        // h-1 < h, so every part has an (h-1)-partition.
        auto p = minimal_qpartition(n, report.h - 1);
        report.chi_star += p->addends();
        report.initial_partitions.push_back(*p);
    }
    return report;
}

Int chi_star_equal(Int n, Int r) {
    if (r < 2) throw InvalidArgument("chi_star_equal needs r >= 2, got " + std::to_string(r));
    return r * ceil_div(n, s_star(n));
}

} // namespace equipart
