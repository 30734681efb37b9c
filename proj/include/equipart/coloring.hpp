#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "equipart/part_sizes.hpp"
#include "equipart/qpartition.hpp"
#include "equipart/threshold.hpp"

namespace equipart {

/// Class sizes per part of an equitable coloring. Every part carries a
/// q-partition for the same level q, so all class sizes lie in {q, q+1}.
/// k counts colors; it exceeds the listed class count only in the k > N
/// regime, where the extra colors are empty classes.
class ColorPlan {
public:
    ColorPlan(PartSizes parts, Int level, std::vector<QPartition> partitions, Int k);

    const PartSizes& parts() const noexcept { return parts_; }
    Int level() const noexcept { return level_; }
    Int colors() const noexcept { return k_; }
    const std::vector<QPartition>& partitions() const noexcept { return partitions_; }
    const QPartition& partition(std::size_t part) const { return partitions_[part]; }

    Int listed_classes() const noexcept;
    Int empty_classes() const noexcept { return k_ - listed_classes(); }

    /// Class sizes of one part, ascending.
    std::vector<Int> class_sizes(std::size_t part) const;
    std::vector<std::vector<Int>> class_sizes() const;

    friend bool operator==(const ColorPlan&, const ColorPlan&) = default;

private:
    PartSizes parts_;
    Int level_;
    std::vector<QPartition> partitions_;
    Int k_;
};

/// Explicit coloring: color_of(i)[j] is the color (1..k) of the j-th vertex
/// of part i.
struct VertexColoring {
    PartSizes parts;
    std::vector<std::vector<Int>> color_of;
    Int k = 0;
};

struct Violation {
    enum class Kind { Properness, Equity, Count };
    Kind kind;
    std::string detail;
};

std::string to_string(Violation::Kind kind);

struct Verdict {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Plan with chi_star colors built from each part's minimal (h-1)-partition.
ColorPlan initial_plan(const ThresholdReport& report);

/// One more color. Splits the first non-maximal part; if all are maximal,
/// drops to level q-1 and either the single non-divisible part gains a
/// class or the first part divisible by q-1 is split. Throws
/// PreconditionViolation when k >= N or the plan sits at a level from
/// which no k+1 plan follows (two parts not divisible by q).
ColorPlan refine(const ColorPlan& plan);

/// Direct constructor for a given k. Returns nullopt when
/// K_{n_1,...,n_l} has no equitable k-coloring. Throws InvalidArgument for
/// k < 1.
std::optional<ColorPlan> plan_for_k(const PartSizes& parts, Int k);

/// Colors 1..k in (part, class) order; vertices fill a part's classes in
/// index order. Empty colors, if any, take the highest numbers.
VertexColoring realize(const ColorPlan& plan);

/// Checks properness, equity of all k classes (empty ones included) and
/// that every vertex carries a color in 1..k.
Verdict validate(const VertexColoring& coloring);

} // namespace equipart
