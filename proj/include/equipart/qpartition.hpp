#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equipart/part_sizes.hpp"

namespace equipart {

/// A q-partition n = a*q + b*(q+1): n written as a sum of a addends equal
/// to q and b addends equal to q+1.
struct QPartition {
    Int n = 1;
    Int q = 1;
    Int a = 0;
    Int b = 0;

    Int addends() const noexcept { return a + b; }

    friend bool operator==(const QPartition&, const QPartition&) = default;
};

struct QPartitionKind {
    bool is_minimal = false;
    bool is_maximal = false;

    friend bool operator==(const QPartitionKind&, const QPartitionKind&) = default;
};

/// Result of dropping from the maximal q-partition of n to the minimal
/// (q-1)-partition. delta is the change in addend count (0 or 1).
struct Demotion {
    QPartition upper;
    QPartition lower;
    Int delta = 0;
};

// Integer helpers shared by the partition arithmetic. Arguments are
// nonnegative numerators and positive denominators.
constexpr Int floor_div(Int n, Int d) noexcept { return n / d; }
constexpr Int ceil_div(Int n, Int d) noexcept { return n / d + (n % d != 0 ? 1 : 0); }

/// True iff n = a*q + b*(q+1) for some a, b >= 0. Writing n = k*q + r with
/// 0 <= r < q, this is r <= k. q > n is allowed and yields false.
/// Throws InvalidArgument for n < 1 or q < 1.
bool exists_qpartition(Int n, Int q);

/// The q-partition of n with the fewest addends (ceil(n/(q+1)) of them),
/// or nullopt if n has no q-partition. Unique; satisfies a < q + 1.
std::optional<QPartition> minimal_qpartition(Int n, Int q);

/// The q-partition of n with the most addends (floor(n/q) of them), or
/// nullopt if n has no q-partition. Unique; satisfies b < q.
std::optional<QPartition> maximal_qpartition(Int n, Int q);

QPartitionKind classify(const QPartition& p);

/// Trades q addends of size q+1 for q+1 addends of size q:
/// (a, b) -> (a+q+1, b-q). The sum is unchanged and the addend count grows
/// by one. Requires b >= q (p not maximal), else PreconditionViolation.
QPartition split_step(const QPartition& p);

/// Maximal q-partition and minimal (q-1)-partition of n side by side.
/// delta == 0 iff q divides n. Throws NoPartition if either is missing,
/// InvalidArgument if q < 2.
Demotion demote_level(Int n, Int q);

/// Addends in ascending order: a copies of q, then b copies of q+1.
std::vector<Int> expand(const QPartition& p);

/// "2+3+3" style rendering of expand(p).
std::string to_string(const QPartition& p);

/// True iff p satisfies the QPartition invariants.
bool is_valid(const QPartition& p) noexcept;

} // namespace equipart
