#pragma once

// Brute-force ground truth for equitable colorability of complete
// multipartite graphs. Deliberately self-contained: nothing here depends on
// the q-partition arithmetic or the threshold formula it is used to check.

#include <cstdint>
#include <span>
#include <stdexcept>

namespace equipart::oracle {

using Int = std::int64_t;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    Int max_total = 60;        // multiset search
    Int max_vertex_level = 10; // set-partition search
};

/// Searches unrestricted integer partitions of every part for a choice of
/// at most k classes whose sizes, padded with zeros up to k, differ by at
/// most one.
bool k_colorable(std::span<const Int> parts, Int k, const OracleBudget& budget = {});

/// Same question on the explicit graph: enumerates set partitions of the
/// vertex set into at most k independent blocks.
bool vertex_level_k_colorable(std::span<const Int> parts, Int k,
                              const OracleBudget& budget = {});

/// 1 + the largest infeasible k in [1, N], or 1 when none is infeasible.
Int chi_star(std::span<const Int> parts, const OracleBudget& budget = {});

/// Smallest feasible k (the equitable chromatic number).
Int chi_eq(std::span<const Int> parts, const OracleBudget& budget = {});

} // namespace equipart::oracle
