#include "equipart/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace equipart::oracle {

namespace {

// What one part contributes to the class-size multiset: number of classes
// and the smallest and largest class.
struct Summary {
    Int classes;
    Int smallest;
    Int largest;

    auto operator<=>(const Summary&) const = default;
};

using Summaries = std::vector<Summary>;

Int check_parts(std::span<const Int> parts) {
    if (parts.empty()) throw std::invalid_argument("oracle: part list is empty");
    Int total = 0;
    for (Int n : parts) {
        if (n < 1) throw std::invalid_argument("oracle: part sizes must be positive");
        total += n;
    }
    return total;
}

// Walks every partition of n into positive addends (non-increasing order)
// and keeps the summaries of those whose addends differ by at most one;
// any other partition already violates equity on its own.
void enumerate(Int remaining, Int cap, Int count, Int largest, Int smallest,
               std::set<Summary>& out) {
    if (remaining == 0) {
        if (largest - smallest <= 1) out.insert({count, smallest, largest});
        return;
    }
    for (Int part = std::min(remaining, cap); part >= 1; --part) {
        const Int top = count == 0 ? part : largest;
        enumerate(remaining - part, part, count + 1, top, part, out);
    }
}

Summaries summaries_of(Int n) {
    std::set<Summary> found;
    enumerate(n, n, 0, 0, 0, found);
    return {found.begin(), found.end()};
}

std::vector<Summaries> summaries_for(std::span<const Int> parts) {
    std::map<Int, Summaries> cache;
    std::vector<Summaries> out;
    out.reserve(parts.size());
    for (Int n : parts) {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, summaries_of(n)).first;
        out.push_back(it->second);
    }
    return out;
}

bool combine(const std::vector<Summaries>& per_part, std::size_t index, Int k, Int classes,
             Int smallest, Int largest) {
    if (classes > k || largest - smallest > 1) return false;
    if (index == per_part.size()) {
        // Unused colors are classes of size 0.
        if (classes < k) smallest = 0;
        return largest - smallest <= 1;
    }
    for (const Summary& s : per_part[index]) {
        const Int lo = index == 0 ? s.smallest : std::min(smallest, s.smallest);
        const Int hi = index == 0 ? s.largest : std::max(largest, s.largest);
        if (combine(per_part, index + 1, k, classes + s.classes, lo, hi)) return true;
    }
    return false;
}

bool colorable_with(const std::vector<Summaries>& per_part, Int k) {
    return combine(per_part, 0, k, 0, 0, 0);
}

void check_budget(Int total, Int cap, const char* which) {
    if (total > cap) {
        throw BudgetExceeded(std::string("oracle: ") + std::to_string(total) +
                             " vertices exceed the " + which + " budget of " +
                             std::to_string(cap));
    }
}

class SetPartitionSearch {
public:
    SetPartitionSearch(std::span<const Int> parts, Int k) : k_(k) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (Int j = 0; j < parts[i]; ++j) part_of_.push_back(i);
        }
        const std::size_t n = part_of_.size();
        adjacent_.assign(n, std::vector<bool>(n, false));
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                adjacent_[u][v] = part_of_[u] != part_of_[v];
            }
        }
    }

    bool run() { return place(0); }

private:
    bool place(std::size_t vertex) {
        if (vertex == part_of_.size()) return blocks_equitable();
        // Indexed: deeper calls append blocks and may reallocate.
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (!independent_with(blocks_[b], vertex)) continue;
            blocks_[b].push_back(vertex);
            const bool ok = place(vertex + 1);
            blocks_[b].pop_back();
            if (ok) return true;
        }
        if (static_cast<Int>(blocks_.size()) < k_) {
            blocks_.push_back({vertex});
            const bool ok = place(vertex + 1);
            blocks_.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool independent_with(const std::vector<std::size_t>& block, std::size_t vertex) const {
        return std::none_of(block.begin(), block.end(),
                            [&](std::size_t u) { return adjacent_[u][vertex]; });
    }

    bool blocks_equitable() const {
        Int smallest = static_cast<Int>(blocks_.size()) < k_ ? 0 : static_cast<Int>(part_of_.size());
        Int largest = 0;
        for (const auto& block : blocks_) {
            smallest = std::min<Int>(smallest, static_cast<Int>(block.size()));
            largest = std::max<Int>(largest, static_cast<Int>(block.size()));
        }
        return largest - smallest <= 1;
    }

    Int k_;
    std::vector<std::size_t> part_of_;
    std::vector<std::vector<bool>> adjacent_;
    std::vector<std::vector<std::size_t>> blocks_;
};

} // namespace

bool k_colorable(std::span<const Int> parts, Int k, const OracleBudget& budget) {
    const Int total = check_parts(parts);
    if (k < 1) throw std::invalid_argument("oracle: k must be >= 1");
    check_budget(total, budget.max_total, "multiset");
    return colorable_with(summaries_for(parts), k);
}

bool vertex_level_k_colorable(std::span<const Int> parts, Int k, const OracleBudget& budget) {
    const Int total = check_parts(parts);
    if (k < 1) throw std::invalid_argument("oracle: k must be >= 1");
    check_budget(total, budget.max_vertex_level, "vertex-level");
    return SetPartitionSearch(parts, k).run();
}

Int chi_star(std::span<const Int> parts, const OracleBudget& budget) {
    const Int total = check_parts(parts);
    check_budget(total, budget.max_total, "multiset");
    const auto per_part = summaries_for(parts);
    // k = N always works (singletons); the window [1, N] relies on it.
    if (!colorable_with(per_part, total)) {
        throw std::logic_error("oracle: all-singleton coloring rejected");
    }
    for (Int k = total - 1; k >= 1; --k) {
        if (!colorable_with(per_part, k)) return k + 1;
    }
    return 1;
}

Int chi_eq(std::span<const Int> parts, const OracleBudget& budget) {
    const Int total = check_parts(parts);
    check_budget(total, budget.max_total, "multiset");
    const auto per_part = summaries_for(parts);
    for (Int k = 1; k < total; ++k) {
        if (colorable_with(per_part, k)) return k;
    }
    return total;
}

} // namespace equipart::oracle
