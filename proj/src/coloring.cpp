#include "equipart/coloring.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "equipart/error.hpp"

namespace equipart {

ColorPlan::ColorPlan(PartSizes parts, Int level, std::vector<QPartition> partitions, Int k)
    : parts_(std::move(parts)), level_(level), partitions_(std::move(partitions)), k_(k) {
    if (level_ < 1) throw InvalidArgument("plan level must be >= 1");
    if (partitions_.size() != parts_.count()) {
        throw InvalidArgument("plan needs one partition per part");
    }
    bool all_singletons = level_ == 1;
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        const QPartition& p = partitions_[i];
        if (!is_valid(p) || p.n != parts_[i] || p.q != level_) {
            throw InvalidArgument("plan partition " + std::to_string(i) + " (" + to_string(p) +
                                  ") does not match part size " + std::to_string(parts_[i]) +
                                  " at level " + std::to_string(level_));
        }
        all_singletons = all_singletons && p.b == 0;
    }
    const Int listed = listed_classes();
    // Empty classes are only equitable next to classes of size 1.
    if (k_ < listed || (k_ > listed && !all_singletons)) {
        throw InvalidArgument("plan with " + std::to_string(listed) + " classes cannot use k=" +
                              std::to_string(k_) + " colors");
    }
}

Int ColorPlan::listed_classes() const noexcept {
    Int total = 0;
    for (const auto& p : partitions_) total += p.addends();
    return total;
}

std::vector<Int> ColorPlan::class_sizes(std::size_t part) const { return expand(partitions_[part]); }

std::vector<std::vector<Int>> ColorPlan::class_sizes() const {
    std::vector<std::vector<Int>> out;
    out.reserve(partitions_.size());
    for (const auto& p : partitions_) out.push_back(expand(p));
    return out;
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::Properness: return "PROPERNESS";
    case Violation::Kind::Equity: return "EQUITY";
    case Violation::Kind::Count: return "COUNT";
    }
    return "?";
}

ColorPlan initial_plan(const ThresholdReport& report) {
    return ColorPlan(report.parts, report.h - 1, report.initial_partitions, report.chi_star);
}

ColorPlan refine(const ColorPlan& plan) {
    const PartSizes& parts = plan.parts();
    const Int k = plan.colors();
    if (k >= parts.total()) {
        throw PreconditionViolation("refine: k=" + std::to_string(k) +
                                    " already reaches the vertex count " +
                                    std::to_string(parts.total()));
    }
    const Int q = plan.level();
    std::vector<QPartition> next = plan.partitions();

    // Some part is not maximal at level q: give it one more class.
    for (auto& p : next) {
        if (p.b >= q) {
            p = split_step(p);
            return ColorPlan(parts, q, std::move(next), k + 1);
        }
    }

    // Every part is maximal. At level 1 that means all classes have size 1,
    // i.e. k == N, so q >= 2 here; drop to level q-1.
    if (q < 2) throw PreconditionViolation("refine: level-1 plan has no room to split");
    std::vector<std::size_t> nondivisible;
    for (std::size_t i = 0; i < next.size(); ++i) {
        Demotion d;
        try {
            d = demote_level(parts[i], q);
        } catch (const NoPartition& e) {
            throw PreconditionViolation(std::string("refine: ") + e.what());
        }
        if (d.upper != next[i]) {
            throw PreconditionViolation("refine: maximal partition mismatch for part " +
                                        std::to_string(i));
        }
        if (d.delta != 0) nondivisible.push_back(i);
        next[i] = d.lower;
    }

    if (nondivisible.size() == 1) {
        // The lone part with q not dividing its size gains exactly one class.
        ColorPlan out(parts, q - 1, std::move(next), k + 1);
        if (out.listed_classes() != k + 1) {
            throw PreconditionViolation("refine: demotion did not add exactly one class");
        }
        return out;
    }
    if (!nondivisible.empty()) {
        throw PreconditionViolation("refine: level " + std::to_string(q) +
                                    " does not divide two parts; plan is below the threshold");
    }

    // q divides every part, so the demotion kept k classes. A part divisible
    // by q-1 as well has a non-maximal minimal (q-1)-partition; split it.
    for (std::size_t j = 0; j < next.size(); ++j) {
        if (parts[j] % (q - 1) == 0 && next[j].b >= q - 1) {
            next[j] = split_step(next[j]);
            return ColorPlan(parts, q - 1, std::move(next), k + 1);
        }
    }
    throw PreconditionViolation("refine: no part divisible by " + std::to_string(q - 1) +
                                " can be split");
}

// For k <= N every class has size floor(N/k) or ceil(N/k), so the level is
// forced to q = floor(N/k) (when k divides N all sizes equal q and the
// q-partitions simply have b = 0). Part i then needs t_i classes with
// ceil(n_i/(q+1)) <= t_i <= floor(n_i/q) and sum t_i = k; any such choice
// gives sum b_i = N - q*k, the required number of (q+1)-classes.
std::optional<ColorPlan> plan_for_k(const PartSizes& parts, Int k) {
    if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
    const Int total = parts.total();
    std::vector<QPartition> partitions;
    partitions.reserve(parts.count());

    if (k >= total) {
        for (Int n : parts) partitions.push_back(QPartition{n, 1, n, 0});
        return ColorPlan(parts, 1, std::move(partitions), k);
    }

    const Int q = total / k;
    std::vector<Int> lo(parts.count());
    std::vector<Int> hi(parts.count());
    Int lo_sum = 0;
    Int hi_sum = 0;
    for (std::size_t i = 0; i < parts.count(); ++i) {
        lo[i] = ceil_div(parts[i], q + 1);
        hi[i] = parts[i] / q;
        if (lo[i] > hi[i]) return std::nullopt;
        lo_sum += lo[i];
        hi_sum += hi[i];
    }
    if (k < lo_sum || k > hi_sum) return std::nullopt;

    Int spare = k - lo_sum;
    for (std::size_t i = 0; i < parts.count(); ++i) {
        const Int raise = std::min(spare, hi[i] - lo[i]);
        const Int t = lo[i] + raise;
        spare -= raise;
        const Int b = parts[i] - q * t;
        partitions.push_back(QPartition{parts[i], q, t - b, b});
    }
    return ColorPlan(parts, q, std::move(partitions), k);
}

VertexColoring realize(const ColorPlan& plan) {
    VertexColoring out{plan.parts(), {}, plan.colors()};
    out.color_of.reserve(plan.parts().count());
    Int color = 0;
    for (const auto& p : plan.partitions()) {
        std::vector<Int> colors;
        colors.reserve(static_cast<std::size_t>(p.n));
        for (Int size : expand(p)) {
            ++color;
            colors.insert(colors.end(), static_cast<std::size_t>(size), color);
        }
        out.color_of.push_back(std::move(colors));
    }
    return out;
}

Verdict validate(const VertexColoring& coloring) {
    Verdict verdict;
    auto report = [&](Violation::Kind kind, std::string detail) {
        verdict.violations.push_back({kind, std::move(detail)});
    };

    const Int k = coloring.k;
    if (k < 1) {
        report(Violation::Kind::Count, "k must be >= 1, got " + std::to_string(k));
        return verdict;
    }
    if (coloring.color_of.size() != coloring.parts.count()) {
        report(Violation::Kind::Count, "coloring covers " + std::to_string(coloring.color_of.size()) +
                                           " parts, graph has " +
                                           std::to_string(coloring.parts.count()));
    }

    struct ClassInfo {
        Int size = 0;
        std::size_t part = 0;
        bool split = false;
    };
    std::unordered_map<Int, ClassInfo> classes;
    const std::size_t parts = std::min(coloring.color_of.size(), coloring.parts.count());
    for (std::size_t i = 0; i < parts; ++i) {
        const auto& colors = coloring.color_of[i];
        if (static_cast<Int>(colors.size()) != coloring.parts[i]) {
            report(Violation::Kind::Count, "part " + std::to_string(i) + " has " +
                                               std::to_string(coloring.parts[i]) +
                                               " vertices but " + std::to_string(colors.size()) +
                                               " colors");
        }
        for (std::size_t j = 0; j < colors.size(); ++j) {
            const Int c = colors[j];
            if (c < 1 || c > k) {
                report(Violation::Kind::Count, "vertex (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") has color " +
                                                   std::to_string(c) + " outside 1.." +
                                                   std::to_string(k));
                continue;
            }
            auto [it, inserted] = classes.try_emplace(c, ClassInfo{0, i, false});
            ++it->second.size;
            if (!inserted && it->second.part != i && !it->second.split) {
                it->second.split = true;
                report(Violation::Kind::Properness,
                       "color " + std::to_string(c) + " appears in parts " +
                           std::to_string(it->second.part) + " and " + std::to_string(i));
            }
        }
    }

    // Equity over all k classes; colors never used are classes of size 0.
    const Int total = coloring.parts.total();
    const Int q = total / k;
    const Int r = total % k;
    const Int empty = k - static_cast<Int>(classes.size());
    Int smallest = empty > 0 ? 0 : total;
    Int largest = 0;
    Int big = 0;
    Int small = q == 0 ? empty : 0;
    for (const auto& [c, info] : classes) {
        smallest = std::min(smallest, info.size);
        largest = std::max(largest, info.size);
        if (info.size == q + 1) ++big;
        if (info.size == q) ++small;
    }
    if (big != r || small != k - r) {
        report(Violation::Kind::Equity,
               "class sizes range over [" + std::to_string(smallest) + ", " +
                   std::to_string(largest) + "]; expected " + std::to_string(r) +
                   " classes of size " + std::to_string(q + 1) + " and " +
                   std::to_string(k - r) + " of size " + std::to_string(q));
    }
    return verdict;
}

} // namespace equipart
