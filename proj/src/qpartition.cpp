#include "equipart/qpartition.hpp"

#include <string>

#include "equipart/error.hpp"

namespace equipart {

namespace {

void require_positive(Int n, Int q) {
    if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
    if (q < 1) throw InvalidArgument("q must be >= 1, got " + std::to_string(q));
}

} // namespace

bool exists_qpartition(Int n, Int q) {
    require_positive(n, q);
    // n = k*q + r; a q-partition exists iff r <= k.
    return n % q <= n / q;
}

std::optional<QPartition> minimal_qpartition(Int n, Int q) {
    if (!exists_qpartition(n, q)) return std::nullopt;
    const Int t = ceil_div(n, q + 1);
    const Int b = n - q * t;
    return QPartition{n, q, t - b, b};
}

std::optional<QPartition> maximal_qpartition(Int n, Int q) {
    if (!exists_qpartition(n, q)) return std::nullopt;
    const Int t = n / q;
    const Int b = n % q;
    return QPartition{n, q, t - b, b};
}

QPartitionKind classify(const QPartition& p) {
    return {.is_minimal = p.a < p.q + 1, .is_maximal = p.b < p.q};
}

QPartition split_step(const QPartition& p) {
    if (p.b < p.q) {
        throw PreconditionViolation("split_step: " + to_string(p) + " is already maximal (b=" +
                                    std::to_string(p.b) + " < q=" + std::to_string(p.q) + ")");
    }
    return QPartition{p.n, p.q, p.a + p.q + 1, p.b - p.q};
}

Demotion demote_level(Int n, Int q) {
    if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
    if (q < 2) throw InvalidArgument("demote_level needs q >= 2, got " + std::to_string(q));
    auto upper = maximal_qpartition(n, q);
    if (!upper) {
        throw NoPartition(std::to_string(n) + " has no " + std::to_string(q) + "-partition");
    }
    auto lower = minimal_qpartition(n, q - 1);
    if (!lower) {
        throw NoPartition(std::to_string(n) + " has no " + std::to_string(q - 1) + "-partition");
    }
    return Demotion{*upper, *lower, lower->addends() - upper->addends()};
}

std::vector<Int> expand(const QPartition& p) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(p.addends()));
    out.insert(out.end(), static_cast<std::size_t>(p.a), p.q);
    out.insert(out.end(), static_cast<std::size_t>(p.b), p.q + 1);
    return out;
}

std::string to_string(const QPartition& p) {
    std::string out;
    for (Int v : expand(p)) {
        if (!out.empty()) out += '+';
        out += std::to_string(v);
    }
    return out;
}

bool is_valid(const QPartition& p) noexcept {
    if (p.n < 1 || p.q < 1 || p.a < 0 || p.b < 0) return false;
    if (p.a * p.q + p.b * (p.q + 1) != p.n) return false;
    return p.addends() >= 1 && p.addends() <= p.n;
}

} // namespace equipart
