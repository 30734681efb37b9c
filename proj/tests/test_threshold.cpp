#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "equipart/error.hpp"
#include "equipart/oracle.hpp"
#include "equipart/threshold.hpp"

using namespace equipart;
using Kind = StopReason::Kind;

TEST_CASE("s_star") {
    CHECK(s_star(1) == 2);
    CHECK(s_star(6) == 4);
    CHECK(s_star(12) == 5);
    CHECK(s_star(60) == 7);
    CHECK_THROWS_AS(s_star(0), InvalidArgument);

    CHECK(s_star_all(PartSizes{3, 6}) == 2);
    CHECK(s_star_all(PartSizes{6, 12}) == 4);
    CHECK(s_star_all(PartSizes{1}) == 2);
}

TEST_CASE("compute_h_scan examples") {
    CHECK(compute_h_scan(PartSizes{3, 3}) == CriticalLevel{2, {Kind::TwoNondivisible, {0, 1}}});
    CHECK(compute_h_scan(PartSizes{5, 6}) == CriticalLevel{3, {Kind::NoQPartition, {0}}});
    CHECK(compute_h_scan(PartSizes{3, 6}) == CriticalLevel{4, {Kind::TwoNondivisible, {0, 1}}});
}

TEST_CASE("compute_h_fast examples") {
    // [3, 6] passes through h = 3, which divides both parts.
    CHECK(compute_h_fast(PartSizes{3, 6}) == CriticalLevel{4, {Kind::TwoNondivisible, {0, 1}}});
    CHECK(compute_h_fast(PartSizes{6, 12}) == CriticalLevel{4, {Kind::NoQPartition, {0}}});
    CHECK(compute_h_fast(PartSizes{1, 1}) == CriticalLevel{2, {Kind::TwoNondivisible, {0, 1}}});
    // Witnesses are the smallest qualifying indices.
    CHECK(compute_h_fast(PartSizes{4, 3, 8, 5, 7}) ==
          CriticalLevel{2, {Kind::TwoNondivisible, {1, 3}}});
}

TEST_CASE("chi_star examples") {
    const auto a = chi_star(PartSizes{3, 3});
    CHECK(a.h == 2);
    CHECK(a.chi_star == 4);
    CHECK(a.s_star == 2);

    const auto b = chi_star(PartSizes{1, 2, 3});
    CHECK(b.h == 2);
    CHECK(b.chi_star == 4);

    const auto c = chi_star(PartSizes{5, 6});
    CHECK(c.h == 3);
    CHECK(c.chi_star == 4);
    CHECK(c.reason == StopReason{Kind::NoQPartition, {0}});
    REQUIRE(c.initial_partitions.size() == 2);
    CHECK(c.initial_partitions[0] == QPartition{5, 2, 1, 1});
    CHECK(c.initial_partitions[1] == QPartition{6, 2, 0, 2});
}

TEST_CASE("single part is rejected") {
    CHECK_THROWS_AS(chi_star(PartSizes{5}), UnsupportedInstance);
    // An edgeless graph is equitably k-colorable for every k.
    const std::vector<Int> five{5};
    CHECK(oracle::chi_star(five) == 1);
}

TEST_CASE("chi_star_equal") {
    CHECK(chi_star_equal(3, 2) == 4);
    CHECK(chi_star_equal(4, 3) == 6);
    for (Int r = 2; r <= 8; ++r) CHECK(chi_star_equal(1, r) == r);
    CHECK_THROWS_AS(chi_star_equal(3, 1), InvalidArgument);
    CHECK_THROWS_AS(chi_star_equal(0, 2), InvalidArgument);

    for (Int n = 1; n <= 50; ++n) {
        for (Int r = 2; r <= 6; ++r) {
            PartSizes parts(std::vector<Int>(static_cast<std::size_t>(r), n));
            REQUIRE(chi_star_equal(n, r) == chi_star(parts).chi_star);
        }
    }
}

namespace {

void check_level_properties(const PartSizes& parts) {
    const auto scan = compute_h_scan(parts);
    const auto fast = compute_h_fast(parts);
    REQUIRE(scan == fast);

    const Int h = fast.h;
    REQUIRE(s_star_all(parts) <= h);
    REQUIRE(h <= parts.smallest() + 1);

    // Below h every part has a q-partition and at most one is not divisible.
    for (Int q = 1; q < h; ++q) {
        int nondivisible = 0;
        for (Int n : parts) {
            REQUIRE(exists_qpartition(n, q));
            if (n % q != 0) ++nondivisible;
        }
        REQUIRE(nondivisible <= 1);
    }

    const auto& w = fast.reason.witnesses;
    if (fast.reason.kind == Kind::NoQPartition) {
        REQUIRE(w.size() == 1);
        REQUIRE(parts[w[0]] > (h + 1) * (parts[w[0]] / h));
    } else {
        REQUIRE(w.size() == 2);
        REQUIRE(w[0] < w[1]);
        REQUIRE(parts[w[0]] % h != 0);
        REQUIRE(parts[w[1]] % h != 0);
    }
}

} // namespace

TEST_CASE("fast level search agrees with the scan on all small instances") {
    for (int l = 1; l <= 4; ++l) {
        brute::for_each_tuple(l, 30, [](const std::vector<Int>& t) {
            check_level_properties(PartSizes(t));
        });
    }
}

TEST_CASE("fast level search agrees with the scan on random instances") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        check_level_properties(PartSizes(brute::random_parts(rng, 12, 1000000, 1)));
    }
    // Highly divisible sizes push h well above 2.
    const std::vector<Int> smooth{720720, 1441440, 360360, 2162160, 5040, 10080};
    std::uniform_int_distribution<std::size_t> pick(0, smooth.size() - 1);
    std::uniform_int_distribution<int> count(1, 5);
    for (int i = 0; i < 2000; ++i) {
        std::vector<Int> parts(static_cast<std::size_t>(count(rng)));
        for (auto& n : parts) n = smooth[pick(rng)];
        parts.push_back(smooth[pick(rng)] + static_cast<Int>(i % 7));
        check_level_properties(PartSizes(parts));
    }
}

TEST_CASE("report invariants") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const PartSizes parts(brute::random_parts(rng, 6, 500));
        const auto report = chi_star(parts);
        Int expected = 0;
        Int addends = 0;
        for (std::size_t j = 0; j < parts.count(); ++j) {
            expected += ceil_div(parts[j], report.h);
            const auto& p = report.initial_partitions[j];
            REQUIRE(p.n == parts[j]);
            REQUIRE(p.q == report.h - 1);
            REQUIRE(classify(p).is_minimal);
            addends += p.addends();
        }
        REQUIRE(report.chi_star == expected);
        REQUIRE(addends == report.chi_star);
        REQUIRE(report.h >= report.s_star);
        REQUIRE(report.s_star >= 2);
    }
}

TEST_CASE("threshold matches the oracle on small multisets") {
    for (int l = 2; l <= 4; ++l) {
        brute::for_each_multiset(l, 9, [](const std::vector<Int>& t) {
            INFO("parts size " << t.size() << " first " << t[0]);
            REQUIRE(chi_star(PartSizes(t)).chi_star == oracle::chi_star(t));
        });
    }
}
