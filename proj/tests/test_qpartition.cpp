#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "equipart/error.hpp"
#include "equipart/qpartition.hpp"

using namespace equipart;

TEST_CASE("exists_qpartition examples") {
    CHECK(exists_qpartition(8, 2));
    CHECK_FALSE(exists_qpartition(5, 3));
    for (Int n = 1; n <= 50; ++n) CHECK(exists_qpartition(n, 1));
    CHECK_FALSE(exists_qpartition(3, 7)); // q > n
    CHECK(exists_qpartition(3, 2));       // q = n - 1: single addend q+1
    CHECK_THROWS_AS(exists_qpartition(0, 2), InvalidArgument);
    CHECK_THROWS_AS(exists_qpartition(4, 0), InvalidArgument);
}

TEST_CASE("minimal and maximal q-partitions of worked examples") {
    CHECK(minimal_qpartition(8, 2) == QPartition{8, 2, 1, 2});
    CHECK(to_string(*minimal_qpartition(8, 2)) == "2+3+3");
    CHECK(maximal_qpartition(8, 2) == QPartition{8, 2, 4, 0});
    CHECK(to_string(*maximal_qpartition(8, 2)) == "2+2+2+2");

    CHECK(minimal_qpartition(6, 2) == QPartition{6, 2, 0, 2});
    CHECK_FALSE(minimal_qpartition(5, 3).has_value());
    CHECK_FALSE(maximal_qpartition(5, 3).has_value());
    CHECK(maximal_qpartition(11, 3) == QPartition{11, 3, 1, 2});
    for (Int n = 1; n <= 20; ++n) CHECK(maximal_qpartition(n, n) == QPartition{n, n, 1, 0});

    CHECK_THROWS_AS(minimal_qpartition(0, 1), InvalidArgument);
    CHECK_THROWS_AS(maximal_qpartition(3, -1), InvalidArgument);
}

TEST_CASE("classify") {
    CHECK(classify({8, 2, 4, 0}) == QPartitionKind{false, true});
    CHECK(classify({8, 2, 1, 2}) == QPartitionKind{true, false});
    for (Int n = 1; n <= 20; ++n) CHECK(classify({n, n, 1, 0}) == QPartitionKind{true, true});
}

TEST_CASE("split_step") {
    CHECK(split_step({8, 2, 1, 2}) == QPartition{8, 2, 4, 0});
    CHECK(split_step({12, 3, 0, 3}) == QPartition{12, 3, 4, 0});
    CHECK_THROWS_AS(split_step({7, 2, 2, 1}), PreconditionViolation);
}

TEST_CASE("demote_level") {
    const auto six = demote_level(6, 3);
    CHECK(six.upper == QPartition{6, 3, 2, 0});
    CHECK(six.lower == QPartition{6, 2, 0, 2});
    CHECK(six.delta == 0);

    const auto seven = demote_level(7, 3);
    CHECK(to_string(seven.upper) == "3+4");
    CHECK(to_string(seven.lower) == "2+2+3");
    CHECK(seven.upper.addends() == 2);
    CHECK(seven.lower.addends() == 3);
    CHECK(seven.delta == 1);

    CHECK_THROWS_AS(demote_level(5, 3), NoPartition);
    CHECK_THROWS_AS(demote_level(5, 1), InvalidArgument);
}

TEST_CASE("exhaustive agreement with (a, b) enumeration for n <= 400") {
    for (Int n = 1; n <= 400; ++n) {
        for (Int q = 1; q <= n; ++q) {
            const auto all = brute::qpartitions(n, q);
            REQUIRE(exists_qpartition(n, q) == !all.empty());
            const auto lo = minimal_qpartition(n, q);
            const auto hi = maximal_qpartition(n, q);
            REQUIRE(lo.has_value() == !all.empty());
            REQUIRE(hi.has_value() == !all.empty());
            if (all.empty()) continue;

            REQUIRE(is_valid(*lo));
            REQUIRE(is_valid(*hi));
            REQUIRE(lo->addends() == ceil_div(n, q + 1));
            REQUIRE(hi->addends() == n / q);

            Int fewest = n + 1;
            Int most = 0;
            for (auto [a, b] : all) {
                fewest = std::min(fewest, a + b);
                most = std::max(most, a + b);
            }
            REQUIRE(lo->addends() == fewest);
            REQUIRE(hi->addends() == most);
            const auto with = [&](Int count) {
                return std::count_if(all.begin(), all.end(),
                                     [&](auto ab) { return ab.first + ab.second == count; });
            };
            REQUIRE(with(fewest) == 1);
            REQUIRE(with(most) == 1);

            // Lemma-style characterisations against the enumeration.
            for (auto [a, b] : all) {
                const auto kind = classify({n, q, a, b});
                REQUIRE(kind.is_maximal == (a + b == most));
                REQUIRE(kind.is_minimal == (a + b == fewest));
            }

            // Repeated splits walk from minimal to maximal one addend at a time.
            QPartition p = *lo;
            Int steps = 0;
            while (!classify(p).is_maximal) {
                const Int before = p.addends();
                p = split_step(p);
                REQUIRE(is_valid(p));
                REQUIRE(p.addends() == before + 1);
                ++steps;
            }
            REQUIRE(p == *hi);
            REQUIRE(steps == n / q - ceil_div(n, q + 1));

            if (q >= 2 && exists_qpartition(n, q - 1)) {
                const auto d = demote_level(n, q);
                REQUIRE((d.delta == 0) == (n % q == 0));
                REQUIRE(d.lower.addends() - d.upper.addends() == d.delta);
            }
        }
    }
}
