#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "equipart/threshold.hpp"

using namespace equipart;

namespace {

void check_same(const PartSizes& parts) {
    const auto serial = chi_star(parts);
    const auto parallel = chi_star_parallel(parts);
    REQUIRE(parallel.h == serial.h);
    REQUIRE(parallel.s_star == serial.s_star);
    REQUIRE(parallel.reason == serial.reason);
    REQUIRE(parallel.chi_star == serial.chi_star);
    REQUIRE(parallel.initial_partitions == serial.initial_partitions);
    REQUIRE(compute_h_parallel(parts) == compute_h_fast(parts));
}

} // namespace

TEST_CASE("OpenMP kernel matches the serial reference on small instances") {
    for (int l = 2; l <= 3; ++l) {
        brute::for_each_tuple(l, 24, [](const std::vector<Int>& t) { check_same(PartSizes(t)); });
    }
}

TEST_CASE("OpenMP kernel matches the serial reference on large instances") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        check_same(PartSizes(brute::random_parts(rng, 200000, 1000000)));
    }
    // All-even parts force several levels and late witnesses.
    std::vector<Int> parts(100000, 720720);
    parts[77777] = 720721;
    check_same(PartSizes(parts));
    parts[99999] = 3;
    check_same(PartSizes(parts));
}

TEST_CASE("single part is rejected by both kernels") {
    CHECK_THROWS(chi_star_parallel(PartSizes{4}));
}
