#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "equipart/part_sizes.hpp"

namespace equipart::cli {

enum ExitCode : int {
    kOk = 0,
    kInfeasible = 1,
    kDisagreement = 2,
    kUsage = 64,
};

enum class Command { Threshold, Color, Sweep, Verify, Bench, Partitions };
enum class Format { Text, Json };

struct Request {
    Command command = Command::Threshold;
    std::optional<PartSizes> parts;
    std::optional<Int> k;
    std::optional<Int> max_k;
    std::optional<Int> q;
    Format format = Format::Text;
    std::uint64_t seed = 20240917;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "3, 5 ,6" -> [3, 5, 6]. Throws ParseError on empty input, non-integer
/// tokens and values < 1.
PartSizes parse_parts(std::string_view input);

struct BenchPoint {
    std::size_t parts = 0;
    double seconds = 0.0;
};

/// Part counts used by `bench`: 10^6 / 2^j for j = 10..0.
std::vector<std::size_t> bench_sizes();

/// Deterministic instance of `count` parts with sizes in [1, max_size].
PartSizes bench_instance(std::size_t count, Int max_size, std::uint64_t seed);

/// Times the serial chi_star on bench_instance(l, 10^6, seed) for each l in
/// sizes. Each point is the best of several repetitions.
std::vector<BenchPoint> run_bench(std::uint64_t seed,
                                  const std::vector<std::size_t>& sizes = bench_sizes());

int run(const Request& request, std::ostream& out, std::ostream& err);

/// argv front end: parses with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace equipart::cli
