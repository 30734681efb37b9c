#include "equipart/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equipart/coloring.hpp"
#include "equipart/error.hpp"
#include "equipart/oracle.hpp"
#include "equipart/qpartition.hpp"
#include "equipart/threshold.hpp"

namespace equipart::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string join(std::span<const Int> values, std::string_view sep) {
    std::string out;
    for (Int v : values) {
        if (!out.empty()) out += sep;
        out += std::to_string(v);
    }
    return out;
}

// Expanded "2+3+3" for short partitions, counts otherwise.
std::string describe(const QPartition& p) {
    if (p.addends() <= 32) return to_string(p);
    return std::to_string(p.a) + "x" + std::to_string(p.q) + " + " + std::to_string(p.b) + "x" +
           std::to_string(p.q + 1);
}

json reason_json(const StopReason& reason) {
    return {{"kind", to_string(reason.kind)}, {"witnesses", reason.witnesses}};
}

const PartSizes& require_parts(const Request& request) {
    if (!request.parts) throw ParseError("this command needs a part list");
    return *request.parts;
}

std::optional<Int> threshold_if_defined(const PartSizes& parts) {
    if (parts.count() < 2) return std::nullopt;
    return chi_star(parts).chi_star;
}

int run_threshold(const Request& request, std::ostream& out) {
    const auto report = chi_star(require_parts(request));
    if (request.format == Format::Json) {
        json doc{{"parts", report.parts.values()},
                 {"s_star", report.s_star},
                 {"h", report.h},
                 {"reason", reason_json(report.reason)},
                 {"chi_star", report.chi_star}};
        out << doc.dump() << '\n';
        return kOk;
    }
    std::vector<Int> witnesses(report.reason.witnesses.begin(), report.reason.witnesses.end());
    out << "parts: " << join(report.parts.view(), ",") << '\n'
        << "s_star: " << report.s_star << '\n'
        << "h: " << report.h << '\n'
        << "reason: " << to_string(report.reason.kind) << " at part(s) " << join(witnesses, ",")
        << '\n'
        << "chi_star: " << report.chi_star << '\n'
        << "initial classes (sizes " << report.h - 1 << " and " << report.h << "):\n";
    for (std::size_t i = 0; i < report.initial_partitions.size(); ++i) {
        out << "  part " << i << ": " << describe(report.initial_partitions[i]) << '\n';
    }
    return kOk;
}

int run_color(const Request& request, std::ostream& out) {
    const PartSizes& parts = require_parts(request);
    if (!request.k) throw ParseError("color needs --k");
    const auto plan = plan_for_k(parts, *request.k);
    if (!plan) {
        if (request.format == Format::Json) {
            out << json{{"parts", parts.values()}, {"k", *request.k}, {"feasible", false}}.dump()
                << '\n';
        } else {
            out << "infeasible\n";
        }
        return kInfeasible;
    }
    const auto coloring = realize(*plan);
    const auto verdict = validate(coloring);
    if (request.format == Format::Json) {
        json doc{{"parts", parts.values()},
                 {"k", plan->colors()},
                 {"feasible", true},
                 {"level", plan->level()},
                 {"classes", plan->class_sizes()},
                 {"colors", coloring.color_of},
                 {"valid", verdict.ok()}};
        out << doc.dump() << '\n';
        return kOk;
    }
    out << "k: " << plan->colors() << '\n' << "level: " << plan->level() << '\n';
    for (std::size_t i = 0; i < parts.count(); ++i) {
        out << "part " << i << ": " << describe(plan->partition(i)) << '\n';
    }
    out << "colors:\n";
    for (std::size_t i = 0; i < coloring.color_of.size(); ++i) {
        out << "  part " << i << ": " << join(coloring.color_of[i], " ") << '\n';
    }
    if (plan->empty_classes() > 0) {
        out << "unused colors: " << plan->listed_classes() + 1 << ".." << plan->colors() << '\n';
    }
    out << "valid: " << (verdict.ok() ? "yes" : "no") << '\n';
    return kOk;
}

int run_sweep(const Request& request, std::ostream& out) {
    const PartSizes& parts = require_parts(request);
    const Int max_k = request.max_k.value_or(parts.total());
    const auto threshold = threshold_if_defined(parts);
    json rows = json::array();
    for (Int k = 1; k <= max_k; ++k) {
        rows.push_back({{"k", k}, {"feasible", plan_for_k(parts, k).has_value()}});
    }
    if (request.format == Format::Json) {
        json doc{{"parts", parts.values()}, {"rows", rows}};
        doc["chi_star"] = threshold ? json(*threshold) : json(nullptr);
        out << doc.dump() << '\n';
        return kOk;
    }
    if (threshold) out << "chi_star: " << *threshold << '\n';
    for (const auto& row : rows) {
        out << "k=" << row["k"].get<Int>() << ' '
            << (row["feasible"].get<bool>() ? "feasible" : "infeasible") << '\n';
    }
    return kOk;
}

int run_verify(const Request& request, std::ostream& out, std::ostream& err) {
    const PartSizes& parts = require_parts(request);
    const oracle::OracleBudget budget;
    if (parts.total() > budget.max_total) {
        err << "verify: " << parts.total() << " vertices exceed the oracle budget of "
            << budget.max_total << '\n';
        return kUsage;
    }
    const Int max_k = request.max_k.value_or(parts.total());
    std::vector<std::string> problems;

    const auto threshold = threshold_if_defined(parts);
    const Int oracle_threshold = oracle::chi_star(parts.view(), budget);
    if (threshold && *threshold != oracle_threshold) {
        problems.push_back("chi_star " + std::to_string(*threshold) + " but oracle says " +
                           std::to_string(oracle_threshold));
    }
    for (Int k = 1; k <= max_k; ++k) {
        const auto plan = plan_for_k(parts, k);
        const bool expected = oracle::k_colorable(parts.view(), k, budget);
        if (plan.has_value() != expected) {
            problems.push_back("k=" + std::to_string(k) + ": plan " +
                               (plan ? "feasible" : "infeasible") + ", oracle " +
                               (expected ? "feasible" : "infeasible"));
        } else if (plan && !validate(realize(*plan)).ok()) {
            problems.push_back("k=" + std::to_string(k) + ": realized coloring fails validation");
        }
    }

    if (request.format == Format::Json) {
        json doc{{"parts", parts.values()},
                 {"oracle_chi_star", oracle_threshold},
                 {"max_k", max_k},
                 {"agreement", problems.empty()},
                 {"disagreements", problems}};
        doc["chi_star"] = threshold ? json(*threshold) : json(nullptr);
        out << doc.dump() << '\n';
    } else {
        if (threshold) out << "chi_star: " << *threshold << '\n';
        out << "oracle chi_star: " << oracle_threshold << '\n';
        for (const auto& p : problems) out << "disagreement: " << p << '\n';
        if (problems.empty()) out << "agreement for all k\n";
    }
    return problems.empty() ? kOk : kDisagreement;
}

int run_bench_command(const Request& request, std::ostream& out) {
    const auto points = run_bench(request.seed);
    if (request.format == Format::Json) {
        json rows = json::array();
        for (const auto& p : points) rows.push_back({{"parts", p.parts}, {"seconds", p.seconds}});
        out << json{{"seed", request.seed}, {"points", rows}}.dump() << '\n';
        return kOk;
    }
    for (const auto& p : points) out << "l=" << p.parts << " seconds=" << p.seconds << '\n';
    return kOk;
}

void print_partitions(Int n, Int q, std::ostream& out, json& rows, bool as_json) {
    const auto lo = minimal_qpartition(n, q);
    const auto hi = maximal_qpartition(n, q);
    if (as_json) {
        json row{{"n", n}, {"q", q}, {"exists", lo.has_value()}};
        if (lo) {
            row["minimal"] = {{"a", lo->a}, {"b", lo->b}};
            row["maximal"] = {{"a", hi->a}, {"b", hi->b}};
        }
        rows.push_back(row);
        return;
    }
    if (!lo) {
        out << "no " << q << "-partition of " << n << '\n';
        return;
    }
    out << "minimal " << q << "-partition of " << n << ": " << describe(*lo) << '\n'
        << "maximal " << q << "-partition of " << n << ": " << describe(*hi) << '\n';
}

int run_partitions(const Request& request, std::ostream& out) {
    const PartSizes& numbers = require_parts(request);
    if (request.q && *request.q < 1) throw ParseError("--q must be >= 1");
    const bool as_json = request.format == Format::Json;
    json rows = json::array();
    for (Int n : numbers) {
        if (request.q) {
            print_partitions(n, *request.q, out, rows, as_json);
        } else {
            for (Int q = 1; q <= n; ++q) print_partitions(n, q, out, rows, as_json);
        }
    }
    if (as_json) out << rows.dump() << '\n';
    return kOk;
}

} // namespace

PartSizes parse_parts(std::string_view input) {
    std::vector<Int> sizes;
    if (trim(input).empty()) throw ParseError("empty part list");
    std::size_t start = 0;
    while (true) {
        const auto comma = input.find(',', start);
        const auto token = trim(input.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start));
        Int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw ParseError("not an integer: '" + std::string(token) + "'");
        }
        if (value < 1) {
            throw ParseError("part sizes must be positive, got " + std::to_string(value));
        }
        sizes.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    try {
        return PartSizes(std::move(sizes));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

std::vector<std::size_t> bench_sizes() {
    std::vector<std::size_t> sizes;
    for (int shift = 10; shift >= 0; --shift) sizes.push_back(std::size_t{1000000} >> shift);
    return sizes;
}

PartSizes bench_instance(std::size_t count, Int max_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * count));
    std::uniform_int_distribution<Int> size(1, max_size);
    std::vector<Int> sizes(count);
    for (auto& n : sizes) n = size(rng);
    return PartSizes(std::move(sizes));
}

std::vector<BenchPoint> run_bench(std::uint64_t seed, const std::vector<std::size_t>& sizes) {
    using clock = std::chrono::steady_clock;
    constexpr double kMinSampleTime = 0.05;
    constexpr int kMinReps = 5;
    constexpr int kMaxReps = 200;

    std::vector<BenchPoint> points;
    for (std::size_t count : sizes) {
        const auto parts = bench_instance(count, 1000000, seed);
        double best = 0.0;
        double spent = 0.0;
        Int sink = 0;
        for (int rep = 0; rep < kMaxReps && (rep < kMinReps || spent < kMinSampleTime); ++rep) {
            const auto start = clock::now();
            sink += chi_star(parts).chi_star;
            const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
            best = rep == 0 ? elapsed : std::min(best, elapsed);
            spent += elapsed;
        }
        if (sink < 0) throw std::logic_error("negative threshold");
        points.push_back({count, best});
    }
    return points;
}

int run(const Request& request, std::ostream& out, std::ostream& err) {
    try {
        switch (request.command) {
        case Command::Threshold: return run_threshold(request, out);
        case Command::Color: return run_color(request, out);
        case Command::Sweep: return run_sweep(request, out);
        case Command::Verify: return run_verify(request, out, err);
        case Command::Bench: return run_bench_command(request, out);
        case Command::Partitions: return run_partitions(request, out);
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const UnsupportedInstance& e) {
        err << "unsupported instance: " << e.what() << '\n';
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
    } catch (const oracle::BudgetExceeded& e) {
        err << e.what() << '\n';
    }
    return kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equitable chromatic threshold of complete multipartite graphs", "equipart"};

    const std::map<std::string, Command> commands{
        {"threshold", Command::Threshold}, {"color", Command::Color},
        {"sweep", Command::Sweep},         {"verify", Command::Verify},
        {"bench", Command::Bench},         {"partitions", Command::Partitions},
    };
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};

    Request request;
    std::string parts_text;
    Int k = 0;
    Int max_k = 0;
    Int q = 0;

    app.add_option("command", request.command, "threshold | color | sweep | verify | bench | partitions")
        ->required()
        ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
    app.add_option("parts", parts_text, "comma-separated part sizes, e.g. 3,5,6");
    auto* k_opt = app.add_option("--k", k, "number of colors (color)")->check(CLI::PositiveNumber);
    auto* max_k_opt =
        app.add_option("--max-k", max_k, "largest k to check (sweep, verify)")->check(CLI::PositiveNumber);
    auto* q_opt = app.add_option("--q", q, "partition level (partitions)")->check(CLI::PositiveNumber);
    app.add_option("--format", request.format, "text | json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--seed", request.seed, "bench instance seed");

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    if (*k_opt) request.k = k;
    if (*max_k_opt) request.max_k = max_k;
    if (*q_opt) request.q = q;
    if (!parts_text.empty()) {
        try {
            request.parts = parse_parts(parts_text);
        } catch (const ParseError& e) {
            err << "usage error: " << e.what() << '\n';
            return kUsage;
        }
    } else if (request.command != Command::Bench) {
        err << "usage error: missing part list\n";
        return kUsage;
    }
    return run(request, out, err);
}

} // namespace equipart::cli
