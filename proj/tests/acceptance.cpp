// Acceptance checks. One line per criterion, nonzero exit if any fails.
//   acceptance            gating criteria 1-9
//   acceptance --stretch  larger difference Ramsey values (slow, not gating)

#include <diffram/coloring_file.hpp>
#include <diffram/issai.hpp>
#include <diffram/search.hpp>

#include "test_support.hpp"

#include <fmt/format.h>

#include <chrono>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace diffram;
using namespace diffram::testing;

namespace {

// time limits per individual run, in seconds
constexpr double kSmallRunLimit = 60.0;
constexpr double kExtendedRunLimit = 3600.0;
constexpr double kVerifyLimit = 1.0;

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
    bool ok = true;
    std::vector<std::string> failures;

    void expect(bool condition, std::string what)
    {
        if (! condition) {
            ok = false;
            failures.push_back(std::move(what));
        }
    }
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<void(Check &)> body;
};

auto data(const std::string & name) -> std::string
{
    return std::string(DIFFRAM_TEST_DATA) + "/" + name;
}

struct RamseyRow {
    std::vector<int> targets;
    int value;
    std::optional<std::uint64_t> count;
};

void check_ramsey_rows(Check & check, const std::vector<RamseyRow> & rows, double limit, bool counts)
{
    for (const auto & row : rows) {
        const CliqueTargets targets{row.targets};
        const auto start = Clock::now();
        const auto outcome = search(targets);
        const double took = seconds_since(start);
        const auto label = fmt::format("D({})", targets.to_string());
        check.expect(outcome.status == OutcomeStatus::exact, label + " not exact");
        check.expect(outcome.value == row.value, fmt::format("{} = {}, expected {}", label, outcome.value, row.value));
        if (counts && row.count)
            check.expect(outcome.orbit_count == row.count,
                fmt::format("{} count {}, expected {}", label, outcome.orbit_count.value_or(0), *row.count));
        check.expect(took < limit, fmt::format("{} took {:.1f} s", label, took));
    }
}

const std::vector<RamseyRow> kSmallRamsey{
    {{3, 3}, 6, 1},
    {{3, 4}, 9, 2},
    {{3, 5}, 14, 3},
    {{3, 6}, 17, 7},
    {{3, 7}, 22, 13},
    {{4, 4}, 18, 1},
    {{4, 5}, 25, 6},
    {{3, 3, 3}, 15, std::nullopt},
};

auto verifies(const std::string & file, const std::vector<int> & targets, Check & check) -> bool
{
    const auto start = Clock::now();
    const auto report = verify_coloring(read_coloring_file(data(file)), CliqueTargets{targets});
    const double took = seconds_since(start);
    check.expect(took < kVerifyLimit, fmt::format("{} took {:.2f} s", file, took));
    return report.passed();
}

auto membership(const IntegerColoring & coloring, int color) -> std::vector<bool>
{
    std::vector<bool> out(static_cast<std::size_t>(coloring.top()) + 1, false);
    for (int v : coloring.color_class(color))
        out[static_cast<std::size_t>(v)] = true;
    return out;
}

void property_suites(Check & check)
{
    // difference-set clique test against the explicit-graph oracle
    bool agree = true;
    for (int n = 2; n <= 9; ++n)
        for (const auto & a : all_assignments(n - 1, 2)) {
            const auto coloring = DifferenceColoring::from_assignment(a, 2);
            const auto graph = materialize(coloring);
            for (int k : {3, 4})
                for (int c = 1; c <= 2; ++c)
                    agree &= has_clique(coloring.color_class(c), k) == oracle_has_mono_clique(graph, k, c);
        }
    check.expect(agree, "clique test disagrees with the oracle for some n <= 9");

    agree = true;
    for (int k : {3, 4, 5})
        for (unsigned mask = 0; mask < (1U << 12); ++mask) {
            DifferenceSet d;
            for (int bit = 0; bit < 12; ++bit)
                if (mask & (1U << bit))
                    d.insert(bit + 1);
            if (has_clique(d, k))
                continue;
            for (int next = d.max() + 1; next <= 13; ++next) {
                auto grown = d;
                grown.insert(next);
                agree &= creates_clique_with(d, next, k) == has_clique(grown, k);
            }
        }
    check.expect(agree, "incremental clique test disagrees on some subset of 1..12");

    agree = true;
    for (const auto & sizes : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {4, 5}}) {
        const CliqueTargets targets{sizes};
        for (int n = 1; n <= 12; ++n)
            for (const auto & a : all_assignments(n, 2)) {
                const auto prefix = IntegerColoring::from_assignment(a.substr(0, a.size() - 1), 2);
                if (find_mono_schur_tuple(prefix, targets))
                    continue;
                const int color = a.back() - '0';
                const auto full = IntegerColoring::from_assignment(a, 2);
                agree &= closes_schur_tuple(prefix.color_class(color), n, targets.size_for(color))
                    == find_mono_schur_tuple(full, targets).has_value();
                for (int c = 1; c <= 2; ++c)
                    agree &= find_schur_tuple(full.color_class(c), targets.size_for(c)).has_value()
                        == brute_force_has_schur(membership(full, c), targets.size_for(c));
            }
    }
    check.expect(agree, "incremental Schur test disagrees with a full scan for some n <= 12");

    for (const auto & sizes : std::vector<std::vector<int>>{
             {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 4}, {4, 5}, {3, 3, 3}}) {
        const CliqueTargets targets{sizes};
        const auto ramsey = search(targets);
        const auto issai = issai_search(targets);
        check.expect(satisfies_difference_bound(ramsey, issai),
            fmt::format("S({0}) = {1} exceeds D({0}) - 1 = {2}", targets.to_string(), issai.value, ramsey.value - 1));
    }

    std::mt19937 rng(1916);
    int bad_extractions = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(6, 60)(rng);
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        const int k = std::uniform_int_distribution<int>(3, 6)(rng);
        std::string assignment = random_assignment(rng, n - 1, r);
        std::vector<int> vertices(static_cast<std::size_t>(n));
        std::iota(vertices.begin(), vertices.end(), 1);
        std::shuffle(vertices.begin(), vertices.end(), rng);
        vertices.resize(static_cast<std::size_t>(k));
        const char color = static_cast<char>('1' + std::uniform_int_distribution<int>(0, r - 1)(rng));
        for (int a : vertices)
            for (int b : vertices)
                if (a < b)
                    assignment[static_cast<std::size_t>(b - a - 1)] = color;
        const auto coloring = DifferenceColoring::from_assignment(assignment, r);
        const auto witness = extract_schur_tuple(coloring, vertices);
        bool valid = witness.color == color - '0' && is_schur_tuple(witness.entries, k);
        for (int x : witness.entries)
            valid &= coloring.color_of(x) == witness.color;
        bad_extractions += valid ? 0 : 1;
    }
    check.expect(bad_extractions == 0, fmt::format("{} of 1000 extractions invalid", bad_extractions));

    const auto path = std::filesystem::temp_directory_path() / fmt::format("diffram_acceptance_{}.ckpt", rng());
    for (const auto & sizes : std::vector<std::vector<int>>{{3, 7}, {4, 5}, {3, 3, 3}}) {
        const CliqueTargets targets{sizes};
        const auto reference = search(targets);
        for (int jobs : {2, 3, 8}) {
            SearchOptions options;
            options.parallelism = jobs;
            const auto outcome = search(targets, options);
            check.expect(outcome.maximal == reference.maximal && outcome.orbit_count == reference.orbit_count,
                fmt::format("D({}) differs with {} jobs", targets.to_string(), jobs));
        }
        SearchLevel level = initial_level(targets);
        while (level.vertices() < reference.value / 2)
            level = extend_level(level, targets, {});
        checkpoint_write(level, targets, path);
        auto restored = checkpoint_read(path);
        check.expect(restored.level == level, fmt::format("checkpoint for D({}) does not round trip", targets.to_string()));
        const auto resumed = search_from(std::move(restored.level), restored.targets);
        check.expect(resumed.value == reference.value && resumed.maximal == reference.maximal,
            fmt::format("resumed D({}) differs", targets.to_string()));
    }
    std::filesystem::remove(path);
}

auto gating() -> std::vector<Criterion>
{
    return {
        {"1", "exact small difference Ramsey values",
            [](Check & c) { check_ramsey_rows(c, kSmallRamsey, kSmallRunLimit, false); }},
        {"2", "maximal difference graph counts",
            [](Check & c) { check_ramsey_rows(c, kSmallRamsey, kSmallRunLimit, true); }},
        {"3", "extended exact values",
            [](Check & c) {
                check_ramsey_rows(c,
                    {{{3, 8}, 27, 13}, {{3, 9}, 36, 4}, {{4, 6}, 34, 24}, {{3, 3, 4}, 30, std::nullopt}},
                    kExtendedRunLimit, true);
            }},
        {"4", "59-vertex cyclic witness certifies R(3,3,6) >= 60",
            [](Check & c) {
                c.expect(verifies("ramsey_336_cyclic59.col", {3, 3, 6}, c), "witness fails verification");
                c.expect(read_coloring_file(data("ramsey_336_cyclic59.col")).n + 1 == 60, "witness is not on 59 vertices");
            }},
        {"5", "Issai values",
            [](Check & c) {
                const std::vector<std::pair<std::vector<int>, int>> rows{
                    {{3, 3}, 5}, {{3, 4}, 7}, {{3, 5}, 11}, {{3, 6}, 13}, {{4, 4}, 11}, {{4, 5}, 14}};
                for (const auto & [sizes, value] : rows) {
                    const CliqueTargets targets{sizes};
                    const auto start = Clock::now();
                    const auto outcome = issai_search(targets);
                    const double took = seconds_since(start);
                    c.expect(outcome.value == value,
                        fmt::format("S({}) = {}, expected {}", targets.to_string(), outcome.value, value));
                    c.expect(took < kSmallRunLimit, fmt::format("S({}) took {:.1f} s", targets.to_string(), took));
                }
                c.expect(verifies("issai_37_n16.col", {3, 7}, c), "S(3,7) 16-coloring fails verification");
                c.expect(issai_search(CliqueTargets{{3, 7}}).value >= 17, "S(3,7) < 17");
            }},
        {"6", "exceptional Issai colorings are tuple-free",
            [](Check & c) {
                const std::vector<std::pair<std::string, std::vector<int>>> files{
                    {"issai_34_n6.col", {3, 4}}, {"issai_35_n10.col", {3, 5}}, {"issai_44_n10.col", {4, 4}},
                    {"issai_36_n12.col", {3, 6}}, {"issai_45_n13.col", {4, 5}}, {"issai_37_n16.col", {3, 7}}};
                for (const auto & [file, targets] : files)
                    c.expect(verifies(file, targets, c), file + " fails verification");
            }},
        {"7", "S(k,k) = k^2 - k - 1 for k = 3, 4, 5",
            [](Check & c) {
                for (int k : {3, 4, 5}) {
                    const int value = issai_search(CliqueTargets{{k, k}}).value;
                    c.expect(value == k * k - k - 1, fmt::format("S({0},{0}) = {1}", k, value));
                }
            }},
        {"8", "property suites", property_suites},
        {"9", "red {1,3,5,9} has a Schur 4-tuple but no Schur triple",
            [](Check & c) {
                const auto coloring = read_coloring_file(data("schur_4tuple_no_triple_n9.col")).integer_coloring();
                const auto red = coloring.color_class(1);
                c.expect(red == DifferenceSet{1, 3, 5, 9}, "unexpected red class");
                c.expect(is_schur_tuple(std::vector{1, 3, 5, 9}, 4), "1 + 3 + 5 != 9");
                c.expect(find_schur_tuple(red, 4).has_value(), "no red 4-tuple found");
                c.expect(! find_schur_tuple(red, 3).has_value(), "red triple found");
                c.expect(brute_force_has_schur(membership(coloring, 1), 4), "nested loops find no red 4-tuple");
                c.expect(! brute_force_has_schur(membership(coloring, 1), 3), "nested loops find a red triple");
            }},
    };
}

auto stretch() -> std::vector<Criterion>
{
    return {
        {"S1", "D(3,10) = 39, 21 graphs",
            [](Check & c) { check_ramsey_rows(c, {{{3, 10}, 39, 21}}, kExtendedRunLimit, true); }},
        {"S2", "D(3,11) = 46, 6 graphs",
            [](Check & c) { check_ramsey_rows(c, {{{3, 11}, 46, 6}}, kExtendedRunLimit, true); }},
        {"S3", "D(4,7) = 47, 21 graphs",
            [](Check & c) { check_ramsey_rows(c, {{{4, 7}, 47, 21}}, kExtendedRunLimit, true); }},
        {"S4", "D(5,5) = 42, 11 graphs",
            [](Check & c) { check_ramsey_rows(c, {{{5, 5}, 42, 11}}, kExtendedRunLimit, true); }},
        // the 44-vertex witness is rechecked with the explicit-graph oracle
        {"S5", "D(3,3,5) = 45, 658 graphs",
            [](Check & c) {
                const CliqueTargets targets{{3, 3, 5}};
                const auto outcome = search(targets);
                c.expect(outcome.value == 45, fmt::format("D(3,3,5) = {}", outcome.value));
                c.expect(outcome.orbit_count == 658, fmt::format("count {}", outcome.orbit_count.value_or(0)));
                c.expect(! outcome.maximal.empty(), "no maximal coloring");
                if (! outcome.maximal.empty())
                    c.expect(avoids_all(outcome.maximal.assignment(0), targets.sizes()), "witness fails the oracle");
            }},
    };
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    const bool run_stretch = argc > 1 && std::string(argv[1]) == "--stretch";
    const auto criteria = run_stretch ? stretch() : gating();

    int failed = 0;
    for (const auto & criterion : criteria) {
        Check check;
        const auto start = Clock::now();
        try {
            criterion.body(check);
        }
        catch (const std::exception & e) {
            check.expect(false, fmt::format("exception: {}", e.what()));
        }
        fmt::print("{} {:>2}  {} ({:.2f} s)\n", check.ok ? "PASS" : "FAIL", criterion.id, criterion.title,
            seconds_since(start));
        for (const auto & failure : check.failures)
            fmt::print("         {}\n", failure);
        std::fflush(stdout);
        failed += check.ok ? 0 : 1;
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
