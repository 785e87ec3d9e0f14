#pragma once

#include <diffram/core.hpp>
#include <diffram/issai.hpp>
#include <diffram/search.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace diffram {

/// A coloring as stored on disk:
///
///     n=59
///     r=3
///     kind=difference      # or integer
///     cyclic=1             # optional, default 0
///     1: 5 12 13 14 16 20 22
///     2: 10 15 19 24 26 27
///     3: 1 2 3 4 6 7 8 9 11 17 18 21 23 25 28 29
///
/// Header tokens may share a line. Class lines may separate values with
/// spaces or commas; a color with no line is empty. Cyclic files list
/// differences 1..floor(n/2) only.
struct ColoringFile {
    int n = 0;
    int colors = 0;
    ColoringKind kind = ColoringKind::difference;
    bool cyclic = false;
    // As listed, before cyclic expansion.
    std::vector<std::vector<int>> listed;
    std::variant<DifferenceColoring, IntegerColoring> coloring;

    [[nodiscard]] auto difference_coloring() const -> const DifferenceColoring &
    {
        return std::get<DifferenceColoring>(coloring);
    }
    [[nodiscard]] auto integer_coloring() const -> const IntegerColoring &
    {
        return std::get<IntegerColoring>(coloring);
    }
};

// Throws ParseError; partition problems name the offending difference or integer.
auto parse_coloring_file(std::string_view text) -> ColoringFile;
auto read_coloring_file(const std::string & path) -> ColoringFile;

auto format_coloring_file(const DifferenceColoring & coloring) -> std::string;
auto format_coloring_file(const IntegerColoring & coloring) -> std::string;

// Machine-readable SearchOutcome:
//
//     status=exact|lower_bound
//     value=<int>
//     targets=<k1,...>
//     count=<int>|n/a
//     kind=difference|integer
//     <one assignment string per maximal coloring>
auto format_results(const SearchOutcome & outcome) -> std::string;
auto parse_results(std::string_view text) -> SearchOutcome;

struct ColorVerdict {
    int color = 0;
    int target = 0;
    bool passed = true;
    // Clique vertices (difference kind) or Schur tuple (integer kind) on failure.
    std::vector<int> witness;
    // Difference kind: whether the explicit-graph check reached the same verdict.
    bool checks_agree = true;
};

struct VerificationReport {
    ColoringKind kind = ColoringKind::difference;
    int n = 0;
    std::vector<ColorVerdict> verdicts;

    [[nodiscard]] auto passed() const -> bool;
};

// Difference kind: difference-set clique test and explicit-graph subset
// search per color. Integer kind: Schur tuple search per color. Throws
// ValidationError if the number of targets differs from the color count.
auto verify_coloring(const ColoringFile & file, const CliqueTargets & targets) -> VerificationReport;
auto format_verification(const VerificationReport & report, const CliqueTargets & targets) -> std::string;

} // namespace diffram
