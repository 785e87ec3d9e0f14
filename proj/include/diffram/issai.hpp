#pragma once

#include <diffram/core.hpp>
#include <diffram/search.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffram {

/// A partition of the integers {1, ..., n} into r color classes.
class IntegerColoring {
public:
    IntegerColoring(int n, std::vector<DifferenceSet> classes);

    static auto from_assignment(std::string_view assignment, int colors) -> IntegerColoring;

    [[nodiscard]] auto top() const -> int { return n_; }
    [[nodiscard]] auto colors() const -> int { return static_cast<int>(classes_.size()); }
    [[nodiscard]] auto color_class(int color) const -> const DifferenceSet & { return classes_.at(color - 1); }
    [[nodiscard]] auto classes() const -> const std::vector<DifferenceSet> & { return classes_; }
    [[nodiscard]] auto color_of(int value) const -> int;
    [[nodiscard]] auto assignment_string() const -> std::string;

    friend auto operator==(const IntegerColoring &, const IntegerColoring &) -> bool = default;

private:
    int n_;
    std::vector<DifferenceSet> classes_;
};

auto make_integer_coloring(int n, const std::vector<std::vector<int>> & class_lists) -> IntegerColoring;

// (x_1, ..., x_k) with x_1 + ... + x_{k-1} = x_k; summands nondecreasing.
struct SchurWitness {
    std::vector<int> entries;
    int color = 0;

    friend auto operator==(const SchurWitness &, const SchurWitness &) -> bool = default;
};

// Summands may repeat. False when the tuple does not have exactly k entries.
auto is_schur_tuple(std::span<const int> entries, int k) -> bool;

// Lexicographically smallest Schur k-tuple with every entry in `members`.
auto find_schur_tuple(const DifferenceSet & members, int k) -> std::optional<std::vector<int>>;

// Searches colors 1..r in order and reports the first color that holds a
// Schur k_i-tuple, with its smallest tuple.
auto find_mono_schur_tuple(const IntegerColoring & coloring, const CliqueTargets & targets)
    -> std::optional<SchurWitness>;

// Whether new_value is a sum of k-1 members of `members` (repetition allowed),
// i.e. whether adding new_value to a tuple-free class creates a Schur k-tuple.
// Requires new_value > members.max().
auto closes_schur_tuple(const DifferenceSet & members, int new_value, int k) -> bool;

// Exact Issai number S(targets); maximal colorings color {1, ..., S-1}.
// Honors beam_cap and parallelism; checkpointing is not supported.
auto issai_search(const CliqueTargets & targets, const SearchOptions & options = {}) -> SearchOutcome;

// Schur tuple read off a monochromatic clique: with v_0 < ... < v_{k-1} and
// d_i = v_i - v_0, returns (d_1, d_2 - d_1, ..., d_{k-1} - d_{k-2}, d_{k-1})
// with the summands sorted. Throws ValidationError unless the vertices form a
// monochromatic clique of at least 3 vertices.
auto extract_schur_tuple(const DifferenceColoring & coloring, std::span<const int> clique) -> SchurWitness;

// S(targets) <= D(targets) - 1 for two exact outcomes on the same targets.
auto satisfies_difference_bound(const SearchOutcome & ramsey, const SearchOutcome & issai) -> bool;

} // namespace diffram
