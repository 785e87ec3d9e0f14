#pragma once

#include <diffram/difference_set.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diffram {

// Colors are 1-based and rendered as single digits in assignment strings.
inline constexpr int kMaxColors = 9;

/// The forbidden monochromatic clique size for each color, (k_1, ..., k_r).
class CliqueTargets {
public:
    // Throws ValidationError unless 1 <= r <= kMaxColors and 3 <= k_i <= kMaxVertices.
    explicit CliqueTargets(std::vector<int> sizes);

    // Parses "3,3,6".
    static auto parse(std::string_view text) -> CliqueTargets;

    [[nodiscard]] auto colors() const -> int { return static_cast<int>(sizes_.size()); }
    [[nodiscard]] auto size_for(int color) const -> int { return sizes_.at(color - 1); }
    [[nodiscard]] auto sizes() const -> const std::vector<int> & { return sizes_; }
    [[nodiscard]] auto smallest() const -> int;
    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(const CliqueTargets &, const CliqueTargets &) -> bool = default;

private:
    std::vector<int> sizes_;
};

/// A partition of {1, ..., n-1} into r color classes. Edge {i, j} of K_n
/// gets the color of difference |j - i|.
class DifferenceColoring {
public:
    // Throws ValidationError if the classes do not partition {1, ..., n-1}.
    DifferenceColoring(int n, std::vector<DifferenceSet> classes);

    // One character per difference 1..n-1, each in '1'..'0'+colors.
    static auto from_assignment(std::string_view assignment, int colors) -> DifferenceColoring;

    [[nodiscard]] auto vertices() const -> int { return n_; }
    [[nodiscard]] auto colors() const -> int { return static_cast<int>(classes_.size()); }
    [[nodiscard]] auto color_class(int color) const -> const DifferenceSet & { return classes_.at(color - 1); }
    [[nodiscard]] auto classes() const -> const std::vector<DifferenceSet> & { return classes_; }
    [[nodiscard]] auto color_of(int difference) const -> int;
    [[nodiscard]] auto assignment_string() const -> std::string;

    friend auto operator==(const DifferenceColoring &, const DifferenceColoring &) -> bool = default;

private:
    int n_;
    std::vector<DifferenceSet> classes_;
};

// Validating constructor from per-color difference lists. Errors name the
// offending difference (duplicate, uncolored, or out of range).
auto make_difference_coloring(int n, const std::vector<std::vector<int>> & class_lists) -> DifferenceColoring;

/// A circulant coloring given by its classes over {1, ..., floor(n/2)};
/// difference d and n - d always share a color.
class CyclicColoring {
public:
    CyclicColoring(int n, const std::vector<std::vector<int>> & half_classes);

    [[nodiscard]] auto vertices() const -> int { return n_; }
    [[nodiscard]] auto half_classes() const -> const std::vector<DifferenceSet> & { return half_; }

private:
    int n_;
    std::vector<DifferenceSet> half_;
};

auto expand_cyclic(const CyclicColoring & cyclic) -> DifferenceColoring;

/// Complete graph on vertices 1..n with an arbitrary edge coloring. Used as
/// the independent representation for cross-checking the difference tests.
class ExplicitGraph {
public:
    explicit ExplicitGraph(int n);

    [[nodiscard]] auto vertices() const -> int { return n_; }
    [[nodiscard]] auto color(int u, int v) const -> int { return colors_[index(u, v)]; }
    void set_color(int u, int v, int color);

private:
    [[nodiscard]] auto index(int u, int v) const -> std::size_t
    {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }

    int n_;
    std::vector<std::uint8_t> colors_;
};

auto materialize(const DifferenceColoring & coloring) -> ExplicitGraph;

// True iff some (k-1)-subset of `differences` has all pairwise differences in
// `differences`, i.e. the graph whose class is `differences` has a K_k in it.
auto has_clique(const DifferenceSet & differences, int k) -> bool;

// Lexicographically smallest such (k-1)-subset, ascending.
auto find_clique(const DifferenceSet & differences, int k) -> std::optional<std::vector<int>>;

// Whether adding new_diff to a clique-free `differences` creates a K_k.
// Requires new_diff > differences.max(); throws std::invalid_argument otherwise.
auto creates_clique_with(const DifferenceSet & differences, int new_diff, int k) -> bool;

// Vertices {1, 1 + d_1, ..., 1 + d_{k-1}} of the clique named by a difference witness.
auto clique_vertices(const std::vector<int> & witness) -> std::vector<int>;

// Naive vertex-subset search on an explicit graph; shares nothing with has_clique.
auto oracle_find_mono_clique(const ExplicitGraph & graph, int k, int color) -> std::optional<std::vector<int>>;
auto oracle_has_mono_clique(const ExplicitGraph & graph, int k, int color) -> bool;

} // namespace diffram
