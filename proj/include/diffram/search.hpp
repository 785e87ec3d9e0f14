#pragma once

#include <diffram/core.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffram {

/// One level of the breadth-first search: every surviving coloring of the
/// items {1, ..., length()}, in canonical (lexicographic assignment string)
/// order. For difference searches the items are differences and the level
/// describes graphs on vertices() = length() + 1 vertices; Issai searches
/// color the integers themselves.
class SearchLevel {
public:
    SearchLevel(int length, int colors);

    [[nodiscard]] auto length() const -> int { return length_; }
    [[nodiscard]] auto vertices() const -> int { return length_ + 1; }
    [[nodiscard]] auto colors() const -> int { return colors_; }
    [[nodiscard]] auto size() const -> std::size_t { return classes_.size() / static_cast<std::size_t>(colors_); }
    [[nodiscard]] auto empty() const -> bool { return classes_.empty(); }

    // True once any ancestor level was cut down by a beam cap.
    [[nodiscard]] auto capped() const -> bool { return capped_; }
    void mark_capped() { capped_ = true; }

    // Appends a coloring given as its r classes. The caller keeps the order canonical.
    void push_back(std::span<const DifferenceSet> classes);
    void push_assignment(std::string_view assignment);

    [[nodiscard]] auto classes_of(std::size_t index) const -> std::span<const DifferenceSet>
    {
        return {classes_.data() + index * static_cast<std::size_t>(colors_), static_cast<std::size_t>(colors_)};
    }
    [[nodiscard]] auto assignment(std::size_t index) const -> std::string;
    [[nodiscard]] auto coloring(std::size_t index) const -> DifferenceColoring;

    void truncate(std::size_t count);
    void reserve(std::size_t count) { classes_.reserve(count * static_cast<std::size_t>(colors_)); }

    // Raw storage, `colors()` sets per member.
    [[nodiscard]] auto storage() const -> const std::vector<DifferenceSet> & { return classes_; }
    [[nodiscard]] auto storage() -> std::vector<DifferenceSet> & { return classes_; }

    friend auto operator==(const SearchLevel &, const SearchLevel &) -> bool = default;

private:
    int length_;
    int colors_;
    bool capped_ = false;
    std::vector<DifferenceSet> classes_;
};

struct SearchOptions {
    // Keep at most this many (lexicographically smallest) members per level.
    std::optional<std::size_t> beam_cap;
    // Rewritten with the current level after every step.
    std::optional<std::filesystem::path> checkpoint_path;
    int parallelism = 1;
    // Largest level the search may hold without a beam cap.
    std::size_t memory_budget_bytes = std::size_t{1} << 30;
    // Called with each new current level.
    std::function<void(const SearchLevel &)> on_level;
};

enum class OutcomeStatus {
    exact,
    lower_bound
};

enum class ColoringKind {
    difference,
    integer
};

struct SearchOutcome {
    ColoringKind kind = ColoringKind::difference;
    CliqueTargets targets;
    OutcomeStatus status = OutcomeStatus::exact;
    // D(targets) or S(targets) when exact, else a certified lower bound.
    int value = 0;
    SearchLevel maximal;
    // Maximal colorings up to target-preserving color permutations; exact runs only.
    std::optional<std::uint64_t> orbit_count;
};

auto initial_level(const CliqueTargets & targets) -> SearchLevel;

// Throws MemoryBudgetError when the child level outgrows the budget and no beam cap is set.
auto extend_level(const SearchLevel & level, const CliqueTargets & targets, const SearchOptions & options)
    -> SearchLevel;

auto search(const CliqueTargets & targets, const SearchOptions & options = {}) -> SearchOutcome;

// Continues from an arbitrary level, e.g. one read back from a checkpoint.
auto search_from(SearchLevel start, const CliqueTargets & targets, const SearchOptions & options = {})
    -> SearchOutcome;

auto count_orbits(const std::vector<DifferenceColoring> & colorings, const CliqueTargets & targets) -> std::uint64_t;
auto count_orbits(const SearchLevel & level, const CliqueTargets & targets) -> std::uint64_t;

// Color permutations p (as 0-based images) with k_{p(i)} = k_i, identity first.
auto target_preserving_permutations(const CliqueTargets & targets) -> std::vector<std::vector<int>>;

struct Checkpoint {
    CliqueTargets targets;
    SearchLevel level;
};

// Line format: `targets=k1,...`, `j=<vertex count>`, optionally `capped=1`,
// then one assignment string per coloring.
auto format_checkpoint(const SearchLevel & level, const CliqueTargets & targets) -> std::string;
auto parse_checkpoint(std::string_view text) -> Checkpoint;

void checkpoint_write(const SearchLevel & level, const CliqueTargets & targets, const std::filesystem::path & path);
auto checkpoint_read(const std::filesystem::path & path) -> Checkpoint;

} // namespace diffram
