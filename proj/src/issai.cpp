#include <diffram/errors.hpp>
#include <diffram/issai.hpp>

#include "level_engine.hpp"
#include "partition.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace diffram {

IntegerColoring::IntegerColoring(int n, std::vector<DifferenceSet> classes) : n_(n), classes_(std::move(classes))
{
    if (n_ < 0 || n_ > kMaxDifference)
        throw ValidationError(fmt::format("integer range top {} outside 0..{}", n_, kMaxDifference));
    detail::check_partition(n_, classes_, "integer");
}

auto IntegerColoring::from_assignment(std::string_view assignment, int colors) -> IntegerColoring
{
    return {static_cast<int>(assignment.size()), detail::classes_from_assignment(assignment, colors, "integer")};
}

auto IntegerColoring::color_of(int value) const -> int
{
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c].contains(value))
            return static_cast<int>(c) + 1;
    throw std::out_of_range(fmt::format("integer {} not in 1..{}", value, n_));
}

auto IntegerColoring::assignment_string() const -> std::string
{
    return detail::assignment_of(n_, classes_);
}

auto make_integer_coloring(int n, const std::vector<std::vector<int>> & class_lists) -> IntegerColoring
{
    if (n < 0 || n > kMaxDifference)
        throw ValidationError(fmt::format("integer range top {} outside 0..{}", n, kMaxDifference));
    return {n, detail::build_partition(n, class_lists, "integer")};
}

auto is_schur_tuple(std::span<const int> entries, int k) -> bool
{
    if (k < 2 || static_cast<int>(entries.size()) != k)
        return false;
    const long sum = std::accumulate(entries.begin(), entries.end() - 1, 0L);
    return sum == entries.back();
}

namespace {
    auto pick_summands(const DifferenceSet & members, int remaining, int smallest, int sum, std::vector<int> & picked)
        -> bool
    {
        if (remaining == 0)
            return members.contains(sum);
        const int top = members.max();
        for (int x = members.next_from(smallest); x != 0; x = members.next_from(x + 1)) {
            // summands are nondecreasing, so the total is at least sum + remaining * x
            if (sum + remaining * x > top)
                break;
            picked.push_back(x);
            if (pick_summands(members, remaining - 1, x, sum + x, picked))
                return true;
            picked.pop_back();
        }
        return false;
    }
}

auto find_schur_tuple(const DifferenceSet & members, int k) -> std::optional<std::vector<int>>
{
    if (k < 2)
        throw std::invalid_argument(fmt::format("tuple size {} must be at least 2", k));
    std::vector<int> picked;
    if (! pick_summands(members, k - 1, 1, 0, picked))
        return std::nullopt;
    picked.push_back(std::accumulate(picked.begin(), picked.end(), 0));
    return picked;
}

auto find_mono_schur_tuple(const IntegerColoring & coloring, const CliqueTargets & targets)
    -> std::optional<SchurWitness>
{
    if (coloring.colors() != targets.colors())
        throw ValidationError(fmt::format(
            "coloring has {} colors but {} targets were given", coloring.colors(), targets.colors()));
    for (int c = 1; c <= coloring.colors(); ++c)
        if (auto tuple = find_schur_tuple(coloring.color_class(c), targets.size_for(c)))
            return SchurWitness{std::move(*tuple), c};
    return std::nullopt;
}

auto closes_schur_tuple(const DifferenceSet & members, int new_value, int k) -> bool
{
    if (k < 2)
        throw std::invalid_argument(fmt::format("tuple size {} must be at least 2", k));
    if (new_value <= members.max() || new_value > kMaxDifference)
        throw std::invalid_argument(fmt::format(
            "new value {} must exceed every existing member (max {})", new_value, members.max()));

    // sums of exactly t members, t = 1 .. k-1, truncated at new_value
    DifferenceSet sums = members;
    for (int t = 2; t < k; ++t) {
        DifferenceSet next;
        for (int x : members) {
            if (x >= new_value)
                break;
            next = next | sums.shifted_up(x);
        }
        sums = next.up_to(new_value);
        if (sums.empty())
            return false;
    }
    return sums.contains(new_value);
}

auto issai_search(const CliqueTargets & targets, const SearchOptions & options) -> SearchOutcome
{
    if (options.checkpoint_path)
        throw std::invalid_argument("checkpointing is only supported for difference searches");
    if (options.beam_cap && *options.beam_cap == 0)
        throw ValidationError("beam cap must be at least 1");

    const auto & sizes = targets.sizes();
    auto kills = [&sizes](const DifferenceSet & cls, int value, int color) {
        return closes_schur_tuple(cls, value, sizes[static_cast<std::size_t>(color - 1)]);
    };

    SearchLevel level{0, targets.colors()};
    level.push_back(std::vector<DifferenceSet>(static_cast<std::size_t>(targets.colors())));
    if (options.on_level)
        options.on_level(level);
    while (true) {
        if (level.length() == kMaxDifference)
            throw ValidationError(fmt::format(
                "S({}) exceeds the supported range 1..{}", targets.to_string(), kMaxDifference));
        auto child = detail::extend_with(level, options, kills);
        if (child.empty())
            break;
        level = std::move(child);
        if (options.on_level)
            options.on_level(level);
    }

    SearchOutcome outcome{
        .kind = ColoringKind::integer,
        .targets = targets,
        .status = level.capped() ? OutcomeStatus::lower_bound : OutcomeStatus::exact,
        .value = level.length() + 1,
        .maximal = std::move(level),
        .orbit_count = std::nullopt,
    };
    if (outcome.status == OutcomeStatus::exact)
        outcome.orbit_count = count_orbits(outcome.maximal, targets);
    return outcome;
}

auto extract_schur_tuple(const DifferenceColoring & coloring, std::span<const int> clique) -> SchurWitness
{
    if (clique.size() < 3)
        throw ValidationError(fmt::format("a clique of {} vertices is too small, need at least 3", clique.size()));
    std::vector<int> vertices(clique.begin(), clique.end());
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw ValidationError("clique vertices must be distinct");
    if (vertices.front() < 1 || vertices.back() > coloring.vertices())
        throw ValidationError(fmt::format("clique vertices must lie in 1..{}", coloring.vertices()));

    const int color = coloring.color_of(vertices[1] - vertices[0]);
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (coloring.color_of(vertices[b] - vertices[a]) != color)
                throw ValidationError(fmt::format("vertices {} and {} are joined in color {}, not {}: not monochromatic",
                    vertices[a], vertices[b], coloring.color_of(vertices[b] - vertices[a]), color));

    std::vector<int> entries;
    const int base = vertices.front();
    entries.push_back(vertices[1] - base);
    for (std::size_t i = 2; i < vertices.size(); ++i)
        entries.push_back(vertices[i] - vertices[i - 1]);
    std::sort(entries.begin(), entries.end());
    entries.push_back(vertices.back() - base);
    return {std::move(entries), color};
}

auto satisfies_difference_bound(const SearchOutcome & ramsey, const SearchOutcome & issai) -> bool
{
    if (ramsey.kind != ColoringKind::difference || issai.kind != ColoringKind::integer)
        throw ValidationError("expected a difference outcome and an integer outcome");
    if (ramsey.status != OutcomeStatus::exact || issai.status != OutcomeStatus::exact)
        throw ValidationError("both outcomes must be exact");
    if (! (ramsey.targets == issai.targets))
        throw ValidationError("outcomes are for different targets");
    return issai.value <= ramsey.value - 1;
}

} // namespace diffram
