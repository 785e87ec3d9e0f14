#include "partition.hpp"

#include <diffram/core.hpp>
#include <diffram/errors.hpp>

#include <fmt/format.h>

namespace diffram::detail {

auto build_partition(int top, const std::vector<std::vector<int>> & class_lists, std::string_view item)
    -> std::vector<DifferenceSet>
{
    if (class_lists.empty())
        throw ValidationError("a coloring needs at least one color");
    if (static_cast<int>(class_lists.size()) > kMaxColors)
        throw ValidationError(fmt::format("at most {} colors are supported", kMaxColors));

    std::vector<DifferenceSet> classes(class_lists.size());
    std::vector<int> owner(static_cast<std::size_t>(top) + 1, 0);
    for (std::size_t c = 0; c < class_lists.size(); ++c) {
        const int color = static_cast<int>(c) + 1;
        for (int value : class_lists[c]) {
            if (value < 1 || value > top)
                throw ValidationError(fmt::format("{} {} out of range 1..{}", item, value, top));
            if (owner[value] != 0)
                throw ValidationError(
                    fmt::format("{} {} is assigned to colors {} and {}", item, value, owner[value], color));
            owner[value] = color;
            classes[c].insert(value);
        }
    }
    for (int value = 1; value <= top; ++value)
        if (owner[value] == 0)
            throw ValidationError(fmt::format("{} {} is not colored", item, value));
    return classes;
}

void check_partition(int top, const std::vector<DifferenceSet> & classes, std::string_view item)
{
    std::vector<std::vector<int>> lists;
    lists.reserve(classes.size());
    for (const auto & cls : classes)
        lists.push_back(cls.members());
    build_partition(top, lists, item);
}

auto classes_from_assignment(std::string_view assignment, int colors, std::string_view item)
    -> std::vector<DifferenceSet>
{
    if (colors < 1 || colors > kMaxColors)
        throw ValidationError(fmt::format("color count {} out of range 1..{}", colors, kMaxColors));
    if (static_cast<int>(assignment.size()) > kMaxDifference)
        throw ValidationError(fmt::format("assignment longer than {} {}s", kMaxDifference, item));
    std::vector<DifferenceSet> classes(static_cast<std::size_t>(colors));
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const int color = assignment[i] - '0';
        if (color < 1 || color > colors)
            throw ValidationError(
                fmt::format("{} {}: color '{}' not in 1..{}", item, i + 1, assignment[i], colors));
        classes[static_cast<std::size_t>(color - 1)].insert(static_cast<int>(i) + 1);
    }
    return classes;
}

auto assignment_of(int top, const std::vector<DifferenceSet> & classes) -> std::string
{
    std::string out(static_cast<std::size_t>(top), '?');
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int value : classes[c])
            if (value <= top)
                out[static_cast<std::size_t>(value - 1)] = static_cast<char>('1' + c);
    return out;
}

} // namespace diffram::detail
