#pragma once

#include <diffram/difference_set.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace diffram::detail {

// Checks that class_lists partitions {1, ..., top} and returns the classes.
// `item` names the domain element in error messages ("difference", "integer").
auto build_partition(int top, const std::vector<std::vector<int>> & class_lists, std::string_view item)
    -> std::vector<DifferenceSet>;

// Same check on already-built sets.
void check_partition(int top, const std::vector<DifferenceSet> & classes, std::string_view item);

// Classes from a string of color digits; character i colors element i + 1.
auto classes_from_assignment(std::string_view assignment, int colors, std::string_view item)
    -> std::vector<DifferenceSet>;

auto assignment_of(int top, const std::vector<DifferenceSet> & classes) -> std::string;

} // namespace diffram::detail
