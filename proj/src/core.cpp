#include <diffram/core.hpp>
#include <diffram/errors.hpp>

#include "partition.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace diffram {

auto DifferenceSet::range(int top) -> DifferenceSet
{
    if (top < 0 || top > kMaxDifference)
        throw std::out_of_range(fmt::format("range top {} outside 0..{}", top, kMaxDifference));
    DifferenceSet out;
    for (int d = 1; d <= top; ++d)
        out.insert(d);
    return out;
}

DifferenceSet::DifferenceSet(std::initializer_list<int> members)
{
    for (int d : members)
        insert(d);
}

DifferenceSet::DifferenceSet(const std::vector<int> & members)
{
    for (int d : members)
        insert(d);
}

void DifferenceSet::insert(int d)
{
    if (d < 1 || d > kMaxDifference)
        throw std::out_of_range(fmt::format("difference {} outside 1..{}", d, kMaxDifference));
    words_[d >> 6] |= std::uint64_t{1} << (d & 63);
}

void DifferenceSet::erase(int d)
{
    if (d < 1 || d > kMaxDifference)
        return;
    words_[d >> 6] &= ~(std::uint64_t{1} << (d & 63));
}

auto DifferenceSet::members() const -> std::vector<int>
{
    return {begin(), end()};
}

CliqueTargets::CliqueTargets(std::vector<int> sizes) : sizes_(std::move(sizes))
{
    if (sizes_.empty() || static_cast<int>(sizes_.size()) > kMaxColors)
        throw ValidationError(fmt::format("need between 1 and {} clique targets, got {}", kMaxColors, sizes_.size()));
    for (int k : sizes_)
        if (k < 3 || k > kMaxVertices)
            throw ValidationError(fmt::format("clique target {} outside 3..{}", k, kMaxVertices));
}

auto CliqueTargets::parse(std::string_view text) -> CliqueTargets
{
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        auto field = text.substr(pos, comma - pos);
        while (! field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (! field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw ValidationError(fmt::format("bad clique target list '{}'", text));
        sizes.push_back(value);
        pos = comma + 1;
    }
    return CliqueTargets{std::move(sizes)};
}

auto CliqueTargets::smallest() const -> int
{
    return *std::min_element(sizes_.begin(), sizes_.end());
}

auto CliqueTargets::to_string() const -> std::string
{
    return fmt::format("{}", fmt::join(sizes_, ","));
}

DifferenceColoring::DifferenceColoring(int n, std::vector<DifferenceSet> classes) :
    n_(n),
    classes_(std::move(classes))
{
    if (n_ < 1 || n_ > kMaxVertices)
        throw ValidationError(fmt::format("vertex count {} outside 1..{}", n_, kMaxVertices));
    detail::check_partition(n_ - 1, classes_, "difference");
}

auto DifferenceColoring::from_assignment(std::string_view assignment, int colors) -> DifferenceColoring
{
    return {static_cast<int>(assignment.size()) + 1, detail::classes_from_assignment(assignment, colors, "difference")};
}

auto DifferenceColoring::color_of(int difference) const -> int
{
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c].contains(difference))
            return static_cast<int>(c) + 1;
    throw std::out_of_range(fmt::format("difference {} not in 1..{}", difference, n_ - 1));
}

auto DifferenceColoring::assignment_string() const -> std::string
{
    return detail::assignment_of(n_ - 1, classes_);
}

auto make_difference_coloring(int n, const std::vector<std::vector<int>> & class_lists) -> DifferenceColoring
{
    if (n < 1 || n > kMaxVertices)
        throw ValidationError(fmt::format("vertex count {} outside 1..{}", n, kMaxVertices));
    return {n, detail::build_partition(n - 1, class_lists, "difference")};
}

CyclicColoring::CyclicColoring(int n, const std::vector<std::vector<int>> & half_classes) : n_(n)
{
    if (n_ < 1 || n_ > kMaxVertices)
        throw ValidationError(fmt::format("vertex count {} outside 1..{}", n_, kMaxVertices));
    half_ = detail::build_partition(n_ / 2, half_classes, "difference");
}

auto expand_cyclic(const CyclicColoring & cyclic) -> DifferenceColoring
{
    const int n = cyclic.vertices();
    std::vector<DifferenceSet> full(cyclic.half_classes().size());
    for (std::size_t c = 0; c < full.size(); ++c) {
        for (int d : cyclic.half_classes()[c]) {
            full[c].insert(d);
            full[c].insert(n - d);
        }
    }
    return {n, std::move(full)};
}

ExplicitGraph::ExplicitGraph(int n) :
    n_(n),
    colors_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
{
    if (n < 1 || n > kMaxVertices)
        throw ValidationError(fmt::format("vertex count {} outside 1..{}", n, kMaxVertices));
}

void ExplicitGraph::set_color(int u, int v, int color)
{
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v)
        throw std::out_of_range(fmt::format("no edge {{{}, {}}} in K_{}", u, v, n_));
    colors_[index(u, v)] = static_cast<std::uint8_t>(color);
    colors_[index(v, u)] = static_cast<std::uint8_t>(color);
}

auto materialize(const DifferenceColoring & coloring) -> ExplicitGraph
{
    const int n = coloring.vertices();
    ExplicitGraph graph{n};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            graph.set_color(i, j, coloring.color_of(j - i));
    return graph;
}

namespace {
    // Picks `needed` more members of `candidates`, each difference-adjacent
    // (in `differences`) to all earlier picks. Candidates are visited in
    // increasing order, so the first success is the lexicographic minimum.
    auto extend_clique(const DifferenceSet & differences, const DifferenceSet & candidates, int needed,
        std::vector<int> * picked) -> bool
    {
        if (needed == 0)
            return true;
        if (candidates.size() < needed)
            return false;
        for (int x : candidates) {
            // later members must be greater than x and differ from x by a member
            const auto next = candidates & differences.shifted_up(x);
            if (extend_clique(differences, next, needed - 1, picked)) {
                if (picked)
                    picked->push_back(x);
                return true;
            }
        }
        return false;
    }

    void require_clique_size(int k)
    {
        if (k < 2)
            throw std::invalid_argument(fmt::format("clique size {} must be at least 2", k));
    }
}

auto has_clique(const DifferenceSet & differences, int k) -> bool
{
    require_clique_size(k);
    return extend_clique(differences, differences, k - 1, nullptr);
}

auto find_clique(const DifferenceSet & differences, int k) -> std::optional<std::vector<int>>
{
    require_clique_size(k);
    std::vector<int> picked;
    if (! extend_clique(differences, differences, k - 1, &picked))
        return std::nullopt;
    std::reverse(picked.begin(), picked.end());
    return picked;
}

auto creates_clique_with(const DifferenceSet & differences, int new_diff, int k) -> bool
{
    require_clique_size(k);
    if (new_diff <= differences.max() || new_diff > kMaxDifference)
        throw std::invalid_argument(fmt::format(
            "new difference {} must exceed every existing difference (max {})", new_diff, differences.max()));

    // new_diff can only sit in a witness as its largest member; the rest
    // come from members x with new_diff - x also present.
    DifferenceSet partners;
    for (int x : differences) {
        if (differences.contains(new_diff - x)) {
            if (k == 3)
                return true;
            partners.insert(x);
        }
    }
    return extend_clique(differences, partners, k - 2, nullptr);
}

auto clique_vertices(const std::vector<int> & witness) -> std::vector<int>
{
    std::vector<int> vertices{1};
    for (int d : witness)
        vertices.push_back(1 + d);
    return vertices;
}

namespace {
    auto grow_vertex_clique(const ExplicitGraph & graph, int k, int color, std::vector<int> & chosen,
        int first_candidate) -> bool
    {
        if (static_cast<int>(chosen.size()) == k)
            return true;
        const int remaining = k - static_cast<int>(chosen.size());
        for (int v = first_candidate; v + remaining - 1 <= graph.vertices(); ++v) {
            bool joins = true;
            for (int u : chosen) {
                if (graph.color(u, v) != color) {
                    joins = false;
                    break;
                }
            }
            if (! joins)
                continue;
            chosen.push_back(v);
            if (grow_vertex_clique(graph, k, color, chosen, v + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }
}

auto oracle_find_mono_clique(const ExplicitGraph & graph, int k, int color) -> std::optional<std::vector<int>>
{
    require_clique_size(k);
    std::vector<int> chosen;
    if (grow_vertex_clique(graph, k, color, chosen, 1))
        return chosen;
    return std::nullopt;
}

auto oracle_has_mono_clique(const ExplicitGraph & graph, int k, int color) -> bool
{
    return oracle_find_mono_clique(graph, k, color).has_value();
}

} // namespace diffram
