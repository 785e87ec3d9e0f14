#include <diffram/errors.hpp>
#include <diffram/search.hpp>

#include "level_engine.hpp"
#include "partition.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace diffram {

SearchLevel::SearchLevel(int length, int colors) : length_(length), colors_(colors)
{
    if (length < 0 || length > kMaxDifference)
        throw ValidationError(fmt::format("level length {} outside 0..{}", length, kMaxDifference));
    if (colors < 1 || colors > kMaxColors)
        throw ValidationError(fmt::format("color count {} outside 1..{}", colors, kMaxColors));
}

void SearchLevel::push_back(std::span<const DifferenceSet> classes)
{
    if (static_cast<int>(classes.size()) != colors_)
        throw ValidationError(fmt::format("expected {} color classes, got {}", colors_, classes.size()));
    classes_.insert(classes_.end(), classes.begin(), classes.end());
}

void SearchLevel::push_assignment(std::string_view assignment)
{
    if (static_cast<int>(assignment.size()) != length_)
        throw ValidationError(fmt::format("assignment '{}' has length {}, expected {}", assignment,
            assignment.size(), length_));
    const auto classes = detail::classes_from_assignment(assignment, colors_, "item");
    push_back(classes);
}

auto SearchLevel::assignment(std::size_t index) const -> std::string
{
    const auto classes = classes_of(index);
    return detail::assignment_of(length_, {classes.begin(), classes.end()});
}

auto SearchLevel::coloring(std::size_t index) const -> DifferenceColoring
{
    const auto classes = classes_of(index);
    return {vertices(), {classes.begin(), classes.end()}};
}

void SearchLevel::truncate(std::size_t count)
{
    if (count < size())
        classes_.resize(count * static_cast<std::size_t>(colors_));
}

auto initial_level(const CliqueTargets & targets) -> SearchLevel
{
    // Every coloring of {1, ..., m-2} lives on m-1 < k_i vertices, so none can
    // hold a forbidden clique.
    const int length = targets.smallest() - 2;
    const int colors = targets.colors();
    SearchLevel level{length, colors};

    std::string assignment(static_cast<std::size_t>(length), '1');
    while (true) {
        level.push_assignment(assignment);
        // odometer increment, last position fastest: canonical order
        int pos = length - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == static_cast<char>('0' + colors)) {
            assignment[static_cast<std::size_t>(pos)] = '1';
            --pos;
        }
        if (pos < 0)
            break;
        ++assignment[static_cast<std::size_t>(pos)];
    }
    return level;
}

auto extend_level(const SearchLevel & level, const CliqueTargets & targets, const SearchOptions & options)
    -> SearchLevel
{
    if (level.empty())
        throw std::invalid_argument("cannot extend an empty level");
    if (level.colors() != targets.colors())
        throw ValidationError(fmt::format("level has {} colors but targets have {}", level.colors(), targets.colors()));
    if (options.beam_cap && *options.beam_cap == 0)
        throw ValidationError("beam cap must be at least 1");

    const auto & sizes = targets.sizes();
    return detail::extend_with(level, options, [&sizes](const DifferenceSet & cls, int difference, int color) {
        return creates_clique_with(cls, difference, sizes[static_cast<std::size_t>(color - 1)]);
    });
}

auto search(const CliqueTargets & targets, const SearchOptions & options) -> SearchOutcome
{
    return search_from(initial_level(targets), targets, options);
}

auto search_from(SearchLevel start, const CliqueTargets & targets, const SearchOptions & options) -> SearchOutcome
{
    if (start.empty())
        throw std::invalid_argument("search needs a nonempty starting level");
    if (start.colors() != targets.colors())
        throw ValidationError(fmt::format("level has {} colors but targets have {}", start.colors(), targets.colors()));

    SearchLevel level = std::move(start);
    if (options.checkpoint_path)
        checkpoint_write(level, targets, *options.checkpoint_path);
    if (options.on_level)
        options.on_level(level);

    while (true) {
        auto child = extend_level(level, targets, options);
        if (child.empty())
            break;
        level = std::move(child);
        if (options.checkpoint_path)
            checkpoint_write(level, targets, *options.checkpoint_path);
        if (options.on_level)
            options.on_level(level);
    }

    SearchOutcome outcome{
        .kind = ColoringKind::difference,
        .targets = targets,
        .status = level.capped() ? OutcomeStatus::lower_bound : OutcomeStatus::exact,
        .value = level.vertices() + 1,
        .maximal = std::move(level),
        .orbit_count = std::nullopt,
    };
    if (outcome.status == OutcomeStatus::exact)
        outcome.orbit_count = count_orbits(outcome.maximal, targets);
    return outcome;
}

auto target_preserving_permutations(const CliqueTargets & targets) -> std::vector<std::vector<int>>
{
    const auto & sizes = targets.sizes();
    std::vector<int> perm(sizes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> result;
    do {
        bool preserves = true;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (sizes[static_cast<std::size_t>(perm[i])] != sizes[i])
                preserves = false;
        if (preserves)
            result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

namespace {
    auto count_assignment_orbits(const std::vector<std::string> & assignments, const CliqueTargets & targets)
        -> std::uint64_t
    {
        const auto perms = target_preserving_permutations(targets);
        std::set<std::string> representatives;
        for (const auto & assignment : assignments) {
            std::string best = assignment;
            for (const auto & perm : perms) {
                std::string image = assignment;
                for (auto & ch : image)
                    ch = static_cast<char>('1' + perm[static_cast<std::size_t>(ch - '1')]);
                best = std::min(best, image);
            }
            representatives.insert(std::move(best));
        }
        return representatives.size();
    }
}

auto count_orbits(const std::vector<DifferenceColoring> & colorings, const CliqueTargets & targets) -> std::uint64_t
{
    std::vector<std::string> assignments;
    assignments.reserve(colorings.size());
    for (const auto & coloring : colorings) {
        if (coloring.colors() != targets.colors())
            throw ValidationError("coloring and targets disagree on the number of colors");
        assignments.push_back(coloring.assignment_string());
    }
    return count_assignment_orbits(assignments, targets);
}

auto count_orbits(const SearchLevel & level, const CliqueTargets & targets) -> std::uint64_t
{
    if (level.colors() != targets.colors())
        throw ValidationError("level and targets disagree on the number of colors");
    std::vector<std::string> assignments;
    assignments.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i)
        assignments.push_back(level.assignment(i));
    return count_assignment_orbits(assignments, targets);
}

auto format_checkpoint(const SearchLevel & level, const CliqueTargets & targets) -> std::string
{
    std::string out = fmt::format("targets={}\nj={}\n", targets.to_string(), level.vertices());
    if (level.capped())
        out += "capped=1\n";
    out.reserve(out.size() + level.size() * (static_cast<std::size_t>(level.length()) + 1));
    for (std::size_t i = 0; i < level.size(); ++i) {
        out += level.assignment(i);
        out += '\n';
    }
    return out;
}

namespace {
    auto header_value(std::string_view line, std::string_view key, std::size_t line_no) -> std::string_view
    {
        if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != '=')
            throw ParseError(line_no, fmt::format("expected '{}=...'", key));
        return line.substr(key.size() + 1);
    }
}

auto parse_checkpoint(std::string_view text) -> Checkpoint
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        if (! line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        pos = end + 1;
    }

    if (lines.empty())
        throw ParseError(1, "empty checkpoint, expected 'targets=...'");

    std::optional<CliqueTargets> targets;
    try {
        targets = CliqueTargets::parse(header_value(lines[0], "targets", 1));
    }
    catch (const ValidationError & e) {
        throw ParseError(1, e.what());
    }

    if (lines.size() < 2)
        throw ParseError(2, "missing 'j=<vertex count>'");
    const auto j_text = header_value(lines[1], "j", 2);
    int vertices = 0;
    const auto [ptr, ec] = std::from_chars(j_text.data(), j_text.data() + j_text.size(), vertices);
    if (ec != std::errc{} || ptr != j_text.data() + j_text.size() || vertices < 1 || vertices > kMaxVertices)
        throw ParseError(2, fmt::format("bad vertex count '{}'", j_text));

    SearchLevel level{vertices - 1, targets->colors()};
    std::size_t next = 2;
    if (next < lines.size() && lines[next].starts_with("capped")) {
        if (lines[next] != "capped=1")
            throw ParseError(next + 1, "expected 'capped=1'");
        level.mark_capped();
        ++next;
    }

    std::string previous;
    for (; next < lines.size(); ++next) {
        const auto line = lines[next];
        const auto line_no = next + 1;
        if (static_cast<int>(line.size()) != level.length())
            throw ParseError(line_no, fmt::format("assignment has length {}, expected {}", line.size(), level.length()));
        try {
            level.push_assignment(line);
        }
        catch (const ValidationError & e) {
            throw ParseError(line_no, e.what());
        }
        if (level.size() > 1 && ! (previous < line))
            throw ParseError(line_no, "colorings are not in strictly increasing canonical order");
        const auto classes = level.classes_of(level.size() - 1);
        for (int c = 1; c <= level.colors(); ++c)
            if (has_clique(classes[static_cast<std::size_t>(c - 1)], targets->size_for(c)))
                throw ParseError(line_no, fmt::format("coloring has a K_{} in color {}", targets->size_for(c), c));
        previous = line;
    }
    return {*targets, std::move(level)};
}

void checkpoint_write(const SearchLevel & level, const CliqueTargets & targets, const std::filesystem::path & path)
{
    // write-then-rename so an interrupted run leaves the previous level intact
    auto temp = path;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (! out)
            throw std::runtime_error(fmt::format("cannot write checkpoint {}", temp.string()));
        out << format_checkpoint(level, targets);
        if (! out)
            throw std::runtime_error(fmt::format("error writing checkpoint {}", temp.string()));
    }
    std::filesystem::rename(temp, path);
}

auto checkpoint_read(const std::filesystem::path & path) -> Checkpoint
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error(fmt::format("cannot read checkpoint {}", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_checkpoint(buffer.str());
}

} // namespace diffram
