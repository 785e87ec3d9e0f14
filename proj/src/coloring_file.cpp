#include <diffram/coloring_file.hpp>
#include <diffram/errors.hpp>

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace diffram {

namespace {
    struct Line {
        std::size_t number;
        std::string_view text;
    };

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
            s.remove_prefix(1);
        while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    // Lines with comments stripped; blank lines dropped.
    auto content_lines(std::string_view text) -> std::vector<Line>
    {
        std::vector<Line> lines;
        std::size_t pos = 0;
        std::size_t number = 0;
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            ++number;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (! line.empty())
                lines.push_back({number, line});
            pos = end + 1;
        }
        return lines;
    }

    auto split_tokens(std::string_view s) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < s.size()) {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == ','))
                ++pos;
            const auto start = pos;
            while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != ',')
                ++pos;
            if (pos > start)
                tokens.push_back(s.substr(start, pos - start));
        }
        return tokens;
    }

    auto parse_int(std::string_view token, std::size_t line, std::string_view what) -> int
    {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line, fmt::format("bad {} '{}'", what, token));
        return value;
    }

    auto kind_name(ColoringKind kind) -> std::string_view
    {
        return kind == ColoringKind::difference ? "difference" : "integer";
    }

    template <class Coloring>
    auto format_classes(int n, ColoringKind kind, const Coloring & coloring) -> std::string
    {
        std::string out = fmt::format("n={}\nr={}\nkind={}\ncyclic=0\n", n, coloring.colors(), kind_name(kind));
        for (int c = 1; c <= coloring.colors(); ++c) {
            out += fmt::format("{}:", c);
            for (int value : coloring.color_class(c))
                out += fmt::format(" {}", value);
            out += '\n';
        }
        return out;
    }
}

auto parse_coloring_file(std::string_view text) -> ColoringFile
{
    std::map<std::string, std::string, std::less<>> header;
    std::map<std::string, std::size_t, std::less<>> header_line;
    std::map<int, std::pair<std::size_t, std::vector<int>>> classes;

    for (const auto & [number, line] : content_lines(text)) {
        const auto colon = line.find(':');
        if (colon != std::string_view::npos) {
            const int color = parse_int(trim(line.substr(0, colon)), number, "color index");
            if (classes.contains(color))
                throw ParseError(number, fmt::format("color {} listed twice", color));
            std::vector<int> values;
            for (auto token : split_tokens(line.substr(colon + 1)))
                values.push_back(parse_int(token, number, "value"));
            classes.emplace(color, std::pair{number, std::move(values)});
            continue;
        }
        if (! classes.empty())
            throw ParseError(number, "header lines must come before the color classes");
        for (auto token : split_tokens(line)) {
            const auto eq = token.find('=');
            if (eq == std::string_view::npos || eq == 0)
                throw ParseError(number, fmt::format("expected key=value, got '{}'", token));
            const auto key = token.substr(0, eq);
            if (key != "n" && key != "r" && key != "kind" && key != "cyclic")
                throw ParseError(number, fmt::format("unknown header key '{}'", key));
            if (header.contains(key))
                throw ParseError(number, fmt::format("header key '{}' given twice", key));
            header.emplace(std::string(key), std::string(token.substr(eq + 1)));
            header_line.emplace(std::string(key), number);
        }
    }

    for (std::string_view key : {"n", "r", "kind"})
        if (! header.contains(key))
            throw ParseError(0, fmt::format("missing header '{}='", key));

    ColoringFile file{
        .n = parse_int(header.at("n"), header_line.at("n"), "n"),
        .colors = parse_int(header.at("r"), header_line.at("r"), "r"),
        .kind = ColoringKind::difference,
        .cyclic = false,
        .listed = {},
        .coloring = DifferenceColoring{1, {DifferenceSet{}}},
    };

    const auto & kind = header.at("kind");
    if (kind == "integer")
        file.kind = ColoringKind::integer;
    else if (kind != "difference")
        throw ParseError(header_line.at("kind"), fmt::format("kind must be 'difference' or 'integer', got '{}'", kind));

    if (const auto it = header.find("cyclic"); it != header.end()) {
        if (it->second != "0" && it->second != "1")
            throw ParseError(header_line.at("cyclic"), fmt::format("cyclic must be 0 or 1, got '{}'", it->second));
        file.cyclic = it->second == "1";
    }
    if (file.cyclic && file.kind == ColoringKind::integer)
        throw ParseError(header_line.at("cyclic"), "integer colorings cannot be cyclic");

    const int max_n = file.kind == ColoringKind::difference ? kMaxVertices : kMaxDifference;
    const int min_n = file.kind == ColoringKind::difference ? 1 : 0;
    if (file.n < min_n || file.n > max_n)
        throw ParseError(header_line.at("n"), fmt::format("n={} outside {}..{}", file.n, min_n, max_n));
    if (file.colors < 1 || file.colors > kMaxColors)
        throw ParseError(header_line.at("r"), fmt::format("r={} outside 1..{}", file.colors, kMaxColors));

    file.listed.resize(static_cast<std::size_t>(file.colors));
    for (auto & [color, entry] : classes) {
        if (color < 1 || color > file.colors)
            throw ParseError(entry.first, fmt::format("color index {} outside 1..{}", color, file.colors));
        file.listed[static_cast<std::size_t>(color - 1)] = std::move(entry.second);
    }

    try {
        if (file.kind == ColoringKind::integer)
            file.coloring = make_integer_coloring(file.n, file.listed);
        else if (file.cyclic)
            file.coloring = expand_cyclic(CyclicColoring{file.n, file.listed});
        else
            file.coloring = make_difference_coloring(file.n, file.listed);
    }
    catch (const ValidationError & e) {
        throw ParseError(0, e.what());
    }
    return file;
}

auto read_coloring_file(const std::string & path) -> ColoringFile
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error(fmt::format("cannot read {}", path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_coloring_file(buffer.str());
}

auto format_coloring_file(const DifferenceColoring & coloring) -> std::string
{
    return format_classes(coloring.vertices(), ColoringKind::difference, coloring);
}

auto format_coloring_file(const IntegerColoring & coloring) -> std::string
{
    return format_classes(coloring.top(), ColoringKind::integer, coloring);
}

auto format_results(const SearchOutcome & outcome) -> std::string
{
    std::string out = fmt::format("status={}\nvalue={}\ntargets={}\ncount={}\nkind={}\n",
        outcome.status == OutcomeStatus::exact ? "exact" : "lower_bound", outcome.value, outcome.targets.to_string(),
        outcome.orbit_count ? std::to_string(*outcome.orbit_count) : std::string("n/a"), kind_name(outcome.kind));
    for (std::size_t i = 0; i < outcome.maximal.size(); ++i) {
        out += outcome.maximal.assignment(i);
        out += '\n';
    }
    return out;
}

auto parse_results(std::string_view text) -> SearchOutcome
{
    std::vector<Line> lines;
    {
        std::size_t pos = 0;
        std::size_t number = 0;
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            lines.push_back({++number, trim(text.substr(pos, end - pos))});
            pos = end + 1;
        }
    }

    const std::array<std::string_view, 5> keys{"status", "value", "targets", "count", "kind"};
    std::array<std::string_view, 5> values{};
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i >= lines.size())
            throw ParseError(i + 1, fmt::format("missing '{}='", keys[i]));
        const auto line = lines[i].text;
        if (! line.starts_with(keys[i]) || line.size() <= keys[i].size() || line[keys[i].size()] != '=')
            throw ParseError(i + 1, fmt::format("expected '{}=...'", keys[i]));
        values[i] = line.substr(keys[i].size() + 1);
    }

    OutcomeStatus status;
    if (values[0] == "exact")
        status = OutcomeStatus::exact;
    else if (values[0] == "lower_bound")
        status = OutcomeStatus::lower_bound;
    else
        throw ParseError(1, fmt::format("unknown status '{}'", values[0]));

    const int value = parse_int(values[1], 2, "value");

    std::optional<CliqueTargets> targets;
    try {
        targets = CliqueTargets::parse(values[2]);
    }
    catch (const ValidationError & e) {
        throw ParseError(3, e.what());
    }

    std::optional<std::uint64_t> count;
    if (values[3] != "n/a") {
        std::uint64_t parsed = 0;
        const auto [ptr, ec] = std::from_chars(values[3].data(), values[3].data() + values[3].size(), parsed);
        if (ec != std::errc{} || ptr != values[3].data() + values[3].size())
            throw ParseError(4, fmt::format("bad count '{}'", values[3]));
        count = parsed;
    }

    ColoringKind kind;
    if (values[4] == "difference")
        kind = ColoringKind::difference;
    else if (values[4] == "integer")
        kind = ColoringKind::integer;
    else
        throw ParseError(5, fmt::format("unknown kind '{}'", values[4]));

    // maximal colorings sit on value-1 vertices or color {1..value-1}
    const int length = kind == ColoringKind::difference ? value - 2 : value - 1;
    if (length < 0 || length > kMaxDifference)
        throw ParseError(2, fmt::format("value {} out of range", value));
    SearchLevel level{length, targets->colors()};
    if (status == OutcomeStatus::lower_bound)
        level.mark_capped();
    for (std::size_t i = keys.size(); i < lines.size(); ++i) {
        if (lines[i].text.empty())
            continue;
        try {
            level.push_assignment(lines[i].text);
        }
        catch (const ValidationError & e) {
            throw ParseError(lines[i].number, e.what());
        }
    }

    return SearchOutcome{
        .kind = kind,
        .targets = *targets,
        .status = status,
        .value = value,
        .maximal = std::move(level),
        .orbit_count = count,
    };
}

auto VerificationReport::passed() const -> bool
{
    for (const auto & verdict : verdicts)
        if (! verdict.passed)
            return false;
    return true;
}

auto verify_coloring(const ColoringFile & file, const CliqueTargets & targets) -> VerificationReport
{
    if (targets.colors() != file.colors)
        throw ValidationError(
            fmt::format("coloring has {} colors but {} clique targets were given", file.colors, targets.colors()));

    VerificationReport report{.kind = file.kind, .n = file.n, .verdicts = {}};
    if (file.kind == ColoringKind::integer) {
        const auto & coloring = file.integer_coloring();
        for (int c = 1; c <= file.colors; ++c) {
            ColorVerdict verdict{.color = c, .target = targets.size_for(c), .passed = true, .witness = {}, .checks_agree = true};
            if (auto tuple = find_schur_tuple(coloring.color_class(c), verdict.target)) {
                verdict.passed = false;
                verdict.witness = std::move(*tuple);
            }
            report.verdicts.push_back(std::move(verdict));
        }
        return report;
    }

    const auto & coloring = file.difference_coloring();
    const auto graph = materialize(coloring);
    for (int c = 1; c <= file.colors; ++c) {
        ColorVerdict verdict{.color = c, .target = targets.size_for(c), .passed = true, .witness = {}, .checks_agree = true};
        const auto by_differences = find_clique(coloring.color_class(c), verdict.target);
        const auto by_vertices = oracle_find_mono_clique(graph, verdict.target, c);
        verdict.checks_agree = by_differences.has_value() == by_vertices.has_value();
        if (by_differences)
            verdict.witness = clique_vertices(*by_differences);
        else if (by_vertices)
            verdict.witness = *by_vertices;
        verdict.passed = ! by_differences && ! by_vertices;
        report.verdicts.push_back(std::move(verdict));
    }
    return report;
}

auto format_verification(const VerificationReport & report, const CliqueTargets & targets) -> std::string
{
    std::string out;
    for (const auto & verdict : report.verdicts) {
        if (report.kind == ColoringKind::integer) {
            out += fmt::format("color {} (Schur {}-tuple): ", verdict.color, verdict.target);
            if (verdict.passed)
                out += "ok\n";
            else
                out += fmt::format("FAIL, monochromatic Schur tuple ({})\n", fmt::join(verdict.witness, ", "));
            continue;
        }
        out += fmt::format("color {} (K_{}): ", verdict.color, verdict.target);
        if (verdict.passed)
            out += "ok\n";
        else
            out += fmt::format("FAIL, monochromatic K_{} on vertices {}{}\n", verdict.target,
                fmt::join(verdict.witness, " "), verdict.checks_agree ? "" : " (clique checks disagree)");
    }
    if (report.passed()) {
        if (report.kind == ColoringKind::integer)
            out += fmt::format("verified: S({}) > {}\n", targets.to_string(), report.n);
        else
            out += fmt::format("verified: R({}) >= {}\n", targets.to_string(), report.n + 1);
    }
    else {
        out += "verification failed\n";
    }
    return out;
}

} // namespace diffram
