#include <diffram/coloring_file.hpp>
#include <diffram/errors.hpp>
#include <diffram/report.hpp>

#include <doctest.h>

using namespace diffram;

namespace {

auto contains(const std::string & text, const std::string & part) -> bool
{
    return text.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("markdown report for an exact value")
{
    const auto text = render_report(search(CliqueTargets{{3, 3}}), ReportFormat::markdown);
    CHECK(contains(text, "# Lower bound for R(3,3)"));
    CHECK(contains(text, "D(3,3) = 6, so R(3,3) \u2265 6."));
    CHECK(contains(text, "There is 1 maximal difference graph on 5 vertices"));
    CHECK(contains(text, "```\nn=5\nr=2\nkind=difference\ncyclic=0\n1: 1 4\n2: 2 3\n```"));
    CHECK(contains(text, "color 1 (K_3): ok"));
    CHECK(contains(text, "verified: R(3,3) >= 6"));
}

TEST_CASE("report for a lower bound")
{
    const auto file = read_coloring_file(std::string(DIFFRAM_TEST_DATA) + "/ramsey_336_cyclic59.col");
    SearchOutcome outcome{
        .kind = ColoringKind::difference,
        .targets = CliqueTargets{{3, 3, 6}},
        .status = OutcomeStatus::lower_bound,
        .value = 60,
        .maximal = SearchLevel{58, 3},
        .orbit_count = std::nullopt,
    };
    outcome.maximal.push_assignment(file.difference_coloring().assignment_string());

    const auto text = render_report(outcome, ReportFormat::markdown);
    CHECK(contains(text, "D(3,3,6) \u2265 60 (lower bound), so R(3,3,6) \u2265 60."));
    CHECK(contains(text, "no count of maximal colorings"));
    CHECK(contains(text, "no monochromatic K_6 in color 3"));
}

TEST_CASE("Issai report")
{
    const auto text = render_report(issai_search(CliqueTargets{{3, 4}}), ReportFormat::markdown);
    CHECK(contains(text, "# Issai number S(3,4)"));
    CHECK(contains(text, "**Result.** S(3,4) = 7."));
    CHECK(contains(text, "kind=integer"));
    CHECK(contains(text, "verified: S(3,4) > 6"));
}

TEST_CASE("LaTeX report")
{
    const auto text = render_report(search(CliqueTargets{{3, 4}}), ReportFormat::latex);
    CHECK(text.starts_with("\\documentclass{article}"));
    CHECK(contains(text, "$D(3,4) = 9$, so $R(3,4) \\geq 9$"));
    CHECK(contains(text, "\\begin{verbatim}\nn=8\n"));
    CHECK(text.ends_with("\\end{document}\n"));
}

TEST_CASE("report errors and determinism")
{
    SearchOutcome empty{
        .kind = ColoringKind::difference,
        .targets = CliqueTargets{{3, 3}},
        .status = OutcomeStatus::lower_bound,
        .value = 2,
        .maximal = SearchLevel{1, 2},
        .orbit_count = std::nullopt,
    };
    CHECK_THROWS_AS(render_report(empty, ReportFormat::markdown), std::logic_error);

    // a witness with a red triangle
    empty.maximal = SearchLevel{5, 2};
    empty.maximal.push_assignment("22121");
    empty.value = 7;
    CHECK_THROWS_AS(render_report(empty, ReportFormat::markdown), std::logic_error);

    const auto outcome = search(CliqueTargets{{3, 5}});
    CHECK(render_report(outcome, ReportFormat::markdown) == render_report(search(CliqueTargets{{3, 5}}), ReportFormat::markdown));
    CHECK(parse_report_format("tex") == ReportFormat::latex);
    CHECK_THROWS_AS(parse_report_format("html"), ValidationError);
}
