#pragma once

#include <diffram/search.hpp>

#include <string>
#include <string_view>

namespace diffram {

enum class ReportFormat {
    markdown,
    latex
};

auto parse_report_format(std::string_view name) -> ReportFormat;

// Self-contained document stating the bound, the first maximal coloring in
// coloring-file form, and the result of re-verifying it. Deterministic for a
// fixed outcome. Throws std::logic_error if the outcome has no maximal coloring
// or the witness fails verification.
auto render_report(const SearchOutcome & outcome, ReportFormat format) -> std::string;

} // namespace diffram
