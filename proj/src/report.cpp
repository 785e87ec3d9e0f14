#include <diffram/coloring_file.hpp>
#include <diffram/errors.hpp>
#include <diffram/issai.hpp>
#include <diffram/report.hpp>

#include <fmt/format.h>

#include <stdexcept>

namespace diffram {

auto parse_report_format(std::string_view name) -> ReportFormat
{
    if (name == "markdown" || name == "md")
        return ReportFormat::markdown;
    if (name == "latex" || name == "tex")
        return ReportFormat::latex;
    throw ValidationError(fmt::format("unknown report format '{}' (markdown or latex)", name));
}

namespace {
    struct ReportFacts {
        bool difference;
        bool exact;
        std::string targets;
        int value;
        int witness_size;
        std::size_t colorings;
        std::optional<std::uint64_t> orbits;
        std::vector<int> sizes;
        std::string witness_file;
        std::string verifier_output;
    };

    auto gather(const SearchOutcome & outcome) -> ReportFacts
    {
        if (outcome.maximal.empty())
            throw std::logic_error("outcome has no maximal coloring to report");

        ReportFacts facts{
            .difference = outcome.kind == ColoringKind::difference,
            .exact = outcome.status == OutcomeStatus::exact,
            .targets = outcome.targets.to_string(),
            .value = outcome.value,
            .witness_size = outcome.value - 1,
            .colorings = outcome.maximal.size(),
            .orbits = outcome.orbit_count,
            .sizes = outcome.targets.sizes(),
            .witness_file = {},
            .verifier_output = {},
        };

        if (facts.difference)
            facts.witness_file = format_coloring_file(outcome.maximal.coloring(0));
        else
            facts.witness_file =
                format_coloring_file(IntegerColoring::from_assignment(outcome.maximal.assignment(0), outcome.targets.colors()));

        const auto report = verify_coloring(parse_coloring_file(facts.witness_file), outcome.targets);
        if (! report.passed())
            throw std::logic_error("reported witness fails verification:\n" + format_verification(report, outcome.targets));
        facts.verifier_output = format_verification(report, outcome.targets);
        return facts;
    }

    auto avoided_list(const ReportFacts & facts, bool latex) -> std::string
    {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < facts.sizes.size(); ++i) {
            if (facts.difference)
                parts.push_back(latex ? fmt::format("no monochromatic $K_{{{}}}$ in color {}", facts.sizes[i], i + 1)
                                      : fmt::format("no monochromatic K_{} in color {}", facts.sizes[i], i + 1));
            else
                parts.push_back(fmt::format("no monochromatic Schur {}-tuple in color {}", facts.sizes[i], i + 1));
        }
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0)
                out += i + 1 == parts.size() ? (parts.size() > 2 ? ", and " : " and ") : ", ";
            out += parts[i];
        }
        return out;
    }

    auto count_sentence(const ReportFacts & facts) -> std::string
    {
        const auto noun = facts.difference ? "maximal difference graph" : "maximal coloring";
        const auto where = facts.difference ? fmt::format("on {} vertices", facts.witness_size)
                                            : fmt::format("of {{1, ..., {}}}", facts.witness_size);
        if (facts.exact && facts.orbits)
            return fmt::format("There {} {} {}{} {} up to target-preserving color permutations ({} coloring{} in total).",
                *facts.orbits == 1 ? "is" : "are", *facts.orbits, noun, *facts.orbits == 1 ? "" : "s", where,
                facts.colorings, facts.colorings == 1 ? "" : "s");
        return "This is a lower bound certified by the witness below; the colorings it came from were not "
               "searched exhaustively, so no count of maximal colorings is given.";
    }

    auto markdown(const ReportFacts & f) -> std::string
    {
        std::string out;
        if (f.difference) {
            out += fmt::format("# Lower bound for R({})\n\n", f.targets);
            if (f.exact)
                out += fmt::format("**Result.** D({}) = {}, so R({}) \u2265 {}.\n\n", f.targets, f.value, f.targets, f.value);
            else
                out += fmt::format("**Result.** D({}) \u2265 {} (lower bound), so R({}) \u2265 {}.\n\n", f.targets, f.value,
                    f.targets, f.value);
            if (f.exact)
                out += "The value comes from an exhaustive level-by-level enumeration of difference colorings. ";
        }
        else {
            out += fmt::format("# Issai number S({})\n\n", f.targets);
            if (f.exact)
                out += fmt::format("**Result.** S({}) = {}.\n\n", f.targets, f.value);
            else
                out += fmt::format("**Result.** S({}) \u2265 {} (lower bound).\n\n", f.targets, f.value);
            if (f.exact)
                out += "The value comes from an exhaustive enumeration of integer colorings. ";
        }
        out += count_sentence(f) + "\n\n";

        out += "## Witness\n\n";
        if (f.difference)
            out += fmt::format("Difference coloring of K_{} (edge {{i, j}} takes the color of |i - j|) with {}:\n\n",
                f.witness_size, avoided_list(f, false));
        else
            out += fmt::format("Coloring of {{1, ..., {}}} with {}:\n\n", f.witness_size, avoided_list(f, false));
        out += "```\n" + f.witness_file + "```\n\n";

        out += "## Verification\n\n";
        if (f.difference)
            out += "Every color class of the witness was re-checked twice: with the difference-set clique test and "
                   "with a direct search over vertex subsets of the explicit graph. Neither finds a forbidden clique.\n\n";
        else
            out += "Every color class of the witness was searched for Schur tuples of its target size. None was found.\n\n";
        out += "```\n" + f.verifier_output + "```\n";
        return out;
    }

    auto latex(const ReportFacts & f) -> std::string
    {
        std::string out = "\\documentclass{article}\n\\begin{document}\n\n";
        if (f.difference) {
            out += fmt::format("\\section*{{Lower bound for $R({})$}}\n\n", f.targets);
            if (f.exact)
                out += fmt::format("\\textbf{{Result.}} $D({}) = {}$, so $R({}) \\geq {}$.\n\n", f.targets, f.value,
                    f.targets, f.value);
            else
                out += fmt::format("\\textbf{{Result.}} $D({}) \\geq {}$ (lower bound), so $R({}) \\geq {}$.\n\n",
                    f.targets, f.value, f.targets, f.value);
            if (f.exact)
                out += "The value comes from an exhaustive level-by-level enumeration of difference colorings. ";
        }
        else {
            out += fmt::format("\\section*{{Issai number $S({})$}}\n\n", f.targets);
            if (f.exact)
                out += fmt::format("\\textbf{{Result.}} $S({}) = {}$.\n\n", f.targets, f.value);
            else
                out += fmt::format("\\textbf{{Result.}} $S({}) \\geq {}$ (lower bound).\n\n", f.targets, f.value);
            if (f.exact)
                out += "The value comes from an exhaustive enumeration of integer colorings. ";
        }
        auto counts = count_sentence(f);
        for (std::size_t pos = 0; (pos = counts.find('{', pos)) != std::string::npos; pos += 2)
            counts.replace(pos, 1, "\\{");
        for (std::size_t pos = 0; (pos = counts.find('}', pos)) != std::string::npos; pos += 2)
            counts.replace(pos, 1, "\\}");
        out += counts + "\n\n";

        out += "\\subsection*{Witness}\n\n";
        if (f.difference)
            out += fmt::format("Difference coloring of $K_{{{}}}$ (edge $\\{{i, j\\}}$ takes the color of $|i - j|$) "
                               "with {}:\n\n",
                f.witness_size, avoided_list(f, true));
        else
            out += fmt::format("Coloring of $\\{{1, \\ldots, {}\\}}$ with {}:\n\n", f.witness_size, avoided_list(f, true));
        out += "\\begin{verbatim}\n" + f.witness_file + "\\end{verbatim}\n\n";

        out += "\\subsection*{Verification}\n\n";
        if (f.difference)
            out += "Every color class of the witness was re-checked twice: with the difference-set clique test and "
                   "with a direct search over vertex subsets of the explicit graph. Neither finds a forbidden clique.\n\n";
        else
            out += "Every color class of the witness was searched for Schur tuples of its target size. None was found.\n\n";
        out += "\\begin{verbatim}\n" + f.verifier_output + "\\end{verbatim}\n\n\\end{document}\n";
        return out;
    }
}

auto render_report(const SearchOutcome & outcome, ReportFormat format) -> std::string
{
    const auto facts = gather(outcome);
    return format == ReportFormat::markdown ? markdown(facts) : latex(facts);
}

} // namespace diffram
