#include <diffram/coloring_file.hpp>
#include <diffram/errors.hpp>
#include <diffram/issai.hpp>
#include <diffram/report.hpp>
#include <diffram/search.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace diffram;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchArgs {
    std::string targets;
    std::optional<std::size_t> beam;
    std::optional<std::string> checkpoint;
    std::optional<std::string> resume;
    bool all_maximal = false;
    std::optional<std::string> out;
    int jobs = 1;
    std::size_t memory_mb = 1024;
    bool verbose = false;
};

struct VerifyArgs {
    std::string file;
    std::string targets;
};

struct ReportArgs {
    std::optional<std::string> results;
    std::optional<std::string> coloring;
    std::optional<std::string> targets;
    std::string format = "markdown";
    std::optional<std::string> out;
    int jobs = 1;
};

auto slurp(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error(fmt::format("cannot read {}", path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (! out)
        throw std::runtime_error(fmt::format("cannot write {}", path));
}

auto options_from(const SearchArgs & args) -> SearchOptions
{
    if (args.jobs < 1)
        throw UsageError("--jobs must be at least 1");
    if (args.beam && *args.beam == 0)
        throw UsageError("--beam must be at least 1");
    SearchOptions options;
    options.beam_cap = args.beam;
    options.parallelism = args.jobs;
    options.memory_budget_bytes = args.memory_mb << 20;
    if (args.checkpoint)
        options.checkpoint_path = *args.checkpoint;
    if (args.verbose) {
        options.on_level = [start = std::chrono::steady_clock::now()](const SearchLevel & level) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            fmt::print(stderr, "[{:8.2f}s] length {:3}: {} colorings{}\n", elapsed.count(), level.length(),
                level.size(), level.capped() ? " (capped)" : "");
        };
    }
    return options;
}

void print_outcome(const SearchOutcome & outcome, bool all_maximal)
{
    const char letter = outcome.kind == ColoringKind::difference ? 'D' : 'S';
    const auto noun = outcome.kind == ColoringKind::difference ? "maximal graphs" : "maximal colorings";
    if (outcome.status == OutcomeStatus::exact)
        fmt::print("{}({}) = {} (exact), {}: {}\n", letter, outcome.targets.to_string(), outcome.value, noun,
            outcome.orbit_count.value_or(outcome.maximal.size()));
    else
        fmt::print("{}({}) >= {} (capped)\n", letter, outcome.targets.to_string(), outcome.value);
    if (all_maximal)
        for (std::size_t i = 0; i < outcome.maximal.size(); ++i)
            fmt::print("{}\n", outcome.maximal.assignment(i));
}

auto run_search(const SearchArgs & args) -> int
{
    if (args.targets.empty() && ! args.resume)
        throw UsageError("search needs --targets or --resume");
    auto options = options_from(args);

    SearchOutcome outcome = [&] {
        if (args.resume) {
            auto checkpoint = checkpoint_read(*args.resume);
            if (! args.targets.empty() && ! (CliqueTargets::parse(args.targets) == checkpoint.targets))
                throw UsageError(fmt::format("--targets {} does not match checkpoint targets {}", args.targets,
                    checkpoint.targets.to_string()));
            return search_from(std::move(checkpoint.level), checkpoint.targets, options);
        }
        return search(CliqueTargets::parse(args.targets), options);
    }();

    print_outcome(outcome, args.all_maximal);
    if (args.out)
        write_file(*args.out, format_results(outcome));
    return exit_ok;
}

auto run_issai(const SearchArgs & args) -> int
{
    if (args.targets.empty())
        throw UsageError("issai needs --targets");
    const auto outcome = issai_search(CliqueTargets::parse(args.targets), options_from(args));
    print_outcome(outcome, args.all_maximal);
    if (args.out)
        write_file(*args.out, format_results(outcome));
    return exit_ok;
}

auto run_verify(const VerifyArgs & args) -> int
{
    const auto file = read_coloring_file(args.file);
    const auto targets = CliqueTargets::parse(args.targets);
    const auto report = verify_coloring(file, targets);
    fmt::print("{}", format_verification(report, targets));
    return report.passed() ? exit_ok : exit_failed;
}

auto run_report(const ReportArgs & args) -> int
{
    const int sources = (args.results ? 1 : 0) + (args.coloring ? 1 : 0);
    if (sources > 1)
        throw UsageError("give at most one of --results and --coloring");
    if (sources == 0 && ! args.targets)
        throw UsageError("report needs --results, --coloring with --targets, or --targets");
    if (args.results && args.targets)
        throw UsageError("--targets is read from the results file");
    const auto format = parse_report_format(args.format);

    std::optional<SearchOutcome> outcome;
    if (args.results) {
        outcome = parse_results(slurp(*args.results));
    }
    else if (args.coloring) {
        if (! args.targets)
            throw UsageError("--coloring needs --targets");
        const auto targets = CliqueTargets::parse(*args.targets);
        const auto file = read_coloring_file(*args.coloring);
        const auto report = verify_coloring(file, targets);
        if (! report.passed()) {
            fmt::print(stderr, "{}", format_verification(report, targets));
            return exit_failed;
        }
        const bool difference = file.kind == ColoringKind::difference;
        SearchLevel level{difference ? file.n - 1 : file.n, file.colors};
        level.mark_capped();
        level.push_assignment(difference ? file.difference_coloring().assignment_string()
                                         : file.integer_coloring().assignment_string());
        outcome = SearchOutcome{
            .kind = file.kind,
            .targets = targets,
            .status = OutcomeStatus::lower_bound,
            .value = file.n + 1,
            .maximal = std::move(level),
            .orbit_count = std::nullopt,
        };
    }
    else {
        SearchOptions options;
        options.parallelism = std::max(args.jobs, 1);
        outcome = search(CliqueTargets::parse(*args.targets), options);
    }

    const auto document = render_report(*outcome, format);
    if (args.out)
        write_file(*args.out, document);
    else
        fmt::print("{}", document);
    return exit_ok;
}

void add_search_flags(CLI::App & cmd, SearchArgs & args, bool difference)
{
    cmd.add_option("--targets", args.targets, "Clique (or tuple) sizes per color, e.g. 3,3,6");
    cmd.add_option("--beam", args.beam, "Keep at most N lexicographically smallest colorings per level");
    cmd.add_flag("--all-maximal", args.all_maximal, "Print every maximal coloring as an assignment string");
    cmd.add_option("--out", args.out, "Write a results file for later use by `report`");
    cmd.add_option("--jobs", args.jobs, "Worker threads for level extension")->capture_default_str();
    cmd.add_option("--memory-mb", args.memory_mb, "Per-level memory budget without --beam")->capture_default_str();
    cmd.add_flag("-v,--verbose", args.verbose, "Print level sizes to stderr");
    if (difference) {
        cmd.add_option("--checkpoint", args.checkpoint, "Rewrite this checkpoint file after every level");
        cmd.add_option("--resume", args.resume, "Continue from a checkpoint file");
    }
}

} // namespace

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Difference Ramsey numbers and Issai numbers by level-by-level search"};
    app.require_subcommand(1);

    SearchArgs search_args;
    auto * search_cmd = app.add_subcommand("search", "Compute D(k1,...,kr) and its maximal difference graphs");
    add_search_flags(*search_cmd, search_args, true);

    SearchArgs issai_args;
    auto * issai_cmd = app.add_subcommand("issai", "Compute the Issai number S(k1,...,kr)");
    add_search_flags(*issai_cmd, issai_args, false);

    VerifyArgs verify_args;
    auto * verify_cmd = app.add_subcommand("verify", "Check a coloring file against clique or tuple targets");
    verify_cmd->add_option("file", verify_args.file, "Coloring file")->required();
    verify_cmd->add_option("--targets", verify_args.targets, "Sizes per color")->required();

    ReportArgs report_args;
    auto * report_cmd = app.add_subcommand("report", "Write a Markdown or LaTeX report of a bound");
    report_cmd->add_option("--results", report_args.results, "Results file written by search/issai --out");
    report_cmd->add_option("--coloring", report_args.coloring, "Coloring file to certify (needs --targets)");
    report_cmd->add_option("--targets", report_args.targets, "Targets; alone, runs the search first");
    report_cmd->add_option("--format", report_args.format, "markdown or latex")->capture_default_str();
    report_cmd->add_option("--out", report_args.out, "Write the document here instead of stdout");
    report_cmd->add_option("--jobs", report_args.jobs, "Worker threads when searching")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*search_cmd)
            return run_search(search_args);
        if (*issai_cmd)
            return run_issai(issai_args);
        if (*verify_cmd)
            return run_verify(verify_args);
        return run_report(report_args);
    }
    catch (const UsageError & e) {
        fmt::print(stderr, "usage error: {}\n", e.what());
        return exit_usage;
    }
    catch (const ParseError & e) {
        fmt::print(stderr, "parse error: {}\n", e.what());
        return exit_usage;
    }
    catch (const ValidationError & e) {
        fmt::print(stderr, "invalid input: {}\n", e.what());
        return exit_usage;
    }
    catch (const MemoryBudgetError & e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return exit_failed;
    }
    catch (const std::exception & e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return exit_failed;
    }
}
