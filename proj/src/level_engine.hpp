#pragma once

#include <diffram/errors.hpp>
#include <diffram/search.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace diffram::detail {

// Children of every member of `level` obtained by giving item length()+1
// each color in turn, dropping those for which kills(class, item, color)
// holds. Parents are split into contiguous chunks and the chunk outputs are
// concatenated in order, so a canonically ordered level yields a canonically
// ordered child level for any worker count.
template <class Kills>
auto extend_with(const SearchLevel & level, const SearchOptions & options, Kills kills) -> SearchLevel
{
    const int colors = level.colors();
    const auto stride = static_cast<std::size_t>(colors);
    const int item = level.length() + 1;
    if (item > kMaxDifference)
        throw MemoryBudgetError(fmt::format("cannot extend past {} items", kMaxDifference));

    const std::size_t budget =
        std::max<std::size_t>(1, options.memory_budget_bytes / (stride * sizeof(DifferenceSet)));
    const std::size_t parents = level.size();
    const auto workers = static_cast<std::size_t>(
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.parallelism, 1)), 1, std::max<std::size_t>(parents, 1)));

    std::vector<std::vector<DifferenceSet>> parts(workers);
    std::atomic<std::size_t> produced{0};
    std::atomic<bool> over_budget{false};

    auto work = [&](std::size_t worker) {
        const std::size_t first = parents * worker / workers;
        const std::size_t last = parents * (worker + 1) / workers;
        auto & out = parts[worker];
        std::size_t count = 0;
        for (std::size_t i = first; i < last; ++i) {
            if (over_budget.load(std::memory_order_relaxed))
                return;
            const auto parent = level.classes_of(i);
            for (int c = 0; c < colors; ++c) {
                if (kills(parent[static_cast<std::size_t>(c)], item, c + 1))
                    continue;
                out.insert(out.end(), parent.begin(), parent.end());
                out[out.size() - stride + static_cast<std::size_t>(c)].insert(item);
                ++count;
                if (options.beam_cap) {
                    // later children of this chunk sort after these
                    if (count > *options.beam_cap)
                        return;
                }
                else if (produced.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
                    over_budget = true;
                    return;
                }
            }
        }
    };

    if (workers == 1) {
        work(0);
    }
    else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
    }

    if (over_budget)
        throw MemoryBudgetError(fmt::format(
            "level {} exceeds the memory budget of {} colorings ({} bytes); rerun with a beam cap (--beam N)",
            item + 1, budget, options.memory_budget_bytes));

    SearchLevel child{item, colors};
    if (level.capped())
        child.mark_capped();
    auto & storage = child.storage();
    if (workers == 1) {
        storage = std::move(parts[0]);
    }
    else {
        std::size_t total = 0;
        for (const auto & part : parts)
            total += part.size();
        storage.reserve(total);
        for (auto & part : parts) {
            storage.insert(storage.end(), part.begin(), part.end());
            std::vector<DifferenceSet>{}.swap(part);
        }
    }

    if (options.beam_cap && child.size() > *options.beam_cap) {
        child.truncate(*options.beam_cap);
        child.mark_capped();
    }
    storage.shrink_to_fit();
    return child;
}

} // namespace diffram::detail
