// search.hpp -- exhaustive backtracking search for shortest covering words
// and PdB words.
//
// Words are extended letter by letter. Letters must first appear in
// alphabet order, which loses no solution up to relabeling. The tree below a
// fixed split depth is cut into independent prefix tasks; a witness is the
// lexicographically smallest word of the smallest feasible length, so the
// result does not depend on the number of workers.

#pragma once

#include "pdb/parikh.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace pdb {

inline constexpr std::uint64_t default_node_budget = 100'000'000;
inline constexpr std::uint64_t default_checkpoint_interval = 10'000'000;

/// Largest PV(k, sigma) the engine accepts (dense distance table).
inline constexpr std::uint64_t max_search_vectors = 4096;

enum class Target
{
    /// Iterative deepening from the lower bound until a covering word exists.
    ShortestCovering,
    /// Words of length C(sigma+k-1, k) + k - 1 without repeated windows.
    PdbOnly,
    /// A covering word of exactly the configured length.
    ExistenceAtLength,
};

const char *to_string(Target t) noexcept;

/// Each rule can be disabled on its own; none of them changes the result.
struct PruneRules
{
    /// PdB targets: reject a prefix whose newest window repeats a vector.
    bool duplicate_window = true;
    /// Reject when fewer windows remain than vectors are uncovered.
    bool unreachable_vectors = true;
    /// Reject when the letters still to be placed cannot lift every letter
    /// to its minimum occurrence count.
    bool letter_budget = true;
    /// Reject when some uncovered vector is farther from the current window
    /// (in grid distance) than the remaining number of shifts.
    bool distance = true;

    friend bool operator==(const PruneRules &, const PruneRules &) = default;
};

struct Progress
{
    std::uint64_t length = 0;
    std::uint64_t nodes = 0;
    std::uint64_t max_depth = 0;
};

struct SearchConfig
{
    std::uint64_t k = 0;
    std::size_t sigma = 0;
    Target target = Target::ShortestCovering;
    /// Required for ExistenceAtLength.
    std::optional<std::uint64_t> length;
    std::optional<std::uint64_t> max_len;
    unsigned workers = 1;
    std::optional<std::uint64_t> node_budget = default_node_budget;
    /// Prefix length at which the tree is split into tasks; default k + 2.
    std::optional<std::size_t> split_depth;
    PruneRules prunes;
    std::uint64_t checkpoint_interval = default_checkpoint_interval;
    std::function<void(const Progress &)> on_progress;
};

enum class SearchStatus
{
    Found,
    RefutedUpTo,
    BudgetExhausted,
};

const char *to_string(SearchStatus s) noexcept;

struct SearchStats
{
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;
    std::uint64_t max_depth = 0;

    friend bool operator==(const SearchStats &, const SearchStats &) = default;
};

struct SearchOutcome
{
    std::uint64_t k = 0;
    std::size_t sigma = 0;
    SearchStatus status = SearchStatus::RefutedUpTo;
    /// Every length <= this value was excluded (exhaustively or by bound).
    std::optional<std::uint64_t> refuted_up_to;
    std::optional<Word> witness;
    /// Every length below |witness| from the lower bound up was refuted.
    bool minimal = false;
    SearchStats stats;

    friend bool operator==(const SearchOutcome &, const SearchOutcome &) = default;
};

/// Dispatches on cfg.target. Throws InvalidInput / CapacityError on bad
/// parameters; budget exhaustion is reported in the status.
SearchOutcome search(const SearchConfig &cfg);

SearchOutcome search_shortest_covering(SearchConfig cfg);
SearchOutcome search_pdb_existence(std::uint64_t k, std::size_t sigma, SearchConfig cfg = {});

/// Calls `visit` for every word of exactly `length` letters satisfying the
/// target predicate (covering, or PdB when pdb_only), one per relabeling
/// class, in lexicographic order. Returns false if the budget ran out.
bool enumerate_words(const SearchConfig &cfg, std::uint64_t length, bool pdb_only,
                     const std::function<void(const Word &)> &visit,
                     SearchStats *stats = nullptr);

/// Lexicographic minimum over reversal and all letter relabelings.
Word canonical_form(std::span<const Letter> word);

/// Enumeration gate for enumerate_all_pdb: |PV(k, sigma)| <= 20.
inline constexpr std::uint64_t enumerate_pdb_gate = 20;

/// Every PdB word up to reversal and relabeling, as sorted canonical forms.
/// Throws CapacityError above the gate unless `force`.
std::vector<Word> enumerate_all_pdb(std::uint64_t k, std::size_t sigma, bool force = false,
                                    unsigned workers = 1);

} // namespace pdb
