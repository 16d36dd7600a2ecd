// walks.hpp -- strings as walks in the directed grid G(k, sigma): the walk of
// a word, realizability of a vertex sequence, spelling and itineraries.

#pragma once

#include "pdb/grid.hpp"
#include "pdb/parikh.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pdb {

/// A vertex sequence in G(k, sigma), optionally with the label of each step.
struct Walk
{
    std::uint64_t k = 0;
    std::vector<ParikhVector> vertices;
    std::optional<std::vector<EdgeLabel>> labels;

    std::size_t sigma() const { return vertices.empty() ? 0 : vertices.front().sigma(); }

    friend bool operator==(const Walk &, const Walk &) = default;
};

/// Walk spelling `word`: one vertex per length-k window, step i labeled
/// (w_i, w_{i+k}). Throws InvalidInput if |word| < k or k == 0.
Walk walk_of(std::span<const Letter> word, std::uint64_t k, std::size_t sigma);

enum class WalkDefect
{
    None,
    /// Consecutive vertices are neither equal nor neighbors.
    NotAWalk,
    /// Letters forced by different steps disagree.
    Inconsistent,
};

struct WalkRealization
{
    bool realizable = false;
    /// Lexicographically smallest spelled word, when realizable.
    std::optional<Word> word;
    std::optional<std::vector<EdgeLabel>> labels;

    WalkDefect defect = WalkDefect::None;
    /// First step s such that the prefix (p_0 .. p_{s+1}) spells nothing.
    std::size_t failing_step = 0;
    /// Index of the violated constraint: the in-letter of step c must leave
    /// the window at step c + k; c = 0 also covers the first window's content.
    std::size_t constraint = 0;
};

/// Decides whether the vertex sequence of `walk` spells some word (labels,
/// if present, are ignored). Throws InvalidInput on an empty walk or
/// vertices of the wrong order.
WalkRealization is_realizable_walk(const Walk &walk);

/// A word spelled by `walk`. With labels, the word also reproduces the labels
/// exactly; without, it is the lexicographically smallest spelled word.
/// Throws RealizabilityError carrying the violated constraint otherwise.
Word spell(const Walk &walk);

/// Consecutive duplicates removed.
std::vector<ParikhVector> itinerary(std::span<const ParikhVector> vertices);

/// A word whose walk has exactly the given bowfree itinerary. Starts from
/// the canonical word of the first vertex and extends by repeating letters
/// from k positions back up to the earliest occurrence of the outgoing
/// letter in the last window, then appends the incoming letter. Throws InvalidInput when two
/// consecutive vertices are not neighbors.
Word string_from_itinerary(std::span<const ParikhVector> path, std::uint64_t k);

/// The (k+1)- and (k-1)-order vectors touched by step i of a labeled walk:
/// the full window w_i..w_{i+k} and the overlap w_{i+1}..w_{i+k-1}.
struct StepIncidence
{
    ParikhVector upper;
    ParikhVector lower;
};

std::vector<StepIncidence> step_incidences(const Walk &walk);

struct BowfreeReport
{
    /// False when the walk uses a bow; the checks are then vacuous.
    bool applicable = false;
    /// w_i != w_{i+k} at every step.
    bool distinct_exchange = true;
    /// p_i = k e_j implies (p_{i+k})_j = 0.
    bool opposite_face = true;
    /// First failing step, if any.
    std::optional<std::size_t> counterexample;

    bool passed() const noexcept { return distinct_exchange && opposite_face; }
};

BowfreeReport check_bowfree_consequences(std::span<const Letter> word, std::uint64_t k,
                                         std::size_t sigma);

} // namespace pdb
