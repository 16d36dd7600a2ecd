// realize.hpp -- realizability of Parikh-vector sets: a set of order-k
// vectors is Pi_k of some word iff it induces a connected subgraph of the
// grid.

#pragma once

#include "pdb/parikh.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pdb {

struct RealizabilityResult
{
    bool realizable = false;
    /// Word w with Pi_k(w) equal to the input set.
    std::optional<Word> witness;
    /// Two distinct connected components, when not realizable.
    std::optional<std::pair<std::vector<ParikhVector>, std::vector<ParikhVector>>> refutation;

    friend bool operator==(const RealizabilityResult &, const RealizabilityResult &) = default;
};

/// Connected components of the subgraph of H(k, sigma) induced by `set`,
/// each sorted canonically, ordered by their smallest member.
std::vector<std::vector<ParikhVector>> induced_components(std::span<const ParikhVector> set);

/// Bowfree walk covering a connected set: depth-first traversal from the
/// smallest member, returning along tree edges (length <= 2|set| - 1).
std::vector<ParikhVector> covering_itinerary(std::span<const ParikhVector> set);

/// Throws InvalidInput on an empty set or mixed orders / alphabet sizes.
/// The witness is checked against a fresh Parikh-set computation before
/// being returned.
RealizabilityResult is_realizable_set(std::span<const ParikhVector> set);

/// a_i t a_j for q = p - e_i + e_j, with t the canonical word of meet(p, q).
/// Throws InvalidInput when p and q are not neighbors.
Word realizable_pair_witness(const ParikhVector &p, const ParikhVector &q);

} // namespace pdb
