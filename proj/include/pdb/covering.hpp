// covering.hpp -- covering words, Parikh-de-Bruijn (PdB) words, universal
// cycles, the length bounds that govern them, and explicit constructions.

#pragma once

#include "pdb/parikh.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pdb {

/// A word is k-covering when every order-k Parikh vector is realized by at
/// least one length-k factor, and PdB when by exactly one.
struct CoverReport
{
    std::uint64_t k = 0;
    std::size_t sigma = 0;
    Word word;
    bool is_covering = false;
    bool is_pdb = false;
    /// |word| - (C(sigma+k-1, k) + k - 1); only defined for covering words.
    std::optional<std::int64_t> excess;
    std::vector<ParikhVector> missing;
    std::vector<std::pair<ParikhVector, std::uint64_t>> duplicated;

    friend bool operator==(const CoverReport &, const CoverReport &) = default;
};

/// Largest PV(k, sigma) for which verify() keeps a dense window table.
inline constexpr std::uint64_t max_verify_vectors = std::uint64_t(1) << 26;

CoverReport verify(std::span<const Letter> word, std::uint64_t k, std::size_t sigma);

/// Cheaper predicate-only check used by the search engine and tests.
bool is_covering(std::span<const Letter> word, std::uint64_t k, std::size_t sigma);

/// { k in 1..|word| : word is k-covering }
std::set<std::uint64_t> covset(std::span<const Letter> word, std::size_t sigma);

enum class Verdict
{
    Exists,
    Impossible,
    Unknown,
};

const char *to_string(Verdict v) noexcept;

struct BoundsReport
{
    std::uint64_t k = 0;
    std::size_t sigma = 0;
    /// C(sigma+k-1, k) + k - 1, the length of any PdB word.
    std::uint64_t pdb_length = 0;
    /// sigma * ceil(C(sigma+k-1, k-1) / k): each letter must occur at least
    /// ceil(C(sigma+k-1, k-1) / k) times.
    std::uint64_t counting_bound = 0;
    std::uint64_t shortest_lower_bound = 0;
    bool pdb_possible_by_bounds = false;
    /// k divides C(sigma+k-1, k-1), necessary for a universal cycle.
    bool uc_divisibility = false;
    Verdict known_verdict = Verdict::Unknown;
    /// Which known result decided the verdict; empty for Unknown.
    std::string verdict_source;

    friend bool operator==(const BoundsReport &, const BoundsReport &) = default;
};

/// Minimum number of occurrences of each letter in a k-covering word.
std::uint64_t letter_lower_bound(std::uint64_t k, std::size_t sigma);

BoundsReport bounds(std::uint64_t k, std::size_t sigma);

/// True iff |word| = C(sigma+k-1, k) and the cyclic length-k windows realize
/// every order-k vector exactly once.
bool is_universal_cycle(std::span<const Letter> word, std::uint64_t k, std::size_t sigma);

/// word followed by its first k-1 letters (read cyclically).
Word wrap_cycle(std::span<const Letter> word, std::uint64_t k);

enum class Family
{
    /// a^k b^k, PdB for sigma = 2.
    BinaryPdb,
    /// Shortest 2-covering word from an Eulerian walk on K_sigma plus loops.
    K2Eulerian,
    /// k-covering word avoiding the order-(k-1) vector (k-3, 1, 1, 0, ...).
    KCoverNotK1,
};

const char *to_string(Family f) noexcept;
Family parse_family(std::string_view name);

/// Builds the word and self-checks its defining property; throws
/// UnsupportedError for (k, sigma) outside the family's range and
/// InternalError if the self-check fails.
Word construct_family(Family family, std::uint64_t k, std::size_t sigma);

/// Order-(k-1) vector avoided by KCoverNotK1.
ParikhVector avoided_vector(std::uint64_t k, std::size_t sigma);

struct MincovEstimate
{
    std::uint64_t k = 0;
    std::size_t sigma = 0;
    /// min |Pi_{k-1}(w)| over the covering words examined ...
    std::uint64_t numerator = 0;
    /// ... divided by |PV(k-1, sigma)|.
    std::uint64_t denominator = 0;
    /// Word attaining the minimum.
    Word witness;
    /// Number of covering words examined.
    std::uint64_t words_examined = 0;
    /// Longest length exhaustively enumerated.
    std::uint64_t enumerated_up_to = 0;
    /// False only when the value is known exactly (sigma <= 2 or k <= 3,
    /// where every k-covering word is (k-1)-covering).
    bool estimate_only = true;
    /// Set when the search hit its node budget before finishing max_len.
    bool budget_exhausted = false;

    double value() const { return denominator ? double(numerator) / double(denominator) : 0.0; }
};

/// Minimum fraction of order-(k-1) vectors realized by k-covering words,
/// over every covering word of length <= max_len (plus the KCoverNotK1
/// construction when it applies). Requires k >= 2.
MincovEstimate mincov_explore(std::uint64_t k, std::size_t sigma, std::uint64_t max_len,
                              unsigned workers = 1,
                              std::optional<std::uint64_t> node_budget = std::nullopt);

} // namespace pdb
