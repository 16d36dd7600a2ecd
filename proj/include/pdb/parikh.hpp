// parikh.hpp -- Parikh vectors, their canonical enumeration and ranking,
// and sliding-window Parikh sets of words.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdb {

using Count = std::uint32_t;
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Largest alphabet accepted anywhere in the library.
inline constexpr std::size_t max_alphabet_size = 4096;

/// An ordered alphabet of `size` letters. Letters are the indices
/// 0..size-1; textual rendering is a, b, c, ... for up to 26 letters and
/// comma-separated indices beyond that.
class Alphabet
{
public:
    explicit Alphabet(std::size_t size);

    std::size_t size() const noexcept { return _size; }

    /// True if words render as contiguous lowercase letters.
    bool is_lettered() const noexcept { return _size <= 26; }

    std::string render(Letter letter) const;
    std::string render(std::span<const Letter> word) const;

    /// Parses a word in this alphabet's rendering.
    /// Throws InvalidInput on any symbol outside the alphabet.
    Word parse(std::string_view text) const;

    /// Parses a single letter ("c" or "2").
    Letter parse_letter(std::string_view text) const;

private:
    std::size_t _size;
};

/// A vector of letter multiplicities. The order (sum of counts) is cached.
class ParikhVector
{
public:
    ParikhVector() = default;
    explicit ParikhVector(std::vector<Count> counts);

    static ParikhVector zero(std::size_t sigma);
    static ParikhVector unit(std::size_t sigma, std::size_t i);

    std::size_t sigma() const noexcept { return _counts.size(); }
    std::uint64_t order() const noexcept { return _order; }

    /// Number of non-zero coordinates.
    std::size_t support() const noexcept;

    Count operator[](std::size_t i) const { return _counts[i]; }
    std::span<const Count> counts() const noexcept { return _counts; }

    /// p + e_i
    ParikhVector plus(std::size_t i) const;
    /// p - e_i; requires p_i > 0.
    ParikhVector minus(std::size_t i) const;
    /// p - e_out + e_in; requires p_out > 0.
    ParikhVector shifted(std::size_t out, std::size_t in) const;

    /// Componentwise p <= q.
    bool dominated_by(const ParikhVector &q) const;

    /// "(2,1,0)"
    std::string to_string() const;
    static ParikhVector parse(std::string_view text);

    friend bool operator==(const ParikhVector &, const ParikhVector &) = default;

    /// Colexicographic order: the last coordinate is the most significant.
    /// For vectors of equal order and sigma this is the order of rank().
    friend std::strong_ordering operator<=>(const ParikhVector &a,
                                            const ParikhVector &b);

private:
    std::vector<Count> _counts;
    std::uint64_t _order = 0;
};

/// Hash usable with unordered containers.
struct ParikhVectorHash
{
    std::size_t operator()(const ParikhVector &p) const noexcept;
};

/// Binomial coefficient C(n, r). Throws CapacityError when the value does
/// not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// |PV(k, sigma)| = C(k + sigma - 1, sigma - 1).
/// Throws CapacityError when the count overflows 64 bits.
std::uint64_t pv_count(std::uint64_t k, std::size_t sigma);

/// Validates (k, sigma) for dense use: sigma within max_alphabet_size and
/// the vertex count representable.
void check_capacity(std::uint64_t k, std::size_t sigma);

ParikhVector pv_of(std::span<const Letter> word, std::size_t sigma);

/// All order-k vectors in canonical (colex) order.
std::vector<ParikhVector> enumerate_pv(std::uint64_t k, std::size_t sigma);

/// Index of p in enumerate_pv(p.order(), p.sigma()).
std::uint64_t rank(const ParikhVector &p);
ParikhVector unrank(std::uint64_t index, std::uint64_t k, std::size_t sigma);

/// Order-k vectors q = p - e_i + e_j, i != j. Sorted canonically.
std::vector<ParikhVector> neighbors(const ParikhVector &p);
/// p + e_i for every i (sigma of them).
std::vector<ParikhVector> parents(const ParikhVector &p);
/// p - e_i for every i with p_i > 0 (support() of them).
std::vector<ParikhVector> children(const ParikhVector &p);

bool are_neighbors(const ParikhVector &p, const ParikhVector &q);

/// Componentwise min / max. Throws InvalidInput on an empty list or
/// mismatched sigma.
ParikhVector meet(std::span<const ParikhVector> ps);
ParikhVector join(std::span<const ParikhVector> ps);

/// Letters in alphabet order, each repeated by its count.
Word canonical_word(const ParikhVector &p);

/// Set of order-k Parikh vectors, kept sorted canonically.
struct ParikhSet
{
    std::uint64_t k = 0;
    std::vector<ParikhVector> members;
    /// Set when k exceeded the word length; members is then empty.
    bool window_exceeds_word = false;

    bool contains(const ParikhVector &p) const;
    std::size_t size() const noexcept { return members.size(); }
};

/// Distinct Parikh vectors of all length-k factors of `word`, computed with
/// a sliding window.
ParikhSet parikh_set(std::span<const Letter> word, std::uint64_t k,
                     std::size_t sigma);

/// Parses "(3,0,0),(0,3,0)" (whitespace tolerated). All vectors must share
/// sigma.
std::vector<ParikhVector> parse_pv_list(std::string_view text);

/// Sorts canonically and removes duplicates.
std::vector<ParikhVector> normalized(std::vector<ParikhVector> ps);

} // namespace pdb
