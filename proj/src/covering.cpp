#include "pdb/covering.hpp"

#include "pdb/errors.hpp"
#include "pdb/realize.hpp"

#include <algorithm>

namespace pdb {

namespace {

void check_word(std::span<const Letter> word, std::size_t sigma)
{
    for (Letter l : word)
        if (l >= sigma)
            throw InvalidInput("letter index " + std::to_string(l) + " outside alphabet of size " +
                               std::to_string(sigma));
}

std::uint64_t dense_vector_count(std::uint64_t k, std::size_t sigma)
{
    if (k == 0)
        throw InvalidInput("window length k must be at least 1");
    check_capacity(k, sigma);
    auto n = pv_count(k, sigma);
    if (n > max_verify_vectors)
        throw CapacityError("PV(" + std::to_string(k) + "," + std::to_string(sigma) + ") has " +
                            std::to_string(n) + " vectors, above the verification bound " +
                            std::to_string(max_verify_vectors));
    return n;
}

// Multiplicity of every order-k vector over the length-k windows of `word`.
std::vector<std::uint64_t> window_counts(std::span<const Letter> word, std::uint64_t k,
                                         std::size_t sigma, std::uint64_t n)
{
    std::vector<std::uint64_t> counts(n, 0);
    if (word.size() < k)
        return counts;
    auto window = pv_of(word.subspan(0, k), sigma);
    ++counts[rank(window)];
    for (std::size_t i = k; i < word.size(); ++i) {
        window = window.shifted(word[i - k], word[i]);
        ++counts[rank(window)];
    }
    return counts;
}

} // namespace

CoverReport verify(std::span<const Letter> word, std::uint64_t k, std::size_t sigma)
{
    check_word(word, sigma);
    auto n = dense_vector_count(k, sigma);
    auto counts = window_counts(word, k, sigma, n);

    CoverReport report;
    report.k = k;
    report.sigma = sigma;
    report.word.assign(word.begin(), word.end());
    for (std::uint64_t r = 0; r < n; ++r) {
        if (counts[r] == 0)
            report.missing.push_back(unrank(r, k, sigma));
        else if (counts[r] > 1)
            report.duplicated.emplace_back(unrank(r, k, sigma), counts[r]);
    }
    report.is_covering = report.missing.empty();
    report.is_pdb = report.is_covering && report.duplicated.empty();
    if (report.is_covering) {
        auto minimum = static_cast<std::int64_t>(n + k - 1);
        report.excess = static_cast<std::int64_t>(word.size()) - minimum;
    }
    return report;
}

bool is_covering(std::span<const Letter> word, std::uint64_t k, std::size_t sigma)
{
    check_word(word, sigma);
    auto n = dense_vector_count(k, sigma);
    if (word.size() < k || word.size() - k + 1 < n)
        return false;
    auto counts = window_counts(word, k, sigma, n);
    return std::none_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 0; });
}

std::set<std::uint64_t> covset(std::span<const Letter> word, std::size_t sigma)
{
    check_word(word, sigma);
    check_capacity(1, sigma);
    std::set<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= word.size(); ++k) {
        std::uint64_t n = 0;
        try {
            n = pv_count(k, sigma);
        } catch (const CapacityError &) {
            break;
        }
        // |PV(k, sigma)| never decreases with k, and windows only get fewer.
        if (n > word.size() - k + 1)
            break;
        if (is_covering(word, k, sigma))
            out.insert(k);
    }
    return out;
}

const char *to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Exists: return "exists";
    case Verdict::Impossible: return "impossible";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::uint64_t letter_lower_bound(std::uint64_t k, std::size_t sigma)
{
    auto total = binomial(sigma + k - 1, k - 1);
    return (total + k - 1) / k;
}

BoundsReport bounds(std::uint64_t k, std::size_t sigma)
{
    if (k == 0)
        throw InvalidInput("k must be at least 1");
    check_capacity(k, sigma);
    BoundsReport b;
    b.k = k;
    b.sigma = sigma;
    b.pdb_length = binomial(sigma + k - 1, k) + k - 1;
    auto per_letter = binomial(sigma + k - 1, k - 1);
    b.counting_bound = sigma * ((per_letter + k - 1) / k);
    b.shortest_lower_bound = std::max(b.pdb_length, b.counting_bound);
    b.pdb_possible_by_bounds = b.pdb_length >= b.counting_bound;
    b.uc_divisibility = per_letter % k == 0;

    auto set = [&](Verdict v, const char *source) {
        b.known_verdict = v;
        b.verdict_source = source;
    };
    if (sigma == 1)
        set(Verdict::Exists, "unary alphabet: a^k");
    else if (k == 1)
        set(Verdict::Exists, "k = 1: each letter once");
    else if (sigma == 2)
        set(Verdict::Exists, "binary family a^k b^k");
    else if (k == 2)
        set(sigma % 2 == 1 ? Verdict::Exists : Verdict::Impossible,
            "k = 2: Eulerian walk on K_sigma with loops, PdB iff sigma odd");
    else if (k == 3)
        set(sigma == 3 || sigma % 3 != 0 ? Verdict::Exists : Verdict::Impossible,
            "k = 3: PdB iff sigma = 3 or 3 does not divide sigma");
    else if (sigma == 3)
        set(Verdict::Impossible, "sigma = 3, k >= 4: no PdB words");
    else if (!b.pdb_possible_by_bounds)
        set(Verdict::Impossible, "letter-count bound exceeds the PdB length");
    return b;
}

bool is_universal_cycle(std::span<const Letter> word, std::uint64_t k, std::size_t sigma)
{
    check_word(word, sigma);
    auto n = dense_vector_count(k, sigma);
    if (word.size() != n)
        return false;
    const auto len = word.size();
    std::vector<Count> counts(sigma, 0);
    for (std::uint64_t t = 0; t < k; ++t)
        ++counts[word[t % len]];
    ParikhVector window(counts);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0)
            window = window.shifted(word[i - 1], word[(i - 1 + k) % len]);
        auto r = rank(window);
        if (seen[r])
            return false;
        seen[r] = true;
    }
    return true;
}

Word wrap_cycle(std::span<const Letter> word, std::uint64_t k)
{
    if (word.empty() && k > 1)
        throw InvalidInput("cannot wrap an empty cycle");
    Word out(word.begin(), word.end());
    for (std::uint64_t i = 0; i + 1 < k; ++i)
        out.push_back(word[i % word.size()]);
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

const char *to_string(Family f) noexcept
{
    switch (f) {
    case Family::BinaryPdb: return "binary_pdb";
    case Family::K2Eulerian: return "k2_eulerian";
    case Family::KCoverNotK1: return "kcover_not_k1";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    for (auto f : {Family::BinaryPdb, Family::K2Eulerian, Family::KCoverNotK1})
        if (name == to_string(f))
            return f;
    throw InvalidInput("unknown construction family '" + std::string(name) +
                       "' (expected binary_pdb, k2_eulerian or kcover_not_k1)");
}

ParikhVector avoided_vector(std::uint64_t k, std::size_t sigma)
{
    if (sigma < 3 || k < 4)
        throw UnsupportedError("the avoided vector (k-3,1,1,0,...) needs sigma >= 3 and k >= 4");
    std::vector<Count> c(sigma, 0);
    c[0] = static_cast<Count>(k - 3);
    c[1] = 1;
    c[2] = 1;
    return ParikhVector(std::move(c));
}

namespace {

Word binary_pdb(std::uint64_t k)
{
    Word w(k, 0);
    w.insert(w.end(), k, 1);
    return w;
}

// Eulerian walk over K_sigma with a loop at every vertex. For even sigma every
// vertex has odd degree; duplicating the edges (2,3), (4,5), ... leaves 0 and
// 1 as the only odd vertices, so an Eulerian path from 0 exists.
Word k2_eulerian(std::size_t sigma)
{
    std::vector<std::vector<std::uint32_t>> mult(sigma, std::vector<std::uint32_t>(sigma, 1));
    if (sigma % 2 == 0) {
        for (std::size_t x = 2; x + 1 < sigma; x += 2) {
            ++mult[x][x + 1];
            ++mult[x + 1][x];
        }
    }
    std::vector<std::size_t> stack{0}, circuit;
    while (!stack.empty()) {
        auto v = stack.back();
        std::size_t u = 0;
        while (u < sigma && mult[v][u] == 0)
            ++u;
        if (u == sigma) {
            circuit.push_back(v);
            stack.pop_back();
            continue;
        }
        --mult[v][u];
        if (u != v)
            --mult[u][v];
        stack.push_back(u);
    }
    std::reverse(circuit.begin(), circuit.end());
    Word w;
    for (auto v : circuit)
        w.push_back(static_cast<Letter>(v));
    return w;
}

Word splice_letter(Word w, Letter x, std::uint64_t k)
{
    // u(x): the detour that visits the parent p + e_x of the avoided vector p
    // and turns away immediately.
    const Letter a = 0, b = 1, c = 2;
    Word detour;
    auto rep = [&](Letter l, std::uint64_t n) { detour.insert(detour.end(), n, l); };
    if (x == a) {
        rep(b, 1), rep(a, k - 2), rep(c, 1);
    } else if (x == b) {
        rep(a, k - 3), rep(b, 2), rep(c, 1);
    } else if (x == c) {
        rep(a, k - 3), rep(c, 2), rep(b, 1);
    } else {
        rep(b, 1), rep(a, k - 3), rep(x, 1), rep(c, 1);
    }
    rep(x, k);

    std::size_t run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        run = w[i] == x ? run + 1 : 0;
        if (run == k) {
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), detour.begin(), detour.end());
            return w;
        }
    }
    throw InternalError("base word lacks the factor x^k needed for splicing");
}

Word kcover_not_k1(std::uint64_t k, std::size_t sigma)
{
    auto p = avoided_vector(k, sigma);
    auto removed = parents(p);
    std::vector<ParikhVector> rest;
    for (auto &v : enumerate_pv(k, sigma))
        if (!std::binary_search(removed.begin(), removed.end(), v))
            rest.push_back(std::move(v));
    auto base = is_realizable_set(rest);
    if (!base.realizable)
        throw InternalError("grid minus the parents of the avoided vector is disconnected");
    Word w = std::move(*base.witness);
    for (std::size_t x = 0; x < sigma; ++x)
        w = splice_letter(std::move(w), static_cast<Letter>(x), k);
    return w;
}

} // namespace

Word construct_family(Family family, std::uint64_t k, std::size_t sigma)
{
    check_capacity(k, sigma);
    Word w;
    switch (family) {
    case Family::BinaryPdb: {
        if (sigma != 2 || k == 0)
            throw UnsupportedError("binary_pdb needs sigma = 2 and k >= 1");
        w = binary_pdb(k);
        if (!verify(w, k, sigma).is_pdb)
            throw InternalError("a^k b^k failed PdB verification");
        break;
    }
    case Family::K2Eulerian: {
        if (k != 2)
            throw UnsupportedError("k2_eulerian needs k = 2");
        w = k2_eulerian(sigma);
        auto expected = binomial(sigma + 1, 2) + (sigma % 2 == 1 ? 1 : sigma / 2);
        if (w.size() != expected || !is_covering(w, 2, sigma))
            throw InternalError("Eulerian 2-covering word failed its length or coverage check");
        break;
    }
    case Family::KCoverNotK1: {
        if (sigma < 3 || k < 4)
            throw UnsupportedError("kcover_not_k1 needs sigma >= 3 and k >= 4");
        w = kcover_not_k1(k, sigma);
        if (!is_covering(w, k, sigma) ||
            parikh_set(w, k - 1, sigma).contains(avoided_vector(k, sigma)))
            throw InternalError("kcover_not_k1 word failed its coverage or avoidance check");
        break;
    }
    }
    return w;
}

} // namespace pdb
