#include "pdb/parikh.hpp"

#include "pdb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace pdb {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, const char *what)
{
    s = trim(s);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidInput(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    return value;
}

void check_sigma(std::size_t sigma)
{
    if (sigma == 0)
        throw InvalidInput("alphabet size must be at least 1");
    if (sigma > max_alphabet_size)
        throw CapacityError("alphabet size " + std::to_string(sigma) + " exceeds the bound " +
                            std::to_string(max_alphabet_size));
}

} // namespace

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::size_t size) : _size(size)
{
    check_sigma(size);
}

std::string Alphabet::render(Letter letter) const
{
    if (is_lettered())
        return std::string(1, static_cast<char>('a' + letter));
    return std::to_string(letter);
}

std::string Alphabet::render(std::span<const Letter> word) const
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!is_lettered() && i > 0)
            out += ',';
        out += render(word[i]);
    }
    return out;
}

Letter Alphabet::parse_letter(std::string_view text) const
{
    text = trim(text);
    if (is_lettered()) {
        if (text.size() != 1 || text[0] < 'a' || static_cast<std::size_t>(text[0] - 'a') >= _size)
            throw InvalidInput("letter '" + std::string(text) + "' is not in the alphabet a.." +
                               render(static_cast<Letter>(_size - 1)));
        return static_cast<Letter>(text[0] - 'a');
    }
    auto v = parse_uint(text, "letter index");
    if (v >= _size)
        throw InvalidInput("letter index " + std::to_string(v) + " is outside the alphabet of size " +
                           std::to_string(_size));
    return static_cast<Letter>(v);
}

Word Alphabet::parse(std::string_view text) const
{
    Word word;
    if (is_lettered()) {
        word.reserve(text.size());
        for (char c : text)
            word.push_back(parse_letter(std::string_view(&c, 1)));
        return word;
    }
    text = trim(text);
    if (text.empty())
        return word;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        word.push_back(parse_letter(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return word;
}

// ---------------------------------------------------------------------------
// ParikhVector

ParikhVector::ParikhVector(std::vector<Count> counts) : _counts(std::move(counts))
{
    for (Count c : _counts)
        _order += c;
}

ParikhVector ParikhVector::zero(std::size_t sigma)
{
    return ParikhVector(std::vector<Count>(sigma, 0));
}

ParikhVector ParikhVector::unit(std::size_t sigma, std::size_t i)
{
    std::vector<Count> c(sigma, 0);
    c.at(i) = 1;
    return ParikhVector(std::move(c));
}

std::size_t ParikhVector::support() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(_counts.begin(), _counts.end(), [](Count c) { return c != 0; }));
}

ParikhVector ParikhVector::plus(std::size_t i) const
{
    ParikhVector r = *this;
    ++r._counts.at(i);
    ++r._order;
    return r;
}

ParikhVector ParikhVector::minus(std::size_t i) const
{
    if (_counts.at(i) == 0)
        throw InvalidInput("cannot remove letter " + std::to_string(i) + " from " + to_string());
    ParikhVector r = *this;
    --r._counts[i];
    --r._order;
    return r;
}

ParikhVector ParikhVector::shifted(std::size_t out, std::size_t in) const
{
    if (_counts.at(out) == 0)
        throw InvalidInput("cannot shift letter " + std::to_string(out) + " out of " + to_string());
    ParikhVector r = *this;
    --r._counts[out];
    ++r._counts.at(in);
    return r;
}

bool ParikhVector::dominated_by(const ParikhVector &q) const
{
    if (q.sigma() != sigma())
        return false;
    for (std::size_t i = 0; i < sigma(); ++i)
        if (_counts[i] > q._counts[i])
            return false;
    return true;
}

std::string ParikhVector::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < _counts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(_counts[i]);
    }
    return s + ")";
}

ParikhVector ParikhVector::parse(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw InvalidInput("malformed Parikh vector '" + std::string(text) +
                           "': expected parenthesized counts such as (2,1,0)");
    text = text.substr(1, text.size() - 2);
    std::vector<Count> counts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto v = parse_uint(text.substr(start, comma - start), "Parikh vector count");
        if (v > std::numeric_limits<Count>::max())
            throw CapacityError("count " + std::to_string(v) + " does not fit in 32 bits");
        counts.push_back(static_cast<Count>(v));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    check_sigma(counts.size());
    return ParikhVector(std::move(counts));
}

std::strong_ordering operator<=>(const ParikhVector &a, const ParikhVector &b)
{
    if (auto c = a.sigma() <=> b.sigma(); c != 0)
        return c;
    for (std::size_t i = a.sigma(); i-- > 0;)
        if (auto c = a._counts[i] <=> b._counts[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::size_t ParikhVectorHash::operator()(const ParikhVector &p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (Count c : p.counts()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Counting and ranking

std::uint64_t binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        // acc * (n - r + i) / i stays integral at every step
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(r) +
                                ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t pv_count(std::uint64_t k, std::size_t sigma)
{
    if (sigma == 0)
        return 0;
    return binomial(k + sigma - 1, sigma - 1);
}

void check_capacity(std::uint64_t k, std::size_t sigma)
{
    check_sigma(sigma);
    if (k > std::numeric_limits<Count>::max())
        throw CapacityError("order " + std::to_string(k) + " does not fit in 32-bit counts");
    (void)pv_count(k, sigma);
}

ParikhVector pv_of(std::span<const Letter> word, std::size_t sigma)
{
    check_sigma(sigma);
    std::vector<Count> counts(sigma, 0);
    for (Letter l : word) {
        if (l >= sigma)
            throw InvalidInput("letter index " + std::to_string(l) + " outside alphabet of size " +
                               std::to_string(sigma));
        ++counts[l];
    }
    return ParikhVector(std::move(counts));
}

namespace {

void enumerate_rec(std::vector<Count> &cur, std::size_t idx, std::uint64_t rem,
                   std::vector<ParikhVector> &out)
{
    // idx is the coordinate being fixed, most significant first
    if (idx == 0) {
        cur[0] = static_cast<Count>(rem);
        out.emplace_back(cur);
        return;
    }
    for (std::uint64_t c = 0; c <= rem; ++c) {
        cur[idx] = static_cast<Count>(c);
        enumerate_rec(cur, idx - 1, rem - c, out);
    }
    cur[idx] = 0;
}

} // namespace

std::vector<ParikhVector> enumerate_pv(std::uint64_t k, std::size_t sigma)
{
    check_capacity(k, sigma);
    std::vector<ParikhVector> out;
    out.reserve(pv_count(k, sigma));
    std::vector<Count> cur(sigma, 0);
    enumerate_rec(cur, sigma - 1, k, out);
    return out;
}

std::uint64_t rank(const ParikhVector &p)
{
    // Vectors whose coordinate idx is smaller than c, with the more significant
    // coordinates fixed, number C(rem+idx, idx) - C(rem-c+idx, idx).
    std::uint64_t r = 0;
    std::uint64_t rem = p.order();
    for (std::size_t idx = p.sigma(); idx-- > 1;) {
        std::uint64_t c = p[idx];
        r += binomial(rem + idx, idx) - binomial(rem - c + idx, idx);
        rem -= c;
    }
    return r;
}

ParikhVector unrank(std::uint64_t index, std::uint64_t k, std::size_t sigma)
{
    auto total = pv_count(k, sigma);
    check_capacity(k, sigma);
    if (index >= total)
        throw InvalidInput("rank " + std::to_string(index) + " out of range for PV(" +
                           std::to_string(k) + "," + std::to_string(sigma) + ") of size " +
                           std::to_string(total));
    std::vector<Count> counts(sigma, 0);
    std::uint64_t rem = k;
    for (std::size_t idx = sigma; idx-- > 1;) {
        std::uint64_t c = 0;
        while (true) {
            // block of vectors with coordinate idx == c has size |PV(rem - c, idx)|
            auto block = binomial(rem - c + idx - 1, idx - 1);
            if (index < block)
                break;
            index -= block;
            ++c;
        }
        counts[idx] = static_cast<Count>(c);
        rem -= c;
    }
    counts[0] = static_cast<Count>(rem);
    return ParikhVector(std::move(counts));
}

// ---------------------------------------------------------------------------
// Relations

std::vector<ParikhVector> neighbors(const ParikhVector &p)
{
    std::vector<ParikhVector> out;
    for (std::size_t i = 0; i < p.sigma(); ++i) {
        if (p[i] == 0)
            continue;
        for (std::size_t j = 0; j < p.sigma(); ++j)
            if (j != i)
                out.push_back(p.shifted(i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ParikhVector> parents(const ParikhVector &p)
{
    std::vector<ParikhVector> out;
    for (std::size_t i = 0; i < p.sigma(); ++i)
        out.push_back(p.plus(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ParikhVector> children(const ParikhVector &p)
{
    std::vector<ParikhVector> out;
    for (std::size_t i = 0; i < p.sigma(); ++i)
        if (p[i] > 0)
            out.push_back(p.minus(i));
    std::sort(out.begin(), out.end());
    return out;
}

bool are_neighbors(const ParikhVector &p, const ParikhVector &q)
{
    if (p.sigma() != q.sigma() || p.order() != q.order())
        return false;
    std::size_t up = 0, down = 0;
    for (std::size_t i = 0; i < p.sigma(); ++i) {
        if (q[i] == p[i] + 1)
            ++up;
        else if (q[i] + 1 == p[i])
            ++down;
        else if (q[i] != p[i])
            return false;
    }
    return up == 1 && down == 1;
}

namespace {

template <typename Pick>
ParikhVector fold(std::span<const ParikhVector> ps, const char *name, Pick pick)
{
    if (ps.empty())
        throw InvalidInput(std::string(name) + " of an empty list is undefined");
    std::vector<Count> acc(ps[0].counts().begin(), ps[0].counts().end());
    for (const auto &p : ps.subspan(1)) {
        if (p.sigma() != acc.size())
            throw InvalidInput(std::string(name) + " of vectors with different alphabet sizes");
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = pick(acc[i], p[i]);
    }
    return ParikhVector(std::move(acc));
}

} // namespace

ParikhVector meet(std::span<const ParikhVector> ps)
{
    return fold(ps, "meet", [](Count a, Count b) { return std::min(a, b); });
}

ParikhVector join(std::span<const ParikhVector> ps)
{
    return fold(ps, "join", [](Count a, Count b) { return std::max(a, b); });
}

Word canonical_word(const ParikhVector &p)
{
    Word w;
    w.reserve(p.order());
    for (std::size_t i = 0; i < p.sigma(); ++i)
        w.insert(w.end(), p[i], static_cast<Letter>(i));
    return w;
}

// ---------------------------------------------------------------------------
// Parikh sets

bool ParikhSet::contains(const ParikhVector &p) const
{
    return std::binary_search(members.begin(), members.end(), p);
}

ParikhSet parikh_set(std::span<const Letter> word, std::uint64_t k, std::size_t sigma)
{
    check_sigma(sigma);
    ParikhSet set;
    set.k = k;
    if (k > word.size()) {
        set.window_exceeds_word = true;
        return set;
    }
    if (k == 0) {
        set.members.push_back(ParikhVector::zero(sigma));
        return set;
    }
    auto window = pv_of(word.subspan(0, k), sigma);
    set.members.push_back(window);
    for (std::size_t i = k; i < word.size(); ++i) {
        if (word[i] >= sigma)
            throw InvalidInput("letter index " + std::to_string(word[i]) +
                               " outside alphabet of size " + std::to_string(sigma));
        window = window.shifted(word[i - k], word[i]);
        set.members.push_back(window);
    }
    set.members = normalized(std::move(set.members));
    return set;
}

std::vector<ParikhVector> parse_pv_list(std::string_view text)
{
    std::vector<ParikhVector> out;
    std::size_t pos = 0;
    while (true) {
        auto open = text.find('(', pos);
        if (open == std::string_view::npos) {
            if (!trim(text.substr(pos)).empty())
                throw InvalidInput("trailing text after Parikh vector list: '" +
                                   std::string(text.substr(pos)) + "'");
            break;
        }
        auto between = trim(text.substr(pos, open - pos));
        if (!(between.empty() || (between == "," && !out.empty())))
            throw InvalidInput("unexpected text '" + std::string(between) +
                               "' in Parikh vector list");
        auto close = text.find(')', open);
        if (close == std::string_view::npos)
            throw InvalidInput("unterminated Parikh vector in list");
        out.push_back(ParikhVector::parse(text.substr(open, close - open + 1)));
        if (out.back().sigma() != out.front().sigma())
            throw InvalidInput("Parikh vectors in a list must share the alphabet size");
        pos = close + 1;
    }
    if (out.empty())
        throw InvalidInput("empty Parikh vector list");
    return out;
}

std::vector<ParikhVector> normalized(std::vector<ParikhVector> ps)
{
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

} // namespace pdb
