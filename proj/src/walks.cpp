#include "pdb/walks.hpp"

#include "pdb/errors.hpp"

#include <algorithm>
#include <limits>

namespace pdb {

namespace {

constexpr Letter unset = std::numeric_limits<Letter>::max();

void check_walk_shape(const Walk &walk)
{
    if (walk.vertices.empty())
        throw InvalidInput("walk has no vertices");
    if (walk.k == 0)
        throw InvalidInput("walk order k must be at least 1");
    auto sigma = walk.vertices.front().sigma();
    for (const auto &p : walk.vertices)
        if (p.order() != walk.k || p.sigma() != sigma)
            throw InvalidInput("walk vertex " + p.to_string() + " is not of order " +
                               std::to_string(walk.k) + " over " + std::to_string(sigma) +
                               " letters");
}

/// Step classification: forced exchange for neighbor steps, bow otherwise.
struct Step
{
    bool bow = false;
    EdgeLabel forced;
};

// Depth-first assignment of letters to word positions. Step s fixes position
// s (its out-letter) and position s + k (its in-letter). Positions >= k are
// written by exactly one step before they are read, so choices only arise at
// bows within the first k steps.
class WalkSolver
{
public:
    WalkSolver(const Walk &walk, std::vector<Step> steps)
      : _walk(walk),
        _steps(std::move(steps)),
        _k(walk.k),
        _sigma(walk.sigma()),
        _word(walk.vertices.size() + walk.k - 1, unset),
        _used(_sigma, 0),
        _labels(_steps.size())
    {
    }

    bool solve() { return descend(0); }

    std::size_t deepest_completed() const noexcept { return _deepest; }
    bool any_completed() const noexcept { return _any; }
    const Word &word() const noexcept { return _word; }
    const std::vector<EdgeLabel> &labels() const noexcept { return _labels; }

private:
    bool descend(std::size_t s)
    {
        if (s == _steps.size()) {
            fill_first_window();
            return true;
        }
        const auto &p = _walk.vertices[s];
        if (!_steps[s].bow)
            return attempt(s, _steps[s].forced);
        if (s >= _k)
            return attempt(s, {_word[s], _word[s]});
        for (std::size_t c = 0; c < _sigma; ++c)
            if (p[c] > 0 && attempt(s, {static_cast<Letter>(c), static_cast<Letter>(c)}))
                return true;
        return false;
    }

    bool attempt(std::size_t s, EdgeLabel label)
    {
        if (_walk.vertices[s][label.out] == 0)
            return false;
        bool first_window = s < _k;
        if (first_window) {
            if (_used[label.out] + 1 > _walk.vertices[0][label.out])
                return false;
            ++_used[label.out];
            _word[s] = label.out;
        } else if (_word[s] != label.out) {
            return false;
        }
        _word[s + _k] = label.in;
        _labels[s] = label;
        if (!_any || s > _deepest) {
            _deepest = s;
            _any = true;
        }
        if (descend(s + 1))
            return true;
        _word[s + _k] = unset;
        if (first_window) {
            --_used[label.out];
            _word[s] = unset;
        }
        return false;
    }

    void fill_first_window()
    {
        std::size_t pos = 0;
        for (std::size_t c = 0; c < _sigma; ++c) {
            for (Count n = _used[c]; n < _walk.vertices[0][c]; ++n) {
                while (_word[pos] != unset)
                    ++pos;
                _word[pos] = static_cast<Letter>(c);
            }
        }
    }

    const Walk &_walk;
    std::vector<Step> _steps;
    std::size_t _k;
    std::size_t _sigma;
    Word _word;
    std::vector<Count> _used;
    std::vector<EdgeLabel> _labels;
    std::size_t _deepest = 0;
    bool _any = false;
};

std::size_t constraint_of_step(std::size_t step, std::uint64_t k)
{
    return step >= k ? step - k : 0;
}

} // namespace

Walk walk_of(std::span<const Letter> word, std::uint64_t k, std::size_t sigma)
{
    if (k == 0)
        throw InvalidInput("window length k must be at least 1");
    if (word.size() < k)
        throw InvalidInput("word of length " + std::to_string(word.size()) +
                           " is shorter than k = " + std::to_string(k));
    Walk walk;
    walk.k = k;
    walk.vertices.push_back(pv_of(word.subspan(0, k), sigma));
    std::vector<EdgeLabel> labels;
    for (std::size_t i = 0; i + k < word.size(); ++i) {
        if (word[i + k] >= sigma)
            throw InvalidInput("letter index " + std::to_string(word[i + k]) +
                               " outside alphabet of size " + std::to_string(sigma));
        labels.push_back({word[i], word[i + k]});
        walk.vertices.push_back(walk.vertices.back().shifted(word[i], word[i + k]));
    }
    walk.labels = std::move(labels);
    return walk;
}

WalkRealization is_realizable_walk(const Walk &walk)
{
    check_walk_shape(walk);
    WalkRealization result;

    std::vector<Step> steps;
    for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
        const auto &p = walk.vertices[i];
        const auto &q = walk.vertices[i + 1];
        Step step;
        if (p == q) {
            step.bow = true;
        } else if (are_neighbors(p, q)) {
            for (std::size_t c = 0; c < p.sigma(); ++c) {
                if (q[c] < p[c])
                    step.forced.out = static_cast<Letter>(c);
                else if (q[c] > p[c])
                    step.forced.in = static_cast<Letter>(c);
            }
        } else {
            result.defect = WalkDefect::NotAWalk;
            result.failing_step = i;
            result.constraint = i;
            return result;
        }
        steps.push_back(step);
    }

    WalkSolver solver(walk, std::move(steps));
    if (solver.solve()) {
        result.realizable = true;
        result.word = solver.word();
        result.labels = solver.labels();
        return result;
    }
    result.defect = WalkDefect::Inconsistent;
    result.failing_step = solver.any_completed() ? solver.deepest_completed() + 1 : 0;
    result.constraint = constraint_of_step(result.failing_step, walk.k);
    return result;
}

Word spell(const Walk &walk)
{
    check_walk_shape(walk);
    if (!walk.labels) {
        auto r = is_realizable_walk(walk);
        if (!r.realizable)
            throw RealizabilityError("walk spells no word: violated constraint " +
                                         std::to_string(r.constraint) + " (step " +
                                         std::to_string(r.failing_step) + ")",
                                     r.constraint);
        return *r.word;
    }

    const auto &labels = *walk.labels;
    const auto &vs = walk.vertices;
    const auto k = walk.k;
    const auto sigma = walk.sigma();
    if (labels.size() + 1 != vs.size())
        throw InvalidInput("walk with " + std::to_string(vs.size()) + " vertices needs " +
                           std::to_string(vs.size() - 1) + " labels");

    auto fail = [&](std::size_t step) -> Word {
        auto c = constraint_of_step(step, k);
        throw RealizabilityError("labeled walk spells no word: violated constraint " +
                                     std::to_string(c) + " (step " + std::to_string(step) + ")",
                                 c);
    };

    Word word(vs.size() + k - 1, unset);
    std::vector<Count> used(sigma, 0);
    for (std::size_t s = 0; s < labels.size(); ++s) {
        auto label = labels[s];
        if (label.out >= sigma || label.in >= sigma || vs[s][label.out] == 0)
            return fail(s);
        bool ok = label.is_bow() ? vs[s] == vs[s + 1]
                                 : vs[s + 1] == vs[s].shifted(label.out, label.in);
        if (!ok)
            return fail(s);
        if (s < k) {
            if (++used[label.out] > vs[0][label.out])
                return fail(s);
            word[s] = label.out;
        } else if (word[s] != label.out) {
            return fail(s);
        }
        word[s + k] = label.in;
    }
    std::size_t pos = 0;
    for (std::size_t c = 0; c < sigma; ++c) {
        for (Count n = used[c]; n < vs[0][c]; ++n) {
            while (word[pos] != unset)
                ++pos;
            word[pos] = static_cast<Letter>(c);
        }
    }
    return word;
}

std::vector<ParikhVector> itinerary(std::span<const ParikhVector> vertices)
{
    std::vector<ParikhVector> out;
    for (const auto &p : vertices)
        if (out.empty() || out.back() != p)
            out.push_back(p);
    return out;
}

Word string_from_itinerary(std::span<const ParikhVector> path, std::uint64_t k)
{
    if (path.empty())
        throw InvalidInput("itinerary has no vertices");
    for (const auto &p : path)
        if (p.order() != k || p.sigma() != path[0].sigma())
            throw InvalidInput("itinerary vertex " + p.to_string() + " is not of order " +
                               std::to_string(k));

    Word u = canonical_word(path[0]);
    for (std::size_t n = 1; n < path.size(); ++n) {
        const auto &from = path[n - 1];
        const auto &to = path[n];
        if (!are_neighbors(from, to))
            throw InvalidInput("itinerary steps from " + from.to_string() + " to " +
                               to.to_string() + ", which are not neighbors");
        Letter out = 0, in = 0;
        for (std::size_t c = 0; c < from.sigma(); ++c) {
            if (to[c] < from[c])
                out = static_cast<Letter>(c);
            else if (to[c] > from[c])
                in = static_cast<Letter>(c);
        }
        const std::size_t m = u.size();
        // Earliest occurrence of `out` in the last window (largest g): fewest
        // letters are copied. It exists since that window has vector `from`.
        std::size_t g = k - 1;
        while (u[m - 1 - g] != out)
            --g;
        for (std::size_t t = m - k; t + g + 1 < m; ++t)
            u.push_back(u[t]);
        u.push_back(in);
    }
    return u;
}

std::vector<StepIncidence> step_incidences(const Walk &walk)
{
    if (!walk.labels)
        throw InvalidInput("step incidences need a labeled walk");
    std::vector<StepIncidence> out;
    for (std::size_t i = 0; i < walk.labels->size(); ++i) {
        auto label = (*walk.labels)[i];
        out.push_back({walk.vertices[i].plus(label.in), walk.vertices[i].minus(label.out)});
    }
    return out;
}

BowfreeReport check_bowfree_consequences(std::span<const Letter> word, std::uint64_t k,
                                         std::size_t sigma)
{
    auto walk = walk_of(word, k, sigma);
    const auto &vs = walk.vertices;
    BowfreeReport report;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (vs[i] == vs[i + 1])
            return report;
    report.applicable = true;

    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (word[i] == word[i + k]) {
            report.distinct_exchange = false;
            report.counterexample = i;
            break;
        }
    }
    for (std::size_t i = 0; i + k < vs.size(); ++i) {
        for (std::size_t j = 0; j < sigma; ++j) {
            if (vs[i][j] == k && vs[i + k][j] != 0) {
                report.opposite_face = false;
                if (!report.counterexample || i < *report.counterexample)
                    report.counterexample = i;
            }
        }
    }
    return report;
}

} // namespace pdb
