#include "pdb/search.hpp"

#include "pdb/covering.hpp"
#include "pdb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace pdb {

const char *to_string(Target t) noexcept
{
    switch (t) {
    case Target::ShortestCovering: return "shortest_covering";
    case Target::PdbOnly: return "pdb_only";
    case Target::ExistenceAtLength: return "existence_at_length";
    }
    return "?";
}

const char *to_string(SearchStatus s) noexcept
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::RefutedUpTo: return "refuted_up_to";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

namespace {

using Rank = std::uint32_t;
constexpr Rank no_rank = std::numeric_limits<Rank>::max();

/// Per-(k, sigma) lookup tables shared read-only by all workers.
struct Tables
{
    std::uint64_t k;
    std::size_t sigma;
    Rank n;
    std::uint64_t letter_min;
    /// next[(r * sigma + out) * sigma + in]: rank after shifting out/in.
    std::vector<Rank> next;
    /// dist[r * n + s] = sum_i max(0, p_i - q_i), the distance in H(k, sigma).
    std::vector<std::uint16_t> dist;

    Tables(std::uint64_t k_, std::size_t sigma_, bool want_dist) : k(k_), sigma(sigma_)
    {
        if (k == 0)
            throw InvalidInput("k must be at least 1");
        check_capacity(k, sigma);
        auto count = pv_count(k, sigma);
        if (count > max_search_vectors || count * sigma * sigma > (std::uint64_t(1) << 24))
            throw CapacityError("PV(" + std::to_string(k) + "," + std::to_string(sigma) + ") has " +
                                std::to_string(count) + " vectors; the search engine accepts at most " +
                                std::to_string(max_search_vectors));
        n = static_cast<Rank>(count);
        letter_min = letter_lower_bound(k, sigma);

        auto vs = enumerate_pv(k, sigma);
        next.assign(std::size_t(n) * sigma * sigma, no_rank);
        for (Rank r = 0; r < n; ++r)
            for (std::size_t out = 0; out < sigma; ++out)
                if (vs[r][out] > 0)
                    for (std::size_t in = 0; in < sigma; ++in)
                        next[(std::size_t(r) * sigma + out) * sigma + in] =
                            static_cast<Rank>(rank(vs[r].shifted(out, in)));
        if (want_dist) {
            dist.assign(std::size_t(n) * n, 0);
            for (Rank r = 0; r < n; ++r)
                for (Rank s = 0; s < n; ++s) {
                    std::uint64_t d = 0;
                    for (std::size_t i = 0; i < sigma; ++i)
                        if (vs[r][i] > vs[s][i])
                            d += vs[r][i] - vs[s][i];
                    dist[std::size_t(r) * n + s] = static_cast<std::uint16_t>(d);
                }
        }
    }
};

/// State shared by the workers of one fixed-length run.
struct Shared
{
    const Tables &t;
    const SearchConfig &cfg;
    std::uint64_t length;
    bool pdb;
    std::optional<std::uint64_t> budget;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> max_depth{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};

    std::mutex progress_mutex;
    std::uint64_t next_checkpoint;

    Shared(const Tables &t_, const SearchConfig &cfg_, std::uint64_t length_, bool pdb_,
           std::optional<std::uint64_t> budget_, std::uint64_t nodes_before)
      : t(t_),
        cfg(cfg_),
        length(length_),
        pdb(pdb_),
        budget(budget_),
        next_checkpoint(cfg_.checkpoint_interval
                            ? (nodes_before / cfg_.checkpoint_interval + 1) * cfg_.checkpoint_interval
                            : 0),
        base_nodes(nodes_before)
    {
    }

    std::uint64_t base_nodes;

    void add_nodes(std::uint64_t count, std::uint64_t depth)
    {
        auto total = nodes.fetch_add(count, std::memory_order_relaxed) + count;
        auto seen = max_depth.load(std::memory_order_relaxed);
        while (depth > seen && !max_depth.compare_exchange_weak(seen, depth))
            ;
        if (budget && total > *budget)
            out_of_budget.store(true, std::memory_order_relaxed);
        if (cfg.on_progress && cfg.checkpoint_interval && total + base_nodes >= next_checkpoint) {
            std::lock_guard lock(progress_mutex);
            if (total + base_nodes >= next_checkpoint) {
                while (total + base_nodes >= next_checkpoint)
                    next_checkpoint += cfg.checkpoint_interval;
                cfg.on_progress({length, total + base_nodes, max_depth.load()});
            }
        }
    }
};

/// A prefix under construction plus the incremental bookkeeping the prune
/// rules need. push() always applies the letter; pop() undoes it.
class Cursor
{
public:
    explicit Cursor(const Shared &s)
      : _s(s),
        _t(s.t),
        _cover(s.t.n, 0),
        _uncovered(s.t.n),
        _letters(s.t.sigma, 0),
        _deficit(s.t.letter_min * s.t.sigma)
    {
        _word.reserve(s.length);
        _rank.reserve(s.length + 1);
        _highest.reserve(s.length + 1);
        _rank.push_back(no_rank);
        _highest.push_back(0);
    }

    std::size_t size() const noexcept { return _word.size(); }
    const Word &word() const noexcept { return _word; }

    /// Letters 0..limit-1 may extend the prefix (first appearances in order).
    std::size_t limit() const noexcept
    {
        return std::min<std::size_t>(_t.sigma, _highest.back() + 1);
    }

    bool complete() const noexcept
    {
        return _word.size() == _s.length && _uncovered == 0 && (!_s.pdb || _dups == 0);
    }

    bool push(Letter c)
    {
        const auto k = _t.k;
        if (_letters[c] < _t.letter_min)
            --_deficit;
        ++_letters[c];
        _word.push_back(c);
        _highest.push_back(std::max<std::size_t>(_highest.back(), c + 1u));
        const auto len = _word.size();

        Rank r = no_rank;
        if (len == k) {
            r = static_cast<Rank>(rank(ParikhVector(_letters)));
        } else if (len > k) {
            auto out = _word[len - 1 - k];
            r = _t.next[(std::size_t(_rank.back()) * _t.sigma + out) * _t.sigma + c];
        }
        _rank.push_back(r);
        if (r != no_rank) {
            if (_cover[r]++ == 0)
                --_uncovered;
            else
                ++_dups;
        }
        return survives();
    }

    void pop()
    {
        auto r = _rank.back();
        if (r != no_rank) {
            if (--_cover[r] == 0)
                ++_uncovered;
            else
                --_dups;
        }
        _rank.pop_back();
        _highest.pop_back();
        auto c = _word.back();
        _word.pop_back();
        --_letters[c];
        if (_letters[c] < _t.letter_min)
            ++_deficit;
    }

private:
    bool survives() const
    {
        const auto &rules = _s.cfg.prunes;
        const auto len = _word.size();
        const auto k = _t.k;
        const auto remaining_letters = _s.length - len;

        if (_s.pdb && rules.duplicate_window && _dups > 0)
            return false;
        if (rules.unreachable_vectors) {
            auto remaining_windows = len >= k ? remaining_letters : _s.length - k + 1;
            if (_uncovered > remaining_windows)
                return false;
        }
        if (rules.letter_budget && _deficit > remaining_letters)
            return false;
        if (rules.distance && len >= k && _uncovered > 0) {
            const auto *row = &_t.dist[std::size_t(_rank.back()) * _t.n];
            for (Rank u = 0; u < _t.n; ++u)
                if (_cover[u] == 0 && row[u] > remaining_letters)
                    return false;
        }
        return true;
    }

    const Shared &_s;
    const Tables &_t;
    Word _word;
    std::vector<Rank> _rank;
    std::vector<std::size_t> _highest;
    std::vector<std::uint16_t> _cover;
    std::uint64_t _uncovered;
    std::uint64_t _dups = 0;
    std::vector<Count> _letters;
    std::uint64_t _deficit;
};

enum class Mode
{
    FirstWitness,
    Enumerate,
};

struct RunResult
{
    std::optional<Word> witness;
    std::vector<Word> words;
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
    std::uint64_t max_depth = 0;
};

class Worker
{
public:
    Worker(Shared &s, Mode mode, std::size_t task) : _s(s), _mode(mode), _task(task) {}

    ~Worker() { flush(); }

    // Returns true when the search below this node should stop.
    bool descend(Cursor &cur, std::vector<Word> &found)
    {
        if (cur.size() == _s.length) {
            if (!cur.complete())
                return false;
            found.push_back(cur.word());
            return _mode == Mode::FirstWitness;
        }
        if (stop_requested())
            return true;
        const auto limit = cur.limit();
        for (std::size_t c = 0; c < limit; ++c) {
            count(cur.size() + 1);
            bool alive = cur.push(static_cast<Letter>(c));
            bool stop = alive && descend(cur, found);
            cur.pop();
            if (stop)
                return true;
        }
        return false;
    }

    /// Collects every surviving prefix of length `depth`.
    void collect(Cursor &cur, std::size_t depth, std::vector<Word> &prefixes)
    {
        if (cur.size() == depth) {
            prefixes.push_back(cur.word());
            return;
        }
        const auto limit = cur.limit();
        for (std::size_t c = 0; c < limit; ++c) {
            count(cur.size() + 1);
            if (cur.push(static_cast<Letter>(c)))
                collect(cur, depth, prefixes);
            cur.pop();
        }
    }

    void flush()
    {
        if (_pending) {
            _s.add_nodes(_pending, _depth);
            _pending = 0;
        }
    }

private:
    void count(std::uint64_t depth)
    {
        _depth = std::max(_depth, depth);
        if (++_pending == 4096)
            flush();
    }

    bool stop_requested() const
    {
        if (_s.out_of_budget.load(std::memory_order_relaxed))
            return true;
        return _mode == Mode::FirstWitness &&
               _s.best_task.load(std::memory_order_relaxed) < _task;
    }

    Shared &_s;
    Mode _mode;
    std::size_t _task;
    std::uint64_t _pending = 0;
    std::uint64_t _depth = 0;
};

RunResult run_length(const Tables &t, const SearchConfig &cfg, std::uint64_t length, bool pdb,
                     Mode mode, std::uint64_t nodes_before)
{
    std::optional<std::uint64_t> budget;
    if (cfg.node_budget)
        budget = *cfg.node_budget > nodes_before ? *cfg.node_budget - nodes_before : 0;
    Shared shared(t, cfg, length, pdb, budget, nodes_before);
    RunResult result;
    if (length < t.k)
        return result;

    std::size_t depth = cfg.split_depth.value_or(t.k + 2);
    depth = std::min<std::size_t>(std::max<std::size_t>(depth, 1), length);

    std::vector<Word> prefixes;
    {
        Worker w(shared, mode, 0);
        Cursor cur(shared);
        w.collect(cur, depth, prefixes);
    }

    const std::size_t n_tasks = prefixes.size();
    std::vector<std::vector<Word>> found(n_tasks);
    std::vector<char> finished(n_tasks, 0);
    std::atomic<std::size_t> next_task{0};

    auto work = [&] {
        while (true) {
            auto idx = next_task.fetch_add(1);
            if (idx >= n_tasks)
                return;
            if (mode == Mode::FirstWitness && shared.best_task.load() < idx)
                continue;
            if (shared.out_of_budget.load())
                return;
            Worker w(shared, mode, idx);
            Cursor cur(shared);
            bool alive = true;
            for (auto c : prefixes[idx])
                alive = cur.push(c) && alive;
            if (alive)
                w.descend(cur, found[idx]);
            w.flush();
            if (!found[idx].empty() && mode == Mode::FirstWitness) {
                auto best = shared.best_task.load();
                while (idx < best && !shared.best_task.compare_exchange_weak(best, idx))
                    ;
            }
            if (!shared.out_of_budget.load() || !found[idx].empty())
                finished[idx] = 1;
        }
    };

    const unsigned workers = std::max(1u, cfg.workers);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i)
        pool.emplace_back(work);
    work();
    for (auto &th : pool)
        th.join();

    result.nodes = shared.nodes.load();
    result.max_depth = shared.max_depth.load();

    if (mode == Mode::FirstWitness) {
        auto best = shared.best_task.load();
        if (best < n_tasks) {
            // Valid only if every earlier task ran to completion.
            bool earlier_done = true;
            for (std::size_t i = 0; i < best; ++i)
                earlier_done = earlier_done && finished[i];
            if (earlier_done) {
                result.witness = found[best].front();
                return result;
            }
        }
        result.budget_exhausted = shared.out_of_budget.load();
        return result;
    }

    result.budget_exhausted = shared.out_of_budget.load();
    for (auto &bucket : found)
        for (auto &w : bucket)
            result.words.push_back(std::move(w));
    return result;
}

void validate(const SearchConfig &cfg)
{
    if (cfg.k == 0)
        throw InvalidInput("search needs k >= 1");
    if (cfg.sigma == 0)
        throw InvalidInput("search needs sigma >= 1");
    if (cfg.max_len && *cfg.max_len < cfg.k)
        throw InvalidInput("max_len must be at least k");
    if (cfg.sigma > std::numeric_limits<Letter>::max())
        throw CapacityError("alphabet too large for the search engine");
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

SearchOutcome make_outcome(const SearchConfig &cfg)
{
    SearchOutcome out;
    out.k = cfg.k;
    out.sigma = cfg.sigma;
    return out;
}

} // namespace

SearchOutcome search_shortest_covering(SearchConfig cfg)
{
    validate(cfg);
    auto start = std::chrono::steady_clock::now();
    Tables t(cfg.k, cfg.sigma, cfg.prunes.distance);
    auto b = bounds(cfg.k, cfg.sigma);
    auto out = make_outcome(cfg);

    for (std::uint64_t length = b.shortest_lower_bound;; ++length) {
        if (cfg.max_len && length > *cfg.max_len) {
            out.status = SearchStatus::RefutedUpTo;
            out.refuted_up_to = *cfg.max_len;
            break;
        }
        auto run = run_length(t, cfg, length, false, Mode::FirstWitness, out.stats.nodes);
        out.stats.nodes += run.nodes;
        out.stats.max_depth = std::max(out.stats.max_depth, run.max_depth);
        if (run.witness) {
            if (run.witness->size() != length || !is_covering(*run.witness, cfg.k, cfg.sigma))
                throw InternalError("search returned a word that is not covering");
            out.status = SearchStatus::Found;
            out.witness = std::move(run.witness);
            out.minimal = true;
            out.refuted_up_to = length - 1;
            break;
        }
        if (run.budget_exhausted) {
            out.status = SearchStatus::BudgetExhausted;
            out.refuted_up_to = length - 1;
            break;
        }
    }
    out.stats.elapsed_ms = elapsed_ms(start);
    return out;
}

SearchOutcome search_pdb_existence(std::uint64_t k, std::size_t sigma, SearchConfig cfg)
{
    cfg.k = k;
    cfg.sigma = sigma;
    cfg.target = Target::PdbOnly;
    validate(cfg);
    auto start = std::chrono::steady_clock::now();
    Tables t(k, sigma, cfg.prunes.distance);
    const std::uint64_t length = t.n + k - 1;
    auto out = make_outcome(cfg);

    auto run = run_length(t, cfg, length, true, Mode::FirstWitness, 0);
    out.stats.nodes = run.nodes;
    out.stats.max_depth = run.max_depth;
    if (run.witness) {
        if (!verify(*run.witness, k, sigma).is_pdb)
            throw InternalError("search returned a word that is not PdB");
        out.status = SearchStatus::Found;
        out.witness = std::move(run.witness);
        out.minimal = true;
        out.refuted_up_to = length - 1;
    } else if (run.budget_exhausted) {
        out.status = SearchStatus::BudgetExhausted;
    } else {
        out.status = SearchStatus::RefutedUpTo;
        out.refuted_up_to = length;
    }
    out.stats.elapsed_ms = elapsed_ms(start);
    return out;
}

namespace {

SearchOutcome search_at_length(const SearchConfig &cfg)
{
    validate(cfg);
    if (!cfg.length)
        throw InvalidInput("existence search needs a target length");
    auto start = std::chrono::steady_clock::now();
    Tables t(cfg.k, cfg.sigma, cfg.prunes.distance);
    const auto length = *cfg.length;
    auto out = make_outcome(cfg);
    auto run = run_length(t, cfg, length, false, Mode::FirstWitness, 0);
    out.stats.nodes = run.nodes;
    out.stats.max_depth = run.max_depth;
    if (run.witness) {
        if (!is_covering(*run.witness, cfg.k, cfg.sigma))
            throw InternalError("search returned a word that is not covering");
        out.status = SearchStatus::Found;
        out.witness = std::move(run.witness);
        out.minimal = length == bounds(cfg.k, cfg.sigma).shortest_lower_bound;
    } else if (run.budget_exhausted) {
        out.status = SearchStatus::BudgetExhausted;
    } else {
        // A covering word of length L' < L extends to one of length L.
        out.status = SearchStatus::RefutedUpTo;
        out.refuted_up_to = length;
    }
    out.stats.elapsed_ms = elapsed_ms(start);
    return out;
}

} // namespace

SearchOutcome search(const SearchConfig &cfg)
{
    switch (cfg.target) {
    case Target::ShortestCovering: return search_shortest_covering(cfg);
    case Target::PdbOnly: return search_pdb_existence(cfg.k, cfg.sigma, cfg);
    case Target::ExistenceAtLength: return search_at_length(cfg);
    }
    throw InvalidInput("unknown search target");
}

bool enumerate_words(const SearchConfig &cfg, std::uint64_t length, bool pdb_only,
                     const std::function<void(const Word &)> &visit, SearchStats *stats)
{
    validate(cfg);
    auto start = std::chrono::steady_clock::now();
    Tables t(cfg.k, cfg.sigma, cfg.prunes.distance);
    auto run = run_length(t, cfg, length, pdb_only, Mode::Enumerate, 0);
    for (const auto &w : run.words)
        visit(w);
    if (stats) {
        stats->nodes += run.nodes;
        stats->max_depth = std::max(stats->max_depth, run.max_depth);
        stats->elapsed_ms += elapsed_ms(start);
    }
    return !run.budget_exhausted;
}

Word canonical_form(std::span<const Letter> word)
{
    auto relabel = [](auto first, auto last) {
        std::vector<Letter> map;
        std::vector<int> label(std::numeric_limits<Letter>::max() + 1, -1);
        Word out;
        for (auto it = first; it != last; ++it) {
            if (label[*it] < 0)
                label[*it] = static_cast<int>(map.size()), map.push_back(*it);
            out.push_back(static_cast<Letter>(label[*it]));
        }
        return out;
    };
    auto forward = relabel(word.begin(), word.end());
    auto backward = relabel(word.rbegin(), word.rend());
    return std::min(forward, backward);
}

std::vector<Word> enumerate_all_pdb(std::uint64_t k, std::size_t sigma, bool force,
                                    unsigned workers)
{
    if (k == 0)
        throw InvalidInput("k must be at least 1");
    check_capacity(k, sigma);
    auto n = pv_count(k, sigma);
    if (n > enumerate_pdb_gate && !force)
        throw CapacityError("PV(" + std::to_string(k) + "," + std::to_string(sigma) + ") has " +
                            std::to_string(n) + " vectors, above the enumeration gate of " +
                            std::to_string(enumerate_pdb_gate) + " (force to override)");
    SearchConfig cfg;
    cfg.k = k;
    cfg.sigma = sigma;
    cfg.target = Target::PdbOnly;
    cfg.workers = workers;
    cfg.node_budget.reset();
    std::set<Word> classes;
    enumerate_words(cfg, n + k - 1, true, [&](const Word &w) {
        if (!verify(w, k, sigma).is_pdb)
            throw InternalError("enumerated word is not PdB");
        classes.insert(canonical_form(w));
    });
    return {classes.begin(), classes.end()};
}

} // namespace pdb
