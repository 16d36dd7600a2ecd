#include "pdb/covering.hpp"
#include "pdb/errors.hpp"
#include "pdb/search.hpp"

namespace pdb {

MincovEstimate mincov_explore(std::uint64_t k, std::size_t sigma, std::uint64_t max_len,
                              unsigned workers, std::optional<std::uint64_t> node_budget)
{
    if (k < 2)
        throw InvalidInput("mincov needs k >= 2");
    if (sigma == 0)
        throw InvalidInput("mincov needs sigma >= 1");
    check_capacity(k, sigma);

    MincovEstimate est;
    est.k = k;
    est.sigma = sigma;
    est.denominator = pv_count(k - 1, sigma);
    est.numerator = est.denominator;
    est.estimate_only = !(sigma <= 2 || k <= 3);

    auto consider = [&](const Word &w) {
        auto realized = parikh_set(w, k - 1, sigma).size();
        if (est.witness.empty() || realized < est.numerator) {
            est.numerator = realized;
            est.witness = w;
        }
    };

    if (sigma >= 3 && k >= 4)
        consider(construct_family(Family::KCoverNotK1, k, sigma));

    SearchConfig cfg;
    cfg.k = k;
    cfg.sigma = sigma;
    cfg.workers = workers;
    cfg.node_budget = node_budget;
    SearchStats stats;
    const auto start = bounds(k, sigma).shortest_lower_bound;
    for (std::uint64_t length = start; length <= max_len; ++length) {
        if (node_budget) {
            if (stats.nodes >= *node_budget) {
                est.budget_exhausted = true;
                break;
            }
            cfg.node_budget = *node_budget - stats.nodes;
        }
        bool complete = enumerate_words(cfg, length, false, [&](const Word &w) {
            ++est.words_examined;
            consider(w);
        }, &stats);
        if (!complete) {
            est.budget_exhausted = true;
            break;
        }
        est.enumerated_up_to = length;
    }
    return est;
}

} // namespace pdb
