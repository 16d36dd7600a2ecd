#include "pdb/realize.hpp"

#include "pdb/errors.hpp"
#include "pdb/walks.hpp"

#include <algorithm>
#include <unordered_map>

namespace pdb {

namespace {

void check_set(std::span<const ParikhVector> set)
{
    if (set.empty())
        throw InvalidInput("Parikh set must be non-empty");
    for (const auto &p : set)
        if (p.order() != set[0].order() || p.sigma() != set[0].sigma())
            throw InvalidInput("Parikh set members must share order and alphabet size; " +
                               p.to_string() + " differs from " + set[0].to_string());
}

using IndexMap = std::unordered_map<ParikhVector, std::size_t, ParikhVectorHash>;

IndexMap index_of(const std::vector<ParikhVector> &members)
{
    IndexMap idx;
    for (std::size_t i = 0; i < members.size(); ++i)
        idx.emplace(members[i], i);
    return idx;
}

std::vector<std::size_t> member_neighbors(const ParikhVector &p, const IndexMap &idx)
{
    std::vector<std::size_t> out;
    for (const auto &q : neighbors(p))
        if (auto it = idx.find(q); it != idx.end())
            out.push_back(it->second);
    return out;
}

} // namespace

std::vector<std::vector<ParikhVector>> induced_components(std::span<const ParikhVector> set)
{
    check_set(set);
    auto members = normalized({set.begin(), set.end()});
    auto idx = index_of(members);
    std::vector<int> comp(members.size(), -1);
    std::vector<std::vector<ParikhVector>> out;
    for (std::size_t s = 0; s < members.size(); ++s) {
        if (comp[s] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            out.back().push_back(members[v]);
            for (auto u : member_neighbors(members[v], idx)) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<ParikhVector> covering_itinerary(std::span<const ParikhVector> set)
{
    check_set(set);
    auto members = normalized({set.begin(), set.end()});
    auto idx = index_of(members);
    std::vector<bool> seen(members.size(), false);
    std::vector<ParikhVector> walk;

    // Iterative DFS; each frame remembers its next neighbor to try.
    struct Frame
    {
        std::size_t v;
        std::vector<std::size_t> next;
        std::size_t pos = 0;
    };
    std::vector<Frame> stack;
    seen[0] = true;
    walk.push_back(members[0]);
    stack.push_back({0, member_neighbors(members[0], idx)});
    std::size_t visited = 1;
    while (!stack.empty() && visited < members.size()) {
        auto &top = stack.back();
        if (top.pos < top.next.size()) {
            auto u = top.next[top.pos++];
            if (seen[u])
                continue;
            seen[u] = true;
            ++visited;
            walk.push_back(members[u]);
            stack.push_back({u, member_neighbors(members[u], idx)});
        } else {
            stack.pop_back();
            if (!stack.empty())
                walk.push_back(members[stack.back().v]);
        }
    }
    if (visited != members.size())
        throw InvalidInput("Parikh set is not connected");
    return walk;
}

RealizabilityResult is_realizable_set(std::span<const ParikhVector> set)
{
    check_set(set);
    RealizabilityResult result;
    auto comps = induced_components(set);
    if (comps.size() > 1) {
        result.refutation = std::make_pair(comps[0], comps[1]);
        return result;
    }
    const auto k = set[0].order();
    const auto sigma = set[0].sigma();
    auto word = string_from_itinerary(covering_itinerary(set), k);

    auto realized = parikh_set(word, k, sigma);
    if (realized.members != comps[0])
        throw InternalError("realizability witness has the wrong Parikh set");
    result.realizable = true;
    result.witness = std::move(word);
    return result;
}

Word realizable_pair_witness(const ParikhVector &p, const ParikhVector &q)
{
    if (!are_neighbors(p, q))
        throw InvalidInput(p.to_string() + " and " + q.to_string() + " are not neighbors");
    Letter out = 0, in = 0;
    for (std::size_t c = 0; c < p.sigma(); ++c) {
        if (q[c] < p[c])
            out = static_cast<Letter>(c);
        else if (q[c] > p[c])
            in = static_cast<Letter>(c);
    }
    const ParikhVector both[] = {p, q};
    Word w{out};
    auto t = canonical_word(meet(both));
    w.insert(w.end(), t.begin(), t.end());
    w.push_back(in);
    return w;
}

} // namespace pdb
