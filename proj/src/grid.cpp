#include "pdb/grid.hpp"

#include "pdb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pdb {

Grid::Grid(std::uint64_t k, std::size_t sigma) : _k(k), _sigma(sigma)
{
    if (k == 0)
        throw InvalidInput("grid order k must be at least 1");
    check_capacity(k, sigma);
    _vertex_count = pv_count(k, sigma);
}

void Grid::check_vertex(const ParikhVector &p) const
{
    if (!contains(p))
        throw InvalidInput(p.to_string() + " is not a vertex of the (" + std::to_string(_k) + "," +
                           std::to_string(_sigma) + ") grid");
}

bool Grid::contains(const ParikhVector &p) const noexcept
{
    return p.sigma() == _sigma && p.order() == _k;
}

ParikhVector Grid::vertex(std::uint64_t r) const
{
    return unrank(r, _k, _sigma);
}

std::uint64_t Grid::rank_of(const ParikhVector &p) const
{
    check_vertex(p);
    return rank(p);
}

std::uint64_t Grid::degree(const ParikhVector &p) const
{
    check_vertex(p);
    return p.support() * (_sigma - 1);
}

std::vector<ParikhVector> Grid::neighbors_of(const ParikhVector &p) const
{
    check_vertex(p);
    return neighbors(p);
}

std::vector<Letter> Grid::bows(const ParikhVector &p) const
{
    check_vertex(p);
    std::vector<Letter> out;
    for (std::size_t i = 0; i < _sigma; ++i)
        if (p[i] > 0)
            out.push_back(static_cast<Letter>(i));
    return out;
}

std::vector<std::pair<ParikhVector, EdgeLabel>> Grid::arcs_from(const ParikhVector &p) const
{
    check_vertex(p);
    std::vector<std::pair<ParikhVector, EdgeLabel>> out;
    for (std::size_t i = 0; i < _sigma; ++i) {
        if (p[i] == 0)
            continue;
        for (std::size_t j = 0; j < _sigma; ++j) {
            EdgeLabel label{static_cast<Letter>(i), static_cast<Letter>(j)};
            out.emplace_back(i == j ? p : p.shifted(i, j), label);
        }
    }
    return out;
}

std::optional<EdgeLabel> Grid::label_between(const ParikhVector &p, const ParikhVector &q) const
{
    if (!are_neighbors(p, q))
        return std::nullopt;
    EdgeLabel label;
    for (std::size_t i = 0; i < _sigma; ++i) {
        if (q[i] < p[i])
            label.out = static_cast<Letter>(i);
        else if (q[i] > p[i])
            label.in = static_cast<Letter>(i);
    }
    return label;
}

std::uint64_t Grid::bow_count() const
{
    // Summing support(p) over PV(k, sigma) counts, per letter, the vectors with
    // that letter present: sigma * |PV(k - 1, sigma)|.
    return _sigma * pv_count(_k - 1, _sigma);
}

std::uint64_t Grid::undirected_edge_count() const
{
    return bow_count() * (_sigma - 1) / 2;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> Grid::edge_list() const
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t r = 0; r < _vertex_count; ++r) {
        auto p = vertex(r);
        for (const auto &q : neighbors(p)) {
            auto s = rank(q);
            if (r < s)
                out.emplace_back(r, s);
        }
    }
    return out;
}

std::vector<Arc> Grid::arc_list() const
{
    std::vector<Arc> out;
    for (std::uint64_t r = 0; r < _vertex_count; ++r) {
        auto p = vertex(r);
        for (const auto &[q, label] : arcs_from(p))
            out.push_back({r, rank(q), label});
    }
    return out;
}

// ---------------------------------------------------------------------------

const char *to_string(CliqueKind kind) noexcept
{
    switch (kind) {
    case CliqueKind::CommonChild: return "common_child";
    case CliqueKind::CommonParent: return "common_parent";
    case CliqueKind::Both: return "both";
    case CliqueKind::NotAClique: return "not_a_clique";
    case CliqueKind::Singleton: return "singleton";
    }
    return "?";
}

CliqueClassification classify_clique(std::span<const ParikhVector> input)
{
    if (input.empty())
        throw InvalidInput("cannot classify an empty vertex set");
    for (const auto &v : input)
        if (v.order() != input[0].order() || v.sigma() != input[0].sigma())
            throw InvalidInput("clique vertices must share order and alphabet size");

    auto vs = normalized({input.begin(), input.end()});
    CliqueClassification result;
    if (vs.size() == 1) {
        result.kind = CliqueKind::Singleton;
        return result;
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!are_neighbors(vs[i], vs[j]))
                return result;

    auto q = meet(vs);
    auto r = join(vs);
    bool child = q.order() + 1 == vs[0].order();
    bool parent = r.order() == vs[0].order() + 1;
    if (child)
        result.common_child = q;
    if (parent)
        result.common_parent = r;
    if (child && parent)
        result.kind = CliqueKind::Both;
    else if (child)
        result.kind = CliqueKind::CommonChild;
    else if (parent)
        result.kind = CliqueKind::CommonParent;
    else
        throw InternalError("pairwise neighbors without a common child or parent");
    return result;
}

std::vector<ParikhVector> simplex_of_parent(const Grid &grid, const ParikhVector &r)
{
    if (r.sigma() != grid.sigma() || r.order() != grid.k() + 1)
        throw InvalidInput(r.to_string() + " is not of order k+1 = " +
                           std::to_string(grid.k() + 1));
    return children(r);
}

std::vector<ParikhVector> simplex_of_child(const Grid &grid, const ParikhVector &q)
{
    if (q.sigma() != grid.sigma() || q.order() + 1 != grid.k())
        throw InvalidInput(q.to_string() + " is not of order k-1 = " +
                           std::to_string(grid.k() - 1));
    return parents(q);
}

Point2 layout_2d(const ParikhVector &p)
{
    if (p.sigma() != 3)
        throw UnsupportedError("2D layout exists only for sigma = 3");
    return {p[1] + p[2] / 2.0, std::sqrt(3.0) / 2.0 * p[2]};
}

} // namespace pdb
