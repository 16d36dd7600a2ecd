// grid.hpp -- the undirected Parikh-de-Bruijn grid H(k, sigma) and its
// directed, labeled variant G(k, sigma) with bows.
//
// Adjacency is arithmetic: the neighbors of p are p - e_i + e_j, so nothing
// proportional to the edge count is stored. Explicit edge lists exist only
// for export.

#pragma once

#include "pdb/parikh.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pdb {

/// Label of a directed grid edge: the letter leaving the window and the
/// letter entering it. Equal letters mark a bow.
struct EdgeLabel
{
    Letter out = 0;
    Letter in = 0;

    bool is_bow() const noexcept { return out == in; }
    EdgeLabel reversed() const noexcept { return {in, out}; }

    friend bool operator==(const EdgeLabel &, const EdgeLabel &) = default;
};

/// A directed edge of G(k, sigma), endpoints given by rank.
struct Arc
{
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    EdgeLabel label;

    friend bool operator==(const Arc &, const Arc &) = default;
};

class Grid
{
public:
    /// Throws InvalidInput for k == 0 and CapacityError when
    /// C(k + sigma - 1, sigma - 1) does not fit in 64 bits.
    Grid(std::uint64_t k, std::size_t sigma);

    std::uint64_t k() const noexcept { return _k; }
    std::size_t sigma() const noexcept { return _sigma; }

    std::uint64_t vertex_count() const noexcept { return _vertex_count; }
    ParikhVector vertex(std::uint64_t rank) const;
    /// Throws InvalidInput if p is not a vertex of this grid.
    std::uint64_t rank_of(const ParikhVector &p) const;
    bool contains(const ParikhVector &p) const noexcept;

    /// Undirected degree, support(p) * (sigma - 1).
    std::uint64_t degree(const ParikhVector &p) const;
    std::vector<ParikhVector> neighbors_of(const ParikhVector &p) const;

    /// Letters carried by the bows at p (one per non-zero coordinate).
    std::vector<Letter> bows(const ParikhVector &p) const;

    /// Outgoing labeled edges of p in G(k, sigma), bows included.
    std::vector<std::pair<ParikhVector, EdgeLabel>> arcs_from(const ParikhVector &p) const;

    /// The label of the unique edge p -> q for neighbors p != q.
    std::optional<EdgeLabel> label_between(const ParikhVector &p,
                                           const ParikhVector &q) const;

    std::uint64_t undirected_edge_count() const;
    std::uint64_t bow_count() const;

    /// Materialized edge lists (export only).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_list() const;
    std::vector<Arc> arc_list() const;

private:
    void check_vertex(const ParikhVector &p) const;

    std::uint64_t _k;
    std::size_t _sigma;
    std::uint64_t _vertex_count;
};

enum class CliqueKind
{
    CommonChild,
    CommonParent,
    Both,
    NotAClique,
    Singleton,
};

const char *to_string(CliqueKind kind) noexcept;

struct CliqueClassification
{
    CliqueKind kind = CliqueKind::NotAClique;
    std::optional<ParikhVector> common_child;
    std::optional<ParikhVector> common_parent;
};

/// Decides whether `vs` is pairwise neighboring and, if so, which of a common
/// child (the meet) and a common parent (the join) it has. Throws
/// InvalidInput on an empty set or mixed orders.
CliqueClassification classify_clique(std::span<const ParikhVector> vs);

/// Children of an order-(k+1) vector, a clique in H(k, sigma).
std::vector<ParikhVector> simplex_of_parent(const Grid &grid, const ParikhVector &r);
/// Parents of an order-(k-1) vector, a clique in H(k, sigma).
std::vector<ParikhVector> simplex_of_child(const Grid &grid, const ParikhVector &q);

struct Point2
{
    double x = 0;
    double y = 0;
};

/// Triangular drawing coordinates for sigma = 3:
/// x = p2 + p3 / 2, y = sqrt(3) / 2 * p3. Neighbors sit at distance 1.
/// Throws UnsupportedError for any other sigma.
Point2 layout_2d(const ParikhVector &p);

} // namespace pdb
