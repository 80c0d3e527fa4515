#pragma once

/**
 * @file neighbors.hpp
 * @brief The labeled neighbor graph of a disk-like tile and sofic-shift queries on it.
 *
 * Vertices are the nonzero lattice vectors l with T and T+l touching. There is
 * an edge l -> l' labeled b whenever l' = A l - b v for a difference digit b.
 * Infinite label sequences read along paths from l are exactly the digit
 * differences a_i - a'_i of points that lie in T and in T + l.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tilelab/algebra.hpp"

namespace tilelab {

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Int label = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct NeighborGraph {
    std::vector<LatticeVec> vertices;
    std::vector<Edge> edges;

    std::optional<std::size_t> index_of(LatticeVec ell) const;
    /// Out-edges of vertex i, sorted by (to, label).
    std::vector<Edge> out_edges(std::size_t i) const;
};

/// Greatest fixed point of "keep vertices with a surviving successor" inside
/// the box |delta| <= 3, |gamma| <= |p|+|q|+1. Retries once with a doubled box
/// before throwing BoxExhausted. Vertices come back in canonical_vertex_order.
NeighborGraph build_neighbor_graph(const TilePoly& poly);

/// Single attempt in an explicit box; throws BoxExhausted when a survivor
/// touches the box boundary. Vertices are sorted by (delta, gamma).
NeighborGraph build_neighbor_graph_in_box(const TilePoly& poly, Int gamma_radius, Int delta_radius);

/// Hard-coded neighbor graph of the family, with p and q substituted.
NeighborGraph appendix_neighbor_graph(const TilePoly& poly);

/// Row order of the family's contact-matrix table (v first).
std::vector<LatticeVec> canonical_vertex_order(const TilePoly& poly);

/// Same vertex set and same (from, label, to) triples, irrespective of order.
bool same_labeled_graph(const NeighborGraph& a, const NeighborGraph& b);

/// Every vertex has an out-edge, the vertex set is closed under negation and
/// every edge obeys the neighbor step.
bool is_consistent(const NeighborGraph& g, const TilePoly& poly);

enum class Sign { NonPositive, NonNegative };

struct SignPath {
    LatticeVec start;
    PeriodicWord labels;
    Sign sign = Sign::NonPositive;
};

/// True iff some cycle uses only labels <= 0, or only labels >= 0.
bool origin_on_boundary(const NeighborGraph& g);

/// First vertex (in vertex order) that reaches a sign-restricted cycle; the
/// preperiod is a shortest path into the cycle, the period a shortest cycle.
/// Ties go to the lower (to-index, label) edge.
std::optional<SignPath> find_sign_path(const NeighborGraph& g, Sign sign);

/// Whether `word` labels some path from `start`. Throws UnknownVertex.
bool accepts(const NeighborGraph& g, LatticeVec start, const RadixWord& word);

/// Whether the eventually periodic label stream labels an infinite path from start.
bool accepts_infinite(const NeighborGraph& g, LatticeVec start, const PeriodicWord& labels);

/// Splits labels as a = max(b,0), a' = max(-b,0) and returns x = 0.a1a2...,
/// which lies in T and in T + start. Throws InvalidPath / UnknownVertex.
RationalVec boundary_point_from_path(const SignPath& path, const NeighborGraph& g, const TilePoly& poly);
RationalVec boundary_point_from_path(const SignPath& path, const TilePoly& poly);

/// The a' word of the canonical split, so that x - start = 0.a'1a'2...
PeriodicWord complementary_digits(const PeriodicWord& labels);
PeriodicWord canonical_digits(const PeriodicWord& labels);

/// Header "p q family |V|", then "idx gamma delta" per vertex and "from to label" per edge.
void write_graph_text(std::ostream& os, const NeighborGraph& g, const TilePoly& poly);
void write_graph_dot(std::ostream& os, const NeighborGraph& g, const TilePoly& poly);

} // namespace tilelab
