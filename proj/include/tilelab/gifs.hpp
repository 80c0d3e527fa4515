#pragma once

/**
 * @file gifs.hpp
 * @brief Graph-directed IFS of the boundary pieces T_l and their contact matrix.
 *
 * Each neighbor-graph edge l -> l' labeled b expands into the maps
 * x -> A^{-1}(x + j v), j in I_b, carrying T_{l'} + j v into T_l.
 */

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "tilelab/neighbors.hpp"

namespace tilelab {

/// Closed integer range first..last.
struct IndexRange {
    Int first = 0;
    Int last = -1;

    Int size() const noexcept { return last < first ? 0 : last - first + 1; }
    bool contains(Int j) const noexcept { return first <= j && j <= last; }

    friend auto operator<=>(const IndexRange&, const IndexRange&) = default;
};

/// I_b = {b, ..., |q|-1} for b >= 0 and {0, ..., |q|-1+b} for b < 0.
/// Throws DigitOutOfRange unless |b1| <= |q|-1, |q| >= 2.
IndexRange index_set(Int b1, Int q);

struct GifsMap {
    std::size_t from = 0;
    std::size_t to = 0;
    Int translation = 0;
    Int label = 0;

    friend auto operator<=>(const GifsMap&, const GifsMap&) = default;
};

struct GifsSystem {
    TilePoly poly;
    NeighborGraph graph;
    std::vector<GifsMap> maps;

    /// Translations of the maps from `from` to `to`, ascending.
    std::vector<Int> translations(LatticeVec from, LatticeVec to) const;
};

GifsSystem build_gifs(const NeighborGraph& g, const TilePoly& poly);

/// One union term of a set equation: A T_from contains T_to + j v for j in range.
struct SetEquationTerm {
    LatticeVec from;
    LatticeVec to;
    IndexRange range;

    friend auto operator<=>(const SetEquationTerm&, const SetEquationTerm&) = default;
};

/// The set-equation terms of the system, one per neighbor-graph edge, sorted.
std::vector<SetEquationTerm> set_equation_terms(const GifsSystem& gs);

/// Hard-coded set equations of the family with p, q substituted, sorted.
std::vector<SetEquationTerm> appendix_set_equations(const TilePoly& poly);

struct ContactMatrix {
    std::vector<LatticeVec> order;
    std::vector<Int> entries; // row-major, order.size()^2

    std::size_t size() const noexcept { return order.size(); }
    Int at(std::size_t i, std::size_t j) const { return entries[i * order.size() + j]; }
    Int row_sum(std::size_t i) const;

    friend bool operator==(const ContactMatrix&, const ContactMatrix&) = default;
};

/// Square matrix from explicit rows; throws InvalidArgument when not square.
ContactMatrix make_matrix(const std::vector<std::vector<Int>>& rows);

/// M[l][l'] = |q| - |b| per edge, rows in canonical_vertex_order.
ContactMatrix contact_matrix(const NeighborGraph& g, const TilePoly& poly);

/// Hard-coded contact-matrix table of the family with p, q substituted.
ContactMatrix appendix_contact_matrix(const TilePoly& poly);

/// Strong connectivity of the support graph.
bool is_irreducible(const ContactMatrix& m);

/// Header row of vertex names, then one row of integers per vertex.
void write_matrix_csv(std::ostream& os, const ContactMatrix& m);

/// "from to j" per map, using vertex names.
void write_gifs_text(std::ostream& os, const GifsSystem& gs);

} // namespace tilelab
