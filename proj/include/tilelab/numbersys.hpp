#pragma once

/**
 * @file numbersys.hpp
 * @brief Number-system test and finite digit representations l = sum a_i A^i v.
 */

#include <optional>

#include "tilelab/algebra.hpp"

namespace tilelab {

/// digits[i] is the coefficient of A^i v, lowest power first, each in 0..q-1.
struct Representation {
    RadixWord digits;
    LatticeVec subject;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Every lattice point has a finite expansion over {0..q-1}v iff p >= -1 and q >= 2.
bool is_number_system(const TilePoly& poly) noexcept;

/// The division algorithm below without the number-system precondition
/// (digits a = gamma mod |q|); empty when it cycles or exceeds its step budget.
std::optional<Representation> try_represent(LatticeVec ell, const TilePoly& poly);

/// Division algorithm: a = gamma mod q, then l <- A^{-1}(l - a v).
/// Throws NotANumberSystem, or NonTermination when a state repeats or the
/// step budget 64 + 8 log2(1 + |l|_inf) runs out.
Representation represent(LatticeVec ell, const TilePoly& poly);

/// sum_{i=0..k} b_i A^i v = ell with |b_i| <= |q|-1 and k minimal subject to
/// b_k being the sign of ell's leading coordinate (delta, or gamma when
/// delta = 0). Throws NotANeighbor.
RadixWord neighbor_delta_form(LatticeVec ell, const TilePoly& poly);

/// Closed-form digit expansion of a neighbor, falling back to represent for
/// neighbors the closed forms do not cover. Throws NotANumberSystem, NotANeighbor.
Representation neighbor_digit_form(LatticeVec ell, const TilePoly& poly);

/// sum digits[i] A^i v, exactly.
LatticeVec eval_representation(const Representation& rep, const TilePoly& poly);

} // namespace tilelab
