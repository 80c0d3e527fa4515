#pragma once

/**
 * @file algebra.hpp
 * @brief Exact arithmetic for the companion action of A on the lattice Z v + Z Av.
 *
 * Every geometric object in tilelab lives in the basis {v, Av}. A pair
 * (gamma, delta) denotes gamma*v + delta*Av, and because f(A)v = 0 the matrix A
 * acts on these coordinates as the companion map
 *
 *     (gamma, delta) -> (-q*delta, gamma - p*delta).
 *
 * Lattice vectors use checked 64-bit integers; anything that needs A^{-1}
 * goes through GMP rationals.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tilelab {

using Int = std::int64_t;

/// The ten disk-like families of x^2 + px + q, numbered 1..10 in this order.
enum class Family {
    PlusQ,          // x^2 + q
    MinusQ,         // x^2 - q
    PlusXPlusQ,     // x^2 + x + q
    MinusXPlusQ,    // x^2 - x + q
    PlusPXPlusQ,    // x^2 + px + q, p >= 2, excluding p = q = 2
    MinusPXPlusQ,   // x^2 - px + q, p >= 2, excluding p = q = 2
    PlusPXMinusQ,   // x^2 + px - q, p >= 1
    MinusPXMinusQ,  // x^2 - px - q, p >= 1
    PlusTwoXPlusTwo,  // x^2 + 2x + 2
    MinusTwoXPlusTwo, // x^2 - 2x + 2
};

std::string_view family_name(Family family) noexcept;

/// 1-based number of the family.
int family_number(Family family) noexcept;

/// A validated characteristic polynomial x^2 + px + q of a disk-like tile.
struct TilePoly {
    Int p = 0;
    Int q = 0;
    Family family = Family::PlusQ;
    bool disk_like = false;
    bool expanding = false;
    bool similarity = false;

    Int abs_p() const noexcept { return p < 0 ? -p : p; }
    Int abs_q() const noexcept { return q < 0 ? -q : q; }
    /// Largest admissible |b| for a difference digit, |q| - 1.
    Int max_difference_digit() const noexcept { return abs_q() - 1; }

    friend bool operator==(const TilePoly& a, const TilePoly& b) noexcept
    {
        return a.p == b.p && a.q == b.q;
    }
};

bool is_expanding(Int p, Int q) noexcept;
bool is_disk_like(Int p, Int q) noexcept;
bool is_similarity(Int p, Int q) noexcept;

/// Throws DegenerateDeterminant, NotExpanding or NotDiskLike (checked in that order).
TilePoly validate_poly(Int p, Int q);

/// gamma*v + delta*Av.
struct LatticeVec {
    Int gamma = 0;
    Int delta = 0;

    bool is_zero() const noexcept { return gamma == 0 && delta == 0; }

    friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

LatticeVec operator+(LatticeVec a, LatticeVec b);
LatticeVec operator-(LatticeVec a, LatticeVec b);
LatticeVec operator-(LatticeVec a);
LatticeVec operator*(Int k, LatticeVec a);

/// Human form, e.g. "Av+2v", "-Av-v", "-v", "0".
std::string to_string(LatticeVec ell);

/// Inverse of to_string for the forms it produces ("2Av-3v", "v", "-Av").
LatticeVec parse_lattice_vec(std::string_view text);

struct RationalVec {
    mpq_class gamma{0};
    mpq_class delta{0};

    RationalVec() = default;
    RationalVec(mpq_class g, mpq_class d) : gamma(std::move(g)), delta(std::move(d)) {}
    explicit RationalVec(LatticeVec ell) : gamma(ell.gamma), delta(ell.delta) {}

    friend bool operator==(const RationalVec& a, const RationalVec& b)
    {
        return a.gamma == b.gamma && a.delta == b.delta;
    }
};

RationalVec operator+(const RationalVec& a, const RationalVec& b);
RationalVec operator-(const RationalVec& a, const RationalVec& b);
RationalVec operator*(const mpq_class& k, const RationalVec& a);

std::string to_string(const RationalVec& x);

/// A finite digit string a_1 a_2 ... a_n. Whether the digits are plain
/// digits (0..|q|-1) or difference digits (|b| <= |q|-1) is decided by the
/// operation that reads the word.
struct RadixWord {
    std::vector<Int> digits;

    bool empty() const noexcept { return digits.empty(); }
    std::size_t size() const noexcept { return digits.size(); }

    friend bool operator==(const RadixWord&, const RadixWord&) = default;
};

/// preperiod followed by period repeated forever.
struct PeriodicWord {
    RadixWord preperiod;
    RadixWord period;

    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
};

std::string to_string(const RadixWord& word);
std::string to_string(const PeriodicWord& word);

LatticeVec apply_A(LatticeVec ell, const TilePoly& poly);
RationalVec apply_A(const RationalVec& x, const TilePoly& poly);
RationalVec apply_A_inverse(const RationalVec& x, const TilePoly& poly);

/// l' = A l - b1 v. Throws DigitOutOfRange unless |b1| <= |q|-1.
LatticeVec neighbor_step(LatticeVec ell, Int b1, const TilePoly& poly);

/// sum_{i=1..n} A^{-i} a_i v, by Horner.
RationalVec eval_radix_finite(const RadixWord& word, const TilePoly& poly);

/// Exact value of preperiod . (period)^infinity. Solves x = A^{-m}(x + c) for
/// the periodic tail.
RationalVec eval_radix_periodic(const PeriodicWord& word, const TilePoly& poly);

/// sum_{i=0..k} digits[i] A^i v, by Horner. Digits are lowest power first.
LatticeVec eval_polynomial_word(const RadixWord& digits, const TilePoly& poly);

} // namespace tilelab
