#pragma once

/**
 * @file spectral.hpp
 * @brief Exact characteristic polynomials, spectral radii and boundary dimensions.
 */

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tilelab/gifs.hpp"

namespace tilelab {

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
struct IntPoly {
    std::vector<mpz_class> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> c);
    IntPoly(std::initializer_list<long> c);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs == b.coeffs; }
};

IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// e.g. "x^3 - x^2 - x - 3".
std::string to_string(const IntPoly& f);

/// det(xI - M) by the Faddeev-LeVerrier recurrence in exact integers.
IntPoly char_poly(const ContactMatrix& m);

/// Largest real root in [0, Cauchy bound] to 1e-12, located with an exact
/// Sturm sequence of the square-free part. Returns 0 when f has no positive
/// root and f(0) = 0; throws InvalidArgument when f has no root in [0, inf).
double largest_real_root(const IntPoly& f);

/// rho(M) as the largest real root of char_poly. Throws NegativeEntry.
double spectral_radius(const ContactMatrix& m);

/// Dominant eigenvalue of M + I by power iteration, minus one.
double power_iteration_radius(const ContactMatrix& m, int steps = 200);

/// x^3 - (|p|-1)x^2 - (|q|-|p|)x - |q|.
IntPoly cubic_poly(Int p, Int q);

/// Largest real root of cubic_poly by bisection on [1, 1+|p|+|q|] to 1e-12.
double cubic_largest_root(Int p, Int q);

/// The factored characteristic polynomial of the contact matrix for the
/// similarity families (x^2 +- px + q with p >= 1, and x^2 +- q), multiplied
/// out. Empty for x^2 +- px - q.
std::optional<IntPoly> factored_char_poly(const TilePoly& poly);

struct DimensionReport {
    TilePoly poly;
    std::size_t vertex_count = 0;
    IntPoly char_poly;
    double rho = 0;
    double rho_power = 0;
    double dim_generalized = 0;
    std::optional<double> dim_similarity;
    IntPoly cubic;
    double cubic_root = 0;
    double dim_cubic = 0;
    /// True when the cubic formula is used outside the similarity case.
    bool cubic_conjectural = false;
    bool irreducible = false;
};

DimensionReport dimension_report(const TilePoly& poly);

void write_report_json(std::ostream& os, const DimensionReport& report);

} // namespace tilelab
