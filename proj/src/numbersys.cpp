#include "tilelab/numbersys.hpp"

#include <bit>
#include <optional>
#include <set>

#include "tilelab/error.hpp"
#include "tilelab/neighbors.hpp"

namespace tilelab {

namespace {

void require_number_system(const TilePoly& poly)
{
    if (!is_number_system(poly))
        throw Error(ErrorKind::NotANumberSystem, "x^2+(" + std::to_string(poly.p) + ")x+(" + std::to_string(poly.q) +
                                                     ") needs p >= -1 and q >= 2");
}

void require_neighbor(LatticeVec ell, const TilePoly& poly)
{
    if (!build_neighbor_graph(poly).index_of(ell))
        throw Error(ErrorKind::NotANeighbor, to_string(ell) + " is not a neighbor");
}

Int floor_mod(Int a, Int m)
{
    const Int r = a % m;
    return r < 0 ? r + m : r;
}

// Exact A^{-1}(ell - b v) if it is a lattice vector.
std::optional<LatticeVec> strip_digit(LatticeVec ell, Int b, const TilePoly& poly)
{
    const Int alpha = ell.gamma - b;
    if (alpha % poly.q != 0)
        return std::nullopt;
    const Int beta = -(alpha / poly.q);
    return LatticeVec{ell.delta, 0} + LatticeVec{poly.p * beta, beta};
}

// Depth-limited search for b_0..b_k ending in the given top digit; at most
// two digits per level are congruent to gamma modulo |q|.
bool delta_search(LatticeVec ell, int remaining, Int top, const TilePoly& poly, std::vector<Int>& out)
{
    if (remaining == 0) {
        if (ell != LatticeVec{top, 0})
            return false;
        out.push_back(top);
        return true;
    }
    const Int q = poly.abs_q();
    const Int r = floor_mod(ell.gamma, q);
    std::vector<Int> candidates;
    if (r == 0)
        candidates = {0};
    else if (r <= q - r)
        candidates = {r, r - q};
    else
        candidates = {r - q, r};
    for (Int b : candidates) {
        auto next = strip_digit(ell, b, poly);
        if (!next)
            continue;
        out.push_back(b);
        if (delta_search(*next, remaining - 1, top, poly, out))
            return true;
        out.pop_back();
    }
    return false;
}

std::optional<RadixWord> closed_form(LatticeVec ell, const TilePoly& poly)
{
    const Int p = poly.abs_p();
    const Int q = poly.q;
    const LatticeVec v{1, 0};
    const LatticeVec av{0, 1};
    auto is = [&](LatticeVec w) { return ell == w; };

    switch (poly.family) {
    case Family::PlusQ:
        if (is(av - v)) return RadixWord{{q - 1, 1, 1}};
        if (is(-v)) return RadixWord{{q - 1, 0, 1}};
        if (is(-av)) return RadixWord{{0, q - 1, 0, 1}};
        if (is(-av + v)) return RadixWord{{1, q - 1, 0, 1}};
        if (is(-av - v)) return RadixWord{{q - 1, q - 1, 1, 1}};
        break;
    case Family::PlusXPlusQ:
        if (is(-v)) return RadixWord{{q - 1, 1, 1}};
        if (is(-av)) return RadixWord{{0, q - 1, 1, 1}};
        if (is(-av - v)) return RadixWord{{q - 1, 0, 1}};
        break;
    case Family::PlusPXPlusQ:
        if (is(-v)) return RadixWord{{q - 1, p, 1}};
        if (is(-av - (p - 1) * v)) return RadixWord{{q - p + 1, p - 1, 1}};
        if (is(-av - p * v)) return RadixWord{{q - p, p - 1, 1}};
        break;
    case Family::PlusTwoXPlusTwo:
        if (is(av + 2 * v)) return RadixWord{{0, 1, 1, 1}};
        if (is(-v)) return RadixWord{{1, 0, 1, 1, 1}};
        if (is(-av - v)) return RadixWord{{1, 1, 1}};
        if (is(-av - 2 * v)) return RadixWord{{0, 1, 1}};
        break;
    case Family::MinusXPlusQ:
        if (is(av - v)) return RadixWord{{q - 1, 0, 1}};
        if (is(-v)) return RadixWord{{q - 1, q - 1, 0, 1}};
        if (is(-av)) return RadixWord{{0, q - 1, q - 1, 0, 1}};
        if (is(-av + v)) return RadixWord{{1, q - 1, q - 1, 0, 1}};
        break;
    default:
        break;
    }
    return std::nullopt;
}

} // namespace

bool is_number_system(const TilePoly& poly) noexcept { return poly.p >= -1 && poly.q >= 2; }

std::optional<Representation> try_represent(LatticeVec ell, const TilePoly& poly)
{
    const Int norm = std::max(ell.gamma < 0 ? -ell.gamma : ell.gamma, ell.delta < 0 ? -ell.delta : ell.delta);
    const Int budget = 64 + 8 * static_cast<Int>(std::bit_width(static_cast<std::uint64_t>(norm) + 1));

    Representation rep;
    rep.subject = ell;
    std::set<LatticeVec> seen;
    LatticeVec state = ell;
    while (!state.is_zero()) {
        if (static_cast<Int>(rep.digits.size()) >= budget || !seen.insert(state).second)
            return std::nullopt;
        const Int a = floor_mod(state.gamma, poly.abs_q());
        rep.digits.digits.push_back(a);
        state = *strip_digit(state, a, poly);
    }
    return rep;
}

Representation represent(LatticeVec ell, const TilePoly& poly)
{
    require_number_system(poly);
    if (auto rep = try_represent(ell, poly))
        return *rep;
    throw Error(ErrorKind::NonTermination, "division algorithm does not terminate for " + to_string(ell));
}

RadixWord neighbor_delta_form(LatticeVec ell, const TilePoly& poly)
{
    require_neighbor(ell, poly);
    const Int lead = ell.delta != 0 ? ell.delta : ell.gamma;
    const Int top = lead > 0 ? 1 : -1;
    for (int k = 0; k <= 8; ++k) {
        std::vector<Int> digits;
        if (delta_search(ell, k, top, poly, digits))
            return RadixWord{digits};
    }
    throw Error(ErrorKind::Internal, "no difference-digit form found for " + to_string(ell));
}

Representation neighbor_digit_form(LatticeVec ell, const TilePoly& poly)
{
    require_number_system(poly);
    require_neighbor(ell, poly);
    if (auto word = closed_form(ell, poly)) {
        Representation rep{*word, ell};
        if (eval_representation(rep, poly) != ell)
            throw Error(ErrorKind::Internal, "closed form for " + to_string(ell) + " does not evaluate back");
        return rep;
    }
    return represent(ell, poly);
}

LatticeVec eval_representation(const Representation& rep, const TilePoly& poly)
{
    return eval_polynomial_word(rep.digits, poly);
}

} // namespace tilelab
