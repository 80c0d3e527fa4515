#include "tilelab/algebra.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "tilelab/error.hpp"

namespace tilelab {

namespace {

Int checked_add(Int a, Int b)
{
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "lattice coordinate overflow");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "lattice coordinate overflow");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "lattice coordinate overflow");
    return r;
}

Int iabs(Int x) { return x < 0 ? -x : x; }

// 2x2 rational matrix acting on (gamma, delta) column vectors.
using RationalMat = std::array<mpq_class, 4>;

RationalVec apply(const RationalMat& m, const RationalVec& x)
{
    return {m[0] * x.gamma + m[1] * x.delta, m[2] * x.gamma + m[3] * x.delta};
}

} // namespace

std::string_view family_name(Family family) noexcept
{
    switch (family) {
    case Family::PlusQ: return "x^2+q";
    case Family::MinusQ: return "x^2-q";
    case Family::PlusXPlusQ: return "x^2+x+q";
    case Family::MinusXPlusQ: return "x^2-x+q";
    case Family::PlusPXPlusQ: return "x^2+px+q";
    case Family::MinusPXPlusQ: return "x^2-px+q";
    case Family::PlusPXMinusQ: return "x^2+px-q";
    case Family::MinusPXMinusQ: return "x^2-px-q";
    case Family::PlusTwoXPlusTwo: return "x^2+2x+2";
    case Family::MinusTwoXPlusTwo: return "x^2-2x+2";
    }
    return "?";
}

int family_number(Family family) noexcept { return static_cast<int>(family) + 1; }

bool is_expanding(Int p, Int q) noexcept
{
    if (q >= 2)
        return iabs(p) <= q;
    if (q <= -2)
        return iabs(p) <= iabs(q + 2);
    return false;
}

bool is_disk_like(Int p, Int q) noexcept { return 2 * iabs(p) <= iabs(q + 2); }

bool is_similarity(Int p, Int q) noexcept { return p == 0 || (q > 0 && p * p <= 4 * q); }

TilePoly validate_poly(Int p, Int q)
{
    // Keeps every intermediate product (q*delta with |delta| small, p*p) in range.
    constexpr Int limit = Int{1} << 30;
    if (iabs(p) > limit || iabs(q) > limit)
        throw Error(ErrorKind::InvalidArgument, "|p| and |q| must not exceed 2^30");
    if (iabs(q) < 2)
        throw Error(ErrorKind::DegenerateDeterminant, "|q| must be at least 2");
    if (!is_expanding(p, q))
        throw Error(ErrorKind::NotExpanding,
                    "x^2+(" + std::to_string(p) + ")x+(" + std::to_string(q) + ") has a root of modulus <= 1");
    if (!is_disk_like(p, q))
        throw Error(ErrorKind::NotDiskLike, "2|p| > |q+2| for p=" + std::to_string(p) + ", q=" + std::to_string(q));

    TilePoly poly;
    poly.p = p;
    poly.q = q;
    poly.expanding = true;
    poly.disk_like = true;
    poly.similarity = is_similarity(p, q);

    if (p == 0)
        poly.family = q > 0 ? Family::PlusQ : Family::MinusQ;
    else if (q > 0) {
        if (p == 1)
            poly.family = Family::PlusXPlusQ;
        else if (p == -1)
            poly.family = Family::MinusXPlusQ;
        else if (q == 2)
            poly.family = p > 0 ? Family::PlusTwoXPlusTwo : Family::MinusTwoXPlusTwo;
        else
            poly.family = p > 0 ? Family::PlusPXPlusQ : Family::MinusPXPlusQ;
    } else
        poly.family = p > 0 ? Family::PlusPXMinusQ : Family::MinusPXMinusQ;
    return poly;
}

LatticeVec operator+(LatticeVec a, LatticeVec b)
{
    return {checked_add(a.gamma, b.gamma), checked_add(a.delta, b.delta)};
}

LatticeVec operator-(LatticeVec a, LatticeVec b)
{
    return {checked_sub(a.gamma, b.gamma), checked_sub(a.delta, b.delta)};
}

LatticeVec operator-(LatticeVec a) { return LatticeVec{} - a; }

LatticeVec operator*(Int k, LatticeVec a) { return {checked_mul(k, a.gamma), checked_mul(k, a.delta)}; }

std::string to_string(LatticeVec ell)
{
    if (ell.is_zero())
        return "0";
    std::string out;
    if (ell.delta != 0) {
        if (ell.delta == -1)
            out += "-";
        else if (ell.delta != 1)
            out += std::to_string(ell.delta);
        out += "Av";
    }
    if (ell.gamma != 0) {
        if (ell.gamma < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (iabs(ell.gamma) != 1)
            out += std::to_string(iabs(ell.gamma));
        out += "v";
    }
    return out;
}

LatticeVec parse_lattice_vec(std::string_view text)
{
    auto fail = [&] { return Error(ErrorKind::InvalidArgument, "cannot parse lattice vector '" + std::string(text) + "'"); };
    if (text == "0")
        return {};
    LatticeVec out;
    std::size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        Int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (any)
            throw fail();
        Int coeff = 1;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i > start)
            coeff = std::stoll(std::string(text.substr(start, i - start)));
        if (text.substr(i, 2) == "Av") {
            out.delta += sign * coeff;
            i += 2;
        } else if (text.substr(i, 1) == "v") {
            out.gamma += sign * coeff;
            i += 1;
        } else
            throw fail();
        any = true;
    }
    if (!any)
        throw fail();
    return out;
}

RationalVec operator+(const RationalVec& a, const RationalVec& b)
{
    return {a.gamma + b.gamma, a.delta + b.delta};
}

RationalVec operator-(const RationalVec& a, const RationalVec& b)
{
    return {a.gamma - b.gamma, a.delta - b.delta};
}

RationalVec operator*(const mpq_class& k, const RationalVec& a) { return {k * a.gamma, k * a.delta}; }

std::string to_string(const RationalVec& x)
{
    return "(" + x.gamma.get_str() + ", " + x.delta.get_str() + ")";
}

std::string to_string(const RadixWord& word)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < word.digits.size(); ++i)
        os << (i ? ", " : "") << word.digits[i];
    os << ']';
    return os.str();
}

std::string to_string(const PeriodicWord& word)
{
    return to_string(word.preperiod) + "(" + to_string(word.period) + ")^inf";
}

LatticeVec apply_A(LatticeVec ell, const TilePoly& poly)
{
    return {checked_mul(-poly.q, ell.delta), checked_sub(ell.gamma, checked_mul(poly.p, ell.delta))};
}

RationalVec apply_A(const RationalVec& x, const TilePoly& poly)
{
    return {-poly.q * x.delta, x.gamma - poly.p * x.delta};
}

RationalVec apply_A_inverse(const RationalVec& x, const TilePoly& poly)
{
    const mpq_class q(poly.q);
    mpq_class gamma = x.delta - poly.p * x.gamma / q;
    mpq_class delta = -x.gamma / q;
    gamma.canonicalize();
    delta.canonicalize();
    return {gamma, delta};
}

LatticeVec neighbor_step(LatticeVec ell, Int b1, const TilePoly& poly)
{
    if (iabs(b1) > poly.max_difference_digit())
        throw Error(ErrorKind::DigitOutOfRange, "difference digit " + std::to_string(b1) + " outside +-(|q|-1)");
    const LatticeVec image = apply_A(ell, poly);
    return {checked_sub(image.gamma, b1), image.delta};
}

RationalVec eval_radix_finite(const RadixWord& word, const TilePoly& poly)
{
    RationalVec x;
    for (auto it = word.digits.rbegin(); it != word.digits.rend(); ++it) {
        x.gamma += *it;
        x = apply_A_inverse(x, poly);
    }
    return x;
}

RationalVec eval_radix_periodic(const PeriodicWord& word, const TilePoly& poly)
{
    if (word.period.empty())
        throw Error(ErrorKind::InvalidArgument, "periodic word needs a nonempty period");

    // Columns of A^{-m}.
    RationalVec e1{1, 0};
    RationalVec e2{0, 1};
    for (std::size_t i = 0; i < word.period.size(); ++i) {
        e1 = apply_A_inverse(e1, poly);
        e2 = apply_A_inverse(e2, poly);
    }
    const RationalVec c = eval_radix_finite(word.period, poly);

    // (I - A^{-m}) x = c
    const RationalMat m{1 - e1.gamma, -e2.gamma, -e1.delta, 1 - e2.delta};
    const mpq_class det = m[0] * m[3] - m[1] * m[2];
    if (det == 0)
        throw Error(ErrorKind::SingularPeriod, "A^m - I is singular");
    const RationalMat inv{m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
    RationalVec tail = apply(inv, c);

    for (std::size_t i = 0; i < word.preperiod.size(); ++i)
        tail = apply_A_inverse(tail, poly);
    return eval_radix_finite(word.preperiod, poly) + tail;
}

LatticeVec eval_polynomial_word(const RadixWord& digits, const TilePoly& poly)
{
    LatticeVec x;
    for (auto it = digits.digits.rbegin(); it != digits.digits.rend(); ++it)
        x = apply_A(x, poly) + LatticeVec{*it, 0};
    return x;
}

} // namespace tilelab
