#include "tilelab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "tilelab/error.hpp"

namespace tilelab {

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

RatPoly to_rat(const IntPoly& f)
{
    RatPoly r;
    for (const mpz_class& c : f.coeffs)
        r.emplace_back(c);
    return r;
}

RatPoly derivative(const RatPoly& f)
{
    RatPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<long>(i));
    trim(d);
    return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
    trim(a);
    RatPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class c = a.back() / b.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

mpq_class eval(const RatPoly& f, const mpq_class& x)
{
    mpq_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int sign_changes(const std::vector<RatPoly>& sturm, const mpq_class& x)
{
    int changes = 0;
    int last = 0;
    for (const RatPoly& s : sturm) {
        const int sg = sgn(eval(s, x));
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

void require_nonnegative(const ContactMatrix& m)
{
    for (Int e : m.entries)
        if (e < 0)
            throw Error(ErrorKind::NegativeEntry, "matrix entry " + std::to_string(e) + " is negative");
}

Int iabs(Int x) { return x < 0 ? -x : x; }

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> c) : coeffs(std::move(c))
{
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> c)
{
    for (long x : c)
        coeffs.emplace_back(x);
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

double IntPoly::eval(double x) const
{
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.coeffs.empty() || b.coeffs.empty())
        return {};
    std::vector<mpz_class> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPoly(std::move(c));
}

std::string to_string(const IntPoly& f)
{
    if (f.coeffs.empty())
        return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const mpz_class& c = f.coeffs[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        const mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0)
            out += mag.get_str();
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

IntPoly char_poly(const ContactMatrix& m)
{
    const std::size_t n = m.size();
    using Mat = std::vector<mpz_class>;
    auto mul = [n](const Mat& a, const Mat& b) {
        Mat c(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i * n + k] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    c[i * n + j] += a[i * n + k] * b[k * n + j];
            }
        return c;
    };

    Mat mm(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        mm[i] = m.entries[i];

    // M_k = M M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M M_k) / k.
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    Mat mk(n * n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = mul(mm, mk);
        for (std::size_t i = 0; i < n; ++i)
            mk[i * n + i] += c[n - k + 1];
        const Mat prod = mul(mm, mk);
        mpz_class trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            trace += prod[i * n + i];
        mpz_class quotient;
        mpz_divexact_ui(quotient.get_mpz_t(), trace.get_mpz_t(), k);
        c[n - k] = -quotient;
    }
    return IntPoly(std::move(c));
}

double largest_real_root(const IntPoly& f)
{
    if (f.coeffs.empty())
        throw Error(ErrorKind::InvalidArgument, "zero polynomial has no largest root");
    const RatPoly rf = to_rat(f);
    RatPoly sqfree = rf;
    const RatPoly df = derivative(rf);
    if (!df.empty())
        sqfree = divmod(rf, gcd(rf, df)).first;

    std::vector<RatPoly> sturm{sqfree, derivative(sqfree)};
    while (!sturm.back().empty()) {
        RatPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
        for (mpq_class& c : r)
            c = -c;
        sturm.push_back(std::move(r));
    }
    sturm.pop_back();

    mpq_class bound = 0;
    for (std::size_t i = 0; i + 1 < sqfree.size(); ++i)
        bound = std::max<mpq_class>(bound, abs(sqfree[i] / sqfree.back()));
    bound += 1;

    mpq_class lo = 0;
    mpq_class hi = bound;
    if (sign_changes(sturm, lo) - sign_changes(sturm, hi) == 0) {
        if (eval(sqfree, 0) == 0)
            return 0.0;
        throw Error(ErrorKind::InvalidArgument, to_string(f) + " has no root in [0, inf)");
    }
    const int v_hi = sign_changes(sturm, hi);
    while (mpq_class(hi - lo).get_d() > 1e-12) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        if (sign_changes(sturm, mid) - v_hi > 0)
            lo = mid;
        else
            hi = mid;
    }
    return mpq_class((lo + hi) / 2).get_d();
}

double spectral_radius(const ContactMatrix& m)
{
    require_nonnegative(m);
    if (m.size() == 0)
        return 0.0;
    return largest_real_root(char_poly(m));
}

double power_iteration_radius(const ContactMatrix& m, int steps)
{
    require_nonnegative(m);
    const std::size_t n = m.size();
    if (n == 0)
        return 0.0;
    std::vector<double> x(n, 1.0);
    double lambda = 1.0;
    for (int s = 0; s < steps; ++s) {
        std::vector<double> y(x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                y[i] += static_cast<double>(m.at(i, j)) * x[j];
        double sx = 0, sy = 0, top = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += x[i];
            sy += y[i];
            top = std::max(top, y[i]);
        }
        lambda = sy / sx;
        for (std::size_t i = 0; i < n; ++i)
            x[i] = y[i] / top;
    }
    return lambda - 1.0;
}

IntPoly cubic_poly(Int p, Int q)
{
    const long ap = static_cast<long>(iabs(p));
    const long aq = static_cast<long>(iabs(q));
    return IntPoly{-aq, -(aq - ap), -(ap - 1), 1};
}

double cubic_largest_root(Int p, Int q)
{
    const IntPoly f = cubic_poly(p, q);
    double lo = 1.0;
    double hi = 1.0 + static_cast<double>(iabs(p) + iabs(q));
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (f.eval(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::optional<IntPoly> factored_char_poly(const TilePoly& poly)
{
    const long p = static_cast<long>(poly.abs_p());
    const long q = static_cast<long>(poly.abs_q());
    const IntPoly cubic = cubic_poly(poly.p, poly.q);
    switch (poly.family) {
    case Family::PlusXPlusQ:
    case Family::PlusPXPlusQ:
    case Family::PlusTwoXPlusTwo:
        return IntPoly{-1, 1} * IntPoly{q, p, 1} * cubic;
    case Family::MinusXPlusQ:
    case Family::MinusPXPlusQ:
    case Family::MinusTwoXPlusTwo:
        return IntPoly{1, 1} * IntPoly{q, -p, 1} * cubic;
    case Family::PlusQ:
        return IntPoly{-q, 0, 1} * IntPoly{q, 0, 1} * IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{1, 0, 1};
    case Family::MinusQ: {
        const IntPoly x2mq{-q, 0, 1};
        const IntPoly xm1{-1, 1};
        return x2mq * x2mq * IntPoly{1, 1} * xm1 * xm1 * xm1;
    }
    default:
        return std::nullopt;
    }
}

DimensionReport dimension_report(const TilePoly& poly)
{
    const NeighborGraph g = build_neighbor_graph(poly);
    const ContactMatrix m = contact_matrix(g, poly);
    const double log_q = std::log(static_cast<double>(poly.abs_q()));

    DimensionReport r;
    r.poly = poly;
    r.vertex_count = g.vertices.size();
    r.char_poly = char_poly(m);
    r.rho = largest_real_root(r.char_poly);
    r.rho_power = power_iteration_radius(m);
    r.dim_generalized = 2.0 * std::log(r.rho) / log_q;
    r.cubic = cubic_poly(poly.p, poly.q);
    r.cubic_root = cubic_largest_root(poly.p, poly.q);
    r.dim_cubic = 2.0 * std::log(r.cubic_root) / log_q;
    r.cubic_conjectural = !poly.similarity;
    if (poly.similarity)
        r.dim_similarity = r.dim_cubic;
    r.irreducible = is_irreducible(m);
    return r;
}

void write_report_json(std::ostream& os, const DimensionReport& r)
{
    auto coeffs = [](const IntPoly& f) {
        nlohmann::json arr = nlohmann::json::array();
        for (const mpz_class& c : f.coeffs) {
            if (c.fits_slong_p())
                arr.push_back(c.get_si());
            else
                arr.push_back(c.get_str());
        }
        return arr;
    };
    nlohmann::ordered_json j;
    j["p"] = r.poly.p;
    j["q"] = r.poly.q;
    j["family"] = std::string(family_name(r.poly.family));
    j["family_number"] = family_number(r.poly.family);
    j["vertices"] = r.vertex_count;
    j["char_poly"] = coeffs(r.char_poly);
    j["char_poly_text"] = to_string(r.char_poly);
    j["rho"] = r.rho;
    j["rho_power_iteration"] = r.rho_power;
    j["dim_generalized"] = r.dim_generalized;
    j["dim_similarity"] = r.dim_similarity ? nlohmann::json(*r.dim_similarity) : nlohmann::json(nullptr);
    j["cubic"] = coeffs(r.cubic);
    j["cubic_root"] = r.cubic_root;
    j["dim_cubic"] = r.dim_cubic;
    j["cubic_conjectural"] = r.cubic_conjectural;
    j["irreducible"] = r.irreducible;
    os << j.dump(2) << '\n';
}

} // namespace tilelab
