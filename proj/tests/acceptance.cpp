// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status: 0 when every selected criterion passes, 77 when the single
// selected criterion fails and is listed in known_red, 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tilelab/error.hpp"
#include "tilelab/geometry.hpp"
#include "tilelab/gifs.hpp"
#include "tilelab/neighbors.hpp"
#include "tilelab/numbersys.hpp"
#include "tilelab/spectral.hpp"
#include "tilelab/verify.hpp"

using namespace tilelab;

namespace {

constexpr double graph_seconds = 1.0;
constexpr double number_system_seconds = 10.0;
constexpr double set_equation_seconds = 30.0;
constexpr double unit_dim_tol = 1e-9;
constexpr double dragon_dim = 1.523627;
constexpr double dragon_dim_tol = 1e-4;
constexpr double self_consistency_tol = 1e-9;
constexpr double sign_symmetry_tol = 1e-12;
constexpr double ratio_low = 0.5;
constexpr double ratio_high = 2.0;
constexpr double residual_fraction = 0.05;
constexpr int osc_depth = 10;
constexpr Int radix_box = 10;

// Criteria that fail for reasons recorded in the README.
const std::set<int> known_red{8, 10};

struct Outcome {
    bool pass = true;
    std::string detail;
};

const LatticeVec v{1, 0};
const LatticeVec av{0, 1};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string pq(Int p, Int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string fixed(double x, int digits = 6)
{
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << x;
    return os.str();
}

std::vector<std::vector<Int>> rows(const ContactMatrix& m)
{
    std::vector<std::vector<Int>> out(m.size(), std::vector<Int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out[i][j] = m.at(i, j);
    return out;
}

LatticeVec matrix_eval(const std::vector<Int>& digits, Int p, Int q)
{
    const auto [g, d] = oracle::eval_digits(digits, p, q);
    return LatticeVec{g, d};
}

Outcome neighbor_graphs()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 0;
    std::vector<std::string> bad;
    for (auto [p, q] : standard_grid()) {
        const TilePoly poly = validate_poly(p, q);
        ++n;
        if (!same_labeled_graph(build_neighbor_graph(poly), appendix_neighbor_graph(poly)))
            bad.push_back(pq(p, q));
    }
    const double t = seconds_since(t0);
    Outcome o;
    o.pass = bad.empty() && t < graph_seconds;
    o.detail = std::to_string(n - bad.size()) + "/" + std::to_string(n) + " graphs equal, " + fixed(t, 3) + " s";
    for (const auto& s : bad)
        o.detail += " mismatch " + s;
    return o;
}

Outcome contact_matrices()
{
    Outcome o;
    std::size_t n = 0;
    for (auto [p, q] : standard_grid()) {
        const TilePoly poly = validate_poly(p, q);
        const ContactMatrix m = contact_matrix(build_neighbor_graph(poly), poly);
        ++n;
        if (!(m == appendix_contact_matrix(poly))) {
            o.pass = false;
            o.detail += " mismatch " + pq(p, q);
        }
        if (poly.family == Family::PlusPXPlusQ && rows(m) != oracle::plus_px_table(p, q)) {
            o.pass = false;
            o.detail += " typed-table mismatch " + pq(p, q);
        }
        if (poly.family == Family::PlusQ && rows(m) != oracle::plus_q_table(q)) {
            o.pass = false;
            o.detail += " typed-table mismatch " + pq(p, q);
        }
    }
    const TilePoly t = validate_poly(2, 3);
    const ContactMatrix m = contact_matrix(build_neighbor_graph(t), t);
    const std::vector<Int> row_v{0, 2, 1, 0, 0, 0};
    const bool row_ok = m.order.front() == v && rows(m).front() == row_v;
    o.pass = o.pass && row_ok;
    o.detail = std::to_string(n) + " matrices checked, (2,3) row v = (0,2,1,0,0,0): " +
               (row_ok ? "yes" : "no") + o.detail;
    return o;
}

Outcome factorizations()
{
    Outcome o;
    std::size_t n = 0;
    for (auto [p, q] : standard_grid()) {
        const TilePoly poly = validate_poly(p, q);
        if (!poly.similarity)
            continue;
        ++n;
        const IntPoly f = char_poly(contact_matrix(build_neighbor_graph(poly), poly));
        if (f.coeffs != oracle::factored_char_poly(p, q)) {
            o.pass = false;
            o.detail += " mismatch " + pq(p, q) + ": " + to_string(f);
        }
    }
    o.detail = std::to_string(n) + " similarity instances equal their factored forms" + o.detail;
    return o;
}

double cubic_dim(Int p, Int q) { return 2 * std::log(oracle::cubic_root(p, q)) / std::log(std::abs(double(q))); }

Outcome dimensions()
{
    Outcome o;
    std::ostringstream d;
    for (Int q : {2, -2}) {
        const DimensionReport r = dimension_report(validate_poly(0, q));
        const bool ok = std::abs(r.dim_generalized - 1) < unit_dim_tol && r.dim_similarity &&
                        std::abs(*r.dim_similarity - 1) < unit_dim_tol;
        o.pass = o.pass && ok;
        d << pq(0, q) << " dim " << fixed(r.dim_generalized, 10) << "; ";
    }

    const DimensionReport dragon = dimension_report(validate_poly(-2, 2));
    const double dragon_oracle = cubic_dim(-2, 2);
    const bool dragon_ok = std::abs(dragon.dim_generalized - dragon_dim) < dragon_dim_tol &&
                           std::abs(dragon_oracle - dragon_dim) < dragon_dim_tol &&
                           std::abs(dragon.dim_generalized - dragon_oracle) < self_consistency_tol;
    o.pass = o.pass && dragon_ok;
    d << "(-2,2) dim " << fixed(dragon.dim_generalized) << " (bisection " << fixed(dragon_oracle) << "); ";

    const DimensionReport one = dimension_report(validate_poly(1, 2));
    const bool one_ok = one.dim_similarity &&
                        std::abs(one.dim_generalized - *one.dim_similarity) < self_consistency_tol &&
                        std::abs(one.dim_generalized - cubic_dim(1, 2)) < self_consistency_tol;
    o.pass = o.pass && one_ok;
    d << "(1,2) dim " << fixed(one.dim_generalized) << "; ";

    std::size_t pairs = 0;
    for (auto [p, q] : standard_grid()) {
        if (p <= 0 || !is_disk_like(-p, q) || !is_expanding(-p, q))
            continue;
        ++pairs;
        const DimensionReport a = dimension_report(validate_poly(p, q));
        const DimensionReport b = dimension_report(validate_poly(-p, q));
        if (!(a.cubic == b.cubic) || std::abs(a.rho - b.rho) >= sign_symmetry_tol) {
            o.pass = false;
            d << "sign asymmetry at " << pq(p, q) << "; ";
        }
    }
    d << pairs << " sign pairs symmetric";
    o.detail = d.str();
    return o;
}

bool arithmetic_oracle(const TilePoly& poly) { return poly.p >= -1 && poly.q >= 2; }

Outcome number_system_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::size_t n = 0, yes = 0;
    for (auto [p, q] : number_system_grid()) {
        const TilePoly poly = validate_poly(p, q);
        const NumberSystemWitnesses w = number_system_witnesses(poly, arithmetic_oracle);
        ++n;
        yes += w.arithmetic;
        bool digit_forms = true;
        for (LatticeVec ell : build_neighbor_graph(poly).vertices) {
            try {
                const Representation r = neighbor_digit_form(ell, poly);
                digit_forms = digit_forms && matrix_eval(r.digits.digits, p, q) == ell;
            } catch (const Error&) {
                digit_forms = false;
            }
        }
        if (!w.agree() || digit_forms != w.arithmetic) {
            o.pass = false;
            o.detail += " disagreement at " + pq(p, q);
        }
    }
    const double t = seconds_since(t0);
    o.pass = o.pass && t < number_system_seconds && yes > 0 && yes < n;
    o.detail = std::to_string(n) + " polynomials (" + std::to_string(yes) + " number systems), " + fixed(t, 2) +
               " s" + o.detail;
    return o;
}

struct PathRow {
    Int p, q;
    std::vector<std::pair<LatticeVec, std::vector<Int>>> listed;
};

Outcome boundary_paths()
{
    std::vector<PathRow> rows;
    rows.push_back({-2, 2, {{av - v, {-1}}, {-av + v, {1}}}});
    for (auto [p, q] : std::vector<std::pair<Int, Int>>{{1, 4}, {1, 5}, {2, 6}}) {
        rows.push_back({-p, -q, {{v, {p, q - 1}}, {-v, {-p, -(q - 1)}}}});
        rows.push_back({p, -q, {{av + (p + 1) * v, {q - p - 1}}, {-av - (p + 1) * v, {-(q - p - 1)}}}});
    }
    for (Int q : {2, 3, 5})
        rows.push_back({0, -q, {{v, {0, q - 1}}, {-v, {0, -(q - 1)}}, {av + v, {q - 1}}, {-av - v, {-(q - 1)}}}});
    for (auto [p, q] : std::vector<std::pair<Int, Int>>{{2, 3}, {2, 4}, {3, 5}})
        rows.push_back({-p, q, {{av - (p - 1) * v, {-(q - p + 1)}}, {-av + (p - 1) * v, {q - p + 1}}}});

    Outcome o;
    std::size_t found = 0;
    for (const PathRow& row : rows) {
        const NeighborGraph g = build_neighbor_graph(validate_poly(row.p, row.q));
        for (const auto& [start, period] : row.listed) {
            if (!accepts_infinite(g, start, PeriodicWord{{}, RadixWord{period}})) {
                o.pass = false;
                o.detail += " " + pq(row.p, row.q) + " rejects " + to_string(start);
            }
        }
        for (Sign s : {Sign::NonPositive, Sign::NonNegative}) {
            const auto path = find_sign_path(g, s);
            const bool listed = path && path->labels.preperiod.empty() &&
                                std::any_of(row.listed.begin(), row.listed.end(), [&](const auto& e) {
                                    return e.first == path->start && e.second == path->labels.period.digits;
                                });
            if (!listed) {
                o.pass = false;
                o.detail += " " + pq(row.p, row.q) + " found " +
                            (path ? to_string(path->start) + " " + to_string(path->labels) : "nothing");
            } else {
                ++found;
            }
        }
    }
    for (auto [p, q] : standard_grid()) {
        if (!arithmetic_oracle(validate_poly(p, q)))
            continue;
        const NeighborGraph g = build_neighbor_graph(validate_poly(p, q));
        if (find_sign_path(g, Sign::NonPositive) || find_sign_path(g, Sign::NonNegative)) {
            o.pass = false;
            o.detail += " unexpected path at " + pq(p, q);
        }
    }
    o.detail = std::to_string(found) + " sign paths match listed rows over " + std::to_string(rows.size()) +
               " polynomials" + o.detail;
    return o;
}

Outcome set_equations()
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::ostringstream d;
    for (auto [p, q] : std::vector<std::pair<Int, Int>>{{2, 3}, {0, 2}, {-2, 2}}) {
        const TilePoly poly = validate_poly(p, q);
        const GifsSystem gs = build_gifs(build_neighbor_graph(poly), poly);
        std::vector<SetEquationResidual> r;
        for (int depth : {6, 8, 10})
            r.push_back(set_equation_residual(gs, depth));
        const double unit = std::pow(double(poly.abs_q()), -0.5);
        d << pq(p, q) << " ratios";
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            const double ratio = std::sqrt(r[i + 1].residual / r[i].residual) / unit;
            o.pass = o.pass && ratio >= ratio_low && ratio <= ratio_high;
            d << " " << fixed(ratio, 3);
        }
        const double rel = r.back().residual / r.back().diameter;
        o.pass = o.pass && rel < residual_fraction;
        d << ", depth-10 residual/diameter " << fixed(rel, 4) << "; ";
    }
    const double t = seconds_since(t0);
    o.pass = o.pass && t < set_equation_seconds;
    d << fixed(t, 2) << " s";
    o.detail = d.str();
    return o;
}

Outcome open_sets()
{
    const std::vector<std::pair<Int, Int>> reps{{0, 2},  {0, -2}, {1, 2},  {-1, 2}, {2, 3},
                                                {-2, 3}, {1, -4}, {-1, -4}, {2, 2}, {-2, 2}};
    Outcome o;
    std::ostringstream d;
    std::size_t containment = 0, containment_ok = 0, disjoint = 0, disjoint_ok = 0;
    std::set<int> failing_families;
    for (auto [p, q] : reps) {
        const TilePoly poly = validate_poly(p, q);
        const OscReport r = check_osc_numeric(poly, build_gifs(build_neighbor_graph(poly), poly), osc_depth);
        if (r.inconclusive || !r.all_pass()) {
            o.pass = false;
            failing_families.insert(family_number(poly.family));
        }
        for (const OscItem& item : r.items) {
            if (item.kind == OscItem::Kind::Containment) {
                ++containment;
                containment_ok += item.pass;
            } else {
                ++disjoint;
                disjoint_ok += item.pass;
            }
        }
    }
    d << "containment " << containment_ok << "/" << containment << ", disjointness " << disjoint_ok << "/"
      << disjoint;
    if (!failing_families.empty()) {
        d << ", failing families";
        for (int f : failing_families)
            d << " " << f;
    }
    o.detail = d.str();
    return o;
}

Outcome radix_round_trip()
{
    Outcome o;
    std::size_t systems = 0, points = 0;
    for (auto [p, q] : number_system_grid()) {
        const TilePoly poly = validate_poly(p, q);
        if (!arithmetic_oracle(poly))
            continue;
        ++systems;
        std::set<std::vector<Int>> words;
        for (Int g = -radix_box; g <= radix_box; ++g)
            for (Int dd = -radix_box; dd <= radix_box; ++dd) {
                const LatticeVec ell{g, dd};
                const Representation r = represent(ell, poly);
                ++points;
                if (matrix_eval(r.digits.digits, p, q) != ell || !words.insert(r.digits.digits).second) {
                    o.pass = false;
                    o.detail += " " + pq(p, q) + " at " + to_string(ell);
                }
            }
    }
    o.detail = std::to_string(points) + " points over " + std::to_string(systems) + " number systems" + o.detail;
    return o;
}

Outcome delta_forms()
{
    Outcome o;
    std::ostringstream d;
    std::size_t n = 0;
    for (auto [p, q] : standard_grid()) {
        const TilePoly poly = validate_poly(p, q);
        std::size_t k = 0;
        for (LatticeVec ell : build_neighbor_graph(poly).vertices) {
            const RadixWord w = neighbor_delta_form(ell, poly);
            ++n;
            const bool digits_ok = std::all_of(w.digits.begin(), w.digits.end(),
                                               [&](Int b) { return std::abs(b) <= poly.abs_q() - 1; });
            if (w.empty() || std::abs(w.digits.back()) != 1 || !digits_ok || matrix_eval(w.digits, p, q) != ell) {
                o.pass = false;
                d << "bad form for " << to_string(ell) << " at " << pq(p, q) << "; ";
                continue;
            }
            k = std::max(k, w.size() - 1);
        }
        const std::size_t expected = (q == 2 && (p == 2 || p == -2)) ? 3 : 1;
        if (k != expected) {
            o.pass = false;
            d << pq(p, q) << " max k = " << k << ", expected " << expected << "; ";
        }
    }
    o.detail = d.str() + std::to_string(n) + " neighbor forms re-evaluated exactly";
    return o;
}

struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {1, "closure-search neighbor graphs equal the appendix graphs", neighbor_graphs},
        {2, "contact matrices equal the family tables", contact_matrices},
        {3, "characteristic polynomials factor as stated", factorizations},
        {4, "dimension values", dimensions},
        {5, "four number-system conditions agree", number_system_equivalence},
        {6, "sign paths to the origin", boundary_paths},
        {7, "numeric set equations", set_equations},
        {8, "open set condition at depth 10", open_sets},
        {9, "radix round trip", radix_round_trip},
        {10, "neighbor delta forms", delta_forms},
    };
    return all;
}

bool run_one(const Criterion& c)
{
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << o.detail
              << "]" << std::endl;
    return o.pass;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        const int n = std::atoi(argv[2]);
        for (const Criterion& c : criteria())
            if (c.number == n) {
                if (run_one(c))
                    return 0;
                return known_red.count(n) ? 77 : 1;
            }
        std::cerr << "unknown criterion " << argv[2] << "\n";
        return 2;
    }
    if (argc != 1) {
        std::cerr << "usage: acceptance [--criterion N]\n";
        return 2;
    }
    bool all = true;
    for (const Criterion& c : criteria())
        all = run_one(c) && all;
    return all ? 0 : 1;
}
