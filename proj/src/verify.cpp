#include "tilelab/verify.hpp"

#include <cmath>
#include <set>
#include <ostream>
#include <sstream>

#include "tilelab/error.hpp"
#include "tilelab/gifs.hpp"
#include "tilelab/neighbors.hpp"
#include "tilelab/numbersys.hpp"
#include "tilelab/spectral.hpp"

namespace tilelab {

namespace {

std::string case_name(const TilePoly& poly)
{
    return "p=" + std::to_string(poly.p) + " q=" + std::to_string(poly.q);
}

std::string edge_text(const NeighborGraph& g, const Edge& e)
{
    return to_string(g.vertices[e.from]) + " -> " + to_string(g.vertices[e.to]) + " [" + std::to_string(e.label) + "]";
}

std::set<std::string> edge_texts(const NeighborGraph& g)
{
    std::set<std::string> out;
    for (const Edge& e : g.edges)
        out.insert(edge_text(g, e));
    return out;
}

void append_set_diff(std::ostringstream& os, const std::set<std::string>& built, const std::set<std::string>& table)
{
    for (const auto& s : built)
        if (!table.count(s))
            os << "  extra   " << s << '\n';
    for (const auto& s : table)
        if (!built.count(s))
            os << "  missing " << s << '\n';
}

VerifyCase appendix_a_case(const TilePoly& poly)
{
    VerifyCase c{"appendixA", case_name(poly), false, {}};
    const NeighborGraph built = build_neighbor_graph(poly);
    const NeighborGraph table = appendix_neighbor_graph(poly);
    c.pass = same_labeled_graph(built, table) && is_consistent(built, poly);
    if (!c.pass) {
        std::ostringstream os;
        std::set<std::string> bv, tv;
        for (auto v : built.vertices)
            bv.insert("vertex " + to_string(v));
        for (auto v : table.vertices)
            tv.insert("vertex " + to_string(v));
        append_set_diff(os, bv, tv);
        append_set_diff(os, edge_texts(built), edge_texts(table));
        if (!is_consistent(built, poly))
            os << "  edges violate l' = Al - b v\n";
        c.detail = os.str();
    }
    return c;
}

std::string term_text(const SetEquationTerm& t)
{
    return "A T_" + to_string(t.from) + " > T_" + to_string(t.to) + " + j v, j=" + std::to_string(t.range.first) +
           ".." + std::to_string(t.range.last);
}

VerifyCase appendix_b_case(const TilePoly& poly)
{
    VerifyCase c{"appendixB", case_name(poly), false, {}};
    const auto built = set_equation_terms(build_gifs(build_neighbor_graph(poly), poly));
    const auto table = appendix_set_equations(poly);
    c.pass = built == table;
    if (!c.pass) {
        std::set<std::string> b, t;
        for (const auto& x : built)
            b.insert(term_text(x));
        for (const auto& x : table)
            t.insert(term_text(x));
        std::ostringstream os;
        append_set_diff(os, b, t);
        c.detail = os.str();
    }
    return c;
}

VerifyCase appendix_c_case(const TilePoly& poly)
{
    VerifyCase c{"appendixC", case_name(poly), false, {}};
    const ContactMatrix built = contact_matrix(build_neighbor_graph(poly), poly);
    const ContactMatrix table = appendix_contact_matrix(poly);
    c.pass = built == table;
    if (!c.pass) {
        std::ostringstream os;
        if (built.order != table.order || built.size() != table.size()) {
            os << "  vertex order differs:";
            for (auto v : built.order)
                os << ' ' << to_string(v);
            os << " vs";
            for (auto v : table.order)
                os << ' ' << to_string(v);
            os << '\n';
        } else {
            for (std::size_t i = 0; i < built.size(); ++i)
                for (std::size_t j = 0; j < built.size(); ++j)
                    if (built.at(i, j) != table.at(i, j))
                        os << "  M[" << to_string(built.order[i]) << "][" << to_string(built.order[j])
                           << "] = " << built.at(i, j) << ", table " << table.at(i, j) << '\n';
        }
        c.detail = os.str();
    }
    return c;
}

VerifyCase theorem26_case(const TilePoly& poly, const NumberSystemPredicate& arithmetic)
{
    VerifyCase c{"theorem26", case_name(poly), false, {}};
    const NumberSystemWitnesses w = number_system_witnesses(poly, arithmetic);
    c.pass = w.agree();
    if (!c.pass) {
        std::ostringstream os;
        os << "  arithmetic=" << w.arithmetic << " origin_interior=" << w.origin_interior
           << " division_terminates=" << w.division_terminates << " neighbor_expansions=" << w.neighbor_expansions
           << '\n';
        c.detail = os.str();
    }
    return c;
}

VerifyCase theorem39_case(const TilePoly& poly)
{
    VerifyCase c{"theorem39", case_name(poly), true, {}};
    std::ostringstream os;
    const DimensionReport r = dimension_report(poly);
    if (auto f = factored_char_poly(poly); f && *f != r.char_poly) {
        c.pass = false;
        os << "  char_poly " << to_string(r.char_poly) << " != factored " << to_string(*f) << '\n';
    }
    if (std::abs(r.rho - r.rho_power) > 1e-6) {
        c.pass = false;
        os << "  rho " << r.rho << " vs power iteration " << r.rho_power << '\n';
    }
    if (poly.similarity) {
        if (std::abs(r.rho - r.cubic_root) > 1e-9) {
            c.pass = false;
            os << "  rho " << r.rho << " vs cubic root " << r.cubic_root << '\n';
        }
        if (!r.dim_similarity || std::abs(*r.dim_similarity - r.dim_generalized) > 1e-9) {
            c.pass = false;
            os << "  dim_similarity disagrees with dim_generalized\n";
        }
    }
    if (poly.p == 0 && std::abs(r.dim_generalized - 1.0) > 1e-9) {
        c.pass = false;
        os << "  square tile dimension " << r.dim_generalized << " != 1\n";
    }
    const DimensionReport mirror = dimension_report(validate_poly(-poly.p, poly.q));
    if (std::abs(mirror.rho - r.rho) > 1e-12) {
        c.pass = false;
        os << "  rho(" << poly.p << ',' << poly.q << ") = " << r.rho << " but rho(" << -poly.p << ',' << poly.q
           << ") = " << mirror.rho << '\n';
    }
    if (poly.q > 0 || poly.p == 0) {
        if (r.irreducible != (poly.p != 0)) {
            c.pass = false;
            os << "  irreducible=" << r.irreducible << ", expected exactly when p != 0\n";
        }
    }
    c.detail = os.str();
    return c;
}

std::vector<TilePoly> polys(const std::vector<std::pair<Int, Int>>& grid)
{
    std::vector<TilePoly> out;
    for (auto [p, q] : grid)
        out.push_back(validate_poly(p, q));
    return out;
}

} // namespace

bool VerifyResult::all_pass() const { return failures() == 0; }

std::size_t VerifyResult::failures() const
{
    std::size_t n = 0;
    for (const auto& c : cases)
        n += c.pass ? 0 : 1;
    return n;
}

std::vector<std::pair<Int, Int>> standard_grid()
{
    return {
        {0, 2},  {0, 3},  {0, 5},           // x^2 + q
        {0, -2}, {0, -3}, {0, -5},          // x^2 - q
        {1, 2},  {1, 3},  {1, 5},           // x^2 + x + q
        {-1, 2}, {-1, 3}, {-1, 5},          // x^2 - x + q
        {2, 3},  {2, 4},  {3, 5},           // x^2 + px + q
        {-2, 3}, {-2, 4}, {-3, 5},          // x^2 - px + q
        {1, -4}, {1, -5}, {2, -6},          // x^2 + px - q
        {-1, -4}, {-1, -5}, {-2, -6},       // x^2 - px - q
        {2, 2},                             // x^2 + 2x + 2
        {-2, 2},                            // x^2 - 2x + 2
    };
}

std::vector<std::pair<Int, Int>> number_system_grid()
{
    std::vector<std::pair<Int, Int>> out;
    for (Int p = -6; p <= 6; ++p)
        for (Int q = 2; q <= 12; ++q)
            if (is_disk_like(p, q) && is_expanding(p, q))
                out.emplace_back(p, q);
    return out;
}

NumberSystemWitnesses number_system_witnesses(const TilePoly& poly, const NumberSystemPredicate& arithmetic,
                                              Int radius)
{
    NumberSystemWitnesses w;
    w.arithmetic = arithmetic(poly);
    const NeighborGraph g = build_neighbor_graph(poly);
    w.origin_interior = !origin_on_boundary(g);

    w.division_terminates = true;
    std::set<std::vector<Int>> words;
    for (Int gamma = -radius; gamma <= radius && w.division_terminates; ++gamma)
        for (Int delta = -radius; delta <= radius; ++delta) {
            const LatticeVec ell{gamma, delta};
            auto rep = try_represent(ell, poly);
            if (!rep || eval_representation(*rep, poly) != ell || !words.insert(rep->digits.digits).second) {
                w.division_terminates = false;
                break;
            }
        }

    w.neighbor_expansions = true;
    for (LatticeVec ell : g.vertices) {
        auto rep = try_represent(ell, poly);
        if (!rep || rep->digits.digits.empty() || rep->digits.digits.back() != 1) {
            w.neighbor_expansions = false;
            break;
        }
        if (w.arithmetic) {
            try {
                if (neighbor_digit_form(ell, poly) != *rep) {
                    w.neighbor_expansions = false;
                    break;
                }
            } catch (const Error&) {
                w.neighbor_expansions = false;
                break;
            }
        }
    }
    return w;
}

NumberSystemWitnesses number_system_witnesses(const TilePoly& poly, Int radius)
{
    return number_system_witnesses(poly, is_number_system, radius);
}

const std::vector<std::string>& verify_scopes()
{
    static const std::vector<std::string> scopes{"appendixA", "appendixB", "appendixC", "theorem26", "theorem39", "all"};
    return scopes;
}

VerifyResult run_verify(std::string_view scope) { return run_verify(scope, is_number_system); }

VerifyResult run_verify(std::string_view scope, const NumberSystemPredicate& arithmetic)
{
    const bool all = scope == "all";
    bool known = all;
    VerifyResult result;
    const auto grid = polys(standard_grid());
    if (all || scope == "appendixA") {
        known = true;
        for (const auto& poly : grid)
            result.cases.push_back(appendix_a_case(poly));
    }
    if (all || scope == "appendixB") {
        known = true;
        for (const auto& poly : grid)
            result.cases.push_back(appendix_b_case(poly));
    }
    if (all || scope == "appendixC") {
        known = true;
        for (const auto& poly : grid)
            result.cases.push_back(appendix_c_case(poly));
    }
    if (all || scope == "theorem26") {
        known = true;
        std::set<std::pair<Int, Int>> seen;
        for (auto pq : number_system_grid())
            seen.insert(pq);
        for (auto pq : standard_grid())
            seen.insert(pq);
        for (auto [p, q] : seen)
            result.cases.push_back(theorem26_case(validate_poly(p, q), arithmetic));
    }
    if (all || scope == "theorem39") {
        known = true;
        for (const auto& poly : grid)
            result.cases.push_back(theorem39_case(poly));
    }
    if (!known)
        throw Error(ErrorKind::InvalidArgument, "unknown verify scope '" + std::string(scope) + "'");
    return result;
}

void write_verify_report(std::ostream& os, const VerifyResult& result)
{
    for (const auto& c : result.cases) {
        os << (c.pass ? "PASS " : "FAIL ") << c.suite << ' ' << c.name << '\n';
        if (!c.pass)
            os << c.detail;
    }
    os << result.cases.size() - result.failures() << '/' << result.cases.size() << " cases passed\n";
}

} // namespace tilelab
