#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "tilelab/error.hpp"
#include "tilelab/gifs.hpp"
#include "tilelab/neighbors.hpp"

using namespace tilelab;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no tilelab::Error thrown");
    return ErrorKind::Internal;
}

const LatticeVec v{1, 0};
const LatticeVec av{0, 1};

ContactMatrix matrix_of(Int p, Int q)
{
    const TilePoly poly = validate_poly(p, q);
    return contact_matrix(build_neighbor_graph(poly), poly);
}

} // namespace

TEST_CASE("index sets")
{
    CHECK(index_set(-2, 3) == IndexRange{0, 0});
    CHECK(index_set(0, 3) == IndexRange{0, 2});
    CHECK(index_set(2, 3) == IndexRange{2, 2});
    CHECK(index_set(-1, -4) == IndexRange{0, 2});
    CHECK(kind_of([] { index_set(3, 3); }) == ErrorKind::DigitOutOfRange);
    CHECK(kind_of([] { index_set(-3, 3); }) == ErrorKind::DigitOutOfRange);
    for (Int q : {2, 3, 7, -5})
        for (Int b = -(std::abs(q) - 1); b <= std::abs(q) - 1; ++b) {
            const IndexRange r = index_set(b, q);
            CHECK(r.size() == std::abs(q) - std::abs(b));
            for (Int j = r.first; j <= r.last; ++j) {
                // j and j - b are both digits.
                CHECK((j >= 0 && j < std::abs(q)));
                CHECK((j - b >= 0 && j - b < std::abs(q)));
            }
        }
}

TEST_CASE("GIFS translations of the examples")
{
    const TilePoly a = validate_poly(2, 3);
    const GifsSystem gs = build_gifs(build_neighbor_graph(a), a);
    CHECK(gs.translations(v, av + v) == std::vector<Int>{0, 1});
    CHECK(gs.translations(av + 2 * v, -v) == std::vector<Int>{0});
    CHECK(gs.translations(v, -v).empty());

    const TilePoly b = validate_poly(2, 2);
    const GifsSystem gb = build_gifs(build_neighbor_graph(b), b);
    CHECK(gb.translations(-av - 2 * v, v) == std::vector<Int>{1});
}

TEST_CASE("GIFS maps follow the neighbor edges")
{
    for (Int q = -14; q <= 14; ++q)
        for (Int p = -8; p <= 8; ++p) {
            if ((q > -2 && q < 2) || !is_disk_like(p, q) || !is_expanding(p, q))
                continue;
            const TilePoly poly = validate_poly(p, q);
            const NeighborGraph g = build_neighbor_graph(poly);
            const GifsSystem gs = build_gifs(g, poly);
            std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>> by_pair;
            for (const GifsMap& m : gs.maps) {
                by_pair[{m.from, m.to}].push_back(m.translation);
                // A^{-1}(T_l' + j v) lies in T_l: j is a digit, and so is j - b.
                CHECK((m.translation >= 0 && m.translation < poly.abs_q()));
                CHECK((m.translation - m.label >= 0 && m.translation - m.label < poly.abs_q()));
            }
            std::size_t total = 0;
            for (const Edge& e : g.edges)
                total += static_cast<std::size_t>(poly.abs_q() - std::abs(e.label));
            CHECK(gs.maps.size() == total);

            const ContactMatrix m = contact_matrix(g, poly);
            for (std::size_t i = 0; i < m.size(); ++i) {
                Int row = 0;
                for (std::size_t j = 0; j < m.size(); ++j) {
                    const auto gi = *g.index_of(m.order[i]);
                    const auto gj = *g.index_of(m.order[j]);
                    auto it = by_pair.find({gi, gj});
                    CHECK(m.at(i, j) == (it == by_pair.end() ? 0 : static_cast<Int>(it->second.size())));
                    CHECK(m.at(i, j) >= 0);
                    row += m.at(i, j);
                }
                CHECK(m.row_sum(i) == row);
            }
        }
}

TEST_CASE("contact matrices equal the typed tables")
{
    for (auto [p, q] : {std::pair<Int, Int>{2, 3}, {2, 4}, {3, 5}, {4, 7}}) {
        const ContactMatrix m = matrix_of(p, q);
        CHECK(m.entries == make_matrix(oracle::plus_px_table(p, q)).entries);
        CHECK(m.order == std::vector<LatticeVec>{v, av + (p - 1) * v, av + p * v, -v, -av - (p - 1) * v, -av - p * v});
    }
    const ContactMatrix a = matrix_of(2, 3);
    CHECK(std::vector<Int>(a.entries.begin(), a.entries.begin() + 6) == std::vector<Int>{0, 2, 1, 0, 0, 0});

    for (Int q : {2, 3, 5}) {
        const ContactMatrix m = matrix_of(0, q);
        CHECK(m.size() == 8);
        CHECK(m.entries == make_matrix(oracle::plus_q_table(q)).entries);
        CHECK(m.order == std::vector<LatticeVec>{v, av, -v, -av, av - v, -av - v, -av + v, av + v});
    }
    const ContactMatrix b = matrix_of(2, 2);
    CHECK(b.entries == make_matrix(oracle::two_x_two_table()).entries);
}

TEST_CASE("contact matrices equal the appendix fixtures")
{
    for (Int q = -20; q <= 20; ++q)
        for (Int p = -10; p <= 10; ++p) {
            if ((q > -2 && q < 2) || !is_disk_like(p, q) || !is_expanding(p, q))
                continue;
            const TilePoly poly = validate_poly(p, q);
            const NeighborGraph g = build_neighbor_graph(poly);
            CHECK(contact_matrix(g, poly) == appendix_contact_matrix(poly));
            CHECK(set_equation_terms(build_gifs(g, poly)) == appendix_set_equations(poly));
        }
}

TEST_CASE("set equations of x^2 + px + q")
{
    const TilePoly a = validate_poly(3, 5);
    const auto terms = appendix_set_equations(a);
    const SetEquationTerm first{v, av + 2 * v, IndexRange{0, 2}}; // j = 0..q-p
    CHECK(std::find(terms.begin(), terms.end(), first) != terms.end());
    const SetEquationTerm second{v, av + 3 * v, IndexRange{0, 1}}; // j = 0..q-p-1
    CHECK(std::find(terms.begin(), terms.end(), second) != terms.end());
}

TEST_CASE("irreducibility")
{
    CHECK(is_irreducible(matrix_of(2, 3)));
    CHECK_FALSE(is_irreducible(matrix_of(0, 2)));
    CHECK(is_irreducible(make_matrix({{1}})));
    CHECK_FALSE(is_irreducible(make_matrix({{1, 1}, {0, 1}})));
    CHECK(is_irreducible(make_matrix({{0, 1}, {1, 0}})));
    CHECK(kind_of([] { make_matrix({{1, 2}, {3}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("CSV and edge-list export")
{
    std::ostringstream csv;
    write_matrix_csv(csv, matrix_of(2, 3));
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "vertex,v,Av+v,Av+2v,-v,-Av-v,-Av-2v");
    std::getline(in, line);
    CHECK(line == "v,0,2,1,0,0,0");
    int rows = 1;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 6);

    const TilePoly a = validate_poly(2, 3);
    std::ostringstream edges;
    write_gifs_text(edges, build_gifs(build_neighbor_graph(a), a));
    CHECK(edges.str().find("v Av+v 1\n") != std::string::npos);
}
