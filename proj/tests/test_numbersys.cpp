#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tilelab/error.hpp"
#include "tilelab/neighbors.hpp"
#include "tilelab/numbersys.hpp"

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

std::vector<std::pair<Int, Int>> disk_like_grid()
{
    std::vector<std::pair<Int, Int>> out;
    for (Int q = -16; q <= 16; ++q)
        for (Int p = -8; p <= 8; ++p)
            if ((q <= -2 || q >= 2) && is_disk_like(p, q) && is_expanding(p, q))
                out.emplace_back(p, q);
    return out;
}

LatticeVec matrix_eval(const std::vector<Int>& digits, const TilePoly& poly)
{
    const auto [g, d] = oracle::eval_digits(digits, poly.p, poly.q);
    return {g, d};
}

} // namespace

TEST_CASE("number-system predicate")
{
    CHECK(is_number_system(validate_poly(1, 2)));
    CHECK_FALSE(is_number_system(validate_poly(-2, 2)));
    CHECK_FALSE(is_number_system(validate_poly(0, -2)));
    CHECK(is_number_system(validate_poly(-1, 3)));
}

TEST_CASE("represent examples")
{
    CHECK(represent(-v, validate_poly(2, 3)).digits.digits == std::vector<Int>{2, 2, 1});
    CHECK(represent(-v, validate_poly(-1, 2)).digits.digits == std::vector<Int>{1, 1, 0, 1});
    CHECK(represent(LatticeVec{}, validate_poly(3, 5)).digits.empty());
    CHECK(kind_of([] { represent(v, validate_poly(-2, 2)); }) == ErrorKind::NotANumberSystem);
    CHECK(kind_of([] { represent(v, validate_poly(0, -2)); }) == ErrorKind::NotANumberSystem);
}

TEST_CASE("represent round-trips and is unique on a box")
{
    for (auto [p, q] : disk_like_grid()) {
        const TilePoly poly = validate_poly(p, q);
        if (!is_number_system(poly))
            continue;
        CAPTURE(p);
        CAPTURE(q);
        std::set<std::vector<Int>> words;
        for (Int g = -10; g <= 10; ++g)
            for (Int d = -10; d <= 10; ++d) {
                const LatticeVec ell{g, d};
                const Representation r = represent(ell, poly);
                CHECK(r.subject == ell);
                CHECK(matrix_eval(r.digits.digits, poly) == ell);
                CHECK(eval_representation(r, poly) == ell);
                for (Int a : r.digits.digits)
                    CHECK((a >= 0 && a < q));
                if (!ell.is_zero())
                    CHECK(r.digits.digits.back() != 0);
                CHECK(words.insert(r.digits.digits).second);
            }
    }
}

TEST_CASE("short digit words evaluate to distinct points and match represent")
{
    for (auto [p, q] : {std::pair<Int, Int>{1, 2}, {0, 3}, {2, 3}, {-1, 2}, {2, 2}, {0, 2}}) {
        CAPTURE(p);
        CAPTURE(q);
        const TilePoly poly = validate_poly(p, q);
        const int len = q == 2 ? 12 : 6;
        // Words of length <= len without trailing zeros.
        std::size_t expected = 1;
        for (int k = 1; k <= len; ++k)
            expected += static_cast<std::size_t>((q - 1) * std::pow(double(q), k - 1));
        const auto table = oracle::enumerate_words(p, q, len);
        CHECK(table.size() == expected);
        for (const auto& [pt, word] : table)
            CHECK(represent(LatticeVec{pt.first, pt.second}, poly).digits.digits == word);
    }
}

TEST_CASE("division algorithm fails exactly outside number systems")
{
    for (auto [p, q] : disk_like_grid()) {
        const TilePoly poly = validate_poly(p, q);
        bool all = true;
        for (Int g = -10; g <= 10 && all; ++g)
            for (Int d = -10; d <= 10 && all; ++d)
                all = try_represent(LatticeVec{g, d}, poly).has_value();
        CAPTURE(p);
        CAPTURE(q);
        CHECK(all == is_number_system(poly));
    }
}

TEST_CASE("neighbor digit forms")
{
    CHECK(neighbor_digit_form(-v, validate_poly(0, 2)).digits.digits == std::vector<Int>{1, 0, 1});
    CHECK(neighbor_digit_form(-av - v, validate_poly(1, 2)).digits.digits == std::vector<Int>{1, 0, 1});
    CHECK(neighbor_digit_form(-av - 2 * v, validate_poly(2, 2)).digits.digits == std::vector<Int>{0, 1, 1});
    CHECK(kind_of([] { neighbor_digit_form(3 * v, validate_poly(2, 3)); }) == ErrorKind::NotANeighbor);
    CHECK(kind_of([] { neighbor_digit_form(v, validate_poly(-2, 2)); }) == ErrorKind::NotANumberSystem);

    for (auto [p, q] : disk_like_grid()) {
        const TilePoly poly = validate_poly(p, q);
        if (!is_number_system(poly))
            continue;
        CAPTURE(p);
        CAPTURE(q);
        for (LatticeVec ell : build_neighbor_graph(poly).vertices) {
            const Representation r = neighbor_digit_form(ell, poly);
            CHECK(matrix_eval(r.digits.digits, poly) == ell);
            CHECK(r == represent(ell, poly));
            CHECK(r.digits.digits.back() == 1);
        }
    }
}

TEST_CASE("neighbor delta forms")
{
    CHECK(neighbor_delta_form(av + 2 * v, validate_poly(2, 3)).digits == std::vector<Int>{2, 1});
    CHECK(neighbor_delta_form(av + 2 * v, validate_poly(2, 2)).digits == std::vector<Int>{0, 1, 1, 1});
    CHECK(neighbor_delta_form(-v, validate_poly(2, 3)).digits == std::vector<Int>{-1});
    CHECK(kind_of([] { neighbor_delta_form(5 * v, validate_poly(2, 3)); }) == ErrorKind::NotANeighbor);

    for (auto [p, q] : disk_like_grid()) {
        const TilePoly poly = validate_poly(p, q);
        CAPTURE(p);
        CAPTURE(q);
        std::size_t longest = 0;
        for (LatticeVec ell : build_neighbor_graph(poly).vertices) {
            const RadixWord w = neighbor_delta_form(ell, poly);
            REQUIRE_FALSE(w.empty());
            CHECK(std::abs(w.digits.back()) == 1);
            for (Int b : w.digits)
                CHECK(std::abs(b) <= poly.abs_q() - 1);
            CHECK(matrix_eval(w.digits, poly) == ell);
            longest = std::max(longest, w.size());
        }
        if (p == 2 && q == 2)
            CHECK(longest == 4);
        else if (p == -2 && q == 2)
            CHECK(longest == 3);
        else
            CHECK(longest == 2);
    }
}

TEST_CASE("x^2 - 2x + 2 has a shorter sign-matched form for Av - 2v")
{
    const TilePoly d = validate_poly(-2, 2);
    CHECK(matrix_eval({0, -1, 1}, d) == av - 2 * v);
    CHECK(matrix_eval({0, 1, 1, 1}, validate_poly(2, 2)) == av + 2 * v);
}
