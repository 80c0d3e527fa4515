#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "tilelab/error.hpp"
#include "tilelab/numbersys.hpp"
#include "tilelab/verify.hpp"

using namespace tilelab;

TEST_CASE("standard grid: three instances per family plus x^2 +- 2x + 2")
{
    const auto grid = standard_grid();
    std::map<Family, int> per_family;
    for (auto [p, q] : grid) {
        const TilePoly poly = validate_poly(p, q);
        CHECK(poly.disk_like);
        CHECK(poly.expanding);
        ++per_family[poly.family];
    }
    CHECK(per_family.size() == 10);
    for (auto [family, count] : per_family) {
        if (family == Family::PlusTwoXPlusTwo || family == Family::MinusTwoXPlusTwo)
            CHECK(count == 1);
        else
            CHECK(count == 3);
    }
}

TEST_CASE("number-system grid")
{
    const auto grid = number_system_grid();
    CHECK_FALSE(grid.empty());
    for (auto [p, q] : grid) {
        CHECK((p >= -6 && p <= 6 && q >= 2 && q <= 12));
        CHECK(is_disk_like(p, q));
    }
    CHECK(std::find(grid.begin(), grid.end(), std::pair<Int, Int>{-6, 10}) != grid.end());
    CHECK(std::find(grid.begin(), grid.end(), std::pair<Int, Int>{3, 3}) == grid.end());
}

TEST_CASE("every suite passes")
{
    for (const std::string& scope : verify_scopes()) {
        CAPTURE(scope);
        const VerifyResult r = run_verify(scope);
        CHECK_FALSE(r.cases.empty());
        for (const auto& c : r.cases) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
    CHECK(run_verify("all").cases.size() == 5 * standard_grid().size() - standard_grid().size() +
                                               run_verify("theorem26").cases.size());
}

TEST_CASE("negating the arithmetic test breaks theorem26")
{
    const VerifyResult r = run_verify("theorem26", [](const TilePoly& p) { return !is_number_system(p); });
    CHECK(r.failures() == r.cases.size());

    std::ostringstream os;
    write_verify_report(os, r);
    CHECK(os.str().find("FAIL theorem26") != std::string::npos);
    CHECK(os.str().find("arithmetic=") != std::string::npos);
}

TEST_CASE("witnesses")
{
    const NumberSystemWitnesses yes = number_system_witnesses(validate_poly(2, 3));
    CHECK(yes.arithmetic);
    CHECK(yes.origin_interior);
    CHECK(yes.division_terminates);
    CHECK(yes.neighbor_expansions);

    const NumberSystemWitnesses no = number_system_witnesses(validate_poly(-2, 2));
    CHECK_FALSE(no.arithmetic);
    CHECK_FALSE(no.origin_interior);
    CHECK_FALSE(no.division_terminates);
    CHECK_FALSE(no.neighbor_expansions);
    CHECK(no.agree());
}

TEST_CASE("unknown scope")
{
    try {
        run_verify("appendixZ");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}
