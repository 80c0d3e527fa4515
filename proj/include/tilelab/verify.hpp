#pragma once

/**
 * @file verify.hpp
 * @brief Fixture and oracle suites run by `tilelab verify`.
 */

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tilelab/algebra.hpp"

namespace tilelab {

struct VerifyCase {
    std::string suite;
    std::string name;
    bool pass = false;
    /// Empty on success, otherwise a readable diff.
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyCase> cases;

    bool all_pass() const;
    std::size_t failures() const;
};

/// Three (p, q) per family, plus x^2 +- 2x + 2.
std::vector<std::pair<Int, Int>> standard_grid();

/// p in [-6, 6], q in [2, 12], disk-like and expanding.
std::vector<std::pair<Int, Int>> number_system_grid();

using NumberSystemPredicate = std::function<bool(const TilePoly&)>;

/// The four equivalent conditions for the digit set to give a number system.
struct NumberSystemWitnesses {
    bool arithmetic = false;
    bool origin_interior = false;
    /// Division algorithm terminates and round-trips on the box |l|_inf <= radius.
    bool division_terminates = false;
    /// Every neighbor has a finite expansion with top digit 1.
    bool neighbor_expansions = false;

    bool agree() const
    {
        return arithmetic == origin_interior && arithmetic == division_terminates &&
               arithmetic == neighbor_expansions;
    }
};

NumberSystemWitnesses number_system_witnesses(const TilePoly& poly, const NumberSystemPredicate& arithmetic,
                                              Int radius = 10);
NumberSystemWitnesses number_system_witnesses(const TilePoly& poly, Int radius = 10);

/// appendixA, appendixB, appendixC, theorem26, theorem39, all.
const std::vector<std::string>& verify_scopes();

/// Throws InvalidArgument for an unknown scope.
VerifyResult run_verify(std::string_view scope);
VerifyResult run_verify(std::string_view scope, const NumberSystemPredicate& arithmetic);

/// One "PASS suite name" / "FAIL suite name" line per case, diffs indented below.
void write_verify_report(std::ostream& os, const VerifyResult& result);

} // namespace tilelab
