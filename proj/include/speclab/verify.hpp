#pragma once
// Verification suites binding the builtin models to their expected spectra:
// the Kronecker catalog's orthogonality and support formulas, the
// comparison-table cells computable from this library's spaces and
// lattices, and the declared infinity-type models' radical behaviour.

#include <string>
#include <vector>

#include "speclab/catmodel.hpp"

namespace speclab::verify {

struct ReportRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string provenance;
};

struct Report {
    std::vector<ReportRow> rows;
    bool pass() const;
    int failures() const;
    // pass = (expected == computed)
    void add(const std::string& name, const std::string& expected,
             const std::string& computed, const std::string& provenance);
};

// Orthogonality, prime-membership and support formulas of the truncated
// Kronecker catalog, all recomputed by linear algebra over the
// representations (the generic point is declared data and marked so).
Report verify_kronecker(const catmodel::BuiltinOptions& opt = {});

// The comparison-table cells computable here: the shift-spectrum row for
// kA2 / Kronecker / A-infinity / specZ, and the Matsui row for kA2 /
// A-infinity / specZ.
Report verify_table1(const catmodel::BuiltinOptions& opt = {});

// D-infinity: the zero subcategory is not radical; the only radical thick
// subcategories are alpha(L) and the whole category.
Report verify_dinfinity(const catmodel::BuiltinOptions& opt = {});

// All three suites concatenated.
Report verify_all(const catmodel::BuiltinOptions& opt = {});

}  // namespace speclab::verify
