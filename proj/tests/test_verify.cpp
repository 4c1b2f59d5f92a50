// The bundled verification suites must pass wholesale, with stable row
// counts, and stay green under alternate truncation options.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "speclab/verify.hpp"

using namespace speclab;
using namespace speclab::catmodel;
using namespace speclab::verify;

namespace {

void require_all_rows(const Report& r) {
    for (const ReportRow& row : r.rows) {
        INFO(row.name, ": expected ", row.expected, ", computed ", row.computed);
        CHECK(row.pass);
        CHECK(row.pass == (row.expected == row.computed));
        CHECK_FALSE(row.name.empty());
        CHECK_FALSE(row.provenance.empty());
    }
}

}  // namespace

TEST_CASE("Kronecker suite") {
    Report r = verify_kronecker();
    CHECK(r.rows.size() == 62);
    CHECK(r.pass());
    CHECK(r.failures() == 0);
    require_all_rows(r);
}

TEST_CASE("comparison-table suite") {
    Report r = verify_table1();
    CHECK(r.rows.size() == 7);
    CHECK(r.pass());
    require_all_rows(r);
}

TEST_CASE("plane-curve suite") {
    Report r = verify_dinfinity();
    CHECK(r.rows.size() == 6);
    CHECK(r.pass());
    require_all_rows(r);
}

TEST_CASE("combined suite concatenates everything") {
    Report r = verify_all();
    CHECK(r.rows.size() == 75);
    CHECK(r.pass());
    CHECK(r.failures() == 0);
}

TEST_CASE("suites stay green under alternate options") {
    BuiltinOptions opt;
    opt.n_max = 3;
    opt.j_max = 2;
    opt.K = 3;
    opt.bound = 20;
    Report k = verify_kronecker(opt);
    CHECK(k.pass());
    Report t = verify_table1(opt);
    CHECK(t.pass());
    Report d = verify_dinfinity(opt);
    CHECK(d.pass());
}

TEST_CASE("report bookkeeping") {
    Report r;
    r.add("a", "1", "1", "p");
    r.add("b", "1", "2", "p");
    CHECK_FALSE(r.pass());
    CHECK(r.failures() == 1);
    CHECK(r.rows[0].pass);
    CHECK_FALSE(r.rows[1].pass);
}
