// Finite-space primitives, the two spectra of a catalog model, the
// support/radical/Psi classification machinery, thick lattices, and the
// comparison spaces built from lattices.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "speclab/spectra.hpp"

using namespace speclab;
using namespace speclab::catmodel;
using namespace speclab::spectra;

namespace {

Model An_model(int n) {
    BuiltinOptions o;
    o.n = n;
    return builtin_model("An", o);
}

Model stmod_model(int p) {
    BuiltinOptions o;
    o.p = p;
    return builtin_model("stmod_Cp", o);
}

Model specZ10() {
    BuiltinOptions o;
    o.bound = 10;
    return builtin_model("specZ", o);
}

Model tube2() {
    BuiltinOptions o;
    o.n = 2;
    return builtin_model("tube_n", o);
}

// Every classification row must be internally consistent, the rows must
// biject with the radical elements of the thick lattice, and both closure
// operators must be idempotent.
void check_classification(const Model& m) {
    Spectrum sp = shift_spectrum(m);
    auto rows = classify(sp);
    std::set<Mask> row_points, row_thicks;
    for (const auto& r : rows) {
        CHECK(psi(sp, r.points) == r.thick);
        CHECK(support_of_thick(sp, r.thick) == r.points);
        CHECK(radical(sp, r.thick) == r.thick);
        row_points.insert(r.points);
        row_thicks.insert(r.thick);
    }
    CHECK(row_points.size() == rows.size());
    CHECK(row_thicks.size() == rows.size());
    ThickLattice lat = enumerate_thicks(m);
    size_t radical_elems = 0;
    for (Mask t : lat.elements) {
        CHECK(radical(sp, radical(sp, t)) == radical(sp, t));
        if (radical(sp, t) == t) {
            ++radical_elems;
            CHECK(row_thicks.count(t) == 1);
        }
    }
    CHECK(radical_elems == rows.size());
    for (Mask u : row_points) CHECK(psi(sp, support_of_thick(sp, psi(sp, u))) == psi(sp, u));
}

}  // namespace

TEST_CASE("finite-space primitives on a three-point chain") {
    FiniteSpace sp;
    sp.names = {"a", "b", "c"};
    sp.payloads = {bit(0), bit(1), bit(2)};
    sp.closed_basis = {0b001, 0b011, 0b111};
    CHECK(point_closure(sp, 0) == 0b001);
    CHECK(point_closure(sp, 1) == 0b011);
    CHECK(point_closure(sp, 2) == 0b111);
    CHECK(closure(sp, 0b100) == 0b111);
    CHECK(closure(sp, 0) == 0);
    CHECK(is_closed(sp, 0b011));
    CHECK_FALSE(is_closed(sp, 0b010));
    CHECK(specializes(sp, 0, 2));
    CHECK_FALSE(specializes(sp, 2, 0));
    CHECK(specializes(sp, 1, 1));
    CHECK(is_T0(sp));
    CHECK_FALSE(is_discrete(sp));
    CHECK_FALSE(is_indiscrete(sp));
    CHECK_FALSE(is_sierpinski(sp));  // wrong cardinality
    CHECK(closed_family(sp) == std::vector<Mask>{0, 0b001, 0b011, 0b111});
    CHECK_THROWS_AS(closed_family(sp, 3), guard_error);
}

TEST_CASE("two-point spaces and points outside every basis set") {
    FiniteSpace sier;
    sier.names = {"closed", "generic"};
    sier.payloads = {bit(0), bit(1)};
    sier.closed_basis = {0b01, 0b11};
    CHECK(is_sierpinski(sier));
    CHECK(is_T0(sier));

    FiniteSpace indis;
    indis.names = {"x", "y"};
    indis.payloads = {bit(0), bit(1)};
    indis.closed_basis = {0b11};
    CHECK(is_indiscrete(indis));
    CHECK_FALSE(is_T0(indis));
    Quotient q = kolmogorov_quotient(indis);
    CHECK(q.space.n() == 1);
    CHECK(q.space.names[0] == "x~y");
    CHECK(q.space.payloads[0] == 0b11);
    CHECK(q.projection == std::vector<int>{0, 0});
    CHECK(is_T0(q.space));

    // A point lying in no basis set closes up to the whole space.
    FiniteSpace loose;
    loose.names = {"u", "v"};
    loose.payloads = {bit(0), bit(1)};
    loose.closed_basis = {0b01};
    CHECK(point_closure(loose, 1) == 0b11);
    CHECK(closed_family(loose) == std::vector<Mask>{0, 0b01, 0b11});

    FiniteSpace empty;
    CHECK(closed_family(empty) == std::vector<Mask>{0});
    CHECK(is_T0(empty));
}

TEST_CASE("homeomorphism checking under an explicit point map") {
    FiniteSpace a;
    a.names = {"p", "q"};
    a.payloads = {bit(0), bit(1)};
    a.closed_basis = {0b01, 0b11};  // p closed, q generic
    FiniteSpace b;
    b.names = {"r", "s"};
    b.payloads = {bit(0), bit(1)};
    b.closed_basis = {0b10, 0b11};  // s closed, r generic
    CHECK(homeomorphic_under(a, b, {1, 0}));        // swap matches the roles
    CHECK_FALSE(homeomorphic_under(a, b, {0, 1}));  // identity reverses them
    CHECK_FALSE(homeomorphic_under(a, b, {0, 0}));  // not a bijection
    CHECK_FALSE(homeomorphic_under(a, b, {0}));     // wrong arity
    FiniteSpace indis;
    indis.names = {"x", "y"};
    indis.payloads = {bit(0), bit(1)};
    indis.closed_basis = {0b11};
    CHECK_FALSE(homeomorphic_under(a, indis, {0, 1}));
    CHECK_FALSE(homeomorphic_under(a, indis, {1, 0}));
}

TEST_CASE("kA2 shift-spectrum: three closed points") {
    Model m = builtin_model("kA2");
    Spectrum sp = shift_spectrum(m);
    REQUIRE(sp.space.n() == 3);
    CHECK(sp.space.names == std::vector<std::string>{"{P1}", "{P2}", "{S2}"});
    CHECK(sp.space.payloads == std::vector<Mask>{bit(0), bit(1), bit(2)});
    CHECK(sp.class_support == std::vector<Mask>{0b110, 0b101, 0b011});
    CHECK(sp.space.closed_basis == std::vector<Mask>{0b011, 0b101, 0b110});
    CHECK(is_discrete(sp.space));
    CHECK(closed_family(sp.space).size() == 8);
}

TEST_CASE("kA2 shift-homological spectrum and its Kolmogorov quotient") {
    Model m = builtin_model("kA2");
    Spectrum hs = shift_homological_spectrum(m);
    REQUIRE(hs.space.n() == 3);
    CHECK(hs.space.names == std::vector<std::string>{"P1", "P2", "S2"});
    CHECK(hs.class_support == std::vector<Mask>{0b011, 0b110, 0b101});
    CHECK(hs.space.closed_basis == std::vector<Mask>{0b011, 0b101, 0b110});
    CHECK(is_discrete(hs.space));
    Quotient q = kolmogorov_quotient(hs.space);
    CHECK(q.space.n() == 3);  // already T0, nothing collapses
    CHECK(kq_agrees_with_sspec(m));
    CHECK_THROWS_AS(shift_homological_spectrum(specZ10()), model_error);
}

TEST_CASE("kA2 classification and the failure of support to preserve meets") {
    Model m = builtin_model("kA2");
    Spectrum sp = shift_spectrum(m);
    auto rows = classify(sp);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].points == 0);
    CHECK(rows[0].thick == 0);
    CHECK(rows[4].points == sp.space.whole());
    CHECK(rows[4].thick == m.all());
    check_classification(m);
    // Supports intersect to {point 2} while the thick intersection is empty,
    // so support preserves joins but not meets.
    Mask a = bit(0), b = bit(1);
    CHECK((a & b) == 0);
    CHECK(support_of_thick(sp, a & b) == 0);
    CHECK((support_of_thick(sp, a) & support_of_thick(sp, b)) == bit(2));
    CHECK(support_of_thick(sp, a | b) ==
          (support_of_thick(sp, a) | support_of_thick(sp, b)));
}

TEST_CASE("kA2 thick lattice and comparison spaces") {
    Model m = builtin_model("kA2");
    ThickLattice lat = enumerate_thicks(m);
    REQUIRE(lat.elements.size() == 5);
    CHECK(lat.elements ==
          std::vector<Mask>{0, bit(0), bit(1), bit(2), full_mask(3)});
    CHECK(lattice_covers(lat) ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(lattice_find(lat, bit(1)) == 2);
    CHECK(lattice_find(lat, bit(0) | bit(1)) == -1);

    FiniteSpace ma = matsui_spectrum(m, lat);
    REQUIRE(ma.n() == 3);
    CHECK(ma.names == std::vector<std::string>{"{P1}", "{P2}", "{S2}"});
    CHECK(is_discrete(ma));
    Spectrum sp = shift_spectrum(m);
    CHECK(homeomorphic_under(ma, sp.space, {0, 1, 2}));

    FiniteSpace fs = fspcnt_space(m, lat);
    REQUIRE(fs.n() == 5);
    CHECK(fs.closed_basis ==
          std::vector<Mask>{bit(4), bit(1) | bit(4), bit(2) | bit(4), bit(3) | bit(4),
                            full_mask(5)});
    CHECK(closed_family(fs).size() == 10);
}

TEST_CASE("interval catalogs: Catalan-sized lattices, discrete spectra") {
    std::vector<size_t> lattice_sizes = {2, 5, 14, 42};
    std::vector<size_t> cover_counts = {1, 6, 28, 120};
    for (int n = 1; n <= 4; ++n) {
        Model m = An_model(n);
        ThickLattice lat = enumerate_thicks(m);
        CHECK(lat.elements.size() == lattice_sizes[n - 1]);
        CHECK(lattice_covers(lat).size() == cover_counts[n - 1]);
        Spectrum sp = shift_spectrum(m);
        CHECK(sp.space.n() == m.k());  // one prime per class
        CHECK(is_discrete(sp.space));
        CHECK(shift_homological_spectrum(m).space.n() == m.k());
        CHECK(kq_agrees_with_sspec(m));
        for (bool b : is_discrete_criterion(m)) CHECK(b);
        CHECK(classify(sp).size() == lat.elements.size());  // every thick is radical
        check_classification(m);
        // The unique-minimal-cover space reproduces the shift-spectrum.
        FiniteSpace ma = matsui_spectrum(m, lat);
        REQUIRE(ma.n() == sp.space.n());
        std::vector<int> f(ma.n(), -1);
        for (int i = 0; i < ma.n(); ++i)
            for (int j = 0; j < sp.space.n(); ++j)
                if (sp.space.names[j] == ma.names[i]) f[i] = j;
        CHECK(homeomorphic_under(ma, sp.space, f));
    }
    Model a3 = An_model(3);
    Spectrum sp3 = shift_spectrum(a3);
    CHECK(sp3.space.names ==
          std::vector<std::string>{"{[1..1],[3..3]}", "{[1..3],[2..2]}",
                                   "{[1..1],[1..2],[2..2]}", "{[1..1],[1..3],[2..3]}",
                                   "{[1..2],[1..3],[3..3]}", "{[2..2],[2..3],[3..3]}"});
    CHECK(closed_family(fspcnt_space(a3, enumerate_thicks(a3))).size() == 234);
}

TEST_CASE("integer local-to-global catalog: primes verbatim, all thicks radical") {
    Model m = specZ10();
    Spectrum sp = shift_spectrum(m);
    REQUIRE(sp.space.n() == 5);
    CHECK(sp.space.names ==
          std::vector<std::string>{"P(2)", "P(3)", "P(5)", "P(7)", "P(0)"});
    CHECK(sp.class_support ==
          std::vector<Mask>{bit(0), bit(1), bit(2), bit(3), full_mask(5)});
    CHECK(closed_family(sp.space).size() == 17);
    ThickLattice lat = enumerate_thicks(m);
    CHECK(lat.elements.size() == 17);
    CHECK(lattice_covers(lat).size() == 33);
    auto rows = classify(sp);
    CHECK(rows.size() == 17);
    for (Mask t : lat.elements) CHECK(radical(sp, t) == t);
    check_classification(m);

    // The support of a torsion class is its own point; the generic class is
    // dense.
    CHECK(support(m, parse_formal(m, "Z/3"), sp) == bit(1));
    CHECK(support(m, parse_formal(m, "Z/2, Z/7"), sp) == (bit(0) | bit(3)));
    CHECK(support(m, parse_formal(m, "Z"), sp) == full_mask(5));
    CHECK(support(m, parse_formal(m, "0"), sp) == 0);
    FormalObject foreign;
    foreign.summands = {{99, 0}};
    CHECK_THROWS_AS(support(m, foreign, sp), model_error);

    // The unique-minimal-cover space matches the declared primes after the
    // evident payload identification.
    FiniteSpace ma = matsui_spectrum(m, lat);
    REQUIRE(ma.n() == 5);
    std::vector<int> f(5, -1);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (sp.space.payloads[j] == ma.payloads[i]) f[i] = j;
    CHECK(f == std::vector<int>{3, 2, 1, 0, 4});
    CHECK(homeomorphic_under(ma, sp.space, f));
    CHECK(closed_family(fspcnt_space(m, lat)).size() == 169);
}

TEST_CASE("truncated coordinate-axes catalog: a non-radical thick subcategory") {
    Model m = builtin_model("A_infinity");
    Spectrum sp = shift_spectrum(m);
    REQUIRE(sp.space.n() == 1);
    CHECK(sp.space.names[0] == "alpha(L)");
    // The zero subcategory is not radical: the radical of the empty set is
    // the intersection of all primes, which still holds the finite classes.
    CHECK(radical(sp, 0) == full_mask(5));
    CHECK(radical(sp, full_mask(5)) == full_mask(5));
    CHECK(radical(sp, m.all()) == m.all());
    ThickLattice lat = enumerate_thicks(m);
    REQUIRE(lat.elements.size() == 3);
    CHECK(lat.elements == std::vector<Mask>{0, full_mask(5), full_mask(6)});
    auto rows = classify(sp);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].points == 0);
    CHECK(rows[0].thick == full_mask(5));
    CHECK(rows[1].points == bit(0));
    CHECK(rows[1].thick == full_mask(6));
    check_classification(m);
    FiniteSpace ma = matsui_spectrum(m, lat);
    REQUIRE(ma.n() == 2);
    CHECK(is_sierpinski(ma));
    FiniteSpace fs = fspcnt_space(m, lat);
    CHECK(fs.n() == 3);
    CHECK(closed_family(fs).size() == 4);
    CHECK_THROWS_AS(is_discrete_criterion(m), model_error);
}

TEST_CASE("plane-curve catalog declares no lattice") {
    BuiltinOptions o;
    o.K = 2;
    Model m = builtin_model("D_infinity", o);
    Spectrum sp = shift_spectrum(m);
    CHECK(sp.space.n() == 1);
    CHECK_THROWS_WITH_AS(enumerate_thicks(m),
                         "model D_infinity(2) declares no thick-subcategory lattice",
                         model_error);
}

TEST_CASE("stable-module catalogs: one fat point") {
    for (int p : {3, 5, 7}) {
        Model m = stmod_model(p);
        Spectrum sp = shift_spectrum(m);
        REQUIRE(sp.space.n() == 1);
        CHECK(sp.space.names[0] == "{}");
        CHECK(sp.space.payloads[0] == 0);
        CHECK(is_discrete(sp.space));  // one point: discrete and indiscrete at once
        CHECK(is_indiscrete(sp.space));
        Spectrum hs = shift_homological_spectrum(m);
        CHECK(hs.space.n() == m.k());
        CHECK(is_indiscrete(hs.space));
        Quotient q = kolmogorov_quotient(hs.space);
        CHECK(q.space.n() == 1);
        CHECK(kq_agrees_with_sspec(m));
        ThickLattice lat = enumerate_thicks(m);
        CHECK(lat.elements == std::vector<Mask>{0, m.all()});
        CHECK(classify(sp).size() == 2);
        check_classification(m);
        // Thick closure of any single class sweeps up everything, so the
        // per-class criterion stays false as soon as there are two classes.
        auto crit = is_discrete_criterion(m);
        for (bool b : crit) CHECK(b == (m.k() == 1));
    }
    Quotient q = kolmogorov_quotient(shift_homological_spectrum(stmod_model(5)).space);
    CHECK(q.space.names[0] == "<1>~<2>");
    CHECK(q.space.payloads[0] == full_mask(2));
}

TEST_CASE("rank-two tube catalog: the two spectra genuinely differ") {
    Model m = tube2();
    Spectrum sp = shift_spectrum(m);
    REQUIRE(sp.space.n() == 5);
    CHECK(sp.space.names ==
          std::vector<std::string>{"{}", "{R0^1}", "{R1^1}", "{R0^2,R0^4,R0^6}",
                                   "{R1^2,R1^4,R1^6}"});
    ThickLattice lat = enumerate_thicks(m);
    REQUIRE(lat.elements.size() == 6);
    Mask evens0 = bit(1) | bit(3) | bit(5), evens1 = bit(7) | bit(9) | bit(11);
    CHECK(lat.elements ==
          std::vector<Mask>{0, bit(0), bit(6), evens0, evens1, m.all()});
    CHECK(lattice_covers(lat).size() == 8);
    // The unique-minimal-cover space loses the dense point, so it cannot be
    // homeomorphic to the five-point shift-spectrum.
    FiniteSpace ma = matsui_spectrum(m, lat);
    CHECK(ma.n() == 4);
    CHECK(closed_family(sp.space).size() == 17);
    CHECK(closed_family(ma).size() == 16);
    CHECK(closed_family(fspcnt_space(m, lat)).size() == 18);
    CHECK(kq_agrees_with_sspec(m));
    CHECK(shift_homological_spectrum(m).space.n() == 12);
    int singletons = 0;
    for (bool b : is_discrete_criterion(m)) singletons += b;
    CHECK(singletons == 2);  // only the two simples close to themselves
    check_classification(m);
}

TEST_CASE("jobs do not change enumeration results") {
    Model m = An_model(3);
    ThickLattice one = enumerate_thicks(m, 1);
    ThickLattice four = enumerate_thicks(m, 4);
    CHECK(one.elements == four.elements);
    Spectrum sp = shift_spectrum(m);
    auto r1 = classify(sp, 1);
    auto r3 = classify(sp, 3);
    REQUIRE(r1.size() == r3.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].points == r3[i].points);
        CHECK(r1[i].thick == r3[i].thick);
    }
}

TEST_CASE("guards bound the enumerations and the environment raises them") {
    unsetenv("SPECLAB_GUARD");
    Model m = builtin_model("kA2");
    setenv("SPECLAB_GUARD", "4", 1);
    CHECK_THROWS_WITH_AS(enumerate_thicks(m),
                         "thick-subcategory enumeration would visit 8 candidates (guard 4; "
                         "raise with SPECLAB_GUARD)",
                         guard_error);
    CHECK_THROWS_AS(classify(shift_spectrum(m)), guard_error);
    setenv("SPECLAB_GUARD", "1024", 1);
    CHECK(enumerate_thicks(m).elements.size() == 5);
    unsetenv("SPECLAB_GUARD");
    // A twenty-one class catalog overflows the default candidate guard.
    CHECK_THROWS_AS(enumerate_thicks(An_model(6)), guard_error);
}
