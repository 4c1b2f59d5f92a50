#pragma once
// Spectra and classification machinery over catalog models: the
// shift-spectrum and shift-homological spectrum as finite topological
// spaces, supports, radicals, the Psi operator, the thick-subcategory
// lattice, and the comparison spaces computed from lattices.
//
// Finite spaces are stored by a closed basis.  The topology it generates
// has closed sets exactly the down-sets of the specialization preorder
// (x below y iff x lies in every basis set containing y), so closures,
// separation predicates and Kolmogorov quotients need no materialization;
// the full closed-set family is materialized only on demand, guarded.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "speclab/catmodel.hpp"
#include "speclab/common.hpp"

namespace speclab::spectra {

// ---------------------------------------------------------------------------
// Finite topological spaces.

struct FiniteSpace {
    std::vector<std::string> names;    // one per point
    std::vector<Mask> payloads;        // point payload: member-class masks
    std::vector<Mask> closed_basis;    // masks over point indices

    int n() const { return int(names.size()); }
    Mask whole() const { return full_mask(n()); }
};

// Smallest closed set containing the point / the set.
Mask point_closure(const FiniteSpace& sp, int x);
Mask closure(const FiniteSpace& sp, Mask s);
bool is_closed(const FiniteSpace& sp, Mask s);

// x specializes to y (x lies in the closure of y).
bool specializes(const FiniteSpace& sp, int x, int y);

bool is_T0(const FiniteSpace& sp);
bool is_discrete(const FiniteSpace& sp);
bool is_indiscrete(const FiniteSpace& sp);
bool is_sierpinski(const FiniteSpace& sp);

// All closed sets (unions of point closures plus the empty set), in
// canonical order.  Guarded by `limit` on the family size.
std::vector<Mask> closed_family(const FiniteSpace& sp,
                                std::uint64_t limit = materialize_guard());

// Whether the point map f (a's points -> b's points) is a bijection
// inducing a homeomorphism; for finite spaces this is equivalent to
// preserving and reflecting specialization.
bool homeomorphic_under(const FiniteSpace& a, const FiniteSpace& b,
                        const std::vector<int>& f);

struct Quotient {
    FiniteSpace space;
    std::vector<int> projection;  // original point -> quotient point
};

// Identify points with equal closures; the result is T_0.
Quotient kolmogorov_quotient(const FiniteSpace& sp);

// ---------------------------------------------------------------------------
// Spectra of a model.

// A spectrum remembers the catalog size and, per catalog class, the basis
// support set (mask over points).
struct Spectrum {
    int k = 0;
    FiniteSpace space;
    std::vector<Mask> class_support;  // [class id] -> mask over points
};

// Points are the shift-prime thick subcategories: in locally finite mode
// the deduplicated left perpendiculars of single classes, in declared mode
// the declared primes verbatim.  Closed basis: the class supports.
Spectrum shift_spectrum(const catmodel::Model& m);

// Points are the catalog classes; the basis set of C collects the classes
// receiving a nonzero shifted Hom from C.  Locally finite mode only.
Spectrum shift_homological_spectrum(const catmodel::Model& m);

// Points whose prime fails to contain some summand class of C.
Mask support(const catmodel::Model& m, const catmodel::FormalObject& c,
             const Spectrum& sp);
// Union of the member supports of a thick set of classes.
Mask support_of_thick(const Spectrum& sp, Mask thick);

// Intersection of all primes containing the given class set (the whole
// catalog when no prime does).
Mask radical(const Spectrum& sp, Mask thick);
// Classes whose support lies inside the given point set; always radical.
Mask psi(const Spectrum& sp, Mask points);

struct ClassifyRow {
    Mask points = 0;  // parameter subset of spectrum points
    Mask thick = 0;   // the radical thick subcategory Psi(points)
};

// The mutually inverse correspondence between radical thick subcategories
// and their parameter point sets, by guarded enumeration of point subsets.
std::vector<ClassifyRow> classify(const Spectrum& sp, int jobs = 1);

// ---------------------------------------------------------------------------
// Thick subcategory lattices and comparison spaces.

struct ThickLattice {
    std::vector<Mask> elements;  // canonical order: size, then lexicographic
};

// All thick subcategories: fixed points of the double-perpendicular closure
// (locally finite, guarded at 18 classes) or the declared lattice.
ThickLattice enumerate_thicks(const catmodel::Model& m, int jobs = 1);

int lattice_find(const ThickLattice& lat, Mask members);  // index or -1

// Covering pairs (lower index, upper index) of the inclusion order.
std::vector<std::pair<int, int>> lattice_covers(const ThickLattice& lat);

// Points: lattice elements whose set of strictly larger elements has a
// unique minimal element.  Closed basis over catalog classes C:
// {points P : C not in P}.
FiniteSpace matsui_spectrum(const catmodel::Model& m, const ThickLattice& lat);

// Points: all lattice elements; closed basis: the up-sets of elements.
FiniteSpace fspcnt_space(const catmodel::Model& m, const ThickLattice& lat);

// Per class A: whether the thick closure of {A} contains no other class.
// Locally finite mode only.
std::vector<bool> is_discrete_criterion(const catmodel::Model& m);

// For locally finite models: the natural comparison map from the Kolmogorov
// quotient of the shift-homological spectrum to the shift-spectrum, sending
// a class orbit to the left perpendicular of a representative.  True when
// the map is well defined and a homeomorphism.
bool kq_agrees_with_sspec(const catmodel::Model& m);

}  // namespace speclab::spectra
