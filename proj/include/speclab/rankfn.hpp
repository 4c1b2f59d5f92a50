#pragma once
// Integral rank functions on a catalog model: shift-invariant, additive,
// triangle-subadditive assignments.  The workhorses are the theta functions
// of a fixed object A (total graded Hom dimension into / out of A), their
// kernels, gcd-normalized irreducible candidates, and exact decomposition
// of a rank function as a nonnegative integer combination of candidates.

#include <string>
#include <vector>

#include "speclab/catmodel.hpp"
#include "speclab/common.hpp"

namespace speclab::rankfn {

// Values per object class; constant on shift orbits by construction,
// extended additively to formal objects.
struct RankFunction {
    std::vector<long> values;  // [class id]

    long of_class(int id) const;
    long of(const catmodel::FormalObject& o) const;
    bool operator==(const RankFunction& o) const { return values == o.values; }
};

RankFunction add(const RankFunction& a, const RankFunction& b);
RankFunction scale(long c, const RankFunction& a);

// X |-> sum_i dim Hom(X, shift^i A).  Pairs with a finite shift period and
// any nonzero dimension have infinite total -- a model error.
RankFunction theta_upper(const catmodel::Model& m, const catmodel::FormalObject& a);
// The mirror X |-> sum_i dim Hom(A, shift^i X).
RankFunction theta_lower(const catmodel::Model& m, const catmodel::FormalObject& a);

// {X : rho(X) = 0}.  In locally finite mode the result must be a fixed
// point of the thick closure; otherwise rho is not a rank function on this
// model and a model error is raised.
Mask kernel(const RankFunction& rho, const catmodel::Model& m);

struct AxiomCheck {
    std::string axiom;     // "nonnegative" / "shift-invariant" / "additive" /
                           // "subadditive"
    std::string instance;  // what was evaluated
    bool pass = false;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass() const;
};

// Validate the rank-function axioms: nonnegativity, shift invariance,
// additivity on two-class sums, and subadditivity rho(Y) <= rho(X)+rho(Z)
// on each supplied triangle.  Every supplied triangle must appear in the
// model's triangle metadata; anything else is a usage error.
AxiomReport check_axioms(const RankFunction& rho, const catmodel::Model& m,
                         const std::vector<catmodel::Triangle>& triangles);

// One candidate per catalog class: theta_upper of the class divided by the
// gcd of its values.  Locally finite mode only.
std::vector<RankFunction> irreducible_candidates(const catmodel::Model& m);

struct Decomposition {
    bool ok = false;
    std::vector<long> multiplicities;  // per candidate, when ok
    std::string note;                  // reason, when not ok
};

// Express rho as a nonnegative integer combination of the irreducible
// candidates: exact linear solve when the candidates are independent, else
// bounded canonical-order search.  Failure is reported, not thrown.
Decomposition decompose(const RankFunction& rho, const catmodel::Model& m);

}  // namespace speclab::rankfn
