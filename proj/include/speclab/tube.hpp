#pragma once
// Combinatorics of a stable tube of rank n viewed as a uniserial length
// category.  Objects R_i^m are determined by the regular socle i (a residue
// mod n) and the regular length m >= 1.  Morphism and extension spaces are
// given by closed-form ray/coray rules; arcs on n marked points encode
// bricks, and non-crossing collections of arcs encode wide subcategories.

#include <string>
#include <vector>

#include "speclab/common.hpp"

namespace speclab::tube {

struct TubeObject {
    int rank = 0;    // n of the ambient tube
    int socle = 0;   // residue mod rank
    int length = 1;  // regular length

    bool operator==(const TubeObject& o) const {
        return rank == o.rank && socle == o.socle && length == o.length;
    }
    bool operator<(const TubeObject& o) const {  // canonical order: (socle, length)
        if (socle != o.socle) return socle < o.socle;
        return length < o.length;
    }
    std::string str() const {
        return "R" + std::to_string(socle) + "^" + std::to_string(length);
    }
};

// Residue of the regular top, socle + length - 1 mod rank.
int top(const TubeObject& r);

// The Auslander-Reiten translate rotates the socle: tau R_i^m = R_{i-1}^m.
TubeObject tau(const TubeObject& r);
TubeObject tau_inverse(const TubeObject& r);

// Hom(r, t) is nonzero exactly when the coray through t reaches r: writing
// d0 = (top(r) - socle(t)) mod n, nonzero iff d0 <= length(t) - 1 and
// length(r) >= d0 + 1.  hom_dim counts the full dimension.
bool hom_nonzero(const TubeObject& r, const TubeObject& t);
int hom_dim(const TubeObject& r, const TubeObject& t);

// Ext^1(r, t) = Hom(t, tau r) by the Auslander-Reiten formula.
bool ext_nonzero(const TubeObject& r, const TubeObject& t);
int ext_dim(const TubeObject& r, const TubeObject& t);

// ---------------------------------------------------------------------------
// Arcs on n marked points.  The arc (s, e), s != e, encodes the brick R_s^m
// with m = (e - s) mod n, i.e. composition factors s, s+1, ..., e-1.

struct Arc {
    int start = 0, end = 0;
    bool operator==(const Arc& o) const { return start == o.start && end == o.end; }
    bool operator<(const Arc& o) const {
        if (start != o.start) return start < o.start;
        return end < o.end;
    }
    std::string str() const {
        return "(" + std::to_string(start) + "," + std::to_string(end) + ")";
    }
};

struct ArcCollection {
    int rank = 0;
    std::vector<Arc> arcs;
};

TubeObject brick_of_arc(int rank, const Arc& a);

// Pairwise Hom-orthogonality of the bricks.  Equivalently: distinct starts,
// distinct ends, and no staggered overlap of the clockwise spans.  Sharing
// an endpoint head-to-tail (the end of one arc being the start of another)
// is allowed, and so is proper nesting.
bool is_noncrossing(const ArcCollection& c);

// A non-crossing collection is exceptional when no subset of its arcs closes
// up into a cycle (end-to-start around the circle).  Requires non-crossing
// input.
bool is_exceptional(const ArcCollection& c);

// All objects of regular length <= L, ordered by (socle, length).
std::vector<TubeObject> objects_up_to(int rank, int L);

// Indecomposables of regular length <= L_max in the wide subcategory spanned
// by the bricks of c: objects admitting a filtration with factors among
// those bricks.  Crossing input is rejected.
std::vector<TubeObject> wide_from_arcs(const ArcCollection& c, int L_max);

// Objects of regular length <= L_max with all Hom and Ext^1 into z vanishing.
std::vector<TubeObject> perp_set(const std::vector<TubeObject>& z, int rank, int L_max);

// A finite list Z of objects with  perp_set(Z) = wide_from_arcs(c)  in every
// truncation: the constructive witness that each wide subcategory is a
// two-sided Hom/Ext perpendicular.  Empty collections give the empty list.
std::vector<TubeObject> perp_object(const ArcCollection& c);

// Every non-crossing collection on n marked points (including the empty
// one), each with sorted arcs, ordered by (size, lexicographic).
std::vector<ArcCollection> enumerate_noncrossing(int n);

inline int default_L_max(int rank) { return 3 * rank; }

}  // namespace speclab::tube
