#pragma once
// Finite catalog models of compact-object triangulated categories.  A model
// lists object classes (shift orbits of indecomposables), a graded Hom table
// recording dim Hom(X, shift^i Y) with finite support per pair, and -- in
// declared mode -- trusted spectral data (primes, optionally the thick
// lattice) that stands in for computations the truncated catalog cannot do.
//
// Two modes:
//   locally_finite -- the Hom table is complete and perpendicular operators
//                     are exact; the thick closure is the double
//                     perpendicular.
//   declared       -- the catalog truncates an infinite category; primes and
//                     lattice are input data.  Perpendicular computations are
//                     allowed only when Hom data is present and the model is
//                     flagged as a truncation (results carry that caveat).

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "speclab/common.hpp"

namespace speclab::catmodel {

enum class Mode { locally_finite, declared };

struct ObjectClass {
    int id = 0;
    std::string name;
    int shift_period = 0;  // 0 = free orbit, q > 0 means shift^q X = X
};

// Finitely supported grading shift -> dimension for one ordered pair.  When
// the pair has a finite period (gcd of the two orbit periods), keys are
// residues mod that period.
struct PairGrading {
    std::map<long, long> dims;
};

struct GradedHomTable {
    bool present = false;
    std::vector<std::vector<PairGrading>> pair;  // [src][dst]
};

struct Prime {
    std::string name;
    Mask members = 0;
};

struct LatticeElement {
    Mask members = 0;
};

// A formal direct sum of shifted classes; repeated entries mean multiplicity.
struct FormalObject {
    std::vector<std::pair<int, long>> summands;  // (class id, shift)
};

// Distinguished triangle x -> y -> z -> shift x, recorded as model metadata
// (for the catalogs where the Auslander-Reiten triangles are known).
struct Triangle {
    FormalObject x, y, z;
};

struct Model {
    std::string name;
    Mode mode = Mode::locally_finite;
    std::vector<ObjectClass> classes;
    GradedHomTable hom;
    bool truncated = false;  // declared data cut off from an infinite catalog
    std::vector<Prime> primes;                         // declared mode input
    std::optional<std::vector<LatticeElement>> lattice;  // optional input
    std::vector<Triangle> triangles;                   // metadata, not serialized

    int k() const { return int(classes.size()); }
    Mask all() const { return full_mask(k()); }
    int class_id(const std::string& cname) const;
    int require_class(const std::string& cname) const;
    int pair_period(int src, int dst) const;
    long pair_dim(int src, int dst, long shift) const;
    bool pair_nonzero(int src, int dst) const;
    std::string set_str(Mask m) const;  // e.g. "{P1,S2}" in class-id order
    void validate() const;
};

// {X : Hom(X, shift^i Y) = 0 for all Y in s and all i}, as a class set.
Mask perp_left(const Model& m, Mask s);
// {Y : Hom(X, shift^i Y) = 0 for all X in s and all i}.
Mask perp_right(const Model& m, Mask s);
// Double perpendicular perp_right(perp_left(s)): the thick closure operator.
// Locally finite mode only.
Mask thick_closure(const Model& m, Mask s);

// Parse "A,B[1],2*C" into a formal object (multiplicity prefix "k*",
// shift suffix "[i]").
FormalObject parse_formal(const Model& m, const std::string& text);
Mask classes_of(const FormalObject& o);
// Canonical rendering "2*C[1] + A" style (sorted, multiplicities grouped);
// "0" for the empty object.
std::string format_formal(const Model& m, const FormalObject& o);
// Equality up to reordering of summands.
bool same_formal(const FormalObject& a, const FormalObject& b);

// ---------------------------------------------------------------------------
// Serialization (schema_version 1).

using json = nlohmann::ordered_json;

Model model_from_json(const json& doc);
json model_to_json(const Model& m);
Model load_model(const std::string& path);
void save_model(const Model& m, const std::string& path);

// ---------------------------------------------------------------------------
// Builtin models.

struct BuiltinOptions {
    int n = 3;                           // An size / tube rank
    int p = 5;                           // stmod prime
    int n_max = 4, j_max = 3;            // Kronecker truncation
    std::vector<std::string> lambdas = {"0", "1", "-1", "inf"};
    int bound = 50;                      // specZ: finite primes < bound
    int K = 5;                           // truncation depth of the infinity models
};

// Names: kA2, An, kronecker, tube_n, specZ, A_infinity, D_infinity, stmod_Cp.
Model builtin_model(const std::string& name, const BuiltinOptions& opt = {});
std::vector<std::string> builtin_names();

}  // namespace speclab::catmodel
