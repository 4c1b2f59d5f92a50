#pragma once
// Finite-dimensional quiver representations over an exact field, with the
// two derived functors a hereditary situation needs: Hom as the kernel of
// the commutation system, and Ext^1.  Also the two concrete catalogs used
// throughout: interval modules of the linearly oriented A_n quiver and the
// standard preprojective / preinjective / regular family of the Kronecker
// quiver.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "speclab/common.hpp"
#include "speclab/linalg.hpp"

namespace speclab::quiverrep {

struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based

    bool is_acyclic() const;
    bool operator==(const Quiver& o) const {
        return vertices == o.vertices && arrows == o.arrows;
    }
};

template <class F>
struct RepT {
    std::shared_ptr<const Quiver> quiver;
    std::vector<int> dims;                    // one per vertex
    std::vector<linalg::Matrix<F>> maps;      // maps[a]: dims[src] -> dims[tgt]
};

using Rep = RepT<mpq_class>;

// The linear map  (phi_v)_v  |->  (phi_j . M_a - N_a . phi_i)_{a: i->j}
// whose kernel is Hom(M, N) and whose cokernel is Ext^1(M, N).
template <class F>
linalg::Matrix<F> commutation_matrix(const RepT<F>& m, const RepT<F>& n);

// Total dimension of the unknown space (sum over vertices of dim M_v * dim N_v).
template <class F>
int hom_unknowns(const RepT<F>& m, const RepT<F>& n);

template <class F>
int hom_dim(const RepT<F>& m, const RepT<F>& n);

// dim coker of the commutation map; equals Ext^1 for path-algebra modules.
template <class F>
int cokernel_dim(const RepT<F>& m, const RepT<F>& n);

// Basis of Hom(M, N), each element given as one matrix per vertex.
template <class F>
std::vector<std::vector<linalg::Matrix<F>>> hom_basis(const RepT<F>& m, const RepT<F>& n);

long long euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e);

// Ext^1 via the hereditary identity  hom - <dim M, dim N>;  the quiver must
// be acyclic.  A negative value would mean inconsistent data and raises.
int ext1_dim(const Rep& m, const Rep& n);

// (hom, ext1) for a pair over an acyclic quiver.
std::pair<int, int> graded_hom_pair(const Rep& m, const Rep& n);

// ---------------------------------------------------------------------------
// Catalogs.

enum class Family { interval, preprojective, preinjective, regular };

// A point of the projective line: either a field element or infinity.
struct Lambda {
    bool infinite = false;
    mpq_class value = 0;

    static Lambda parse(const std::string& s);
    std::string str() const;
    bool operator==(const Lambda& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<(const Lambda& o) const {  // finite values first, then infinity
        if (infinite != o.infinite) return !infinite;
        return value < o.value;
    }
};

struct CatalogObject {
    std::string name;
    Family family = Family::interval;
    int index = 0;                  // n of P_n / Q_n, regular length of R_lambda^j,
                                    // or position in the interval catalog
    int a = 0, b = 0;               // interval bounds for A_n objects (1-based)
    std::optional<Lambda> lambda;   // parameter of a regular object
    Rep rep;
};

// Interval modules [a, b] of the linearly oriented quiver 1 -> 2 -> ... -> n,
// ordered by (a, b).  n = 0 yields the empty catalog.
std::vector<CatalogObject> catalog_An(int n);

struct KroneckerCatalog {
    int n_max = 0;
    int j_max = 0;
    std::vector<Lambda> lambdas;
    std::string dim_convention;     // records which dimension vectors are used
    std::vector<CatalogObject> objects;  // P_0..P_n_max, Q_0..Q_n_max, regulars
};

// Standard truncated Kronecker catalog: preprojectives P_0..P_{n_max} with
// dimension vectors (n, n+1), preinjectives Q_0..Q_{n_max} with (n+1, n), and
// regulars R_lambda^j (j <= j_max) for each listed parameter.  Duplicate
// parameters are rejected.  The stated dimension convention is validated by
// checking hom_dim(P_0, P_1) != 0.
KroneckerCatalog catalog_kronecker(int n_max, int j_max, const std::vector<Lambda>& lambdas);

}  // namespace speclab::quiverrep
