#pragma once
// Independent model of the rank-n tube: nilpotent representations of the
// cyclic quiver with n vertices and arrows v -> v+1 (mod n).  Hom is the
// kernel of the commutation system and Ext^1 is its cokernel, so this road
// never touches the closed-form ray/coray rules and can referee them.
//
// Dictionary: R_i^m corresponds to the uniserial representation with basis
// e_0..e_{m-1}, where e_j sits at vertex (-i - j) mod n and the arrows act
// by e_j -> e_{j-1}, e_0 -> 0.  The sign flip (-i) aligns the cyclic-quiver
// orientation with the tube's Auslander-Reiten translate.

#include <memory>

#include "speclab/quiverrep.hpp"
#include "speclab/tube.hpp"

namespace speclab::tube_oracle {

std::shared_ptr<const quiverrep::Quiver> cyclic_quiver(int n);

// The uniserial nilpotent representation corresponding to r.
quiverrep::Rep oracle_rep(const tube::TubeObject& r);

int oracle_hom_dim(const tube::TubeObject& r, const tube::TubeObject& t);
int oracle_ext_dim(const tube::TubeObject& r, const tube::TubeObject& t);

}  // namespace speclab::tube_oracle
