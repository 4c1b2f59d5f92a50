#include "speclab/tube_oracle.hpp"

#include <map>
#include <vector>

namespace speclab::tube_oracle {

namespace {
int mod(int x, int n) { return ((x % n) + n) % n; }
}

std::shared_ptr<const quiverrep::Quiver> cyclic_quiver(int n) {
    static std::map<int, std::shared_ptr<const quiverrep::Quiver>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto q = std::make_shared<quiverrep::Quiver>();
    q->vertices = n;
    for (int v = 0; v < n; ++v) q->arrows.push_back({v, mod(v + 1, n)});
    cache[n] = q;
    return q;
}

quiverrep::Rep oracle_rep(const tube::TubeObject& r) {
    int n = r.rank, m = r.length;
    int socle_vertex = mod(-r.socle, n);
    quiverrep::Rep rep;
    rep.quiver = cyclic_quiver(n);
    rep.dims.assign(n, 0);
    // Basis element e_j lives at vertex (socle_vertex - j) mod n; within a
    // vertex, basis slots are ordered by increasing j.
    std::vector<int> vertex_of(m), slot_of(m);
    for (int j = 0; j < m; ++j) {
        int v = mod(socle_vertex - j, n);
        vertex_of[j] = v;
        slot_of[j] = rep.dims[v]++;
    }
    for (int v = 0; v < n; ++v)
        rep.maps.push_back(linalg::Matrix<mpq_class>(rep.dims[mod(v + 1, n)], rep.dims[v]));
    for (int j = 1; j < m; ++j) {
        int v = vertex_of[j];  // arrow a_v: v -> v+1 sends e_j to e_{j-1}
        rep.maps[v].at(slot_of[j - 1], slot_of[j]) = 1;
    }
    return rep;
}

int oracle_hom_dim(const tube::TubeObject& r, const tube::TubeObject& t) {
    if (r.rank != t.rank) throw model_error("tube rank mismatch in oracle");
    return quiverrep::hom_dim(oracle_rep(r), oracle_rep(t));
}

int oracle_ext_dim(const tube::TubeObject& r, const tube::TubeObject& t) {
    if (r.rank != t.rank) throw model_error("tube rank mismatch in oracle");
    return quiverrep::cokernel_dim(oracle_rep(r), oracle_rep(t));
}

}  // namespace speclab::tube_oracle
