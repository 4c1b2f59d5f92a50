#include "speclab/quiverrep.hpp"

#include <algorithm>

namespace speclab::quiverrep {

bool Quiver::is_acyclic() const {
    // Kahn's algorithm on the vertex set.
    std::vector<int> indeg(vertices, 0);
    for (auto& [s, t] : arrows) ++indeg[t];
    std::vector<int> queue;
    for (int v = 0; v < vertices; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (auto& [s, t] : arrows)
            if (s == v && --indeg[t] == 0) queue.push_back(t);
    }
    return seen == vertices;
}

namespace {

template <class F>
void require_same_quiver(const RepT<F>& m, const RepT<F>& n) {
    if (!m.quiver || !n.quiver) throw model_error("representation without a quiver");
    if (m.quiver != n.quiver && !(*m.quiver == *n.quiver))
        throw model_error("hom of representations over different quivers");
    if (int(m.dims.size()) != m.quiver->vertices || int(n.dims.size()) != n.quiver->vertices)
        throw model_error("representation dimension vector does not match its quiver");
}

}  // namespace

template <class F>
int hom_unknowns(const RepT<F>& m, const RepT<F>& n) {
    int u = 0;
    for (int v = 0; v < m.quiver->vertices; ++v) u += m.dims[v] * n.dims[v];
    return u;
}

template <class F>
linalg::Matrix<F> commutation_matrix(const RepT<F>& m, const RepT<F>& n) {
    require_same_quiver(m, n);
    const Quiver& q = *m.quiver;
    // Unknowns: entries of phi_v (a dims_N[v] x dims_M[v] matrix), vertex by
    // vertex, row-major.  Equations: for each arrow a: i->j the entries of
    // phi_j . M_a - N_a . phi_i, a dims_N[j] x dims_M[i] matrix.
    std::vector<int> offset(q.vertices + 1, 0);
    for (int v = 0; v < q.vertices; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    int unknowns = offset[q.vertices];
    int rows = 0;
    for (auto& [i, j] : q.arrows) rows += n.dims[j] * m.dims[i];

    linalg::Matrix<F> d(rows, unknowns);
    int row = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [i, j] = q.arrows[a];
        const auto& ma = m.maps[a];  // dims_M[j] x dims_M[i]
        const auto& na = n.maps[a];  // dims_N[j] x dims_N[i]
        for (int r = 0; r < n.dims[j]; ++r)
            for (int c = 0; c < m.dims[i]; ++c) {
                // (phi_j . M_a)[r,c] = sum_k phi_j[r,k] M_a[k,c]
                for (int k = 0; k < m.dims[j]; ++k)
                    d.at(row, offset[j] + r * m.dims[j] + k) =
                        d.at(row, offset[j] + r * m.dims[j] + k) + ma.at(k, c);
                // -(N_a . phi_i)[r,c] = -sum_k N_a[r,k] phi_i[k,c]
                for (int k = 0; k < n.dims[i]; ++k)
                    d.at(row, offset[i] + k * m.dims[i] + c) =
                        d.at(row, offset[i] + k * m.dims[i] + c) - na.at(r, k);
                ++row;
            }
    }
    return d;
}

template <class F>
int hom_dim(const RepT<F>& m, const RepT<F>& n) {
    require_same_quiver(m, n);
    linalg::Matrix<F> d = commutation_matrix(m, n);
    return hom_unknowns(m, n) == 0 ? 0 : d.cols - linalg::rank(d);
}

template <class F>
int cokernel_dim(const RepT<F>& m, const RepT<F>& n) {
    require_same_quiver(m, n);
    linalg::Matrix<F> d = commutation_matrix(m, n);
    return d.rows - linalg::rank(d);
}

template <class F>
std::vector<std::vector<linalg::Matrix<F>>> hom_basis(const RepT<F>& m, const RepT<F>& n) {
    require_same_quiver(m, n);
    const Quiver& q = *m.quiver;
    linalg::Matrix<F> d = commutation_matrix(m, n);
    std::vector<std::vector<F>> vecs = linalg::kernel_basis(d);
    std::vector<std::vector<linalg::Matrix<F>>> out;
    for (auto& v : vecs) {
        std::vector<linalg::Matrix<F>> phi;
        int off = 0;
        for (int vert = 0; vert < q.vertices; ++vert) {
            linalg::Matrix<F> p(n.dims[vert], m.dims[vert]);
            for (int r = 0; r < p.rows; ++r)
                for (int c = 0; c < p.cols; ++c) p.at(r, c) = v[off + r * p.cols + c];
            off += p.rows * p.cols;
            phi.push_back(std::move(p));
        }
        out.push_back(std::move(phi));
    }
    return out;
}

long long euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
    long long s = 0;
    for (int v = 0; v < q.vertices; ++v) s += 1LL * d[v] * e[v];
    for (auto& [i, j] : q.arrows) s -= 1LL * d[i] * e[j];
    return s;
}

int ext1_dim(const Rep& m, const Rep& n) {
    require_same_quiver(m, n);
    if (!m.quiver->is_acyclic())
        throw model_error("ext1_dim requires an acyclic quiver; use cokernel_dim instead");
    long long e = hom_dim(m, n) - euler_form(*m.quiver, m.dims, n.dims);
    if (e < 0)
        throw model_error("internal inconsistency: negative Ext^1 dimension");
    return int(e);
}

std::pair<int, int> graded_hom_pair(const Rep& m, const Rep& n) {
    return {hom_dim(m, n), ext1_dim(m, n)};
}

// ---------------------------------------------------------------------------
// Catalogs.

Lambda Lambda::parse(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return Lambda{true, 0};
    Lambda l;
    try {
        l.value = mpq_class(s);
    } catch (const std::invalid_argument&) {
        throw usage_error("cannot parse projective-line parameter '" + s + "'");
    }
    l.value.canonicalize();
    return l;
}

std::string Lambda::str() const { return infinite ? "inf" : value.get_str(); }

std::vector<CatalogObject> catalog_An(int n) {
    if (n < 0) throw usage_error("catalog_An requires n >= 0");
    std::vector<CatalogObject> out;
    if (n == 0) return out;
    auto q = std::make_shared<Quiver>();
    q->vertices = n;
    for (int v = 0; v + 1 < n; ++v) q->arrows.push_back({v, v + 1});
    int pos = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            CatalogObject o;
            o.name = "[" + std::to_string(a) + ".." + std::to_string(b) + "]";
            o.family = Family::interval;
            o.index = pos++;
            o.a = a;
            o.b = b;
            o.rep.quiver = q;
            o.rep.dims.assign(n, 0);
            for (int v = a; v <= b; ++v) o.rep.dims[v - 1] = 1;
            for (int v = 0; v + 1 < n; ++v) {
                linalg::Matrix<mpq_class> m(o.rep.dims[v + 1], o.rep.dims[v]);
                if (m.rows == 1 && m.cols == 1) m.at(0, 0) = 1;
                o.rep.maps.push_back(std::move(m));
            }
            out.push_back(std::move(o));
        }
    return out;
}

namespace {

std::shared_ptr<const Quiver> kronecker_quiver() {
    auto q = std::make_shared<Quiver>();
    q->vertices = 2;
    q->arrows = {{0, 1}, {0, 1}};
    return q;
}

}  // namespace

KroneckerCatalog catalog_kronecker(int n_max, int j_max, const std::vector<Lambda>& lambdas) {
    if (n_max < 0 || j_max < 0) throw usage_error("catalog_kronecker requires n_max, j_max >= 0");
    for (size_t i = 0; i < lambdas.size(); ++i)
        for (size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw model_error("duplicate regular parameter " + lambdas[i].str());

    KroneckerCatalog cat;
    cat.n_max = n_max;
    cat.j_max = j_max;
    cat.lambdas = lambdas;
    cat.dim_convention =
        "preprojective P_n = (n, n+1), preinjective Q_n = (n+1, n), regular R_lambda^j = (j, j)";
    auto q = kronecker_quiver();

    auto make = [&](int d1, int d2) {
        Rep r;
        r.quiver = q;
        r.dims = {d1, d2};
        r.maps.assign(2, linalg::Matrix<mpq_class>(d2, d1));
        return r;
    };

    for (int n = 0; n <= n_max; ++n) {  // P_n = (n, n+1): A = [I; 0], B = [0; I]
        CatalogObject o;
        o.name = "P" + std::to_string(n);
        o.family = Family::preprojective;
        o.index = n;
        o.rep = make(n, n + 1);
        for (int k = 0; k < n; ++k) {
            o.rep.maps[0].at(k, k) = 1;
            o.rep.maps[1].at(k + 1, k) = 1;
        }
        cat.objects.push_back(std::move(o));
    }
    for (int n = 0; n <= n_max; ++n) {  // Q_n = (n+1, n): A = [I | 0], B = [0 | I]
        CatalogObject o;
        o.name = "Q" + std::to_string(n);
        o.family = Family::preinjective;
        o.index = n;
        o.rep = make(n + 1, n);
        for (int k = 0; k < n; ++k) {
            o.rep.maps[0].at(k, k) = 1;
            o.rep.maps[1].at(k, k + 1) = 1;
        }
        cat.objects.push_back(std::move(o));
    }
    for (const Lambda& l : lambdas) {  // R_lambda^j = (j, j): A = I, B = J_j(lambda)
        for (int j = 1; j <= j_max; ++j) {
            CatalogObject o;
            o.name = "R(" + l.str() + ")^" + std::to_string(j);
            o.family = Family::regular;
            o.index = j;
            o.lambda = l;
            o.rep = make(j, j);
            for (int k = 0; k < j; ++k) {
                if (l.infinite) {
                    o.rep.maps[1].at(k, k) = 1;          // B = I
                    if (k + 1 < j) o.rep.maps[0].at(k + 1, k) = 1;  // A = J_j(0)
                } else {
                    o.rep.maps[0].at(k, k) = 1;          // A = I
                    o.rep.maps[1].at(k, k) = l.value;    // B = J_j(lambda)
                    if (k + 1 < j) o.rep.maps[1].at(k + 1, k) = 1;
                }
            }
            cat.objects.push_back(std::move(o));
        }
    }

    if (n_max >= 1) {
        const Rep& p0 = cat.objects[0].rep;
        const Rep& p1 = cat.objects[1].rep;
        if (hom_dim(p0, p1) == 0)
            throw model_error("Kronecker dimension convention failed validation: Hom(P_0, P_1) = 0");
    }
    return cat;
}

// Explicit instantiations for the fields used across the library and tests.
template linalg::Matrix<mpq_class> commutation_matrix(const Rep&, const Rep&);
template int hom_unknowns(const Rep&, const Rep&);
template int hom_dim(const Rep&, const Rep&);
template int cokernel_dim(const Rep&, const Rep&);
template std::vector<std::vector<linalg::Matrix<mpq_class>>> hom_basis(const Rep&, const Rep&);

using F2 = linalg::Fp<2>;
using F3 = linalg::Fp<3>;
using F5 = linalg::Fp<5>;
template linalg::Matrix<F2> commutation_matrix(const RepT<F2>&, const RepT<F2>&);
template int hom_unknowns(const RepT<F2>&, const RepT<F2>&);
template int hom_dim(const RepT<F2>&, const RepT<F2>&);
template int cokernel_dim(const RepT<F2>&, const RepT<F2>&);
template std::vector<std::vector<linalg::Matrix<F2>>> hom_basis(const RepT<F2>&, const RepT<F2>&);
template linalg::Matrix<F3> commutation_matrix(const RepT<F3>&, const RepT<F3>&);
template int hom_dim(const RepT<F3>&, const RepT<F3>&);
template int cokernel_dim(const RepT<F3>&, const RepT<F3>&);
template linalg::Matrix<F5> commutation_matrix(const RepT<F5>&, const RepT<F5>&);
template int hom_dim(const RepT<F5>&, const RepT<F5>&);
template int cokernel_dim(const RepT<F5>&, const RepT<F5>&);

}  // namespace speclab::quiverrep
