#include "speclab/rankfn.hpp"

#include <algorithm>
#include <numeric>

#include "speclab/linalg.hpp"

namespace speclab::rankfn {

long RankFunction::of_class(int id) const {
    if (id < 0 || id >= int(values.size()))
        throw model_error("rank function: class id " + std::to_string(id) + " out of range");
    return values[id];
}

long RankFunction::of(const catmodel::FormalObject& o) const {
    long total = 0;
    for (auto& [id, shift] : o.summands) total += of_class(id);
    return total;
}

RankFunction add(const RankFunction& a, const RankFunction& b) {
    if (a.values.size() != b.values.size())
        throw model_error("rank functions over different catalogs");
    RankFunction r;
    for (size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] + b.values[i]);
    return r;
}

RankFunction scale(long c, const RankFunction& a) {
    RankFunction r;
    for (long v : a.values) r.values.push_back(c * v);
    return r;
}

namespace {

void require_theta_model(const catmodel::Model& m) {
    if (m.mode != catmodel::Mode::locally_finite)
        throw model_error("theta needs a locally finite model; " + m.name +
                          " is declared data");
    if (!m.hom.present) throw model_error("model " + m.name + " carries no Hom data");
}

long graded_total(const catmodel::Model& m, int src, int dst) {
    // Sum of dim Hom(src, shift^i dst) over all integer shifts i.  When the
    // pair has a finite period, any nonzero dimension repeats at every
    // period step, so the total is infinite.
    const auto& dims = m.hom.pair[src][dst].dims;
    long total = 0;
    bool any = false;
    for (auto& [s, d] : dims) {
        total += d;
        any = any || d != 0;
    }
    if (any && m.pair_period(src, dst) > 0)
        throw model_error("theta: the pair (" + m.classes[src].name + ", " +
                          m.classes[dst].name +
                          ") has periodic nonzero Hom, so the total graded dimension "
                          "is infinite");
    return total;
}

}  // namespace

RankFunction theta_upper(const catmodel::Model& m, const catmodel::FormalObject& a) {
    require_theta_model(m);
    RankFunction rho;
    rho.values.assign(m.k(), 0);
    for (auto& [id, shift] : a.summands) {
        if (id < 0 || id >= m.k())
            throw model_error("theta: class id " + std::to_string(id) +
                              " is foreign to model " + m.name);
        for (int x = 0; x < m.k(); ++x) rho.values[x] += graded_total(m, x, id);
    }
    return rho;
}

RankFunction theta_lower(const catmodel::Model& m, const catmodel::FormalObject& a) {
    require_theta_model(m);
    RankFunction rho;
    rho.values.assign(m.k(), 0);
    for (auto& [id, shift] : a.summands) {
        if (id < 0 || id >= m.k())
            throw model_error("theta: class id " + std::to_string(id) +
                              " is foreign to model " + m.name);
        for (int x = 0; x < m.k(); ++x) rho.values[x] += graded_total(m, id, x);
    }
    return rho;
}

Mask kernel(const RankFunction& rho, const catmodel::Model& m) {
    if (int(rho.values.size()) != m.k())
        throw model_error("rank function over a different catalog than " + m.name);
    Mask ker = 0;
    for (int c = 0; c < m.k(); ++c)
        if (rho.values[c] == 0) ker |= bit(c);
    if (m.mode == catmodel::Mode::locally_finite &&
        catmodel::thick_closure(m, ker) != ker)
        throw model_error("kernel " + m.set_str(ker) +
                          " is not closed under the thick closure; the input is not a "
                          "rank function on " + m.name);
    return ker;
}

bool AxiomReport::pass() const {
    for (const AxiomCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

AxiomReport check_axioms(const RankFunction& rho, const catmodel::Model& m,
                         const std::vector<catmodel::Triangle>& triangles) {
    if (int(rho.values.size()) != m.k())
        throw model_error("rank function over a different catalog than " + m.name);
    for (size_t t = 0; t < triangles.size(); ++t) {
        bool known = false;
        for (const catmodel::Triangle& ref : m.triangles)
            if (catmodel::same_formal(triangles[t].x, ref.x) &&
                catmodel::same_formal(triangles[t].y, ref.y) &&
                catmodel::same_formal(triangles[t].z, ref.z)) {
                known = true;
                break;
            }
        if (!known)
            throw usage_error("triangle #" + std::to_string(t) +
                              " is not part of the verified triangle metadata of " + m.name);
    }

    AxiomReport report;
    bool nonneg = true;
    for (long v : rho.values) nonneg = nonneg && v >= 0;
    report.checks.push_back({"nonnegative", "all classes", nonneg});

    bool shift_ok = true;
    for (int c = 0; c < m.k(); ++c)
        shift_ok = shift_ok && rho.of({{{c, 7}}}) == rho.of({{{c, 0}}});
    report.checks.push_back({"shift-invariant", "all classes, sample shift 7", shift_ok});

    bool additive = true;
    for (int c = 0; c < m.k(); ++c)
        for (int d = 0; d < m.k(); ++d)
            additive = additive &&
                       rho.of({{{c, 0}, {d, 0}}}) == rho.of_class(c) + rho.of_class(d);
    report.checks.push_back({"additive", "all two-class sums", additive});

    for (const catmodel::Triangle& t : triangles) {
        long rx = rho.of(t.x), ry = rho.of(t.y), rz = rho.of(t.z);
        std::string inst = catmodel::format_formal(m, t.x) + " -> " +
                           catmodel::format_formal(m, t.y) + " -> " +
                           catmodel::format_formal(m, t.z);
        report.checks.push_back({"subadditive", inst, ry <= rx + rz});
    }
    return report;
}

std::vector<RankFunction> irreducible_candidates(const catmodel::Model& m) {
    require_theta_model(m);
    std::vector<RankFunction> out;
    for (int c = 0; c < m.k(); ++c) {
        RankFunction rho = theta_upper(m, {{{c, 0}}});
        long g = 0;
        for (long v : rho.values) g = std::gcd(g, v);
        if (g > 1)
            for (long& v : rho.values) v /= g;
        out.push_back(std::move(rho));
    }
    return out;
}

namespace {

bool dfs_decompose(const std::vector<RankFunction>& cands, std::vector<long>& res,
                   size_t i, std::vector<long>& mults, std::uint64_t& budget) {
    if (budget == 0)
        throw guard_error("decomposition search exceeded the candidate guard "
                          "(raise with SPECLAB_GUARD)");
    --budget;
    size_t k = res.size();
    if (i == cands.size()) {
        for (long r : res)
            if (r != 0) return false;
        return true;
    }
    long cap = -1;
    for (size_t c = 0; c < k; ++c)
        if (cands[i].values[c] > 0) {
            long q = res[c] / cands[i].values[c];
            cap = cap < 0 ? q : std::min(cap, q);
        }
    if (cap < 0) cap = 0;  // the zero candidate contributes nothing
    for (long n = 0; n <= cap; ++n) {
        if (n > 0)
            for (size_t c = 0; c < k; ++c) res[c] -= cands[i].values[c];
        mults[i] = n;
        if (dfs_decompose(cands, res, i + 1, mults, budget)) return true;
    }
    for (size_t c = 0; c < k; ++c) res[c] += cap * cands[i].values[c];
    mults[i] = 0;
    return false;
}

}  // namespace

Decomposition decompose(const RankFunction& rho, const catmodel::Model& m) {
    std::vector<RankFunction> cands = irreducible_candidates(m);
    if (int(rho.values.size()) != m.k())
        throw model_error("rank function over a different catalog than " + m.name);
    for (long v : rho.values)
        if (v < 0) return {false, {}, "negative values cannot be decomposed"};

    Decomposition dec;
    int k = m.k(), nc = int(cands.size());
    linalg::Matrix<mpq_class> mat(k, nc);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < nc; ++i) mat.at(c, i) = cands[i].values[c];

    if (linalg::rank(mat) == nc) {
        // Independent candidates: the rational solution is unique, so it
        // suffices to check consistency, integrality and nonnegativity.
        std::vector<mpq_class> b, x;
        for (long v : rho.values) b.emplace_back(v);
        if (!linalg::solve(mat, b, x)) {
            dec.note = "outside the span of the candidates";
            return dec;
        }
        std::vector<long> mults;
        for (const mpq_class& xi : x) {
            if (xi.get_den() != 1 || xi < 0) {
                dec.note = "not a nonnegative integer combination of the candidates";
                return dec;
            }
            mults.push_back(long(xi.get_num().get_si()));
        }
        dec.ok = true;
        dec.multiplicities = std::move(mults);
        return dec;
    }

    // Dependent candidates: bounded search, first solution in canonical
    // candidate order.
    std::vector<long> res = rho.values, mults(nc, 0);
    std::uint64_t budget = candidate_guard();
    if (dfs_decompose(cands, res, 0, mults, budget)) {
        dec.ok = true;
        dec.multiplicities = std::move(mults);
    } else {
        dec.note = "no nonnegative integer combination of the candidates matches";
    }
    return dec;
}

}  // namespace speclab::rankfn
