#include "speclab/verify.hpp"

#include <algorithm>

#include "speclab/quiverrep.hpp"
#include "speclab/spectra.hpp"

namespace speclab::verify {

bool Report::pass() const { return failures() == 0; }

int Report::failures() const {
    int n = 0;
    for (const ReportRow& r : rows)
        if (!r.pass) ++n;
    return n;
}

void Report::add(const std::string& name, const std::string& expected,
                 const std::string& computed, const std::string& provenance) {
    rows.push_back({name, expected, computed, expected == computed, provenance});
}

namespace {

// Shared helpers over the truncated Kronecker catalog.
struct KroneckerData {
    catmodel::BuiltinOptions opt;
    std::vector<quiverrep::Lambda> lambdas;
    quiverrep::KroneckerCatalog cat;
    catmodel::Model model;
    // graded pair (Hom, Ext1) dimensions per ordered pair of catalog indices
    std::vector<std::vector<std::pair<int, int>>> pairs;

    explicit KroneckerData(const catmodel::BuiltinOptions& o)
        : opt(o), model(catmodel::builtin_model("kronecker", o)) {
        for (const std::string& s : o.lambdas) lambdas.push_back(quiverrep::Lambda::parse(s));
        cat = quiverrep::catalog_kronecker(o.n_max, o.j_max, lambdas);
        int k = int(cat.objects.size());
        pairs.assign(k, std::vector<std::pair<int, int>>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                pairs[i][j] = quiverrep::graded_hom_pair(cat.objects[i].rep, cat.objects[j].rep);
    }

    int k() const { return int(cat.objects.size()); }
    int index_of(const std::string& name) const {
        for (int i = 0; i < k(); ++i)
            if (cat.objects[i].name == name) return i;
        throw model_error("kronecker verification: no catalog object " + name);
    }
    bool orthogonal_to(int x, int a) const {
        return pairs[x][a].first == 0 && pairs[x][a].second == 0;
    }
    // {X : Hom(X, shift^i A) = 0 for all i}, by linear algebra.
    Mask alpha(int a) const {
        Mask m = 0;
        for (int x = 0; x < k(); ++x)
            if (orthogonal_to(x, a)) m |= bit(x);
        return m;
    }
    Mask family_mask(quiverrep::Family f) const {
        Mask m = 0;
        for (int i = 0; i < k(); ++i)
            if (cat.objects[i].family == f) m |= bit(i);
        return m;
    }
    Mask regulars_except(const quiverrep::Lambda& l) const {
        Mask m = 0;
        for (int i = 0; i < k(); ++i)
            if (cat.objects[i].family == quiverrep::Family::regular &&
                !(*cat.objects[i].lambda == l))
                m |= bit(i);
        return m;
    }
};

std::string point_set_str(const spectra::Spectrum& sp, Mask points) {
    std::string out = "{";
    bool first = true;
    for (int j = 0; j < sp.space.n(); ++j)
        if (has(points, j)) {
            if (!first) out += ",";
            out += sp.space.names[j];
            first = false;
        }
    return out + "}";
}

std::string space_shape(const spectra::FiniteSpace& sp) {
    std::string out = std::to_string(sp.n()) + (sp.n() == 1 ? " point" : " points");
    if (spectra::is_discrete(sp)) out += ", discrete";
    else if (spectra::is_sierpinski(sp)) out += ", Sierpinski";
    else if (spectra::is_indiscrete(sp)) out += ", indiscrete";
    return out;
}

// Shape check against a truncated integer spectrum: every point except one
// is a closed point, the remaining (generic) point has closure the whole
// space.
std::string dedekind_shape(const spectra::FiniteSpace& sp) {
    int closed = 0, generic = 0, other = 0;
    for (int x = 0; x < sp.n(); ++x) {
        Mask cl = spectra::point_closure(sp, x);
        if (cl == bit(x)) ++closed;
        else if (cl == sp.whole()) ++generic;
        else ++other;
    }
    std::string out = std::to_string(closed) + " closed points + " +
                      std::to_string(generic) + " generic point";
    if (other > 0) out += " + " + std::to_string(other) + " other";
    return out;
}

const char* kLinAlg = "orthogonality computed from the representations";
const char* kDeclared = "declared data (defining object outside the truncation)";
const char* kSupport = "support computed against the declared primes";

}  // namespace

Report verify_kronecker(const catmodel::BuiltinOptions& opt) {
    Report rep;
    KroneckerData kd(opt);
    const int nmax = opt.n_max, jmax = opt.j_max;

    // Hom/Ext vanishing patterns on the preprojective family.
    {
        bool hom_ok = true, ext_ok = true;
        for (int mm = 0; mm <= nmax; ++mm)
            for (int nn = 0; nn <= nmax; ++nn) {
                auto [h, e] = kd.pairs[kd.index_of("P" + std::to_string(mm))]
                                      [kd.index_of("P" + std::to_string(nn))];
                hom_ok = hom_ok && ((h != 0) == (mm <= nn));
                ext_ok = ext_ok && ((e != 0) == (mm >= nn + 2));
            }
        rep.add("kronecker/Hom(Pm,Pn) nonzero iff m <= n", "holds on all pairs",
                hom_ok ? "holds on all pairs" : "fails", kLinAlg);
        rep.add("kronecker/Ext1(Pm,Pn) nonzero iff m >= n+2", "holds on all pairs",
                ext_ok ? "holds on all pairs" : "fails", kLinAlg);
    }

    // alpha([A]) = the classes with no shifted Hom into A, per defining
    // object inside the truncation.
    for (int nn = 0; nn <= nmax; ++nn) {
        Mask expect = nn < nmax ? bit(kd.index_of("P" + std::to_string(nn + 1))) : Mask(0);
        rep.add("kronecker/alpha([P" + std::to_string(nn) + "]) within truncation",
                kd.model.set_str(expect), kd.model.set_str(kd.alpha(kd.index_of("P" + std::to_string(nn)))),
                kLinAlg);
    }
    for (int nn = 1; nn <= nmax; ++nn)
        rep.add("kronecker/alpha([Q" + std::to_string(nn) + "]) within truncation",
                kd.model.set_str(bit(kd.index_of("Q" + std::to_string(nn - 1)))),
                kd.model.set_str(kd.alpha(kd.index_of("Q" + std::to_string(nn)))), kLinAlg);
    rep.add("kronecker/alpha([Q0]) within truncation", kd.model.set_str(bit(kd.index_of("P0"))),
            kd.model.set_str(kd.alpha(kd.index_of("Q0"))), kLinAlg);
    for (const auto& l : kd.lambdas)
        for (int j = 1; j <= jmax; ++j)
            rep.add("kronecker/alpha([R(" + l.str() + ")^" + std::to_string(j) + "])",
                    kd.model.set_str(kd.regulars_except(l)),
                    kd.model.set_str(kd.alpha(kd.index_of("R(" + l.str() + ")^" + std::to_string(j)))),
                    kLinAlg);
    {
        // The generic point: declared, never computed.
        int p = -1;
        for (size_t i = 0; i < kd.model.primes.size(); ++i)
            if (kd.model.primes[i].name == "reg_all") p = int(i);
        rep.add("kronecker/alpha([G]) = all regular classes",
                kd.model.set_str(kd.family_mask(quiverrep::Family::regular)),
                p < 0 ? "missing" : kd.model.set_str(kd.model.primes[p].members), kDeclared);
    }

    // Declared prime membership agrees with computed vanishing.
    for (const catmodel::Prime& p : kd.model.primes) {
        if (p.name == "reg_all") continue;  // covered above, declared
        std::string defining;
        if (p.name.rfind("add(P", 0) == 0) {
            int mch = std::stoi(p.name.substr(5, p.name.size() - 6));
            defining = mch == 0 ? "Q0" : "P" + std::to_string(mch - 1);
        } else if (p.name.rfind("add(Q", 0) == 0) {
            int mch = std::stoi(p.name.substr(5, p.name.size() - 6));
            if (mch == nmax) {
                rep.add("kronecker/prime " + p.name + " members", kd.model.set_str(p.members),
                        kd.model.set_str(p.members), kDeclared);
                continue;
            }
            defining = "Q" + std::to_string(mch + 1);
        } else {  // reg_except(lambda)
            defining = "R(" + p.name.substr(11, p.name.size() - 12) + ")^1";
        }
        rep.add("kronecker/prime " + p.name + " members", kd.model.set_str(p.members),
                kd.model.set_str(kd.alpha(kd.index_of(defining))), kLinAlg);
    }

    // Support formulas over the declared spectrum.
    spectra::Spectrum sp = spectra::shift_spectrum(kd.model);
    Mask pq_points = 0;
    auto point_named = [&](const std::string& n) {
        for (int j = 0; j < sp.space.n(); ++j)
            if (sp.space.names[j] == n) return j;
        throw model_error("kronecker verification: no spectrum point " + n);
    };
    for (int j = 0; j < sp.space.n(); ++j)
        if (sp.space.names[j].rfind("add(", 0) == 0) pq_points |= bit(j);
    for (int i = 0; i < kd.k(); ++i) {
        const auto& obj = kd.cat.objects[i];
        Mask expect;
        if (obj.family == quiverrep::Family::regular)
            expect = pq_points | bit(point_named("reg_except(" + obj.lambda->str() + ")"));
        else
            expect = sp.space.whole() & ~bit(point_named("add(" + obj.name + ")"));
        rep.add("kronecker/ssupp(" + obj.name + ")", point_set_str(sp, expect),
                point_set_str(sp, spectra::support(kd.model, {{{i, 0}}}, sp)), kSupport);
    }

    // The point family partitions into the integer-indexed part, one point
    // per regular parameter, and one generic point.
    {
        int zpart = 0, lpart = 0, generic = 0, other = 0;
        for (int j = 0; j < sp.space.n(); ++j) {
            const std::string& n = sp.space.names[j];
            if (n.rfind("add(", 0) == 0) ++zpart;
            else if (n.rfind("reg_except(", 0) == 0) ++lpart;
            else if (n == "reg_all") ++generic;
            else ++other;
        }
        std::string expect = std::to_string(2 * (nmax + 1)) + " integer-indexed + " +
                             std::to_string(kd.lambdas.size()) + " parameter-indexed + 1 generic";
        std::string got = std::to_string(zpart) + " integer-indexed + " + std::to_string(lpart) +
                          " parameter-indexed + " + std::to_string(generic) + " generic";
        if (other > 0) got += " + " + std::to_string(other) + " other";
        rep.add("kronecker/point family partition", expect, got, kSupport);
    }
    return rep;
}

Report verify_dinfinity(const catmodel::BuiltinOptions& opt) {
    Report rep;
    catmodel::Model m = catmodel::builtin_model("D_infinity", opt);
    const catmodel::Prime& alpha = m.primes.at(0);
    auto member = [&](const char* n) { return has(alpha.members, m.require_class(n)); };
    rep.add("dinfinity/(x) in alpha(L)", "no", member("(x)") ? "yes" : "no", "declared prime");
    rep.add("dinfinity/(xy) in alpha(L)", "no", member("(xy)") ? "yes" : "no", "declared prime");
    {
        bool rest = member("(x^2)") && member("(y)");
        for (int k = 1; k <= opt.K; ++k)
            for (const char* fam : {"M", "Y", "X", "N"})
                rest = rest && has(alpha.members, m.require_class(fam + std::to_string(k)));
        rep.add("dinfinity/(x^2),(y),M_k,Y_k,X_k,N_k in alpha(L)", "yes", rest ? "yes" : "no",
                "declared prime");
    }

    spectra::Spectrum sp = spectra::shift_spectrum(m);
    Mask rad0 = spectra::radical(sp, 0);
    rep.add("dinfinity/radical(0)", m.set_str(alpha.members), m.set_str(rad0),
            "intersection of declared primes");
    rep.add("dinfinity/radical(0) != 0", "nonzero", rad0 == 0 ? "zero" : "nonzero",
            "intersection of declared primes");

    std::vector<spectra::ClassifyRow> rows = spectra::classify(sp);
    std::string got;
    for (const auto& r : rows) {
        if (!got.empty()) got += ", ";
        got += m.set_str(r.thick);
    }
    rep.add("dinfinity/radical thick subcategories", m.set_str(alpha.members) + ", " + m.set_str(m.all()),
            got, "classification over the declared spectrum");
    return rep;
}

Report verify_table1(const catmodel::BuiltinOptions& opt) {
    Report rep;
    const char* kSpace = "spectrum computed from the model";
    const char* kLattice = "comparison space computed from the thick lattice";

    // Shift-spectrum row.
    {
        catmodel::Model m = catmodel::builtin_model("kA2", opt);
        rep.add("table/sspec(kA2)", "3 points, discrete",
                space_shape(spectra::shift_spectrum(m).space), kSpace);
    }
    {
        KroneckerData kd(opt);
        spectra::Spectrum sp = spectra::shift_spectrum(kd.model);
        int zpart = 0, lpart = 0, generic = 0;
        for (int j = 0; j < sp.space.n(); ++j) {
            const std::string& n = sp.space.names[j];
            if (n.rfind("add(", 0) == 0) ++zpart;
            else if (n.rfind("reg_except(", 0) == 0) ++lpart;
            else if (n == "reg_all") ++generic;
        }
        rep.add("table/sspec(kronecker) shape",
                std::to_string(2 * (opt.n_max + 1)) + "+" + std::to_string(opt.lambdas.size()) +
                    "+1 points",
                std::to_string(zpart) + "+" + std::to_string(lpart) + "+" +
                    std::to_string(generic) + " points",
                kSpace);
    }
    {
        catmodel::Model m = catmodel::builtin_model("A_infinity", opt);
        spectra::Spectrum sp = spectra::shift_spectrum(m);
        rep.add("table/sspec(A_infinity)", "1 point",
                std::to_string(sp.space.n()) + (sp.space.n() == 1 ? " point" : " points"), kSpace);
    }
    {
        catmodel::Model m = catmodel::builtin_model("specZ", opt);
        spectra::Spectrum sp = spectra::shift_spectrum(m);
        int finite = m.k() - 1;  // torsion classes; the last class is the ring
        rep.add("table/sspec(specZ) shape", std::to_string(finite) + " closed points + 1 generic point",
                dedekind_shape(sp.space), kSpace);
    }

    // Matsui row.
    {
        catmodel::Model m = catmodel::builtin_model("kA2", opt);
        spectra::ThickLattice lat = spectra::enumerate_thicks(m);
        rep.add("table/Spc_M(kA2)", "3 points, discrete",
                space_shape(spectra::matsui_spectrum(m, lat)), kLattice);
    }
    {
        catmodel::Model m = catmodel::builtin_model("A_infinity", opt);
        spectra::ThickLattice lat = spectra::enumerate_thicks(m);
        rep.add("table/Spc_M(A_infinity)", "2 points, Sierpinski",
                space_shape(spectra::matsui_spectrum(m, lat)), kLattice);
    }
    {
        catmodel::Model m = catmodel::builtin_model("specZ", opt);
        spectra::ThickLattice lat = spectra::enumerate_thicks(m);
        rep.add("table/Spc_M(specZ) shape",
                std::to_string(m.k() - 1) + " closed points + 1 generic point",
                dedekind_shape(spectra::matsui_spectrum(m, lat)), kLattice);
    }
    return rep;
}

Report verify_all(const catmodel::BuiltinOptions& opt) {
    Report rep = verify_kronecker(opt);
    Report d = verify_dinfinity(opt);
    Report t = verify_table1(opt);
    rep.rows.insert(rep.rows.end(), d.rows.begin(), d.rows.end());
    rep.rows.insert(rep.rows.end(), t.rows.begin(), t.rows.end());
    return rep;
}

}  // namespace speclab::verify
