#include "speclab/render.hpp"

#include <sstream>

namespace speclab::render {

namespace {

std::string indices_str(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i : mask_ids(m)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Covering pairs of the specialization preorder: a -> b when b lies
// strictly under a with nothing strictly between (mutually equivalent
// points are both emitted, exposing non-T0 spaces).
std::vector<std::pair<int, int>> specialization_covers(const spectra::FiniteSpace& sp) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < sp.n(); ++a)
        for (int b = 0; b < sp.n(); ++b) {
            if (a == b || !spectra::specializes(sp, b, a)) continue;
            bool between = false;
            for (int z = 0; z < sp.n() && !between; ++z)
                if (z != a && z != b && spectra::specializes(sp, b, z) &&
                    spectra::specializes(sp, z, a) && !spectra::specializes(sp, z, b) &&
                    !spectra::specializes(sp, a, z))
                    between = true;
            if (!between) edges.push_back({a, b});
        }
    return edges;
}

}  // namespace

std::string space_text(const spectra::FiniteSpace& sp) {
    std::ostringstream os;
    os << "space: " << sp.n() << (sp.n() == 1 ? " point" : " points") << "\n";
    for (int i = 0; i < sp.n(); ++i) os << "point " << i << ": " << sp.names[i] << "\n";
    for (size_t b = 0; b < sp.closed_basis.size(); ++b)
        os << "closed-basis " << b << ": points " << indices_str(sp.closed_basis[b]) << "\n";
    os << "T0: " << yesno(spectra::is_T0(sp)) << "\n";
    os << "discrete: " << yesno(spectra::is_discrete(sp)) << "\n";
    os << "indiscrete: " << yesno(spectra::is_indiscrete(sp)) << "\n";
    os << "sierpinski: " << yesno(spectra::is_sierpinski(sp)) << "\n";
    return os.str();
}

json space_doc(const spectra::FiniteSpace& sp) {
    json doc;
    doc["kind"] = "finite_space";
    doc["points"] = json::array();
    for (int i = 0; i < sp.n(); ++i)
        doc["points"].push_back(json{{"index", i},
                                     {"name", sp.names[i]},
                                     {"members", mask_ids(sp.payloads[i])}});
    doc["closed_basis"] = json::array();
    for (Mask b : sp.closed_basis) doc["closed_basis"].push_back(mask_ids(b));
    doc["t0"] = spectra::is_T0(sp);
    doc["discrete"] = spectra::is_discrete(sp);
    doc["indiscrete"] = spectra::is_indiscrete(sp);
    doc["sierpinski"] = spectra::is_sierpinski(sp);
    return doc;
}

std::string space_dot(const spectra::FiniteSpace& sp, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int i = 0; i < sp.n(); ++i) os << "  " << quote(sp.names[i]) << ";\n";
    for (auto [a, b] : specialization_covers(sp))
        os << "  " << quote(sp.names[a]) << " -> " << quote(sp.names[b]) << ";\n";
    os << "}\n";
    return os.str();
}

std::string lattice_text(const catmodel::Model& m, const spectra::ThickLattice& lat) {
    std::ostringstream os;
    os << "thick subcategories: " << lat.elements.size() << "\n";
    for (size_t i = 0; i < lat.elements.size(); ++i)
        os << "element " << i << ": " << m.set_str(lat.elements[i]) << "\n";
    if (lat.elements.size() <= 4096) {
        os << "covers:";
        auto covers = spectra::lattice_covers(lat);
        if (covers.empty()) os << " none";
        for (auto [lo, hi] : covers) os << " " << lo << "<" << hi;
        os << "\n";
    } else {
        os << "covers: omitted (large lattice)\n";
    }
    return os.str();
}

json lattice_doc(const catmodel::Model& m, const spectra::ThickLattice& lat) {
    json doc;
    doc["kind"] = "thick_lattice";
    doc["model"] = m.name;
    doc["elements"] = json::array();
    for (size_t i = 0; i < lat.elements.size(); ++i)
        doc["elements"].push_back(json{{"id", int(i)}, {"members", mask_ids(lat.elements[i])}});
    if (lat.elements.size() <= 4096) {
        doc["covers"] = json::array();
        for (auto [lo, hi] : spectra::lattice_covers(lat))
            doc["covers"].push_back(json::array({lo, hi}));
    }
    return doc;
}

std::string lattice_dot(const catmodel::Model& m, const spectra::ThickLattice& lat,
                        const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (Mask e : lat.elements) os << "  " << quote(m.set_str(e)) << ";\n";
    for (auto [lo, hi] : spectra::lattice_covers(lat))
        os << "  " << quote(m.set_str(lat.elements[lo])) << " -> "
           << quote(m.set_str(lat.elements[hi])) << ";\n";
    os << "}\n";
    return os.str();
}

std::string model_text(const catmodel::Model& m) {
    std::ostringstream os;
    os << "model: " << m.name << "\n";
    os << "mode: " << (m.mode == catmodel::Mode::locally_finite ? "locally_finite" : "declared");
    if (m.truncated) os << " (truncated)";
    os << "\n";
    os << "classes: " << m.k() << "\n";
    for (const catmodel::ObjectClass& c : m.classes) {
        os << "class " << c.id << ": " << c.name;
        if (c.shift_period > 0) os << " (shift period " << c.shift_period << ")";
        os << "\n";
    }
    if (m.hom.present) {
        int entries = 0;
        for (int i = 0; i < m.k(); ++i)
            for (int j = 0; j < m.k(); ++j)
                if (m.pair_nonzero(i, j)) ++entries;
        os << "hom table: " << entries << " nonzero pairs\n";
    } else {
        os << "hom table: absent\n";
    }
    for (const catmodel::Prime& p : m.primes)
        os << "prime " << p.name << ": " << m.set_str(p.members) << "\n";
    if (m.lattice) os << "declared lattice: " << m.lattice->size() << " elements\n";
    if (!m.triangles.empty()) os << "triangles: " << m.triangles.size() << "\n";
    return os.str();
}

std::string classify_text(const catmodel::Model& m, const spectra::Spectrum& sp,
                          const std::vector<spectra::ClassifyRow>& rows) {
    std::ostringstream os;
    for (int i = 0; i < sp.space.n(); ++i) os << "point " << i << ": " << sp.space.names[i] << "\n";
    os << "radical thick subcategories: " << rows.size() << "\n";
    for (size_t i = 0; i < rows.size(); ++i)
        os << "row " << i << ": points " << indices_str(rows[i].points) << " thick "
           << m.set_str(rows[i].thick) << "\n";
    return os.str();
}

json classify_doc(const catmodel::Model& m, const spectra::Spectrum& sp,
                  const std::vector<spectra::ClassifyRow>& rows) {
    json doc;
    doc["kind"] = "classification";
    doc["model"] = m.name;
    doc["points"] = json::array();
    for (int i = 0; i < sp.space.n(); ++i) doc["points"].push_back(sp.space.names[i]);
    doc["rows"] = json::array();
    for (const auto& r : rows)
        doc["rows"].push_back(json{{"points", mask_ids(r.points)}, {"thick", mask_ids(r.thick)}});
    return doc;
}

std::string rank_text(const catmodel::Model& m, const rankfn::RankFunction& rho) {
    std::ostringstream os;
    for (int c = 0; c < m.k(); ++c)
        os << "class " << m.classes[c].name << ": " << rho.values[c] << "\n";
    return os.str();
}

json rank_doc(const catmodel::Model& m, const rankfn::RankFunction& rho) {
    json doc;
    doc["kind"] = "rank_function";
    doc["model"] = m.name;
    json values;
    for (int c = 0; c < m.k(); ++c) values[std::to_string(c)] = rho.values[c];
    doc["values"] = values;
    return doc;
}

std::string axioms_text(const rankfn::AxiomReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks)
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.axiom << ": " << c.instance << "\n";
    os << (rep.pass() ? "axioms hold\n" : "axioms violated\n");
    return os.str();
}

json axioms_doc(const rankfn::AxiomReport& rep) {
    json doc;
    doc["kind"] = "axiom_report";
    doc["checks"] = json::array();
    for (const auto& c : rep.checks)
        doc["checks"].push_back(json{{"axiom", c.axiom}, {"instance", c.instance}, {"pass", c.pass}});
    doc["pass"] = rep.pass();
    return doc;
}

std::string report_text(const verify::Report& rep) {
    std::ostringstream os;
    for (const auto& r : rep.rows) {
        os << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": expected " << r.expected
           << "; computed " << r.computed;
        if (!r.provenance.empty()) os << " (" << r.provenance << ")";
        os << "\n";
    }
    os << rep.rows.size() << " checks, " << rep.failures() << " failures\n";
    return os.str();
}

json report_doc(const verify::Report& rep) {
    json doc;
    doc["kind"] = "verification_report";
    doc["rows"] = json::array();
    for (const auto& r : rep.rows)
        doc["rows"].push_back(json{{"name", r.name},
                                   {"expected", r.expected},
                                   {"computed", r.computed},
                                   {"pass", r.pass},
                                   {"provenance", r.provenance}});
    doc["pass"] = rep.pass();
    return doc;
}

}  // namespace speclab::render
