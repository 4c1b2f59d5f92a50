#include "speclab/catmodel.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "speclab/quiverrep.hpp"
#include "speclab/tube.hpp"

namespace speclab::catmodel {

int Model::class_id(const std::string& cname) const {
    for (const ObjectClass& c : classes)
        if (c.name == cname) return c.id;
    return -1;
}

int Model::require_class(const std::string& cname) const {
    int id = class_id(cname);
    if (id < 0) throw usage_error("unknown class '" + cname + "' in model " + name);
    return id;
}

int Model::pair_period(int src, int dst) const {
    return std::gcd(classes[src].shift_period, classes[dst].shift_period);
}

long Model::pair_dim(int src, int dst, long shift) const {
    if (!hom.present) throw model_error("model " + name + " carries no Hom data");
    int q = pair_period(src, dst);
    long key = q > 0 ? ((shift % q) + q) % q : shift;
    const auto& dims = hom.pair[src][dst].dims;
    auto it = dims.find(key);
    return it == dims.end() ? 0 : it->second;
}

bool Model::pair_nonzero(int src, int dst) const {
    if (!hom.present) throw model_error("model " + name + " carries no Hom data");
    for (const auto& [s, d] : hom.pair[src][dst].dims)
        if (d != 0) return true;
    return false;
}

std::string Model::set_str(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < k(); ++i)
        if (has(m, i)) {
            if (!first) out += ",";
            out += classes[i].name;
            first = false;
        }
    return out + "}";
}

void Model::validate() const {
    if (k() > 64) throw model_error("model " + name + " exceeds 64 classes");
    for (int i = 0; i < k(); ++i) {
        if (classes[i].id != i) throw model_error("model " + name + ": class ids must be dense");
        if (classes[i].name.empty()) throw model_error("model " + name + ": unnamed class");
        if (classes[i].shift_period < 0)
            throw model_error("model " + name + ": negative shift period");
        for (int j = i + 1; j < k(); ++j)
            if (classes[i].name == classes[j].name)
                throw model_error("model " + name + ": duplicate class name " + classes[i].name);
    }
    if (mode == Mode::locally_finite) {
        if (!hom.present) throw model_error("locally finite model " + name + " requires Hom data");
        if (!primes.empty())
            throw model_error("model " + name + ": primes are declared-mode data");
        if (lattice)
            throw model_error("model " + name + ": an explicit lattice is declared-mode data");
    } else if (primes.empty()) {
        throw model_error("declared model " + name + " requires declared primes");
    }
    if (hom.present) {
        if (int(hom.pair.size()) != k())
            throw model_error("model " + name + ": Hom table shape mismatch");
        for (int i = 0; i < k(); ++i) {
            if (int(hom.pair[i].size()) != k())
                throw model_error("model " + name + ": Hom table shape mismatch");
            for (int j = 0; j < k(); ++j) {
                int q = pair_period(i, j);
                for (const auto& [s, d] : hom.pair[i][j].dims) {
                    if (d < 0)
                        throw model_error("model " + name + ": negative dimension at Hom(" +
                                          classes[i].name + ", shift^" + std::to_string(s) + " " +
                                          classes[j].name + ")");
                    if (q > 0 && (s < 0 || s >= q))
                        throw model_error("model " + name + ": shift key " + std::to_string(s) +
                                          " outside the period of the pair (" + classes[i].name +
                                          ", " + classes[j].name + ")");
                }
            }
            if (pair_dim(i, i, 0) < 1)
                throw model_error("model " + name + ": class " + classes[i].name +
                                  " lacks its identity (diagonal dimension at shift 0)");
        }
    }
    for (const Prime& p : primes)
        if (!subset(p.members, all()))
            throw model_error("model " + name + ": prime " + p.name + " has foreign members");
    if (lattice)
        for (const LatticeElement& e : *lattice)
            if (!subset(e.members, all()))
                throw model_error("model " + name + ": lattice element with foreign members");
}

// ---------------------------------------------------------------------------
// Perpendiculars.

namespace {

void require_perp_allowed(const Model& m) {
    if (!m.hom.present)
        throw model_error("model " + m.name + " carries no Hom data; perpendiculars unavailable");
    if (m.mode == Mode::declared && !m.truncated)
        throw model_error("model " + m.name +
                          ": perpendiculars in declared mode need the truncation caveat flag");
}

}  // namespace

Mask perp_left(const Model& m, Mask s) {
    require_perp_allowed(m);
    Mask out = 0;
    for (int x = 0; x < m.k(); ++x) {
        bool ok = true;
        for (int y = 0; y < m.k() && ok; ++y)
            if (has(s, y) && m.pair_nonzero(x, y)) ok = false;
        if (ok) out |= bit(x);
    }
    return out;
}

Mask perp_right(const Model& m, Mask s) {
    require_perp_allowed(m);
    Mask out = 0;
    for (int y = 0; y < m.k(); ++y) {
        bool ok = true;
        for (int x = 0; x < m.k() && ok; ++x)
            if (has(s, x) && m.pair_nonzero(x, y)) ok = false;
        if (ok) out |= bit(y);
    }
    return out;
}

Mask thick_closure(const Model& m, Mask s) {
    if (m.mode != Mode::locally_finite)
        throw model_error("thick_closure needs a locally finite model; " + m.name +
                          " is declared data");
    return perp_right(m, perp_left(m, s));
}

// ---------------------------------------------------------------------------
// Formal objects.

FormalObject parse_formal(const Model& m, const std::string& text) {
    FormalObject obj;
    std::string stripped = text;
    while (!stripped.empty() && stripped.front() == ' ') stripped.erase(stripped.begin());
    while (!stripped.empty() && stripped.back() == ' ') stripped.pop_back();
    if (stripped == "0" && m.class_id("0") < 0) return obj;  // the zero object
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto trim = [](std::string& s) {
            while (!s.empty() && s.front() == ' ') s.erase(s.begin());
            while (!s.empty() && s.back() == ' ') s.pop_back();
        };
        trim(token);
        if (token.empty()) continue;
        long mult = 1;
        size_t star = token.find('*');
        if (star != std::string::npos) {
            try {
                size_t used = 0;
                mult = std::stol(token.substr(0, star), &used);
                if (used != star || mult < 0) throw std::invalid_argument("");
            } catch (...) {
                throw usage_error("bad multiplicity in '" + token + "'");
            }
            token = token.substr(star + 1);
            trim(token);
        }
        long shift = 0;
        std::string cname = token;
        if (!token.empty() && token.back() == ']') {
            size_t open = token.rfind('[');
            if (open != std::string::npos && open > 0) {
                std::string inner = token.substr(open + 1, token.size() - open - 2);
                try {
                    size_t used = 0;
                    long s = std::stol(inner, &used);
                    if (used == inner.size()) {
                        std::string prefix = token.substr(0, open);
                        if (m.class_id(prefix) >= 0) {
                            shift = s;
                            cname = prefix;
                        }
                    }
                } catch (...) {
                    // not a shift suffix; the whole token is a class name
                }
            }
        }
        int id = m.require_class(cname);
        for (long c = 0; c < mult; ++c) obj.summands.push_back({id, shift});
    }
    return obj;
}

Mask classes_of(const FormalObject& o) {
    Mask m = 0;
    for (auto& [id, shift] : o.summands) m |= bit(id);
    return m;
}

std::string format_formal(const Model& m, const FormalObject& o) {
    if (o.summands.empty()) return "0";
    std::vector<std::pair<int, long>> s = o.summands;
    std::sort(s.begin(), s.end());
    std::string out;
    for (size_t i = 0; i < s.size();) {
        size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        if (!out.empty()) out += " + ";
        if (j - i > 1) out += std::to_string(j - i) + "*";
        out += m.classes[s[i].first].name;
        if (s[i].second != 0) out += "[" + std::to_string(s[i].second) + "]";
        i = j;
    }
    return out;
}

bool same_formal(const FormalObject& a, const FormalObject& b) {
    std::vector<std::pair<int, long>> sa = a.summands, sb = b.summands;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw model_error("model document: " + path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path + "." + key, "missing");
    return *it;
}

long as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long>();
}

std::string as_str(const json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

Mask members_mask(const json& j, int k, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of class ids");
    Mask m = 0;
    for (size_t i = 0; i < j.size(); ++i) {
        long id = as_int(j[i], path + "[" + std::to_string(i) + "]");
        if (id < 0 || id >= k) bad(path + "[" + std::to_string(i) + "]", "class id out of range");
        m |= bit(int(id));
    }
    return m;
}

}  // namespace

Model model_from_json(const json& doc) {
    Model m;
    if (as_int(field(doc, "schema_version", "$"), "$.schema_version") != 1)
        bad("$.schema_version", "unsupported schema version");
    m.name = as_str(field(doc, "name", "$"), "$.name");
    std::string mode = as_str(field(doc, "mode", "$"), "$.mode");
    if (mode == "locally_finite")
        m.mode = Mode::locally_finite;
    else if (mode == "declared")
        m.mode = Mode::declared;
    else
        bad("$.mode", "expected 'locally_finite' or 'declared'");
    if (doc.contains("truncated")) {
        if (!doc["truncated"].is_boolean()) bad("$.truncated", "expected a boolean");
        m.truncated = doc["truncated"].get<bool>();
    }

    const json& classes = field(doc, "classes", "$");
    if (!classes.is_array()) bad("$.classes", "expected an array");
    for (size_t i = 0; i < classes.size(); ++i) {
        std::string path = "$.classes[" + std::to_string(i) + "]";
        ObjectClass c;
        c.id = int(as_int(field(classes[i], "id", path), path + ".id"));
        if (c.id != int(i)) bad(path + ".id", "class ids must be dense and in order");
        c.name = as_str(field(classes[i], "name", path), path + ".name");
        c.shift_period =
            int(as_int(field(classes[i], "shift_period", path), path + ".shift_period"));
        if (c.shift_period < 0) bad(path + ".shift_period", "must be >= 0 (0 = free)");
        m.classes.push_back(std::move(c));
    }
    int k = m.k();

    if (doc.contains("hom")) {
        const json& hom = doc["hom"];
        if (!hom.is_array()) bad("$.hom", "expected an array");
        m.hom.present = true;
        m.hom.pair.assign(k, std::vector<PairGrading>(k));
        for (size_t i = 0; i < hom.size(); ++i) {
            std::string path = "$.hom[" + std::to_string(i) + "]";
            long src = as_int(field(hom[i], "src", path), path + ".src");
            long dst = as_int(field(hom[i], "dst", path), path + ".dst");
            if (src < 0 || src >= k) bad(path + ".src", "class id out of range");
            if (dst < 0 || dst >= k) bad(path + ".dst", "class id out of range");
            const json& shifts = field(hom[i], "shifts", path);
            if (!shifts.is_object()) bad(path + ".shifts", "expected an object");
            for (auto it = shifts.begin(); it != shifts.end(); ++it) {
                long key = 0;
                try {
                    size_t used = 0;
                    key = std::stol(it.key(), &used);
                    if (used != it.key().size()) throw std::invalid_argument("");
                } catch (...) {
                    bad(path + ".shifts." + it.key(), "key must be an integer shift");
                }
                long d = as_int(it.value(), path + ".shifts." + it.key());
                if (d < 0) bad(path + ".shifts." + it.key(), "negative dimension");
                if (d != 0) m.hom.pair[src][dst].dims[key] = d;
            }
        }
    }

    if (doc.contains("primes")) {
        const json& primes = doc["primes"];
        if (!primes.is_array()) bad("$.primes", "expected an array");
        for (size_t i = 0; i < primes.size(); ++i) {
            std::string path = "$.primes[" + std::to_string(i) + "]";
            Prime p;
            p.name = as_str(field(primes[i], "name", path), path + ".name");
            p.members = members_mask(field(primes[i], "members", path), k, path + ".members");
            m.primes.push_back(std::move(p));
        }
    } else if (m.mode == Mode::declared) {
        bad("$.primes", "declared models must list their primes");
    }

    if (doc.contains("lattice")) {
        const json& lat = doc["lattice"];
        if (!lat.is_array()) bad("$.lattice", "expected an array");
        std::vector<LatticeElement> elems;
        for (size_t i = 0; i < lat.size(); ++i) {
            std::string path = "$.lattice[" + std::to_string(i) + "]";
            long id = as_int(field(lat[i], "id", path), path + ".id");
            if (id != long(i)) bad(path + ".id", "lattice ids must be dense and in order");
            LatticeElement e;
            e.members = members_mask(field(lat[i], "members", path), k, path + ".members");
            elems.push_back(e);
        }
        m.lattice = std::move(elems);
    }

    m.validate();
    return m;
}

json model_to_json(const Model& m) {
    json doc;
    doc["schema_version"] = 1;
    doc["name"] = m.name;
    doc["mode"] = m.mode == Mode::locally_finite ? "locally_finite" : "declared";
    if (m.truncated) doc["truncated"] = true;
    doc["classes"] = json::array();
    for (const ObjectClass& c : m.classes)
        doc["classes"].push_back(
            json{{"id", c.id}, {"name", c.name}, {"shift_period", c.shift_period}});
    if (m.hom.present) {
        doc["hom"] = json::array();
        for (int i = 0; i < m.k(); ++i)
            for (int j = 0; j < m.k(); ++j) {
                json shifts;
                std::vector<std::pair<long, long>> entries(m.hom.pair[i][j].dims.begin(),
                                                           m.hom.pair[i][j].dims.end());
                for (auto& [s, d] : entries)
                    if (d != 0) shifts[std::to_string(s)] = d;
                if (!shifts.empty())
                    doc["hom"].push_back(json{{"src", i}, {"dst", j}, {"shifts", shifts}});
            }
    }
    if (!m.primes.empty()) {
        doc["primes"] = json::array();
        for (const Prime& p : m.primes)
            doc["primes"].push_back(json{{"name", p.name}, {"members", mask_ids(p.members)}});
    }
    if (m.lattice) {
        doc["lattice"] = json::array();
        for (size_t i = 0; i < m.lattice->size(); ++i)
            doc["lattice"].push_back(
                json{{"id", int(i)}, {"members", mask_ids((*m.lattice)[i].members)}});
    }
    return doc;
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open model file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw model_error("model document " + path + ": " + e.what());
    }
    return model_from_json(doc);
}

void save_model(const Model& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw usage_error("cannot write model file " + path);
    out << model_to_json(m).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Builtin models.

namespace {

void fill_hom_from_reps(Model& m, const std::vector<quiverrep::Rep>& reps) {
    int k = m.k();
    m.hom.present = true;
    m.hom.pair.assign(k, std::vector<PairGrading>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto [h, e] = quiverrep::graded_hom_pair(reps[i], reps[j]);
            if (h != 0) m.hom.pair[i][j].dims[0] = h;
            if (e != 0) m.hom.pair[i][j].dims[1] = e;
        }
}

Model build_kA2() {
    // Path algebra of 2 -> 1: indecomposables are the simple projective P1,
    // the projective cover P2 of the top, and the simple injective S2.
    using quiverrep::Rep;
    auto q = std::make_shared<quiverrep::Quiver>();
    q->vertices = 2;
    q->arrows = {{1, 0}};
    auto make = [&](int d1, int d2, bool id_map) {
        Rep r;
        r.quiver = q;
        r.dims = {d1, d2};
        r.maps.assign(1, linalg::Matrix<mpq_class>(d1, d2));
        if (id_map) r.maps[0].at(0, 0) = 1;
        return r;
    };
    std::vector<Rep> reps = {make(1, 0, false), make(1, 1, true), make(0, 1, false)};

    Model m;
    m.name = "kA2";
    m.mode = Mode::locally_finite;
    m.classes = {{0, "P1", 0}, {1, "P2", 0}, {2, "S2", 0}};
    fill_hom_from_reps(m, reps);
    // The unique Auslander-Reiten triangle P1 -> P2 -> S2 -> shift P1.
    m.triangles.push_back(Triangle{FormalObject{{{0, 0}}}, FormalObject{{{1, 0}}},
                                   FormalObject{{{2, 0}}}});
    m.validate();
    return m;
}

Model build_An(int n) {
    if (n < 1) throw usage_error("builtin An requires --n >= 1");
    auto catalog = quiverrep::catalog_An(n);
    Model m;
    m.name = "An(" + std::to_string(n) + ")";
    m.mode = Mode::locally_finite;
    std::vector<quiverrep::Rep> reps;
    for (size_t i = 0; i < catalog.size(); ++i) {
        m.classes.push_back({int(i), catalog[i].name, 0});
        reps.push_back(catalog[i].rep);
    }
    fill_hom_from_reps(m, reps);
    auto id_of = [&](int a, int b) {
        for (size_t i = 0; i < catalog.size(); ++i)
            if (catalog[i].a == a && catalog[i].b == b) return int(i);
        throw model_error("interval lookup failed");
    };
    // Auslander-Reiten triangles: for t < n the mesh ending at [s,t] is
    // [s+1,t+1] -> [s,t+1] (+ [s+1,t] when s < t) -> [s,t].
    for (int s = 1; s <= n; ++s)
        for (int t = s; t < n; ++t) {
            Triangle tri;
            tri.x.summands = {{id_of(s + 1, t + 1), 0}};
            tri.y.summands = {{id_of(s, t + 1), 0}};
            if (s < t) tri.y.summands.push_back({id_of(s + 1, t), 0});
            tri.z.summands = {{id_of(s, t), 0}};
            m.triangles.push_back(std::move(tri));
        }
    m.validate();
    return m;
}

Model build_kronecker(const BuiltinOptions& opt) {
    std::vector<quiverrep::Lambda> lambdas;
    for (const std::string& s : opt.lambdas) lambdas.push_back(quiverrep::Lambda::parse(s));
    auto cat = quiverrep::catalog_kronecker(opt.n_max, opt.j_max, lambdas);
    Model m;
    m.name = "kronecker(" + std::to_string(opt.n_max) + "," + std::to_string(opt.j_max) + ")";
    m.mode = Mode::declared;
    m.truncated = true;
    std::vector<quiverrep::Rep> reps;
    for (size_t i = 0; i < cat.objects.size(); ++i) {
        m.classes.push_back({int(i), cat.objects[i].name, 0});
        reps.push_back(cat.objects[i].rep);
    }
    fill_hom_from_reps(m, reps);

    Mask regulars = 0;
    for (size_t i = 0; i < cat.objects.size(); ++i)
        if (cat.objects[i].family == quiverrep::Family::regular) regulars |= bit(int(i));
    for (int nn = 0; nn <= opt.n_max; ++nn)
        m.primes.push_back(Prime{"add(P" + std::to_string(nn) + ")",
                                 bit(m.require_class("P" + std::to_string(nn)))});
    for (int nn = 0; nn <= opt.n_max; ++nn)
        m.primes.push_back(Prime{"add(Q" + std::to_string(nn) + ")",
                                 bit(m.require_class("Q" + std::to_string(nn)))});
    for (const auto& l : lambdas) {
        Mask members = 0;
        for (size_t i = 0; i < cat.objects.size(); ++i)
            if (cat.objects[i].family == quiverrep::Family::regular &&
                !(*cat.objects[i].lambda == l))
                members |= bit(int(i));
        m.primes.push_back(Prime{"reg_except(" + l.str() + ")", members});
    }
    m.primes.push_back(Prime{"reg_all", regulars});
    m.validate();
    return m;
}

Model build_tube(int n) {
    if (n < 1) throw usage_error("builtin tube_n requires --n >= 1");
    int L = tube::default_L_max(n);
    Model m;
    m.name = "tube_" + std::to_string(n);
    m.mode = Mode::locally_finite;
    std::vector<tube::TubeObject> objs = tube::objects_up_to(n, L);
    for (size_t i = 0; i < objs.size(); ++i) m.classes.push_back({int(i), objs[i].str(), 0});
    m.hom.present = true;
    m.hom.pair.assign(m.k(), std::vector<PairGrading>(m.k()));
    for (int i = 0; i < m.k(); ++i)
        for (int j = 0; j < m.k(); ++j) {
            int h = tube::hom_dim(objs[i], objs[j]);
            int e = tube::ext_dim(objs[i], objs[j]);
            if (h != 0) m.hom.pair[i][j].dims[0] = h;
            if (e != 0) m.hom.pair[i][j].dims[1] = e;
        }
    m.validate();
    return m;
}

std::vector<int> primes_below(int bound) {
    std::vector<int> ps;
    for (int x = 2; x < bound; ++x) {
        bool prime = true;
        for (int d = 2; d * d <= x; ++d)
            if (x % d == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(x);
    }
    return ps;
}

Model build_specZ(int bound) {
    if (bound < 3) throw usage_error("builtin specZ requires --bound >= 3");
    std::vector<int> ps = primes_below(bound);
    int np = int(ps.size());
    if (np + 1 > 62 || (std::uint64_t(1) << np) + 1 > materialize_guard())
        throw guard_error("specZ lattice with " + std::to_string(np) +
                          " primes exceeds the guard (raise with SPECLAB_GUARD)");
    Model m;
    m.name = "specZ(" + std::to_string(bound) + ")";
    m.mode = Mode::declared;
    for (int i = 0; i < np; ++i) m.classes.push_back({i, "Z/" + std::to_string(ps[i]), 0});
    m.classes.push_back({np, "Z", 0});
    Mask torsion = full_mask(np);
    for (int i = 0; i < np; ++i)
        m.primes.push_back(Prime{"P(" + std::to_string(ps[i]) + ")", torsion & ~bit(i)});
    m.primes.push_back(Prime{"P(0)", torsion});
    // Thick subcategories: torsion parts supported on any set of primes,
    // plus the whole category.
    std::vector<LatticeElement> lat;
    for (Mask s = 0; s < (Mask(1) << np); ++s) lat.push_back(LatticeElement{s});
    lat.push_back(LatticeElement{m.all()});
    std::sort(lat.begin(), lat.end(), [](const LatticeElement& a, const LatticeElement& b) {
        return canonical_less(a.members, b.members);
    });
    m.lattice = std::move(lat);
    m.validate();
    return m;
}

Model build_A_infinity(int K) {
    if (K < 1) throw usage_error("builtin A_infinity requires --K >= 1");
    Model m;
    m.name = "A_infinity(" + std::to_string(K) + ")";
    m.mode = Mode::declared;
    m.truncated = true;
    for (int i = 1; i <= K; ++i)
        m.classes.push_back({i - 1, "(x,y^" + std::to_string(i) + ")", 1});
    m.classes.push_back({K, "(x,y^inf)", 1});
    Mask finite = full_mask(K);
    m.primes.push_back(Prime{"alpha(L)", finite});
    m.lattice = std::vector<LatticeElement>{LatticeElement{0}, LatticeElement{finite},
                                            LatticeElement{m.all()}};
    m.validate();
    return m;
}

Model build_D_infinity(int K) {
    if (K < 1) throw usage_error("builtin D_infinity requires --K >= 1");
    Model m;
    m.name = "D_infinity(" + std::to_string(K) + ")";
    m.mode = Mode::declared;
    m.truncated = true;
    m.classes.push_back({0, "(x)", 0});
    m.classes.push_back({1, "(x^2)", 0});
    m.classes.push_back({2, "(xy)", 0});
    m.classes.push_back({3, "(y)", 0});
    int id = 4;
    for (const char* fam : {"M", "Y", "X", "N"})
        for (int kk = 1; kk <= K; ++kk)
            m.classes.push_back({id++, std::string(fam) + std::to_string(kk), 0});
    m.primes.push_back(Prime{"alpha(L)", m.all() & ~bit(0) & ~bit(2)});
    m.validate();
    return m;
}

bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Model build_stmod(int p) {
    if (!is_prime_int(p)) throw usage_error("builtin stmod_Cp requires a prime --p");
    Model m;
    m.name = "stmod_C" + std::to_string(p);
    m.mode = Mode::locally_finite;
    int cnt = p == 2 ? 1 : (p - 1) / 2;
    int period = p == 2 ? 1 : 2;
    for (int i = 1; i <= cnt; ++i)
        m.classes.push_back({i - 1, "<" + std::to_string(i) + ">", period});
    // Stable Hom between cyclic modules: dim st(i,j) = min(i,j) - max(0,i+j-p);
    // one shift step replaces j by p - j.
    auto st = [&](int i, int j) { return std::min(i, j) - std::max(0, i + j - p); };
    m.hom.present = true;
    m.hom.pair.assign(cnt, std::vector<PairGrading>(cnt));
    for (int i = 1; i <= cnt; ++i)
        for (int j = 1; j <= cnt; ++j) {
            long d0 = st(i, j);
            if (d0 != 0) m.hom.pair[i - 1][j - 1].dims[0] = d0;
            if (period == 2) {
                long d1 = st(i, p - j);
                if (d1 != 0) m.hom.pair[i - 1][j - 1].dims[1] = d1;
            }
        }
    m.validate();
    return m;
}

}  // namespace

Model builtin_model(const std::string& name, const BuiltinOptions& opt) {
    if (name == "kA2") return build_kA2();
    if (name == "An") return build_An(opt.n);
    if (name == "kronecker") return build_kronecker(opt);
    if (name == "tube_n") return build_tube(opt.n);
    if (name == "specZ") return build_specZ(opt.bound);
    if (name == "A_infinity") return build_A_infinity(opt.K);
    if (name == "D_infinity") return build_D_infinity(opt.K);
    if (name == "stmod_Cp") return build_stmod(opt.p);
    throw usage_error("unknown builtin model '" + name + "'; available: kA2, An, kronecker, " +
                      "tube_n, specZ, A_infinity, D_infinity, stmod_Cp");
}

std::vector<std::string> builtin_names() {
    return {"kA2", "An", "kronecker", "tube_n", "specZ", "A_infinity", "D_infinity", "stmod_Cp"};
}

}  // namespace speclab::catmodel
