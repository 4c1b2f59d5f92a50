#include "speclab/spectra.hpp"

#include <algorithm>
#include <unordered_set>

namespace speclab::spectra {

// ---------------------------------------------------------------------------
// Finite topological spaces.

Mask point_closure(const FiniteSpace& sp, int x) {
    Mask cl = sp.whole();
    for (Mask b : sp.closed_basis)
        if (has(b, x)) cl &= b;
    return cl;
}

Mask closure(const FiniteSpace& sp, Mask s) {
    Mask cl = 0;
    for (int x = 0; x < sp.n(); ++x)
        if (has(s, x)) cl |= point_closure(sp, x);
    return cl;
}

bool is_closed(const FiniteSpace& sp, Mask s) { return closure(sp, s) == s; }

bool specializes(const FiniteSpace& sp, int x, int y) {
    return has(point_closure(sp, y), x);
}

bool is_T0(const FiniteSpace& sp) {
    for (int x = 0; x < sp.n(); ++x)
        for (int y = x + 1; y < sp.n(); ++y)
            if (point_closure(sp, x) == point_closure(sp, y)) return false;
    return true;
}

bool is_discrete(const FiniteSpace& sp) {
    for (int x = 0; x < sp.n(); ++x)
        if (point_closure(sp, x) != bit(x)) return false;
    return true;
}

bool is_indiscrete(const FiniteSpace& sp) {
    for (int x = 0; x < sp.n(); ++x)
        if (point_closure(sp, x) != sp.whole()) return false;
    return true;
}

bool is_sierpinski(const FiniteSpace& sp) {
    if (sp.n() != 2) return false;
    Mask c0 = point_closure(sp, 0), c1 = point_closure(sp, 1);
    return (c0 == bit(0) && c1 == sp.whole()) || (c1 == bit(1) && c0 == sp.whole());
}

std::vector<Mask> closed_family(const FiniteSpace& sp, std::uint64_t limit) {
    // Closed sets are exactly the unions of point closures (plus the empty
    // set), so grow the family by adjoining one generator at a time.
    std::vector<Mask> gens;
    for (int x = 0; x < sp.n(); ++x) gens.push_back(point_closure(sp, x));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::unordered_set<Mask> seen = {0};
    std::vector<Mask> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Mask cur = queue[qi];
        for (Mask g : gens) {
            Mask u = cur | g;
            if (seen.insert(u).second) {
                check_guard(seen.size(), limit, "materializing the closed-set family");
                queue.push_back(u);
            }
        }
    }
    std::vector<Mask> family(seen.begin(), seen.end());
    std::sort(family.begin(), family.end(), canonical_less);
    return family;
}

bool homeomorphic_under(const FiniteSpace& a, const FiniteSpace& b,
                        const std::vector<int>& f) {
    if (a.n() != b.n() || int(f.size()) != a.n()) return false;
    Mask image = 0;
    for (int v : f) {
        if (v < 0 || v >= b.n()) return false;
        image |= bit(v);
    }
    if (image != b.whole()) return false;  // not a bijection
    // A bijection of finite spaces is a homeomorphism iff it preserves and
    // reflects specialization.
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y)
            if (specializes(a, x, y) != specializes(b, f[x], f[y])) return false;
    return true;
}

Quotient kolmogorov_quotient(const FiniteSpace& sp) {
    Quotient q;
    q.projection.assign(sp.n(), -1);
    std::vector<Mask> closures;
    std::vector<std::vector<int>> groups;
    for (int x = 0; x < sp.n(); ++x) {
        Mask cl = point_closure(sp, x);
        int g = -1;
        for (size_t i = 0; i < closures.size(); ++i)
            if (closures[i] == cl) g = int(i);
        if (g < 0) {
            g = int(closures.size());
            closures.push_back(cl);
            groups.emplace_back();
        }
        q.projection[x] = g;
        groups[g].push_back(x);
    }
    for (const auto& g : groups) {
        std::string name;
        Mask payload = 0;
        for (int x : g) {
            if (!name.empty()) name += "~";
            name += sp.names[x];
            payload |= sp.payloads[x];
        }
        q.space.names.push_back(name);
        q.space.payloads.push_back(payload);
    }
    for (Mask b : sp.closed_basis) {
        // Basis sets are closed, hence saturated for the quotient.
        Mask image = 0;
        for (int x = 0; x < sp.n(); ++x)
            if (has(b, x)) image |= bit(q.projection[x]);
        q.space.closed_basis.push_back(image);
    }
    std::sort(q.space.closed_basis.begin(), q.space.closed_basis.end(), canonical_less);
    q.space.closed_basis.erase(
        std::unique(q.space.closed_basis.begin(), q.space.closed_basis.end()),
        q.space.closed_basis.end());
    return q;
}

// ---------------------------------------------------------------------------
// Spectra of a model.

namespace {

// Pairwise nonvanishing masks: left[x] collects the targets y with some
// nonzero shifted Hom x -> y, right[y] the sources.
struct NonvanishTable {
    std::vector<Mask> left, right;
};

NonvanishTable nonvanish(const catmodel::Model& m) {
    NonvanishTable t;
    t.left.assign(m.k(), 0);
    t.right.assign(m.k(), 0);
    for (int x = 0; x < m.k(); ++x)
        for (int y = 0; y < m.k(); ++y)
            if (m.pair_nonzero(x, y)) {
                t.left[x] |= bit(y);
                t.right[y] |= bit(x);
            }
    return t;
}

Mask fast_perp_left(const NonvanishTable& t, Mask s) {
    Mask out = 0;
    for (size_t x = 0; x < t.left.size(); ++x)
        if ((t.left[x] & s) == 0) out |= bit(int(x));
    return out;
}

Mask fast_perp_right(const NonvanishTable& t, Mask s) {
    Mask out = 0;
    for (size_t y = 0; y < t.right.size(); ++y)
        if ((t.right[y] & s) == 0) out |= bit(int(y));
    return out;
}

void finish_spectrum(Spectrum& sp, const std::vector<Mask>& primes) {
    sp.class_support.assign(sp.k, 0);
    for (int c = 0; c < sp.k; ++c)
        for (size_t j = 0; j < primes.size(); ++j)
            if (!has(primes[j], c)) sp.class_support[c] |= bit(int(j));
    std::vector<Mask> basis = sp.class_support;
    std::sort(basis.begin(), basis.end(), canonical_less);
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    sp.space.closed_basis = std::move(basis);
}

}  // namespace

Spectrum shift_spectrum(const catmodel::Model& m) {
    Spectrum sp;
    sp.k = m.k();
    std::vector<Mask> primes;
    if (m.mode == catmodel::Mode::locally_finite) {
        for (int c = 0; c < m.k(); ++c) primes.push_back(catmodel::perp_left(m, bit(c)));
        std::sort(primes.begin(), primes.end(), canonical_less);
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (Mask p : primes) {
            sp.space.names.push_back(m.set_str(p));
            sp.space.payloads.push_back(p);
        }
    } else {
        for (const catmodel::Prime& p : m.primes) {
            primes.push_back(p.members);
            sp.space.names.push_back(p.name);
            sp.space.payloads.push_back(p.members);
        }
    }
    finish_spectrum(sp, primes);
    return sp;
}

Spectrum shift_homological_spectrum(const catmodel::Model& m) {
    if (m.mode != catmodel::Mode::locally_finite)
        throw model_error("the shift-homological spectrum needs a locally finite model; " +
                          m.name + " is declared data");
    Spectrum sp;
    sp.k = m.k();
    for (int c = 0; c < m.k(); ++c) {
        sp.space.names.push_back(m.classes[c].name);
        sp.space.payloads.push_back(bit(c));
    }
    sp.class_support.assign(m.k(), 0);
    for (int c = 0; c < m.k(); ++c)
        for (int x = 0; x < m.k(); ++x)
            if (m.pair_nonzero(c, x)) sp.class_support[c] |= bit(x);
    std::vector<Mask> basis = sp.class_support;
    std::sort(basis.begin(), basis.end(), canonical_less);
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    sp.space.closed_basis = std::move(basis);
    return sp;
}

Mask support(const catmodel::Model& m, const catmodel::FormalObject& c,
             const Spectrum& sp) {
    Mask out = 0;
    for (auto& [id, shift] : c.summands) {
        if (id < 0 || id >= sp.k)
            throw model_error("support: class id " + std::to_string(id) +
                              " is foreign to model " + m.name);
        out |= sp.class_support[id];
    }
    return out;
}

Mask support_of_thick(const Spectrum& sp, Mask thick) {
    Mask out = 0;
    for (int c = 0; c < sp.k; ++c)
        if (has(thick, c)) out |= sp.class_support[c];
    return out;
}

Mask radical(const Spectrum& sp, Mask thick) {
    Mask out = full_mask(sp.k);
    for (Mask p : sp.space.payloads)
        if (subset(thick, p)) out &= p;
    return out;
}

Mask psi(const Spectrum& sp, Mask points) {
    Mask out = 0;
    for (int c = 0; c < sp.k; ++c)
        if (subset(sp.class_support[c], points)) out |= bit(c);
    return out;
}

std::vector<ClassifyRow> classify(const Spectrum& sp, int jobs) {
    int np = sp.space.n();
    if (np > 62) throw guard_error("classification over " + std::to_string(np) + " points");
    std::uint64_t total = std::uint64_t(1) << np;
    check_guard(total, candidate_guard(), "classification");
    auto rows = parallel_chunks<ClassifyRow>(
        total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<ClassifyRow> part;
            for (std::uint64_t u = lo; u < hi; ++u) {
                Mask th = psi(sp, Mask(u));
                if (support_of_thick(sp, th) == Mask(u)) part.push_back({Mask(u), th});
            }
            return part;
        });
    for (const ClassifyRow& r : rows)
        if (radical(sp, r.thick) != r.thick)
            throw model_error("classification produced a non-radical thick set");
    std::sort(rows.begin(), rows.end(), [](const ClassifyRow& a, const ClassifyRow& b) {
        return canonical_less(a.points, b.points);
    });
    return rows;
}

// ---------------------------------------------------------------------------
// Thick lattices and comparison spaces.

ThickLattice enumerate_thicks(const catmodel::Model& m, int jobs) {
    ThickLattice lat;
    if (m.mode == catmodel::Mode::locally_finite) {
        std::uint64_t total = std::uint64_t(1) << m.k();
        check_guard(total, candidate_guard(), "thick-subcategory enumeration");
        NonvanishTable t = nonvanish(m);
        lat.elements = parallel_chunks<Mask>(
            total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
                std::vector<Mask> part;
                for (std::uint64_t s = lo; s < hi; ++s)
                    if (fast_perp_right(t, fast_perp_left(t, Mask(s))) == Mask(s))
                        part.push_back(Mask(s));
                return part;
            });
    } else {
        if (!m.lattice)
            throw model_error("model " + m.name +
                              " declares no thick-subcategory lattice");
        for (const catmodel::LatticeElement& e : *m.lattice) lat.elements.push_back(e.members);
    }
    std::sort(lat.elements.begin(), lat.elements.end(), canonical_less);
    lat.elements.erase(std::unique(lat.elements.begin(), lat.elements.end()),
                       lat.elements.end());
    return lat;
}

int lattice_find(const ThickLattice& lat, Mask members) {
    for (size_t i = 0; i < lat.elements.size(); ++i)
        if (lat.elements[i] == members) return int(i);
    return -1;
}

std::vector<std::pair<int, int>> lattice_covers(const ThickLattice& lat) {
    // Elements are in size-ascending order, so scanning upward lists the
    // strict supersets in a linear extension; a superset is a cover iff it
    // contains no previously found cover.
    std::vector<std::pair<int, int>> covers;
    int e = int(lat.elements.size());
    for (int i = 0; i < e; ++i) {
        std::vector<int> mins;
        for (int j = 0; j < e; ++j) {
            if (lat.elements[i] == lat.elements[j] ||
                !subset(lat.elements[i], lat.elements[j]))
                continue;
            bool dominated = false;
            for (int c : mins)
                if (subset(lat.elements[c], lat.elements[j])) {
                    dominated = true;
                    break;
                }
            if (!dominated) mins.push_back(j);
        }
        for (int j : mins) covers.push_back({i, j});
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

FiniteSpace matsui_spectrum(const catmodel::Model& m, const ThickLattice& lat) {
    FiniteSpace sp;
    int e = int(lat.elements.size());
    // Elements are sorted by size, so strict supersets of an element all lie
    // beyond its size block; precompute the block starts.
    std::vector<int> block_start(66, e);
    for (int j = e - 1; j >= 0; --j) block_start[popcount(lat.elements[j])] = j;
    for (int p = 64; p >= 0; --p) block_start[p] = std::min(block_start[p], block_start[p + 1]);
    for (int i = 0; i < e; ++i) {
        // Scan for minimal strict supersets in size order, keeping only those
        // not containing an earlier-kept one; stop at the second.
        std::vector<int> mins;
        for (int j = block_start[popcount(lat.elements[i]) + 1];
             j < e && int(mins.size()) < 2; ++j) {
            if (!subset(lat.elements[i], lat.elements[j])) continue;
            bool dominated = false;
            for (int c : mins)
                if (subset(lat.elements[c], lat.elements[j])) {
                    dominated = true;
                    break;
                }
            if (!dominated) mins.push_back(j);
        }
        if (mins.size() == 1) {
            sp.names.push_back(m.set_str(lat.elements[i]));
            sp.payloads.push_back(lat.elements[i]);
        }
    }
    std::vector<Mask> basis;
    for (int c = 0; c < m.k(); ++c) {
        Mask b = 0;
        for (int j = 0; j < sp.n(); ++j)
            if (!has(sp.payloads[j], c)) b |= bit(j);
        basis.push_back(b);
    }
    std::sort(basis.begin(), basis.end(), canonical_less);
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    sp.closed_basis = std::move(basis);
    return sp;
}

FiniteSpace fspcnt_space(const catmodel::Model& m, const ThickLattice& lat) {
    FiniteSpace sp;
    int e = int(lat.elements.size());
    for (int i = 0; i < e; ++i) {
        sp.names.push_back(m.set_str(lat.elements[i]));
        sp.payloads.push_back(lat.elements[i]);
    }
    std::vector<Mask> basis;
    for (int i = 0; i < e; ++i) {
        Mask up = 0;
        for (int j = 0; j < e; ++j)
            if (subset(lat.elements[i], lat.elements[j])) up |= bit(j);
        basis.push_back(up);
    }
    std::sort(basis.begin(), basis.end(), canonical_less);
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    sp.closed_basis = std::move(basis);
    return sp;
}

std::vector<bool> is_discrete_criterion(const catmodel::Model& m) {
    if (m.mode != catmodel::Mode::locally_finite)
        throw model_error("the discreteness criterion needs a locally finite model; " +
                          m.name + " is declared data");
    std::vector<bool> out;
    for (int c = 0; c < m.k(); ++c)
        out.push_back(catmodel::thick_closure(m, bit(c)) == bit(c));
    return out;
}

bool kq_agrees_with_sspec(const catmodel::Model& m) {
    Spectrum hs = shift_homological_spectrum(m);
    Spectrum ss = shift_spectrum(m);
    Quotient q = kolmogorov_quotient(hs.space);
    std::vector<int> f(q.space.n(), -1);
    for (int c = 0; c < m.k(); ++c) {
        Mask prime = catmodel::perp_left(m, bit(c));
        int target = -1;
        for (int j = 0; j < ss.space.n(); ++j)
            if (ss.space.payloads[j] == prime) target = j;
        if (target < 0) return false;
        int qp = q.projection[c];
        if (f[qp] >= 0 && f[qp] != target) return false;  // not well defined
        f[qp] = target;
    }
    return homeomorphic_under(q.space, ss.space, f);
}

}  // namespace speclab::spectra
