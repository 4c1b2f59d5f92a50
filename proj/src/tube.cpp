#include "speclab/tube.hpp"

#include <algorithm>
#include <map>

namespace speclab::tube {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

void validate(const TubeObject& r) {
    if (r.rank < 1 || r.length < 1 || r.socle < 0 || r.socle >= r.rank)
        throw model_error("malformed tube object " + r.str() + " (rank " +
                          std::to_string(r.rank) + ")");
}

void require_same_rank(const TubeObject& r, const TubeObject& t) {
    validate(r);
    validate(t);
    if (r.rank != t.rank)
        throw model_error("tube rank mismatch: " + std::to_string(r.rank) + " vs " +
                          std::to_string(t.rank));
}

void validate_arcs(const ArcCollection& c) {
    if (c.rank < 1) throw usage_error("arc collection needs a positive rank");
    for (const Arc& a : c.arcs) {
        if (a.start < 0 || a.start >= c.rank || a.end < 0 || a.end >= c.rank)
            throw usage_error("arc " + a.str() + " out of range for rank " +
                              std::to_string(c.rank));
        if (a.start == a.end) throw usage_error("degenerate arc " + a.str());
    }
}

}  // namespace

int top(const TubeObject& r) {
    validate(r);
    return mod(r.socle + r.length - 1, r.rank);
}

TubeObject tau(const TubeObject& r) {
    validate(r);
    return TubeObject{r.rank, mod(r.socle - 1, r.rank), r.length};
}

TubeObject tau_inverse(const TubeObject& r) {
    validate(r);
    return TubeObject{r.rank, mod(r.socle + 1, r.rank), r.length};
}

bool hom_nonzero(const TubeObject& r, const TubeObject& t) {
    require_same_rank(r, t);
    int d0 = mod(top(r) - t.socle, r.rank);
    return d0 <= t.length - 1 && r.length >= d0 + 1;
}

int hom_dim(const TubeObject& r, const TubeObject& t) {
    require_same_rank(r, t);
    // Count c in [1, min(length r, length t)] with c = d0 + 1 mod rank: one
    // basis map for each way the coray through t meets the ray through r.
    int d0 = mod(top(r) - t.socle, r.rank);
    int cap = std::min(r.length, t.length);
    if (d0 + 1 > cap) return 0;
    return (cap - d0 - 1) / r.rank + 1;
}

bool ext_nonzero(const TubeObject& r, const TubeObject& t) {
    require_same_rank(r, t);
    return hom_nonzero(t, tau(r));
}

int ext_dim(const TubeObject& r, const TubeObject& t) {
    require_same_rank(r, t);
    return hom_dim(t, tau(r));
}

TubeObject brick_of_arc(int rank, const Arc& a) {
    int m = mod(a.end - a.start, rank);
    return TubeObject{rank, mod(a.start, rank), m};
}

// ---------------------------------------------------------------------------

namespace {

// Is x strictly inside the clockwise open span (s, e)?
// Two arcs cross exactly when their bricks admit a nonzero map in some
// direction.  This subsumes the endpoint rules: equal starts or equal ends
// force a map between the nested bricks, while head-to-tail sharing and
// proper nesting leave both Hom spaces zero.
bool arcs_conflict(const Arc& a, const Arc& b, int n) {
    TubeObject x = brick_of_arc(n, a), y = brick_of_arc(n, b);
    return hom_nonzero(x, y) || hom_nonzero(y, x);
}

}  // namespace

bool is_noncrossing(const ArcCollection& c) {
    validate_arcs(c);
    for (size_t i = 0; i < c.arcs.size(); ++i)
        for (size_t j = i + 1; j < c.arcs.size(); ++j)
            if (arcs_conflict(c.arcs[i], c.arcs[j], c.rank)) return false;
    return true;
}

namespace {

// Arcs of a non-crossing collection form a functional graph under
// "successor = the arc starting where this one ends"; at most one cycle can
// exist.  Returns the cycle as a list of arcs in chain order (starting from
// the smallest start), or an empty list.
std::vector<Arc> find_cycle(const ArcCollection& c) {
    std::map<int, int> arc_at_start;
    for (size_t i = 0; i < c.arcs.size(); ++i) arc_at_start[c.arcs[i].start] = int(i);
    int k = int(c.arcs.size());
    std::vector<int> state(k, 0);  // 0 unvisited, 1 on path, 2 done
    for (int root = 0; root < k; ++root) {
        if (state[root]) continue;
        std::vector<int> path;
        int cur = root;
        while (cur >= 0 && state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            auto it = arc_at_start.find(c.arcs[cur].end);
            cur = it == arc_at_start.end() ? -1 : it->second;
        }
        if (cur >= 0 && state[cur] == 1) {
            // Found the cycle: the tail of the path starting at cur.
            std::vector<Arc> cycle;
            bool in = false;
            for (int idx : path) {
                if (idx == cur) in = true;
                if (in) cycle.push_back(c.arcs[idx]);
            }
            // Rotate so the chain starts at the smallest start residue.
            size_t best = 0;
            for (size_t i = 1; i < cycle.size(); ++i)
                if (cycle[i].start < cycle[best].start) best = i;
            std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
            return cycle;
        }
        for (int idx : path) state[idx] = 2;
    }
    return {};
}

}  // namespace

bool is_exceptional(const ArcCollection& c) {
    if (!is_noncrossing(c)) throw usage_error("is_exceptional requires a non-crossing collection");
    return find_cycle(c).empty();
}

std::vector<TubeObject> objects_up_to(int rank, int L) {
    if (rank < 1 || L < 0) throw usage_error("objects_up_to requires rank >= 1 and L >= 0");
    std::vector<TubeObject> out;
    for (int s = 0; s < rank; ++s)
        for (int m = 1; m <= L; ++m) out.push_back(TubeObject{rank, s, m});
    return out;
}

std::vector<TubeObject> wide_from_arcs(const ArcCollection& c, int L_max) {
    if (!is_noncrossing(c)) throw usage_error("wide_from_arcs requires a non-crossing collection");
    int n = c.rank;
    std::vector<TubeObject> bricks;
    for (const Arc& a : c.arcs) bricks.push_back(brick_of_arc(n, a));
    // admits[s][L]: R_s^L has a filtration by the bricks.  A submodule of the
    // uniserial R_s^L shares its socle, so the first factor must be a brick
    // with socle s; the quotient starts where that brick ends.
    std::vector<std::vector<int>> admits(n, std::vector<int>(L_max + 1, -1));
    auto rec = [&](auto&& self, int s, int L) -> bool {
        if (L == 0) return true;
        int& memo = admits[s][L];
        if (memo >= 0) return memo;
        memo = 0;
        for (const TubeObject& b : bricks)
            if (b.socle == s && b.length <= L && self(self, mod(s + b.length, n), L - b.length)) {
                memo = 1;
                break;
            }
        return memo;
    };
    std::vector<TubeObject> out;
    for (const TubeObject& x : objects_up_to(n, L_max))
        if (rec(rec, x.socle, x.length)) out.push_back(x);
    return out;
}

std::vector<TubeObject> perp_set(const std::vector<TubeObject>& z, int rank, int L_max) {
    std::vector<TubeObject> out;
    for (const TubeObject& x : objects_up_to(rank, L_max)) {
        bool ok = true;
        for (const TubeObject& t : z)
            if (hom_nonzero(x, t) || ext_nonzero(x, t)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// perp_object.

namespace {

// Objects supported on a run of g consecutive simples starting at w0 form a
// type-A subquiver line.  Coordinates: (a, m) with 0 <= a < g, 1 <= m <= g-a
// names R_{w0+a}^m.  Find the smallest subset Z of the line with
// perp(Z) (inside the line) equal to the filtration closure of the target
// bricks; existence is guaranteed because every wide subcategory of a
// finite-type hereditary module category is such a perpendicular.
std::vector<TubeObject> line_perp(int n, int w0, int g,
                                  const std::vector<TubeObject>& target_bricks) {
    if (g <= 0) {
        if (!target_bricks.empty()) throw model_error("line_perp: bricks in an empty window");
        return {};
    }
    struct LineObj { int a, m; };
    std::vector<LineObj> objs;
    for (int a = 0; a < g; ++a)
        for (int m = 1; m + a <= g; ++m) objs.push_back({a, m});
    int G = int(objs.size());
    check_guard(G >= 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << G), candidate_guard(),
                "line perpendicular search");

    auto to_obj = [&](const LineObj& o) { return TubeObject{n, mod(w0 + o.a, n), o.m}; };

    // Filtration closure of the target bricks within the line.
    std::vector<std::pair<int, int>> bricks;  // (a, m) coordinates
    for (const TubeObject& b : target_bricks) {
        int a = mod(b.socle - w0, n);
        if (a >= g || a + b.length > g)
            throw model_error("line_perp: brick " + b.str() + " does not fit the window");
        bricks.push_back({a, b.length});
    }
    std::vector<std::vector<int>> admits(g + 1, std::vector<int>(g + 1, -1));
    auto rec = [&](auto&& self, int a, int rem) -> bool {
        if (rem == 0) return true;
        if (a >= g) return false;
        int& memo = admits[a][rem];
        if (memo >= 0) return memo;
        memo = 0;
        for (auto& [ba, bm] : bricks)
            if (ba == a && bm <= rem && self(self, a + bm, rem - bm)) {
                memo = 1;
                break;
            }
        return memo;
    };
    std::uint64_t want = 0;
    for (int i = 0; i < G; ++i)
        if (rec(rec, objs[i].a, objs[i].m)) want |= std::uint64_t(1) << i;

    auto perp_of = [&](std::uint64_t zmask) {
        std::uint64_t p = 0;
        for (int i = 0; i < G; ++i) {
            TubeObject x = to_obj(objs[i]);
            bool ok = true;
            for (int jj = 0; jj < G && ok; ++jj)
                if ((zmask >> jj) & 1) {
                    TubeObject t = to_obj(objs[jj]);
                    if (hom_nonzero(x, t) || ext_nonzero(x, t)) ok = false;
                }
            if (ok) p |= std::uint64_t(1) << i;
        }
        return p;
    };

    // Subsets in canonical order: smallest size first, lexicographic within a
    // size (combination enumeration over line coordinates).
    for (int size = 0; size <= G; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::uint64_t zmask = 0;
            for (int i : idx) zmask |= std::uint64_t(1) << i;
            if (perp_of(zmask) == want) {
                std::vector<TubeObject> out;
                for (int i : idx) out.push_back(to_obj(objs[i]));
                return out;
            }
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == G - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    throw model_error("line_perp: no perpendicular witness found (inconsistent data)");
}

}  // namespace

std::vector<TubeObject> perp_object(const ArcCollection& c) {
    if (!is_noncrossing(c)) throw usage_error("perp_object requires a non-crossing collection");
    int n = c.rank;
    if (c.arcs.empty()) return {};

    std::vector<Arc> cycle = find_cycle(c);
    std::vector<TubeObject> z;

    if (!cycle.empty()) {
        // Chain case: the cycle arcs tile the circle; Z gets one object of
        // length m_u - 1 per chain arc, then each remaining arc nests inside
        // the open window of exactly one chain arc and is handled there.
        std::vector<Arc> rest;
        for (const Arc& a : c.arcs)
            if (std::find(cycle.begin(), cycle.end(), a) == cycle.end()) rest.push_back(a);

        for (const Arc& u : cycle) {
            TubeObject b = brick_of_arc(n, u);
            if (b.length >= 2) z.push_back(TubeObject{n, b.socle, b.length - 1});
        }
        for (const Arc& u : cycle) {
            TubeObject b = brick_of_arc(n, u);
            int g = b.length - 2;
            std::vector<TubeObject> targets;
            for (const Arc& r : rest) {
                TubeObject rb = brick_of_arc(n, r);
                int rel = mod(rb.socle - u.start, n);
                if (rel >= 1 && rel + rb.length <= b.length - 1) targets.push_back(rb);
            }
            if (g <= 0 && !targets.empty())
                throw model_error("perp_object: nested arc without a window");
            std::vector<TubeObject> z2 = line_perp(n, mod(u.start + 1, n), g, targets);
            z.insert(z.end(), z2.begin(), z2.end());
        }
        size_t assigned = 0;
        for (const Arc& u : cycle) {
            TubeObject b = brick_of_arc(n, u);
            for (const Arc& r : rest) {
                TubeObject rb = brick_of_arc(n, r);
                int rel = mod(rb.socle - u.start, n);
                if (rel >= 1 && rel + rb.length <= b.length - 1) ++assigned;
            }
        }
        if (assigned != rest.size())
            throw model_error("perp_object: an arc escaped every chain window");
        return z;
    }

    // Exceptional case: pick the smallest marked point i not covered by any
    // brick span (one exists: maximal head-to-tail chains of a non-crossing
    // acyclic collection span proper intervals that are pairwise nested or
    // disjoint and never abut, so they cannot tile the circle).  Adding the
    // short arc (i, i+1) keeps the collection non-crossing, R_i^n cuts the
    // tube down to the type-A line on the other n-1 simples, and the
    // collection is finished off inside that line.
    std::vector<TubeObject> bricks;
    for (const Arc& a : c.arcs) bricks.push_back(brick_of_arc(n, a));
    int uncovered = -1;
    for (int i = 0; i < n && uncovered < 0; ++i) {
        bool covered = false;
        for (const TubeObject& b : bricks)
            if (mod(i - b.socle, n) < b.length) {
                covered = true;
                break;
            }
        if (!covered) uncovered = i;
    }
    if (uncovered < 0)
        throw model_error("perp_object: exceptional collection covering every point");
    z.push_back(TubeObject{n, uncovered, n});
    std::vector<TubeObject> z2 = line_perp(n, mod(uncovered + 1, n), n - 1, bricks);
    z.insert(z.end(), z2.begin(), z2.end());
    return z;
}

std::vector<ArcCollection> enumerate_noncrossing(int n) {
    if (n < 1) throw usage_error("enumerate_noncrossing requires n >= 1");
    std::vector<Arc> all;
    for (int s = 0; s < n; ++s)
        for (int e = 0; e < n; ++e)
            if (s != e) all.push_back(Arc{s, e});

    std::vector<ArcCollection> out;
    std::uint64_t visited = 0;
    const std::uint64_t limit = candidate_guard();
    std::vector<Arc> cur;
    auto dfs = [&](auto&& self, size_t next) -> void {
        if (++visited > limit)
            throw guard_error("enumerate_noncrossing guard exceeded (raise with SPECLAB_GUARD)");
        out.push_back(ArcCollection{n, cur});
        for (size_t i = next; i < all.size(); ++i) {
            bool ok = true;
            for (const Arc& a : cur)
                if (arcs_conflict(a, all[i], n)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(all[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(), [](const ArcCollection& x, const ArcCollection& y) {
        if (x.arcs.size() != y.arcs.size()) return x.arcs.size() < y.arcs.size();
        return x.arcs < y.arcs;
    });
    return out;
}

}  // namespace speclab::tube
