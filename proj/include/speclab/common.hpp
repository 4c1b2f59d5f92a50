#pragma once
// Shared error taxonomy, guard limits and small-set utilities.
//
// Catalogs handled by this library are small by design (at most 64 object
// classes), so sets of classes -- and sets of points of a finite space --
// are stored as 64-bit masks.  Canonical orderings everywhere are
// (popcount, lexicographic-on-sorted-id-lists) so that all enumerations
// and printed output are byte-for-byte deterministic.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace speclab {

// ---------------------------------------------------------------------------
// Errors.  The CLI maps these to stable exit codes.

// Bad command line / bad arguments to an operation.  Exit code 1.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inconsistent or malformed model data, foreign ids, mode violations,
// schema violations.  Exit code 2.
class model_error : public std::runtime_error {
public:
    explicit model_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration would exceed the configured resource guard.  Exit code 3.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_model = 2;
inline constexpr int exit_guard = 3;
inline constexpr int exit_verify = 4;

// ---------------------------------------------------------------------------
// Guards.  Enumerations over candidate subsets are bounded; the bound can be
// raised through the SPECLAB_GUARD environment variable (absolute count).

inline std::uint64_t guard_limit(std::uint64_t fallback) {
    if (const char* env = std::getenv("SPECLAB_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return fallback;
}

// Default bound on candidate subsets visited by classification searches.
inline std::uint64_t candidate_guard() { return guard_limit(std::uint64_t(1) << 18); }
// Default bound on materialized closed families of a finite space.
inline std::uint64_t materialize_guard() { return guard_limit(std::uint64_t(1) << 20); }

inline void check_guard(std::uint64_t need, std::uint64_t limit, const char* what) {
    if (need > limit)
        throw guard_error(std::string(what) + " would visit " + std::to_string(need) +
                          " candidates (guard " + std::to_string(limit) +
                          "; raise with SPECLAB_GUARD)");
}

// ---------------------------------------------------------------------------
// Masks over class ids / point indices.

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask(1) << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_ids(Mask m) {
    std::vector<int> ids;
    for (int i = 0; i < 64; ++i)
        if (has(m, i)) ids.push_back(i);
    return ids;
}

inline Mask ids_mask(const std::vector<int>& ids) {
    Mask m = 0;
    for (int i : ids) m |= bit(i);
    return m;
}

// Order masks by their sorted id lists (so {0,2} < {1} and {1} < {1,2}).
inline bool lex_less(Mask a, Mask b) {
    std::vector<int> va = mask_ids(a), vb = mask_ids(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

// Canonical enumeration order for families of sets: size first, then
// lexicographic on the sorted member lists.
inline bool canonical_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
}

// ---------------------------------------------------------------------------
// Deterministic parallelism: split [0, total) into one contiguous chunk per
// job, run the worker on each chunk, then concatenate the per-chunk results
// in chunk order.  The merged output never depends on the job count.

template <class R>
std::vector<R> parallel_chunks(std::uint64_t total, int jobs,
                               const std::function<std::vector<R>(std::uint64_t, std::uint64_t)>& worker) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || total < 2) return worker(0, total);
    std::uint64_t n = std::min<std::uint64_t>(jobs, total);
    std::vector<std::vector<R>> parts(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::uint64_t c = 0; c < n; ++c) {
        std::uint64_t lo = total * c / n, hi = total * (c + 1) / n;
        threads.emplace_back([&, c, lo, hi] { parts[c] = worker(lo, hi); });
    }
    for (auto& t : threads) t.join();
    std::vector<R> merged;
    for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
    return merged;
}

}  // namespace speclab
