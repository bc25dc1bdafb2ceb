#include "homex/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "homex/connectivity.hpp"
#include "homex/constructions.hpp"
#include "homex/homology.hpp"

namespace homex {

namespace {

// The facet-subset space is indexed by 128-bit words, one bit per possible
// d-face of [n]; C(8,4) = 70 exceeds 64 bits.
using word_t = unsigned __int128;

// Full word scans beyond this many candidate faces are not tractable with
// the permutation-scan canonicalizer.
constexpr int kMaxSpaceBits = 22;

inline int ctz128(word_t w) {
    auto lo = static_cast<unsigned long long>(w);
    if (lo) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<unsigned long long>(w >> 64));
}

// Order matching "lexicographically least sorted facet-bitmask list" for
// equal facet counts: the word owning the lowest differing face index wins.
// Face indices are assigned in ascending bitmask order, so a smaller index
// is a lexicographically smaller facet bitmask.
inline bool word_less(word_t a, word_t b) {
    word_t x = a ^ b;
    if (x == 0) return false;
    word_t low = x & (~x + 1);
    return (a & low) != 0;
}

struct EnumSpace {
    int n = 0, d = 0;
    std::vector<std::uint32_t> face_vmask;          // vertex mask per face
    std::vector<Face> face_obj;
    std::vector<std::vector<std::uint8_t>> face_perm; // induced face maps, [0] = id
    std::uint32_t full_cover = 0;

    int num_faces() const { return static_cast<int>(face_vmask.size()); }
};

EnumSpace build_space(int n, int d) {
    // n! permutation tables; beyond 10 vertices the scan is hopeless anyway
    if (n > 10)
        throw CapacityError("vertex count " + std::to_string(n) +
                            " is too large for the permutation-scan canonicalizer");
    EnumSpace sp;
    sp.n = n;
    sp.d = d;
    sp.full_cover = (1u << n) - 1;

    // All (d+1)-subsets of [n], ascending by bitmask (colex on vertex sets).
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == d + 1) {
            sp.face_vmask.push_back(mask);
            std::vector<vertex_t> vs;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) vs.push_back(v);
            sp.face_obj.push_back(Face(std::move(vs)));
        }

    std::vector<int> index_of_mask(1u << n, -1);
    for (int j = 0; j < sp.num_faces(); ++j)
        index_of_mask[sp.face_vmask[j]] = j;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> row(sp.num_faces());
        for (int j = 0; j < sp.num_faces(); ++j) {
            std::uint32_t img = 0;
            std::uint32_t rest = sp.face_vmask[j];
            while (rest) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                img |= 1u << perm[v];
            }
            row[j] = static_cast<std::uint8_t>(index_of_mask[img]);
        }
        sp.face_perm.push_back(std::move(row));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sp;
}

bool covers_all(word_t w, const EnumSpace& sp) {
    std::uint32_t seen = 0;
    word_t rest = w;
    while (rest) {
        seen |= sp.face_vmask[ctz128(rest)];
        rest &= rest - 1;
    }
    return seen == sp.full_cover;
}

// True iff w is the least word in its relabeling orbit. Permutation 0 is
// the identity and is skipped.
bool is_canonical(word_t w, const EnumSpace& sp) {
    for (std::size_t p = 1; p < sp.face_perm.size(); ++p) {
        const auto& fp = sp.face_perm[p];
        word_t img = 0;
        word_t rest = w;
        while (rest) {
            img |= word_t(1) << fp[ctz128(rest)];
            rest &= rest - 1;
        }
        if (word_less(img, w)) return false;
    }
    return true;
}

SimplicialComplex complex_of(word_t w, const EnumSpace& sp) {
    std::vector<Face> facets;
    word_t rest = w;
    while (rest) {
        facets.push_back(sp.face_obj[ctz128(rest)]);
        rest &= rest - 1;
    }
    return from_facets(std::move(facets));
}

struct RangeResult {
    long long examined = 0;
    long long classes = 0;
    std::vector<SimplicialComplex> witnesses;
};

// Scans [from, to). A canonical word always contains face 0 (some facet can
// be relabeled onto {0..d}, and owning face 0 makes a word smaller), so
// words without it are skipped before any further work.
RangeResult scan_range(const EnumSpace& sp, word_t from, word_t to,
                       const SearchConstraint& c) {
    RangeResult res;
    for (word_t w = from | 1; w < to; w += 2) {
        if (!covers_all(w, sp)) continue;
        ++res.examined;
        if (!is_canonical(w, sp)) continue;
        ++res.classes;
        SimplicialComplex x = complex_of(w, sp);
        if (c.strong_m && !is_strongly_connected(x, *c.strong_m)) continue;
        if (is_homology_nontrivial(x, c.k)) res.witnesses.push_back(std::move(x));
    }
    return res;
}

void validate_constraint(const SearchConstraint& c) {
    if (c.d < 0 || c.k < 0)
        throw PreconditionError("search requires d >= 0 and k >= 0");
    if (c.n < c.d + 1)
        throw PreconditionError("search requires n >= d+1");
    if (c.strong_m && (*c.strong_m > c.d || *c.strong_m < 0 || c.k < 1))
        throw PreconditionError(
            "strong mode requires 0 <= m <= d and k >= 1");
    if (c.n > enumeration_cap())
        throw CapacityError("n=" + std::to_string(c.n) +
                            " exceeds the enumeration cap " +
                            std::to_string(enumeration_cap()) +
                            " (HOMEX_MAX_N overrides)");
}

EnumSpace checked_space(int n, int d) {
    EnumSpace sp = build_space(n, d);
    if (sp.num_faces() > kMaxSpaceBits)
        throw CapacityError(
            "facet-subset space 2^" + std::to_string(sp.num_faces()) +
            " is too large for the canonical scan");
    return sp;
}

} // namespace

int enumeration_cap() {
    const char* env = std::getenv("HOMEX_MAX_N");
    if (!env || !*env) return 8;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw ValidationError("HOMEX_MAX_N must be a positive integer");
    return static_cast<int>(v);
}

void enumerate_pure_canonical(
    int n, int d, const std::function<bool(const SimplicialComplex&)>& visit) {
    SearchConstraint c{d, 0, n, {}};
    validate_constraint(c);
    EnumSpace sp = checked_space(n, d);
    const word_t end = word_t(1) << sp.num_faces();
    for (word_t w = 1; w < end; w += 2) {
        if (!covers_all(w, sp)) continue;
        if (!is_canonical(w, sp)) continue;
        if (!visit(complex_of(w, sp))) return;
    }
}

std::vector<SimplicialComplex> enumerate_pure_canonical(int n, int d) {
    std::vector<SimplicialComplex> out;
    enumerate_pure_canonical(n, d, [&](const SimplicialComplex& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

SearchReport verify_bound(const SearchConstraint& c, int jobs) {
    validate_constraint(c);
    const auto started = std::chrono::steady_clock::now();

    SearchReport report;
    report.constraint = c;
    EnumSpace sp = checked_space(c.n, c.d);
    const word_t end = word_t(1) << sp.num_faces();

    if (jobs < 1) jobs = 1;
    std::vector<RangeResult> parts(jobs);
    if (jobs == 1) {
        parts[0] = scan_range(sp, 1, end, c);
    } else {
        // Fixed prefix partition: contiguous, deterministic chunks. Merge
        // order is worker order, so the report is schedule-independent.
        std::vector<std::thread> pool;
        const word_t chunk = end / jobs + 1;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t]() {
                word_t lo = chunk * t;
                word_t hi = std::min(end, lo + chunk);
                if (lo < hi) parts[t] = scan_range(sp, lo, hi, c);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& part : parts) {
        report.complexes_examined += part.examined;
        report.canonical_classes += part.classes;
        for (auto& w : part.witnesses) report.witnesses.push_back(std::move(w));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

long long expected_minimal_vertices(int d, int k, std::optional<int> strong_m) {
    if (!strong_m) return bound_pure(d, k);
    if (*strong_m > connectivity_threshold(d, k))
        return bound_rel(d, k, *strong_m);
    return bound_pure(d, k); // MH is strongly connected up to the threshold
}

MinimalWitnessResult find_minimal_witness(int d, int k,
                                          std::optional<int> strong_m,
                                          int jobs, std::optional<int> max_n) {
    MinimalWitnessResult res;
    res.expected_bound = expected_minimal_vertices(d, k, strong_m);
    int limit = enumeration_cap();
    if (max_n) limit = std::min(limit, *max_n);
    for (int n = d + 1; n <= limit; ++n) {
        SearchReport rep = verify_bound(SearchConstraint{d, k, n, strong_m}, jobs);
        const bool found = !rep.witnesses.empty();
        if (found) {
            res.n_min = n;
            res.witness = rep.witnesses.front();
        }
        res.reports.push_back(std::move(rep));
        if (found) {
            res.bound_matches = (res.n_min == res.expected_bound);
            return res;
        }
    }
    throw CapacityError("no witness found for d=" + std::to_string(d) + " k=" +
                        std::to_string(k) + " up to n=" + std::to_string(limit));
}

} // namespace homex
