#pragma once

// Shared fixtures and brute-force oracles. Nothing here calls into the
// projective-line or clique code it is used to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ringline/ringline.hpp"

namespace support {

using namespace ringline;

inline FiniteRing gf2() { return ring_gf(2, 1); }
inline FiniteRing gf3() { return ring_gf(3, 1); }
inline FiniteRing gf4() { return ring_gf(2, 2, {1, 1, 1}); }
inline FiniteRing z4() { return ring_zn(4); }
inline FiniteRing t2f2() { return triangular_ring(gf2(), 2); }
inline FiniteRing t2f3() { return triangular_ring(gf3(), 2); }
inline FiniteRing m2f2() { return matrix_ring(gf2(), 2); }

inline FiniteRing alg16_8() {
    return evaluate("alg:2:4:1*2=0.0.0.1");
}

/// Catalog entries that have a construction, evaluated.
inline std::vector<std::pair<CatalogEntry, FiniteRing>> catalog_rings() {
    std::vector<std::pair<CatalogEntry, FiniteRing>> out;
    for (const auto& e : builtin_catalog())
        if (e.recipe) out.emplace_back(e, evaluate(*e.recipe).renamed(e.displayName));
    return out;
}

/// Transport both tables along a permutation fixing 0 and one.
inline FiniteRing relabel(const FiniteRing& r, std::mt19937& rng) {
    const std::size_t n = r.order();
    std::vector<Elem> rest;
    for (Elem x = 0; x < n; ++x)
        if (x != 0 && x != r.one()) rest.push_back(x);
    auto shuffled = rest;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Elem> perm(n);
    perm[0] = 0;
    perm[r.one()] = r.one();
    for (std::size_t i = 0; i < rest.size(); ++i) perm[rest[i]] = shuffled[i];
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            add[perm[a] * n + perm[b]] = perm[r.add(a, b)];
            mul[perm[a] * n + perm[b]] = perm[r.mul(a, b)];
        }
    return validate_ring(add, mul, n, r.one(), r.name());
}

/// All invertible 2x2 matrices by exhaustive search over (M, X) pairs. Order <= 8 only.
inline std::set<Matrix2> invertible_matrices_brute(const FiniteRing& r) {
    const auto n = static_cast<Elem>(r.order());
    std::vector<Matrix2> all;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                for (Elem d = 0; d < n; ++d) all.push_back({a, b, c, d});
    auto product = [&](const Matrix2& x, const Matrix2& y) {
        return Matrix2{r.add(r.mul(x[0], y[0]), r.mul(x[1], y[2])), r.add(r.mul(x[0], y[1]), r.mul(x[1], y[3])),
                       r.add(r.mul(x[2], y[0]), r.mul(x[3], y[2])), r.add(r.mul(x[2], y[1]), r.mul(x[3], y[3]))};
    };
    const Matrix2 id{r.one(), 0, 0, r.one()};
    std::set<Matrix2> out;
    for (const auto& m : all) {
        if (out.count(m)) continue;
        for (const auto& x : all)
            if (product(m, x) == id && product(x, m) == id) {
                out.insert(m);
                out.insert(x);
                break;
            }
    }
    return out;
}

inline bool det_is_unit(const FiniteRing& r, const Matrix2& m) {
    return r.is_unit(r.sub(r.mul(m[0], m[3]), r.mul(m[1], m[2])));
}

/// Plain subset enumeration: is there a set of k pairwise adjacent vertices?
inline bool has_clique_brute(const std::vector<std::vector<bool>>& adj, std::size_t k) {
    const std::size_t n = adj.size();
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        bool clique = true;
        for (std::size_t i = 0; i < k && clique; ++i)
            for (std::size_t j = i + 1; j < k && clique; ++j) clique = adj[idx[i]][idx[j]];
        if (clique) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<std::vector<bool>> dense_adjacency(const ProjectiveLine& line) {
    std::vector<std::vector<bool>> adj(line.size(), std::vector<bool>(line.size()));
    for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = 0; j < line.size(); ++j) adj[i][j] = line.distant(i, j);
    return adj;
}

}  // namespace support
