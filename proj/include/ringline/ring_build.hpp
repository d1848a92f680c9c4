#pragma once

/**
 * @file ring_build.hpp
 * @brief Constructors producing validated FiniteRing values.
 *
 * Every constructor tabulates its operations on a canonical indexing and then
 * passes the tables through validate_ring(). Canonical indexings:
 *
 * - Z_n: the residue itself.
 * - GF(p^k): sum of c_i p^i over the residue polynomial c_0 + c_1 x + ...
 * - R1 x R2: i1 * |R2| + i2.
 * - matrix and triangular rings: entries (row-major, upper part only for the
 *   triangular case) read as base-|R| digits, first entry most significant.
 * - dual and skew dual numbers a + b x: a * |F| + b.
 * - structure-constant algebras: coefficient vector (c_0 .. c_{k-1}) as base-m
 *   digits, c_0 most significant, so the unity e_0 sits at m^(k-1).
 * - subring closures: lexicographic order of the member matrices.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ringline/finite_ring.hpp"
#include "ringline/ring_structure.hpp"

namespace ringline {

namespace detail {

inline std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > kMaxTableOrder) break;
        result *= base;
    }
    return result;
}

template <class AddFn, class MulFn>
FiniteRing tabulate(std::size_t order, Elem one, AddFn&& add, MulFn&& mul, std::string name) {
    if (order > kMaxTableOrder)
        throw Error(ErrorCode::OrderTooLarge, name + " would have order " + std::to_string(order) +
                                                  " > " + std::to_string(kMaxTableOrder));
    std::vector<Elem> a(order * order), m(order * order);
    for (Elem x = 0; x < order; ++x)
        for (Elem y = 0; y < order; ++y) {
            a[x * order + y] = add(x, y);
            m[x * order + y] = mul(x, y);
        }
    return validate_ring(std::move(a), std::move(m), order, one, std::move(name));
}

/// Digits of index in base `base`, most significant first.
inline std::vector<Elem> digits(Elem index, std::size_t base, std::size_t count) {
    std::vector<Elem> d(count);
    for (std::size_t i = count; i-- > 0;) {
        d[i] = static_cast<Elem>(index % base);
        index /= static_cast<Elem>(base);
    }
    return d;
}

inline Elem undigits(const std::vector<Elem>& d, std::size_t base) {
    Elem index = 0;
    for (Elem x : d) index = static_cast<Elem>(index * base + x);
    return index;
}

inline bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using Poly = std::vector<int>;  // coefficients c_0 .. c_deg over Z_p

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f modulo monic g over Z_p.
inline Poly poly_mod(Poly f, const Poly& g, int p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const int lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
        trim(f);
    }
    return f;
}

/// Exhaustive check: no monic polynomial of degree 1..deg/2 divides f.
inline bool is_irreducible(const Poly& f, int p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::size_t count = checked_pow(static_cast<std::size_t>(p), d);
        for (std::size_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::size_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<int>(c % p);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::vector<Elem> mat_mul(const FiniteRing& r, const std::vector<Elem>& x, const std::vector<Elem>& y,
                                 std::size_t n) {
    std::vector<Elem> z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc = r.add(acc, r.mul(x[i * n + k], y[k * n + j]));
            z[i * n + j] = acc;
        }
    return z;
}

inline std::vector<Elem> mat_add(const FiniteRing& r, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    std::vector<Elem> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = r.add(x[i], y[i]);
    return z;
}

inline std::vector<Elem> mat_identity(const FiniteRing& r, std::size_t n) {
    std::vector<Elem> z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = r.one();
    return z;
}

}  // namespace detail

inline FiniteRing ring_zn(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "Z_n needs n >= 2");
    return detail::tabulate(
        n, 1, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
        [n](Elem a, Elem b) { return static_cast<Elem>((std::size_t{a} * b) % n); }, "Z" + std::to_string(n));
}

/// Lexicographically first monic irreducible polynomial of degree k over Z_p.
inline std::vector<int> default_irreducible(int p, std::size_t k) {
    const std::size_t count = detail::checked_pow(static_cast<std::size_t>(p), k);
    for (std::size_t code = 0; code < count; ++code) {
        detail::Poly f(k + 1, 0);
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i, c /= p) f[i] = static_cast<int>(c % p);
        f[k] = 1;
        if (k == 1 || detail::is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

/**
 * GF(p^k) as Z_p[x]/(poly). `poly` lists coefficients c_0..c_k of a monic
 * degree-k polynomial; an empty list selects default_irreducible(p, k).
 */
inline FiniteRing ring_gf(int p, std::size_t k, std::vector<int> poly = {}) {
    if (!detail::is_prime(static_cast<std::size_t>(p)))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "GF degree must be at least 1");
    if (poly.empty()) poly = default_irreducible(p, k);
    if (poly.size() != k + 1 || poly.back() % p != 1)
        throw Error(ErrorCode::InvalidArgument, "polynomial must be monic of degree " + std::to_string(k));
    for (int& c : poly) c = ((c % p) + p) % p;
    if (!detail::is_irreducible(poly, p)) throw Error(ErrorCode::NotIrreducible, "polynomial is reducible over Z_p");

    const std::size_t q = detail::checked_pow(static_cast<std::size_t>(p), k);
    auto decode = [&](Elem x) {
        detail::Poly f(k, 0);
        for (std::size_t i = 0; i < k; ++i, x /= p) f[i] = static_cast<int>(x % p);
        return f;
    };
    auto encode = [&](const detail::Poly& f) {
        Elem x = 0;
        for (std::size_t i = f.size(); i-- > 0;) x = static_cast<Elem>(x * p + f[i]);
        return x;
    };
    auto add = [&](Elem a, Elem b) {
        auto fa = decode(a), fb = decode(b);
        for (std::size_t i = 0; i < k; ++i) fa[i] = (fa[i] + fb[i]) % p;
        return encode(fa);
    };
    auto mul = [&](Elem a, Elem b) {
        auto fa = decode(a), fb = decode(b);
        detail::Poly prod(2 * k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
        return encode(detail::poly_mod(prod, poly, p));
    };
    const std::string name = k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(q) + ")";
    return detail::tabulate(q, 1, add, mul, name);
}

inline FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2) {
    const std::size_t n2 = r2.order();
    const std::size_t order = r1.order() * n2;
    auto split = [n2](Elem x) { return std::pair<Elem, Elem>{static_cast<Elem>(x / n2), static_cast<Elem>(x % n2)}; };
    auto join = [n2](Elem a, Elem b) { return static_cast<Elem>(a * n2 + b); };
    return detail::tabulate(
        order, join(r1.one(), r2.one()),
        [&](Elem x, Elem y) {
            auto [a1, a2] = split(x);
            auto [b1, b2] = split(y);
            return join(r1.add(a1, b1), r2.add(a2, b2));
        },
        [&](Elem x, Elem y) {
            auto [a1, a2] = split(x);
            auto [b1, b2] = split(y);
            return join(r1.mul(a1, b1), r2.mul(a2, b2));
        },
        r1.name() + "x" + r2.name());
}

/// Full n x n matrix ring over r.
inline FiniteRing matrix_ring(const FiniteRing& r, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    const std::size_t q = r.order();
    const std::size_t order = detail::checked_pow(q, n * n);
    if (order > kMaxTableOrder)
        throw Error(ErrorCode::OrderTooLarge, "M" + std::to_string(n) + "(" + r.name() + ") exceeds table limit");
    const std::string name = n == 1 ? r.name() : "M" + std::to_string(n) + "(" + r.name() + ")";
    auto dec = [&](Elem x) { return detail::digits(x, q, n * n); };
    auto enc = [&](const std::vector<Elem>& m) { return detail::undigits(m, q); };
    return detail::tabulate(
        order, enc(detail::mat_identity(r, n)),
        [&](Elem x, Elem y) { return enc(detail::mat_add(r, dec(x), dec(y))); },
        [&](Elem x, Elem y) { return enc(detail::mat_mul(r, dec(x), dec(y), n)); }, name);
}

/// Upper-triangular n x n matrices over r.
inline FiniteRing triangular_ring(const FiniteRing& r, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    const std::size_t q = r.order();
    const std::size_t slots = n * (n + 1) / 2;
    const std::size_t order = detail::checked_pow(q, slots);
    if (order > kMaxTableOrder)
        throw Error(ErrorCode::OrderTooLarge, "T" + std::to_string(n) + "(" + r.name() + ") exceeds table limit");
    auto dec = [&](Elem x) {
        auto d = detail::digits(x, q, slots);
        std::vector<Elem> m(n * n, 0);
        std::size_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m[i * n + j] = d[s++];
        return m;
    };
    auto enc = [&](const std::vector<Elem>& m) {
        std::vector<Elem> d;
        d.reserve(slots);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) d.push_back(m[i * n + j]);
        return detail::undigits(d, q);
    };
    return detail::tabulate(
        order, enc(detail::mat_identity(r, n)),
        [&](Elem x, Elem y) { return enc(detail::mat_add(r, dec(x), dec(y))); },
        [&](Elem x, Elem y) { return enc(detail::mat_mul(r, dec(x), dec(y), n)); },
        "T" + std::to_string(n) + "(" + r.name() + ")");
}

/// x -> x^e, as an index permutation candidate.
inline std::vector<Elem> power_map(const FiniteRing& r, std::size_t e) {
    std::vector<Elem> map(r.order());
    for (Elem x = 0; x < r.order(); ++x) {
        Elem acc = r.one();
        for (std::size_t i = 0; i < e; ++i) acc = r.mul(acc, x);
        map[x] = acc;
    }
    return map;
}

/// Frobenius x -> x^p where p is the characteristic.
inline std::vector<Elem> frobenius(const FiniteRing& r) { return power_map(r, characteristic(r)); }

inline bool is_automorphism(const FiniteRing& r, const std::vector<Elem>& sigma) {
    if (sigma.size() != r.order()) return false;
    std::vector<char> hit(r.order(), 0);
    for (Elem v : sigma) {
        if (v >= r.order() || hit[v]) return false;
        hit[v] = 1;
    }
    if (sigma[r.one()] != r.one()) return false;
    for (Elem a = 0; a < r.order(); ++a)
        for (Elem b = 0; b < r.order(); ++b)
            if (sigma[r.add(a, b)] != r.add(sigma[a], sigma[b]) || sigma[r.mul(a, b)] != r.mul(sigma[a], sigma[b]))
                return false;
    return true;
}

/// a + b x with x^2 = 0 and x c = sigma(c) x.
inline FiniteRing skew_dual_numbers(const FiniteRing& f, const std::vector<Elem>& sigma) {
    if (!is_automorphism(f, sigma))
        throw Error(ErrorCode::NotAutomorphism, "map is not a ring automorphism of " + f.name());
    const std::size_t q = f.order();
    bool identity = true;
    for (Elem x = 0; x < q; ++x) identity = identity && sigma[x] == x;
    auto split = [q](Elem x) { return std::pair<Elem, Elem>{static_cast<Elem>(x / q), static_cast<Elem>(x % q)}; };
    auto join = [q](Elem a, Elem b) { return static_cast<Elem>(a * q + b); };
    // (a + b x)(c + d x) = ac + (a d + b sigma(c)) x
    return detail::tabulate(
        q * q, join(f.one(), 0),
        [&](Elem x, Elem y) {
            auto [a, b] = split(x);
            auto [c, d] = split(y);
            return join(f.add(a, c), f.add(b, d));
        },
        [&](Elem x, Elem y) {
            auto [a, b] = split(x);
            auto [c, d] = split(y);
            return join(f.mul(a, c), f.add(f.mul(a, d), f.mul(b, sigma[c])));
        },
        identity ? f.name() + "[x]/<x^2>" : f.name() + "[x;sigma]/<x^2>");
}

/// F[x]/<x^2> for commutative F.
inline FiniteRing quotient_dual_numbers(const FiniteRing& f) {
    if (!is_commutative(f)) throw Error(ErrorCode::InvalidArgument, f.name() + " is not commutative");
    std::vector<Elem> id(f.order());
    for (Elem x = 0; x < f.order(); ++x) id[x] = x;
    return skew_dual_numbers(f, id);
}

/**
 * Free Z_m-module on e_0..e_{k-1} with product e_i e_j = sum_l c[i][j][l] e_l
 * extended bilinearly; e_0 is the designated unity. Ring axioms are left to
 * the validator, so malformed constants surface as AxiomViolation.
 */
inline FiniteRing structure_constants_algebra(std::size_t m, std::size_t k,
                                              const std::vector<std::vector<std::vector<int>>>& constants,
                                              std::string name = "") {
    if (m < 2 || k < 1) throw Error(ErrorCode::InvalidArgument, "need modulus >= 2 and rank >= 1");
    if (constants.size() != k)
        throw Error(ErrorCode::InvalidArgument, "structure constants must be a k x k table of k-vectors");
    for (const auto& row : constants) {
        if (row.size() != k) throw Error(ErrorCode::InvalidArgument, "structure constant row has wrong length");
        for (const auto& v : row)
            if (v.size() != k) throw Error(ErrorCode::InvalidArgument, "structure constant vector has wrong length");
    }
    const std::size_t order = detail::checked_pow(m, k);
    auto mod = [m](long v) { return static_cast<Elem>(((v % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m)); };
    auto dec = [&](Elem x) { return detail::digits(x, m, k); };
    auto enc = [&](const std::vector<Elem>& v) { return detail::undigits(v, m); };
    std::vector<Elem> unit(k, 0);
    unit[0] = 1;
    if (name.empty()) name = "A(Z" + std::to_string(m) + "^" + std::to_string(k) + ")";
    return detail::tabulate(
        order, enc(unit),
        [&](Elem x, Elem y) {
            auto u = dec(x), v = dec(y);
            for (std::size_t i = 0; i < k; ++i) u[i] = mod(long{u[i]} + v[i]);
            return enc(u);
        },
        [&](Elem x, Elem y) {
            auto u = dec(x), v = dec(y);
            std::vector<long> w(k, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (u[i] == 0 || v[j] == 0) continue;
                    for (std::size_t l = 0; l < k; ++l) w[l] += long{u[i]} * v[j] * constants[i][j][l];
                }
            std::vector<Elem> out(k);
            for (std::size_t l = 0; l < k; ++l) out[l] = mod(w[l]);
            return enc(out);
        },
        std::move(name));
}

/// Smallest subring of M_n(base) containing the identity and the generators
/// (each a row-major n*n entry list).
inline FiniteRing matrix_subring_closure(const FiniteRing& base, std::size_t n,
                                         const std::vector<std::vector<Elem>>& generators,
                                         std::string name = "") {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    using Mat = std::vector<Elem>;
    std::vector<Mat> members{Mat(n * n, 0), detail::mat_identity(base, n)};
    for (const auto& g : generators) {
        if (g.size() != n * n) throw Error(ErrorCode::InvalidArgument, "generator has wrong number of entries");
        for (Elem e : g)
            if (e >= base.order()) throw Error(ErrorCode::InvalidArgument, "generator entry out of range");
        members.push_back(g);
    }
    std::map<Mat, std::size_t> index;
    std::vector<Mat> uniq;
    auto insert = [&](Mat m) {
        if (index.emplace(m, uniq.size()).second) {
            uniq.push_back(std::move(m));
            if (uniq.size() > kMaxTableOrder)
                throw Error(ErrorCode::ClosureTooLarge, "closure exceeds " + std::to_string(kMaxTableOrder) +
                                                            " elements");
        }
    };
    for (auto& m : members) insert(m);

    // Fixed point under + and x; negation is repeated addition in a finite group.
    std::size_t done = 0;
    while (done < uniq.size()) {
        const std::size_t upto = uniq.size();
        for (std::size_t i = done; i < upto; ++i)
            for (std::size_t j = 0; j < upto; ++j) {
                insert(detail::mat_add(base, uniq[i], uniq[j]));
                insert(detail::mat_mul(base, uniq[i], uniq[j], n));
                insert(detail::mat_mul(base, uniq[j], uniq[i], n));
            }
        done = upto;
    }

    std::vector<Mat> sorted = uniq;
    std::sort(sorted.begin(), sorted.end());
    std::map<Mat, Elem> pos;
    for (Elem i = 0; i < sorted.size(); ++i) pos.emplace(sorted[i], i);
    if (name.empty()) name = "S(M" + std::to_string(n) + "(" + base.name() + "))";
    return detail::tabulate(
        sorted.size(), pos.at(detail::mat_identity(base, n)),
        [&](Elem x, Elem y) { return pos.at(detail::mat_add(base, sorted[x], sorted[y])); },
        [&](Elem x, Elem y) { return pos.at(detail::mat_mul(base, sorted[x], sorted[y], n)); }, std::move(name));
}

}  // namespace ringline
