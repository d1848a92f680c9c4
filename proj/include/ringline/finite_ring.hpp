#pragma once

/**
 * @file finite_ring.hpp
 * @brief Finite associative rings with unity stored as explicit Cayley tables.
 *
 * Elements are the indices 0..order-1. Index 0 is always the additive zero.
 * A FiniteRing can only be obtained through validate_ring(), so every value
 * in circulation satisfies the ring axioms.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringline/error.hpp"

namespace ringline {

using Elem = std::uint32_t;
using Table = std::vector<std::vector<Elem>>;

/// Largest order accepted for explicit tables. Validation is cubic in the order.
inline constexpr std::size_t kMaxTableOrder = 256;

/// Raised by validate_ring; carries the first offending triple (unused slots are 0).
class AxiomViolation : public Error {
public:
    AxiomViolation(ErrorCode code, const std::string& what, std::array<Elem, 3> witness)
        : Error(code, what), witness_(witness) {}

    const std::array<Elem, 3>& witness() const noexcept { return witness_; }

private:
    std::array<Elem, 3> witness_;
};

class FiniteRing {
public:
    std::size_t order() const noexcept { return order_; }
    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }
    const std::string& name() const noexcept { return name_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * order_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    bool is_unit(Elem a) const noexcept { return inverse_[a] != kNoInverse; }
    /// Two-sided inverse; only meaningful when is_unit(a).
    Elem inverse(Elem a) const noexcept { return inverse_[a]; }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }

    FiniteRing renamed(std::string name) const {
        FiniteRing copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }

    friend bool operator==(const FiniteRing& x, const FiniteRing& y) {
        return x.order_ == y.order_ && x.one_ == y.one_ && x.add_ == y.add_ && x.mul_ == y.mul_;
    }

private:
    static constexpr Elem kNoInverse = ~Elem{0};

    FiniteRing() = default;

    std::size_t order_ = 0;
    Elem one_ = 0;
    std::string name_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inverse_;

    friend FiniteRing validate_ring(std::vector<Elem> add, std::vector<Elem> mul, std::size_t order,
                                    Elem one, std::string name);
};

namespace detail {

inline std::string triple(Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace detail

/**
 * Validate flat row-major tables of dimension order x order and wrap them as a
 * FiniteRing. Checks run in a fixed order (closure, additive zero at index 0,
 * abelian group, associativity, distributivity, unity) and the first failure
 * is thrown as an AxiomViolation naming a witness triple.
 */
inline FiniteRing validate_ring(std::vector<Elem> add, std::vector<Elem> mul, std::size_t order, Elem one,
                                std::string name = "R") {
    if (order < 2) throw Error(ErrorCode::InvalidArgument, "ring order must be at least 2");
    if (order > kMaxTableOrder)
        throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(order) + " exceeds table limit " +
                                                  std::to_string(kMaxTableOrder));
    if (add.size() != order * order || mul.size() != order * order)
        throw Error(ErrorCode::InvalidArgument, "tables must both be " + std::to_string(order) + "x" +
                                                    std::to_string(order));

    const auto n = static_cast<Elem>(order);
    auto A = [&](Elem a, Elem b) { return add[a * order + b]; };
    auto M = [&](Elem a, Elem b) { return mul[a * order + b]; };

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (A(a, b) >= n)
                throw AxiomViolation(ErrorCode::NotClosed, "add" + detail::triple(a, b, A(a, b)) + " out of range",
                                     {a, b, A(a, b)});
            if (M(a, b) >= n)
                throw AxiomViolation(ErrorCode::NotClosed, "mul" + detail::triple(a, b, M(a, b)) + " out of range",
                                     {a, b, M(a, b)});
        }
    if (one >= n) throw AxiomViolation(ErrorCode::NotClosed, "one index out of range", {one, 0, 0});

    // Index 0 must be the additive identity.
    bool zero_ok = true;
    for (Elem a = 0; a < n && zero_ok; ++a) zero_ok = A(0, a) == a && A(a, 0) == a;
    if (!zero_ok) {
        for (Elem e = 1; e < n; ++e) {
            bool identity = true;
            for (Elem a = 0; a < n && identity; ++a) identity = A(e, a) == a && A(a, e) == a;
            if (identity)
                throw AxiomViolation(ErrorCode::ZeroIndexNotZero,
                                     "additive identity is element " + std::to_string(e) + ", not 0", {e, 0, 0});
        }
        throw AxiomViolation(ErrorCode::NotAbelianGroup, "no additive identity", {0, 0, 0});
    }

    std::vector<Elem> neg(order, n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a))
                throw AxiomViolation(ErrorCode::NotAbelianGroup, "addition not commutative at " +
                                                                     detail::triple(a, b, 0), {a, b, 0});
            if (A(a, b) == 0 && neg[a] == n) neg[a] = b;
        }
        if (neg[a] == n)
            throw AxiomViolation(ErrorCode::NotAbelianGroup, "element " + std::to_string(a) + " has no negative",
                                 {a, 0, 0});
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (A(A(a, b), c) != A(a, A(b, c)))
                    throw AxiomViolation(ErrorCode::NotAbelianGroup,
                                         "addition not associative at " + detail::triple(a, b, c), {a, b, c});

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const Elem ab = M(a, b);
            for (Elem c = 0; c < n; ++c)
                if (M(ab, c) != M(a, M(b, c)))
                    throw AxiomViolation(ErrorCode::NotAssociative,
                                         "(ab)c != a(bc) at " + detail::triple(a, b, c), {a, b, c});
        }

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    throw AxiomViolation(ErrorCode::NotDistributive,
                                         "a(b+c) != ab+ac at " + detail::triple(a, b, c), {a, b, c});
                if (M(A(a, b), c) != A(M(a, c), M(b, c)))
                    throw AxiomViolation(ErrorCode::NotDistributive,
                                         "(a+b)c != ac+bc at " + detail::triple(a, b, c), {a, b, c});
            }

    if (one == 0) throw AxiomViolation(ErrorCode::NoUnity, "one coincides with zero", {0, 0, 0});
    for (Elem a = 0; a < n; ++a)
        if (M(one, a) != a || M(a, one) != a)
            throw AxiomViolation(ErrorCode::NoUnity,
                                 "element " + std::to_string(one) + " is not a two-sided identity", {one, a, 0});

    // Row scan for xy = 1, confirmed by yx = 1.
    std::vector<Elem> inverse(order, FiniteRing::kNoInverse);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (M(x, y) == one && M(y, x) == one) {
                inverse[x] = y;
                break;
            }

    FiniteRing ring;
    ring.order_ = order;
    ring.one_ = one;
    ring.name_ = std::move(name);
    ring.add_ = std::move(add);
    ring.mul_ = std::move(mul);
    ring.neg_ = std::move(neg);
    ring.inverse_ = std::move(inverse);
    return ring;
}

/// Square-matrix overload: addTable/mulTable as rows.
inline FiniteRing validate_ring(const Table& add, const Table& mul, Elem one, std::string name = "R") {
    const std::size_t n = add.size();
    if (n < 2 || mul.size() != n)
        throw Error(ErrorCode::InvalidArgument, "tables must be square, equal dimension, at least 2");
    std::vector<Elem> flat_add, flat_mul;
    flat_add.reserve(n * n);
    flat_mul.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (add[i].size() != n || mul[i].size() != n)
            throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(i) + " has wrong length");
        flat_add.insert(flat_add.end(), add[i].begin(), add[i].end());
        flat_mul.insert(flat_mul.end(), mul[i].begin(), mul[i].end());
    }
    return validate_ring(std::move(flat_add), std::move(flat_mul), n, one, std::move(name));
}

/// Rows of the addition or multiplication table, for display and file output.
inline Table as_rows(const FiniteRing& ring, bool multiplication) {
    const auto flat = multiplication ? ring.mul_table() : ring.add_table();
    Table rows(ring.order());
    for (std::size_t i = 0; i < ring.order(); ++i)
        rows[i].assign(flat.begin() + i * ring.order(), flat.begin() + (i + 1) * ring.order());
    return rows;
}

}  // namespace ringline
