#pragma once

// Element- and ideal-level structure of a validated FiniteRing.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string_view>
#include <vector>

#include "ringline/finite_ring.hpp"

namespace ringline {

enum class SubsetKind { Units, ZeroDivisors, Radical, LeftIdeal, RightIdeal, TwoSidedIdeal, Center };

enum class Side { Left, Right, TwoSided };

constexpr std::string_view to_string(Side side) noexcept {
    switch (side) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::TwoSided: return "twoSided";
    }
    return "?";
}

/// Sorted set of element indices tagged with what it represents.
struct ElementSubset {
    std::vector<Elem> members;
    SubsetKind kind;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }
    friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
};

inline ElementSubset units(const FiniteRing& ring) {
    ElementSubset s{{}, SubsetKind::Units};
    for (Elem x = 0; x < ring.order(); ++x)
        if (ring.is_unit(x)) s.members.push_back(x);
    return s;
}

/// Non-units, zero included.
inline std::size_t zero_divisor_count(const FiniteRing& ring) { return ring.order() - units(ring).size(); }

/// Additive order of one.
inline std::size_t characteristic(const FiniteRing& ring) {
    std::size_t k = 1;
    for (Elem x = ring.one(); x != 0; x = ring.add(x, ring.one())) ++k;
    return k;
}

inline bool is_commutative(const FiniteRing& ring) {
    for (Elem a = 0; a < ring.order(); ++a)
        for (Elem b = a + 1; b < ring.order(); ++b)
            if (ring.mul(a, b) != ring.mul(b, a)) return false;
    return true;
}

inline ElementSubset center(const FiniteRing& ring) {
    ElementSubset s{{}, SubsetKind::Center};
    for (Elem x = 0; x < ring.order(); ++x) {
        bool central = true;
        for (Elem r = 0; r < ring.order() && central; ++r) central = ring.mul(x, r) == ring.mul(r, x);
        if (central) s.members.push_back(x);
    }
    return s;
}

/// True when the subset is an additive subgroup absorbing multiplication on the given side(s).
inline bool is_ideal(const FiniteRing& ring, const std::vector<Elem>& members, Side side) {
    std::vector<char> in(ring.order(), 0);
    for (Elem x : members) in[x] = 1;
    if (!in[0]) return false;
    for (Elem x : members) {
        if (!in[ring.neg(x)]) return false;
        for (Elem y : members)
            if (!in[ring.add(x, y)]) return false;
        for (Elem r = 0; r < ring.order(); ++r) {
            if (side != Side::Right && !in[ring.mul(r, x)]) return false;
            if (side != Side::Left && !in[ring.mul(x, r)]) return false;
        }
    }
    return true;
}

/// {x : 1 - r x is a unit for every r}, checked afterwards to be a two-sided ideal.
inline ElementSubset jacobson_radical(const FiniteRing& ring) {
    ElementSubset s{{}, SubsetKind::Radical};
    for (Elem x = 0; x < ring.order(); ++x) {
        bool quasi_regular = true;
        for (Elem r = 0; r < ring.order() && quasi_regular; ++r)
            quasi_regular = ring.is_unit(ring.sub(ring.one(), ring.mul(r, x)));
        if (quasi_regular) s.members.push_back(x);
    }
    if (!is_ideal(ring, s.members, Side::TwoSided))
        throw Error(ErrorCode::Internal, "quasi-regular elements of " + ring.name() + " do not form an ideal");
    return s;
}

/// Enumeration bound for ideal lattices; ideals are held as 64-bit element masks.
inline constexpr std::size_t kMaxIdealOrder = 64;

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Elem x) { return Mask{1} << x; }

inline Mask additive_closure(const FiniteRing& ring, Mask seed) {
    Mask closed = seed | bit(0);
    for (;;) {
        Mask next = closed;
        for (Elem a = 0; a < ring.order(); ++a) {
            if (!(closed & bit(a))) continue;
            for (Elem b = 0; b < ring.order(); ++b)
                if (closed & bit(b)) next |= bit(ring.add(a, b));
        }
        if (next == closed) return closed;
        closed = next;
    }
}

inline Mask cyclic_ideal(const FiniteRing& ring, Elem a, Side side) {
    Mask span = 0;
    for (Elem r = 0; r < ring.order(); ++r) {
        switch (side) {
            case Side::Left: span |= bit(ring.mul(r, a)); break;
            case Side::Right: span |= bit(ring.mul(a, r)); break;
            case Side::TwoSided:
                for (Elem s = 0; s < ring.order(); ++s) span |= bit(ring.mul(ring.mul(r, a), s));
                break;
        }
    }
    return side == Side::TwoSided ? additive_closure(ring, span) : span;
}

inline Mask ideal_sum(const FiniteRing& ring, Mask x, Mask y) {
    Mask sum = 0;
    for (Elem a = 0; a < ring.order(); ++a) {
        if (!(x & bit(a))) continue;
        for (Elem b = 0; b < ring.order(); ++b)
            if (y & bit(b)) sum |= bit(ring.add(a, b));
    }
    return sum;
}

inline ElementSubset to_subset(Mask m, SubsetKind kind) {
    ElementSubset s{{}, kind};
    for (Elem x = 0; x < 64; ++x)
        if (m & bit(x)) s.members.push_back(x);
    return s;
}

inline SubsetKind ideal_kind(Side side) {
    switch (side) {
        case Side::Left: return SubsetKind::LeftIdeal;
        case Side::Right: return SubsetKind::RightIdeal;
        default: return SubsetKind::TwoSidedIdeal;
    }
}

}  // namespace detail

/**
 * All ideals of the given side, ordered by (size, members).
 *
 * Every ideal is the sum of the cyclic ideals of its elements, so a
 * breadth-first search from {0} that adds one cyclic ideal at a time reaches
 * the whole lattice without a power-set scan.
 */
inline std::vector<ElementSubset> ideal_lattice(const FiniteRing& ring, Side side) {
    if (ring.order() > kMaxIdealOrder)
        throw Error(ErrorCode::OrderTooLarge, "ideal enumeration is limited to order " +
                                                  std::to_string(kMaxIdealOrder));
    std::set<detail::Mask> cyclic;
    for (Elem a = 0; a < ring.order(); ++a) cyclic.insert(detail::cyclic_ideal(ring, a, side));

    std::set<detail::Mask> seen{detail::bit(0)};
    std::queue<detail::Mask> frontier;
    frontier.push(detail::bit(0));
    while (!frontier.empty()) {
        const auto current = frontier.front();
        frontier.pop();
        for (auto c : cyclic) {
            if ((current | c) == current) continue;
            const auto sum = detail::ideal_sum(ring, current, c);
            if (seen.insert(sum).second) frontier.push(sum);
        }
    }

    std::vector<detail::Mask> masks(seen.begin(), seen.end());
    std::sort(masks.begin(), masks.end(), [](detail::Mask x, detail::Mask y) {
        const int px = std::popcount(x), py = std::popcount(y);
        if (px != py) return px < py;
        return detail::to_subset(x, {}).members < detail::to_subset(y, {}).members;
    });
    std::vector<ElementSubset> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(detail::to_subset(m, detail::ideal_kind(side)));
    return out;
}

/// Proper ideals of the given side that are maximal under inclusion.
inline std::vector<ElementSubset> maximal_ideals(const FiniteRing& ring, Side side) {
    const auto lattice = ideal_lattice(ring, side);
    auto is_sub = [](const ElementSubset& x, const ElementSubset& y) {
        return std::includes(y.members.begin(), y.members.end(), x.members.begin(), x.members.end());
    };
    std::vector<ElementSubset> out;
    for (const auto& candidate : lattice) {
        if (candidate.size() == ring.order()) continue;
        bool maximal = true;
        for (const auto& other : lattice) {
            if (other.size() <= candidate.size() || other.size() == ring.order()) continue;
            if (is_sub(candidate, other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(candidate);
    }
    return out;
}

inline std::size_t maximal_ideal_count(const FiniteRing& ring, Side side) {
    return maximal_ideals(ring, side).size();
}

/// Isomorphism-invariant summary used to match constructed rings against table labels.
struct RingFingerprint {
    std::size_t order = 0;
    std::size_t unitCount = 0;
    std::size_t zeroDivisorCount = 0;
    std::size_t characteristic = 0;
    std::size_t radicalSize = 0;
    std::size_t maximalLeftIdealCount = 0;
    std::size_t maximalRightIdealCount = 0;
    std::size_t maximalTwoSidedIdealCount = 0;
    bool commutative = false;

    friend bool operator==(const RingFingerprint&, const RingFingerprint&) = default;
};

inline RingFingerprint fingerprint(const FiniteRing& ring) {
    RingFingerprint fp;
    fp.order = ring.order();
    fp.unitCount = units(ring).size();
    fp.zeroDivisorCount = fp.order - fp.unitCount;
    fp.characteristic = characteristic(ring);
    fp.radicalSize = jacobson_radical(ring).size();
    fp.maximalLeftIdealCount = maximal_ideal_count(ring, Side::Left);
    fp.maximalRightIdealCount = maximal_ideal_count(ring, Side::Right);
    fp.maximalTwoSidedIdealCount = maximal_ideal_count(ring, Side::TwoSided);
    fp.commutative = is_commutative(ring);
    return fp;
}

}  // namespace ringline
