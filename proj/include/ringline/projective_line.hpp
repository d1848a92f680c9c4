#pragma once

/**
 * @file projective_line.hpp
 * @brief Projective line over a finite ring.
 *
 * A pair (a, b) is admissible when it is the first row of some invertible
 * 2x2 matrix over the ring. Points of the left line are the orbits
 * {(u a, u b) : u a unit}; two points are distant when their representatives,
 * stacked as rows, form an invertible matrix. The right line uses the orbits
 * {(a u, b u)} and stacks representatives as columns, which is the
 * arrangement preserved by right scaling.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ringline/finite_ring.hpp"

namespace ringline {

/// Line construction enumerates all order^2 pairs and order^2 completions per pair.
inline constexpr std::size_t kMaxLineOrder = 32;

enum class LineSide { Left, Right };

constexpr std::string_view to_string(LineSide side) noexcept { return side == LineSide::Left ? "left" : "right"; }

struct CoordinatePair {
    Elem a = 0;
    Elem b = 0;
    friend auto operator<=>(const CoordinatePair&, const CoordinatePair&) = default;
};

enum class PointType { TypeI, TypeII };

struct Point {
    CoordinatePair rep;                  // lexicographically least member
    std::vector<CoordinatePair> members;  // sorted
};

/// Row-major 2x2 matrix [[m0, m1], [m2, m3]].
using Matrix2 = std::array<Elem, 4>;

/**
 * Solves M X = I one column at a time (each column ranges over order^2
 * candidates) and confirms X M = I. In a finite ring a one-sided inverse of a
 * matrix is two-sided, so the first solution found per column is the inverse
 * whenever one exists.
 */
inline bool is_invertible_2x2(const FiniteRing& r, const Matrix2& m) {
    const auto n = static_cast<Elem>(r.order());
    const Elem one = r.one();
    auto solve_column = [&](Elem top, Elem bottom, Elem& x, Elem& z) {
        for (x = 0; x < n; ++x)
            for (z = 0; z < n; ++z)
                if (r.add(r.mul(m[0], x), r.mul(m[1], z)) == top && r.add(r.mul(m[2], x), r.mul(m[3], z)) == bottom)
                    return true;
        return false;
    };
    Elem x1, z1, x2, z2;
    if (!solve_column(one, 0, x1, z1) || !solve_column(0, one, x2, z2)) return false;
    // X = [[x1, x2], [z1, z2]]
    return r.add(r.mul(x1, m[0]), r.mul(x2, m[2])) == one && r.add(r.mul(x1, m[1]), r.mul(x2, m[3])) == 0 &&
           r.add(r.mul(z1, m[0]), r.mul(z2, m[2])) == 0 && r.add(r.mul(z1, m[1]), r.mul(z2, m[3])) == one;
}

/// Searches completions (c, d) in lexicographic order; stops at the first hit.
inline bool is_admissible(const FiniteRing& r, CoordinatePair p) {
    const auto n = static_cast<Elem>(r.order());
    // Any row of an invertible matrix satisfies a x + b z = 1 for some x, z.
    bool unimodular = false;
    for (Elem x = 0; x < n && !unimodular; ++x)
        for (Elem z = 0; z < n && !unimodular; ++z) unimodular = r.add(r.mul(p.a, x), r.mul(p.b, z)) == r.one();
    if (!unimodular) return false;
    for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d)
            if (is_invertible_2x2(r, {p.a, p.b, c, d})) return true;
    return false;
}

class ProjectiveLine {
public:
    const FiniteRing& ring() const noexcept { return ring_; }
    LineSide side() const noexcept { return side_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& point(std::size_t i) const { return points_.at(i); }
    std::size_t admissible_pair_count() const noexcept { return admissible_; }

    /// Symmetric, all-false diagonal.
    const boost::dynamic_bitset<>& distant_row(std::size_t i) const { return distant_.at(i); }
    bool distant(std::size_t i, std::size_t j) const { return distant_.at(i).test(j); }

    PointType point_type(std::size_t i) const {
        const auto& rep = points_.at(i).rep;
        return ring_.is_unit(rep.a) || ring_.is_unit(rep.b) ? PointType::TypeI : PointType::TypeII;
    }

    /// Index of the point containing the pair, or size() if the pair is not admissible.
    std::size_t locate(CoordinatePair p) const {
        const auto it = owner_.find(p);
        return it == owner_.end() ? points_.size() : it->second;
    }

    /// The matrix whose invertibility decides distance between two pairs on this line.
    Matrix2 stack(CoordinatePair p, CoordinatePair q) const {
        return side_ == LineSide::Left ? Matrix2{p.a, p.b, q.a, q.b} : Matrix2{p.a, q.a, p.b, q.b};
    }

private:
    ProjectiveLine(FiniteRing ring, LineSide side) : ring_(std::move(ring)), side_(side) {}

    FiniteRing ring_;
    LineSide side_;
    std::vector<Point> points_;
    std::vector<boost::dynamic_bitset<>> distant_;
    std::map<CoordinatePair, std::size_t> owner_;
    std::size_t admissible_ = 0;

    friend ProjectiveLine build_line(const FiniteRing& ring, LineSide side);
};

/**
 * Enumerates admissible pairs, partitions them into unit orbits on the chosen
 * side and fills the distant relation from canonical representatives.
 *
 * The left orbit of an admissible pair always has |units| members (checked).
 * On the right side, orbits of unequal size raise RightLineBreakdown with the
 * multiset of class sizes.
 */
inline ProjectiveLine build_line(const FiniteRing& ring, LineSide side) {
    if (ring.order() > kMaxLineOrder)
        throw Error(ErrorCode::OrderTooLarge, "line construction is limited to order " +
                                                  std::to_string(kMaxLineOrder));
    const auto n = static_cast<Elem>(ring.order());
    std::vector<Elem> unit_list;
    for (Elem u = 0; u < n; ++u)
        if (ring.is_unit(u)) unit_list.push_back(u);

    ProjectiveLine line(ring, side);
    std::vector<char> admissible(std::size_t{n} * n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (is_admissible(ring, {a, b})) {
                admissible[a * n + b] = 1;
                ++line.admissible_;
            }

    // Pairs are visited in lexicographic order, so the first unvisited member
    // of an orbit is its least element.
    std::vector<char> visited(std::size_t{n} * n, 0);
    std::map<std::size_t, std::size_t> class_sizes;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (!admissible[a * n + b] || visited[a * n + b]) continue;
            Point p{{a, b}, {}};
            for (Elem u : unit_list) {
                const CoordinatePair q = side == LineSide::Left ? CoordinatePair{ring.mul(u, a), ring.mul(u, b)}
                                                                : CoordinatePair{ring.mul(a, u), ring.mul(b, u)};
                if (!visited[q.a * n + q.b]) {
                    visited[q.a * n + q.b] = 1;
                    p.members.push_back(q);
                }
            }
            std::sort(p.members.begin(), p.members.end());
            ++class_sizes[p.members.size()];
            line.points_.push_back(std::move(p));
        }

    const bool uniform = class_sizes.size() == 1 && class_sizes.begin()->first == unit_list.size();
    if (!uniform) {
        if (side == LineSide::Right) throw RightLineBreakdown(class_sizes);
        throw Error(ErrorCode::Internal, "left unit orbit with nontrivial stabilizer over " + ring.name());
    }

    const std::size_t count = line.points_.size();
    for (std::size_t i = 0; i < count; ++i)
        for (const auto& m : line.points_[i].members) line.owner_.emplace(m, i);

    line.distant_.assign(count, boost::dynamic_bitset<>(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (is_invertible_2x2(ring, line.stack(line.points_[i].rep, line.points_[j].rep))) {
                line.distant_[i].set(j);
                line.distant_[j].set(i);
            }
    return line;
}

}  // namespace ringline
