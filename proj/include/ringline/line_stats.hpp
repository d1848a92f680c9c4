#pragma once

/**
 * @file line_stats.hpp
 * @brief Neighbourhood statistics and the classification signature of a line.
 *
 * Two distinct points are neighbours when they are not distant; a point is
 * not its own neighbour. The signature records, per line:
 *   tot    number of points
 *   tpI    points with a unit coordinate
 *   oneN   size of one point's neighbourhood
 *   cap2N  common neighbours of two distant points
 *   cap3N  common neighbours of three pairwise distant points
 *   md     maximum number of pairwise distant points
 * Each neighbourhood statistic records whether it is the same for every
 * point, pair or triple.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringline/max_clique.hpp"
#include "ringline/projective_line.hpp"
#include "ringline/ring_structure.hpp"

namespace ringline {

/// Observed value of a statistic over a family of points, pairs or triples.
struct Stat {
    std::size_t value = 0;  // the common value when constant, else the minimum
    bool constant = true;
    std::size_t min = 0;
    std::size_t max = 0;
    std::size_t samples = 0;

    void observe(std::size_t v) {
        if (samples == 0) {
            min = max = v;
        } else {
            min = std::min(min, v);
            max = std::max(max, v);
        }
        ++samples;
        value = min;
        constant = min == max;
    }

    friend bool operator==(const Stat&, const Stat&) = default;
};

enum class JacobsonCandidate { A, B, C };

inline constexpr JacobsonCandidate kJacobsonCandidates[] = {JacobsonCandidate::A, JacobsonCandidate::B,
                                                            JacobsonCandidate::C};

constexpr std::string_view to_string(JacobsonCandidate c) noexcept {
    switch (c) {
        case JacobsonCandidate::A: return "A";
        case JacobsonCandidate::B: return "B";
        case JacobsonCandidate::C: return "C";
    }
    return "?";
}

inline JacobsonCandidate parse_jacobson_candidate(std::string_view id) {
    for (auto c : kJacobsonCandidates)
        if (to_string(c) == id) return c;
    throw Error(ErrorCode::UnknownCandidate, "no Jacobson candidate '" + std::string(id) + "'");
}

inline boost::dynamic_bitset<> neighbour_set(const ProjectiveLine& line, std::size_t i) {
    auto n = ~line.distant_row(i);
    n.reset(i);
    return n;
}

inline std::vector<std::size_t> neighbourhood(const ProjectiveLine& line, std::size_t i) {
    std::vector<std::size_t> out;
    const auto n = neighbour_set(line, i);
    for (auto j = n.find_first(); j != n.npos; j = n.find_next(j)) out.push_back(j);
    return out;
}

inline Stat neighbourhood_stat(const ProjectiveLine& line) {
    Stat s;
    for (std::size_t i = 0; i < line.size(); ++i) s.observe(neighbour_set(line, i).count());
    return s;
}

inline Stat pair_intersection_stat(const ProjectiveLine& line) {
    Stat s;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const auto ni = neighbour_set(line, i);
        const auto& row = line.distant_row(i);
        for (auto j = row.find_next(i); j != row.npos; j = row.find_next(j))
            s.observe((ni & neighbour_set(line, j)).count());
    }
    if (s.samples == 0) throw Error(ErrorCode::NoDistantPair, "line has no pair of distant points");
    return s;
}

/// samples == 0 means the line has no pairwise distant triple; the value is then 0.
inline Stat triple_intersection_stat(const ProjectiveLine& line) {
    Stat s;
    std::vector<boost::dynamic_bitset<>> nbr;
    nbr.reserve(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) nbr.push_back(neighbour_set(line, i));
    for (std::size_t i = 0; i < line.size(); ++i) {
        const auto& ri = line.distant_row(i);
        for (auto j = ri.find_next(i); j != ri.npos; j = ri.find_next(j)) {
            const auto common = ri & line.distant_row(j);
            const auto nij = nbr[i] & nbr[j];
            for (auto k = common.find_next(j); k != common.npos; k = common.find_next(k))
                s.observe((nij & nbr[k]).count());
        }
    }
    return s;
}

inline Adjacency distant_graph(const ProjectiveLine& line) {
    Adjacency adj;
    adj.reserve(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) adj.push_back(line.distant_row(i));
    return adj;
}

/// Lexicographically least maximum set of pairwise distant points.
inline std::vector<std::size_t> max_distant_set(const ProjectiveLine& line) {
    return maximum_clique(distant_graph(line));
}

/**
 * Candidate readings of the "Jacobson points" count:
 *   A  points neighbouring every other point
 *   B  |J(R)| - 1
 *   C  nonzero left unit-orbits of pairs with both coordinates in J(R)
 */
inline std::size_t jacobson_stat(const ProjectiveLine& line, JacobsonCandidate candidate) {
    const auto& ring = line.ring();
    switch (candidate) {
        case JacobsonCandidate::A: {
            std::size_t count = 0;
            for (std::size_t i = 0; i < line.size(); ++i) count += line.distant_row(i).none() && line.size() > 1;
            return count;
        }
        case JacobsonCandidate::B: return jacobson_radical(ring).size() - 1;
        case JacobsonCandidate::C: {
            const auto rad = jacobson_radical(ring).members;
            const auto unit_list = units(ring).members;
            std::map<CoordinatePair, bool> seen;
            std::size_t orbits = 0;
            for (Elem a : rad)
                for (Elem b : rad) {
                    if ((a == 0 && b == 0) || seen.count({a, b})) continue;
                    ++orbits;
                    for (Elem u : unit_list) seen[{ring.mul(u, a), ring.mul(u, b)}] = true;
                }
            return orbits;
        }
    }
    return 0;
}

inline std::size_t jacobson_stat(const ProjectiveLine& line, std::string_view candidate) {
    return jacobson_stat(line, parse_jacobson_candidate(candidate));
}

struct LineSignature {
    std::size_t tot = 0;
    std::size_t tpI = 0;
    Stat oneN;
    Stat cap2N;
    Stat cap3N;
    bool hasTriple = false;
    std::size_t md = 0;
    std::vector<std::size_t> mdSet;
    std::map<std::string, std::size_t> jcbCandidates;

    friend bool operator==(const LineSignature&, const LineSignature&) = default;
};

inline LineSignature signature(const ProjectiveLine& line) {
    LineSignature sig;
    sig.tot = line.size();
    for (std::size_t i = 0; i < line.size(); ++i) sig.tpI += line.point_type(i) == PointType::TypeI;
    sig.oneN = neighbourhood_stat(line);
    sig.cap2N = pair_intersection_stat(line);
    sig.cap3N = triple_intersection_stat(line);
    sig.hasTriple = sig.cap3N.samples > 0;
    sig.mdSet = max_distant_set(line);
    sig.md = sig.mdSet.size();
    for (auto c : kJacobsonCandidates) sig.jcbCandidates[std::string(to_string(c))] = jacobson_stat(line, c);
    return sig;
}

/// Expected table row. Jcb is informational and never affects the verdict.
struct ExpectedRow {
    std::size_t tot, tpI, oneN, cap2N, cap3N, md;
    std::optional<std::size_t> jcb;
};

struct ColumnCheck {
    std::string column;
    std::size_t observed;
    std::size_t expected;
    bool pass;
};

struct SignatureComparison {
    std::vector<ColumnCheck> columns;
    bool pass = true;
};

inline constexpr std::string_view kSignatureColumns[] = {"Tot", "TpI", "1N", "cap2N", "cap3N", "MD"};

/// Per-column verdict; neighbourhood columns also require the statistic to be constant.
inline SignatureComparison compare_signature(const LineSignature& sig, const ExpectedRow& expected) {
    SignatureComparison out;
    auto check = [&](std::string_view column, std::size_t observed, std::size_t want, bool constant) {
        const bool pass = constant && observed == want;
        out.columns.push_back({std::string(column), observed, want, pass});
        out.pass = out.pass && pass;
    };
    check("Tot", sig.tot, expected.tot, true);
    check("TpI", sig.tpI, expected.tpI, true);
    check("1N", sig.oneN.value, expected.oneN, sig.oneN.constant);
    check("cap2N", sig.cap2N.value, expected.cap2N, sig.cap2N.constant);
    check("cap3N", sig.cap3N.value, expected.cap3N, sig.cap3N.constant);
    check("MD", sig.md, expected.md, true);
    return out;
}

}  // namespace ringline
