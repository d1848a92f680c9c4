#pragma once

// Exact maximum clique by branch and bound with a greedy colouring bound.

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ringline {

using Adjacency = std::vector<boost::dynamic_bitset<>>;

namespace detail {

class CliqueSearch {
public:
    CliqueSearch(const Adjacency& adj, std::size_t best, std::size_t stop_at)
        : adj_(adj), best_(best), stop_at_(stop_at) {}

    std::size_t run(const boost::dynamic_bitset<>& candidates) {
        expand(0, candidates);
        return best_;
    }

private:
    void expand(std::size_t depth, boost::dynamic_bitset<> p) {
        std::vector<std::size_t> order, colour;
        order.reserve(p.count());
        colour.reserve(p.count());
        auto uncoloured = p;
        for (std::size_t c = 1; uncoloured.any(); ++c) {
            auto q = uncoloured;
            for (auto v = q.find_first(); v != q.npos; v = q.find_first()) {
                q.reset(v);
                uncoloured.reset(v);
                q &= ~adj_[v];
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (best_ >= stop_at_ || depth + colour[i] <= best_) return;
            const auto v = order[i];
            const auto next = p & adj_[v];
            if (next.none()) {
                if (depth + 1 > best_) best_ = depth + 1;
            } else {
                expand(depth + 1, next);
            }
            p.reset(v);
        }
    }

    const Adjacency& adj_;
    std::size_t best_;
    std::size_t stop_at_;
};

}  // namespace detail

/// Size of the largest clique inside `candidates`.
inline std::size_t clique_number(const Adjacency& adj, const boost::dynamic_bitset<>& candidates) {
    if (candidates.none()) return 0;
    return detail::CliqueSearch(adj, 0, static_cast<std::size_t>(-1)).run(candidates);
}

inline std::size_t clique_number(const Adjacency& adj) {
    boost::dynamic_bitset<> all(adj.size());
    all.set();
    return clique_number(adj, all);
}

/// Decision form: does `candidates` contain a clique of at least k vertices?
inline bool has_clique(const Adjacency& adj, const boost::dynamic_bitset<>& candidates, std::size_t k) {
    if (k == 0) return true;
    if (candidates.count() < k) return false;
    return detail::CliqueSearch(adj, k - 1, k).run(candidates) >= k;
}

/**
 * Lexicographically least maximum clique (as a sorted index list). The
 * optimum size is found first, then vertices are fixed greedily in index
 * order while a completion of the optimum size remains.
 */
inline std::vector<std::size_t> maximum_clique(const Adjacency& adj) {
    const std::size_t omega = clique_number(adj);
    std::vector<std::size_t> chosen;
    boost::dynamic_bitset<> candidates(adj.size());
    candidates.set();
    while (chosen.size() < omega) {
        const std::size_t need = omega - chosen.size() - 1;
        bool extended = false;
        for (auto v = candidates.find_first(); v != candidates.npos; v = candidates.find_next(v)) {
            auto rest = candidates & adj[v];
            for (auto u = rest.find_first(); u != rest.npos && u < v; u = rest.find_next(u)) rest.reset(u);
            if (has_clique(adj, rest, need)) {
                chosen.push_back(v);
                candidates = rest;
                extended = true;
                break;
            }
        }
        if (!extended) break;  // unreachable for a correct omega
    }
    return chosen;
}

}  // namespace ringline
