#pragma once

// Test-only brute-force oracle. Works definitionally from the adjacency
// matrix and enumerates all 2^m edge subsets, so it shares no code path with
// the library's branch-and-bound enumeration, cover sets, or recognizers.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wim/graph.hpp"

namespace testsupport {

class SubsetOracle {
public:
    explicit SubsetOracle(const wim::Graph& g) : m_(g.size()) {
        if (m_ > 24) throw std::runtime_error("subset oracle limited to m <= 24");
        adj_.assign(g.order(), std::vector<char>(g.order(), 0));
        for (auto [u, v] : g.edges()) {
            adj_[u][v] = 1;
            adj_[v][u] = 1;
            ends_.push_back({u, v});
        }
    }

    // matching + no edge of the graph joins two member edges
    bool is_induced_matching(std::uint32_t mask) const {
        for (int e = 0; e < m_; ++e) {
            if (!(mask >> e & 1)) continue;
            for (int f = e + 1; f < m_; ++f) {
                if (!(mask >> f & 1)) continue;
                auto [a, b] = ends_[e];
                auto [x, y] = ends_[f];
                if (a == x || a == y || b == x || b == y) return false;
                if (adj_[a][x] || adj_[a][y] || adj_[b][x] || adj_[b][y]) return false;
            }
        }
        return true;
    }

    // inclusion-wise maximal: no edge can be added
    bool is_maximal_induced_matching(std::uint32_t mask) const {
        if (!is_induced_matching(mask)) return false;
        for (int f = 0; f < m_; ++f) {
            if (mask >> f & 1) continue;
            if (is_induced_matching(mask | (1u << f))) return false;
        }
        return true;
    }

    std::vector<std::vector<int>> all_maximal() const {
        std::vector<std::vector<int>> out;
        for (std::uint32_t mask = 0; mask < (1u << m_); ++mask) {
            if (!is_maximal_induced_matching(mask)) continue;
            std::vector<int> s;
            for (int e = 0; e < m_; ++e)
                if (mask >> e & 1) s.push_back(e);
            out.push_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // verdict: true + k when all maximal sizes agree
    std::pair<bool, int> verdict() const {
        int lo = -1, hi = -1;
        for (std::uint32_t mask = 0; mask < (1u << m_); ++mask) {
            if (!is_maximal_induced_matching(mask)) continue;
            int sz = __builtin_popcount(mask);
            if (lo < 0 || sz < lo) lo = sz;
            if (sz > hi) hi = sz;
        }
        return {lo == hi, lo};
    }

    int max_induced_matching_size() const {
        int best = 0;
        for (std::uint32_t mask = 0; mask < (1u << m_); ++mask)
            if (is_induced_matching(mask)) best = std::max(best, __builtin_popcount(mask));
        return best;
    }

private:
    int m_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<char>> adj_;
};

}  // namespace testsupport
