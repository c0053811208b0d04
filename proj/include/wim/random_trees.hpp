#pragma once

#include <random>
#include <vector>

#include "wim/graph.hpp"

namespace wim {

/// Uniform random labeled tree on n vertices (random Prüfer sequence).
inline Graph random_tree(int n, std::mt19937& rng) {
    if (n < 1) throw ValidationError("random_tree requires n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> deg(n, 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) {
        x = pick(rng);
        ++deg[x];
    }
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

/// Random reduced tree on n vertices: incremental growth where a vertex
/// accepts a new leaf only while it has none, plus a final repair of the one
/// possible root-side violation. No reduced tree on 3 vertices exists.
inline Graph random_reduced_tree(int n, std::mt19937& rng) {
    if (n < 1 || n == 3) throw ValidationError("no reduced tree of order " + std::to_string(n));
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::vector<int> parent(n, -1), leaf_children(n, 0), child_count(n, 0);
    std::vector<int> eligible{0};       // vertices currently able to accept a leaf
    std::vector<int> where(n, -1);      // position in eligible, -1 when absent
    where[0] = 0;
    auto drop = [&](int v) {
        int pos = where[v];
        if (pos < 0) return;
        int back = eligible.back();
        eligible[pos] = back;
        where[back] = pos;
        eligible.pop_back();
        where[v] = -1;
    };
    auto add = [&](int v) {
        if (where[v] >= 0) return;
        where[v] = static_cast<int>(eligible.size());
        eligible.push_back(v);
    };
    for (int u = 1; u < n; ++u) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(eligible.size()) - 1);
        int v = eligible[pick(rng)];
        parent[u] = v;
        if (child_count[v] == 0 && parent[v] >= 0) {
            // v stops being a leaf; its parent regains leaf capacity
            if (--leaf_children[parent[v]] == 0) add(parent[v]);
        }
        ++child_count[v];
        ++leaf_children[v];
        drop(v);
        add(u);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u) edges.emplace_back(parent[u], u);
    // the only possible violation: the root is a leaf whose child also has
    // a leaf child; reroute the root edge to a vertex with leaf capacity
    if (child_count[0] == 1 && n >= 4) {
        int c = -1;
        for (int u = 1; u < n; ++u)
            if (parent[u] == 0) c = u;
        if (leaf_children[c] > 0) {
            int w = -1;
            for (int v : eligible)
                if (v != 0) {
                    w = v;
                    break;
                }
            for (auto& e : edges)
                if (e == std::make_pair(0, c)) e = {0, w};
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace wim
