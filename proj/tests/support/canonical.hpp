#pragma once

// Canonical forms for isomorphism dedup of small test graphs:
//  - trees: AHU encoding rooted at the centroid(s), any order
//  - general graphs (n <= 8): color refinement, then the lexicographically
//    smallest upper-triangle adjacency mask over color-respecting relabelings

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wim/graph.hpp"

namespace testsupport {

inline std::string ahu_encode(const wim::Graph& t, int root, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(root))
        if (w != parent) kids.push_back(ahu_encode(t, w, root));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

// canonical string of a free tree (root at the 1 or 2 centers)
inline std::string tree_canonical(const wim::Graph& t) {
    int n = t.order();
    if (n == 0) return "";
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int w : t.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<std::string> enc;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) enc.push_back(ahu_encode(t, v, -1));
    std::sort(enc.begin(), enc.end());
    std::string s;
    for (auto& e : enc) s += e + "|";
    return s;
}

namespace detail {

inline void min_mask_search(const wim::Graph& g, const std::vector<std::vector<int>>& classes,
                            std::size_t ci, std::vector<int>& perm, std::vector<char>& used,
                            std::uint64_t& best) {
    int n = g.order();
    if (ci == classes.size()) {
        std::uint64_t mask = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(perm[i], perm[j])) mask |= 1ull << bit;
        best = std::min(best, mask);
        return;
    }
    // place the next class's vertices in every order
    std::vector<int> cls = classes[ci];
    std::sort(cls.begin(), cls.end());
    do {
        for (int v : cls) perm.push_back(v);
        min_mask_search(g, classes, ci + 1, perm, used, best);
        perm.resize(perm.size() - cls.size());
    } while (std::next_permutation(cls.begin(), cls.end()));
}

}  // namespace detail

// canonical form of a unicyclic graph: the lexicographically smallest
// dihedral transform of the attached-tree AHU sequence around the cycle
inline std::string unicyclic_canonical(const wim::Graph& g) {
    auto cycle = wim::unique_cycle(g);
    if (!cycle) throw std::runtime_error("not unicyclic");
    auto trees = wim::attached_trees(g, *cycle);
    std::vector<std::string> shapes;
    for (const auto& t : trees) shapes.push_back(ahu_encode(t.sub.graph, t.root, -1));
    std::size_t len = shapes.size();
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t rot = 0; rot < len; ++rot) {
            std::string cand;
            for (std::size_t i = 0; i < len; ++i) {
                std::size_t idx = dir == 0 ? (rot + i) % len : (rot + len - i) % len;
                cand += shapes[idx] + ";";
            }
            if (best.empty() || cand < best) best = cand;
        }
    }
    return std::to_string(len) + ":" + best;
}

// canonical key: (n, min adjacency mask over refinement-respecting perms)
inline std::pair<int, std::uint64_t> graph_canonical(const wim::Graph& g) {
    int n = g.order();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<std::uint64_t>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<std::uint64_t> nb;
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<std::uint64_t>, std::uint64_t> index;
        for (int v = 0; v < n; ++v) index.emplace(sig[v], 0);
        std::uint64_t next = 0;
        for (auto& [k, id] : index) id = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            std::uint64_t c = index[sig[v]];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed) break;
    }
    std::map<std::uint64_t, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& [c, vs] : by_color) classes.push_back(vs);
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    std::uint64_t best = ~0ull;
    detail::min_mask_search(g, classes, 0, perm, used, best);
    return {n, best};
}

}  // namespace testsupport
