#pragma once

#include <string>
#include <vector>

#include "wim/graph.hpp"

namespace wim {

/// Deterministic constructors for the library's graph families. Attachment
/// points and distinguished edges are pinned to smallest-id choices; any
/// symmetric choice yields an isomorphic graph.
inline Graph gen_path(int n) {
    if (n < 1) throw ValidationError("gen_path requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw ValidationError("gen_cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

/// S_{r,k}: the star K_{1,r} with every edge subdivided by k vertices.
/// Center 0; branch i is a path of length k+1; order 1 + r(k+1).
inline Graph gen_S(int r, int k) {
    if (r < 1 || k < 0) throw ValidationError("gen_S requires r >= 1, k >= 0");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int i = 0; i < r; ++i) {
        int prev = 0;
        for (int j = 0; j <= k; ++j) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, std::move(e));
}

namespace detail {

// appends an S_{r,k} whose center is `center`, using fresh vertex ids
inline int attach_branches(std::vector<std::pair<int, int>>& e, int center, int r, int k,
                           int next) {
    for (int i = 0; i < r; ++i) {
        int prev = center;
        for (int j = 0; j <= k; ++j) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return next;
}

}  // namespace detail

/// G_r: C_3 joined to the center of S_{r,2}, plus one pendant vertex on a
/// second triangle vertex. Order 3r+5, girth 3.
inline Graph gen_G(int r) {
    if (r < 1) throw ValidationError("gen_G requires r >= 1");
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {0, 2}};
    int center = 3;
    e.emplace_back(0, center);
    int next = detail::attach_branches(e, center, r, 2, 4);
    e.emplace_back(1, next);  // pendant on another triangle vertex
    return Graph::from_edges(next + 1, std::move(e));
}

/// H_r: the center of S_{r,2} identified with a vertex of C_5.
/// Order 3r+5, girth 5.
inline Graph gen_H(int r) {
    if (r < 1) throw ValidationError("gen_H requires r >= 1");
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    int next = detail::attach_branches(e, 0, r, 2, 5);
    return Graph::from_edges(next, std::move(e));
}

/// The cycle edge of H_r whose endpoints are both at distance 2 from the
/// identified vertex; together with the pendant edges it forms the matching
/// certifying H_r.
inline int h_distinguished_edge(const Graph& h) {
    auto cycle = unique_cycle(h);
    if (!cycle) throw ValidationError("not a unicyclic graph");
    int hub = -1;
    for (int v : *cycle)
        if (h.degree(v) > 2) hub = v;
    if (hub < 0) throw ValidationError("no identified vertex on the cycle");
    const int src[1] = {hub};
    auto dist = bfs_distances(h, src);
    for (std::size_t i = 0; i < cycle->size(); ++i) {
        int u = (*cycle)[i], v = (*cycle)[(i + 1) % cycle->size()];
        if (dist[u] == 2 && dist[v] == 2) return h.edge_id(u, v);
    }
    throw ValidationError("no cycle edge with both endpoints at distance 2");
}

/// L_r: the center of S_{r,3} identified with a vertex of C_7, plus one
/// pendant vertex on the smaller-id cycle neighbor of the identified vertex.
/// Order 4r+8, girth 7.
inline Graph gen_L(int r) {
    if (r < 1) throw ValidationError("gen_L requires r >= 1");
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}};
    int next = detail::attach_branches(e, 0, r, 3, 7);
    e.emplace_back(1, next);
    return Graph::from_edges(next + 1, std::move(e));
}

/// Q_{k,r} for even k >= 4: C_k with the center of S_{r,2} identified at v_1
/// and a pendant length-2 path at every even-position cycle vertex.
/// Order 2k + 3r, girth k.
inline Graph gen_Q(int k, int r) {
    if (k < 4 || k % 2 != 0) throw ValidationError("gen_Q requires even k >= 4");
    if (r < 1) throw ValidationError("gen_Q requires r >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    int next = detail::attach_branches(e, 0, r, 2, k);
    for (int i = 1; i < k; i += 2) {  // v_2, v_4, ..., v_k in 1-based terms
        e.emplace_back(i, next);
        e.emplace_back(next, next + 1);
        next += 2;
    }
    return Graph::from_edges(next, std::move(e));
}

enum class RegularVariant { G, H, L };

/// The clique-chain family: t copies of K_{r+1}, two disjoint edges removed
/// from each, consecutive copies bridged by two edges. Variant H restores
/// x1y1; variant L also restores u_t v_t and is r-regular with girth 3.
inline Graph gen_regular(int r, int t, RegularVariant variant) {
    if (r < 3 || t < 1) throw ValidationError("gen_regular requires r >= 3, t >= 1");
    // clique i occupies [i(r+1), (i+1)(r+1)); x=base, y=base+1, u=base+2, v=base+3
    std::vector<std::pair<int, int>> e;
    auto base = [r](int i) { return i * (r + 1); };
    for (int i = 0; i < t; ++i) {
        for (int a = 0; a <= r; ++a)
            for (int b = a + 1; b <= r; ++b) {
                if ((a == 0 && b == 1) || (a == 2 && b == 3)) continue;  // x_iy_i, u_iv_i
                e.emplace_back(base(i) + a, base(i) + b);
            }
    }
    for (int i = 0; i + 1 < t; ++i) {
        e.emplace_back(base(i) + 2, base(i + 1));      // u_i -- x_{i+1}
        e.emplace_back(base(i) + 3, base(i + 1) + 1);  // v_i -- y_{i+1}
    }
    if (variant == RegularVariant::H || variant == RegularVariant::L)
        e.emplace_back(base(0), base(0) + 1);  // x_1 y_1
    if (variant == RegularVariant::L)
        e.emplace_back(base(t - 1) + 2, base(t - 1) + 3);  // u_t v_t
    return Graph::from_edges(t * (r + 1), std::move(e));
}

/// The minimal structure at even girth g >= 10: the cycle v_1..v_g with a
/// pendant length-2 path on every odd-position vertex. Order 2g.
inline Graph gen_minimal_girth(int g) {
    if (g < 10 || g % 2 != 0) throw ValidationError("gen_minimal_girth requires even g >= 10");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g; ++i) e.emplace_back(i, (i + 1) % g);
    int next = g;
    for (int i = 0; i < g; i += 2) {  // v_1, v_3, ... in 1-based terms
        e.emplace_back(i, next);
        e.emplace_back(next, next + 1);
        next += 2;
    }
    return Graph::from_edges(next, std::move(e));
}

enum class Family { Path, Cycle, S, G, H, L, Q, RegularG, RegularH, RegularL, MinimalGirth };

/// Parameter bundle selecting one generator; used by the CLI.
struct FamilySpec {
    Family family;
    int n = 0;  // Path/Cycle order
    int r = 0;
    int k = 0;  // Q cycle length, S subdivision count
    int t = 0;  // clique-chain length
    int g = 0;  // MinimalGirth girth
};

inline Graph make_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return gen_path(spec.n);
        case Family::Cycle: return gen_cycle(spec.n);
        case Family::S: return gen_S(spec.r, spec.k);
        case Family::G: return gen_G(spec.r);
        case Family::H: return gen_H(spec.r);
        case Family::L: return gen_L(spec.r);
        case Family::Q: return gen_Q(spec.k, spec.r);
        case Family::RegularG: return gen_regular(spec.r, spec.t, RegularVariant::G);
        case Family::RegularH: return gen_regular(spec.r, spec.t, RegularVariant::H);
        case Family::RegularL: return gen_regular(spec.r, spec.t, RegularVariant::L);
        case Family::MinimalGirth: return gen_minimal_girth(spec.g);
    }
    throw ValidationError("unknown family");
}

}  // namespace wim
