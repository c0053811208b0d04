#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wim {

/// Distance value for unreachable vertex pairs and the girth of forests.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Finite simple undirected graph. Vertices are dense ints 0..n-1, edge ids
/// are 0..m-1 in lexicographic order of (min endpoint, max endpoint).
/// Immutable after construction; all queries are safe for concurrent use.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an unordered edge list. Rejects self-loops,
    /// duplicates and out-of-range endpoints. `labels` maps local vertex ids
    /// to the caller's original ids (identity when empty).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list,
                            std::vector<std::int64_t> labels = {}) {
        if (n < 0) throw ValidationError("negative vertex count");
        Graph g;
        g.n_ = n;
        for (auto& [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ValidationError("edge endpoint out of range: " + std::to_string(u) + " " +
                                      std::to_string(v));
            if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        for (std::size_t i = 1; i < edge_list.size(); ++i)
            if (edge_list[i] == edge_list[i - 1])
                throw ValidationError("duplicate edge " + std::to_string(edge_list[i].first) +
                                      " " + std::to_string(edge_list[i].second));
        g.edges_ = std::move(edge_list);
        g.adj_.assign(n, {});
        for (const auto& [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        if (labels.empty()) {
            g.labels_.resize(n);
            for (int v = 0; v < n; ++v) g.labels_[v] = v;
        } else {
            if (static_cast<int>(labels.size()) != n)
                throw ValidationError("label vector size mismatch");
            g.labels_ = std::move(labels);
        }
        return g;
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const {
        check_edge(id);
        return edges_[id];
    }

    /// Edge id of {u,v}, or -1 when the edge is absent.
    int edge_id(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it != edges_.end() && *it == std::make_pair(u, v))
            return static_cast<int>(it - edges_.begin());
        return -1;
    }
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    std::int64_t label(int v) const {
        check_vertex(v);
        return labels_[v];
    }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw ValidationError("invalid vertex id " + std::to_string(v));
    }
    void check_edge(int id) const {
        if (id < 0 || id >= size()) throw ValidationError("invalid edge id " + std::to_string(id));
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::int64_t> labels_;
};

/// A vertex-induced piece of a parent graph. `vertex_map[i]` is the parent id
/// of local vertex i; labels are composed so certificates keep original ids.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

/// Induced subgraph on `vertices` (sorted ascending, no duplicates required
/// beforehand; this sorts and dedups).
inline Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::unordered_map<int, int> local;
    local.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        local[vertices[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> labels(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        labels[i] = g.label(vertices[i]);
        for (int w : g.neighbors(vertices[i])) {
            auto it = local.find(w);
            if (it != local.end() && vertices[i] < w)
                edges.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return Subgraph{Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges),
                                      std::move(labels)),
                    std::move(vertices)};
}

/// BFS distances from a set of source vertices; kInfinity where unreachable.
inline std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources) {
    std::vector<int> dist(g.order(), kInfinity);
    std::queue<int> q;
    for (int s : sources) {
        g.check_vertex(s);
        if (dist[s] != kInfinity) continue;
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] == kInfinity) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// Shortest-path length between u and v; kInfinity when disconnected.
inline int vertex_distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    const int src[1] = {u};
    return bfs_distances(g, src)[v];
}

/// Minimum distance between an endpoint of edge e1 and an endpoint of e2.
inline int edge_distance(const Graph& g, int e1, int e2) {
    auto [a, b] = g.edge(e1);
    auto [x, y] = g.edge(e2);
    const int src[2] = {a, b};
    auto dist = bfs_distances(g, src);
    return std::min(dist[x], dist[y]);
}

/// e1 covers e2 iff their distance is at most 1 (an edge covers itself).
/// Local check: shared endpoint or an adjacency between endpoints.
inline bool covers(const Graph& g, int e1, int e2) {
    auto [a, b] = g.edge(e1);
    auto [x, y] = g.edge(e2);
    if (a == x || a == y || b == x || b == y) return true;
    return g.has_edge(a, x) || g.has_edge(a, y) || g.has_edge(b, x) || g.has_edge(b, y);
}

/// All edges covered by at least one edge of f, as a sorted id list.
inline std::vector<int> covered_set(const Graph& g, std::span<const int> f) {
    std::vector<int> endpoints;
    endpoints.reserve(f.size() * 2);
    for (int e : f) {
        auto [u, v] = g.edge(e);
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    std::vector<int> out;
    if (endpoints.empty()) return out;
    auto dist = bfs_distances(g, endpoints);
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edge(e);
        if (std::min(dist[u], dist[v]) <= 1) out.push_back(e);
    }
    return out;
}

namespace detail {

// Groups vertices by identical neighbor set. Returns, per vertex, the
// smallest vertex id with the same neighborhood (its twin-class rep).
inline std::vector<int> twin_representatives(const Graph& g) {
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t h = 1469598103934665603ull;
        for (int w : g.neighbors(v)) {
            h ^= static_cast<std::uint64_t>(w) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        buckets[h].push_back(v);
    }
    std::vector<int> rep(g.order());
    for (int v = 0; v < g.order(); ++v) rep[v] = v;
    for (auto& [h, vs] : buckets) {
        if (vs.size() < 2) continue;
        // verify within the bucket; hash collisions resolved by comparison
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (rep[vs[i]] != vs[i]) continue;
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (rep[vs[j]] != vs[j]) continue;
                if (g.neighbors(vs[i]) == g.neighbors(vs[j])) rep[vs[j]] = vs[i];
            }
        }
    }
    return rep;
}

}  // namespace detail

/// True when no two vertices share the same neighbor set.
inline bool is_reduced(const Graph& g) {
    auto rep = detail::twin_representatives(g);
    for (int v = 0; v < g.order(); ++v)
        if (rep[v] != v) return false;
    return true;
}

/// The reduction R(G) together with the map from its vertices back to g:
/// keep the smallest-id vertex of every class of identical-neighborhood
/// vertices, recompacting ids in order. Iterates to a fixed point (a single
/// pass already suffices; the loop is a guard).
inline Subgraph reduce_with_map(const Graph& g) {
    Graph cur = g;
    std::vector<int> map(g.order());
    for (int v = 0; v < g.order(); ++v) map[v] = v;
    for (;;) {
        auto rep = detail::twin_representatives(cur);
        std::vector<int> keep;
        for (int v = 0; v < cur.order(); ++v)
            if (rep[v] == v) keep.push_back(v);
        if (static_cast<int>(keep.size()) == cur.order()) return Subgraph{cur, map};
        Subgraph sub = induced_subgraph(cur, std::move(keep));
        std::vector<int> next(sub.vertex_map.size());
        for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) next[i] = map[sub.vertex_map[i]];
        cur = std::move(sub.graph);
        map = std::move(next);
    }
}

inline Graph reduce(const Graph& g) { return reduce_with_map(g).graph; }

/// Length of the shortest cycle; kInfinity for forests.
inline int girth(const Graph& g) {
    int best = kInfinity;
    std::vector<int> dist(g.order()), parent(g.order());
    for (int root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (2 * dist[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (dist[w] == kInfinity) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

/// Connected components as induced subgraphs, each with its map back to g.
/// The empty graph has no components.
inline std::vector<Subgraph> components(const Graph& g) {
    std::vector<Subgraph> out;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    q.push(w);
                }
            }
        }
        out.push_back(induced_subgraph(g, std::move(comp)));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    const int src[1] = {0};
    auto dist = bfs_distances(g, src);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinity; });
}

/// Tree = connected with m = n - 1 (so n >= 1).
inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

/// The unique cycle of a connected graph with m = n, found by iterated leaf
/// pruning. Canonical form: starts at the smallest cycle vertex id and runs
/// toward its smaller-id cycle neighbor. Returns nothing for trees and for
/// m > n. Throws on disconnected input.
inline std::optional<std::vector<int>> unique_cycle(const Graph& g) {
    if (!is_connected(g)) throw ValidationError("unique_cycle requires a connected graph");
    if (g.order() == 0 || g.size() != g.order()) return std::nullopt;
    std::vector<int> deg(g.order());
    std::queue<int> leaves;
    for (int v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) leaves.push(v);
    }
    std::vector<char> removed(g.order(), 0);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        removed[v] = 1;
        for (int w : g.neighbors(v))
            if (!removed[w] && --deg[w] == 1) leaves.push(w);
    }
    int start = -1;
    for (int v = 0; v < g.order(); ++v)
        if (!removed[v]) {
            start = v;
            break;
        }
    std::vector<int> cyc{start};
    int prev = -1, cur = start;
    // orient toward the smaller-id surviving neighbor
    do {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (removed[w] || w == prev) continue;
            if (next == -1 || w < next) next = w;
        }
        prev = cur;
        cur = next;
        if (cur != start) cyc.push_back(cur);
    } while (cur != start);
    return cyc;
}

/// The rooted tree hanging off one cycle vertex: the component of g minus the
/// cycle edges that contains the root. `root` is the local id of the cycle
/// vertex inside `sub`.
struct AttachedTree {
    Subgraph sub;
    int root;
};

/// For a unicyclic graph, the trees T_v attached at each cycle vertex, in
/// cycle order. Throws when `cycle` is not the canonical unique cycle of g.
inline std::vector<AttachedTree> attached_trees(const Graph& g, const std::vector<int>& cycle) {
    auto expect = unique_cycle(g);
    if (!expect || *expect != cycle)
        throw ValidationError("cycle does not match the unique cycle of the graph");
    std::vector<char> cycle_edge(g.size(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int id = g.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]);
        cycle_edge[id] = 1;
    }
    std::vector<AttachedTree> out;
    out.reserve(cycle.size());
    for (int root : cycle) {
        std::vector<int> comp{root};
        std::vector<char> seen(g.order(), 0);
        seen[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (seen[w] || cycle_edge[g.edge_id(v, w)]) continue;
                seen[w] = 1;
                comp.push_back(w);
                q.push(w);
            }
        }
        Subgraph sub = induced_subgraph(g, std::move(comp));
        int local_root = static_cast<int>(
            std::lower_bound(sub.vertex_map.begin(), sub.vertex_map.end(), root) -
            sub.vertex_map.begin());
        out.push_back(AttachedTree{std::move(sub), local_root});
    }
    return out;
}

/// Parses the edge-list format: optional "n m" header line, then one "u v"
/// line per edge. Without a header, observed vertex ids are remapped to
/// 0..n-1 (identity when already dense from 0) and the original ids are kept
/// as labels for certificate output.
inline Graph parse_graph(std::string_view text) {
    struct Row {
        int line;
        std::int64_t u, v;
    };
    std::vector<Row> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        std::istringstream ss(line);
        std::int64_t a, b;
        if (!(ss >> a)) {
            std::string junk;
            if (ss.clear(), ss >> junk) throw ParseError("malformed line", line_no);
            continue;  // blank line
        }
        if (!(ss >> b)) throw ParseError("expected two integers", line_no);
        std::string junk;
        if (ss >> junk) throw ParseError("trailing tokens", line_no);
        if (a < 0 || b < 0) throw ParseError("negative vertex id", line_no);
        rows.push_back({line_no, a, b});
        if (end == text.size()) break;
    }
    // Header interpretation: first row declares (n, m), consistent with the
    // remaining rows. Otherwise every row is an edge.
    bool header = false;
    if (!rows.empty()) {
        std::int64_t n = rows[0].u, m = rows[0].v;
        if (n >= 1 && m == static_cast<std::int64_t>(rows.size()) - 1) {
            header = true;
            for (std::size_t i = 1; i < rows.size(); ++i)
                if (rows[i].u >= n || rows[i].v >= n) {
                    header = false;
                    break;
                }
        }
    }
    auto build = [](int n, const std::vector<Row>& edge_rows,
                    const std::unordered_map<std::int64_t, int>* remap,
                    std::vector<std::int64_t> labels) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_rows.size());
        std::vector<std::pair<int, int>> seen_sorted;
        for (const auto& r : edge_rows) {
            int u = remap ? remap->at(r.u) : static_cast<int>(r.u);
            int v = remap ? remap->at(r.v) : static_cast<int>(r.v);
            if (u == v) throw ParseError("self-loop", r.line);
            edges.emplace_back(u, v);
        }
        // duplicate detection with line attribution
        std::vector<std::pair<std::pair<int, int>, int>> keyed;
        keyed.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u > v) std::swap(u, v);
            keyed.push_back({{u, v}, edge_rows[i].line});
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first)
                throw ParseError("duplicate edge", keyed[i].second);
        return Graph::from_edges(n, std::move(edges), std::move(labels));
    };
    if (header) {
        std::vector<Row> edge_rows(rows.begin() + 1, rows.end());
        return build(static_cast<int>(rows[0].u), edge_rows, nullptr, {});
    }
    std::vector<std::int64_t> ids;
    for (const auto& r : rows) {
        ids.push_back(r.u);
        ids.push_back(r.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    bool dense = ids.empty() || (ids.front() == 0 && ids.back() == static_cast<std::int64_t>(ids.size()) - 1);
    if (dense) {
        int n = ids.empty() ? 0 : static_cast<int>(ids.back()) + 1;
        return build(n, rows, nullptr, {});
    }
    std::unordered_map<std::int64_t, int> remap;
    for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);
    const int compact_n = static_cast<int>(ids.size());
    return build(compact_n, rows, &remap, std::move(ids));
}

/// Writer for the same format, always with the "n m" header and compact ids.
inline std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace wim
