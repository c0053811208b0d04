#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wim/graph.hpp"

namespace wim {

/// Enumeration ran out of its node budget. Never downgraded to a guess.
struct BudgetError : std::runtime_error {
    explicit BudgetError(long long limit)
        : std::runtime_error("enumeration budget of " + std::to_string(limit) +
                             " nodes exceeded") {}
};

struct EnumBudget {
    long long limit = 10'000'000;
    long long used = 0;
    void charge() {
        if (++used > limit) throw BudgetError(limit);
    }
};

/// s is a matching whose edges are pairwise at distance >= 2.
inline bool is_induced_matching(const Graph& g, std::span<const int> s) {
    for (int e : s) g.check_edge(e);
    std::vector<int> ids(s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (covers(g, ids[i], ids[j])) return false;
    return true;
}

/// Maximal iff induced and covering every edge of the graph.
inline bool is_maximal_induced(const Graph& g, std::span<const int> s) {
    if (!is_induced_matching(g, s)) return false;
    return static_cast<int>(covered_set(g, s).size()) == g.size();
}

namespace detail {

// Per-edge cover lists: cover[e] = sorted ids of edges at distance <= 1.
inline std::vector<std::vector<int>> cover_lists(const Graph& g) {
    std::vector<std::vector<int>> cover(g.size());
    std::vector<int> stamp(g.order(), -1);
    for (int e = 0; e < g.size(); ++e) {
        auto [a, b] = g.edge(e);
        for (int v : {a, b}) {
            stamp[v] = e;
            for (int w : g.neighbors(v)) stamp[w] = e;
        }
        for (int f = 0; f < g.size(); ++f) {
            auto [x, y] = g.edge(f);
            if (stamp[x] == e || stamp[y] == e) cover[e].push_back(f);
        }
    }
    return cover;
}

// Branch-and-bound over the smallest uncovered edge. Each maximal induced
// matching is emitted exactly once: a node branches on the candidates f that
// cover its pivot edge, and each branch forbids the candidates tried before
// it, so a solution follows the branch of its smallest pivot-covering edge.
template <typename Visitor>
class MaximalEnumerator {
public:
    MaximalEnumerator(const Graph& g, Visitor& visit, EnumBudget& budget)
        : g_(g), visit_(visit), budget_(budget), cover_(cover_lists(g)),
          covered_count_(g.size(), 0), forbidden_(g.size(), 0) {}

    void run() { dfs(0); }

private:
    void dfs(int start) {
        budget_.charge();
        int pivot = -1;
        for (int e = start; e < g_.size(); ++e)
            if (covered_count_[e] == 0) {
                pivot = e;
                break;
            }
        if (pivot < 0) {
            std::vector<int> out = partial_;
            std::sort(out.begin(), out.end());
            visit_(out);
            return;
        }
        std::vector<int> tried;
        for (int f : cover_[pivot]) {
            if (covered_count_[f] != 0 || forbidden_[f]) continue;
            partial_.push_back(f);
            for (int c : cover_[f]) ++covered_count_[c];
            dfs(pivot);
            for (int c : cover_[f]) --covered_count_[c];
            partial_.pop_back();
            forbidden_[f] = 1;
            tried.push_back(f);
        }
        for (int f : tried) forbidden_[f] = 0;
    }

    const Graph& g_;
    Visitor& visit_;
    EnumBudget& budget_;
    std::vector<std::vector<int>> cover_;
    std::vector<int> covered_count_;
    std::vector<char> forbidden_;
    std::vector<int> partial_;
};

}  // namespace detail

/// Streams every maximal induced matching (as a sorted edge-id vector)
/// exactly once. Emission order is the search order, not lexicographic.
template <typename Visitor>
void visit_maximal_induced(const Graph& g, Visitor&& visit, EnumBudget& budget) {
    detail::MaximalEnumerator<Visitor> enumerator(g, visit, budget);
    enumerator.run();
}

/// All maximal induced matchings, in lexicographic order of their sorted
/// edge-id tuples. Intended for m up to ~40 edges; guarded by the budget.
inline std::vector<std::vector<int>> enumerate_maximal_induced(const Graph& g,
                                                               EnumBudget budget = {}) {
    std::vector<std::vector<int>> out;
    visit_maximal_induced(g, [&](const std::vector<int>& m) { out.push_back(m); }, budget);
    std::sort(out.begin(), out.end());
    return out;
}

/// Size of a maximum induced matching (max over maximal ones).
inline int mim(const Graph& g, EnumBudget budget = {}) {
    int best = 0;
    visit_maximal_induced(
        g, [&](const std::vector<int>& m) { best = std::max(best, static_cast<int>(m.size())); },
        budget);
    return best;
}

/// Size of a minimum maximal induced matching.
inline int mmim(const Graph& g, EnumBudget budget = {}) {
    int best = -1;
    visit_maximal_induced(
        g,
        [&](const std::vector<int>& m) {
            int sz = static_cast<int>(m.size());
            if (best < 0 || sz < best) best = sz;
        },
        budget);
    return best < 0 ? 0 : best;
}

enum class Verdict { WellIndumatched, NotWellIndumatched };

/// Decision evidence: either the common size k of all maximal induced
/// matchings, or two maximal induced matchings of different sizes. Structural
/// recognizers may reject with a reason instead of a witness pair.
struct Certificate {
    Verdict verdict = Verdict::WellIndumatched;
    int k = 0;
    std::vector<int> witness_small;
    std::vector<int> witness_large;
    std::string method;
    std::string reason;

    bool well_indumatched() const { return verdict == Verdict::WellIndumatched; }
    bool has_witnesses() const { return !witness_large.empty(); }
};

/// Exhaustive ground-truth decision. On rejection the witnesses are the
/// lexicographically first matchings among the smallest and the largest.
inline Certificate oracle_is_wim(const Graph& g, EnumBudget budget = {}) {
    Certificate cert;
    cert.method = "oracle";
    if (g.size() == 0) {
        cert.verdict = Verdict::WellIndumatched;
        cert.k = 0;  // the empty matching is the unique maximal induced matching
        return cert;
    }
    std::vector<int> small, large;
    visit_maximal_induced(
        g,
        [&](const std::vector<int>& m) {
            if (small.empty() && large.empty()) {
                small = m;
                large = m;
                return;
            }
            if (m.size() < small.size() || (m.size() == small.size() && m < small)) small = m;
            if (m.size() > large.size() || (m.size() == large.size() && m < large)) large = m;
        },
        budget);
    if (small.size() == large.size()) {
        cert.verdict = Verdict::WellIndumatched;
        cert.k = static_cast<int>(small.size());
    } else {
        cert.verdict = Verdict::NotWellIndumatched;
        cert.witness_small = small;
        cert.witness_large = large;
    }
    return cert;
}

/// G minus all edges covered by the induced matching f0. Vertex ids and
/// labels are unchanged; isolated vertices are kept.
inline Graph remove_covered(const Graph& g, std::span<const int> f0) {
    if (!is_induced_matching(g, f0))
        throw ValidationError("remove_covered requires an induced matching");
    auto removed = covered_set(g, f0);
    std::vector<char> gone(g.size(), 0);
    for (int e : removed) gone[e] = 1;
    std::vector<std::pair<int, int>> rest;
    for (int e = 0; e < g.size(); ++e)
        if (!gone[e]) rest.push_back(g.edge(e));
    return Graph::from_edges(g.order(), std::move(rest), g.labels());
}

/// The sufficient condition for well-indumatchedness: every edge covered by
/// exactly one edge of the matching m, and the edges covered by a common
/// member pairwise cover each other. True certifies k = |m|.
inline bool unique_cover_check(const Graph& g, std::span<const int> m) {
    std::vector<char> endpoint(g.order(), 0);
    std::vector<int> ids(m.begin(), m.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int e : ids) {
        auto [u, v] = g.edge(e);
        if (endpoint[u] || endpoint[v]) throw ValidationError("not a matching");
        endpoint[u] = endpoint[v] = 1;
    }
    std::vector<int> count(g.size(), 0);
    std::vector<std::vector<int>> classes;
    std::vector<int> stamp(g.order(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto [a, b] = g.edge(ids[i]);
        for (int v : {a, b}) {
            stamp[v] = static_cast<int>(i);
            for (int w : g.neighbors(v)) stamp[w] = static_cast<int>(i);
        }
        std::vector<int> cls;
        for (int f = 0; f < g.size(); ++f) {
            auto [x, y] = g.edge(f);
            if (stamp[x] == static_cast<int>(i) || stamp[y] == static_cast<int>(i)) {
                ++count[f];
                cls.push_back(f);
            }
        }
        classes.push_back(std::move(cls));
    }
    for (int f = 0; f < g.size(); ++f)
        if (count[f] != 1) return false;
    for (const auto& cls : classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!covers(g, cls[i], cls[j])) return false;
    return true;
}

/// A degree-tagged path witnessing one of the two forbidden structures:
/// structure 1 is v1..v5 with d(v1)=d(v5)=1 and d(v2)=2; structure 2 is
/// v1..v6 with d(v1)=d(v6)=1 and d(v2)=d(v5)=2. Either one rules out
/// well-indumatchedness.
struct ForbiddenPath {
    std::vector<int> vertices;
    int structure;  // 1 or 2
};

inline std::optional<ForbiddenPath> find_forbidden_path(const Graph& g) {
    auto distinct = [](const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (vs[i] == vs[j]) return false;
        return true;
    };
    for (int v1 = 0; v1 < g.order(); ++v1) {
        if (g.degree(v1) != 1) continue;
        int v2 = g.neighbors(v1)[0];
        if (g.degree(v2) != 2) continue;
        int v3 = g.neighbors(v2)[0] == v1 ? g.neighbors(v2)[1] : g.neighbors(v2)[0];
        for (int v4 : g.neighbors(v3)) {
            if (v4 == v2) continue;
            for (int v5 : g.neighbors(v4)) {
                if (v5 == v3) continue;
                if (g.degree(v5) == 1 && distinct({v1, v2, v3, v4, v5}))
                    return ForbiddenPath{{v1, v2, v3, v4, v5}, 1};
            }
        }
    }
    for (int v1 = 0; v1 < g.order(); ++v1) {
        if (g.degree(v1) != 1) continue;
        int v2 = g.neighbors(v1)[0];
        if (g.degree(v2) != 2) continue;
        int v3 = g.neighbors(v2)[0] == v1 ? g.neighbors(v2)[1] : g.neighbors(v2)[0];
        for (int v4 : g.neighbors(v3)) {
            if (v4 == v2) continue;
            for (int v5 : g.neighbors(v4)) {
                if (v5 == v3 || g.degree(v5) != 2) continue;
                int v6 = g.neighbors(v5)[0] == v4 ? g.neighbors(v5)[1] : g.neighbors(v5)[0];
                if (g.degree(v6) == 1 && distinct({v1, v2, v3, v4, v5, v6}))
                    return ForbiddenPath{{v1, v2, v3, v4, v5, v6}, 2};
            }
        }
    }
    return std::nullopt;
}

}  // namespace wim
