#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wim/graph.hpp"
#include "wim/matching.hpp"

namespace wim {

/// No two edges at distance >= 2, i.e. no induced 2K2.
inline bool is_2k2_free(const Graph& g) {
    for (int e = 0; e < g.size(); ++e)
        for (int f = e + 1; f < g.size(); ++f)
            if (!covers(g, e, f)) return false;
    return true;
}

/// Decision for fixed-size well-indumatchedness. The trace lists the edges
/// removed along the first refuting branch (ids in the input graph); it is
/// present exactly when the verdict is false and has at most k-1 entries.
struct KDecision {
    int k = 0;
    bool verdict = false;
    std::vector<int> trace;
};

struct KwimOptions {
    bool memoize = true;
};

namespace detail {

class KwimSolver {
public:
    KwimSolver(const Graph& g, bool memoize) : g_(g), memoize_(memoize) {
        words_ = (g.size() + 63) / 64;
    }

    using Bits = std::vector<std::uint64_t>;

    Bits full() const {
        Bits b(words_, 0);
        for (int e = 0; e < g_.size(); ++e) b[e >> 6] |= 1ull << (e & 63);
        return b;
    }

    static bool test(const Bits& b, int e) { return b[e >> 6] >> (e & 63) & 1; }
    static bool empty(const Bits& b) {
        for (auto w : b)
            if (w) return false;
        return true;
    }

    // e covers f inside the subgraph on edge set S: shared endpoint, or a
    // joining edge that itself survives in S
    bool cover_in(const Bits& s, int e, int f) const {
        auto [a, b] = g_.edge(e);
        auto [x, y] = g_.edge(f);
        if (a == x || a == y || b == x || b == y) return true;
        for (auto [p, q] : {std::pair{a, x}, std::pair{a, y}, std::pair{b, x}, std::pair{b, y}}) {
            int id = g_.edge_id(p, q);
            if (id >= 0 && test(s, id)) return true;
        }
        return false;
    }

    Bits remove_cover(const Bits& s, int e) const {
        Bits out = s;
        for (int f = 0; f < g_.size(); ++f)
            if (test(s, f) && cover_in(s, e, f)) out[f >> 6] &= ~(1ull << (f & 63));
        return out;
    }

    bool two_k2_free_in(const Bits& s) const {
        for (int e = 0; e < g_.size(); ++e) {
            if (!test(s, e)) continue;
            for (int f = e + 1; f < g_.size(); ++f)
                if (test(s, f) && !cover_in(s, e, f)) return false;
        }
        return true;
    }

    bool decide(const Bits& s, int k) {
        if (k == 0) return empty(s);
        if (empty(s)) return false;
        if (k == 1) return two_k2_free_in(s);
        if (memoize_) {
            auto it = memo_.find(Key{k, s});
            if (it != memo_.end()) return it->second;
        }
        bool ok = true;
        for (int e = 0; e < g_.size() && ok; ++e) {
            if (!test(s, e)) continue;
            if (!decide(remove_cover(s, e), k - 1)) ok = false;
        }
        if (memoize_) memo_.emplace(Key{k, s}, ok);
        return ok;
    }

    // walks the first failing branch again; memo makes the re-derivation cheap
    std::vector<int> refutation_trace(int k) {
        std::vector<int> trace;
        Bits s = full();
        while (k >= 2 && !empty(s)) {
            int bad = -1;
            for (int e = 0; e < g_.size(); ++e) {
                if (!test(s, e)) continue;
                if (!decide(remove_cover(s, e), k - 1)) {
                    bad = e;
                    break;
                }
            }
            if (bad < 0) break;
            trace.push_back(bad);
            s = remove_cover(s, bad);
            --k;
        }
        return trace;
    }

private:
    struct Key {
        int k;
        Bits bits;
        bool operator==(const Key& o) const { return k == o.k && bits == o.bits; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const {
            std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(key.k);
            for (auto w : key.bits) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

    const Graph& g_;
    bool memoize_;
    int words_;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace detail

/// True iff every maximal induced matching of g has size exactly k, by the
/// recursive peeling over covered edge sets with the 2K2-free base case.
inline KDecision is_k_wim(const Graph& g, int k, KwimOptions opts = {}) {
    if (k < 0) throw ValidationError("k must be nonnegative");
    detail::KwimSolver solver(g, opts.memoize);
    KDecision d;
    d.k = k;
    d.verdict = solver.decide(solver.full(), k);
    if (!d.verdict) d.trace = solver.refutation_trace(k);
    return d;
}

/// The unique k <= k_max for which g is k-well-indumatched, if any.
inline std::optional<int> classify_k(const Graph& g, int k_max, KwimOptions opts = {}) {
    for (int k = 0; k <= k_max; ++k)
        if (is_k_wim(g, k, opts).verdict) return k;
    return std::nullopt;
}

}  // namespace wim
