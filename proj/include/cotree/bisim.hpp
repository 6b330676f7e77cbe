#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "morphisms.hpp"

namespace cotree {

inline constexpr std::size_t kPartitionCap = 8;

class EquivPartition {
public:
    EquivPartition() = default;
    // blocks must be nonempty, disjoint and cover 0..n-1
    EquivPartition(std::size_t n, std::vector<PointSet> blocks) : n_(n), blocks_(std::move(blocks)) {
        PointSet seen = 0;
        for (auto b : blocks_) {
            if (b == 0) throw Error("empty block in partition");
            if (seen & b) throw Error("partition blocks overlap");
            seen |= b;
        }
        if (seen != low_bits(n)) throw Error("partition does not cover the poset");
        block_of_.assign(n, 0);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            for (auto x : members(blocks_[i])) block_of_[x] = i;
    }

    static EquivPartition identity(std::size_t n) {
        std::vector<PointSet> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(bit(i));
        return EquivPartition(n, b);
    }
    static EquivPartition total(std::size_t n) {
        return n == 0 ? EquivPartition(0, {}) : EquivPartition(n, {low_bits(n)});
    }
    // restricted growth string: rgs[i] is the block number of point i
    static EquivPartition from_rgs(const std::vector<std::size_t>& rgs) {
        std::vector<PointSet> b;
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] >= b.size()) b.resize(rgs[i] + 1, 0);
            b[rgs[i]] |= bit(i);
        }
        return EquivPartition(rgs.size(), b);
    }

    std::size_t size() const { return n_; }
    const std::vector<PointSet>& blocks() const { return blocks_; }
    PointSet block(std::size_t x) const { return blocks_[block_of_[x]]; }
    bool related(std::size_t x, std::size_t y) const { return block_of_[x] == block_of_[y]; }
    bool is_identity() const { return blocks_.size() == n_; }

    // union of the blocks meeting s
    PointSet saturate(PointSet s) const {
        PointSet out = 0;
        for (auto b : blocks_)
            if (b & s) out |= b;
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<PointSet> blocks_;
    std::vector<std::size_t> block_of_;
};

// Least saturated upset containing s.
inline PointSet saturated_upset(const Poset& p, const EquivPartition& e, PointSet s) {
    PointSet cur = s;
    for (;;) {
        PointSet next = up_closure(p, e.saturate(cur));
        if (next == cur) return cur;
        cur = next;
    }
}

inline bool is_bi_bisimulation(const Poset& p, const EquivPartition& e) {
    if (e.size() != p.size()) throw Error("partition belongs to a different poset");
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (auto y : members(e.block(x))) {
            for (auto x2 : members(p.up(x)))
                if ((e.block(x2) & p.up(y)) == 0) return false;
            for (auto x2 : members(p.down(x)))
                if ((e.block(x2) & p.down(y)) == 0) return false;
        }
    }
    std::vector<PointSet> sat(n);
    for (std::size_t x = 0; x < n; ++x) sat[x] = saturated_upset(p, e, bit(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (!e.related(x, y) && has(sat[x], y) && has(sat[y], x)) return false;
    return true;
}

// Saturated upsets, as a subset of the upset lattice.
inline std::vector<PointSet> saturated_upsets(const Poset& p, const EquivPartition& e) {
    std::vector<PointSet> out;
    for (auto u : all_upsets(p))
        if (e.saturate(u) == u) out.push_back(u);
    return out;
}

inline bool is_isolated_chain(const Poset& p, PointSet h) {
    check_subset(p, h);
    if (h == 0 || !is_chain(p, h)) throw Error("isolated chain check needs a nonempty chain");
    std::size_t lo = 0, hi = 0;
    for (auto x : members(h)) {
        if ((p.down(x) & h) == bit(x)) lo = x;
        if ((p.up(x) & h) == bit(x)) hi = x;
    }
    return (p.down(hi) & ~h) == (p.down(lo) & ~bit(lo)) && (p.up(lo) & ~h) == (p.up(hi) & ~bit(hi));
}

inline EquivPartition isolated_chain_partition(const Poset& p, PointSet h) {
    check_subset(p, h);
    if (h == 0 || !is_chain(p, h)) throw Error("isolated chain partition needs a nonempty chain");
    std::vector<PointSet> b{h};
    for (auto x : members(p.all() & ~h)) b.push_back(bit(x));
    return EquivPartition(p.size(), b);
}

// Pairs x in the downset of w with iso(x) in the downset of v; iso is indexed by points of p.
inline EquivPartition twin_partition(const Poset& p, std::size_t w, std::size_t v, const PosetMap& iso) {
    if (!is_co_forest(p)) throw Error("twin partition needs a co-forest");
    if (w == v) throw Error("twin points must differ");
    if ((p.covers_above(w) & p.covers_above(v)) == 0) throw Error("twin points need a common immediate successor");
    if (iso.map.size() != p.size()) throw Error("twin map must be indexed by the poset's points");
    const PointSet dw = p.down(w), dv = p.down(v);
    if (popcount(dw) != popcount(dv)) throw Error("downsets of the twins differ in size");
    PointSet hit = 0;
    for (auto x : members(dw)) {
        if (!has(dv, iso(x))) throw Error("twin map leaves the second downset");
        hit |= bit(iso(x));
        for (auto y : members(dw))
            if (p.leq(x, y) != p.leq(iso(x), iso(y))) throw Error("twin map is not an order-isomorphism");
    }
    if (hit != dv) throw Error("twin map is not onto the second downset");
    if (iso(w) != v) throw Error("twin map must send w to v");
    std::vector<PointSet> b;
    for (auto x : members(dw)) b.push_back(bit(x) | bit(iso(x)));
    for (auto x : members(p.all() & ~(dw | dv))) b.push_back(bit(x));
    return EquivPartition(p.size(), b);
}

struct ColoredFrame {
    Poset poset;
    std::vector<PointSet> colors;
    bool closure_changed = false;  // whether up-closing the raw definition changed a color
};

inline std::uint64_t color_of(const ColoredFrame& f, std::size_t x) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < f.colors.size(); ++i)
        if (has(f.colors[i], x)) c |= std::uint64_t{1} << i;
    return c;
}

// U = {x1} together with the upsets of the even-numbered teeth.
inline ColoredFrame comb_coloring(std::size_t n) {
    ColoredFrame f{make_comb(n), {}, false};
    PointSet teeth = 0;
    for (std::size_t i = 2; i <= n; i += 2) teeth |= bit(2 * (i - 1) + 1);
    PointSet raw = bit(0) | up_closure(f.poset, teeth);
    PointSet u = up_closure(f.poset, raw);
    f.closure_changed = u != raw;
    f.colors.push_back(u);
    return f;
}

struct ColoringReport {
    bool generated = false;        // closure oracle
    bool all_identify = false;     // every proper bi-bisimulation merges two colors
    std::size_t partitions = 0;    // proper partitions enumerated
    std::size_t bisimulations = 0;
    std::optional<EquivPartition> witness;  // proper bi-bisimulation respecting colors, if any
    bool agree() const { return generated == all_identify; }
};

// Calls f on every partition of n points (restricted growth order).
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            f(rgs);
            return;
        }
        for (std::size_t b = 0; b <= used && b < n; ++b) {
            rgs[i] = b;
            go(i + 1, b == used ? used + 1 : used);
        }
    };
    go(0, 0);
}

inline ColoringReport coloring_theorem_check(const ColoredFrame& cf, std::size_t cap = kPartitionCap) {
    const Poset& p = cf.poset;
    if (p.size() > cap) throw BudgetExceeded("partition enumeration beyond " + std::to_string(cap) + " points", p.size());
    for (auto c : cf.colors)
        if (!is_upset(p, c)) throw Error("color is not an upset");
    ColoringReport r;
    auto u = upset_algebra(p);
    std::vector<Elem> gens;
    for (auto c : cf.colors) gens.push_back(u.element_of(c));
    r.generated = generates(u.alg, gens);
    r.all_identify = true;
    for_each_partition(p.size(), [&](const std::vector<std::size_t>& rgs) {
        auto e = EquivPartition::from_rgs(rgs);
        if (e.is_identity()) return;
        ++r.partitions;
        if (!is_bi_bisimulation(p, e)) return;
        ++r.bisimulations;
        bool mixes = false;
        for (auto b : e.blocks()) {
            auto first = static_cast<std::size_t>(std::countr_zero(b));
            for (auto x : members(b))
                if (color_of(cf, x) != color_of(cf, first)) mixes = true;
        }
        if (!mixes && r.all_identify) {
            r.all_identify = false;
            r.witness = e;
        }
    });
    return r;
}

struct DepthBoundReport {
    int gen_rank = 0;
    int depth = 0;
    int max_min_upset = 0;  // largest |up w| over minimal w
    int bound = 0;          // (gen_rank + 1) * n
    bool holds() const { return depth <= bound && max_min_upset <= bound; }
};

inline DepthBoundReport depth_bound_check(const Poset& x, std::size_t n, std::size_t gen_cap = kDefaultGenRankCap) {
    if (!is_co_tree(x)) throw Error("depth bound needs a co-tree");
    if (find_order_embedding(make_comb(n), x)) throw Error("co-tree contains C_" + std::to_string(n));
    DepthBoundReport r;
    r.gen_rank = gen_rank(upset_algebra(x).alg, gen_cap).rank;
    r.depth = depth(x);
    for (auto w : members(x.minimal())) r.max_min_upset = std::max(r.max_min_upset, popcount(x.up(w)));
    r.bound = (r.gen_rank + 1) * static_cast<int>(n);
    return r;
}

struct KTableEntry {
    std::size_t scanned = 0;   // co-trees omitting C_n with gen rank <= m
    std::size_t max_algebra = 0;
    std::optional<Poset> largest;
};

inline KTableEntry ktable(std::size_t n, int m, std::size_t size_cap, std::size_t enum_cap = kEnumerationCap,
                          std::size_t gen_cap = kDefaultGenRankCap) {
    KTableEntry out;
    const Poset comb = make_comb(n);
    for (auto& x : enumerate_cotrees(size_cap, enum_cap)) {
        if (find_order_embedding(comb, x)) continue;
        auto a = upset_algebra(x).alg;
        if (!gen_rank_bounded(a, m, gen_cap)) continue;
        ++out.scanned;
        if (a.size() > out.max_algebra) {
            out.max_algebra = a.size();
            out.largest = x;
        }
    }
    return out;
}

}  // namespace cotree
