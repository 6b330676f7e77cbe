#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace cotree {

class Poset {
public:
    Poset() = default;

    // up[i] is the principal upset of i. Checked to be a partial order.
    Poset(std::vector<PointSet> up, std::vector<std::string> labels) : up_(std::move(up)), labels_(std::move(labels)) {
        const std::size_t n = up_.size();
        if (n > kMaxPoints) throw Error("poset has more than 64 points");
        if (labels_.empty()) {
            for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
        }
        if (labels_.size() != n) throw Error("label count does not match point count");
        down_.assign(n, 0);
        const PointSet all = low_bits(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (up_[i] & ~all) throw Error("relation mentions a point outside the poset");
            if (!has(up_[i], i)) throw Error("relation is not reflexive");
            for (auto j : members(up_[i])) {
                if ((up_[j] & ~up_[i]) != 0) throw Error("relation is not transitive");
                if (j != i && has(up_[j], i)) throw Error("relation is not antisymmetric");
                down_[j] |= bit(i);
            }
        }
    }

    std::size_t size() const { return up_.size(); }
    bool empty() const { return up_.empty(); }
    PointSet all() const { return low_bits(size()); }

    bool leq(std::size_t i, std::size_t j) const { return has(up_[i], j); }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

    PointSet up(std::size_t i) const { return up_[i]; }
    PointSet down(std::size_t i) const { return down_[i]; }

    // Immediate successors / predecessors.
    PointSet covers_above(std::size_t i) const {
        PointSet strict = up_[i] & ~bit(i);
        PointSet out = 0;
        for (auto j : members(strict)) {
            if ((strict & down_[j]) == bit(j)) out |= bit(j);
        }
        return out;
    }
    PointSet covers_below(std::size_t i) const {
        PointSet strict = down_[i] & ~bit(i);
        PointSet out = 0;
        for (auto j : members(strict)) {
            if ((strict & up_[j]) == bit(j)) out |= bit(j);
        }
        return out;
    }
    bool covers(std::size_t lower, std::size_t upper) const { return has(covers_above(lower), upper); }

    // (lower, upper) pairs of the Hasse diagram, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < size(); ++i) {
            for (auto j : members(covers_above(i))) out.emplace_back(i, j);
        }
        return out;
    }

    PointSet minimal() const {
        PointSet out = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (down_[i] == bit(i)) out |= bit(i);
        return out;
    }
    PointSet maximal() const {
        PointSet out = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (up_[i] == bit(i)) out |= bit(i);
        return out;
    }

    std::optional<std::size_t> greatest() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (down_[i] == all()) return i;
        return std::nullopt;
    }

    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (labels_[i] == name) return i;
        return std::nullopt;
    }
    std::size_t index(const std::string& name) const {
        auto i = find(name);
        if (!i) throw Error("unknown point '" + name + "'");
        return *i;
    }
    PointSet set_of(const std::vector<std::string>& names) const {
        PointSet s = 0;
        for (const auto& nm : names) s |= bit(index(nm));
        return s;
    }

    // Induced subposet on s; points keep their relative order.
    Poset restrict(PointSet s) const {
        std::vector<std::size_t> keep;
        for (auto i : members(s & all())) keep.push_back(i);
        std::vector<PointSet> up(keep.size(), 0);
        std::vector<std::string> labels;
        for (std::size_t a = 0; a < keep.size(); ++a) {
            labels.push_back(labels_[keep[a]]);
            for (std::size_t b = 0; b < keep.size(); ++b)
                if (leq(keep[a], keep[b])) up[a] |= bit(b);
        }
        return Poset(std::move(up), std::move(labels));
    }

    bool same_order(const Poset& o) const { return up_ == o.up_; }
    bool operator==(const Poset& o) const { return up_ == o.up_ && labels_ == o.labels_; }

private:
    std::vector<PointSet> up_;
    std::vector<PointSet> down_;
    std::vector<std::string> labels_;
};

// covers are (lower, upper) label pairs; leq is their reflexive-transitive closure.
inline Poset build_poset(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    if (labels.size() > kMaxPoints) throw Error("poset has more than 64 points");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!idx.emplace(labels[i], i).second) throw Error("duplicate label '" + labels[i] + "'");
    }
    const std::size_t n = labels.size();
    std::vector<PointSet> succ(n, 0);
    for (const auto& [lo, hi] : covers) {
        auto a = idx.find(lo), b = idx.find(hi);
        if (a == idx.end()) throw Error("dangling reference '" + lo + "'");
        if (b == idx.end()) throw Error("dangling reference '" + hi + "'");
        if (a->second == b->second) throw Error("cycle detected at '" + lo + "'");
        succ[a->second] |= bit(b->second);
    }
    std::vector<PointSet> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = bit(i) | succ[i];
    // bit-parallel Warshall
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (has(up[i], k)) up[i] |= up[k];
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : members(up[i] & ~bit(i)))
            if (has(up[j], i)) throw Error("cycle detected through '" + labels[i] + "'");
    return Poset(std::move(up), labels);
}

inline void check_subset(const Poset& p, PointSet s) {
    if (s & ~p.all()) throw Error("subset does not belong to this poset");
}

inline PointSet up_closure(const Poset& p, PointSet s) {
    check_subset(p, s);
    PointSet out = 0;
    for (auto i : members(s)) out |= p.up(i);
    return out;
}

inline PointSet down_closure(const Poset& p, PointSet s) {
    check_subset(p, s);
    PointSet out = 0;
    for (auto i : members(s)) out |= p.down(i);
    return out;
}

inline bool is_upset(const Poset& p, PointSet s) { return up_closure(p, s) == s; }
inline bool is_downset(const Poset& p, PointSet s) { return down_closure(p, s) == s; }

inline bool is_chain(const Poset& p, PointSet s) {
    check_subset(p, s);
    for (auto i : members(s))
        if ((s & ~(p.up(i) | p.down(i))) != 0) return false;
    return true;
}

inline bool is_antichain(const Poset& p, PointSet s) {
    check_subset(p, s);
    for (auto i : members(s))
        if ((s & (p.up(i) | p.down(i))) != bit(i)) return false;
    return true;
}

inline bool is_co_forest(const Poset& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!is_chain(p, p.up(i))) return false;
    return true;
}

inline bool is_co_tree(const Poset& p) { return !p.empty() && p.greatest().has_value() && is_co_forest(p); }

inline int depth(const Poset& p) {
    if (p.empty()) throw Error("depth of the empty poset");
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return popcount(p.down(a)) < popcount(p.down(b)); });
    std::vector<int> longest(p.size(), 1);
    int best = 1;
    for (auto j : order) {
        for (auto i : members(p.down(j) & ~bit(j))) longest[j] = std::max(longest[j], longest[i] + 1);
        best = std::max(best, longest[j]);
    }
    return best;
}

// Dilworth: width = n - maximum matching in the strict-order bipartite graph.
inline int width(const Poset& p) {
    if (p.empty()) throw Error("width of the empty poset");
    const std::size_t n = p.size();
    std::vector<int> match_right(n, -1);
    std::function<bool(std::size_t, PointSet&)> augment = [&](std::size_t u, PointSet& seen) {
        for (auto v : members(p.up(u) & ~bit(u))) {
            if (has(seen, v)) continue;
            seen |= bit(v);
            if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]), seen)) {
                match_right[v] = static_cast<int>(u);
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (std::size_t u = 0; u < n; ++u) {
        PointSet seen = 0;
        if (augment(u, seen)) ++matched;
    }
    return static_cast<int>(n) - matched;
}

inline std::vector<PointSet> components(const Poset& p) {
    std::vector<PointSet> out;
    PointSet left = p.all();
    while (left) {
        PointSet comp = bit(static_cast<std::size_t>(std::countr_zero(left)));
        PointSet frontier = comp;
        while (frontier) {
            PointSet next = 0;
            for (auto i : members(frontier)) next |= p.up(i) | p.down(i);
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline constexpr std::size_t kDefaultUpsetCap = 1u << 16;

// Sorted by cardinality, then by bit pattern; so the empty set comes first and the whole poset last.
inline std::vector<PointSet> all_upsets(const Poset& p, std::size_t cap = kDefaultUpsetCap) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return popcount(p.up(a)) < popcount(p.up(b)); });
    std::vector<PointSet> out;
    std::function<void(std::size_t, PointSet)> go = [&](std::size_t k, PointSet cur) {
        if (k == order.size()) {
            if (out.size() >= cap) throw BudgetExceeded("upset enumeration exceeds cap " + std::to_string(cap), cap + 1);
            out.push_back(cur);
            return;
        }
        auto x = order[k];
        go(k + 1, cur);
        if ((p.up(x) & ~bit(x) & ~cur) == 0) go(k + 1, cur | bit(x));
    };
    go(0, 0);
    std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return out;
}

// --- standard shapes ---

inline Poset make_antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    return build_poset(labels, {});
}

// L_n: c1 < c2 < ... < cn
inline Poset make_chain(std::size_t n) {
    if (n < 1 || n > kMaxPoints) throw Error("chain length out of range");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back("c" + std::to_string(i));
        if (i > 1) covers.emplace_back(labels[i - 2], labels[i - 1]);
    }
    return build_poset(labels, covers);
}

// F_n: co-root r above n minimal points.
inline Poset make_cofork(std::size_t n) {
    if (n < 1 || n + 1 > kMaxPoints) throw Error("co-fork size out of range");
    std::vector<std::string> labels{"r"};
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back("x" + std::to_string(i));
        covers.emplace_back(labels.back(), "r");
    }
    return build_poset(labels, covers);
}

// C_n: spine x1 < ... < xn, tooth xi' below xi only. Indices interleave x1, x1', x2, x2', ...
inline Poset make_comb(std::size_t n) {
    if (n < 1 || 2 * n > kMaxPoints) throw Error("comb size out of range");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i <= n; ++i) {
        std::string x = "x" + std::to_string(i);
        labels.push_back(x);
        labels.push_back(x + "'");
        covers.emplace_back(x + "'", x);
        if (i > 1) covers.emplace_back("x" + std::to_string(i - 1), x);
    }
    return build_poset(labels, covers);
}

// T_n. Points are indexed top-down: gadgets u1.. first, the base chain a,b,c,d last.
inline Poset make_hodkinson(std::size_t n) {
    if (4 + 8 * n > kMaxPoints) throw Error("hodkinson index out of range");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i <= n; ++i) {
        auto s = std::to_string(i);
        std::string u = "u" + s, v = "v" + s, w = "w" + s, z = "z" + s;
        labels.insert(labels.end(), {u, v, v + "a", v + "b", w, z, z + "b", z + "a"});
        covers.emplace_back(v, u);
        covers.emplace_back(v + "a", v);
        covers.emplace_back(v + "b", v);
        covers.emplace_back(w, u);
        covers.emplace_back(z, w);
        covers.emplace_back(z + "b", z);
        covers.emplace_back(z + "a", z + "b");
        std::string below = i == n ? "a" : "u" + std::to_string(i + 1);
        covers.emplace_back(below, w);
    }
    labels.insert(labels.end(), {"a", "b", "c", "d"});
    covers.emplace_back("b", "a");
    covers.emplace_back("c", "b");
    covers.emplace_back("d", "c");
    return build_poset(labels, covers);
}

inline Poset disjoint_union(const Poset& a, const Poset& b) {
    const std::size_t n = a.size();
    if (n + b.size() > kMaxPoints) throw Error("disjoint union has more than 64 points");
    std::vector<PointSet> up;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        up.push_back(a.up(i));
        labels.push_back(a.label(i));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        up.push_back(b.up(i) << n);
        std::string l = b.label(i);
        while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "+";
        labels.push_back(l);
    }
    return Poset(std::move(up), std::move(labels));
}

// --- DOT ---

inline std::string to_dot(const Poset& p) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i) os << "  \"" << p.label(i) << "\";\n";
    for (auto [lo, hi] : p.cover_pairs()) os << "  \"" << p.label(lo) << "\" -> \"" << p.label(hi) << "\";\n";
    os << "}\n";
    return os.str();
}

// Reads the subset of DOT that to_dot writes: quoted node lines and edge lines.
inline Poset from_dot(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    std::istringstream is(text);
    std::string line;
    auto quoted = [](const std::string& s, std::size_t& pos) -> std::optional<std::string> {
        auto a = s.find('"', pos);
        if (a == std::string::npos) return std::nullopt;
        auto b = s.find('"', a + 1);
        if (b == std::string::npos) throw Error("unterminated quote in DOT input");
        pos = b + 1;
        return s.substr(a + 1, b - a - 1);
    };
    while (std::getline(is, line)) {
        std::size_t pos = 0;
        auto first = quoted(line, pos);
        if (!first) continue;
        if (line.find("->", pos) != std::string::npos) {
            auto second = quoted(line, pos);
            if (!second) throw Error("malformed DOT edge: " + line);
            covers.emplace_back(*first, *second);
        } else {
            labels.push_back(*first);
        }
    }
    return build_poset(labels, covers);
}

}  // namespace cotree
