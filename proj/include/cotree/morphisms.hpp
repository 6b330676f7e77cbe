#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "canon.hpp"
#include "poset.hpp"

namespace cotree {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct PosetMap {
    std::vector<std::size_t> map;
    std::size_t operator()(std::size_t x) const { return map[x]; }
    bool operator==(const PosetMap&) const = default;
};

inline PointSet image(const PosetMap& f, PointSet s) {
    PointSet out = 0;
    for (auto x : members(s)) out |= bit(f(x));
    return out;
}

inline bool is_total(const Poset& p, const Poset& q, const PosetMap& f) {
    if (f.map.size() != p.size()) return false;
    for (auto v : f.map)
        if (v >= q.size()) return false;
    return true;
}

inline bool is_order_preserving(const Poset& p, const Poset& q, const PosetMap& f) {
    if (!is_total(p, q, f)) return false;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (auto y : members(p.up(x)))
            if (!q.leq(f(x), f(y))) return false;
    return true;
}

// Order preserving, Up (f(x) <= u gives y >= x with f(y) = u) and Down.
inline bool is_bi_p_morphism(const Poset& p, const Poset& q, const PosetMap& f) {
    if (!is_order_preserving(p, q, f)) return false;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if ((q.up(f(x)) & ~image(f, p.up(x))) != 0) return false;
        if ((q.down(f(x)) & ~image(f, p.down(x))) != 0) return false;
    }
    return true;
}

inline bool is_surjective(const Poset& q, const PosetMap& f) {
    PointSet hit = 0;
    for (auto v : f.map) hit |= bit(v);
    return hit == q.all();
}

inline bool is_order_embedding(const Poset& p, const Poset& q, const PosetMap& f) {
    if (!is_total(p, q, f)) return false;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y) != q.leq(f(x), f(y))) return false;
    return true;
}

namespace detail {

inline void charge(std::uint64_t& nodes, std::uint64_t budget, const char* what) {
    if (++nodes > budget) throw BudgetExceeded(std::string(what) + " exceeds node budget " + std::to_string(budget), nodes);
}

}  // namespace detail

// Lexicographically first surjective bi-p-morphism p ->> q (values tried in q's index order).
inline std::optional<PosetMap> find_surjective_bi_p_morphism(const Poset& p, const Poset& q,
                                                             std::uint64_t budget = kDefaultNodeBudget,
                                                             std::uint64_t* nodes_out = nullptr) {
    const std::size_t n = p.size(), m = q.size();
    if (n == 0) return m == 0 ? std::optional<PosetMap>(PosetMap{}) : std::nullopt;
    if (m == 0 || n < m) return std::nullopt;
    const bool forest = is_co_forest(p);
    // candidates per point from size, minimality and maximality constraints
    std::vector<PointSet> dom(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < m; ++c) {
            if (popcount(q.up(c)) > popcount(p.up(x)) || popcount(q.down(c)) > popcount(p.down(x))) continue;
            if (has(p.minimal(), x) && !has(q.minimal(), c)) continue;
            if (has(p.maximal(), x) && !has(q.maximal(), c)) continue;
            dom[x] |= bit(c);
        }
        if (!dom[x]) return std::nullopt;
    }
    // back conditions become checkable once a whole principal upset/downset is assigned
    std::vector<std::vector<std::size_t>> up_ready(n), down_ready(n);
    for (std::size_t x = 0; x < n; ++x) {
        up_ready[63 - std::countl_zero(p.up(x))].push_back(x);
        down_ready[63 - std::countl_zero(p.down(x))].push_back(x);
    }
    PosetMap f{std::vector<std::size_t>(n, 0)};
    std::vector<int> hits(m, 0);
    std::size_t distinct = 0;
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
        if (x == n) return distinct == m;
        for (auto c : members(dom[x])) {
            detail::charge(nodes, budget, "surjection search");
            bool ok = true;
            for (std::size_t y = 0; y < x && ok; ++y) {
                if (p.leq(x, y) && !q.leq(c, f(y))) ok = false;
                if (p.leq(y, x) && !q.leq(f(y), c)) ok = false;
                if (ok && forest) {
                    if (p.covers(x, y) && c != f(y) && !q.covers(c, f(y))) ok = false;
                    if (p.covers(y, x) && c != f(y) && !q.covers(f(y), c)) ok = false;
                }
            }
            if (!ok) continue;
            f.map[x] = c;
            if (hits[c]++ == 0) ++distinct;
            ok = m - distinct <= n - x - 1;
            for (auto z : up_ready[x])
                if (ok && (q.up(f(z)) & ~image(f, p.up(z))) != 0) ok = false;
            for (auto z : down_ready[x])
                if (ok && (q.down(f(z)) & ~image(f, p.down(z))) != 0) ok = false;
            if (ok && go(x + 1)) return true;
            if (--hits[c] == 0) --distinct;
        }
        return false;
    };
    bool found = go(0);
    if (nodes_out) *nodes_out = nodes;
    if (!found) return std::nullopt;
    return f;
}

// Lexicographically first order-embedding p -> q.
inline std::optional<PosetMap> find_order_embedding(const Poset& p, const Poset& q,
                                                    std::uint64_t budget = kDefaultNodeBudget) {
    const std::size_t n = p.size(), m = q.size();
    if (n > m) return std::nullopt;
    std::vector<PointSet> dom(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < m; ++c)
            if (popcount(q.up(c)) >= popcount(p.up(x)) && popcount(q.down(c)) >= popcount(p.down(x))) dom[x] |= bit(c);
        if (!dom[x]) return std::nullopt;
    }
    PosetMap f{std::vector<std::size_t>(n, 0)};
    PointSet used = 0;
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
        if (x == n) return true;
        for (auto c : members(dom[x] & ~used)) {
            detail::charge(nodes, budget, "embedding search");
            bool ok = true;
            for (std::size_t y = 0; y < x && ok; ++y)
                ok = p.leq(x, y) == q.leq(c, f(y)) && p.leq(y, x) == q.leq(f(y), c);
            if (!ok) continue;
            f.map[x] = c;
            used |= bit(c);
            if (go(x + 1)) return true;
            used &= ~bit(c);
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return f;
}

enum class Relation { Below, Above, Incomparable, Isomorphic };

inline const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Below: return "<=";
        case Relation::Above: return ">=";
        case Relation::Incomparable: return "incomparable";
        case Relation::Isomorphic: return "isomorphic";
    }
    return "?";
}

// entry (i,j) is Below when posets[i] is a bi-p-morphic image of posets[j].
inline std::vector<std::vector<Relation>> antichain_matrix(const std::vector<Poset>& posets,
                                                           std::uint64_t budget = kDefaultNodeBudget) {
    const std::size_t k = posets.size();
    std::vector<std::vector<Relation>> out(k, std::vector<Relation>(k, Relation::Isomorphic));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j || isomorphic(posets[i], posets[j])) continue;
            bool below = find_surjective_bi_p_morphism(posets[j], posets[i], budget).has_value();
            bool above = find_surjective_bi_p_morphism(posets[i], posets[j], budget).has_value();
            out[i][j] = below ? Relation::Below : above ? Relation::Above : Relation::Incomparable;
        }
    }
    return out;
}

}  // namespace cotree
