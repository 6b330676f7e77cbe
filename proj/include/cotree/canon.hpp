#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "poset.hpp"

namespace cotree {

inline constexpr std::size_t kEnumerationCap = 12;

namespace detail {

inline std::string subtree_code(const Poset& p, std::size_t x) {
    std::vector<std::string> kids;
    for (auto c : members(p.covers_below(x))) kids.push_back(subtree_code(p, c));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
}

inline std::string forest_code(const Poset& p) {
    std::vector<std::string> roots;
    for (auto r : members(p.maximal())) roots.push_back(subtree_code(p, r));
    std::sort(roots.begin(), roots.end());
    std::string out;
    for (auto& r : roots) out += r;
    return out;
}

// Points grouped by an isomorphism invariant; classes in invariant order.
inline std::vector<std::vector<std::size_t>> invariant_classes(const Poset& p) {
    using Key = std::array<int, 4>;
    std::vector<std::pair<Key, std::size_t>> keyed;
    for (std::size_t i = 0; i < p.size(); ++i) {
        keyed.push_back({{popcount(p.up(i)), popcount(p.down(i)), popcount(p.covers_above(i)),
                          popcount(p.covers_below(i))},
                         i});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < keyed.size(); ++k) {
        if (k == 0 || keyed[k].first != keyed[k - 1].first) classes.emplace_back();
        classes.back().push_back(keyed[k].second);
    }
    return classes;
}

inline std::string general_code(const Poset& p) {
    auto classes = invariant_classes(p);
    std::uint64_t perms = 1;
    for (auto& c : classes) {
        for (std::size_t k = 2; k <= c.size(); ++k) {
            perms *= k;
            if (perms > 5'000'000) throw BudgetExceeded("canonical form needs too many relabelings", perms);
        }
    }
    std::string best;
    std::vector<std::size_t> order;
    auto encode = [&] {
        std::string s;
        s.reserve(order.size() * order.size());
        for (auto a : order)
            for (auto b : order) s.push_back(p.leq(a, b) ? '1' : '0');
        return s;
    };
    std::function<void(std::size_t)> go = [&](std::size_t ci) {
        if (ci == classes.size()) {
            auto s = encode();
            if (best.empty() || s < best) best = s;
            return;
        }
        auto cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            order.insert(order.end(), cls.begin(), cls.end());
            go(ci + 1);
            order.resize(order.size() - cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    go(0);
    std::string head;
    for (auto& c : classes) head += std::to_string(c.size()) + ".";
    return head + best;
}

}  // namespace detail

// Equal strings iff isomorphic posets.
inline std::string canonical_form(const Poset& p) {
    if (is_co_forest(p)) return "F" + detail::forest_code(p);
    return "G" + std::to_string(p.size()) + ":" + detail::general_code(p);
}

inline bool isomorphic(const Poset& a, const Poset& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

// Builds a co-forest from a parenthesis code; points in preorder, labels v0, v1, ...
inline Poset from_forest_code(const std::string& code) {
    std::vector<int> parent;
    std::vector<int> stack;
    for (char c : code) {
        if (c == '(') {
            parent.push_back(stack.empty() ? -1 : stack.back());
            stack.push_back(static_cast<int>(parent.size()) - 1);
        } else if (c == ')') {
            if (stack.empty()) throw Error("unbalanced forest code");
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw Error("unbalanced forest code");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        labels.push_back("v" + std::to_string(i));
        if (parent[i] >= 0) covers.emplace_back(labels[i], labels[static_cast<std::size_t>(parent[i])]);
    }
    return build_poset(labels, covers);
}

namespace detail {

// Rooted trees up to isomorphism, by size, as sorted codes.
inline std::vector<std::vector<std::string>> tree_codes(std::size_t max_size) {
    std::vector<std::vector<std::string>> by_size(max_size + 1);
    std::vector<std::pair<std::size_t, std::string>> smaller;  // (size, code), growing
    for (std::size_t n = 1; n <= max_size; ++n) {
        std::vector<std::string> out;
        std::vector<std::string> kids;
        std::function<void(std::size_t, std::size_t)> forests = [&](std::size_t left, std::size_t max_idx) {
            if (left == 0) {
                auto sorted = kids;
                std::sort(sorted.begin(), sorted.end());
                std::string code = "(";
                for (auto& k : sorted) code += k;
                out.push_back(code + ")");
                return;
            }
            for (std::size_t idx = max_idx; idx-- > 0;) {
                if (smaller[idx].first > left) continue;
                kids.push_back(smaller[idx].second);
                forests(left - smaller[idx].first, idx + 1);
                kids.pop_back();
            }
        };
        forests(n - 1, smaller.size());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        by_size[n] = out;
        for (auto& c : out) smaller.emplace_back(n, c);
    }
    return by_size;
}

}  // namespace detail

// One co-tree per isomorphism class, sizes 1..max_size, ordered by size then code.
inline std::vector<Poset> enumerate_cotrees(std::size_t max_size, std::size_t cap = kEnumerationCap) {
    if (max_size > cap) throw BudgetExceeded("co-tree enumeration beyond cap " + std::to_string(cap), max_size);
    std::vector<Poset> out;
    auto codes = detail::tree_codes(max_size);
    for (std::size_t n = 1; n <= max_size; ++n)
        for (auto& c : codes[n]) out.push_back(from_forest_code(c));
    return out;
}

// One co-forest per isomorphism class, sizes 1..max_size.
inline std::vector<Poset> enumerate_coforests(std::size_t max_size, std::size_t cap = kEnumerationCap) {
    if (max_size > cap) throw BudgetExceeded("co-forest enumeration beyond cap " + std::to_string(cap), max_size);
    auto codes = detail::tree_codes(max_size);
    std::vector<std::pair<std::size_t, std::string>> trees;
    for (std::size_t n = 1; n <= max_size; ++n)
        for (auto& c : codes[n]) trees.emplace_back(n, c);
    std::vector<Poset> out;
    for (std::size_t total = 1; total <= max_size; ++total) {
        std::vector<std::string> found;
        std::vector<std::string> parts;
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t left, std::size_t max_idx) {
            if (left == 0) {
                auto sorted = parts;
                std::sort(sorted.begin(), sorted.end());
                std::string code;
                for (auto& s : sorted) code += s;
                found.push_back(code);
                return;
            }
            for (std::size_t idx = max_idx; idx-- > 0;) {
                if (trees[idx].first > left) continue;
                parts.push_back(trees[idx].second);
                go(left - trees[idx].first, idx + 1);
                parts.pop_back();
            }
        };
        go(total, trees.size());
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        for (auto& c : found) out.push_back(from_forest_code(c));
    }
    return out;
}

// Calls f on every poset on 0..n-1 whose order is contained in the index order.
// Point j's strict downset is any downset of the points before it, so each such poset appears once.
inline void for_each_natural_poset(std::size_t n, const std::function<void(const Poset&)>& f) {
    if (n > kMaxPoints) throw Error("natural poset enumeration beyond 64 points");
    std::vector<PointSet> down(n, 0);
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == n) {
            std::vector<PointSet> up(n, 0);
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < n; ++i) {
                labels.push_back("p" + std::to_string(i));
                for (auto d : members(down[i])) up[d] |= bit(i);
            }
            f(Poset(std::move(up), std::move(labels)));
            return;
        }
        // strict downsets of j: downsets of the poset on 0..j-1, by brute force over subsets
        for (PointSet s = 0; s < (PointSet{1} << j); ++s) {
            bool closed = true;
            for (auto x : members(s))
                if ((down[x] & ~s) != 0) closed = false;
            if (!closed) continue;
            down[j] = s | bit(j);
            go(j + 1);
        }
    };
    go(0);
}

// One poset per isomorphism class, sizes 1..max_size.
inline std::vector<Poset> enumerate_posets(std::size_t max_size, std::size_t cap = 7) {
    if (max_size > cap) throw BudgetExceeded("poset enumeration beyond cap " + std::to_string(cap), max_size);
    std::vector<Poset> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        std::set<std::string> seen;
        for_each_natural_poset(n, [&](const Poset& p) {
            if (seen.insert(canonical_form(p)).second) out.push_back(p);
        });
    }
    return out;
}

// Random recursive tree: point i > 0 hangs below a uniformly chosen earlier point.
inline Poset random_cotree(std::size_t size, std::uint64_t seed) {
    if (size < 1 || size > kMaxPoints) throw Error("random co-tree size out of range");
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels{"v0"};
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i < size; ++i) {
        labels.push_back("v" + std::to_string(i));
        covers.emplace_back(labels[i], labels[rng() % i]);
    }
    return build_poset(labels, covers);
}

// All order-isomorphisms p -> q (as index maps), in lexicographic order.
inline std::vector<std::vector<std::size_t>> isomorphisms(const Poset& p, const Poset& q, std::size_t limit = SIZE_MAX) {
    std::vector<std::vector<std::size_t>> out;
    if (p.size() != q.size()) return out;
    const std::size_t n = p.size();
    std::vector<std::size_t> f(n);
    PointSet used = 0;
    auto sig = [](const Poset& x, std::size_t i) {
        return std::array<int, 4>{popcount(x.up(i)), popcount(x.down(i)), popcount(x.covers_above(i)),
                                  popcount(x.covers_below(i))};
    };
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (out.size() >= limit) return;
        if (i == n) {
            out.push_back(f);
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (has(used, c) || sig(p, i) != sig(q, c)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = p.leq(i, j) == q.leq(c, f[j]) && p.leq(j, i) == q.leq(f[j], c);
            if (!ok) continue;
            f[i] = c;
            used |= bit(c);
            go(i + 1);
            used &= ~bit(c);
        }
    };
    go(0);
    return out;
}

inline std::vector<std::vector<std::size_t>> automorphisms(const Poset& p) { return isomorphisms(p, p); }

}  // namespace cotree
