#pragma once

#include <string>
#include <vector>

#include "morphisms.hpp"

namespace cotree {

struct CombQuotient {
    PosetMap map;                       // X ->> C_n, comb indices as in make_comb
    std::vector<std::size_t> embedding;  // C_n -> X after moving x_n to the co-root
    std::vector<PointSet> spine, teeth;  // final blocks X_i and X_i'
};

namespace detail {

struct CombBuilder {
    const Poset& x;
    std::vector<std::size_t> e;

    PointSet up(PointSet s) const { return up_closure(x, s); }
    PointSet down(PointSet s) const { return down_closure(x, s); }
    std::size_t spine_pt(std::size_t i) const { return e[2 * (i - 1)]; }
    std::size_t tooth_pt(std::size_t i) const { return e[2 * (i - 1) + 1]; }

    static void require(bool ok, const std::string& what) {
        if (!ok) throw Error("comb quotient: side condition failed: " + what);
    }

    bool convex(PointSet s) const { return (down(s) & up(s)) == s; }

    // the four inductive conditions on blocks 1..m (1-based vectors, slot 0 unused)
    void check_invariants(const std::vector<PointSet>& s, const std::vector<PointSet>& t, std::size_t m,
                          std::size_t n) const {
        const std::string at = " at stage " + std::to_string(m);
        for (std::size_t i = 1; i <= m; ++i) {
            require(convex(s[i]) && has(s[i], spine_pt(i)), "block convex and holds x_i" + at);
            require(is_downset(x, t[i]) && has(t[i], tooth_pt(i)), "tooth block a downset holding x_i'" + at);
            for (std::size_t j = i + 1; j <= n; ++j)
                require((s[i] & up(down(bit(tooth_pt(j))))) == 0, "block avoids later teeth" + at);
        }
        require(down(s[1]) == (s[1] | t[1]) && (s[1] & t[1]) == 0, "base split of the first block" + at);
        for (std::size_t i = 2; i <= m; ++i) {
            PointSet d = down(s[i - 1]);
            require(down(s[i]) == (s[i] | d | t[i]) && (s[i] & d) == 0 && (s[i] & t[i]) == 0 && (d & t[i]) == 0,
                    "downset split" + at);
            require((d & up(t[i])) == 0, "earlier blocks avoid later teeth" + at);
            require(up(s[i]) == (up(s[i - 1]) & up(t[i])), "upset split" + at);
        }
        require(up(t[1]) == (up(s[1]) | t[1]) && (up(s[1]) & t[1]) == 0, "first tooth upset split" + at);
    }
};

}  // namespace detail

// Quotient of a co-tree onto C_n, built stage by stage from singleton witnesses.
inline CombQuotient comb_quotient(const Poset& x, std::size_t n, std::uint64_t budget = kDefaultNodeBudget) {
    if (!is_co_tree(x)) throw Error("comb quotient needs a co-tree");
    const Poset comb = make_comb(n);
    auto emb = find_order_embedding(comb, x, budget);
    if (!emb) throw Error("C_" + std::to_string(n) + " does not embed into the co-tree");
    detail::CombBuilder b{x, emb->map};
    const std::size_t root = *x.greatest();
    b.e[2 * (n - 1)] = root;
    detail::CombBuilder::require(is_order_embedding(comb, x, PosetMap{b.e}), "co-root move keeps the embedding");
    auto teeth_above = [&](std::size_t m) {
        PointSet s = 0;
        for (std::size_t j = m + 1; j <= n; ++j) s |= bit(b.tooth_pt(j));
        return b.up(b.down(s));
    };
    std::vector<PointSet> s(n + 1, 0), t(n + 1, 0);
    {
        PointSet v1 = bit(b.spine_pt(1));
        detail::CombBuilder::require((v1 & (teeth_above(1) | b.down(bit(b.tooth_pt(1))))) == 0, "x_1 outside Y");
        PointSet u1 = b.down(v1) & b.up(v1);
        PointSet u1p = b.down(u1) & ~u1;
        PointSet w1 = b.up(u1p) & u1;
        s[1] = w1;
        t[1] = b.down(w1) & ~w1;
    }
    b.check_invariants(s, t, 1, n);
    for (std::size_t m = 2; m <= n; ++m) {
        const PointSet y = teeth_above(m);
        const PointSet um_p = bit(b.tooth_pt(m));
        const PointSet um = bit(b.spine_pt(m));
        detail::CombBuilder::require((um_p & (y | b.up(b.down(s[m - 1])))) == 0, "tooth witness placement");
        detail::CombBuilder::require((um & (y | b.down(s[m - 1]) | b.down(um_p))) == 0, "spine witness placement");
        const PointSet wm = b.down(um) & b.up(s[m - 1]) & b.up(b.down(um_p));
        const PointSet wm_p = b.down(um_p) & b.down(wm);
        const PointSet dwm = b.down(wm);
        std::vector<PointSet> ws(m + 1, 0), wt(m + 1, 0);
        for (std::size_t i = 1; i < m; ++i) {
            ws[i] = s[i] & dwm;
            wt[i] = t[i] & dwm;
        }
        ws[m] = wm;
        wt[m] = wm_p;
        const PointSet prev = ws[m - 1];
        const PointSet dprev = b.down(prev);
        const PointSet inconvenient = dwm & ~(wm | dprev | wm_p);
        // point classes by definition; the closed forms below must agree
        PointSet one = 0, one_p = 0, zero = 0, two = 0;
        for (auto p : members(inconvenient)) {
            const PointSet dp = x.down(p);
            const bool hits_prev = (dp & dprev) != 0, hits_tooth = (dp & wm_p) != 0;
            if (hits_prev && hits_tooth) two |= bit(p);
            if (hits_prev && !hits_tooth) one |= bit(p);
            if (!hits_prev && hits_tooth) one_p |= bit(p);
        }
        for (auto p : members(inconvenient)) {
            const PointSet dp = x.down(p);
            if ((dp & dprev) == 0 && (dp & wm_p) == 0 && (x.up(p) & (one | one_p)) == 0) zero |= bit(p);
        }
        detail::CombBuilder::require(two == 0, "no 2-points");
        const PointSet z = b.up(prev) & ~(prev | b.up(wm));
        detail::CombBuilder::require(z == one, "1-point lemma");
        detail::CombBuilder::require(one_p == (b.up(wm_p) & ~(wm_p | b.up(wm))), "1'-point lemma");
        PointSet next_s = prev | z;
        PointSet next_t = wt[m - 1] | (b.down(z) & ~(z | dprev));
        PointSet last_t = dwm & ~(wm | b.down(next_s));
        detail::CombBuilder::require(last_t == (wm_p | b.down(one_p) | zero), "tooth block decomposition");
        for (std::size_t i = 1; i + 1 < m; ++i) {
            s[i] = ws[i];
            t[i] = wt[i];
        }
        s[m - 1] = next_s;
        t[m - 1] = next_t;
        s[m] = wm;
        t[m] = last_t;
        b.check_invariants(s, t, m, n);
    }
    CombQuotient out;
    out.embedding = b.e;
    out.map.map.assign(x.size(), x.size());
    for (std::size_t i = 1; i <= n; ++i) {
        for (auto p : members(s[i])) out.map.map[p] = 2 * (i - 1);
        for (auto p : members(t[i])) out.map.map[p] = 2 * (i - 1) + 1;
    }
    PointSet covered = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        detail::CombBuilder::require((covered & (s[i] | t[i])) == 0, "blocks disjoint");
        covered |= s[i] | t[i];
    }
    detail::CombBuilder::require(covered == x.all(), "blocks cover the co-tree");
    detail::CombBuilder::require(is_bi_p_morphism(x, comb, out.map) && is_surjective(comb, out.map),
                                 "result is a surjective bi-p-morphism");
    out.spine.assign(s.begin() + 1, s.end());
    out.teeth.assign(t.begin() + 1, t.end());
    return out;
}

}  // namespace cotree
