#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cotree;

namespace {

Poset poset_f() {
    return build_poset({"a", "b", "c", "m1", "d", "m0", "e", "f"},
                       {{"e", "m0"}, {"f", "m0"}, {"m0", "d"}, {"d", "m1"}, {"m1", "b"}, {"m1", "c"}, {"b", "a"}, {"c", "a"}});
}

PointSet named(const Poset& p, std::initializer_list<const char*> ls) {
    PointSet s = 0;
    for (auto* l : ls) s |= bit(p.index(l));
    return s;
}

// Up, Down and Refined straight from the definition; saturated upsets by brute force.
bool naive_bisim(const Poset& p, const EquivPartition& e) {
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!e.related(x, y)) continue;
            for (std::size_t x2 = 0; x2 < n; ++x2) {
                bool up_ok = !p.leq(x, x2), down_ok = !p.leq(x2, x);
                for (std::size_t y2 = 0; y2 < n; ++y2) {
                    if (p.leq(y, y2) && e.related(x2, y2)) up_ok = true;
                    if (p.leq(y2, y) && e.related(x2, y2)) down_ok = true;
                }
                if (!up_ok || !down_ok) return false;
            }
        }
    std::vector<PointSet> sat;
    for (auto u : oracle::upsets(p))
        if (e.saturate(u) == u) sat.push_back(u);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (e.related(x, y)) continue;
            bool sep = false;
            for (auto u : sat) sep = sep || (oracle::in(u, x) != oracle::in(u, y));
            if (!sep) return false;
        }
    return true;
}

}  // namespace

TEST(Bisim, PosetFExamples) {
    auto f = poset_f();
    auto h = named(f, {"m0", "d", "m1"});
    EXPECT_TRUE(is_isolated_chain(f, h));
    EXPECT_TRUE(is_bi_bisimulation(f, isolated_chain_partition(f, h)));
    auto g = named(f, {"m1", "b", "a"});
    EXPECT_FALSE(is_isolated_chain(f, g));
    EXPECT_FALSE(is_bi_bisimulation(f, isolated_chain_partition(f, g)));
    EXPECT_TRUE(is_isolated_chain(f, named(f, {"b"})));
    EXPECT_THROW(is_isolated_chain(f, named(f, {"b", "c"})), Error);
    EXPECT_THROW(isolated_chain_partition(f, 0), Error);
}

TEST(Bisim, TrivialPartitions) {
    for (auto& p : enumerate_cotrees(6)) {
        EXPECT_TRUE(is_bi_bisimulation(p, EquivPartition::identity(p.size())));
        EXPECT_TRUE(is_bi_bisimulation(p, EquivPartition::total(p.size())));
    }
    EXPECT_THROW(is_bi_bisimulation(make_chain(3), EquivPartition::identity(2)), Error);
}

TEST(Partition, Errors) {
    EXPECT_THROW(EquivPartition(3, {bit(0), bit(1)}), Error);
    EXPECT_THROW(EquivPartition(2, {bit(0) | bit(1), bit(1)}), Error);
    EXPECT_THROW(EquivPartition(2, {0, bit(0) | bit(1)}), Error);
    std::size_t count = 0;
    for_each_partition(5, [&](const std::vector<std::size_t>&) { ++count; });
    EXPECT_EQ(count, 52u);
}

TEST(Bisim, AgainstDefinitionOnAllPartitions) {
    for (auto& p : enumerate_posets(5))
        for_each_partition(p.size(), [&](const std::vector<std::size_t>& rgs) {
            auto e = EquivPartition::from_rgs(rgs);
            EXPECT_EQ(is_bi_bisimulation(p, e), naive_bisim(p, e)) << canonical_form(p);
        });
}

TEST(Bisim, TransitivityLemma) {
    for (auto& p : enumerate_posets(5))
        for_each_partition(p.size(), [&](const std::vector<std::size_t>& rgs) {
            auto e = EquivPartition::from_rgs(rgs);
            if (!is_bi_bisimulation(p, e)) return;
            for (std::size_t x = 0; x < p.size(); ++x)
                for (auto y : members(p.up(x)))
                    for (auto z : members(p.up(y)))
                        if (e.related(x, z)) {
                            EXPECT_TRUE(e.related(x, y));
                        }
        });
}

TEST(Bisim, DualToSubalgebras) {
    // bisimulation iff the saturated upsets are closed under all operations
    // and E is exactly the kernel of those upsets
    for (auto& p : enumerate_posets(5)) {
        auto u = upset_algebra(p);
        const auto& a = u.alg;
        for_each_partition(p.size(), [&](const std::vector<std::size_t>& rgs) {
            auto e = EquivPartition::from_rgs(rgs);
            auto sat = saturated_upsets(p, e);
            std::vector<char> in(a.size(), 0);
            for (auto s : sat) in[u.element_of(s)] = 1;
            bool closed = true;
            for (Elem x = 0; x < a.size(); ++x)
                for (Elem y = 0; y < a.size(); ++y)
                    if (in[x] && in[y])
                        closed = closed && in[a.meet(x, y)] && in[a.join(x, y)] && in[a.imp(x, y)] && in[a.coimp(x, y)];
            bool kernel = true;
            for (std::size_t x = 0; x < p.size(); ++x)
                for (std::size_t y = 0; y < p.size(); ++y) {
                    bool same = true;
                    for (auto s : sat) same = same && has(s, x) == has(s, y);
                    kernel = kernel && same == e.related(x, y);
                }
            EXPECT_EQ(is_bi_bisimulation(p, e), closed && kernel) << canonical_form(p);
        });
    }
}

TEST(Bisim, ClosedSaturatedUpsetsAloneAreNotEnough) {
    auto c = make_chain(3);
    EquivPartition e(3, {named(c, {"c1", "c3"}), named(c, {"c2"})});
    auto sat = saturated_upsets(c, e);
    EXPECT_EQ(sat, (std::vector<PointSet>{0, c.all()}));
    EXPECT_FALSE(is_bi_bisimulation(c, e));
}

TEST(Twin, Examples) {
    auto f = make_cofork(2);
    std::size_t w = f.index("x1"), v = f.index("x2");
    PosetMap iso{{0, v, w}};
    auto e = twin_partition(f, w, v, iso);
    EXPECT_EQ(e.blocks().size(), 2u);
    EXPECT_TRUE(e.related(w, v));
    EXPECT_TRUE(is_bi_bisimulation(f, e));
    EXPECT_THROW(twin_partition(f, w, w, iso), Error);
    EXPECT_THROW(twin_partition(f, w, v, PosetMap{{0, w, v}}), Error);
    EXPECT_THROW(twin_partition(make_chain(3), 0, 1, PosetMap{{0, 1, 2}}), Error);

    auto g = build_poset({"r", "a2", "a1", "b2", "b1"}, {{"a1", "a2"}, {"a2", "r"}, {"b1", "b2"}, {"b2", "r"}});
    std::vector<std::size_t> twisted(5, 0);
    twisted[g.index("a2")] = g.index("b1");
    twisted[g.index("a1")] = g.index("b2");
    EXPECT_THROW(twin_partition(g, g.index("a2"), g.index("b2"), PosetMap{twisted}), Error);
}

TEST(Twin, SweepOverCoForests) {
    std::size_t built = 0;
    for (auto& p : enumerate_coforests(7)) {
        for (std::size_t w = 0; w < p.size(); ++w)
            for (std::size_t v = 0; v < p.size(); ++v) {
                if (w == v || (p.covers_above(w) & p.covers_above(v)) == 0) continue;
                auto dw = p.down(w), dv = p.down(v);
                std::vector<std::size_t> lw, lv;
                for (auto x : members(dw)) lw.push_back(x);
                for (auto x : members(dv)) lv.push_back(x);
                for (auto& g : isomorphisms(p.restrict(dw), p.restrict(dv))) {
                    std::vector<std::size_t> iso(p.size(), 0);
                    for (std::size_t i = 0; i < lw.size(); ++i) iso[lw[i]] = lv[g[i]];
                    if (iso[w] != v) continue;
                    auto e = twin_partition(p, w, v, PosetMap{iso});
                    EXPECT_TRUE(is_bi_bisimulation(p, e)) << canonical_form(p);
                    EXPECT_TRUE(naive_bisim(p, e));
                    ++built;
                }
            }
    }
    EXPECT_GT(built, 100u);
}

TEST(Generates, Examples) {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto cf = comb_coloring(n);
        auto u = upset_algebra(cf.poset);
        EXPECT_TRUE(generates(u.alg, {u.element_of(cf.colors[0])})) << n;
    }
    auto c3 = chain_algebra(3);
    EXPECT_TRUE(generates(c3, {1}));
    EXPECT_FALSE(generates(chain_algebra(4), {}));
}

TEST(CombColoring, Examples) {
    auto one = comb_coloring(1);
    EXPECT_EQ(one.colors[0], named(one.poset, {"x1"}));
    auto two = comb_coloring(2);
    EXPECT_EQ(two.colors[0], named(two.poset, {"x1", "x2'", "x2"}));
    for (std::size_t n = 1; n <= 10; ++n) {
        auto cf = comb_coloring(n);
        EXPECT_TRUE(oracle::is_up(cf.poset, cf.colors[0]));
        EXPECT_FALSE(cf.closure_changed);
    }
}

TEST(ColoringTheorem, Examples) {
    auto r = coloring_theorem_check(comb_coloring(2));
    EXPECT_TRUE(r.generated);
    EXPECT_TRUE(r.all_identify);
    auto empty = coloring_theorem_check(ColoredFrame{make_comb(2), {}, false});
    EXPECT_FALSE(empty.generated);
    EXPECT_FALSE(empty.all_identify);
    ASSERT_TRUE(empty.witness.has_value());
    EXPECT_FALSE(empty.witness->is_identity());
    EXPECT_THROW(coloring_theorem_check(ColoredFrame{make_chain(9), {}, false}), BudgetExceeded);
    EXPECT_THROW(coloring_theorem_check(ColoredFrame{make_chain(2), {bit(0)}, false}), Error);
}

TEST(ColoringTheorem, RandomColorings) {
    std::mt19937_64 rng(44);
    for (auto& p : enumerate_posets(5)) {
        auto ups = oracle::upsets(p);
        for (int t = 0; t < 100; ++t) {
            ColoredFrame cf{p, {}, false};
            for (std::size_t k = rng() % 3; k > 0; --k) cf.colors.push_back(ups[rng() % ups.size()]);
            auto r = coloring_theorem_check(cf);
            EXPECT_TRUE(r.agree()) << canonical_form(p);
        }
    }
}

TEST(DepthBound, Examples) {
    auto r = depth_bound_check(make_chain(5), 2);
    EXPECT_EQ(r.depth, 5);
    EXPECT_EQ(r.gen_rank, gen_rank(chain_algebra(6)).rank);
    EXPECT_EQ(r.bound, (r.gen_rank + 1) * 2);
    EXPECT_TRUE(r.holds());
    EXPECT_THROW(depth_bound_check(make_comb(2), 2), Error);
    EXPECT_THROW(depth_bound_check(make_antichain(2), 2), Error);
    auto single = depth_bound_check(make_chain(1), 1);
    EXPECT_TRUE(single.holds());
}

TEST(DepthBound, SweepOmittingC2) {
    for (auto& x : enumerate_cotrees(7)) {
        if (find_order_embedding(make_comb(2), x)) continue;
        EXPECT_TRUE(depth_bound_check(x, 2).holds()) << canonical_form(x);
    }
}

TEST(KTable, SmallScan) {
    auto t = ktable(2, 1, 6);
    EXPECT_GT(t.scanned, 0u);
    ASSERT_TRUE(t.largest.has_value());
    EXPECT_FALSE(find_order_embedding(make_comb(2), *t.largest).has_value());
    EXPECT_EQ(upset_algebra(*t.largest).alg.size(), t.max_algebra);
}
