#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cotree;

namespace {

BiHeytingAlgebra boolean4() {
    // 0 < a, b < 1
    return BiHeytingAlgebra::from_order(4, {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1}, {"0", "a", "b", "1"});
}

}  // namespace

TEST(UpsetAlgebra, Examples) {
    auto a = upset_algebra(make_chain(2)).alg;
    EXPECT_EQ(a.size(), 3u);
    EXPECT_TRUE(algebras_isomorphic(a, chain_algebra(3)));
    EXPECT_TRUE(algebras_isomorphic(upset_algebra(make_comb(1)).alg, chain_algebra(3)));
    EXPECT_EQ(upset_algebra(make_comb(2)).alg.size(), 7u);
    EXPECT_THROW(upset_algebra(make_antichain(12)), BudgetExceeded);
}

TEST(UpsetAlgebra, ImplicationsAsSets) {
    // U -> V = P \ down(U \ V); U <- V = up(U \ V), with naive closures
    for (auto& p : enumerate_posets(5)) {
        auto u = upset_algebra(p);
        for (Elem x = 0; x < u.alg.size(); ++x)
            for (Elem y = 0; y < u.alg.size(); ++y) {
                PointSet d = u.sets[x] & ~u.sets[y];
                EXPECT_EQ(u.sets[u.alg.imp(x, y)], p.all() & ~oracle::down(p, d));
                EXPECT_EQ(u.sets[u.alg.coimp(x, y)], oracle::up(p, d));
                EXPECT_EQ(u.sets[u.alg.meet(x, y)], u.sets[x] & u.sets[y]);
                EXPECT_EQ(u.sets[u.alg.join(x, y)], u.sets[x] | u.sets[y]);
            }
    }
}

TEST(UpsetAlgebra, Residuation) {
    for (auto& p : enumerate_posets(5)) {
        const auto a = upset_algebra(p).alg;
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y)
                for (Elem c = 0; c < a.size(); ++c) {
                    EXPECT_EQ(a.leq(c, a.imp(x, y)), a.leq(a.meet(x, c), y));
                    EXPECT_EQ(a.leq(a.coimp(x, y), c), a.leq(x, a.join(y, c)));
                }
    }
}

TEST(Tables, ImportChecksConsistency) {
    auto t = chain_algebra(3).tables();
    EXPECT_NO_THROW(BiHeytingAlgebra::from_tables(t));
    auto bad = t;
    bad.imp[0] = 1;
    EXPECT_THROW(BiHeytingAlgebra::from_tables(bad), Error);
    auto pentagon = std::vector<std::uint8_t>(25, 0);
    // 0 < a < b < 1, 0 < c < 1: not distributive
    auto le = [&](int x, int y) { pentagon[x * 5 + y] = 1; };
    for (int i = 0; i < 5; ++i) le(0, i), le(i, 4), le(i, i);
    le(1, 2);
    EXPECT_THROW(BiHeytingAlgebra::from_order(5, pentagon), Error);
    std::vector<std::uint8_t> v(9, 0);
    v[0] = v[4] = v[8] = 1;  // 3-antichain, unbounded
    EXPECT_THROW(BiHeytingAlgebra::from_order(3, v), Error);
}

TEST(Dual, Examples) {
    EXPECT_TRUE(isomorphic(dual_poset(chain_algebra(3)).poset, make_chain(2)));
    auto c2 = upset_algebra(make_comb(2));
    EXPECT_TRUE(isomorphic(dual_poset(c2.alg).poset, make_comb(2)));
    EXPECT_EQ(dual_poset(chain_algebra(2)).poset.size(), 1u);
}

TEST(Dual, RepresentationIsIsomorphism) {
    std::mt19937_64 rng(5);
    for (auto& p : enumerate_posets(5)) {
        auto a = upset_algebra(p).alg;
        auto d = dual_poset(a);
        EXPECT_TRUE(isomorphic(d.poset, p));
        // join-irreducibles found naively: nonzero, not a join of two strictly smaller elements
        std::size_t ji = 0;
        for (Elem x = 0; x < a.size(); ++x) {
            if (x == a.bot()) continue;
            bool split = false;
            for (Elem y = 0; y < a.size(); ++y)
                for (Elem z = 0; z < a.size(); ++z)
                    if (y != x && z != x && a.join(y, z) == x) split = true;
            ji += !split;
        }
        EXPECT_EQ(d.points.size(), ji);
        auto u = upset_algebra(d.poset);
        auto m = make_map(a, u.alg, dual_iso(d, u));
        EXPECT_EQ(m.preserved, kAllOps);
        EXPECT_TRUE(m.injective && m.surjective);
    }
}

TEST(SI, Examples) {
    EXPECT_TRUE(is_SI(chain_algebra(3)));
    EXPECT_FALSE(is_SI(boolean4()));
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(is_SI(upset_algebra(make_comb(n)).alg));
    EXPECT_FALSE(is_SI(chain_algebra(1)));
}

TEST(SI, AgreesWithDualOnCoForests) {
    for (auto& p : enumerate_coforests(7)) {
        auto a = upset_algebra(p).alg;
        EXPECT_EQ(is_SI(a), is_co_tree(p));
        EXPECT_EQ(is_SI(a), si_by_dual(a));
    }
}

TEST(SI, BiGodelMatchesIdentity) {
    for (auto& p : enumerate_posets(5)) {
        auto a = upset_algebra(p).alg;
        EXPECT_EQ(is_bi_godel(a), gd_holds(a));
        EXPECT_EQ(is_bi_godel(a), is_co_forest(p));
    }
}

TEST(Discriminator, OnSIAlgebras) {
    for (auto& p : enumerate_cotrees(4)) {
        auto a = upset_algebra(p).alg;
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y) {
                EXPECT_EQ(plus_term(a, x, y), x == y ? a.top() : a.bot());
                for (Elem z = 0; z < a.size(); ++z) EXPECT_EQ(discriminator_eval(a, x, y, z), x == y ? z : x);
            }
    }
}

TEST(Discriminator, BooleanByComposition) {
    auto a = boolean4();
    // plus(a,b) = neg((a <- b) | (b <- a)) with a <- b = a and b <- a = b: neg(1) = 0
    EXPECT_EQ(a.coimp(1, 2), 1);
    EXPECT_EQ(plus_term(a, 1, 2), a.neg(a.join(a.coimp(1, 2), a.coimp(2, 1))));
    EXPECT_EQ(plus_term(a, 1, 2), a.bot());
    // plus(a,a) = 1 in any algebra
    for (Elem x = 0; x < 4; ++x) EXPECT_EQ(plus_term(a, x, x), a.top());
}

TEST(Subalgebra, Examples) {
    auto c3 = chain_algebra(3);
    EXPECT_EQ(generated_subalgebra(c3, {}, Signature::BiHeyting), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(generated_subalgebra(c3, {1}, Signature::BiHeyting).size(), 3u);
    auto c4 = chain_algebra(4);  // 0 < 1 < 2 < 3
    EXPECT_EQ(generated_subalgebra(c4, {2}, Signature::Heyting), (std::vector<Elem>{0, 2, 3}));
}

TEST(Subalgebra, ClosedAndLeastAgainstNaive) {
    // naive: the intersection of all closed supersets
    auto closed = [](const BiHeytingAlgebra& a, std::uint64_t s, Signature sig) {
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y) {
                if (!((s >> x) & 1U) || !((s >> y) & 1U)) continue;
                std::vector<Elem> r;
                if (sig != Signature::OrCoimp) r = {a.meet(x, y), a.join(x, y), a.imp(x, y)};
                if (sig != Signature::Heyting) r.push_back(a.coimp(x, y));
                if (sig == Signature::OrCoimp) r.push_back(a.join(x, y));
                for (auto e : r)
                    if (!((s >> e) & 1U)) return false;
            }
        return true;
    };
    std::mt19937_64 rng(9);
    for (auto& p : enumerate_coforests(4)) {
        auto a = upset_algebra(p).alg;
        if (a.size() > 12) continue;
        for (auto sig : {Signature::BiHeyting, Signature::Heyting}) {
            for (int t = 0; t < 5; ++t) {
                std::uint64_t gens = rng() & ((std::uint64_t{1} << a.size()) - 1);
                std::vector<Elem> g;
                for (Elem e = 0; e < a.size(); ++e)
                    if ((gens >> e) & 1U) g.push_back(e);
                std::uint64_t best = (std::uint64_t{1} << a.size()) - 1;
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.size()); ++s) {
                    if ((s & gens) != gens || !((s >> a.bot()) & 1U) || !((s >> a.top()) & 1U)) continue;
                    if (closed(a, s, sig) && std::popcount(s) < std::popcount(best)) best = s;
                }
                std::uint64_t got = 0;
                for (auto e : generated_subalgebra(a, g, sig)) got |= std::uint64_t{1} << e;
                EXPECT_EQ(got, best);
            }
        }
    }
}

TEST(GenRank, Examples) {
    EXPECT_EQ(gen_rank(chain_algebra(2)).rank, 0);
    EXPECT_EQ(gen_rank(chain_algebra(3)).rank, 1);
    EXPECT_EQ(gen_rank(upset_algebra(make_comb(3)).alg).rank, 1);
    EXPECT_THROW(gen_rank(upset_algebra(make_antichain(5)).alg, 12), BudgetExceeded);
}

TEST(GenRank, MinimalAgainstSubsetSweep) {
    for (auto& p : enumerate_posets(4)) {
        auto a = upset_algebra(p).alg;
        int want = -1;
        for (int r = 0; want < 0; ++r) {
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.size()); ++s) {
                if (std::popcount(s) != r) continue;
                std::vector<Elem> g;
                for (Elem e = 0; e < a.size(); ++e)
                    if ((s >> e) & 1U) g.push_back(e);
                if (generates(a, g)) {
                    want = r;
                    break;
                }
            }
        }
        auto got = gen_rank(a);
        EXPECT_EQ(got.rank, want);
        EXPECT_TRUE(generates(a, got.generators));
    }
}

TEST(HomImages, Examples) {
    auto si = upset_algebra(make_comb(2)).alg;
    auto imgs = hom_images(si);
    ASSERT_EQ(imgs.size(), 2u);
    EXPECT_EQ(imgs[0].quotient.alg.size(), 1u);
    EXPECT_TRUE(algebras_isomorphic(imgs[1].quotient.alg, si));
    auto prod = product(chain_algebra(3), upset_algebra(make_cofork(2)).alg);
    EXPECT_EQ(hom_images(prod).size(), 4u);
    EXPECT_EQ(hom_images(chain_algebra(1)).size(), 1u);
    for (auto& h : hom_images(prod)) {
        auto m = make_map(prod, h.quotient.alg, h.projection);
        EXPECT_EQ(m.preserved, kAllOps);
        EXPECT_TRUE(m.surjective);
    }
}

TEST(Product, IsComponentwise) {
    auto a = chain_algebra(3), b = boolean4();
    auto p = product(a, b);
    EXPECT_EQ(p.size(), 12u);
    EXPECT_TRUE(isomorphic(dual_poset(p).poset, disjoint_union(make_chain(2), make_antichain(2))));
}

TEST(Subalgebra, SubalgebrasOfSIGodelAreSI) {
    for (auto& p : enumerate_cotrees(5)) {
        auto a = upset_algebra(p).alg;
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = x; y < a.size(); ++y) {
                auto sub = induced_algebra(a, generated_subalgebra(a, {x, y}, Signature::BiHeyting));
                EXPECT_TRUE(is_SI(sub.alg));
                EXPECT_EQ(make_map(sub.alg, a, sub.embed).preserved, kAllOps);
            }
    }
}

TEST(Filtration, ThreeChainExample) {
    auto b = chain_algebra(3);
    auto phi = parse("p | !p");
    auto f = filtration(b, phi, {{"p", 1}});
    EXPECT_EQ(f.sub.alg.size(), 3u);
    EXPECT_NE(eval(f.sub.alg, phi, f.valuation), f.sub.alg.top());
    EXPECT_THROW(filtration(b, parse("p -> p"), {{"p", 1}}), Error);
}

TEST(Filtration, KeepsRefutationAndSI) {
    std::mt19937_64 rng(21);
    int done = 0;
    for (auto& p : enumerate_coforests(5)) {
        auto b = upset_algebra(p).alg;
        for (int t = 0; t < 10; ++t) {
            auto phi = random_formula(rng, {"p", "q"}, 3);
            auto v = is_valid(b, phi);
            if (v.valid) continue;
            auto f = filtration(b, phi, *v.counter);
            EXPECT_NE(eval(f.sub.alg, phi, f.valuation), f.sub.alg.top());
            EXPECT_TRUE(is_bi_godel(f.sub.alg));
            if (is_SI(b)) {
                EXPECT_TRUE(is_SI(f.sub.alg));
            }
            EXPECT_EQ(make_map(f.sub.alg, b, f.sub.embed).preserved & kHeytingOps, kHeytingOps);
            ++done;
        }
    }
    EXPECT_GT(done, 50);
}
