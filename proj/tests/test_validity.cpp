#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cotree;

TEST(Valid, Examples) {
    EXPECT_TRUE(is_valid(upset_algebra(make_cofork(2)).alg, parse("(p -> q) | (q -> p)")).valid);
    auto v = is_valid(chain_algebra(3), parse("p | !p"));
    ASSERT_FALSE(v.valid);
    EXPECT_EQ(v.counter->at("p"), 1);
    EXPECT_TRUE(is_valid(chain_algebra(1), parse("p | !p & ~q")).valid);
    auto fork = build_poset({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}});
    EXPECT_FALSE(is_valid(upset_algebra(fork).alg, parse("(p -> q) | (q -> p)")).valid);
    EXPECT_TRUE(is_valid(upset_algebra(make_antichain(2)).alg, parse("(p -> q) | (q -> p)")).valid);
}

TEST(Valid, FirstCountervaluationMatchesSweep) {
    std::mt19937_64 rng(17);
    auto forms = enumerate_posets(4);
    for (int i = 0; i < 3000; ++i) {
        const auto& p = forms[rng() % forms.size()];
        auto a = upset_algebra(p).alg;
        auto f = random_formula(rng, {"p", "q", "r"}, 4);
        auto got = is_valid(a, f);
        auto want = oracle::first_counter(a, f);
        ASSERT_EQ(got.valid, !want.has_value()) << print(f);
        if (want) {
            EXPECT_EQ(*got.counter, *want) << print(f);
        }
    }
}

TEST(Valid, NaturalVariableOrder) {
    // x10 must come after x2
    auto a = chain_algebra(3);
    auto v = is_valid(a, parse("x10 | !x10 | x2"));
    ASSERT_FALSE(v.valid);
    auto want = oracle::first_counter(a, parse("x10 | !x10 | x2"));
    EXPECT_EQ(*v.counter, *want);
    EXPECT_EQ(v.counter->at("x2"), 0);
}

TEST(Valid, BudgetExceeded) {
    auto a = upset_algebra(make_antichain(4)).alg;  // 16 elements
    std::vector<Formula> parts;
    for (int i = 0; i < 10; ++i) parts.push_back(disj(var("p" + std::to_string(i)), neg(var("p" + std::to_string(i)))));
    auto f = imp(big_conj(parts), parse("q | !q"));
    try {
        is_valid(a, f, 1000);
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_GT(e.needed, 1000u);
    }
}

TEST(Consequence, Examples) {
    EXPECT_FALSE(consequence_bounded({parse("p")}, parse("p"), 4).refuted);
    auto lem = consequence_bounded({}, parse("p | !p"), 3);
    ASSERT_TRUE(lem.refuted);
    EXPECT_EQ(lem.countermodel->frame.size(), 2u);
    auto r = consequence_bounded({parse("~!p")}, parse("p"), 3);
    ASSERT_TRUE(r.refuted);
    const auto& m = *r.countermodel;
    EXPECT_EQ(m.frame.size(), 2u);
    EXPECT_EQ(m.coloring.at("p"), bit(*m.frame.greatest()));
    EXPECT_THROW(consequence_bounded({}, parse("p"), 9), BudgetExceeded);
}

TEST(Consequence, CountermodelIsGenuine) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        std::vector<Formula> sigma{random_formula(rng, {"p", "q"}, 2)};
        auto phi = random_formula(rng, {"p", "q"}, 3);
        auto v = consequence_bounded(sigma, phi, 4);
        if (!v.refuted) continue;
        const auto& m = *v.countermodel;
        EXPECT_TRUE(is_co_tree(m.frame));
        EXPECT_EQ(truth_set(m.frame, m.coloring, sigma[0]), m.frame.all());
        EXPECT_NE(truth_set(m.frame, m.coloring, phi), m.frame.all());
    }
}

TEST(Inconsistency, Examples) {
    auto t = inconsistency_lemma_check({}, top(), 4);
    EXPECT_TRUE(t.explodes);
    EXPECT_TRUE(t.entails);
    auto p = inconsistency_lemma_check({}, var("p"), 4);
    EXPECT_FALSE(p.explodes);
    EXPECT_FALSE(p.entails);
    EXPECT_TRUE(p.agree());
}

TEST(Inconsistency, RandomPairsAgainstNaiveModels) {
    // naive side: every colored co-tree up to 4 points, truth sets by clauses
    std::mt19937_64 rng(77);
    auto trees = enumerate_cotrees(4);
    for (int i = 0; i < 60; ++i) {
        std::vector<Formula> sigma;
        for (std::size_t k = rng() % 3; k > 0; --k) sigma.push_back(random_formula(rng, {"p", "q"}, 2));
        auto phi = random_formula(rng, {"p", "q"}, 3);
        bool entails = true;
        for (auto& x : trees) {
            auto ups = oracle::upsets(x);
            for (auto up : ups)
                for (auto uq : ups) {
                    Coloring c{{"p", up}, {"q", uq}};
                    bool model = true;
                    for (auto& s : sigma) model = model && truth_set(x, c, s) == x.all();
                    if (model && truth_set(x, c, phi) != x.all()) entails = false;
                }
        }
        auto r = inconsistency_lemma_check(sigma, phi, 4);
        EXPECT_EQ(r.entails, entails);
        EXPECT_TRUE(r.agree());
    }
}
