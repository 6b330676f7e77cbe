#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cotree;

TEST(Parse, Examples) {
    auto p = var("p"), q = var("q"), r = var("r");
    EXPECT_EQ(parse("(p -> q) | (q -> p)"), disj(imp(p, q), imp(q, p)));
    EXPECT_EQ(parse("~!p"), coneg(neg(p)));
    EXPECT_EQ(parse("p <- q <- r"), coimp(coimp(p, q), r));
    EXPECT_EQ(parse("p -> q -> r"), imp(p, imp(q, r)));
    EXPECT_EQ(parse("p & q | r"), disj(conj(p, q), r));
    EXPECT_EQ(parse("p <-> q"), conj(imp(p, q), imp(q, p)));
    EXPECT_EQ(parse("1 <- 0"), coimp(top(), bot()));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        parse("p -> q <- r");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 7u);
    }
    EXPECT_THROW(parse("(p & q"), ParseError);
    EXPECT_THROW(parse("p &"), ParseError);
    EXPECT_THROW(parse("p q"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
}

TEST(Print, RoundTrip) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        auto f = random_formula(rng, {"p", "q", "r"}, 5);
        auto s = print(f);
        EXPECT_EQ(parse(s), f) << s;
        EXPECT_EQ(print(parse(s)), s);
    }
    EXPECT_EQ(print(parse("  (p->q)|( q -> p ) ")), "(p -> q) | (q -> p)");
}

TEST(Syntax, VarsSubformulasSize) {
    auto f = parse("x10 & x2 | x1 -> x2");
    EXPECT_EQ(vars(f), (std::vector<std::string>{"x1", "x2", "x10"}));
    EXPECT_EQ(formula_size(f), 7u);
    auto subs = subformulas(parse("p & !p"));
    EXPECT_EQ(subs.size(), 4u);  // p, 0, !p, p & !p
}

TEST(Eval, Examples) {
    auto c3 = chain_algebra(3);
    EXPECT_EQ(eval(c3, parse("1 <- 1"), {}), c3.bot());
    EXPECT_EQ(eval(c3, parse("p | !p"), {{"p", 1}}), 1);
    EXPECT_THROW(eval(c3, parse("p"), {}), Error);
    for (auto& p : enumerate_coforests(4)) {
        auto a = upset_algebra(p).alg;
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y) EXPECT_EQ(eval(a, parse("(p -> q) | (q -> p)"), {{"p", x}, {"q", y}}), a.top());
    }
}

TEST(Eval, DerivedConnectives) {
    std::mt19937_64 rng(2);
    for (auto& p : enumerate_posets(4)) {
        auto a = upset_algebra(p).alg;
        for (int t = 0; t < 20; ++t) {
            auto f = random_formula(rng, {"p", "q"}, 3);
            Valuation v{{"p", static_cast<Elem>(rng() % a.size())}, {"q", static_cast<Elem>(rng() % a.size())}};
            EXPECT_EQ(eval(a, neg(f), v), a.imp(eval(a, f, v), a.bot()));
            EXPECT_EQ(eval(a, coneg(f), v), a.coimp(a.top(), eval(a, f, v)));
        }
    }
}

TEST(Kripke, CoimplicationClause) {
    auto p = build_poset({"b", "t"}, {{"b", "t"}});
    Coloring c{{"p", bit(p.index("t"))}};
    auto f = parse("p <- 0");
    EXPECT_TRUE(kripke_eval(p, c, p.index("t"), f));
    EXPECT_FALSE(kripke_eval(p, c, p.index("b"), f));
    EXPECT_THROW(truth_set(p, {{"p", bit(p.index("b"))}}, f), Error);
}

TEST(Kripke, EverywhereAndSomewhere) {
    std::mt19937_64 rng(4);
    for (auto& x : enumerate_cotrees(5)) {
        auto ups = all_upsets(x);
        for (int t = 0; t < 20; ++t) {
            auto phi = random_formula(rng, {"p", "q"}, 3);
            Coloring c{{"p", ups[rng() % ups.size()]}, {"q", ups[rng() % ups.size()]}};
            PointSet s = truth_set(x, c, phi);
            PointSet everywhere = truth_set(x, c, neg(coneg(phi)));
            PointSet somewhere = truth_set(x, c, coneg(neg(phi)));
            for (std::size_t pt = 0; pt < x.size(); ++pt) {
                EXPECT_EQ(has(everywhere, pt), s == x.all());
                EXPECT_EQ(has(somewhere, pt), s != 0);
            }
        }
    }
}

TEST(Kripke, AgreesWithAlgebraAndPersists) {
    std::mt19937_64 rng(8);
    auto trees = enumerate_cotrees(6);
    for (int i = 0; i < 500; ++i) {
        const auto& x = trees[rng() % trees.size()];
        auto u = upset_algebra(x);
        auto f = random_formula(rng, {"p", "q", "r"}, 6);
        Valuation v;
        Coloring c;
        for (auto& n : {"p", "q", "r"}) {
            v[n] = static_cast<Elem>(rng() % u.alg.size());
            c[n] = u.sets[v[n]];
        }
        PointSet s = truth_set(x, c, f);
        EXPECT_EQ(s, u.sets[eval(u.alg, f, v)]) << print(f);
        EXPECT_TRUE(oracle::is_up(x, s));
    }
}

TEST(RandomFormula, Deterministic) {
    std::mt19937_64 a(99), b(99);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(random_formula(a, {"p"}, 4), random_formula(b, {"p"}, 4));
}
