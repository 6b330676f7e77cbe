#pragma once

#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bisim.hpp"
#include "canon.hpp"
#include "charform.hpp"
#include "comb.hpp"
#include "consequence.hpp"
#include "filtration.hpp"
#include "json_io.hpp"

namespace cotree {

// Unset caps fall back to per-suite defaults sized for the acceptance run.
struct RunConfig {
    std::optional<std::size_t> max_source;  // dual size of the A side
    std::optional<std::size_t> max_target;  // dual size of the B side
    std::optional<std::size_t> max_size;    // enumerated posets / co-trees
    std::optional<std::size_t> max_n;       // comb / chain / fork index
    std::optional<std::size_t> samples;
    std::optional<std::size_t> model_cap;
    std::uint64_t seed = 1;
    std::uint64_t valuation_budget = kDefaultValuationBudget;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::string format = "text";
    bool timing = false;
};

struct VerificationReport {
    std::string suite;
    std::size_t instances = 0;
    Json discrepancies = Json::array();
    double wall_ms = 0;
    bool partial = false;
    std::vector<std::string> notes;
    bool passed() const { return discrepancies.empty() && !partial; }
};

inline Json report_to_json(const VerificationReport& r, bool timing) {
    Json j = tagged("report");
    j["suite"] = r.suite;
    j["instances"] = r.instances;
    j["discrepancies"] = r.discrepancies;
    j["partial"] = r.partial;
    j["notes"] = r.notes;
    if (timing) j["wall_ms"] = r.wall_ms;
    return j;
}

inline std::string report_to_text(const VerificationReport& r, bool timing) {
    std::string s = "suite " + r.suite + ": " + std::to_string(r.instances) + " instances, " +
                    std::to_string(r.discrepancies.size()) + " discrepancies";
    if (r.partial) s += ", PARTIAL";
    if (timing) s += " (" + std::to_string(static_cast<long long>(r.wall_ms)) + " ms)";
    s += "\n";
    for (auto& n : r.notes) s += "  note: " + n + "\n";
    for (auto& d : r.discrepancies) s += "  discrepancy: " + d.dump() + "\n";
    return s;
}

namespace detail {

inline std::size_t pick(const std::optional<std::size_t>& v, std::size_t dflt) { return v ? *v : dflt; }

// Bounded distributive lattices up to max_k elements, one per iso class, elements shuffled by rng.
// Orders are bot + a poset on the middle points + top.
inline std::vector<BiHeytingAlgebra> abstract_algebras(std::size_t max_k, std::mt19937_64& rng) {
    std::vector<BiHeytingAlgebra> out;
    out.push_back(BiHeytingAlgebra::from_order(1, {1}));
    for (std::size_t k = 2; k <= max_k; ++k) {
        std::set<std::string> seen;
        for_each_natural_poset(k - 2, [&](const Poset& mid) {
            std::vector<std::uint8_t> leq(k * k, 0);
            for (std::size_t a = 0; a < k; ++a) {
                leq[0 * k + a] = 1;
                leq[a * k + (k - 1)] = 1;
            }
            for (std::size_t a = 0; a < mid.size(); ++a)
                for (std::size_t b = 0; b < mid.size(); ++b)
                    if (mid.leq(a, b)) leq[(a + 1) * k + (b + 1)] = 1;
            std::vector<PointSet> up(k, 0);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    if (leq[a * k + b]) up[a] |= bit(b);
            if (!seen.insert(canonical_form(Poset(up, std::vector<std::string>(k, "")))).second) return;
            try {
                BiHeytingAlgebra::from_order(k, leq);
            } catch (const Error&) {
                return;  // not a distributive lattice
            }
            std::vector<std::size_t> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::uint8_t> shuffled(k * k, 0);
            std::vector<std::string> names(k);
            for (std::size_t a = 0; a < k; ++a) {
                names[perm[a]] = "e" + std::to_string(a);
                for (std::size_t b = 0; b < k; ++b) shuffled[perm[a] * k + perm[b]] = leq[a * k + b];
            }
            out.push_back(BiHeytingAlgebra::from_order(k, shuffled, names));
        });
    }
    return out;
}

template <class T>
const T& choose(const std::vector<T>& v, std::mt19937_64& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline Json algebra_note(const BiHeytingAlgebra& a) { return poset_to_json(dual_poset(a).poset); }

}  // namespace detail

// ---- suites ----

inline void suite_duality(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max_forest = detail::pick(cfg.max_size, 6);
    const std::size_t max_alg = detail::pick(cfg.max_target, 8);
    for (auto& p : enumerate_coforests(max_forest)) {
        ++r.instances;
        auto u = upset_algebra(p);
        auto d = dual_poset(u.alg);
        auto m = make_map(u.alg, upset_algebra(d.poset).alg, dual_iso(d, upset_algebra(d.poset)));
        if (!isomorphic(d.poset, p) || m.preserved != kAllOps || !m.injective || !m.surjective)
            r.discrepancies.push_back({{"case", "co-forest round trip"}, {"poset", poset_to_json(p)}});
    }
    std::mt19937_64 rng(cfg.seed);
    std::size_t count = 0;
    for (auto& a : detail::abstract_algebras(max_alg, rng)) {
        ++r.instances;
        ++count;
        auto d = dual_poset(a);
        auto u = upset_algebra(d.poset);
        auto m = make_map(a, u.alg, dual_iso(d, u));
        bool back = isomorphic(dual_poset(u.alg).poset, d.poset);
        if (m.preserved != kAllOps || !m.injective || !m.surjective || !back)
            r.discrepancies.push_back({{"case", "algebra round trip"}, {"algebra", algebra_to_json(a)}});
    }
    r.notes.push_back(std::to_string(count) + " distributive lattices up to " + std::to_string(max_alg) + " elements");
}

inline void suite_identities(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max = detail::pick(cfg.max_size, 6);
    for (auto& p : enumerate_posets(max)) {
        ++r.instances;
        auto u = upset_algebra(p);
        const auto& a = u.alg;
        const auto& S = u.sets;
        const std::size_t k = a.size();
        std::vector<std::string> failed;
        auto fail = [&](const char* what) {
            if (std::find(failed.begin(), failed.end(), what) == failed.end()) failed.push_back(what);
        };
        for (Elem x = 0; x < k; ++x) {
            if ((a.neg(x) == a.top()) != (x == a.bot())) fail("(iii)");
            if (a.meet(x, a.neg(x)) != a.bot()) fail("(iv)");
            if ((a.coneg(x) == a.bot()) != (x == a.top())) fail("(vii)");
            if (a.join(x, a.coneg(x)) != a.top()) fail("(viii)");
            // not-co-not U = {x : down(up x) inside U}
            PointSet want = 0;
            for (std::size_t pt = 0; pt < p.size(); ++pt)
                if ((down_closure(p, p.up(pt)) & ~S[x]) == 0) want |= bit(pt);
            if (S[a.neg(a.coneg(x))] != want) fail("neg-coneg");
            for (Elem y = 0; y < k; ++y) {
                // sup/inf computed on sets, not through the tables
                PointSet sup = 0, inf = p.all();
                for (Elem d = 0; d < k; ++d) {
                    if ((S[x] & S[d] & ~S[y]) == 0) sup |= S[d];
                    if ((S[x] & ~(S[d] | S[y])) == 0) inf &= S[d];
                }
                if (S[a.imp(x, y)] != sup) fail("(i)");
                if ((a.imp(x, y) == a.top()) != ((S[x] & ~S[y]) == 0)) fail("(ii)");
                if (S[a.coimp(x, y)] != inf) fail("(v)");
                if ((a.coimp(x, y) == a.bot()) != ((S[x] & ~S[y]) == 0)) fail("(vi)");
            }
        }
        if (!failed.empty()) r.discrepancies.push_back({{"poset", poset_to_json(p)}, {"failed", failed}});
    }
}

inline void suite_si(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max = detail::pick(cfg.max_size, 7);
    for (auto& p : enumerate_coforests(max)) {
        ++r.instances;
        auto a = upset_algebra(p).alg;
        bool si = is_SI(a), tree = is_co_tree(dual_poset(a).poset);
        if (si != tree) r.discrepancies.push_back({{"poset", poset_to_json(p)}, {"is_SI", si}, {"dual_co_tree", tree}});
    }
    // bi-Godel by duals against the Godel-Dummett identity, all posets to 5 points
    for (auto& p : enumerate_posets(std::min<std::size_t>(max, 5))) {
        ++r.instances;
        auto a = upset_algebra(p).alg;
        if (is_bi_godel(a) != gd_holds(a))
            r.discrepancies.push_back({{"case", "bi-Godel"}, {"poset", poset_to_json(p)}});
    }
}

inline void suite_discriminator(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max = detail::pick(cfg.max_size, 5);
    for (auto& p : enumerate_cotrees(max)) {
        auto a = upset_algebra(p).alg;
        if (!is_SI(a)) {
            r.discrepancies.push_back({{"case", "co-tree dual not SI"}, {"poset", poset_to_json(p)}});
            continue;
        }
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y) {
                Elem plus = plus_term(a, x, y);
                if (plus != (x == y ? a.top() : a.bot()))
                    r.discrepancies.push_back({{"case", "plus"}, {"poset", poset_to_json(p)}, {"a", x}, {"b", y}});
                for (Elem z = 0; z < a.size(); ++z) {
                    ++r.instances;
                    if (discriminator_eval(a, x, y, z) != (x == y ? z : x))
                        r.discrepancies.push_back({{"poset", poset_to_json(p)}, {"a", x}, {"b", y}, {"c", z}});
                }
            }
    }
}

namespace detail {

inline std::vector<BiHeytingAlgebra> si_sources(std::size_t max_dual) {
    std::vector<BiHeytingAlgebra> out;
    for (auto& p : enumerate_cotrees(max_dual)) out.push_back(upset_algebra(p).alg);
    return out;
}

inline std::vector<BiHeytingAlgebra> godel_targets(std::size_t max_dual) {
    std::vector<BiHeytingAlgebra> out;
    for (auto& p : enumerate_coforests(max_dual)) out.push_back(upset_algebra(p).alg);
    return out;
}

inline Json refutation_json(const BiHeytingAlgebra& b, const BiHeytingAlgebra& a, const RefutationReport& rep) {
    Json j{{"target_dual", algebra_note(b)}, {"source_dual", algebra_note(a)}, {"semantic", rep.semantic},
           {"structural", rep.structural}};
    if (rep.counter) j["countervaluation"] = valuation_to_json(b, *rep.counter);
    if (rep.structural) j["witness"] = rep.witness;
    return j;
}

}  // namespace detail

inline void suite_jankov(const RunConfig& cfg, VerificationReport& r) {
    const auto sources = detail::si_sources(detail::pick(cfg.max_source, 4));
    const auto targets = detail::godel_targets(detail::pick(cfg.max_target, 5));
    for (auto& a : sources) {
        const auto da = dual_poset(a).poset;
        for (auto& b : targets) {
            ++r.instances;
            auto rep = check_jankov_refutation(b, a, cfg.valuation_budget);
            bool ok = rep.agree();
            if (rep.structural) {
                auto db = dual_poset(b).poset.restrict(rep.component);
                PosetMap f{rep.witness};
                ok = ok && is_bi_p_morphism(db, da, f) && is_surjective(da, f);
            }
            if (!ok) r.discrepancies.push_back(detail::refutation_json(b, a, rep));
        }
    }
}

inline void suite_subframe(const RunConfig& cfg, VerificationReport& r) {
    const auto sources = detail::si_sources(detail::pick(cfg.max_source, 4));
    const auto targets = detail::godel_targets(detail::pick(cfg.max_target, 5));
    for (auto& a : sources) {
        const auto da = dual_poset(a).poset;
        for (auto& b : targets) {
            ++r.instances;
            auto rep = check_subframe_refutation(b, a, cfg.valuation_budget);
            bool ok = rep.agree();
            if (rep.structural) ok = ok && is_order_embedding(da, dual_poset(b).poset, PosetMap{rep.witness});
            if (!ok) r.discrepancies.push_back(detail::refutation_json(b, a, rep));
        }
    }
}

inline void suite_stable(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max_a = detail::pick(cfg.max_source, 5);  // algebra sizes here, not dual sizes
    const std::size_t max_b = detail::pick(cfg.max_target, 7);
    const std::size_t samples = detail::pick(cfg.samples, 50);
    std::vector<BiHeytingAlgebra> as, bs;
    for (auto& p : enumerate_cotrees(std::min<std::size_t>(max_a, 8))) {
        auto a = upset_algebra(p).alg;
        if (a.size() <= max_a) as.push_back(a);
    }
    for (auto& p : enumerate_coforests(std::min<std::size_t>(max_b, 8))) {
        auto b = upset_algebra(p).alg;
        if (b.size() <= max_b) bs.push_back(b);
    }
    if (as.empty() || bs.empty()) throw Error("stable suite: no algebras within the size caps");
    std::mt19937_64 rng(cfg.seed);
    std::size_t refuted = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto& a = detail::choose(as, rng);
        const auto& b = detail::choose(bs, rng);
        StableDomain d;
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y)
                if (rng() & 1U) d.pairs.emplace_back(x, y);
        ++r.instances;
        auto rep = check_stable_refutation(b, a, d, cfg.valuation_budget);
        refuted += rep.semantic;
        if (!rep.agree()) {
            auto j = detail::refutation_json(b, a, rep);
            j["domain"] = domain_to_json(d);
            r.discrepancies.push_back(j);
        }
    }
    r.notes.push_back(std::to_string(refuted) + " of " + std::to_string(samples) + " triples refute the stable formula");
}

inline void suite_depth_width(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max = detail::pick(cfg.max_size, 8);
    const std::size_t max_n = detail::pick(cfg.max_n, 4);
    std::vector<BiHeytingAlgebra> chains, forks;
    for (std::size_t n = 1; n <= max_n; ++n) {
        chains.push_back(upset_algebra(make_chain(n)).alg);
        forks.push_back(upset_algebra(make_cofork(n)).alg);
    }
    std::vector<Formula> bl, bf;
    for (std::size_t i = 0; i < max_n; ++i) {
        bl.push_back(beta(chains[i]));
        bf.push_back(beta(forks[i]));
    }
    for (auto& x : enumerate_cotrees(max)) {
        auto a = upset_algebra(x).alg;
        const int dep = depth(x), wid = width(x);
        for (std::size_t n = 1; n <= max_n; ++n) {
            ++r.instances;
            bool vl = is_valid(a, bl[n - 1], cfg.valuation_budget).valid;
            if (vl != (dep < static_cast<int>(n)))
                r.discrepancies.push_back({{"case", "chain"}, {"n", n}, {"poset", poset_to_json(x)}, {"valid", vl}});
            bool vf = is_valid(a, bf[n - 1], cfg.valuation_budget).valid;
            // the one-point fork is the 2-chain, so it bounds depth rather than width
            bool want = n == 1 ? dep < 2 : wid < static_cast<int>(n);
            if (vf != want)
                r.discrepancies.push_back({{"case", "fork"}, {"n", n}, {"poset", poset_to_json(x)}, {"valid", vf}});
        }
    }
    r.notes.push_back("fork n=1 is the 2-chain; checked against depth < 2 instead of width < 1");
}

inline void suite_combs(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max = detail::pick(cfg.max_size, 8);
    const std::size_t max_n = detail::pick(cfg.max_n, 3);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Poset c = make_comb(n);
        const auto ca = upset_algebra(c).alg;
        const Formula b = beta(ca), j = jankov(ca);
        for (auto& x : enumerate_cotrees(max)) {
            ++r.instances;
            Json issue = Json::array();
            auto emb = find_order_embedding(c, x, cfg.node_budget);
            auto sur = find_surjective_bi_p_morphism(x, c, cfg.node_budget);
            if (emb.has_value() != sur.has_value()) issue.push_back("embedding and surjection disagree");
            if (emb) {
                try {
                    auto q = comb_quotient(x, n, cfg.node_budget);
                    if (!is_bi_p_morphism(x, c, q.map) || !is_surjective(c, q.map)) issue.push_back("quotient is not a surjective bi-p-morphism");
                } catch (const BudgetExceeded&) {
                    throw;
                } catch (const Error& e) {
                    issue.push_back(std::string("comb quotient failed: ") + e.what());
                }
            }
            auto a = upset_algebra(x).alg;
            bool rb = !is_valid(a, b, cfg.valuation_budget).valid;
            bool rj = !is_valid(a, j, cfg.valuation_budget).valid;
            if (rb != rj) issue.push_back("subframe and Jankov refutations differ");
            if (rb != emb.has_value()) issue.push_back("subframe refutation differs from embedding");
            if (!issue.empty()) r.discrepancies.push_back({{"n", n}, {"poset", poset_to_json(x)}, {"issues", issue}});
        }
    }
}

inline void suite_hodkinson(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max_n = detail::pick(cfg.max_n, 2);
    std::vector<Poset> ts;
    for (std::size_t n = 0; n <= max_n; ++n) ts.push_back(make_hodkinson(n));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (i == j) continue;
            ++r.instances;
            std::uint64_t nodes = 0;
            try {
                auto f = find_surjective_bi_p_morphism(ts[i], ts[j], cfg.node_budget, &nodes);
                if (f)
                    r.discrepancies.push_back({{"from", "T" + std::to_string(i)}, {"to", "T" + std::to_string(j)},
                                               {"map", map_to_json(ts[i], ts[j], *f)}});
            } catch (const BudgetExceeded& e) {
                r.partial = true;
                r.notes.push_back("T" + std::to_string(i) + " -> T" + std::to_string(j) + ": " + e.what());
            }
        }
    }
}

inline void suite_one_generated(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max_n = detail::pick(cfg.max_n, 5);
    const std::size_t max_coloring = std::min<std::size_t>(max_n, 3);
    for (std::size_t n = 1; n <= max_n; ++n) {
        ++r.instances;
        auto cf = comb_coloring(n);
        auto u = upset_algebra(cf.poset);
        bool gen = generates(u.alg, {u.element_of(cf.colors[0])});
        if (!gen) r.discrepancies.push_back({{"n", n}, {"case", "coloring does not generate"}});
        if (cf.closure_changed) r.notes.push_back("n=" + std::to_string(n) + ": up-closure changed the coloring");
        if (n <= max_coloring) {
            ++r.instances;
            auto rep = coloring_theorem_check(cf);
            if (!rep.agree() || !rep.generated) {
                Json d{{"n", n}, {"generated", rep.generated}, {"all_identify", rep.all_identify}};
                if (rep.witness) d["witness"] = partition_to_json(cf.poset, *rep.witness);
                r.discrepancies.push_back(d);
            }
        }
    }
}

inline void suite_depth_bound(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t max = detail::pick(cfg.max_size, 8);
    const std::size_t n = detail::pick(cfg.max_n, 2);
    const Poset c = make_comb(n);
    std::size_t skipped = 0;
    for (auto& x : enumerate_cotrees(max)) {
        if (find_order_embedding(c, x, cfg.node_budget)) {
            ++skipped;
            continue;
        }
        ++r.instances;
        auto rep = depth_bound_check(x, n);
        if (!rep.holds())
            r.discrepancies.push_back({{"poset", poset_to_json(x)}, {"gen_rank", rep.gen_rank}, {"depth", rep.depth},
                                       {"max_min_upset", rep.max_min_upset}});
    }
    r.notes.push_back(std::to_string(skipped) + " co-trees contain C_" + std::to_string(n) + " and were skipped");
}

inline void suite_inconsistency(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t samples = detail::pick(cfg.samples, 200);
    const std::size_t cap = detail::pick(cfg.model_cap, 5);
    std::mt19937_64 rng(cfg.seed);
    const std::vector<std::string> names{"p", "q"};
    std::size_t entailed = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Formula> sigma;
        const std::size_t k = rng() % 3;
        for (std::size_t i = 0; i < k; ++i) sigma.push_back(random_formula(rng, names, 2));
        Formula phi = random_formula(rng, names, 3);
        ++r.instances;
        auto rep = inconsistency_lemma_check(sigma, phi, cap);
        entailed += rep.entails;
        if (!rep.agree()) {
            Json sj = Json::array();
            for (auto& f : sigma) sj.push_back(print(f));
            r.discrepancies.push_back({{"sigma", sj}, {"phi", print(phi)}, {"explodes", rep.explodes}, {"entails", rep.entails}});
        }
    }
    r.notes.push_back(std::to_string(entailed) + " of " + std::to_string(samples) + " pairs entail; models are co-trees up to " +
                      std::to_string(cap) + " points");
}

inline void suite_filtration(const RunConfig& cfg, VerificationReport& r) {
    const std::size_t samples = detail::pick(cfg.samples, 100);
    const std::size_t max_elems = detail::pick(cfg.max_target, 8);
    std::vector<BiHeytingAlgebra> bs;
    for (auto& p : enumerate_coforests(7)) {
        auto b = upset_algebra(p).alg;
        if (b.size() <= max_elems && b.size() >= 3) bs.push_back(b);
    }
    if (bs.empty()) throw Error("filtration suite: no algebras within the size cap");
    std::mt19937_64 rng(cfg.seed);
    const std::vector<std::string> names{"p", "q", "r"};
    std::size_t found = 0, tries = 0;
    while (found < samples) {
        if (++tries > samples * 1000) {
            r.partial = true;
            r.notes.push_back("could not find enough refuted instances");
            break;
        }
        const auto& b = detail::choose(bs, rng);
        Formula phi = random_formula(rng, names, 4);
        auto v = is_valid(b, phi, cfg.valuation_budget);
        if (v.valid) continue;
        ++found;
        ++r.instances;
        auto f = filtration(b, phi, *v.counter);
        const auto& s = f.sub.alg;
        Json issue = Json::array();
        if (eval(s, phi, f.valuation) == s.top()) issue.push_back("no longer refutes");
        if (!is_bi_godel(s)) issue.push_back("not bi-Godel");
        if (is_SI(b) && !is_SI(s)) issue.push_back("lost SI");
        std::vector<int> pos(b.size(), -1);
        for (std::size_t i = 0; i < f.sub.embed.size(); ++i) pos[f.sub.embed[i]] = static_cast<int>(i);
        for (auto x : f.theta)
            for (auto y : f.theta) {
                Elem c = b.coimp(x, y);
                if (std::find(f.theta.begin(), f.theta.end(), c) == f.theta.end()) continue;
                auto sx = static_cast<Elem>(pos[x]), sy = static_cast<Elem>(pos[y]);
                if (f.sub.embed[s.coimp(sx, sy)] != c) issue.push_back("coimp differs on the filtered domain");
            }
        if (!issue.empty())
            r.discrepancies.push_back({{"formula", print(phi)}, {"algebra_dual", detail::algebra_note(b)}, {"issues", issue}});
    }
}

inline const std::vector<std::pair<std::string, std::function<void(const RunConfig&, VerificationReport&)>>>& suites() {
    static const std::vector<std::pair<std::string, std::function<void(const RunConfig&, VerificationReport&)>>> all{
        {"duality", suite_duality},
        {"identities", suite_identities},
        {"si", suite_si},
        {"discriminator", suite_discriminator},
        {"jankov", suite_jankov},
        {"subframe", suite_subframe},
        {"stable", suite_stable},
        {"depth-width", suite_depth_width},
        {"combs", suite_combs},
        {"hodkinson", suite_hodkinson},
        {"one-generated", suite_one_generated},
        {"depth-bound", suite_depth_bound},
        {"inconsistency", suite_inconsistency},
        {"filtration", suite_filtration},
    };
    return all;
}

inline bool suite_exists(const std::string& name) {
    for (auto& [n, _] : suites())
        if (n == name) return true;
    return false;
}

// Budget overruns end the suite early with partial set.
inline VerificationReport verify_suite(const std::string& name, const RunConfig& cfg) {
    for (auto& [n, run] : suites()) {
        if (n != name) continue;
        VerificationReport r;
        r.suite = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            run(cfg, r);
        } catch (const BudgetExceeded& e) {
            r.partial = true;
            r.notes.push_back(std::string("budget exceeded: ") + e.what());
        }
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw Error("unknown suite " + name);
}

}  // namespace cotree
