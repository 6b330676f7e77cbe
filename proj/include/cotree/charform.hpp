#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "canon.hpp"
#include "formula.hpp"
#include "morphisms.hpp"
#include "validity.hpp"

namespace cotree {

using ElemPair = std::pair<Elem, Elem>;

struct StableDomain {
    std::vector<ElemPair> pairs;
};

inline StableDomain full_domain(const BiHeytingAlgebra& a) {
    StableDomain d;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y) d.pairs.emplace_back(x, y);
    return d;
}

inline Formula elem_var(Elem a) { return var("x" + std::to_string(a)); }

namespace detail {

inline void require_si_godel(const BiHeytingAlgebra& a, const char* what) {
    if (!is_SI(a) || !is_bi_godel(a)) throw Error(std::string(what) + " needs a finite SI bi-Godel algebra");
}

inline Formula op_clause(Op op, Elem r, Elem a, Elem b) {
    return iff(elem_var(r), Formula::binary(op, elem_var(a), elem_var(b)));
}

// !~G -> !(conjunction of x_a <- x_b over a not below b)
inline Formula characteristic(const BiHeytingAlgebra& a, const std::vector<Formula>& clauses) {
    std::vector<Formula> gaps;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (!a.leq(x, y)) gaps.push_back(coimp(elem_var(x), elem_var(y)));
    return imp(neg(coneg(big_conj(clauses))), neg(big_conj(gaps)));
}

}  // namespace detail

inline Formula gamma(const BiHeytingAlgebra& a, const StableDomain& d) {
    detail::require_si_godel(a, "gamma");
    const Elem k = static_cast<Elem>(a.size());
    for (auto [x, y] : d.pairs)
        if (x >= k || y >= k) throw Error("stable domain pair outside the algebra");
    std::vector<Formula> cl;
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) cl.push_back(detail::op_clause(Op::Or, a.join(x, y), x, y));
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) cl.push_back(detail::op_clause(Op::And, a.meet(x, y), x, y));
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) cl.push_back(detail::op_clause(Op::Imp, a.imp(x, y), x, y));
    for (auto [x, y] : d.pairs) cl.push_back(detail::op_clause(Op::Coimp, a.coimp(x, y), x, y));
    cl.push_back(iff(elem_var(a.bot()), bot()));
    cl.push_back(iff(elem_var(a.top()), top()));
    return detail::characteristic(a, cl);
}

inline Formula jankov(const BiHeytingAlgebra& a) { return gamma(a, full_domain(a)); }

inline Formula beta(const BiHeytingAlgebra& a) {
    detail::require_si_godel(a, "beta");
    const Elem k = static_cast<Elem>(a.size());
    std::vector<Formula> cl;
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) cl.push_back(detail::op_clause(Op::Or, a.join(x, y), x, y));
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) cl.push_back(detail::op_clause(Op::Coimp, a.coimp(x, y), x, y));
    return detail::characteristic(a, cl);
}

// First (lexicographic) injective Heyting homomorphism a -> c that also keeps <- on d.
inline std::optional<AlgebraMap> sdc_embedding_search(const BiHeytingAlgebra& a, const StableDomain& d,
                                                      const BiHeytingAlgebra& c,
                                                      std::uint64_t budget = kDefaultNodeBudget) {
    const std::size_t k = a.size(), m = c.size();
    if (k > m) return std::nullopt;
    // each constraint (op, x, y) is checked once its three elements are assigned
    struct Check {
        Op op;
        Elem x, y;
    };
    std::vector<std::vector<Check>> at(k);
    auto add = [&](Op op, Elem x, Elem y, Elem r) { at[std::max({x, y, r})].push_back({op, x, y}); };
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) {
            add(Op::And, x, y, a.meet(x, y));
            add(Op::Or, x, y, a.join(x, y));
            add(Op::Imp, x, y, a.imp(x, y));
        }
    for (auto [x, y] : d.pairs) {
        if (x >= k || y >= k) throw Error("stable domain pair outside the algebra");
        add(Op::Coimp, x, y, a.coimp(x, y));
    }
    std::vector<Elem> h(k, 0);
    std::vector<char> used(m, 0);
    std::uint64_t nodes = 0;
    auto holds = [&](const Check& ch) {
        switch (ch.op) {
            case Op::And: return h[a.meet(ch.x, ch.y)] == c.meet(h[ch.x], h[ch.y]);
            case Op::Or: return h[a.join(ch.x, ch.y)] == c.join(h[ch.x], h[ch.y]);
            case Op::Imp: return h[a.imp(ch.x, ch.y)] == c.imp(h[ch.x], h[ch.y]);
            case Op::Coimp: return h[a.coimp(ch.x, ch.y)] == c.coimp(h[ch.x], h[ch.y]);
            default: return true;
        }
    };
    std::function<bool(Elem)> go = [&](Elem x) -> bool {
        if (x == k) return true;
        for (Elem v = 0; v < m; ++v) {
            if (used[v]) continue;
            if (x == a.bot() && v != c.bot()) continue;
            if (x == a.top() && v != c.top()) continue;
            detail::charge(nodes, budget, "embedding search");
            bool ok = true;
            for (Elem y = 0; y < x && ok; ++y) ok = a.leq(x, y) == c.leq(v, h[y]) && a.leq(y, x) == c.leq(h[y], v);
            if (!ok) continue;
            h[x] = v;
            for (auto& ch : at[x])
                if (!holds(ch)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = 1;
            if (go(x + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return make_map(a, c, h);
}

// Both sides of a refutation lemma, each from its own oracle.
struct RefutationReport {
    bool semantic = false;  // B refutes the formula
    std::optional<Valuation> counter;
    bool structural = false;
    PointSet component = 0;         // dual points of B used by the structural witness
    std::vector<std::size_t> witness;  // embedding or morphism, as an index map
    bool agree() const { return semantic == structural; }
};

inline RefutationReport check_stable_refutation(const BiHeytingAlgebra& b, const BiHeytingAlgebra& a,
                                                const StableDomain& d,
                                                std::uint64_t budget = kDefaultValuationBudget) {
    RefutationReport r;
    auto v = is_valid(b, gamma(a, d), budget);
    r.semantic = !v.valid;
    r.counter = v.counter;
    for (auto& img : hom_images(b)) {
        if (!is_SI(img.quotient.alg)) continue;
        if (auto h = sdc_embedding_search(a, d, img.quotient.alg)) {
            r.structural = true;
            r.component = img.dual_points;
            r.witness.assign(h->map.begin(), h->map.end());
            break;
        }
    }
    return r;
}

inline RefutationReport check_jankov_refutation(const BiHeytingAlgebra& b, const BiHeytingAlgebra& a,
                                                std::uint64_t budget = kDefaultValuationBudget) {
    RefutationReport r;
    auto v = is_valid(b, jankov(a), budget);
    r.semantic = !v.valid;
    r.counter = v.counter;
    auto target = dual_poset(a).poset;
    auto db = dual_poset(b).poset;
    for (auto comp : components(db)) {
        if (auto f = find_surjective_bi_p_morphism(db.restrict(comp), target)) {
            r.structural = true;
            r.component = comp;
            r.witness = f->map;
            break;
        }
    }
    return r;
}

inline RefutationReport check_subframe_refutation(const BiHeytingAlgebra& b, const BiHeytingAlgebra& a,
                                                  std::uint64_t budget = kDefaultValuationBudget) {
    RefutationReport r;
    auto v = is_valid(b, beta(a), budget);
    r.semantic = !v.valid;
    r.counter = v.counter;
    auto db = dual_poset(b).poset;
    if (auto f = find_order_embedding(dual_poset(a).poset, db)) {
        r.structural = true;
        r.component = image(*f, dual_poset(a).poset.all());
        r.witness = f->map;
    }
    return r;
}

struct RefutationPattern {
    Poset dual;  // co-tree whose upset algebra is the pattern
    UpsetAlgebra algebra;
    StableDomain domain;
    Valuation valuation;  // first refuting valuation producing this domain
};

namespace detail {

// Element maps of Up(P) induced by the automorphisms of P.
inline std::vector<std::vector<Elem>> induced_automorphisms(const UpsetAlgebra& u) {
    std::vector<std::vector<Elem>> out;
    for (auto& g : automorphisms(u.frame)) {
        std::vector<Elem> m;
        for (auto s : u.sets) {
            PointSet t = 0;
            for (auto x : members(s)) t |= bit(g[x]);
            m.push_back(u.element_of(t));
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<ElemPair> canonical_domain(const std::vector<ElemPair>& d, const std::vector<std::vector<Elem>>& autos) {
    std::vector<ElemPair> best;
    bool first = true;
    for (auto& g : autos) {
        std::vector<ElemPair> img;
        for (auto [x, y] : d) img.emplace_back(g[x], g[y]);
        std::sort(img.begin(), img.end());
        if (first || img < best) best = img;
        first = false;
    }
    return best;
}

}  // namespace detail

// Patterns from co-tree duals up to size_cap; empty when nothing at this scale refutes phi.
inline std::vector<RefutationPattern> refutation_patterns(const Formula& phi, std::size_t size_cap,
                                                          std::uint64_t budget = kDefaultValuationBudget,
                                                          std::size_t enum_cap = kEnumerationCap) {
    std::vector<RefutationPattern> out;
    const auto names = vars(phi);
    const auto subs = subformulas(phi);
    std::uint64_t spent = 0;
    for (auto& p : enumerate_cotrees(size_cap, enum_cap)) {
        auto u = upset_algebra(p);
        const auto& a = u.alg;
        const std::uint64_t total = saturating_pow(a.size(), names.size());
        if (total > budget || spent + total > budget)
            throw BudgetExceeded("refutation pattern sweep exceeds budget of " + std::to_string(budget), spent + total);
        spent += total;
        auto autos = detail::induced_automorphisms(u);
        std::set<std::vector<ElemPair>> seen;
        Valuation v;
        for (auto& n : names) v[n] = 0;
        for (std::uint64_t step = 0; step < total; ++step) {
            if (eval(a, phi, v) != a.top()) {
                std::vector<char> in_theta(a.size(), 0);
                for (auto& s : subs) in_theta[eval(a, s, v)] = 1;
                StableDomain d;
                for (Elem x = 0; x < a.size(); ++x)
                    for (Elem y = 0; y < a.size(); ++y)
                        if (in_theta[x] && in_theta[y] && in_theta[a.coimp(x, y)]) d.pairs.emplace_back(x, y);
                if (seen.insert(detail::canonical_domain(d.pairs, autos)).second) out.push_back({p, u, d, v});
            }
            // next valuation, last variable fastest
            for (auto it = names.rbegin(); it != names.rend(); ++it) {
                if (++v[*it] < a.size()) break;
                v[*it] = 0;
            }
        }
    }
    return out;
}

inline Formula axiomatize_bounded(const Formula& phi, std::size_t size_cap,
                                  std::uint64_t budget = kDefaultValuationBudget,
                                  std::size_t enum_cap = kEnumerationCap) {
    auto pats = refutation_patterns(phi, size_cap, budget, enum_cap);
    if (pats.empty()) throw Error("no refutation of the formula on co-trees up to size " + std::to_string(size_cap));
    std::vector<Formula> parts;
    for (auto& p : pats) parts.push_back(gamma(p.algebra.alg, p.domain));
    return big_conj(parts);
}

}  // namespace cotree
