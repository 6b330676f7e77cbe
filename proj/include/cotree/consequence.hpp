#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "canon.hpp"
#include "formula.hpp"

namespace cotree {

inline constexpr std::size_t kMaxModelCap = 8;
inline constexpr std::uint64_t kDefaultModelBudget = 50'000'000;

struct CoTreeModel {
    Poset frame;
    Coloring coloring;
};

struct ConsequenceVerdict {
    bool refuted = false;
    std::optional<CoTreeModel> countermodel;
    std::uint64_t models = 0;  // models inspected
    std::size_t cap = 0;
};

namespace detail {

// Calls visit on every coloring of names by upsets of every co-tree up to cap; stops when visit returns true.
inline std::uint64_t for_each_cotree_model(const std::vector<std::string>& names, std::size_t cap,
                                           std::uint64_t budget,
                                           const std::function<bool(const Poset&, const Coloring&)>& visit) {
    std::uint64_t count = 0;
    for (auto& p : enumerate_cotrees(cap, kMaxModelCap)) {
        auto ups = all_upsets(p);
        Coloring c;
        for (auto& n : names) c[n] = ups[0];
        std::vector<std::size_t> idx(names.size(), 0);
        for (;;) {
            if (++count > budget) throw BudgetExceeded("model sweep exceeds budget of " + std::to_string(budget), count);
            if (visit(p, c)) return count;
            bool done = true;
            for (std::size_t i = names.size(); i-- > 0;) {
                if (++idx[i] < ups.size()) {
                    c[names[i]] = ups[idx[i]];
                    done = false;
                    break;
                }
                idx[i] = 0;
                c[names[i]] = ups[0];
            }
            if (done) break;
        }
    }
    return count;
}

inline bool holds_globally(const Poset& p, const Coloring& c, const Formula& f) { return truth_set(p, c, f) == p.all(); }

}  // namespace detail

// Sigma entails phi on every co-tree model up to cap; only a refutation is conclusive.
inline ConsequenceVerdict consequence_bounded(const std::vector<Formula>& sigma, const Formula& phi, std::size_t cap,
                                              std::uint64_t budget = kDefaultModelBudget) {
    if (cap > kMaxModelCap) throw BudgetExceeded("model cap above " + std::to_string(kMaxModelCap), cap);
    auto all = sigma;
    all.push_back(phi);
    ConsequenceVerdict v;
    v.cap = cap;
    v.models = detail::for_each_cotree_model(vars(all), cap, budget, [&](const Poset& p, const Coloring& c) {
        for (auto& s : sigma)
            if (!detail::holds_globally(p, c, s)) return false;
        if (detail::holds_globally(p, c, phi)) return false;
        v.refuted = true;
        v.countermodel = CoTreeModel{p, c};
        return true;
    });
    return v;
}

// ~!~phi: phi fails somewhere in a co-tree model.
inline Formula somewhere_fails(const Formula& phi) { return coneg(neg(coneg(phi))); }

struct InconsistencyReport {
    bool explodes = false;  // Sigma + ~!~phi has no model up to cap
    bool entails = false;   // Sigma entails phi up to cap
    std::optional<CoTreeModel> model_of_extension;
    std::optional<CoTreeModel> countermodel;
    bool agree() const { return explodes == entails; }
};

inline InconsistencyReport inconsistency_lemma_check(const std::vector<Formula>& sigma, const Formula& phi,
                                                     std::size_t cap, std::uint64_t budget = kDefaultModelBudget) {
    if (cap > kMaxModelCap) throw BudgetExceeded("model cap above " + std::to_string(kMaxModelCap), cap);
    const Formula flag = somewhere_fails(phi);
    auto all = sigma;
    all.push_back(phi);
    InconsistencyReport r;
    r.explodes = true;
    r.entails = true;
    detail::for_each_cotree_model(vars(all), cap, budget, [&](const Poset& p, const Coloring& c) {
        for (auto& s : sigma)
            if (!detail::holds_globally(p, c, s)) return false;
        if (r.entails && !detail::holds_globally(p, c, phi)) {
            r.entails = false;
            r.countermodel = CoTreeModel{p, c};
        }
        if (r.explodes && detail::holds_globally(p, c, flag)) {
            r.explodes = false;
            r.model_of_extension = CoTreeModel{p, c};
        }
        return !r.entails && !r.explodes;
    });
    return r;
}

}  // namespace cotree
