#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "formula.hpp"

namespace cotree {

inline constexpr std::uint64_t kDefaultValuationBudget = 20'000'000;

struct Verdict {
    bool valid = true;
    std::optional<Valuation> counter;
    std::uint64_t nodes = 0;  // search nodes visited
};

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
        out *= base;
    }
    return out;
}

namespace detail {

// Depth-first sweep over valuations in lexicographic order (variables in natural order,
// values by element index). A partial valuation is abandoned once interval bounds on the
// formula show every completion is valid, and closed early once they show every completion
// refutes. Subterms are hash-consed; & and | are flattened so their bounds update per level.
class ValiditySearch {
public:
    ValiditySearch(const BiHeytingAlgebra& a, const Formula& f) : a_(a) {
        names_ = vars(f);
        for (std::size_t i = 0; i < names_.size(); ++i) level_of_[names_[i]] = static_cast<int>(i);
        root_ = compile(f);
        const int levels = static_cast<int>(names_.size());
        by_level_.assign(static_cast<std::size_t>(levels), {});
        pending_.assign(static_cast<std::size_t>(levels), {});
        stack_.assign(nodes_.size(), {});
        val_.assign(nodes_.size(), 0);
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            auto& n = nodes_[id];
            if (n.maxlevel >= 0) by_level_[static_cast<std::size_t>(n.maxlevel)].push_back(static_cast<int>(id));
            if (n.op == Op::And || n.op == Op::Or) {
                std::vector<int> seen;
                for (int k : n.kids) {
                    int l = nodes_[static_cast<std::size_t>(k)].maxlevel;
                    if (l >= 0 && l < n.maxlevel && std::find(seen.begin(), seen.end(), l) == seen.end()) {
                        seen.push_back(l);
                        pending_[static_cast<std::size_t>(l)].push_back(static_cast<int>(id));
                    }
                }
            }
        }
        for (std::size_t id = 0; id < nodes_.size(); ++id)
            if (nodes_[id].maxlevel < 0) val_[id] = exact(static_cast<int>(id), -1);
        assignment_.assign(names_.size(), 0);
    }

    Verdict run(std::uint64_t budget) {
        Verdict out;
        if (names_.empty()) {
            out.valid = val_[static_cast<std::size_t>(root_)] == a_.top();
            if (!out.valid) out.counter = Valuation{};
            out.nodes = 1;
            return out;
        }
        budget_ = budget;
        bool refuted = dfs(0);
        out.nodes = visited_;
        out.valid = !refuted;
        if (refuted) {
            Valuation v;
            for (std::size_t i = 0; i < names_.size(); ++i) v[names_[i]] = assignment_[i];
            out.counter = std::move(v);
        }
        return out;
    }

private:
    struct Node {
        Op op;
        int var = -1;
        std::vector<int> kids;
        int maxlevel = -1;
    };

    const BiHeytingAlgebra& a_;
    std::vector<std::string> names_;
    std::map<std::string, int> level_of_;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, int> interned_;
    std::unordered_map<const Formula::Node*, int> by_ptr_;
    int root_ = -1;
    std::vector<std::vector<int>> by_level_;
    std::vector<std::vector<int>> pending_;  // flattened nodes with some kid ground at this level
    std::vector<std::vector<std::pair<int, Elem>>> stack_;
    std::vector<Elem> val_;
    std::vector<Elem> assignment_;
    std::uint64_t visited_ = 0;
    std::uint64_t budget_ = 0;

    int intern(Node n) {
        std::string key = std::to_string(static_cast<int>(n.op)) + ":" + std::to_string(n.var);
        for (int k : n.kids) key += "," + std::to_string(k);
        auto it = interned_.find(key);
        if (it != interned_.end()) return it->second;
        for (int k : n.kids) n.maxlevel = std::max(n.maxlevel, nodes_[static_cast<std::size_t>(k)].maxlevel);
        if (n.op == Op::Var) n.maxlevel = n.var;
        nodes_.push_back(std::move(n));
        int id = static_cast<int>(nodes_.size()) - 1;
        interned_.emplace(key, id);
        return id;
    }

    void flatten(const Formula& f, Op op, std::vector<int>& kids) {
        if (f.op() == op) {
            flatten(f.lhs(), op, kids);
            flatten(f.rhs(), op, kids);
        } else {
            int k = compile(f);
            if (std::find(kids.begin(), kids.end(), k) == kids.end()) kids.push_back(k);
        }
    }

    int compile(const Formula& f) {
        auto it = by_ptr_.find(f.node());
        if (it != by_ptr_.end()) return it->second;
        Node n;
        n.op = f.op();
        switch (f.op()) {
            case Op::Var: n.var = level_of_.at(f.name()); break;
            case Op::Top:
            case Op::Bot: break;
            case Op::And:
            case Op::Or: {
                flatten(f, f.op(), n.kids);
                if (n.kids.size() == 1) {
                    int only = n.kids[0];
                    by_ptr_.emplace(f.node(), only);
                    return only;
                }
                break;
            }
            case Op::Imp:
            case Op::Coimp: n.kids = {compile(f.lhs()), compile(f.rhs())}; break;
        }
        int id = intern(std::move(n));
        by_ptr_.emplace(f.node(), id);
        return id;
    }

    // Value of a node all of whose variables are assigned up to level d.
    Elem exact(int id, int d) {
        const Node& n = nodes_[static_cast<std::size_t>(id)];
        auto kid = [&](std::size_t i) { return val_[static_cast<std::size_t>(n.kids[i])]; };
        switch (n.op) {
            case Op::Var: return assignment_[static_cast<std::size_t>(n.var)];
            case Op::Top: return a_.top();
            case Op::Bot: return a_.bot();
            case Op::Imp: return a_.imp(kid(0), kid(1));
            case Op::Coimp: return a_.coimp(kid(0), kid(1));
            case Op::And:
            case Op::Or: {
                bool is_and = n.op == Op::And;
                Elem acc = is_and ? a_.top() : a_.bot();
                auto& st = stack_[static_cast<std::size_t>(id)];
                int from = -2;
                if (!st.empty()) {
                    acc = st.back().second;
                    from = st.back().first;
                }
                for (std::size_t i = 0; i < n.kids.size(); ++i) {
                    int l = nodes_[static_cast<std::size_t>(n.kids[i])].maxlevel;
                    if (l > from && l <= d) acc = is_and ? a_.meet(acc, kid(i)) : a_.join(acc, kid(i));
                }
                return acc;
            }
        }
        return a_.bot();
    }

    void push_partial(int id, int d) {
        const Node& n = nodes_[static_cast<std::size_t>(id)];
        bool is_and = n.op == Op::And;
        auto& st = stack_[static_cast<std::size_t>(id)];
        Elem acc = st.empty() ? (is_and ? a_.top() : a_.bot()) : st.back().second;
        // an empty stack means only constant kids lie below d
        const int from = st.empty() ? -1 : d;
        for (int k : n.kids) {
            int l = nodes_[static_cast<std::size_t>(k)].maxlevel;
            if (l >= from && l <= d) {
                Elem v = val_[static_cast<std::size_t>(k)];
                acc = is_and ? a_.meet(acc, v) : a_.join(acc, v);
            }
        }
        st.emplace_back(d, acc);
    }

    std::pair<Elem, Elem> bounds(int id, int d) {
        const Node& n = nodes_[static_cast<std::size_t>(id)];
        if (n.maxlevel <= d) return {val_[static_cast<std::size_t>(id)], val_[static_cast<std::size_t>(id)]};
        switch (n.op) {
            case Op::Var: return {a_.bot(), a_.top()};
            case Op::And: {
                auto& st = stack_[static_cast<std::size_t>(id)];
                return {a_.bot(), st.empty() ? a_.top() : st.back().second};
            }
            case Op::Or: {
                auto& st = stack_[static_cast<std::size_t>(id)];
                return {st.empty() ? a_.bot() : st.back().second, a_.top()};
            }
            case Op::Imp: {
                auto x = bounds(n.kids[0], d), y = bounds(n.kids[1], d);
                return {a_.imp(x.second, y.first), a_.imp(x.first, y.second)};
            }
            case Op::Coimp: {
                auto x = bounds(n.kids[0], d), y = bounds(n.kids[1], d);
                return {a_.coimp(x.first, y.second), a_.coimp(x.second, y.first)};
            }
            default: return {a_.bot(), a_.top()};
        }
    }

    void enter(int d) {
        for (int id : by_level_[static_cast<std::size_t>(d)]) val_[static_cast<std::size_t>(id)] = exact(id, d);
        for (int id : pending_[static_cast<std::size_t>(d)]) push_partial(id, d);
    }

    void leave(int d) {
        for (int id : pending_[static_cast<std::size_t>(d)]) stack_[static_cast<std::size_t>(id)].pop_back();
    }

    // true when a countervaluation is found; assignment_ then holds it.
    bool dfs(int d) {
        const auto k = static_cast<Elem>(a_.size());
        const int last = static_cast<int>(names_.size()) - 1;
        for (Elem x = 0; x < k; ++x) {
            if (++visited_ > budget_) {
                throw BudgetExceeded("validity sweep exceeds budget of " + std::to_string(budget_) + " nodes",
                                     saturating_pow(a_.size(), names_.size()));
            }
            assignment_[static_cast<std::size_t>(d)] = x;
            enter(d);
            auto [lo, hi] = bounds(root_, d);
            if (lo == a_.top()) {
                leave(d);
                continue;
            }
            if (hi != a_.top()) {
                for (int rest = d + 1; rest <= last; ++rest) assignment_[static_cast<std::size_t>(rest)] = 0;
                leave(d);
                return true;
            }
            bool found = d < last && dfs(d + 1);
            leave(d);
            if (found) return true;
        }
        return false;
    }
};

}  // namespace detail

inline Verdict is_valid(const BiHeytingAlgebra& a, const Formula& f, std::uint64_t budget = kDefaultValuationBudget) {
    return detail::ValiditySearch(a, f).run(budget);
}

}  // namespace cotree
