#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"

namespace cotree {

enum class Op : std::uint8_t { Var, Top, Bot, And, Or, Imp, Coimp };

class Formula {
public:
    struct Node {
        Op op;
        std::string name;
        std::shared_ptr<const Node> lhs, rhs;
    };

    Formula() : n_(make(Op::Top, "", nullptr, nullptr)) {}

    static Formula var(std::string name) { return Formula(make(Op::Var, std::move(name), nullptr, nullptr)); }
    static Formula top() { return Formula(make(Op::Top, "", nullptr, nullptr)); }
    static Formula bot() { return Formula(make(Op::Bot, "", nullptr, nullptr)); }
    static Formula binary(Op op, const Formula& a, const Formula& b) { return Formula(make(op, "", a.n_, b.n_)); }

    Op op() const { return n_->op; }
    const std::string& name() const { return n_->name; }
    Formula lhs() const { return Formula(n_->lhs); }
    Formula rhs() const { return Formula(n_->rhs); }
    bool is_binary() const { return n_->lhs != nullptr; }
    const Node* node() const { return n_.get(); }

    bool operator==(const Formula& o) const { return equal(n_.get(), o.n_.get()); }
    bool operator!=(const Formula& o) const { return !(*this == o); }

private:
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static std::shared_ptr<const Node> make(Op op, std::string name, std::shared_ptr<const Node> l,
                                            std::shared_ptr<const Node> r) {
        return std::make_shared<const Node>(Node{op, std::move(name), std::move(l), std::move(r)});
    }
    static bool equal(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a->op != b->op || a->name != b->name) return false;
        if (!a->lhs) return true;
        return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
    }
    std::shared_ptr<const Node> n_;
};

inline Formula var(const std::string& n) { return Formula::var(n); }
inline Formula top() { return Formula::top(); }
inline Formula bot() { return Formula::bot(); }
inline Formula conj(const Formula& a, const Formula& b) { return Formula::binary(Op::And, a, b); }
inline Formula disj(const Formula& a, const Formula& b) { return Formula::binary(Op::Or, a, b); }
inline Formula imp(const Formula& a, const Formula& b) { return Formula::binary(Op::Imp, a, b); }
inline Formula coimp(const Formula& a, const Formula& b) { return Formula::binary(Op::Coimp, a, b); }
inline Formula neg(const Formula& a) { return imp(a, bot()); }
inline Formula coneg(const Formula& a) { return coimp(top(), a); }
inline Formula iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

// Left-nested; empty list is top.
inline Formula big_conj(const std::vector<Formula>& fs) {
    if (fs.empty()) return top();
    Formula out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
    return out;
}

inline bool is_neg(const Formula& f) { return f.op() == Op::Imp && f.rhs().op() == Op::Bot; }
inline bool is_coneg(const Formula& f) { return f.op() == Op::Coimp && f.lhs().op() == Op::Top; }

// Names compare with digit runs taken as numbers, so x2 < x10.
inline bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            auto x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
            x.erase(0, std::min(x.find_first_not_of('0'), x.size() - 1));
            y.erase(0, std::min(y.find_first_not_of('0'), y.size() - 1));
            if (x.size() != y.size()) return x.size() < y.size();
            if (x != y) return x < y;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j) || (i == a.size() && j == b.size() && a < b);
}

struct NaturalLess {
    bool operator()(const std::string& a, const std::string& b) const { return natural_less(a, b); }
};

// Variables in natural order; this is the order of valuation sweeps.
inline std::vector<std::string> vars(const Formula& f) {
    std::set<std::string, NaturalLess> seen;
    std::vector<const Formula::Node*> stack{f.node()};
    while (!stack.empty()) {
        auto n = stack.back();
        stack.pop_back();
        if (n->op == Op::Var) seen.insert(n->name);
        if (n->lhs) {
            stack.push_back(n->lhs.get());
            stack.push_back(n->rhs.get());
        }
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<std::string> vars(const std::vector<Formula>& fs) {
    std::set<std::string, NaturalLess> seen;
    for (auto& f : fs)
        for (auto& v : vars(f)) seen.insert(v);
    return {seen.begin(), seen.end()};
}

// ---- printing ----

namespace detail {

// 0 = implication level, 1 = |, 2 = &, 3 = unary/atom
inline int level(const Formula& f) {
    switch (f.op()) {
        case Op::Var:
        case Op::Top:
        case Op::Bot: return 3;
        case Op::And: return 2;
        case Op::Or: return 1;
        case Op::Imp: return is_neg(f) ? 3 : 0;
        case Op::Coimp: return is_coneg(f) ? 3 : 0;
    }
    return 3;
}

inline void print_to(const Formula& f, std::string& out);

inline void print_wrapped(const Formula& f, bool wrap, std::string& out) {
    if (wrap) out += "(";
    print_to(f, out);
    if (wrap) out += ")";
}

inline void print_to(const Formula& f, std::string& out) {
    switch (f.op()) {
        case Op::Var: out += f.name(); return;
        case Op::Top: out += "1"; return;
        case Op::Bot: out += "0"; return;
        default: break;
    }
    if (is_neg(f)) {
        out += "!";
        print_wrapped(f.lhs(), level(f.lhs()) < 3, out);
        return;
    }
    if (is_coneg(f)) {
        out += "~";
        print_wrapped(f.rhs(), level(f.rhs()) < 3, out);
        return;
    }
    auto l = f.lhs(), r = f.rhs();
    switch (f.op()) {
        case Op::And:
            print_wrapped(l, level(l) < 2, out);
            out += " & ";
            print_wrapped(r, level(r) <= 2, out);
            return;
        case Op::Or:
            print_wrapped(l, level(l) < 1, out);
            out += " | ";
            print_wrapped(r, level(r) <= 1, out);
            return;
        case Op::Imp:
            // right-assoc: only an Imp on the right may go bare
            print_wrapped(l, level(l) == 0, out);
            out += " -> ";
            print_wrapped(r, level(r) == 0 && r.op() != Op::Imp, out);
            return;
        case Op::Coimp:
            print_wrapped(l, level(l) == 0 && l.op() != Op::Coimp, out);
            out += " <- ";
            print_wrapped(r, level(r) == 0, out);
            return;
        default: return;
    }
}

}  // namespace detail

inline std::string print(const Formula& f) {
    std::string out;
    detail::print_to(f, out);
    return out;
}

// ---- parsing ----
//
//   formula := disj ( "->" disj )*      right-assoc
//            | disj ( "<-" disj )*      left-assoc
//            | disj "<->" disj
//   disj    := conj ( "|" conj )*
//   conj    := unary ( "&" unary )*
//   unary   := "!" unary | "~" unary | atom
//   atom    := IDENT | "0" | "1" | "(" formula ")"

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Formula parse() {
        auto f = formula();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return f;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(const char* tok) {
        skip();
        return s_.compare(pos_, std::char_traits<char>::length(tok), tok) == 0;
    }
    bool eat(const char* tok) {
        if (!peek(tok)) return false;
        pos_ += std::char_traits<char>::length(tok);
        return true;
    }

    Formula formula() {
        auto first = disj();
        if (eat("<->")) {
            auto second = disj();
            if (peek("->") || peek("<-")) throw ParseError("'<->' cannot be chained without parentheses", pos_);
            return iff(first, second);
        }
        if (peek("->")) {
            std::vector<Formula> parts{first};
            while (eat("->")) parts.push_back(disj());
            if (peek("<-")) throw ParseError("mixing '->' and '<-' needs parentheses", pos_);
            Formula out = parts.back();
            for (std::size_t i = parts.size() - 1; i-- > 0;) out = imp(parts[i], out);
            if (peek("<->")) throw ParseError("'<->' cannot be chained without parentheses", pos_);
            return out;
        }
        if (peek("<-")) {
            Formula out = first;
            while (!peek("<->") && eat("<-")) out = coimp(out, disj());
            if (peek("<->")) throw ParseError("'<->' cannot be chained without parentheses", pos_);
            if (peek("->")) throw ParseError("mixing '->' and '<-' needs parentheses", pos_);
            return out;
        }
        return first;
    }

    Formula disj() {
        auto out = conj_();
        while (eat("|")) out = cotree::disj(out, conj_());
        return out;
    }

    Formula conj_() {
        auto out = unary();
        while (eat("&")) out = conj(out, unary());
        return out;
    }

    Formula unary() {
        if (eat("!")) return neg(unary());
        if (eat("~")) return coneg(unary());
        return atom();
    }

    Formula atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto f = formula();
            if (!eat(")")) throw ParseError("expected ')'", pos_);
            return f;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                throw ParseError("identifiers cannot start with a digit", pos_ - 1);
            return c == '1' ? top() : bot();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            return var(s_.substr(start, pos_ - start));
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }
};

}  // namespace detail

inline Formula parse(const std::string& text) { return detail::Parser(text).parse(); }

// ---- structure ----

// Distinct subformulas, children before parents.
inline std::vector<Formula> subformulas(const Formula& f) {
    std::vector<Formula> out;
    std::set<std::string> seen;
    std::function<void(const Formula&)> go = [&](const Formula& g) {
        if (g.is_binary()) {
            go(g.lhs());
            go(g.rhs());
        }
        if (seen.insert(print(g)).second) out.push_back(g);
    };
    go(f);
    return out;
}

inline std::size_t formula_size(const Formula& f) {
    return f.is_binary() ? 1 + formula_size(f.lhs()) + formula_size(f.rhs()) : 1;
}

// ---- algebraic evaluation ----

using Valuation = std::map<std::string, Elem>;

inline Elem eval(const BiHeytingAlgebra& a, const Formula& f, const Valuation& v) {
    switch (f.op()) {
        case Op::Var: {
            auto it = v.find(f.name());
            if (it == v.end()) throw Error("unbound variable '" + f.name() + "'");
            if (it->second >= a.size()) throw Error("valuation of '" + f.name() + "' leaves the algebra");
            return it->second;
        }
        case Op::Top: return a.top();
        case Op::Bot: return a.bot();
        case Op::And: return a.meet(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
        case Op::Or: return a.join(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
        case Op::Imp: return a.imp(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
        case Op::Coimp: return a.coimp(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
    }
    return a.bot();
}

// ---- Kripke semantics ----

using Coloring = std::map<std::string, PointSet>;

// Points forcing f, computed clause by clause over points.
inline PointSet truth_set(const Poset& p, const Coloring& c, const Formula& f) {
    switch (f.op()) {
        case Op::Var: {
            auto it = c.find(f.name());
            if (it == c.end()) throw Error("unbound variable '" + f.name() + "'");
            if (!is_upset(p, it->second)) throw Error("color of '" + f.name() + "' is not an upset");
            return it->second;
        }
        case Op::Top: return p.all();
        case Op::Bot: return 0;
        default: break;
    }
    PointSet l = truth_set(p, c, f.lhs()), r = truth_set(p, c, f.rhs());
    PointSet out = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        bool holds = false;
        switch (f.op()) {
            case Op::And: holds = has(l, x) && has(r, x); break;
            case Op::Or: holds = has(l, x) || has(r, x); break;
            case Op::Imp: {
                holds = true;
                for (auto y : members(p.up(x)))
                    if (has(l, y) && !has(r, y)) holds = false;
                break;
            }
            case Op::Coimp: {
                for (auto y : members(p.down(x)))
                    if (has(l, y) && !has(r, y)) holds = true;
                break;
            }
            default: break;
        }
        if (holds) out |= bit(x);
    }
    return out;
}

inline bool kripke_eval(const Poset& p, const Coloring& c, std::size_t x, const Formula& f) {
    if (x >= p.size()) throw Error("point outside the frame");
    return has(truth_set(p, c, f), x);
}

// ---- random formulas ----

// Uniform-ish random formula over the given variables; depth 0 gives an atom or constant.
inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& names, int max_depth) {
    auto pick = [&](std::uint64_t n) { return rng() % n; };
    if (max_depth <= 0 || pick(4) == 0) {
        auto r = pick(names.size() + 2);
        if (r < names.size()) return var(names[r]);
        return r == names.size() ? top() : bot();
    }
    switch (pick(6)) {
        case 0: return neg(random_formula(rng, names, max_depth - 1));
        case 1: return coneg(random_formula(rng, names, max_depth - 1));
        default: break;
    }
    static constexpr Op ops[] = {Op::And, Op::Or, Op::Imp, Op::Coimp};
    Op op = ops[pick(4)];
    auto l = random_formula(rng, names, max_depth - 1);
    return Formula::binary(op, l, random_formula(rng, names, max_depth - 1));
}

}  // namespace cotree
