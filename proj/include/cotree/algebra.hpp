#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "canon.hpp"
#include "poset.hpp"

namespace cotree {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultAlgebraCap = 1024;

// Finite bi-Heyting algebra stored as explicit k x k tables.
class BiHeytingAlgebra {
public:
    struct Tables {
        std::size_t k = 0;
        std::vector<std::uint8_t> leq;
        std::vector<Elem> meet, join, imp, coimp;
        Elem bot = 0, top = 0;
        std::vector<std::string> names;
    };

    BiHeytingAlgebra() = default;

    // Trusted builder; callers guarantee the tables are consistent.
    static BiHeytingAlgebra unchecked(Tables t) {
        BiHeytingAlgebra a;
        if (t.names.empty())
            for (std::size_t i = 0; i < t.k; ++i) t.names.push_back(std::to_string(i));
        a.t_ = std::move(t);
        return a;
    }

    // Derives meet, join, imp and coimp from the order alone, verifying lattice laws and distributivity.
    static BiHeytingAlgebra from_order(std::size_t k, const std::vector<std::uint8_t>& leq,
                                       std::vector<std::string> names = {}) {
        if (k == 0) throw Error("an algebra needs at least one element");
        if (leq.size() != k * k) throw Error("order matrix has wrong size");
        auto le = [&](std::size_t a, std::size_t b) { return leq[a * k + b] != 0; };
        for (std::size_t a = 0; a < k; ++a) {
            if (!le(a, a)) throw Error("order is not reflexive");
            for (std::size_t b = 0; b < k; ++b) {
                if (a != b && le(a, b) && le(b, a)) throw Error("order is not antisymmetric");
                if (!le(a, b)) continue;
                for (std::size_t c = 0; c < k; ++c)
                    if (le(b, c) && !le(a, c)) throw Error("order is not transitive");
            }
        }
        Tables t;
        t.k = k;
        t.leq = leq;
        t.names = std::move(names);
        if (!t.names.empty() && t.names.size() != k) throw Error("name count does not match size");
        bool found_bot = false, found_top = false;
        for (std::size_t a = 0; a < k; ++a) {
            bool below_all = true, above_all = true;
            for (std::size_t b = 0; b < k; ++b) {
                below_all = below_all && le(a, b);
                above_all = above_all && le(b, a);
            }
            if (below_all) t.bot = static_cast<Elem>(a), found_bot = true;
            if (above_all) t.top = static_cast<Elem>(a), found_top = true;
        }
        if (!found_bot || !found_top) throw Error("order is not bounded");
        t.meet.assign(k * k, 0);
        t.join.assign(k * k, 0);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                std::optional<std::size_t> glb, lub;
                for (std::size_t c = 0; c < k; ++c) {
                    if (le(c, a) && le(c, b) && (!glb || le(*glb, c))) glb = c;
                    if (le(a, c) && le(b, c) && (!lub || le(c, *lub))) lub = c;
                }
                for (std::size_t c = 0; c < k; ++c) {
                    if (le(c, a) && le(c, b) && !le(c, *glb)) throw Error("order is not a lattice (no meet)");
                    if (le(a, c) && le(b, c) && !le(*lub, c)) throw Error("order is not a lattice (no join)");
                }
                t.meet[a * k + b] = static_cast<Elem>(*glb);
                t.join[a * k + b] = static_cast<Elem>(*lub);
            }
        }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t c = 0; c < k; ++c)
                    if (t.meet[a * k + t.join[b * k + c]] != t.join[t.meet[a * k + b] * k + t.meet[a * k + c]])
                        throw Error("lattice is not distributive");
        t.imp.assign(k * k, 0);
        t.coimp.assign(k * k, 0);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                Elem hi = t.bot, lo = t.top;
                for (std::size_t c = 0; c < k; ++c) {
                    if (le(t.meet[a * k + c], b)) hi = t.join[hi * k + c];
                    if (le(a, t.join[b * k + c])) lo = t.meet[lo * k + c];
                }
                t.imp[a * k + b] = hi;
                t.coimp[a * k + b] = lo;
            }
        }
        return unchecked(std::move(t));
    }

    // Imported tables: everything is recomputed from the order and must match what was supplied.
    static BiHeytingAlgebra from_tables(const Tables& supplied) {
        auto a = from_order(supplied.k, supplied.leq, supplied.names);
        auto same = [&](const std::vector<Elem>& given, const std::vector<Elem>& derived, const char* what) {
            if (!given.empty() && given != derived) throw Error(std::string("supplied ") + what + " table is inconsistent with the order");
        };
        same(supplied.meet, a.t_.meet, "meet");
        same(supplied.join, a.t_.join, "join");
        same(supplied.imp, a.t_.imp, "imp");
        same(supplied.coimp, a.t_.coimp, "coimp");
        if (supplied.bot != a.t_.bot || supplied.top != a.t_.top) throw Error("supplied bounds are inconsistent with the order");
        return a;
    }

    std::size_t size() const { return t_.k; }
    bool trivial() const { return t_.bot == t_.top; }
    Elem bot() const { return t_.bot; }
    Elem top() const { return t_.top; }
    bool leq(Elem a, Elem b) const { return t_.leq[a * t_.k + b] != 0; }
    Elem meet(Elem a, Elem b) const { return t_.meet[a * t_.k + b]; }
    Elem join(Elem a, Elem b) const { return t_.join[a * t_.k + b]; }
    Elem imp(Elem a, Elem b) const { return t_.imp[a * t_.k + b]; }
    Elem coimp(Elem a, Elem b) const { return t_.coimp[a * t_.k + b]; }
    Elem neg(Elem a) const { return imp(a, t_.bot); }
    Elem coneg(Elem a) const { return coimp(t_.top, a); }
    const std::string& name(Elem a) const { return t_.names[a]; }
    const Tables& tables() const { return t_; }

    // Full O(k^3) check of lattice, distributivity and both residuation laws.
    void validate() const {
        const std::size_t k = t_.k;
        for (Elem a = 0; a < k; ++a) {
            if (!leq(t_.bot, a) || !leq(a, t_.top)) throw Error("bounds are wrong");
            for (Elem b = 0; b < k; ++b) {
                if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) throw Error("meet/join not commutative");
                if (!leq(meet(a, b), a) || !leq(a, join(a, b))) throw Error("meet/join not bounds");
                if (leq(a, b) != (meet(a, b) == a)) throw Error("order disagrees with meet");
                for (Elem c = 0; c < k; ++c) {
                    if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) throw Error("not distributive");
                    if (leq(c, imp(a, b)) != leq(meet(a, c), b)) throw Error("imp is not a residual");
                    if (leq(coimp(a, b), c) != leq(a, join(b, c))) throw Error("coimp is not a co-residual");
                }
            }
        }
    }

private:
    Tables t_;
};

// Bits of s at positions in mask, packed to the low end.
inline PointSet compress(PointSet s, PointSet mask) {
    PointSet out = 0;
    std::size_t k = 0;
    for (auto i : members(mask)) {
        if (has(s, i)) out |= bit(k);
        ++k;
    }
    return out;
}

inline std::string set_name(const Poset& p, PointSet s) {
    std::string out = "{";
    bool first = true;
    for (auto i : members(s)) {
        if (!first) out += ",";
        out += p.label(i);
        first = false;
    }
    return out + "}";
}

// Up(P) with its carrier; element i is the upset sets[i].
struct UpsetAlgebra {
    Poset frame;
    std::vector<PointSet> sets;
    BiHeytingAlgebra alg;
    std::unordered_map<PointSet, Elem> index;

    Elem element_of(PointSet s) const {
        auto it = index.find(s);
        if (it == index.end()) throw Error("set is not an upset of the frame");
        return it->second;
    }
};

inline UpsetAlgebra upset_algebra(const Poset& p, std::size_t cap = kDefaultAlgebraCap) {
    UpsetAlgebra u;
    u.frame = p;
    u.sets = all_upsets(p, cap);
    const std::size_t k = u.sets.size();
    for (std::size_t i = 0; i < k; ++i) u.index.emplace(u.sets[i], static_cast<Elem>(i));
    BiHeytingAlgebra::Tables t;
    t.k = k;
    t.bot = 0;
    t.top = static_cast<Elem>(k - 1);
    t.leq.assign(k * k, 0);
    t.meet.assign(k * k, 0);
    t.join.assign(k * k, 0);
    t.imp.assign(k * k, 0);
    t.coimp.assign(k * k, 0);
    const PointSet all = p.all();
    for (std::size_t a = 0; a < k; ++a) {
        t.names.push_back(set_name(p, u.sets[a]));
        for (std::size_t b = 0; b < k; ++b) {
            PointSet x = u.sets[a], y = u.sets[b];
            t.leq[a * k + b] = (x & ~y) == 0;
            t.meet[a * k + b] = u.index.at(x & y);
            t.join[a * k + b] = u.index.at(x | y);
            t.imp[a * k + b] = u.index.at(all & ~down_closure(p, x & ~y));
            t.coimp[a * k + b] = u.index.at(up_closure(p, x & ~y));
        }
    }
    u.alg = BiHeytingAlgebra::unchecked(std::move(t));
    return u;
}

// Join-irreducibles j with prime filters ordered by inclusion: j <= i in the dual iff i <= j in A.
struct DualPoset {
    Poset poset;
    std::vector<Elem> points;    // join-irreducible element behind each dual point
    std::vector<PointSet> image;  // a -> {j : j <= a}, an upset of the dual
};

inline DualPoset dual_poset(const BiHeytingAlgebra& a) {
    DualPoset d;
    for (Elem x = 0; x < a.size(); ++x) {
        if (x == a.bot()) continue;
        Elem below = a.bot();
        for (Elem y = 0; y < a.size(); ++y)
            if (y != x && a.leq(y, x)) below = a.join(below, y);
        if (below != x) d.points.push_back(x);
    }
    const std::size_t n = d.points.size();
    if (n > kMaxPoints) throw Error("dual has more than 64 points");
    std::vector<PointSet> up(n, 0);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(a.name(d.points[i]));
        for (std::size_t j = 0; j < n; ++j)
            if (a.leq(d.points[j], d.points[i])) up[i] |= bit(j);
    }
    // names need not be unique in imported algebras
    std::vector<std::string> seen;
    for (auto& l : labels) {
        while (std::find(seen.begin(), seen.end(), l) != seen.end()) l += "'";
        seen.push_back(l);
    }
    d.poset = Poset(std::move(up), std::move(labels));
    d.image.assign(a.size(), 0);
    for (Elem x = 0; x < a.size(); ++x)
        for (std::size_t i = 0; i < n; ++i)
            if (a.leq(d.points[i], x)) d.image[x] |= bit(i);
    return d;
}

// The isomorphism A -> Up(dual(A)) as an element map.
inline std::vector<Elem> dual_iso(const DualPoset& d, const UpsetAlgebra& u) {
    std::vector<Elem> out;
    for (auto s : d.image) out.push_back(u.element_of(s));
    return out;
}

enum Preserves : unsigned { kMeet = 1, kJoin = 2, kImp = 4, kCoimp = 8, kBot = 16, kTop = 32 };
inline constexpr unsigned kAllOps = kMeet | kJoin | kImp | kCoimp | kBot | kTop;
inline constexpr unsigned kHeytingOps = kMeet | kJoin | kImp | kBot | kTop;

struct AlgebraMap {
    std::vector<Elem> map;
    unsigned preserved = 0;
    bool injective = false;
    bool surjective = false;
};

inline AlgebraMap make_map(const BiHeytingAlgebra& src, const BiHeytingAlgebra& dst, std::vector<Elem> f) {
    if (f.size() != src.size()) throw Error("map is not total on the source");
    AlgebraMap m;
    m.preserved = kAllOps;
    for (auto v : f)
        if (v >= dst.size()) throw Error("map leaves the target");
    if (f[src.bot()] != dst.bot()) m.preserved &= ~kBot;
    if (f[src.top()] != dst.top()) m.preserved &= ~kTop;
    for (Elem a = 0; a < src.size(); ++a) {
        for (Elem b = 0; b < src.size(); ++b) {
            if (f[src.meet(a, b)] != dst.meet(f[a], f[b])) m.preserved &= ~kMeet;
            if (f[src.join(a, b)] != dst.join(f[a], f[b])) m.preserved &= ~kJoin;
            if (f[src.imp(a, b)] != dst.imp(f[a], f[b])) m.preserved &= ~kImp;
            if (f[src.coimp(a, b)] != dst.coimp(f[a], f[b])) m.preserved &= ~kCoimp;
        }
    }
    std::vector<char> hit(dst.size(), 0);
    m.injective = true;
    for (auto v : f) {
        if (hit[v]) m.injective = false;
        hit[v] = 1;
    }
    m.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    m.map = std::move(f);
    return m;
}

inline bool is_SI(const BiHeytingAlgebra& a) {
    if (a.trivial()) return false;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (x != a.bot() && y != a.bot() && a.meet(x, y) == a.bot()) return false;
    return true;
}

inline bool si_by_dual(const BiHeytingAlgebra& a) { return is_co_tree(dual_poset(a).poset); }

inline bool is_bi_godel(const BiHeytingAlgebra& a) { return is_co_forest(dual_poset(a).poset); }

// (p -> q) | (q -> p) evaluated at every pair.
inline bool gd_holds(const BiHeytingAlgebra& a) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (a.join(a.imp(x, y), a.imp(y, x)) != a.top()) return false;
    return true;
}

inline bool algebras_isomorphic(const BiHeytingAlgebra& a, const BiHeytingAlgebra& b) {
    return a.size() == b.size() && canonical_form(dual_poset(a).poset) == canonical_form(dual_poset(b).poset);
}

inline Elem plus_term(const BiHeytingAlgebra& a, Elem x, Elem y) {
    return a.neg(a.join(a.coimp(x, y), a.coimp(y, x)));
}

inline Elem discriminator_eval(const BiHeytingAlgebra& a, Elem x, Elem y, Elem z) {
    Elem s = plus_term(a, x, y);
    return a.join(a.meet(s, z), a.meet(a.neg(s), x));
}

enum class Signature { BiHeyting, Heyting, OrCoimp };

namespace detail {

// Closes mem under the signature; entries before start are already closed among themselves.
inline void close_under(const BiHeytingAlgebra& a, Signature sig, std::vector<char>& in, std::vector<Elem>& mem,
                        std::size_t start) {
    auto add = [&](Elem e) {
        if (!in[e]) {
            in[e] = 1;
            mem.push_back(e);
        }
    };
    const bool lattice_ops = sig != Signature::OrCoimp;
    const bool co = sig != Signature::Heyting;
    for (std::size_t t = start; t < mem.size(); ++t) {
        if (mem.size() == a.size()) return;
        for (std::size_t s = 0; s <= t; ++s) {
            Elem x = mem[t], y = mem[s];
            add(a.join(x, y));
            if (co) {
                add(a.coimp(x, y));
                add(a.coimp(y, x));
            }
            if (lattice_ops) {
                add(a.meet(x, y));
                add(a.imp(x, y));
                add(a.imp(y, x));
            }
        }
    }
}

}  // namespace detail

// Least subset containing s (and the bounds, except for the or-coimp signature) closed under the signature.
inline std::vector<Elem> generated_subalgebra(const BiHeytingAlgebra& a, const std::vector<Elem>& s, Signature sig) {
    std::vector<char> in(a.size(), 0);
    std::vector<Elem> mem;
    auto seed = [&](Elem e) {
        if (e >= a.size()) throw Error("generator outside the algebra");
        if (!in[e]) {
            in[e] = 1;
            mem.push_back(e);
        }
    };
    if (sig != Signature::OrCoimp) {
        seed(a.bot());
        seed(a.top());
    }
    for (auto e : s) seed(e);
    detail::close_under(a, sig, in, mem, 0);
    std::sort(mem.begin(), mem.end());
    return mem;
}

inline bool generates(const BiHeytingAlgebra& a, const std::vector<Elem>& s) {
    return generated_subalgebra(a, s, Signature::BiHeyting).size() == a.size();
}

inline constexpr std::size_t kDefaultGenRankCap = 256;

struct GenRank {
    int rank = 0;
    std::vector<Elem> generators;
};

// Smallest generating set; subsets by size, then lexicographically. nullopt if none of size <= max_rank.
inline std::optional<GenRank> gen_rank_bounded(const BiHeytingAlgebra& a, int max_rank,
                                               std::size_t cap = kDefaultGenRankCap) {
    if (a.size() > cap)
        throw BudgetExceeded("gen_rank: algebra of size " + std::to_string(a.size()) + " exceeds cap " + std::to_string(cap), a.size());
    std::vector<Elem> cand;
    for (Elem e = 0; e < a.size(); ++e)
        if (e != a.bot() && e != a.top()) cand.push_back(e);
    std::vector<char> in0(a.size(), 0);
    std::vector<Elem> base;
    for (Elem e : {a.bot(), a.top()}) {
        if (!in0[e]) {
            in0[e] = 1;
            base.push_back(e);
        }
    }
    detail::close_under(a, Signature::BiHeyting, in0, base, 0);
    if (base.size() == a.size()) return GenRank{0, {}};
    std::vector<Elem> chosen;
    // depth-first over combinations of fixed size m, reusing closures of prefixes
    std::function<bool(int, std::size_t, const std::vector<char>&, const std::vector<Elem>&)> go =
        [&](int left, std::size_t from, const std::vector<char>& in, const std::vector<Elem>& mem) -> bool {
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= cand.size(); ++i) {
            Elem e = cand[i];
            if (in[e]) continue;
            auto in2 = in;
            auto mem2 = mem;
            std::size_t start = mem2.size();
            in2[e] = 1;
            mem2.push_back(e);
            detail::close_under(a, Signature::BiHeyting, in2, mem2, start);
            chosen.push_back(e);
            if (left == 1) {
                if (mem2.size() == a.size()) return true;
            } else if (mem2.size() < a.size()) {
                if (go(left - 1, i + 1, in2, mem2)) return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    for (int m = 1; m <= max_rank; ++m) {
        chosen.clear();
        if (go(m, 0, in0, base)) return GenRank{m, chosen};
    }
    return std::nullopt;
}

inline GenRank gen_rank(const BiHeytingAlgebra& a, std::size_t cap = kDefaultGenRankCap) {
    auto r = gen_rank_bounded(a, static_cast<int>(a.size()), cap);
    if (!r) throw Error("gen_rank: algebra is not generated by its own carrier");
    return *r;
}

// Sub-lattice carrier with implications recomputed inside it.
struct InducedAlgebra {
    BiHeytingAlgebra alg;
    std::vector<Elem> embed;  // new index -> old element
};

inline InducedAlgebra induced_algebra(const BiHeytingAlgebra& a, std::vector<Elem> carrier) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    const std::size_t k = carrier.size();
    std::vector<int> pos(a.size(), -1);
    for (std::size_t i = 0; i < k; ++i) pos[carrier[i]] = static_cast<int>(i);
    if (pos[a.bot()] < 0 || pos[a.top()] < 0) throw Error("carrier misses a bound");
    BiHeytingAlgebra::Tables t;
    t.k = k;
    t.bot = static_cast<Elem>(pos[a.bot()]);
    t.top = static_cast<Elem>(pos[a.top()]);
    t.leq.assign(k * k, 0);
    t.meet.assign(k * k, 0);
    t.join.assign(k * k, 0);
    t.imp.assign(k * k, 0);
    t.coimp.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        t.names.push_back(a.name(carrier[i]));
        for (std::size_t j = 0; j < k; ++j) {
            Elem x = carrier[i], y = carrier[j];
            int m = pos[a.meet(x, y)], jn = pos[a.join(x, y)];
            if (m < 0 || jn < 0) throw Error("carrier is not a sublattice");
            t.leq[i * k + j] = a.leq(x, y);
            t.meet[i * k + j] = static_cast<Elem>(m);
            t.join[i * k + j] = static_cast<Elem>(jn);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Elem hi = t.bot, lo = t.top;
            for (std::size_t c = 0; c < k; ++c) {
                if (t.leq[t.meet[i * k + c] * k + j]) hi = t.join[hi * k + c];
                if (t.leq[i * k + t.join[j * k + c]]) lo = t.meet[lo * k + c];
            }
            t.imp[i * k + j] = hi;
            t.coimp[i * k + j] = lo;
        }
    }
    return {BiHeytingAlgebra::unchecked(std::move(t)), std::move(carrier)};
}

inline BiHeytingAlgebra product(const BiHeytingAlgebra& a, const BiHeytingAlgebra& b) {
    const std::size_t ka = a.size(), kb = b.size(), k = ka * kb;
    BiHeytingAlgebra::Tables t;
    t.k = k;
    auto idx = [&](Elem x, Elem y) { return static_cast<Elem>(x * kb + y); };
    t.bot = idx(a.bot(), b.bot());
    t.top = idx(a.top(), b.top());
    t.leq.assign(k * k, 0);
    t.meet.assign(k * k, 0);
    t.join.assign(k * k, 0);
    t.imp.assign(k * k, 0);
    t.coimp.assign(k * k, 0);
    for (Elem x1 = 0; x1 < ka; ++x1)
        for (Elem y1 = 0; y1 < kb; ++y1) {
            Elem p = idx(x1, y1);
            t.names.push_back("(" + a.name(x1) + "," + b.name(y1) + ")");
            for (Elem x2 = 0; x2 < ka; ++x2)
                for (Elem y2 = 0; y2 < kb; ++y2) {
                    Elem q = idx(x2, y2);
                    t.leq[p * k + q] = a.leq(x1, x2) && b.leq(y1, y2);
                    t.meet[p * k + q] = idx(a.meet(x1, x2), b.meet(y1, y2));
                    t.join[p * k + q] = idx(a.join(x1, x2), b.join(y1, y2));
                    t.imp[p * k + q] = idx(a.imp(x1, x2), b.imp(y1, y2));
                    t.coimp[p * k + q] = idx(a.coimp(x1, x2), b.coimp(y1, y2));
                }
        }
    return BiHeytingAlgebra::unchecked(std::move(t));
}

// Algebra of a chain with k elements 0 < 1 < ... < k-1.
inline BiHeytingAlgebra chain_algebra(std::size_t k) {
    std::vector<std::uint8_t> leq(k * k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) leq[a * k + b] = 1;
    return BiHeytingAlgebra::from_order(k, leq);
}

struct HomImage {
    UpsetAlgebra quotient;
    std::vector<Elem> projection;
    PointSet dual_points;  // union of dual components kept
};

// One image per union of components of the dual, in bit order of the chosen components.
inline std::vector<HomImage> hom_images(const BiHeytingAlgebra& a, std::size_t max_components = 16) {
    auto d = dual_poset(a);
    auto comps = components(d.poset);
    if (comps.size() > max_components)
        throw BudgetExceeded("too many dual components for hom_images", std::uint64_t{1} << std::min<std::size_t>(comps.size(), 63));
    std::vector<HomImage> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << comps.size()); ++pick) {
        PointSet keep = 0;
        for (std::size_t c = 0; c < comps.size(); ++c)
            if ((pick >> c) & 1U) keep |= comps[c];
        HomImage h;
        h.dual_points = keep;
        h.quotient = upset_algebra(d.poset.restrict(keep));
        for (Elem x = 0; x < a.size(); ++x) h.projection.push_back(h.quotient.element_of(compress(d.image[x], keep)));
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace cotree
