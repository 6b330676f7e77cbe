#pragma once

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verify.hpp"

namespace cotree {

inline constexpr const char* kGrammarHelp = R"grammar(Formula grammar (loosest first):
  formula := disj ("->" disj)*     right-assoc implication
           | disj ("<-" disj)*     left-assoc co-implication
           | disj "<->" disj       sugar for (a->b)&(b->a)
  disj    := conj ("|" conj)*
  conj    := unary ("&" unary)*
  unary   := "!" unary | "~" unary | atom     ! is a->0, ~ is 1<-a
  atom    := IDENT | "0" | "1" | "(" formula ")"
Mixing -> and <- without parentheses is a syntax error.)grammar";

// Exit codes: 0 success / property holds, 1 refutation or discrepancy, 2 usage, input or budget error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct Outcome {
    Json json;
    std::string text;
    int code = kExitOk;
};

inline std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json_arg(const std::string& s, const char* what) {
    try {
        return Json::parse(s);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("malformed ") + what + ": " + e.what());
    }
}

inline std::string set_text(const Poset& p, PointSet s) {
    std::string out = "{";
    bool first = true;
    for (auto x : members(s)) {
        if (!first) out += ",";
        out += p.label(x);
        first = false;
    }
    return out + "}";
}

inline Poset load_poset(const std::string& path) { return poset_from_json(read_json_file(path)); }
inline BiHeytingAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

inline Poset make_named(const std::string& kind, std::size_t n) {
    if (kind == "chain") return make_chain(n);
    if (kind == "antichain") return make_antichain(n);
    if (kind == "cofork") return make_cofork(n);
    if (kind == "comb") return make_comb(n);
    if (kind == "hodkinson") return make_hodkinson(n);
    throw Error("unknown poset family " + kind + " (chain, antichain, cofork, comb, hodkinson)");
}

inline std::string valuation_text(const BiHeytingAlgebra& a, const Valuation& v) {
    std::string s;
    std::vector<std::string> names;
    for (auto& [k, _] : v) names.push_back(k);
    std::sort(names.begin(), names.end(), NaturalLess{});
    for (auto& n : names) s += "  " + n + " = " + a.name(v.at(n)) + "\n";
    return s;
}

inline Outcome refutation_outcome(const char* kind, const BiHeytingAlgebra& b, const RefutationReport& r) {
    Outcome o;
    o.json = tagged("refutation-report");
    o.json["formula"] = kind;
    o.json["semantic"] = r.semantic;
    o.json["structural"] = r.structural;
    o.json["agree"] = r.agree();
    if (r.counter) o.json["countervaluation"] = valuation_to_json(b, *r.counter);
    if (r.structural) {
        o.json["component"] = r.component;
        o.json["witness"] = r.witness;
    }
    o.text = std::string(kind) + ": refuted=" + (r.semantic ? "yes" : "no") + ", structural=" + (r.structural ? "yes" : "no") +
             (r.agree() ? ", equivalence holds\n" : ", DISCREPANCY\n");
    if (r.counter) o.text += "countervaluation:\n" + valuation_text(b, *r.counter);
    o.code = r.agree() ? kExitOk : kExitRefuted;
    return o;
}

}  // namespace detail

// args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cotree-lab: finite co-trees, bi-Heyting algebras and characteristic formulas"};
    app.footer(kGrammarHelp);
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", timing, "include wall time in reports");

    detail::Outcome result;
    std::function<detail::Outcome()> action;
    auto group = [&](const char* name, const char* desc) {
        auto* g = app.add_subcommand(name, desc);
        g->footer(std::string(name) == "formula" ? kGrammarHelp : "");
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [&](CLI::App* g, const char* name, const char* desc, std::function<detail::Outcome()> f) {
        auto* s = g->add_subcommand(name, desc);
        s->fallthrough();
        s->callback([&action, f] { action = f; });
        return s;
    };

    // shared argument slots
    std::string file, file2, text, kind, json_arg;
    std::vector<std::string> files;
    std::size_t n = 0, m = 0, cap = 0;
    std::uint64_t budget = kDefaultValuationBudget, node_budget = kDefaultNodeBudget;
    bool flag = false;

    // ---- poset ----
    auto* poset = group("poset", "poset files, DOT export, families, enumeration");
    leaf(poset, "show", "summary of a poset", [&] {
             auto p = detail::load_poset(file);
             detail::Outcome o;
             o.json = tagged("poset-summary");
             o.json["size"] = p.size();
             o.json["depth"] = depth(p);
             o.json["width"] = width(p);
             o.json["co_forest"] = is_co_forest(p);
             o.json["co_tree"] = is_co_tree(p);
             o.json["minimal"] = set_to_json(p, p.minimal());
             o.json["maximal"] = set_to_json(p, p.maximal());
             o.json["canonical"] = canonical_form(p);
             o.text = "points " + std::to_string(p.size()) + ", depth " + std::to_string(depth(p)) + ", width " +
                      std::to_string(width(p)) + "\nco-forest " + (is_co_forest(p) ? "yes" : "no") + ", co-tree " +
                      (is_co_tree(p) ? "yes" : "no") + "\nminimal " + detail::set_text(p, p.minimal()) + "\nmaximal " +
                      detail::set_text(p, p.maximal()) + "\n";
             return o;
         })->add_option("file", file, "poset JSON")->required();
    leaf(poset, "dot", "DOT rendering", [&] {
             auto p = detail::load_poset(file);
             detail::Outcome o;
             o.json = tagged("dot");
             o.json["dot"] = to_dot(p);
             o.text = to_dot(p);
             return o;
         })->add_option("file", file, "poset JSON")->required();
    leaf(poset, "from-dot", "read a DOT digraph of covers", [&] {
             std::ifstream in(file);
             if (!in) throw Error("cannot open " + file);
             std::stringstream ss;
             ss << in.rdbuf();
             detail::Outcome o;
             o.json = poset_to_json(from_dot(ss.str()));
             o.text = detail::pretty(o.json);
             return o;
         })->add_option("file", file, "DOT file")->required();
    leaf(poset, "upsets", "all upsets, in algebra order", [&] {
             auto p = detail::load_poset(file);
             detail::Outcome o;
             o.json = tagged("upsets");
             Json list = Json::array();
             for (auto u : all_upsets(p)) {
                 list.push_back(set_to_json(p, u));
                 o.text += detail::set_text(p, u) + "\n";
             }
             o.json["upsets"] = list;
             return o;
         })->add_option("file", file, "poset JSON")->required();
    {
        auto* s = leaf(poset, "make", "built-in family: chain, antichain, cofork, comb, hodkinson", [&] {
            detail::Outcome o;
            o.json = poset_to_json(detail::make_named(kind, n));
            o.text = detail::pretty(o.json);
            return o;
        });
        s->add_option("family", kind)->required();
        s->add_option("n", n)->required();
    }
    {
        auto* s = leaf(poset, "enumerate", "count (and list) co-trees, co-forests or posets up to a size", [&] {
            std::vector<Poset> ps = kind == "cotrees"    ? enumerate_cotrees(n)
                                    : kind == "coforests" ? enumerate_coforests(n)
                                    : kind == "posets"    ? enumerate_posets(n)
                                                          : throw Error("enumerate cotrees, coforests or posets");
            detail::Outcome o;
            o.json = tagged("enumeration");
            std::vector<std::size_t> counts(n + 1, 0);
            Json list = Json::array();
            for (auto& p : ps) {
                ++counts[p.size()];
                if (flag) list.push_back(poset_to_json(p));
            }
            counts.erase(counts.begin());
            o.json["counts"] = counts;
            if (flag) o.json["posets"] = list;
            o.text = kind + " by size:";
            for (auto c : counts) o.text += " " + std::to_string(c);
            o.text += "\n";
            if (flag)
                for (auto& p : ps) o.text += canonical_form(p) + "\n";
            return o;
        });
        s->add_option("kind", kind, "cotrees | coforests | posets")->required();
        s->add_option("--max", n, "largest size")->required();
        s->add_flag("--list", flag, "list the posets too");
    }

    // ---- algebra ----
    auto* algebra = group("algebra", "finite bi-Heyting algebras");
    leaf(algebra, "from-poset", "upset algebra of a poset", [&] {
             detail::Outcome o;
             o.json = algebra_to_json(upset_algebra(detail::load_poset(file)).alg);
             o.text = detail::pretty(o.json);
             return o;
         })->add_option("file", file, "poset JSON")->required();
    leaf(algebra, "dual", "dual poset of join-irreducibles and the representation map", [&] {
             auto a = detail::load_algebra(file);
             auto d = dual_poset(a);
             auto u = upset_algebra(d.poset);
             auto iso = make_map(a, u.alg, dual_iso(d, u));
             detail::Outcome o;
             o.json = tagged("dual");
             o.json["poset"] = poset_to_json(d.poset);
             Json img = Json::object();
             for (Elem e = 0; e < a.size(); ++e) img[a.name(e)] = set_to_json(d.poset, d.image[e]);
             o.json["image"] = img;
             o.json["isomorphism"] = iso.preserved == kAllOps && iso.injective && iso.surjective;
             o.text = detail::pretty(o.json["poset"]);
             for (Elem e = 0; e < a.size(); ++e) o.text += a.name(e) + " -> " + detail::set_text(d.poset, d.image[e]) + "\n";
             if (!o.json["isomorphism"].get<bool>()) {
                 o.text += "representation map is NOT an isomorphism\n";
                 o.code = kExitRefuted;
             }
             return o;
         })->add_option("file", file, "algebra or poset JSON")->required();
    leaf(algebra, "si-check", "subdirect irreducibility by both characterizations", [&] {
             auto a = detail::load_algebra(file);
             bool si = is_SI(a), tree = si_by_dual(a), bg = is_bi_godel(a), gd = gd_holds(a);
             detail::Outcome o;
             o.json = tagged("si-check");
             o.json["is_SI"] = si;
             o.json["dual_co_tree"] = tree;
             o.json["bi_godel"] = bg;
             o.json["godel_dummett"] = gd;
             o.text = std::string("SI (0 meet-irreducible): ") + (si ? "yes" : "no") + "\ndual is a co-tree: " + (tree ? "yes" : "no") +
                      "\nbi-Godel (dual co-forest): " + (bg ? "yes" : "no") + "\n(p->q)|(q->p) valid: " + (gd ? "yes" : "no") + "\n";
             if (bg != gd || (bg && si != tree)) {
                 o.text += "characterizations DISAGREE\n";
                 o.code = kExitRefuted;
             }
             return o;
         })->add_option("file", file, "algebra or poset JSON")->required();
    {
        auto* s = leaf(algebra, "gen-rank", "least number of generators", [&] {
            auto a = detail::load_algebra(file);
            auto g = gen_rank(a, cap);
            detail::Outcome o;
            o.json = tagged("gen-rank");
            o.json["rank"] = g.rank;
            Json gens = Json::array();
            for (auto e : g.generators) gens.push_back(a.name(e));
            o.json["generators"] = gens;
            o.text = "gen rank " + std::to_string(g.rank) + ", generators " + gens.dump() + "\n";
            return o;
        });
        s->add_option("file", file, "algebra or poset JSON")->required();
        cap = kDefaultGenRankCap;
        s->add_option("--cap", cap, "largest algebra size attempted");
    }

    // ---- formula ----
    auto* formula = group("formula", "formula parsing and evaluation");
    leaf(formula, "parse", "parse and print in normal form", [&] {
             auto f = parse(text);
             detail::Outcome o;
             o.json = tagged("formula");
             o.json["formula"] = print(f);
             o.json["variables"] = vars(f);
             o.json["size"] = formula_size(f);
             o.text = print(f) + "\n";
             return o;
         })->add_option("formula", text)->required();
    {
        auto* s = leaf(formula, "eval", "value under a valuation", [&] {
            auto a = detail::load_algebra(file);
            auto f = parse(text);
            auto v = valuation_from_json(a, detail::parse_json_arg(json_arg, "valuation"));
            for (auto& name : vars(f))
                if (!v.count(name)) throw Error("valuation misses variable " + name);
            Elem r = eval(a, f, v);
            detail::Outcome o;
            o.json = tagged("value");
            o.json["index"] = r;
            o.json["name"] = a.name(r);
            o.text = a.name(r) + "\n";
            return o;
        });
        s->add_option("--algebra", file)->required();
        s->add_option("--valuation", json_arg, "JSON object, variable -> element index or name")->required();
        s->add_option("formula", text)->required();
    }
    {
        auto* s = leaf(formula, "valid", "validity with the first countervaluation", [&] {
            auto a = detail::load_algebra(file);
            auto f = parse(text);
            auto v = is_valid(a, f, budget);
            detail::Outcome o;
            o.json = tagged("verdict");
            o.json["valid"] = v.valid;
            if (v.counter) o.json["countervaluation"] = valuation_to_json(a, *v.counter);
            o.text = v.valid ? "valid\n" : "refuted\n" + detail::valuation_text(a, *v.counter);
            o.code = v.valid ? kExitOk : kExitRefuted;
            return o;
        });
        s->add_option("--algebra", file)->required();
        s->add_option("--budget", budget, "valuation budget");
        s->add_option("formula", text)->required();
    }

    // ---- charform ----
    auto* charform = group("charform", "Jankov, subframe and stable formulas");
    auto emit_formula = [](const Formula& f) {
        detail::Outcome o;
        o.json = tagged("formula");
        o.json["formula"] = print(f);
        o.text = print(f) + "\n";
        return o;
    };
    {
        auto* s = leaf(charform, "gamma", "stable formula for an algebra and a co-implication domain", [&] {
            auto a = detail::load_algebra(file);
            auto d = json_arg.empty() ? full_domain(a) : domain_from_json(a, detail::parse_json_arg(json_arg, "domain"));
            return emit_formula(gamma(a, d));
        });
        s->add_option("--algebra", file)->required();
        s->add_option("--domain", json_arg, "JSON list of [a,b] element pairs; default all pairs");
    }
    leaf(charform, "jankov", "Jankov formula", [&] { return emit_formula(jankov(detail::load_algebra(file))); })
        ->add_option("--algebra", file)
        ->required();
    leaf(charform, "subframe", "subframe formula", [&] { return emit_formula(beta(detail::load_algebra(file))); })
        ->add_option("--algebra", file)
        ->required();
    {
        auto* s = leaf(charform, "check", "refutation lemma: semantic side against structural side", [&] {
            auto a = detail::load_algebra(file);
            auto b = detail::load_algebra(file2);
            if (kind == "jankov") return detail::refutation_outcome("jankov", b, check_jankov_refutation(b, a, budget));
            if (kind == "subframe") return detail::refutation_outcome("subframe", b, check_subframe_refutation(b, a, budget));
            if (kind == "stable") {
                auto d = json_arg.empty() ? full_domain(a) : domain_from_json(a, detail::parse_json_arg(json_arg, "domain"));
                return detail::refutation_outcome("stable", b, check_stable_refutation(b, a, d, budget));
            }
            throw Error("check kind must be jankov, subframe or stable");
        });
        s->add_option("kind", kind, "jankov | subframe | stable")->required();
        s->add_option("--source", file, "the characterized algebra A")->required();
        s->add_option("--target", file2, "the algebra B tested")->required();
        s->add_option("--domain", json_arg, "stable only: JSON list of [a,b] pairs");
        s->add_option("--budget", budget, "valuation budget");
    }
    {
        auto* s = leaf(charform, "patterns", "refutation patterns on co-trees up to a size cap", [&] {
            auto f = parse(text);
            auto pats = refutation_patterns(f, cap, budget);
            detail::Outcome o;
            o.json = tagged("patterns");
            o.json["size_cap"] = cap;
            o.json["complete"] = false;
            Json list = Json::array();
            for (auto& p : pats) {
                Json pj{{"dual", poset_to_json(p.dual)}, {"domain", domain_to_json(p.domain)},
                        {"valuation", valuation_to_json(p.algebra.alg, p.valuation)}};
                if (flag) pj["formula"] = print(gamma(p.algebra.alg, p.domain));
                list.push_back(pj);
            }
            o.json["patterns"] = list;
            o.text = std::to_string(pats.size()) + " patterns on co-trees up to " + std::to_string(cap) +
                     " points (bounded search, not a completeness claim)\n";
            for (auto& p : pats) {
                o.text += "  " + canonical_form(p.dual) + " domain " + domain_to_json(p.domain).dump() + "\n";
                if (flag) o.text += "    " + print(gamma(p.algebra.alg, p.domain)) + "\n";
            }
            return o;
        });
        s->add_option("formula", text)->required();
        s->add_option("--size-cap", cap, "largest co-tree dual")->required();
        s->add_option("--budget", budget, "valuation budget");
        s->add_flag("--formulas", flag, "print each stable formula");
    }

    // ---- morph ----
    auto* morph = group("morph", "bi-p-morphisms and order-embeddings");
    auto map_outcome = [](const char* what, const Poset& p, const Poset& q, const std::optional<PosetMap>& f) {
        detail::Outcome o;
        o.json = tagged("search");
        o.json["found"] = f.has_value();
        if (f) o.json["map"] = map_to_json(p, q, *f);
        if (f) {
            o.text = std::string(what) + " found:\n";
            for (std::size_t x = 0; x < p.size(); ++x) o.text += "  " + p.label(x) + " -> " + q.label((*f)(x)) + "\n";
        } else {
            o.text = std::string("no ") + what + "\n";
        }
        o.code = f ? kExitOk : kExitRefuted;
        return o;
    };
    {
        auto* s = leaf(morph, "find-surjection", "surjective bi-p-morphism from P onto Q", [&] {
            auto p = detail::load_poset(file), q = detail::load_poset(file2);
            return map_outcome("surjective bi-p-morphism", p, q, find_surjective_bi_p_morphism(p, q, node_budget));
        });
        s->add_option("P", file)->required();
        s->add_option("Q", file2)->required();
        s->add_option("--budget", node_budget, "search node budget");
    }
    {
        auto* s = leaf(morph, "find-embedding", "order-embedding of P into Q", [&] {
            auto p = detail::load_poset(file), q = detail::load_poset(file2);
            return map_outcome("order-embedding", p, q, find_order_embedding(p, q, node_budget));
        });
        s->add_option("P", file)->required();
        s->add_option("Q", file2)->required();
        s->add_option("--budget", node_budget, "search node budget");
    }
    {
        auto* s = leaf(morph, "comb-quotient", "explicit quotient of a co-tree onto C_n", [&] {
            auto x = detail::load_poset(file);
            auto c = make_comb(n);
            if (!is_co_tree(x)) throw Error("comb quotient needs a co-tree");
            if (!find_order_embedding(c, x, node_budget)) {
                detail::Outcome o;
                o.json = tagged("comb-quotient");
                o.json["found"] = false;
                o.text = "C_" + std::to_string(n) + " does not embed, no quotient\n";
                o.code = kExitRefuted;
                return o;
            }
            auto q = comb_quotient(x, n, node_budget);
            detail::Outcome o = map_outcome("comb quotient", x, c, q.map);
            o.json["kind"] = "comb-quotient";
            o.json["embedding"] = q.embedding;
            return o;
        });
        s->add_option("file", file, "co-tree JSON")->required();
        s->add_option("--n", n, "comb size")->required();
        s->add_option("--budget", node_budget, "search node budget");
    }
    {
        auto* s = leaf(morph, "antichain", "pairwise surjective bi-p-morphism relations", [&] {
            std::vector<Poset> ps;
            for (auto& f : files) ps.push_back(detail::load_poset(f));
            auto mat = antichain_matrix(ps, node_budget);
            detail::Outcome o;
            o.json = tagged("antichain");
            o.json["files"] = files;
            Json rows = Json::array();
            bool anti = true;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    row.push_back(i == j ? "=" : relation_name(mat[i][j]));
                    if (i != j && mat[i][j] != Relation::Incomparable) anti = false;
                }
                rows.push_back(row);
            }
            o.json["matrix"] = rows;
            o.json["antichain"] = anti;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                for (std::size_t j = 0; j < ps.size(); ++j) o.text += (j ? "\t" : "") + rows[i][j].get<std::string>();
                o.text += "\n";
            }
            o.text += anti ? "pairwise incomparable\n" : "NOT an antichain\n";
            o.code = anti ? kExitOk : kExitRefuted;
            return o;
        });
        s->add_option("files", files, "poset JSON files")->required();
        s->add_option("--budget", node_budget, "search node budget per pair");
    }

    // ---- bisim ----
    auto* bisim = group("bisim", "bi-bisimulations and generation");
    {
        auto* s = leaf(bisim, "check", "is a partition a bi-bisimulation equivalence", [&] {
            auto p = detail::load_poset(file);
            auto e = partition_from_json(p, detail::parse_json_arg(json_arg, "partition"));
            bool ok = is_bi_bisimulation(p, e);
            detail::Outcome o;
            o.json = tagged("bisim-check");
            o.json["bi_bisimulation"] = ok;
            Json sat = Json::array();
            for (auto u : saturated_upsets(p, e)) sat.push_back(set_to_json(p, u));
            o.json["saturated_upsets"] = sat;
            o.text = ok ? "bi-bisimulation equivalence\n" : "not a bi-bisimulation equivalence\n";
            o.code = ok ? kExitOk : kExitRefuted;
            return o;
        });
        s->add_option("file", file, "poset JSON")->required();
        s->add_option("--partition", json_arg, "JSON list of blocks of labels")->required();
    }
    {
        auto* s = leaf(bisim, "generates", "does a set of elements generate the algebra", [&] {
            auto a = detail::load_algebra(file);
            std::vector<Elem> gens;
            for (auto& e : detail::parse_json_arg(json_arg, "generator list")) gens.push_back(elem_from_json(a, e));
            auto sub = generated_subalgebra(a, gens, Signature::BiHeyting);
            detail::Outcome o;
            o.json = tagged("generates");
            o.json["generates"] = sub.size() == a.size();
            o.json["subalgebra_size"] = sub.size();
            o.text = std::string(sub.size() == a.size() ? "generates" : "does not generate") + " (subalgebra of size " +
                     std::to_string(sub.size()) + " of " + std::to_string(a.size()) + ")\n";
            o.code = sub.size() == a.size() ? kExitOk : kExitRefuted;
            return o;
        });
        s->add_option("file", file, "algebra or poset JSON")->required();
        s->add_option("--gens", json_arg, "JSON list of element indices or names")->required();
    }
    {
        auto* s = leaf(bisim, "coloring-theorem", "closure oracle against bi-bisimulation sweep", [&] {
            ColoredFrame cf;
            if (!file.empty()) {
                cf.poset = detail::load_poset(file);
                for (auto& c : detail::parse_json_arg(json_arg, "colors")) cf.colors.push_back(set_from_json(cf.poset, c));
            } else {
                cf = comb_coloring(n);
            }
            auto r = coloring_theorem_check(cf);
            detail::Outcome o;
            o.json = tagged("coloring-report");
            o.json["generated"] = r.generated;
            o.json["all_identify"] = r.all_identify;
            o.json["partitions"] = r.partitions;
            o.json["bisimulations"] = r.bisimulations;
            o.json["closure_changed"] = cf.closure_changed;
            if (r.witness) o.json["witness"] = partition_to_json(cf.poset, *r.witness);
            o.text = std::string("generated: ") + (r.generated ? "yes" : "no") + "\nevery proper bi-bisimulation merges colors: " +
                     (r.all_identify ? "yes" : "no") + "\n" + std::to_string(r.bisimulations) + " proper bi-bisimulations of " +
                     std::to_string(r.partitions) + " proper partitions\n";
            if (r.witness) o.text += "witness " + partition_to_json(cf.poset, *r.witness).dump() + "\n";
            o.text += r.agree() ? "agree\n" : "DISCREPANCY\n";
            o.code = r.agree() ? kExitOk : kExitRefuted;
            return o;
        });
        s->add_option("--poset", file, "poset JSON (with --colors)");
        s->add_option("--colors", json_arg, "JSON list of upsets");
        s->add_option("--comb", n, "use the comb coloring of C_n");
    }
    {
        auto* s = leaf(bisim, "depth-bound", "depth and minimal-upset bound from the generator count", [&] {
            auto r = depth_bound_check(detail::load_poset(file), n);
            detail::Outcome o;
            o.json = tagged("depth-bound");
            o.json["gen_rank"] = r.gen_rank;
            o.json["depth"] = r.depth;
            o.json["max_min_upset"] = r.max_min_upset;
            o.json["bound"] = r.bound;
            o.json["holds"] = r.holds();
            o.text = "gen rank " + std::to_string(r.gen_rank) + ", depth " + std::to_string(r.depth) + ", max |up w| " +
                     std::to_string(r.max_min_upset) + ", bound " + std::to_string(r.bound) + (r.holds() ? ": holds\n" : ": FAILS\n");
            o.code = r.holds() ? kExitOk : kExitRefuted;
            return o;
        });
        s->add_option("file", file, "co-tree JSON")->required();
        s->add_option("--n", n, "omitted comb C_n")->required();
    }
    {
        auto* s = leaf(bisim, "ktable", "largest upset algebra among co-trees omitting C_n with gen rank <= m", [&] {
            auto e = ktable(n, static_cast<int>(m), cap);
            detail::Outcome o;
            o.json = tagged("ktable");
            o.json["n"] = n;
            o.json["m"] = m;
            o.json["size_cap"] = cap;
            o.json["scanned"] = e.scanned;
            o.json["max_algebra"] = e.max_algebra;
            if (e.largest) o.json["largest"] = poset_to_json(*e.largest);
            o.text = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " size cap " + std::to_string(cap) + ": " +
                     std::to_string(e.scanned) + " co-trees, largest algebra " + std::to_string(e.max_algebra) + "\n";
            return o;
        });
        s->add_option("--n", n)->required();
        s->add_option("--m", m)->required();
        s->add_option("--size-cap", cap)->required();
    }

    // ---- verify ----
    RunConfig cfg;
    std::string suite;
    {
        auto* s = app.add_subcommand("verify", "run a verification suite, or all");
        s->fallthrough();
        s->add_option("suite", suite, "suite name or all")->required();
        auto positive = CLI::PositiveNumber;
        s->add_option("--max-source", cfg.max_source, "cap on the A side")->check(positive);
        s->add_option("--max-target", cfg.max_target, "cap on the B side")->check(positive);
        s->add_option("--max-size", cfg.max_size, "cap on enumerated posets")->check(positive);
        s->add_option("--max-n", cfg.max_n, "cap on comb/chain/fork index")->check(positive);
        s->add_option("--samples", cfg.samples, "random instances")->check(positive);
        s->add_option("--model-cap", cfg.model_cap, "largest co-tree model")->check(positive);
        s->add_option("--seed", cfg.seed, "random seed");
        s->add_option("--valuation-budget", cfg.valuation_budget)->check(positive);
        s->add_option("--node-budget", cfg.node_budget)->check(positive);
        s->callback([&] {
            action = [&] {
                if (suite != "all" && !suite_exists(suite)) throw CLI::ValidationError("unknown suite " + suite);
                detail::Outcome o;
                Json reports = Json::array();
                bool partial = false, failed = false;
                for (auto& [name, _] : suites()) {
                    if (suite != "all" && name != suite) continue;
                    auto r = verify_suite(name, cfg);
                    reports.push_back(report_to_json(r, timing));
                    o.text += report_to_text(r, timing);
                    partial = partial || r.partial;
                    failed = failed || !r.discrepancies.empty();
                }
                o.json = suite == "all" ? Json{{"schema", kSchema}, {"kind", "reports"}, {"reports", reports}} : reports[0];
                o.code = failed ? kExitRefuted : partial ? kExitUsage : kExitOk;
                return o;
            };
        });
    }

    std::vector<const char*> argv{"cotree-lab"};
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        cfg.format = format;
        cfg.timing = timing;
        result = action();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kExitUsage;
    }
    out << (format == "json" ? detail::pretty(result.json) : result.text);
    return result.code;
}

}  // namespace cotree
