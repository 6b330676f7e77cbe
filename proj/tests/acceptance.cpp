// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures (capped).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace cotree;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

void line(int id, bool ok, const std::string& what, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("%s AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt_secs(double s) {
    std::ostringstream o;
    o.precision(s < 10 ? 2 : 0);
    o << std::fixed << s << " s";
    return o.str();
}

std::string describe(const VerificationReport& r, double secs, double limit) {
    std::ostringstream o;
    o << r.instances << " instances, " << r.discrepancies.size() << " discrepancies, " << fmt_secs(secs) << " (limit "
      << limit << " s)";
    if (r.partial) o << ", PARTIAL";
    for (auto& n : r.notes) o << "; " << n;
    if (!r.discrepancies.empty()) o << "; first: " << r.discrepancies[0].dump();
    return o.str();
}

bool suite_line(int id, const std::string& suite, const std::string& what, double limit) {
    Timer t;
    auto r = verify_suite(suite, RunConfig{});
    double s = t.seconds();
    bool ok = r.passed() && s <= limit;
    line(id, ok, what, describe(r, s, limit));
    return ok;
}

// Plain enumeration of order-preserving maps (checked on assigned prefixes), bi-p + onto at the leaves.
struct NaiveSurjection {
    const Poset& p;
    const Poset& q;
    std::vector<std::size_t> f;
    std::uint64_t leaves = 0;

    bool go(std::size_t i) {
        if (i == p.size()) {
            ++leaves;
            return oracle::bi_p(p, q, f) && oracle::onto(q, f);
        }
        for (std::size_t v = 0; v < q.size(); ++v) {
            f[i] = v;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (p.leq(j, i) && !q.leq(f[j], v)) ok = false;
                if (p.leq(i, j) && !q.leq(v, f[j])) ok = false;
            }
            if (ok && go(i + 1)) return true;
        }
        return false;
    }
    bool exists() {
        f.assign(p.size(), 0);
        return go(0);
    }
};

}  // namespace

int main() {
    std::printf("acceptance: all criteria at default configuration, seed 1\n");

    suite_line(1, "duality", "duality round trips (co-forests <= 6, algebras <= 8)", 10);
    suite_line(2, "identities", "bi-Heyting identities and neg-coneg description (posets <= 6)", 10);
    suite_line(3, "si", "SI iff dual co-tree (co-forest duals <= 7)", 5);
    suite_line(4, "discriminator", "discriminator term on SI algebras (duals <= 5)", 30);
    suite_line(5, "jankov", "Jankov lemma (A <= 4, B <= 5)", 300);
    suite_line(6, "subframe", "subframe lemma (A <= 4, B <= 5)", 300);
    suite_line(7, "stable", "stable Jankov lemma (50 seeded triples, |A| <= 5, |B| <= 7)", 300);

    {
        // The statement as written: X |= beta(L_n*) iff depth < n, X |= beta(F_n*) iff width < n.
        Timer t;
        std::size_t instances = 0, chain_bad = 0, fork_bad = 0;
        std::string first_fork;
        std::vector<Formula> bl, bf;
        for (std::size_t n = 1; n <= 4; ++n) {
            bl.push_back(beta(upset_algebra(make_chain(n)).alg));
            bf.push_back(beta(upset_algebra(make_cofork(n)).alg));
        }
        for (auto& x : enumerate_cotrees(8)) {
            auto a = upset_algebra(x).alg;
            for (std::size_t n = 1; n <= 4; ++n) {
                ++instances;
                if (is_valid(a, bl[n - 1]).valid != (oracle::depth(x) < static_cast<int>(n))) ++chain_bad;
                if (is_valid(a, bf[n - 1]).valid != (oracle::width(x) < static_cast<int>(n))) {
                    if (fork_bad++ == 0) first_fork = "n=" + std::to_string(n) + " on " + std::to_string(x.size()) + "-point co-tree";
                }
            }
        }
        double s = t.seconds();
        std::ostringstream o;
        o << instances << " instances, depth side " << chain_bad << " discrepancies, width side " << fork_bad
          << " discrepancies, " << fmt_secs(s) << " (limit 120 s)";
        if (fork_bad) o << "; first width counterexample " << first_fork << " (F_1 is the 2-chain, so beta(F_1*) bounds depth, not width)";
        line(8, chain_bad == 0 && fork_bad == 0 && s <= 120, "depth/width subframe axiomatization (co-trees <= 8, n <= 4)", o.str());
    }

    suite_line(9, "combs", "comb theorem (co-trees <= 8, n <= 3)", 300);

    {
        Timer t;
        auto r = verify_suite("hodkinson", RunConfig{});
        // independent cross-check of the small cells
        auto t0 = make_hodkinson(0), t1 = make_hodkinson(1), t2 = make_hodkinson(2);
        NaiveSurjection a{t1, t0, {}}, b{t2, t0, {}};
        bool t1t0 = a.exists(), t2t0 = b.exists();
        bool sizes = t0.size() < t1.size() && t1.size() < t2.size();  // no surjection onto a larger poset
        double s = t.seconds();
        std::ostringstream o;
        o << describe(r, s, 600) << "; naive search T1->T0 " << (t1t0 ? "found" : "none") << " (" << a.leaves
          << " monotone maps), T2->T0 " << (t2t0 ? "found" : "none") << " (" << b.leaves << " monotone maps)";
        line(10, r.passed() && !t1t0 && !t2t0 && sizes && s <= 600, "Hodkinson antichain T0, T1, T2", o.str());
    }

    suite_line(11, "one-generated", "combs 1-generated (n <= 5, coloring check n <= 3)", 120);
    suite_line(12, "depth-bound", "depth bound for co-trees omitting C_2 (<= 8 points)", 300);
    suite_line(13, "inconsistency", "inconsistency lemma (200 seeded pairs, model cap 5)", 300);
    suite_line(14, "filtration", "stable filtration (100 seeded instances, algebras <= 8)", 120);

    std::printf("acceptance: %d failing criteria\n", failures);
    return failures == 0 ? 0 : 1;
}
