#pragma once

#include <vector>

#include "algebra.hpp"
#include "formula.hpp"

namespace cotree {

struct Filtration {
    InducedAlgebra sub;     // Heyting subalgebra with its own co-implication
    Valuation valuation;    // the refuting valuation, in the subalgebra's indices
    std::vector<Elem> theta;  // values of the subformulas in the source
};

// Finite Heyting subalgebra of b generated by v[Sub(phi)], still refuting phi.
inline Filtration filtration(const BiHeytingAlgebra& b, const Formula& phi, const Valuation& v) {
    if (!is_bi_godel(b)) throw Error("filtration needs a bi-Godel algebra");
    if (eval(b, phi, v) == b.top()) throw Error("valuation does not refute the formula");
    Filtration f;
    for (auto& s : subformulas(phi)) f.theta.push_back(eval(b, s, v));
    f.sub = induced_algebra(b, generated_subalgebra(b, f.theta, Signature::Heyting));
    std::vector<int> pos(b.size(), -1);
    for (std::size_t i = 0; i < f.sub.embed.size(); ++i) pos[f.sub.embed[i]] = static_cast<int>(i);
    for (auto& name : vars(phi)) f.valuation[name] = static_cast<Elem>(pos[v.at(name)]);
    return f;
}

}  // namespace cotree
