#pragma once

#include "errors.hpp"
#include "evaluation.hpp"
#include "tableaux.hpp"
#include "webs.hpp"

namespace slnweb {

// Greedy filling: each group goes to the addable components of smallest index.
inline MultiTableau canonical_tableau(const FProgram& p) {
    apply_fstring(p);
    MultiTableau t(p.n, p.ell);
    for (std::size_t k = 0; k < p.moves.size(); ++k) {
        const FMove& mv = p.moves[k];
        EntryGroup g{mv.pos, {}};
        for (int s = 1; s <= p.n && static_cast<int>(g.placements.size()) < mv.power; ++s) {
            NodeRef nd;
            if (t.shape().addable_in(s, mv.pos, &nd)) g.placements.push_back(nd);
        }
        if (static_cast<int>(g.placements.size()) < mv.power) throw GreedyStuck(k + 1);
        t.push_group(std::move(g));
    }
    return t;
}

inline int canonical_degree(const FProgram& p) { return bkw_degree(canonical_tableau(p)); }

// ev(p) lies in 1 + qN[q].
inline bool has_positive_exponent_property(const LaurentPoly& ev_value) {
    return !ev_value.is_zero() && ev_value.min_exponent() == 0 && ev_value.coeff(0) == 1 &&
           ev_value.has_nonnegative_coefficients();
}

inline bool is_dual_canonical(const FProgram& p, const EvalOptions& opt = {}) {
    return has_positive_exponent_property(ev(p, opt));
}

} // namespace slnweb
