#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "tableaux.hpp"
#include "webs.hpp"

namespace slnweb {

using ShapePolyMap = std::map<MultiPartition, LaurentPoly>;

struct EvalOptions {
    std::size_t max_states = 1000000;
    unsigned jobs = 1;
};

namespace detail {

using ShapeEntry = std::pair<const MultiPartition, LaurentPoly>;

inline void advance_shape(const MultiPartition& shape, const LaurentPoly& poly, const FMove& mv,
                          ShapePolyMap& out) {
    ComponentSet pool = 0;
    for (int s = 1; s <= shape.n(); ++s)
        if (shape.addable_in(s, mv.pos)) pool |= ComponentSet{1} << (s - 1);
    for_each_subset(pool, mv.power, [&](ComponentSet comps) {
        DegreeStep st = degree_increment(shape, mv.pos, comps);
        out[std::move(st.shape)] += poly.scaled(1, st.increment);
    });
}

inline ShapePolyMap dp_step(const ShapePolyMap& live, const FMove& mv, unsigned jobs) {
    ShapePolyMap next;
    if (jobs <= 1 || live.size() < 2 * static_cast<std::size_t>(jobs)) {
        for (const auto& [shape, poly] : live) advance_shape(shape, poly, mv, next);
        return next;
    }
    std::vector<const ShapeEntry*> items;
    items.reserve(live.size());
    for (const auto& e : live) items.push_back(&e);
    std::vector<ShapePolyMap> partial(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < items.size(); i += jobs)
                advance_shape(items[i]->first, items[i]->second, mv, partial[w]);
        });
    }
    for (auto& t : workers) t.join();
    // Polynomial addition is exact, so the merge order does not affect the result.
    for (auto& part : partial)
        for (auto& [shape, poly] : part) next[shape] += poly;
    return next;
}

} // namespace detail

// Evaluation polynomial per end shape, P^lambda(q).
inline ShapePolyMap ev_by_shape(const FProgram& p, const EvalOptions& opt = {}) {
    apply_fstring(p);
    ShapePolyMap live;
    live.emplace(MultiPartition(p.n, p.ell), LaurentPoly(1));
    for (const FMove& mv : p.moves) {
        live = detail::dp_step(live, mv, opt.jobs);
        if (live.size() > opt.max_states)
            throw ResourceError("more than " + std::to_string(opt.max_states) + " live shapes");
    }
    return live;
}

inline LaurentPoly ev(const FProgram& p, const EvalOptions& opt = {}) {
    LaurentPoly total;
    for (const auto& [shape, poly] : ev_by_shape(p, opt)) total += poly;
    return total;
}

// Brute force: sum over all flows of q^{weight}.
inline LaurentPoly ev_oracle(const FProgram& p) {
    LaurentPoly total;
    for (const Flow& f : enumerate_flows(p)) total.add_term(flow_weight(p, f), 1);
    return total;
}

// Coefficient of each boundary state: sum over flows of (-q)^{weight}.
inline std::map<Front, LaurentPoly> tensor_expansion(const FProgram& p, const EvalOptions& opt = {}) {
    std::map<Front, LaurentPoly> out;
    for (const auto& [shape, poly] : ev_by_shape(p, opt)) out[state_string_of_shape(shape, p.m)] += poly.negate_q();
    return out;
}

inline int d_shift(const GlWeight& w, int n, int ell) {
    long long num = static_cast<long long>(n) * (n - 1) * ell;
    for (int k : w) {
        if (k < 0 || k > n) throw SemanticError("weight entry out of range");
        num -= static_cast<long long>(k) * (k - 1);
    }
    if (num % 2 != 0) throw SemanticError("inconsistent weight for the normalization shift");
    return static_cast<int>(num / 2);
}

struct Pairing {
    LaurentPoly pairing;    // sum over shapes of P_u * P_v
    LaurentPoly ev_glued;   // q^{-d} * pairing
    int d = 0;
};

inline Pairing kuperberg(const FProgram& u, const FProgram& v, const EvalOptions& opt = {}) {
    if (u.n != v.n || u.ell != v.ell || u.m != v.m) throw SemanticError("pairing: headers differ");
    GlWeight wu = apply_fstring(u);
    if (wu != apply_fstring(v)) throw SemanticError("pairing: boundary weights differ");
    ShapePolyMap pu = ev_by_shape(u, opt);
    ShapePolyMap pv = ev_by_shape(v, opt);
    Pairing r;
    for (const auto& [shape, poly] : pu) {
        auto it = pv.find(shape);
        if (it != pv.end()) r.pairing += poly * it->second;
    }
    r.d = d_shift(wu, u.n, u.ell);
    r.ev_glued = r.pairing.scaled(1, -r.d);
    return r;
}

inline LaurentPoly kuperberg_pair(const FProgram& u, const FProgram& v, const EvalOptions& opt = {}) {
    return kuperberg(u, v, opt).pairing;
}

inline LaurentPoly ev_glued(const FProgram& u, const FProgram& v, const EvalOptions& opt = {}) {
    return kuperberg(u, v, opt).ev_glued;
}

} // namespace slnweb
