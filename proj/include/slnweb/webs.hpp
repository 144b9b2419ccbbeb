#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "tableaux.hpp"

namespace slnweb {

using GlWeight = std::vector<int>;

// F_pos^{(power)}
struct FMove {
    int pos = 1;
    int power = 1;

    friend bool operator==(const FMove&, const FMove&) = default;
};

/**
 * A ladder web: start weight (n^ell, 0^{m-ell}) and the moves in the order
 * they are applied (bottom to top).
 */
struct FProgram {
    int n = 2;
    int m = 2;
    int ell = 1;
    std::vector<FMove> moves;

    GlWeight start_weight() const {
        GlWeight w(static_cast<std::size_t>(m), 0);
        for (int c = 0; c < ell && c < m; ++c) w[static_cast<std::size_t>(c)] = n;
        return w;
    }

    friend bool operator==(const FProgram&, const FProgram&) = default;
};

inline void check_header(int n, int m, int ell) {
    if (n < 2) throw SemanticError("n must be at least 2");
    if (n > 32) throw SemanticError("n larger than 32 is not supported");
    if (ell < 1) throw SemanticError("l must be at least 1");
    if (m < 2) throw SemanticError("m must be at least 2");
    if (ell > m) throw SemanticError("l must not exceed m");
}

// Applies one move; returns false if the result leaves 0..n.
inline bool apply_move(GlWeight& w, const FMove& mv, int n) {
    if (mv.pos < 1 || mv.pos + 1 > static_cast<int>(w.size()))
        throw SemanticError("move position " + std::to_string(mv.pos) + " out of range");
    if (mv.power < 1) throw SemanticError("move power must be positive");
    int& a = w[static_cast<std::size_t>(mv.pos - 1)];
    int& b = w[static_cast<std::size_t>(mv.pos)];
    if (a - mv.power < 0 || b + mv.power > n) return false;
    a -= mv.power;
    b += mv.power;
    return true;
}

inline GlWeight apply_fstring(const FProgram& p) {
    check_header(p.n, p.m, p.ell);
    GlWeight w = p.start_weight();
    for (std::size_t k = 0; k < p.moves.size(); ++k)
        if (!apply_move(w, p.moves[k], p.n)) throw KilledError(k + 1);
    return w;
}

inline bool is_closed(const FProgram& p) {
    for (int k : apply_fstring(p))
        if (k != 0 && k != p.n) return false;
    return true;
}

// Column labels, bit s-1 for flow line s.
using Front = std::vector<ComponentSet>;

struct Flow {
    std::vector<ComponentSet> rungs;

    friend auto operator<=>(const Flow&, const Flow&) = default;
};

inline ComponentSet full_set(int n) { return n >= 32 ? ~ComponentSet{0} : (ComponentSet{1} << n) - 1; }

inline Front initial_front(const FProgram& p) {
    Front f(static_cast<std::size_t>(p.m), 0);
    for (int c = 0; c < p.ell; ++c) f[static_cast<std::size_t>(c)] = full_set(p.n);
    return f;
}

inline bool rung_allowed(const Front& f, const FMove& mv, ComponentSet rung) {
    ComponentSet lo = f[static_cast<std::size_t>(mv.pos - 1)];
    ComponentSet hi = f[static_cast<std::size_t>(mv.pos)];
    return popcount(rung) == mv.power && (rung & ~lo) == 0 && (rung & hi) == 0;
}

inline void apply_rung(Front& f, const FMove& mv, ComponentSet rung) {
    f[static_cast<std::size_t>(mv.pos - 1)] &= ~rung;
    f[static_cast<std::size_t>(mv.pos)] |= rung;
}

// All fronts, level 0 (bottom) to level s (top).
inline std::vector<Front> fronts(const FProgram& p, const Flow& f) {
    if (f.rungs.size() != p.moves.size()) throw SemanticError("flow has the wrong number of rungs");
    std::vector<Front> out{initial_front(p)};
    for (std::size_t k = 0; k < p.moves.size(); ++k) {
        Front next = out.back();
        if (!rung_allowed(next, p.moves[k], f.rungs[k])) throw SemanticError("invalid flow at step " + std::to_string(k + 1));
        apply_rung(next, p.moves[k], f.rungs[k]);
        out.push_back(std::move(next));
    }
    return out;
}

inline Front final_front(const FProgram& p, const Flow& f) { return fronts(p, f).back(); }

inline std::vector<Flow> enumerate_flows(const FProgram& p) {
    apply_fstring(p);
    std::vector<Flow> out;
    Flow cur;
    auto rec = [&](auto&& self, Front& front, std::size_t k) -> void {
        if (k == p.moves.size()) {
            out.push_back(cur);
            return;
        }
        const FMove& mv = p.moves[k];
        ComponentSet pool = front[static_cast<std::size_t>(mv.pos - 1)] & ~front[static_cast<std::size_t>(mv.pos)];
        for_each_subset(pool, mv.power, [&](ComponentSet rung) {
            Front next = front;
            apply_rung(next, mv, rung);
            cur.rungs.push_back(rung);
            self(self, next, k + 1);
            cur.rungs.pop_back();
        });
    };
    Front f0 = initial_front(p);
    rec(rec, f0, 0);
    return out;
}

// #{(s,t) in S x T : s < t}
inline int interleave(ComponentSet s, ComponentSet t) {
    int count = 0;
    for (int x = 1; x <= 32; ++x)
        if (t & (ComponentSet{1} << (x - 1))) count += popcount(s & ((ComponentSet{1} << (x - 1)) - 1));
    return count;
}

// Each rung T at position i contributes
//   interleave(below[i], T) - interleave(below[i+1], T) - |T|(|T|-1)/2.
inline int flow_weight(const FProgram& p, const Flow& f) {
    auto levels = fronts(p, f);
    int wt = 0;
    for (std::size_t k = 0; k < p.moves.size(); ++k) {
        const FMove& mv = p.moves[k];
        ComponentSet t = f.rungs[k];
        ComponentSet lo = levels[k][static_cast<std::size_t>(mv.pos - 1)];
        ComponentSet hi = levels[k][static_cast<std::size_t>(mv.pos)];
        int j = popcount(t);
        wt += interleave(lo, t) - interleave(hi, t) - j * (j - 1) / 2;
    }
    return wt;
}

// The map iota.
inline MultiTableau flow_to_tableau(const FProgram& p, const Flow& f) {
    fronts(p, f);
    MultiTableau t(p.n, p.ell);
    for (std::size_t k = 0; k < p.moves.size(); ++k) {
        EntryGroup g{p.moves[k].pos, {}};
        for (int s : members_descending(f.rungs[k])) {
            NodeRef nd;
            if (!t.shape().addable_in(s, g.residue, &nd))
                throw SemanticError("flow cannot be placed at step " + std::to_string(k + 1));
            g.placements.push_back(nd);
        }
        t.push_group(std::move(g));
    }
    return t;
}

// The map g.
inline std::pair<FProgram, Flow> tableau_to_flow(const MultiTableau& t, int m) {
    FProgram p{t.n(), m, t.ell(), {}};
    Flow f;
    for (const auto& g : t.groups()) {
        p.moves.push_back(FMove{g.residue, static_cast<int>(g.placements.size())});
        f.rungs.push_back(g.components());
    }
    check_header(p.n, p.m, p.ell);
    for (const auto& mv : p.moves)
        if (mv.pos < 1 || mv.pos >= m) throw SemanticError("tableau residue does not fit into width m");
    apply_fstring(p);
    fronts(p, f);
    return {std::move(p), std::move(f)};
}

// Column c holds s iff some row r of component s has rowlen(r) + ell + 1 - r = c.
inline Front state_string_of_shape(const MultiPartition& shape, int m) {
    Front out(static_cast<std::size_t>(m), 0);
    for (int s = 1; s <= shape.n(); ++s)
        for (int r = 1; r <= shape.ell(); ++r) {
            int c = shape.row_length(s, r) + shape.ell() + 1 - r;
            if (c < 1 || c > m) throw SemanticError("shape does not fit into width m");
            out[static_cast<std::size_t>(c - 1)] |= ComponentSet{1} << (s - 1);
        }
    return out;
}

// "({2},{1},{})", members in decreasing order.
inline std::string render_state(const Front& f) {
    std::string out = "(";
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (c) out += ",";
        out += "{";
        bool first = true;
        for (int s : members_descending(f[c])) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(s);
        }
        out += "}";
    }
    return out + ")";
}

} // namespace slnweb
