#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "evaluation.hpp"
#include "laurent.hpp"
#include "webs.hpp"

namespace slnweb {

// Upward crossing of the strands in columns pos and pos+1; column pos+2 must be empty.
struct Crossing {
    int pos = 1;
    int sign = +1;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

using LinkItem = std::variant<FMove, Crossing>;

struct LinkProgram {
    int n = 2;
    int m = 2;
    int ell = 1;
    std::vector<LinkItem> items;

    GlWeight start_weight() const { return FProgram{n, m, ell, {}}.start_weight(); }

    friend bool operator==(const LinkProgram&, const LinkProgram&) = default;
};

struct BraidSummand {
    int sign = 1;
    int qpower = 0;
    std::vector<FMove> moves;  // application order
};

inline std::vector<BraidSummand> braiding_summands(const GlWeight& w, int pos, int sign) {
    if (pos < 1 || pos + 2 > static_cast<int>(w.size())) throw SemanticError("crossing position out of range");
    if (sign != 1 && sign != -1) throw SemanticError("crossing sign must be +1 or -1");
    const int a = w[static_cast<std::size_t>(pos - 1)];
    const int b = w[static_cast<std::size_t>(pos)];
    if (w[static_cast<std::size_t>(pos + 1)] != 0)
        throw SemanticError("crossing at " + std::to_string(pos) + " is blocked: column " + std::to_string(pos + 2) +
                            " is not empty");
    std::vector<BraidSummand> out;
    auto push = [&](int parity, int qp, std::vector<FMove> mv) {
        BraidSummand s{parity % 2 == 0 ? 1 : -1, sign > 0 ? qp : -qp, {}};
        for (const auto& x : mv)
            if (x.power > 0) s.moves.push_back(x);
        out.push_back(std::move(s));
    };
    if (b <= a) {
        for (int k = 0; k <= b; ++k)
            push(k + (a + 1) * b, -b + k, {{pos + 1, b - k}, {pos, a}, {pos + 1, a + k - b}});
    } else {
        for (int k = 0; k <= a; ++k)
            push(k + (b + 1) * a, -a + k, {{pos, k}, {pos + 1, a}, {pos, a - k}});
    }
    return out;
}

// (..., a, b, 0, ...) -> (..., 0, b, a, ...) at columns pos..pos+2
inline void cross_weight(GlWeight& w, int pos) {
    auto i = static_cast<std::size_t>(pos - 1);
    w[i + 2] = w[i];
    w[i] = 0;
}

struct ExpandedSummand {
    int sign = 1;
    int qshift = 0;
    FProgram program;
};

// Weight before every item; throws on killed moves and blocked crossings.
inline std::vector<GlWeight> link_weights(const LinkProgram& lp) {
    check_header(lp.n, lp.m, lp.ell);
    std::vector<GlWeight> out{lp.start_weight()};
    for (std::size_t k = 0; k < lp.items.size(); ++k) {
        GlWeight w = out.back();
        if (const auto* mv = std::get_if<FMove>(&lp.items[k])) {
            if (!apply_move(w, *mv, lp.n)) throw KilledError(k + 1);
        } else {
            const Crossing& c = std::get<Crossing>(lp.items[k]);
            braiding_summands(w, c.pos, c.sign);
            cross_weight(w, c.pos);
        }
        out.push_back(std::move(w));
    }
    return out;
}

inline std::vector<ExpandedSummand> expand(const LinkProgram& lp) {
    auto weights = link_weights(lp);
    std::vector<ExpandedSummand> out;
    ExpandedSummand cur{1, 0, FProgram{lp.n, lp.m, lp.ell, {}}};
    auto rec = [&](auto&& self, GlWeight w, std::size_t k) -> void {
        if (k == lp.items.size()) {
            out.push_back(cur);
            return;
        }
        if (const auto* mv = std::get_if<FMove>(&lp.items[k])) {
            apply_move(w, *mv, lp.n);
            cur.program.moves.push_back(*mv);
            self(self, std::move(w), k + 1);
            cur.program.moves.pop_back();
            return;
        }
        const Crossing& c = std::get<Crossing>(lp.items[k]);
        for (const BraidSummand& s : braiding_summands(weights[k], c.pos, c.sign)) {
            GlWeight v = w;
            bool alive = true;
            for (const auto& mv : s.moves) alive = alive && apply_move(v, mv, lp.n);
            if (!alive) continue;
            ExpandedSummand saved = cur;
            cur.sign *= s.sign;
            cur.qshift += s.qpower;
            cur.program.moves.insert(cur.program.moves.end(), s.moves.begin(), s.moves.end());
            self(self, std::move(v), k + 1);
            cur = std::move(saved);
        }
    };
    rec(rec, lp.start_weight(), 0);
    return out;
}

inline LaurentPoly ev_link(const LinkProgram& lp, const EvalOptions& opt = {}) {
    LaurentPoly total;
    for (const auto& s : expand(lp)) {
        if (!is_closed(s.program)) throw SemanticError("link program does not close up");
        total += ev(s.program, opt).scaled(s.sign, s.qshift);
    }
    return total;
}

struct Normalization {
    int sign = 1;
    int qpower = 0;
};

inline Normalization normalization(const LinkProgram& lp) {
    auto weights = link_weights(lp);
    Normalization nm;
    for (std::size_t k = 0; k < lp.items.size(); ++k) {
        const auto* c = std::get_if<Crossing>(&lp.items[k]);
        if (!c) continue;
        int a = weights[k][static_cast<std::size_t>(c->pos - 1)];
        int b = weights[k][static_cast<std::size_t>(c->pos)];
        if (a != b) continue;
        if (b % 2 == 0) nm.sign = -nm.sign;
        nm.qpower += c->sign * b * (lp.n + 1 - b);
    }
    return nm;
}

inline LaurentPoly rt(const LinkProgram& lp, const EvalOptions& opt = {}) {
    Normalization nm = normalization(lp);
    return ev_link(lp, opt).scaled(nm.sign, nm.qpower);
}

inline LinkProgram to_link_program(const FProgram& p) {
    LinkProgram lp{p.n, p.m, p.ell, {}};
    for (const auto& mv : p.moves) lp.items.emplace_back(mv);
    return lp;
}

struct BraidLetter {
    int strand = 1;  // sigma_strand swaps strands strand and strand+1
    int sign = +1;
};

namespace detail {

class ClosureBuilder {
public:
    ClosureBuilder(int n, int m, int ell) : lp_{n, m, ell, {}}, w_(lp_.start_weight()) {}

    int at(int col) const { return w_[static_cast<std::size_t>(col - 1)]; }

    void move(int pos, int power) {
        if (power == 0) return;
        FMove mv{pos, power};
        if (!apply_move(w_, mv, lp_.n)) throw Error("braid closure layout produced a killed move");
        lp_.items.emplace_back(mv);
    }

    // Moves the label in column col one step right into an empty column.
    void shift(int col) {
        if (at(col + 1) != 0) throw Error("braid closure layout: shift into an occupied column");
        move(col, at(col));
    }

    // Moves the strand in column col one step left past the leash in column col-1.
    void pass_leash(int col) {
        if (at(col - 1) != lp_.n) throw Error("braid closure layout: expected a leash");
        move(col - 1, lp_.n - at(col));
    }

    void cross(int pos, int sign) {
        if (at(pos + 2) != 0) throw Error("braid closure layout: blocked crossing");
        lp_.items.emplace_back(Crossing{pos, sign});
        cross_weight(w_, pos);
    }

    LinkProgram finish() { return std::move(lp_); }

private:
    LinkProgram lp_;
    GlWeight w_;
};

} // namespace detail

/**
 * Closure of a colored braid, all braid strands oriented upwards.
 *
 * Layout: the return strands sit in columns 1..s as (R_s, ..., R_1) with
 * labels n - c, the braid strands start in columns s+1..2s, and every
 * crossing pushes the braid block one column to the right.
 */
inline LinkProgram compile_braid_closure(int n, const std::vector<int>& colors, const std::vector<BraidLetter>& word) {
    const int s = static_cast<int>(colors.size());
    if (s < 1) throw SemanticError("a braid needs at least one strand");
    if (n < 2 || n > 32) throw SemanticError("n out of range");
    for (int c : colors)
        if (c < 1 || c > n) throw SemanticError("strand color out of range 1..n");
    std::vector<int> perm(static_cast<std::size_t>(s));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : word) {
        if (l.strand < 1 || l.strand > s - 1) throw SemanticError("braid letter strand out of range");
        if (l.sign != 1 && l.sign != -1) throw SemanticError("braid letter sign must be + or -");
        std::swap(perm[static_cast<std::size_t>(l.strand - 1)], perm[static_cast<std::size_t>(l.strand)]);
    }
    for (int j = 0; j < s; ++j)
        if (colors[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] != colors[static_cast<std::size_t>(j)])
            throw SemanticError("strand colors must be constant along each link component");

    const int crossings = static_cast<int>(word.size());
    detail::ClosureBuilder b(n, 2 * s + crossings, s);

    // Cups, outermost first.  Cup j splits the rightmost leash, sends its
    // right leg to column s+j and its left leg past the leashes to column s+1-j.
    for (int j = s; j >= 1; --j) {
        const int c = colors[static_cast<std::size_t>(j - 1)];
        const int leash = s;
        b.move(leash, c);
        for (int col = leash + 1; col < s + j; ++col) b.shift(col);
        for (int col = leash; col > s + 1 - j; --col) b.pass_leash(col);
    }

    int base = s + 1;
    for (const auto& l : word) {
        const int i = l.strand;
        for (int t = s; t >= i + 2; --t) b.shift(base + t - 1);
        b.cross(base + i - 1, l.sign);
        for (int t = i - 1; t >= 1; --t) b.shift(base + t - 1);
        ++base;
    }

    // Caps, innermost first; finished caps become leashes that later strands pass.
    for (int j = 1; j <= s; ++j) {
        for (int t = 0; t < j - 1; ++t) b.pass_leash(base + j - 1 - t);
        for (int col = s + 1 - j; col < base - 1; ++col) b.shift(col);
        b.move(base - 1, n - colors[static_cast<std::size_t>(j - 1)]);
    }
    return b.finish();
}

} // namespace slnweb
