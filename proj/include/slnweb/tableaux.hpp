#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace slnweb {

// Row lengths, weakly decreasing, no trailing zeros.
using Partition = std::vector<int>;

// Component 1 is the rightmost one.  Coordinates are 1-based.
struct NodeRef {
    int component = 1;
    int row = 1;
    int col = 1;

    friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

inline int residue(const NodeRef& node, int ell) { return node.col - node.row + ell; }

// N1 strictly after N2 in the order where larger components come first and
// rows increase downwards inside one component.
inline bool strictly_after(const NodeRef& a, const NodeRef& b) {
    return a.component < b.component || (a.component == b.component && a.row > b.row);
}

class MultiPartition {
public:
    MultiPartition() = default;
    MultiPartition(int n, int ell) : n_(n), ell_(ell), comps_(static_cast<std::size_t>(n)) {
        if (n < 1) throw SemanticError("a multipartition needs at least one component");
        if (ell < 1) throw SemanticError("ell must be positive");
    }

    // Components listed right to left, i.e. comps[0] is component 1.
    MultiPartition(int n, int ell, std::vector<Partition> comps) : MultiPartition(n, ell) {
        if (static_cast<int>(comps.size()) != n) throw SemanticError("wrong number of components");
        for (auto& p : comps) {
            while (!p.empty() && p.back() == 0) p.pop_back();
            for (std::size_t r = 0; r < p.size(); ++r) {
                if (p[r] < 0 || (r > 0 && p[r] > p[r - 1])) throw SemanticError("row lengths must weakly decrease");
            }
            if (static_cast<int>(p.size()) > ell) throw SemanticError("component has more than ell rows");
        }
        comps_ = std::move(comps);
    }

    // Components listed left to right as displayed, i.e. (lambda_n, ..., lambda_1).
    static MultiPartition from_display(int ell, std::vector<Partition> left_to_right) {
        std::reverse(left_to_right.begin(), left_to_right.end());
        int n = static_cast<int>(left_to_right.size());
        return MultiPartition(n, ell, std::move(left_to_right));
    }

    int n() const { return n_; }
    int ell() const { return ell_; }

    const Partition& component(int s) const { return comps_.at(static_cast<std::size_t>(s - 1)); }

    int row_length(int s, int row) const {
        const Partition& p = component(s);
        return row <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(row - 1)] : 0;
    }

    int size() const {
        int total = 0;
        for (const auto& p : comps_)
            for (int r : p) total += r;
        return total;
    }

    // The unique addable cell of the given residue in component s, if any.
    bool addable_in(int s, int res, NodeRef* out = nullptr) const {
        for (int r = 1; r <= ell_; ++r) {
            int len = row_length(s, r);
            if (r > 1 && row_length(s, r - 1) <= len) continue;
            if (len + 1 - r + ell_ == res) {
                if (out) *out = NodeRef{s, r, len + 1};
                return true;
            }
        }
        return false;
    }

    bool removable_in(int s, int res, NodeRef* out = nullptr) const {
        const Partition& p = component(s);
        for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
            int len = p[static_cast<std::size_t>(r - 1)];
            if (row_length(s, r + 1) >= len) continue;
            if (len - r + ell_ == res) {
                if (out) *out = NodeRef{s, r, len};
                return true;
            }
        }
        return false;
    }

    void add_node(const NodeRef& node) {
        NodeRef cell;
        if (!addable_in(node.component, residue(node, ell_), &cell) || cell != node)
            throw SemanticError("cell is not addable");
        Partition& p = comps_.at(static_cast<std::size_t>(node.component - 1));
        if (node.row > static_cast<int>(p.size())) p.push_back(0);
        ++p[static_cast<std::size_t>(node.row - 1)];
    }

    // "[3,2,1][0][4][3,1]", components n down to 1.
    std::string render() const {
        std::string out;
        for (int s = n_; s >= 1; --s) {
            const Partition& p = component(s);
            out += "[";
            if (p.empty()) out += "0";
            for (std::size_t r = 0; r < p.size(); ++r) {
                if (r) out += ",";
                out += std::to_string(p[r]);
            }
            out += "]";
        }
        return out;
    }

    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    int n_ = 0;
    int ell_ = 1;
    std::vector<Partition> comps_;
};

// Sorted by node order: larger component index first.
inline std::vector<NodeRef> addable_nodes(const MultiPartition& mp, int res) {
    std::vector<NodeRef> out;
    for (int s = mp.n(); s >= 1; --s) {
        NodeRef node;
        if (mp.addable_in(s, res, &node)) out.push_back(node);
    }
    return out;
}

inline std::vector<NodeRef> removable_nodes(const MultiPartition& mp, int res) {
    std::vector<NodeRef> out;
    for (int s = mp.n(); s >= 1; --s) {
        NodeRef node;
        if (mp.removable_in(s, res, &node)) out.push_back(node);
    }
    return out;
}

// Bit s-1 stands for component s.
using ComponentSet = std::uint32_t;

inline int popcount(ComponentSet c) { return __builtin_popcount(c); }

inline std::vector<int> members_descending(ComponentSet c) {
    std::vector<int> out;
    for (int s = 32; s >= 1; --s)
        if (c & (ComponentSet{1} << (s - 1))) out.push_back(s);
    return out;
}

struct DegreeStep {
    int increment = 0;
    MultiPartition shape;
    std::vector<NodeRef> placed;
};

// Adds one node of residue res to every component of comps, leftmost first,
// and returns the degree contributed by this group.
inline DegreeStep degree_increment(const MultiPartition& shape, int res, ComponentSet comps) {
    DegreeStep st{0, shape, {}};
    for (int s : members_descending(comps)) {
        if (s > shape.n()) throw SemanticError("component index out of range");
        NodeRef node;
        if (!st.shape.addable_in(s, res, &node))
            throw SemanticError("no addable node of residue " + std::to_string(res) + " in component " +
                                std::to_string(s));
        st.shape.add_node(node);
        st.placed.push_back(node);
        for (const NodeRef& a : addable_nodes(st.shape, res))
            if (strictly_after(a, node)) ++st.increment;
        for (const NodeRef& r : removable_nodes(st.shape, res))
            if (strictly_after(r, node)) --st.increment;
    }
    int j = popcount(comps);
    st.increment -= j * (j - 1) / 2;
    return st;
}

struct EntryGroup {
    int residue = 0;
    std::vector<NodeRef> placements;  // left to right

    ComponentSet components() const {
        ComponentSet c = 0;
        for (const auto& nd : placements) c |= ComponentSet{1} << (nd.component - 1);
        return c;
    }

    friend bool operator==(const EntryGroup&, const EntryGroup&) = default;
};

/**
 * Standard n-multitableau whose entries come in groups: all nodes of one
 * group carry the same number, lie in distinct components and share a residue.
 */
class MultiTableau {
public:
    MultiTableau() = default;
    MultiTableau(int n, int ell) : shape_(n, ell) {}

    // Builds a tableau group by group; throws unless every placement is addable.
    MultiTableau(int n, int ell, const std::vector<EntryGroup>& groups) : shape_(n, ell) {
        for (const auto& g : groups) push_group(g);
    }

    // Components left to right, each a list of rows of entries.  Equal entries
    // form one group.
    static MultiTableau from_display(int ell, const std::vector<std::vector<std::vector<int>>>& left_to_right) {
        int n = static_cast<int>(left_to_right.size());
        std::map<int, std::vector<NodeRef>> by_entry;
        for (int idx = 0; idx < n; ++idx) {
            int s = n - idx;
            const auto& rows = left_to_right[static_cast<std::size_t>(idx)];
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < rows[r].size(); ++c)
                    by_entry[rows[r][c]].push_back(NodeRef{s, static_cast<int>(r) + 1, static_cast<int>(c) + 1});
        }
        MultiTableau t(n, ell);
        for (auto& [entry, nodes] : by_entry) {
            std::sort(nodes.begin(), nodes.end(), [](const NodeRef& a, const NodeRef& b) {
                return a.component > b.component;
            });
            int res = residue(nodes.front(), ell);
            for (const auto& nd : nodes)
                if (residue(nd, ell) != res) throw SemanticError("entry " + std::to_string(entry) + " has mixed residues");
            t.push_group(EntryGroup{res, nodes});
        }
        return t;
    }

    int n() const { return shape_.n(); }
    int ell() const { return shape_.ell(); }
    const MultiPartition& shape() const { return shape_; }
    const std::vector<EntryGroup>& groups() const { return groups_; }

    void push_group(EntryGroup g) {
        if (g.placements.empty()) throw SemanticError("empty entry group");
        std::sort(g.placements.begin(), g.placements.end(), [](const NodeRef& a, const NodeRef& b) {
            return a.component > b.component;
        });
        for (std::size_t i = 1; i < g.placements.size(); ++i)
            if (g.placements[i].component == g.placements[i - 1].component)
                throw SemanticError("entry group places two nodes in one component");
        for (const auto& nd : g.placements) {
            if (nd.component < 1 || nd.component > n()) throw SemanticError("component index out of range");
            if (residue(nd, ell()) != g.residue) throw SemanticError("node residue differs from its group");
            shape_.add_node(nd);
        }
        groups_.push_back(std::move(g));
    }

    // "([1 2/3], [], [4])", components left to right, entries are group numbers.
    std::string render() const {
        std::vector<std::vector<std::vector<int>>> grid(static_cast<std::size_t>(n()));
        for (std::size_t k = 0; k < groups_.size(); ++k) {
            for (const auto& nd : groups_[k].placements) {
                auto& rows = grid[static_cast<std::size_t>(nd.component - 1)];
                if (static_cast<int>(rows.size()) < nd.row) rows.resize(static_cast<std::size_t>(nd.row));
                auto& row = rows[static_cast<std::size_t>(nd.row - 1)];
                if (static_cast<int>(row.size()) < nd.col) row.resize(static_cast<std::size_t>(nd.col));
                row[static_cast<std::size_t>(nd.col - 1)] = static_cast<int>(k) + 1;
            }
        }
        std::string out = "(";
        for (int s = n(); s >= 1; --s) {
            if (s != n()) out += ", ";
            out += "[";
            const auto& rows = grid[static_cast<std::size_t>(s - 1)];
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r) out += "/";
                for (std::size_t c = 0; c < rows[r].size(); ++c) {
                    if (c) out += " ";
                    out += std::to_string(rows[r][c]);
                }
            }
            out += "]";
        }
        return out + ")";
    }

    friend bool operator==(const MultiTableau& a, const MultiTableau& b) {
        return a.shape_ == b.shape_ && a.groups_ == b.groups_;
    }

private:
    MultiPartition shape_;
    std::vector<EntryGroup> groups_;
};

inline int bkw_degree(const MultiTableau& t) {
    MultiPartition shape(t.n(), t.ell());
    int deg = 0;
    for (const auto& g : t.groups()) {
        DegreeStep st = degree_increment(shape, g.residue, g.components());
        if (st.placed != g.placements) throw SemanticError("tableau group disagrees with its shape");
        deg += st.increment;
        shape = std::move(st.shape);
    }
    return deg;
}

inline std::vector<std::pair<int, int>> residue_sequence(const MultiTableau& t) {
    std::vector<std::pair<int, int>> out;
    for (const auto& g : t.groups()) out.emplace_back(g.residue, static_cast<int>(g.placements.size()));
    return out;
}

enum class Dominance { LT, EQ, GT, INCOMPARABLE };

inline const char* to_string(Dominance d) {
    switch (d) {
    case Dominance::LT: return "LT";
    case Dominance::EQ: return "EQ";
    case Dominance::GT: return "GT";
    default: return "INCOMPARABLE";
    }
}

namespace detail {

// Cumulative sums, components from the left, rows top to bottom.
inline std::vector<int> dominance_profile(const MultiPartition& mp, int rows) {
    std::vector<int> out;
    int acc = 0;
    for (int s = mp.n(); s >= 1; --s)
        for (int r = 1; r <= rows; ++r) {
            acc += mp.row_length(s, r);
            out.push_back(acc);
        }
    return out;
}

inline Dominance compare_profiles(const std::vector<int>& a, const std::vector<int>& b) {
    bool le = true, ge = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) le = false;
        if (a[i] < b[i]) ge = false;
    }
    if (le && ge) return Dominance::EQ;
    if (le) return Dominance::LT;
    if (ge) return Dominance::GT;
    return Dominance::INCOMPARABLE;
}

inline int max_rows(const MultiPartition& mp) {
    int rows = 0;
    for (int s = 1; s <= mp.n(); ++s) rows = std::max(rows, static_cast<int>(mp.component(s).size()));
    return rows;
}

} // namespace detail

inline Dominance dominance_mp(const MultiPartition& a, const MultiPartition& b) {
    if (a.n() != b.n()) throw SemanticError("dominance: component counts differ");
    if (a.size() != b.size()) throw SemanticError("dominance: sizes differ");
    int rows = std::max(detail::max_rows(a), detail::max_rows(b));
    return detail::compare_profiles(detail::dominance_profile(a, rows), detail::dominance_profile(b, rows));
}

// Shapes after each single node, with group entries numbered left to right.
inline std::vector<MultiPartition> truncated_shapes(const MultiTableau& t) {
    std::vector<MultiPartition> out;
    MultiPartition shape(t.n(), t.ell());
    for (const auto& g : t.groups())
        for (const auto& nd : g.placements) {
            shape.add_node(nd);
            out.push_back(shape);
        }
    return out;
}

inline Dominance dominance_mt(const MultiTableau& a, const MultiTableau& b) {
    auto sa = truncated_shapes(a);
    auto sb = truncated_shapes(b);
    if (a.n() != b.n() || sa.size() != sb.size()) throw SemanticError("dominance: incompatible tableaux");
    bool le = true, ge = true;
    for (std::size_t j = 0; j < sa.size(); ++j) {
        switch (dominance_mp(sa[j], sb[j])) {
        case Dominance::LT: ge = false; break;
        case Dominance::GT: le = false; break;
        case Dominance::INCOMPARABLE: le = ge = false; break;
        case Dominance::EQ: break;
        }
    }
    if (le && ge) return Dominance::EQ;
    if (le) return Dominance::LT;
    if (ge) return Dominance::GT;
    return Dominance::INCOMPARABLE;
}

// Rows filled top to bottom, components left to right, single entries.
inline MultiTableau row_reading_tableau(const MultiPartition& shape) {
    MultiTableau t(shape.n(), shape.ell());
    for (int s = shape.n(); s >= 1; --s) {
        const Partition& p = shape.component(s);
        for (std::size_t r = 0; r < p.size(); ++r)
            for (int c = 1; c <= p[r]; ++c) {
                NodeRef nd{s, static_cast<int>(r) + 1, c};
                t.push_group(EntryGroup{residue(nd, shape.ell()), {nd}});
            }
    }
    return t;
}

namespace detail {

inline void subsets_from(ComponentSet pool, int size, ComponentSet chosen, int from,
                            const auto& visit) {
    if (size == 0) {
        visit(chosen);
        return;
    }
    for (int s = from; s >= 1; --s) {
        ComponentSet bit = ComponentSet{1} << (s - 1);
        if (!(pool & bit)) continue;
        if (popcount(pool & ((bit << 1) - 1)) < size) return;
        subsets_from(pool, size - 1, chosen | bit, s - 1, visit);
    }
}

} // namespace detail

// Calls visit(subset) for every subset of pool with the given size.
template <class Visit>
void for_each_subset(ComponentSet pool, int size, Visit&& visit) {
    if (size < 0 || size > popcount(pool)) return;
    detail::subsets_from(pool, size, ComponentSet{0}, 32, visit);
}

inline std::vector<MultiTableau> enumerate_standard(const MultiPartition& shape,
                                                    const std::vector<std::pair<int, int>>& rseq) {
    std::vector<MultiTableau> out;
    MultiTableau start(shape.n(), shape.ell());
    auto rec = [&](auto&& self, const MultiTableau& t, std::size_t k) -> void {
        if (k == rseq.size()) {
            if (t.shape() == shape) out.push_back(t);
            return;
        }
        auto [res, mult] = rseq[k];
        ComponentSet pool = 0;
        for (int s = 1; s <= shape.n(); ++s) {
            NodeRef nd;
            if (t.shape().addable_in(s, res, &nd) && nd.col <= shape.row_length(s, nd.row))
                pool |= ComponentSet{1} << (s - 1);
        }
        for_each_subset(pool, mult, [&](ComponentSet c) {
            MultiTableau next = t;
            EntryGroup g{res, {}};
            for (int s : members_descending(c)) {
                NodeRef nd;
                t.shape().addable_in(s, res, &nd);
                g.placements.push_back(nd);
            }
            next.push_group(std::move(g));
            self(self, next, k + 1);
        });
    };
    rec(rec, start, 0);
    return out;
}

} // namespace slnweb
