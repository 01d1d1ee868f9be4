#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "minop/rational.hpp"
#include "minop/sign.hpp"
#include "minop/tree.hpp"

namespace minop {

// A finite rational combination of basis trees (canonically ordered by the
// PlanarTree total order).  Zero coefficients are never stored.
using MChainElement = std::map<PlanarTree, Rational>;

inline void add_scaled(MChainElement& acc, const MChainElement& x, const Rational& c) {
    for (const auto& [t, v] : x) {
        Rational& slot = acc[t];
        slot += c * v;
        if (slot == 0) acc.erase(t);
    }
}

inline bool chain_is_zero(const MChainElement& x) { return x.empty(); }

namespace detail {

// Internal vertex-addressed trees: every vertex carries a unique id so that
// edges (identified with their lower vertex) keep their identity through
// grafting, which is what the Koszul edge-word signs are computed against.
struct IdTree {
    int id = 0;
    int label = 0;
    std::vector<IdTree> children;
};

inline IdTree assign_ids(const PlanarTree& t, int& counter) {
    IdTree r;
    r.id = counter++;
    r.label = t.label;
    for (const auto& c : t.children) r.children.push_back(assign_ids(c, counter));
    return r;
}

inline IdTree with_ids(const PlanarTree& t, int start) {
    int counter = start;
    return assign_ids(t, counter);
}

inline PlanarTree strip_ids(const IdTree& t) {
    PlanarTree r;
    r.label = t.label;
    for (const auto& c : t.children) r.children.push_back(strip_ids(c));
    return r;
}

// Edge list in depth-first preorder; an edge is keyed by the id of its lower
// (child) vertex.  The implicit root edge is not listed.
inline void dfs_edges(const IdTree& t, std::vector<int>& out) {
    for (const auto& c : t.children) {
        out.push_back(c.id);
        dfs_edges(c, out);
    }
}

inline std::vector<int> dfs_edges(const IdTree& t) {
    std::vector<int> out;
    dfs_edges(t, out);
    return out;
}

struct IdAngle {
    int vertex = 0;  // vertex id
    int slot = 0;
};

inline void id_angles(const IdTree& t, std::vector<IdAngle>& out) {
    out.push_back({t.id, 0});
    for (int i = 0; i < static_cast<int>(t.children.size()); ++i) {
        id_angles(t.children[i], out);
        out.push_back({t.id, i + 1});
    }
}

inline std::vector<IdAngle> id_angles(const IdTree& t) {
    std::vector<IdAngle> out;
    id_angles(t, out);
    return out;
}

inline const IdTree* find_vertex(const IdTree& t, int id) {
    if (t.id == id) return &t;
    for (const auto& c : t.children) {
        const IdTree* r = find_vertex(c, id);
        if (r) return r;
    }
    return nullptr;
}

inline IdTree replace_vertex(const IdTree& t, int id, const IdTree& sub) {
    if (t.id == id) return sub;
    IdTree r;
    r.id = t.id;
    r.label = t.label;
    for (const auto& c : t.children) r.children.push_back(replace_vertex(c, id, sub));
    return r;
}

inline void labeled_vertices(const IdTree& t, std::vector<std::pair<int, int>>& out) {
    if (t.label > 0) out.push_back({t.id, t.label});
    for (const auto& c : t.children) labeled_vertices(c, out);
}

inline int max_id(const IdTree& t) {
    int m = t.id;
    for (const auto& c : t.children) m = std::max(m, max_id(c));
    return m;
}

// Enumerates all weakly increasing k-tuples with entries in [0, m).
inline void multisets(int m, int k, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    int lo = acc.empty() ? 0 : acc.back();
    for (int v = lo; v < m; ++v) {
        acc.push_back(v);
        multisets(m, k, acc, out);
        acc.pop_back();
    }
}

using IdChain = std::map<PlanarTree, Rational>;

// compose(t1, vid, t2): sum over weakly monotone maps beta from the children
// of the labeled vertex vid to the angle list of t2 (boundary-walk order).
// The summand is t1 with vid's subtree replaced by a copy of t2 carrying the
// children distributed into the chosen angles; the copy's top vertex inherits
// vid's id (the edge above v keeps its identity).  The sign is the Koszul
// reordering sign from the concatenated edge word
//   [E(t1) preorder] ++ [E(t2) preorder minus the top]
// to the preorder edge word of the result; edges are odd (one L1* each), so
// the sign is the permutation parity.
inline IdChain compose_ids(const IdTree& t1, int vid, const IdTree& t2) {
    const IdTree* v = find_vertex(t1, vid);
    if (!v || v->label <= 0)
        throw std::invalid_argument("compose: insertion vertex is not labeled");
    const auto& kids = v->children;
    int k = static_cast<int>(kids.size());
    auto A = id_angles(t2);

    std::vector<int> e1 = dfs_edges(t1);
    std::vector<int> e2;
    for (int e : dfs_edges(t2))
        if (e != t2.id) e2.push_back(e);
    std::vector<int> src = e1;
    src.insert(src.end(), e2.begin(), e2.end());

    std::vector<std::vector<int>> betas;
    {
        std::vector<int> acc;
        multisets(static_cast<int>(A.size()), k, acc, betas);
    }

    IdChain out;
    for (const auto& beta : betas) {
        // insertion map: vertex id -> slot -> subtrees (in child order)
        std::map<int, std::map<int, std::vector<IdTree>>> ins;
        for (int kidx = 0; kidx < k; ++kidx) {
            const IdAngle& a = A[beta[kidx]];
            ins[a.vertex][a.slot].push_back(kids[kidx]);
        }
        auto rebuild = [&](auto&& self, const IdTree& u) -> IdTree {
            IdTree r;
            r.id = u.id;
            r.label = u.label;
            auto it = ins.find(u.id);
            auto slot_trees = [&](int s) -> const std::vector<IdTree>* {
                if (it == ins.end()) return nullptr;
                auto jt = it->second.find(s);
                return jt == it->second.end() ? nullptr : &jt->second;
            };
            if (const auto* pre = slot_trees(0))
                for (const auto& s : *pre) r.children.push_back(s);
            for (int i = 0; i < static_cast<int>(u.children.size()); ++i) {
                r.children.push_back(self(self, u.children[i]));
                if (const auto* post = slot_trees(i + 1))
                    for (const auto& s : *post) r.children.push_back(s);
            }
            return r;
        };
        IdTree t2b = rebuild(rebuild, t2);
        t2b.id = vid;  // the grafted copy hangs on v's edge
        IdTree result = replace_vertex(t1, vid, t2b);
        int sign = odd_word_reorder_sign(src, dfs_edges(result));
        PlanarTree key = strip_ids(result);
        Rational& slot = out[key];
        slot += sign;
        if (slot == 0) out.erase(key);
    }
    return out;
}

// Differential: per-vertex splits indexed by half-integers 1/2 <= i <= j <=
// k + 1/2 (represented as odd ints ii = 2i, jj = 2j).  The children strictly
// between i and j move to a new lower vertex; admissibility ranges:
//   non-labeled v:  j - i >= 2 and k - (j - i) >= 1;
//   labeled v:      label stays up with j - i >= 2, or goes down with
//                   k - (j - i) >= 1.
// The summand's sign is (-1)^{1 + pos} where pos is the index of the new
// edge in the preorder edge list of the result (equivalently: the new L1*
// factor is created in front and carried to its canonical slot).
inline IdChain differential_ids(const IdTree& tree) {
    IdChain out;
    int fresh = max_id(tree) + 1;
    std::vector<const IdTree*> stack{&tree};
    std::vector<const IdTree*> all;
    while (!stack.empty()) {
        const IdTree* u = stack.back();
        stack.pop_back();
        all.push_back(u);
        for (const auto& c : u->children) stack.push_back(&c);
    }
    for (const IdTree* v : all) {
        int k = static_cast<int>(v->children.size());
        const auto& kids = v->children;
        for (int ii = 1; ii <= 2 * k + 1; ii += 2) {
            for (int jj = ii; jj <= 2 * k + 1; jj += 2) {
                int span = (jj - ii) / 2;
                std::vector<IdTree> moved, before, after;
                for (int x = 0; x < k; ++x) {
                    int p = 2 * (x + 1);
                    if (p < ii)
                        before.push_back(kids[x]);
                    else if (p < jj)
                        moved.push_back(kids[x]);
                    else
                        after.push_back(kids[x]);
                }
                // (label of the upper vertex, label of the new lower vertex)
                std::vector<std::pair<int, int>> cases;
                if (v->label == 0) {
                    if (span >= 2 && (k - span) >= 1) cases.push_back({0, 0});
                } else {
                    if ((k - span) >= 1) cases.push_back({0, v->label});  // label down
                    if (span >= 2) cases.push_back({v->label, 0});       // label up
                }
                for (const auto& [lu, ld] : cases) {
                    IdTree vdown{fresh, ld, moved};
                    IdTree vup{v->id, lu, {}};
                    vup.children = before;
                    vup.children.push_back(vdown);
                    for (const auto& a : after) vup.children.push_back(a);
                    IdTree t2 = replace_vertex(tree, v->id, vup);
                    std::vector<int> el = dfs_edges(t2);
                    int pos = 0;
                    while (el[pos] != fresh) ++pos;
                    int sign = (pos % 2 == 0) ? -1 : 1;  // (-1)^{1+pos}
                    PlanarTree key = strip_ids(t2);
                    Rational& slot = out[key];
                    slot += sign;
                    if (slot == 0) out.erase(key);
                }
            }
        }
    }
    return out;
}

}  // namespace detail

// Number of summands of compose(T1, v, T2): the multiset coefficient
// C(|A(T2)| + |v| - 1, |v|).
inline Integer compose_summand_count(int n_angles, int valency) {
    Integer num = 1, den = 1;
    for (int i = 0; i < valency; ++i) {
        num *= n_angles + valency - 1 - i;
        den *= i + 1;
    }
    return num / den;
}

// Operadic composition at the vertex carrying `label`.  Label sets of
// T1 minus {label} and T2 must be disjoint.
inline MChainElement compose(const PlanarTree& t1, int label, const PlanarTree& t2) {
    auto l1 = labels_of(t1);
    auto l2 = labels_of(t2);
    bool found = false;
    for (int l : l1) found = found || (l == label);
    if (!found) throw std::invalid_argument("compose: label not present in T1");
    for (int a : l1)
        if (a != label)
            for (int b : l2)
                if (a == b) throw std::invalid_argument("compose: label collision");
    int counter = 0;
    detail::IdTree i1 = detail::assign_ids(t1, counter);
    detail::IdTree i2 = detail::assign_ids(t2, counter);
    std::vector<std::pair<int, int>> lv;
    detail::labeled_vertices(i1, lv);
    int vid = -1;
    for (const auto& [id, l] : lv)
        if (l == label) vid = id;
    return detail::compose_ids(i1, vid, i2);
}

inline MChainElement differential(const PlanarTree& t) {
    if (!is_admissible(t)) throw std::invalid_argument("differential: tree not admissible");
    return detail::differential_ids(detail::with_ids(t, 0));
}

inline MChainElement differential(const MChainElement& x) {
    MChainElement out;
    for (const auto& [t, c] : x) add_scaled(out, differential(t), c);
    return out;
}

inline MChainElement compose(const MChainElement& x, int label, const PlanarTree& t2) {
    MChainElement out;
    for (const auto& [t, c] : x) add_scaled(out, compose(t, label, t2), c);
    return out;
}

inline MChainElement compose(const PlanarTree& t1, int label, const MChainElement& y) {
    MChainElement out;
    for (const auto& [t, c] : y) add_scaled(out, compose(t1, label, t), c);
    return out;
}

}  // namespace minop
