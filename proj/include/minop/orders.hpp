#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "minop/resolution.hpp"

namespace minop {

// ---------------------------------------------------------------------------
// Horizontal/vertical complementary partial orders on the tails of a
// P-generator over M.
//
// For tails i != j: let v be the minimal common ancestor vertex of the base
// tree; i and j descend through distinct children of v, named by their
// minimal tails ki, kj, which are labels of the inscribed tree T_v.  With x
// the vertex of T_v labeled ki and y the one labeled kj:
//   - y above x (y on the root path of x... i.e. x = N^a(y))    => vertical;
//     orientation: i <_v j iff y is above x (x an ancestor... see below);
//   - otherwise x and y diverge, and the planar order at the first
//     divergence decides: x left of y  => i <_h j.
// Concretely on root paths px, py of x and y: if px is a prefix of py then x
// is above y and j <_v i; if py is a prefix of px then i <_v j; otherwise
// compare the child indices at the first divergence.
// ---------------------------------------------------------------------------
struct OrderPair {
    int n = 0;
    // lt[rel][i][j] == true iff i < j under rel; rel 0 = horizontal, 1 = vertical.
    std::vector<std::vector<bool>> h, v;

    bool lt_h(int i, int j) const { return h[i - 1][j - 1]; }
    bool lt_v(int i, int j) const { return v[i - 1][j - 1]; }
};

namespace detail {

// Root path of the vertex labeled `label` as a sequence of child indices.
inline bool path_to_label(const PlanarTree& t, int label, std::vector<int>& path) {
    if (t.label == label) return true;
    for (int i = 0; i < static_cast<int>(t.children.size()); ++i) {
        path.push_back(i);
        if (path_to_label(t.children[i], label, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

inline OrderPair tail_orders(const MetaTree& g) {
    if (g.r != BaseOperad::M)
        throw std::invalid_argument("tail_orders: generator over M expected");
    for (const auto& [e, m] : g.marks)
        if (m != Mark::finite)
            throw std::invalid_argument("tail_orders: not a generator (infinite edge)");
    int n = tail_count(g);
    OrderPair p;
    p.n = n;
    p.h.assign(n, std::vector<bool>(n, false));
    p.v.assign(n, std::vector<bool>(n, false));
    std::vector<TailSet> vs;
    shape_vertices(g.base, vs);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            TailSet need = (TailSet{1} << (i - 1)) | (TailSet{1} << (j - 1));
            TailSet best = 0;
            for (TailSet v : vs)
                if ((v & need) == need && (best == 0 || __builtin_popcount(v) <
                                                           __builtin_popcount(best)))
                    best = v;
            const Shape* vtx = find_shape_vertex(g.base, best);
            int ki = 0, kj = 0;
            for (const auto& c : vtx->children) {
                TailSet ct = shape_tails(c);
                if (ct & (TailSet{1} << (i - 1))) ki = min_tail(c);
                if (ct & (TailSet{1} << (j - 1))) kj = min_tail(c);
            }
            const PlanarTree& T = g.ins.at(best);
            std::vector<int> pi, pj;
            detail::path_to_label(T, ki, pi);
            detail::path_to_label(T, kj, pj);
            size_t common = 0;
            while (common < pi.size() && common < pj.size() && pi[common] == pj[common])
                ++common;
            if (common == pi.size()) {
                // x above y: the vertical pair oriented j < i.
                p.v[j - 1][i - 1] = true;
            } else if (common == pj.size()) {
                // y above x: i <_v j.
                p.v[i - 1][j - 1] = true;
            } else if (pi[common] < pj[common]) {
                p.h[i - 1][j - 1] = true;  // x left of y
            } else {
                p.h[j - 1][i - 1] = true;
            }
        }
    }
    return p;
}

// Every unordered pair comparable under exactly one of the two relations.
inline bool is_complementary(const OrderPair& p) {
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            int cnt = (p.h[i][j] ? 1 : 0) + (p.h[j][i] ? 1 : 0) + (p.v[i][j] ? 1 : 0) +
                      (p.v[j][i] ? 1 : 0);
            if (cnt != 1) return false;
        }
    for (int i = 0; i < p.n; ++i)
        if (p.h[i][i] || p.v[i][i]) return false;
    return true;
}

inline bool is_strict_partial_order(const std::vector<std::vector<bool>>& lt) {
    int n = static_cast<int>(lt.size());
    for (int i = 0; i < n; ++i) {
        if (lt[i][i]) return false;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (lt[i][j] && lt[j][k] && !lt[i][k]) return false;
    }
    return true;
}

// The two combined total orders:  <_{1+2}: i < j iff i <_h j or i <_v j;
// <_{1-2}: i < j iff i <_h j or j <_v i.  Returned as element sequences in
// increasing order; throws unless the input is complementary and the
// combinations really are total orders.
struct CombinedOrders {
    std::vector<int> plus;   // <_{1+2} from smallest to largest
    std::vector<int> minus;  // <_{1-2} from smallest to largest
};

namespace detail {

inline std::vector<int> sort_total(int n, const std::vector<std::vector<bool>>& lt) {
    // Verify totality and transitivity, then read off the linear order.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && lt[i][j] == lt[j][i])
                throw std::invalid_argument("combined_orders: relation is not total");
    if (!is_strict_partial_order(lt))
        throw std::invalid_argument("combined_orders: relation is not transitive");
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) out.push_back(i);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return lt[a - 1][b - 1]; });
    return out;
}

}  // namespace detail

inline CombinedOrders combined_orders(const OrderPair& p) {
    if (!is_complementary(p))
        throw std::invalid_argument("combined_orders: input pair is not complementary");
    int n = p.n;
    std::vector<std::vector<bool>> plus(n, std::vector<bool>(n, false)),
        minus(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            plus[i][j] = p.h[i][j] || p.v[i][j];
            minus[i][j] = p.h[i][j] || p.v[j][i];
        }
    CombinedOrders c;
    c.plus = detail::sort_total(n, plus);
    c.minus = detail::sort_total(n, minus);
    return c;
}

// Reconstruction: i <_h j iff i precedes j in both total orders; i <_v j iff
// i precedes j in <_{1+2} and j precedes i in <_{1-2}.
inline OrderPair reconstruct(const CombinedOrders& c) {
    int n = static_cast<int>(c.plus.size());
    std::vector<int> rp(n + 1), rm(n + 1);
    for (int i = 0; i < n; ++i) rp[c.plus[i]] = i;
    for (int i = 0; i < n; ++i) rm[c.minus[i]] = i;
    OrderPair p;
    p.n = n;
    p.h.assign(n, std::vector<bool>(n, false));
    p.v.assign(n, std::vector<bool>(n, false));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool ip = rp[i] < rp[j], im = rm[i] < rm[j];
            if (ip && im) p.h[i - 1][j - 1] = true;
            if (ip && !im) p.v[i - 1][j - 1] = true;
        }
    return p;
}

// The unique element below every other in <_h or <_v; equals the minimum of
// <_{1+2}.  Throws if not unique (cannot happen for a complementary pair).
inline int minimal_element(const OrderPair& p) {
    if (!is_complementary(p))
        throw std::invalid_argument("minimal_element: input pair is not complementary");
    std::vector<int> mins;
    for (int s = 1; s <= p.n; ++s) {
        bool ok = true;
        for (int t = 1; t <= p.n; ++t)
            if (t != s) ok = ok && (p.lt_h(s, t) || p.lt_v(s, t));
        if (ok) mins.push_back(s);
    }
    if (mins.size() != 1)
        throw std::logic_error("minimal_element: minimum not unique");
    return mins[0];
}

// ---------------------------------------------------------------------------
// The poset on meta-trees: the transitive closure of "appears as a summand
// of d_P", on basis_P(M, n) restricted to a degree window.  Graded by
// degree, hence antisymmetric; covering relations are the pre-closure
// summand relations.
// ---------------------------------------------------------------------------
struct MetaTreePoset {
    std::vector<MetaTree> elements;                 // canonical order
    std::vector<std::pair<int, int>> covers;        // (i, j): elements[j] in d_P(elements[i])
    std::vector<std::pair<int, int>> closure;       // transitive closure of covers
    std::map<int, int> count_by_degree;
};

inline MetaTreePoset meta_tree_poset(int n, int degree_min, int degree_max) {
    MetaTreePoset out;
    std::map<MetaTree, int> index;
    for (const auto& mt : basis_P(BaseOperad::M, n)) {
        int d = degree(mt);
        if (d < degree_min || d > degree_max) continue;
        index[mt] = static_cast<int>(out.elements.size());
        out.elements.push_back(mt);
        out.count_by_degree[d]++;
    }
    std::set<std::pair<int, int>> closure;
    for (size_t i = 0; i < out.elements.size(); ++i) {
        for (const auto& [u, c] : d_P(out.elements[i])) {
            auto it = index.find(u);
            if (it == index.end()) continue;
            out.covers.push_back({static_cast<int>(i), it->second});
            closure.insert({static_cast<int>(i), it->second});
        }
    }
    // Floyd-Warshall style closure; sizes are desk scale.
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::pair<int, int>> add;
        for (const auto& [a, b] : closure)
            for (const auto& [c, d] : closure)
                if (b == c && !closure.count({a, d})) add.insert({a, d});
        if (!add.empty()) {
            changed = true;
            closure.insert(add.begin(), add.end());
        }
    }
    out.closure.assign(closure.begin(), closure.end());
    return out;
}

}  // namespace minop
