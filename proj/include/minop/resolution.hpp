#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minop/minimal_operad.hpp"

namespace minop {

// ---------------------------------------------------------------------------
// Free resolutions P_R for R in {M, As}.
//
// A meta-tree consists of a base abstract tree with n numbered tails (all
// internal valencies >= 2, children unordered), a finite/infinite mark on
// each internal edge, and an R-basis inscription at each internal vertex
// whose label set is identified with the vertex's children.  Since siblings
// have disjoint tail sets, every internal vertex (and hence every internal
// edge, identified with its lower vertex) is uniquely keyed by the set of
// tails below it; marks and inscriptions are keyed that way.  A child of a
// vertex is named by its minimal tail, and inscriptions use those names as
// labels.
//
// For R = As an inscription is stored as a flat corolla (non-labeled root
// whose children are labeled leaves in the chosen planar order); As
// composition splices child sequences, the counterpart of permutation
// composition in the regular representation.
// ---------------------------------------------------------------------------

enum class BaseOperad { M, As };

using TailSet = std::uint32_t;  // bit (i-1) set <=> tail i below

struct Shape {
    int tail = 0;  // > 0: leaf carrying that tail; 0: internal vertex
    std::vector<Shape> children;  // canonically sorted by minimal tail

    bool operator==(const Shape& o) const { return tail == o.tail && children == o.children; }
};

inline bool operator<(const Shape& a, const Shape& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                        b.children.begin(), b.children.end());
}

enum class Mark { finite, infinite };

struct MetaTree {
    BaseOperad r = BaseOperad::M;
    Shape base;
    std::map<TailSet, Mark> marks;      // one entry per internal edge
    std::map<TailSet, PlanarTree> ins;  // one entry per internal vertex

    bool operator==(const MetaTree& o) const {
        return r == o.r && base == o.base && marks == o.marks && ins == o.ins;
    }
};

inline bool operator<(const MetaTree& a, const MetaTree& b) {
    if (a.r != b.r) return a.r < b.r;
    if (!(a.base == b.base)) return a.base < b.base;
    if (a.marks != b.marks) return a.marks < b.marks;
    return a.ins < b.ins;
}

using PChainElement = std::map<MetaTree, Rational>;

// ---------------------------------------------------------------------------
// Shape utilities.
// ---------------------------------------------------------------------------
inline TailSet shape_tails(const Shape& s) {
    if (s.tail > 0) return TailSet{1} << (s.tail - 1);
    TailSet t = 0;
    for (const auto& c : s.children) t |= shape_tails(c);
    return t;
}

inline int min_tail(const Shape& s) {
    if (s.tail > 0) return s.tail;
    int m = 1 << 30;
    for (const auto& c : s.children) m = std::min(m, min_tail(c));
    return m;
}

// Internal vertices in depth-first preorder, as tail sets.
inline void shape_vertices(const Shape& s, std::vector<TailSet>& out) {
    if (s.tail > 0) return;
    out.push_back(shape_tails(s));
    for (const auto& c : s.children) shape_vertices(c, out);
}

// Internal edges (keyed by the child vertex) in depth-first preorder.
inline void shape_edges(const Shape& s, std::vector<TailSet>& out) {
    if (s.tail > 0) return;
    for (const auto& c : s.children) {
        if (c.tail == 0) out.push_back(shape_tails(c));
        shape_edges(c, out);
    }
}

inline const Shape* find_shape_vertex(const Shape& s, TailSet ts) {
    if (s.tail > 0) return nullptr;
    if (shape_tails(s) == ts) return &s;
    for (const auto& c : s.children) {
        const Shape* r = find_shape_vertex(c, ts);
        if (r) return r;
    }
    return nullptr;
}

inline bool find_parent_of(const Shape& s, TailSet ts, TailSet& out) {
    if (s.tail > 0) return false;
    for (const auto& c : s.children) {
        if (c.tail == 0 && shape_tails(c) == ts) {
            out = shape_tails(s);
            return true;
        }
        if (find_parent_of(c, ts, out)) return true;
    }
    return false;
}

// Child names (minimal tails) of an internal vertex, in canonical order.
inline std::vector<int> child_keys(const Shape& v) {
    std::vector<int> out;
    for (const auto& c : v.children) out.push_back(min_tail(c));
    return out;
}

// Merges the child vertex with tail set ts into its parent.
inline Shape contract_shape(const Shape& s, TailSet ts) {
    if (s.tail > 0) return s;
    Shape r;
    r.tail = 0;
    for (const auto& c : s.children) {
        if (c.tail == 0 && shape_tails(c) == ts) {
            for (const auto& cc : c.children) r.children.push_back(contract_shape(cc, ts));
        } else {
            r.children.push_back(contract_shape(c, ts));
        }
    }
    std::sort(r.children.begin(), r.children.end(),
              [](const Shape& a, const Shape& b) { return min_tail(a) < min_tail(b); });
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------
namespace detail {

// All shapes over a tail set (>= 2 tails: internal root; 1 tail: the leaf).
inline std::vector<Shape> shapes_over(const std::vector<int>& tails) {
    if (tails.size() == 1) return {Shape{tails[0], {}}};
    std::vector<Shape> out;
    // Partitions of the tail set into >= 2 blocks (first element anchors its
    // block to avoid duplicates); each block becomes a child: a leaf when a
    // singleton, otherwise recursively any shape over the block.
    std::vector<std::vector<std::vector<int>>> parts;
    auto rec = [&](auto&& self, std::vector<int> rest,
                   std::vector<std::vector<int>> acc) -> void {
        if (rest.empty()) {
            if (acc.size() >= 2) parts.push_back(acc);
            return;
        }
        int first = rest[0];
        std::vector<int> others(rest.begin() + 1, rest.end());
        size_t m = others.size();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> block{first}, rem;
            for (size_t i = 0; i < m; ++i)
                (mask >> i & 1 ? block : rem).push_back(others[i]);
            auto acc2 = acc;
            acc2.push_back(block);
            self(self, rem, acc2);
        }
    };
    rec(rec, tails, {});
    for (const auto& p : parts) {
        std::vector<std::vector<Shape>> options;
        for (const auto& block : p) options.push_back(shapes_over(block));
        std::vector<Shape> acc;
        auto emit = [&](auto&& self, size_t i) -> void {
            if (i == options.size()) {
                Shape v;
                v.tail = 0;
                v.children = acc;
                std::sort(v.children.begin(), v.children.end(),
                          [](const Shape& a, const Shape& b) {
                              return min_tail(a) < min_tail(b);
                          });
                out.push_back(v);
                return;
            }
            for (const auto& opt : options[i]) {
                acc.push_back(opt);
                self(self, i + 1);
                acc.pop_back();
            }
        };
        emit(emit, 0);
    }
    return out;
}

// Inscription choices for a vertex with the given child keys.
inline std::vector<PlanarTree> inscriptions_for(BaseOperad r, std::vector<int> keys) {
    if (r == BaseOperad::M) return enumerate_admissible_over(keys);
    // As: all orderings, as flat corollas.
    std::sort(keys.begin(), keys.end());
    std::vector<PlanarTree> out;
    do {
        PlanarTree c;
        c.label = 0;
        for (int k : keys) c.children.push_back(labeled_leaf(k));
        out.push_back(c);
    } while (std::next_permutation(keys.begin(), keys.end()));
    return out;
}

}  // namespace detail

// All basis elements of P_R with n tails: every shape, every finite/infinite
// marking, every inscription family.
inline std::vector<MetaTree> basis_P(BaseOperad r, int n) {
    if (n < 2) throw std::invalid_argument("basis_P: n >= 2 required");
    std::vector<int> tails(n);
    for (int i = 0; i < n; ++i) tails[i] = i + 1;
    std::vector<MetaTree> out;
    for (const auto& s : detail::shapes_over(tails)) {
        std::vector<TailSet> vs, es;
        shape_vertices(s, vs);
        shape_edges(s, es);
        std::vector<std::vector<PlanarTree>> ins_opts;
        for (TailSet ts : vs)
            ins_opts.push_back(
                detail::inscriptions_for(r, child_keys(*find_shape_vertex(s, ts))));
        size_t n_marks = size_t{1} << es.size();
        for (size_t mask = 0; mask < n_marks; ++mask) {
            MetaTree proto;
            proto.r = r;
            proto.base = s;
            for (size_t i = 0; i < es.size(); ++i)
                proto.marks[es[i]] = (mask >> i & 1) ? Mark::infinite : Mark::finite;
            std::vector<size_t> pick(vs.size(), 0);
            auto emit = [&](auto&& self, size_t i) -> void {
                if (i == vs.size()) {
                    MetaTree mt = proto;
                    for (size_t j = 0; j < vs.size(); ++j) mt.ins[vs[j]] = ins_opts[j][pick[j]];
                    out.push_back(mt);
                    return;
                }
                for (pick[i] = 0; pick[i] < ins_opts[i].size(); ++pick[i]) self(self, i + 1);
            };
            emit(emit, 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Generators of P (all internal edges finite).
inline std::vector<MetaTree> generators(BaseOperad r, int n) {
    std::vector<MetaTree> out;
    for (const auto& mt : basis_P(r, n)) {
        bool all_finite = true;
        for (const auto& [e, m] : mt.marks) all_finite = all_finite && (m == Mark::finite);
        if (all_finite) out.push_back(mt);
    }
    return out;
}

// deg(T) = sum of inscription degrees (zero for As) minus the number of
// finite edges.
inline int degree(const MetaTree& mt) {
    int d = 0;
    for (const auto& [e, m] : mt.marks)
        if (m == Mark::finite) --d;
    if (mt.r == BaseOperad::M)
        for (const auto& [v, t] : mt.ins) d += degree(t);
    return d;
}

inline int tail_count(const MetaTree& mt) {
    TailSet t = shape_tails(mt.base);
    int n = 0;
    while (t) {
        n += t & 1;
        t >>= 1;
    }
    return n;
}

// ---------------------------------------------------------------------------
// The differential d_P.
//
// Orientation word: one odd factor per finite edge in base-DFS order,
// followed by one factor of parity deg(T_v) per inscription in base-DFS
// order.  Three parts (nf = total number of finite edges, fpre(e) = finite
// edges DFS-before e):
//   (i)   d_R at vertex v, sign (-1)^{nf + sum of deg T_w over w DFS-before v};
//   (ii)  re-mark finite edge e infinite, sign (-1)^{fpre(e)};
//   (iii) contract finite edge e = (p -> c), composing T_p with T_c at the
//         label named by c, sign -(-1)^{fpre(e) + deg T_c * (sum of deg T_w
//         over vertices strictly between p and c in DFS)}.
// The global -1 on (iii) is pinned by the chain-map property of phi (d_P^2
// alone is insensitive to it).
// ---------------------------------------------------------------------------
namespace detail {

inline void p_add(PChainElement& acc, const MetaTree& mt, const Rational& c) {
    Rational& slot = acc[mt];
    slot += c;
    if (slot == 0) acc.erase(mt);
}

// As composition: splice the child corolla's leaves into the parent corolla
// at the leaf named key.
inline PlanarTree splice_as(const PlanarTree& parent, int key, const PlanarTree& child) {
    PlanarTree r;
    r.label = 0;
    for (const auto& leaf : parent.children) {
        if (leaf.label == key)
            for (const auto& cl : child.children) r.children.push_back(cl);
        else
            r.children.push_back(leaf);
    }
    return r;
}

}  // namespace detail

inline PChainElement d_P(const MetaTree& mt) {
    PChainElement out;
    std::vector<TailSet> vs, es;
    shape_vertices(mt.base, vs);
    shape_edges(mt.base, es);
    auto vindex = [&](TailSet ts) {
        for (size_t i = 0; i < vs.size(); ++i)
            if (vs[i] == ts) return i;
        throw std::logic_error("d_P: vertex not found");
    };
    std::map<TailSet, int> vdeg;
    for (TailSet v : vs) vdeg[v] = (mt.r == BaseOperad::M) ? degree(mt.ins.at(v)) : 0;
    int nf = 0;
    for (const auto& [e, m] : mt.marks)
        if (m == Mark::finite) ++nf;

    // (i) d_R on inscriptions (zero for As).
    if (mt.r == BaseOperad::M) {
        for (size_t vi = 0; vi < vs.size(); ++vi) {
            long pre = nf;
            for (size_t w = 0; w < vi; ++w) pre += vdeg[vs[w]];
            for (const auto& [t2, c] : differential(mt.ins.at(vs[vi]))) {
                MetaTree nxt = mt;
                nxt.ins[vs[vi]] = t2;
                detail::p_add(out, nxt, (pre % 2 != 0) ? -c : c);
            }
        }
    }

    for (size_t ei = 0; ei < es.size(); ++ei) {
        TailSet e = es[ei];
        if (mt.marks.at(e) != Mark::finite) continue;
        long fpre = 0;
        for (size_t j = 0; j < ei; ++j)
            if (mt.marks.at(es[j]) == Mark::finite) ++fpre;

        // (ii) re-mark infinite.
        {
            MetaTree nxt = mt;
            nxt.marks[e] = Mark::infinite;
            detail::p_add(out, nxt, (fpre % 2 != 0) ? -1 : 1);
        }

        // (iii) contract.
        TailSet p = 0;
        find_parent_of(mt.base, e, p);
        size_t pi = vindex(p), ci = vindex(e);
        long cross = 0;
        for (size_t w = pi + 1; w < ci; ++w) cross += vdeg[vs[w]];
        cross *= vdeg[e];
        int key = min_tail(*find_shape_vertex(mt.base, e));
        Rational base_sign = ((fpre + cross) % 2 != 0) ? 1 : -1;  // includes the global -1

        Shape s2 = contract_shape(mt.base, e);
        MetaTree proto;
        proto.r = mt.r;
        proto.base = s2;
        for (const auto& [e2, m2] : mt.marks)
            if (e2 != e) proto.marks[e2] = m2;
        for (const auto& [v2, t2] : mt.ins)
            if (v2 != e && v2 != p) proto.ins[v2] = t2;

        if (mt.r == BaseOperad::As) {
            MetaTree nxt = proto;
            nxt.ins[p] = detail::splice_as(mt.ins.at(p), key, mt.ins.at(e));
            detail::p_add(out, nxt, base_sign);
        } else {
            for (const auto& [tc, c] : compose(mt.ins.at(p), key, mt.ins.at(e))) {
                MetaTree nxt = proto;
                nxt.ins[p] = tc;
                detail::p_add(out, nxt, base_sign * c);
            }
        }
    }
    return out;
}

inline PChainElement d_P(const PChainElement& x) {
    PChainElement out;
    for (const auto& [mt, c] : x)
        for (const auto& [mt2, c2] : d_P(mt)) detail::p_add(out, mt2, c * c2);
    return out;
}

// ---------------------------------------------------------------------------
// phi: the augmentation P_R -> R.  Kills any meta-tree with a finite edge;
// on all-infinite meta-trees, contracts the DFS-first edge repeatedly with
// the (iii) crossing sign (but no edge factor and no global -1, since no
// finite-edge factors are present) and returns the composed inscription.
// psi is the tautological section: R-basis element -> single-vertex
// meta-tree.  phi(psi(r)) = r and phi is a chain map (certified by the
// resolution verify suite).
// ---------------------------------------------------------------------------
inline MChainElement phi(const MetaTree& mt) {
    for (const auto& [e, m] : mt.marks)
        if (m == Mark::finite) return {};
    PChainElement cur{{mt, Rational(1)}};
    while (true) {
        const MetaTree& probe = cur.begin()->first;
        std::vector<TailSet> es;
        shape_edges(probe.base, es);
        if (es.empty()) break;
        PChainElement nxt;
        for (const auto& [u, c] : cur) {
            std::vector<TailSet> vs2, es2;
            shape_vertices(u.base, vs2);
            shape_edges(u.base, es2);
            TailSet e = es2[0];
            TailSet p = 0;
            find_parent_of(u.base, e, p);
            size_t pi = 0, ci = 0;
            for (size_t i = 0; i < vs2.size(); ++i) {
                if (vs2[i] == p) pi = i;
                if (vs2[i] == e) ci = i;
            }
            long cross = 0;
            if (u.r == BaseOperad::M) {
                for (size_t w = pi + 1; w < ci; ++w) cross += degree(u.ins.at(vs2[w]));
                cross *= degree(u.ins.at(e));
            }
            Rational sgn = (cross % 2 != 0) ? -1 : 1;
            int key = min_tail(*find_shape_vertex(u.base, e));
            MetaTree proto;
            proto.r = u.r;
            proto.base = contract_shape(u.base, e);
            for (const auto& [e2, m2] : u.marks)
                if (e2 != e) proto.marks[e2] = m2;
            for (const auto& [v2, t2] : u.ins)
                if (v2 != e && v2 != p) proto.ins[v2] = t2;
            if (u.r == BaseOperad::As) {
                MetaTree m2 = proto;
                m2.ins[p] = detail::splice_as(u.ins.at(p), key, u.ins.at(e));
                detail::p_add(nxt, m2, c * sgn);
            } else {
                for (const auto& [tc, cc] : compose(u.ins.at(p), key, u.ins.at(e))) {
                    MetaTree m2 = proto;
                    m2.ins[p] = tc;
                    detail::p_add(nxt, m2, c * sgn * cc);
                }
            }
        }
        cur = std::move(nxt);
    }
    MChainElement out;
    for (const auto& [u, c] : cur) {
        const PlanarTree& t = u.ins.begin()->second;
        Rational& slot = out[t];
        slot += c;
        if (slot == 0) out.erase(t);
    }
    return out;
}

inline MChainElement phi(const PChainElement& x) {
    MChainElement out;
    for (const auto& [mt, c] : x) add_scaled(out, phi(mt), c);
    return out;
}

inline MetaTree psi(BaseOperad r, const PlanarTree& inscription) {
    MetaTree mt;
    mt.r = r;
    mt.base.tail = 0;
    std::vector<int> labs = labels_of(inscription);
    if (r == BaseOperad::As)
        for (const auto& c : inscription.children) labs.push_back(c.label);
    std::sort(labs.begin(), labs.end());
    labs.erase(std::unique(labs.begin(), labs.end()), labs.end());
    for (int l : labs) mt.base.children.push_back(Shape{l, {}});
    mt.ins[shape_tails(mt.base)] = inscription;
    return mt;
}

// ---------------------------------------------------------------------------
// Generator filtration weight.  Cutting the infinite edges of a d_P summand
// decomposes it into all-finite constituent generators; each constituent's
// weight (#finite edges, -sum of inscription edge counts), compared
// lexicographically, drops strictly below the input generator's weight.
// ---------------------------------------------------------------------------
struct FiltrationWeight {
    int finite_edges = 0;
    int neg_inscription_edges = 0;

    bool operator<(const FiltrationWeight& o) const {
        if (finite_edges != o.finite_edges) return finite_edges < o.finite_edges;
        return neg_inscription_edges < o.neg_inscription_edges;
    }
};

inline int inscription_edge_count(const PlanarTree& t) {
    int n = static_cast<int>(t.children.size());
    for (const auto& c : t.children) n += inscription_edge_count(c);
    return n;
}

inline FiltrationWeight weight_of(const MetaTree& mt) {
    FiltrationWeight w;
    for (const auto& [e, m] : mt.marks)
        if (m == Mark::finite) ++w.finite_edges;
    for (const auto& [v, t] : mt.ins) w.neg_inscription_edges -= inscription_edge_count(t);
    return w;
}

// Weights of the constituent generators obtained by cutting infinite edges.
inline std::vector<FiltrationWeight> constituent_weights(const MetaTree& mt) {
    // Component of a vertex: follow finite edges only.  Root each component
    // at the vertex whose parent edge is infinite (or the base root).
    std::vector<TailSet> vs;
    shape_vertices(mt.base, vs);
    std::map<TailSet, TailSet> comp;  // vertex -> component root
    for (TailSet v : vs) {
        TailSet cur = v;
        while (true) {
            TailSet p = 0;
            if (!find_parent_of(mt.base, cur, p)) break;         // base root
            if (mt.marks.at(cur) == Mark::infinite) break;       // cut here
            cur = p;
        }
        comp[v] = cur;
    }
    std::map<TailSet, FiltrationWeight> acc;
    for (TailSet v : vs) {
        FiltrationWeight& w = acc[comp[v]];
        w.neg_inscription_edges -= inscription_edge_count(mt.ins.at(v));
        TailSet p = 0;
        if (find_parent_of(mt.base, v, p) && mt.marks.at(v) == Mark::finite)
            ++w.finite_edges;
    }
    std::vector<FiltrationWeight> out;
    for (const auto& [root, w] : acc) out.push_back(w);
    return out;
}

namespace detail {

inline void encode_shape(const Shape& s, const MetaTree& mt, std::string& out) {
    if (s.tail > 0) {
        out += 't' + std::to_string(s.tail);
        return;
    }
    TailSet ts = shape_tails(s);
    out += '[';
    out += encode(mt.ins.at(ts));
    out += ']';
    out += '(';
    for (size_t i = 0; i < s.children.size(); ++i) {
        if (i) out += ',';
        const Shape& c = s.children[i];
        if (c.tail == 0) out += mt.marks.at(shape_tails(c)) == Mark::finite ? '-' : '~';
        encode_shape(c, mt, out);
    }
    out += ')';
}

}  // namespace detail

// Canonical text form of a meta-tree: each internal vertex prints its
// inscription in brackets followed by its children, internal children
// prefixed by their edge mark ('-' finite, '~' infinite).
inline std::string encode(const MetaTree& mt) {
    std::string out = mt.r == BaseOperad::M ? "M:" : "As:";
    detail::encode_shape(mt.base, mt, out);
    return out;
}

// ---------------------------------------------------------------------------
// The planar tail order of an As meta-tree (used for the K_n cell complex):
// read the tails depth-first with children visited in inscription order.
// ---------------------------------------------------------------------------
inline std::vector<int> planar_tail_order(const MetaTree& mt) {
    if (mt.r != BaseOperad::As)
        throw std::invalid_argument("planar_tail_order: As meta-trees only");
    std::vector<int> out;
    auto go = [&](auto&& self, const Shape& s) -> void {
        if (s.tail > 0) {
            out.push_back(s.tail);
            return;
        }
        const PlanarTree& order = mt.ins.at(shape_tails(s));
        for (const auto& leaf : order.children) {
            int key = leaf.label;
            for (const auto& c : s.children)
                if (min_tail(c) == key) self(self, c);
        }
    };
    go(go, mt.base);
    return out;
}

}  // namespace minop
