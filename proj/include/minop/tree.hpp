#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace minop {

// ---------------------------------------------------------------------------
// Planar rooted trees.
//
// A vertex label is encoded in a single int:
//   label > 0  : a labeled internal vertex carrying that label;
//   label == 0 : a non-labeled internal vertex;
//   label < 0  : the numbered tail -label (tails appear only in insertion
//                scaffolds such as corollas and in meta-tree bases; an
//                admissible tree never contains one).
//
// Children are stored in planar (left-to-right) order.  The implicit root
// edge above the top vertex is never materialised.
// ---------------------------------------------------------------------------
struct PlanarTree {
    int label = 0;
    std::vector<PlanarTree> children;

    bool operator==(const PlanarTree& o) const {
        return label == o.label && children == o.children;
    }
    bool operator!=(const PlanarTree& o) const { return !(*this == o); }
};

// Deterministic total order (label first, then children lexicographically);
// this is the canonical basis order used for chain-element maps and matrix
// column ordering everywhere downstream.
inline bool operator<(const PlanarTree& a, const PlanarTree& b) {
    if (a.label != b.label) return a.label < b.label;
    return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                        b.children.begin(), b.children.end());
}

inline PlanarTree labeled_leaf(int l) { return PlanarTree{l, {}}; }
inline PlanarTree tail_leaf(int i) { return PlanarTree{-i, {}}; }

inline bool is_tail(const PlanarTree& t) { return t.label < 0; }
inline bool is_labeled(const PlanarTree& t) { return t.label > 0; }

// deg(T) = sum over labeled vertices of (-|v|)  +  sum over non-labeled
// vertices of (2 - |v|), where |v| is the number of children.  Equals
// |E_i(T)| + 2 - 2 * #labels for admissible trees.
inline int degree(const PlanarTree& t) {
    int k = static_cast<int>(t.children.size());
    int d = is_labeled(t) ? -k : (2 - k);
    for (const auto& c : t.children) d += degree(c);
    return d;
}

inline void collect_labels(const PlanarTree& t, std::vector<int>& out) {
    if (is_labeled(t)) out.push_back(t.label);
    for (const auto& c : t.children) collect_labels(c, out);
}

inline std::vector<int> labels_of(const PlanarTree& t) {
    std::vector<int> out;
    collect_labels(t, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline int count_vertices(const PlanarTree& t) {
    int n = 1;
    for (const auto& c : t.children) n += count_vertices(c);
    return n;
}

inline int max_valency(const PlanarTree& t) {
    int m = static_cast<int>(t.children.size());
    for (const auto& c : t.children) m = std::max(m, max_valency(c));
    return m;
}

// Number of angles: sum over internal vertices of (|v| + 1).
inline int angle_count(const PlanarTree& t) {
    if (is_tail(t)) return 0;
    int n = static_cast<int>(t.children.size()) + 1;
    for (const auto& c : t.children) n += angle_count(c);
    return n;
}

// Angle list in boundary-walk (left-to-right) order.  An angle is a pair
// (preorder index of its vertex, slot); slot s at a vertex with children
// c_1..c_k means the angle between c_s and c_{s+1} (slot 0 before c_1,
// slot k after c_k).
struct Angle {
    int vertex = 0;  // preorder index
    int slot = 0;
};

inline std::vector<Angle> angles(const PlanarTree& t) {
    std::vector<Angle> out;
    int counter = 0;
    auto go = [&](auto&& self, const PlanarTree& u) -> void {
        int me = counter++;
        out.push_back({me, 0});
        for (int i = 0; i < static_cast<int>(u.children.size()); ++i) {
            self(self, u.children[i]);
            out.push_back({me, i + 1});
        }
    };
    go(go, t);
    return out;
}

// ---------------------------------------------------------------------------
// Admissibility (basis condition of the minimal operad): no tails, and every
// non-labeled vertex has at least two children.
// ---------------------------------------------------------------------------
inline bool is_admissible(const PlanarTree& t) {
    if (is_tail(t)) return false;
    if (!is_labeled(t) && t.children.size() < 2) return false;
    for (const auto& c : t.children)
        if (!is_admissible(c)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Canonical encoding.
//
// Depth-first serialisation from the root, children in planar order:
//   labeled vertex "7", non-labeled "*", tail "t3"; a non-empty child list is
//   rendered "(c1,c2,...)".  decode(encode(T)) == T for every tree.
// ---------------------------------------------------------------------------
inline void encode_into(const PlanarTree& t, std::string& out) {
    if (t.label > 0)
        out += std::to_string(t.label);
    else if (t.label == 0)
        out += '*';
    else {
        out += 't';
        out += std::to_string(-t.label);
    }
    if (!t.children.empty()) {
        out += '(';
        for (size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += ',';
            encode_into(t.children[i], out);
        }
        out += ')';
    }
}

inline std::string encode(const PlanarTree& t) {
    std::string s;
    encode_into(t, s);
    return s;
}

inline PlanarTree decode_at(const std::string& s, size_t& pos) {
    PlanarTree t;
    if (pos >= s.size()) throw std::invalid_argument("tree encoding: truncated");
    if (s[pos] == '*') {
        t.label = 0;
        ++pos;
    } else {
        bool tail = false;
        if (s[pos] == 't') {
            tail = true;
            ++pos;
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("tree encoding: expected label");
        int v = std::stoi(s.substr(start, pos - start));
        t.label = tail ? -v : v;
    }
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            t.children.push_back(decode_at(s, pos));
            if (pos >= s.size()) throw std::invalid_argument("tree encoding: unclosed '('");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            throw std::invalid_argument("tree encoding: expected ',' or ')'");
        }
    }
    return t;
}

inline PlanarTree decode(const std::string& s) {
    size_t pos = 0;
    PlanarTree t = decode_at(s, pos);
    if (pos != s.size()) throw std::invalid_argument("tree encoding: trailing input");
    return t;
}

// ---------------------------------------------------------------------------
// Relabeling (symmetric-group action).  sigma maps old label -> new label and
// must be a bijection of the tree's label set.
// ---------------------------------------------------------------------------
inline PlanarTree relabel(const PlanarTree& t, const std::map<int, int>& sigma) {
    {
        std::map<int, int> seen;
        for (const auto& [k, v] : sigma) seen[v]++;
        for (const auto& [v, c] : seen)
            if (c != 1) throw std::invalid_argument("relabel: sigma is not a bijection");
    }
    auto go = [&](auto&& self, const PlanarTree& u) -> PlanarTree {
        PlanarTree r;
        r.label = u.label;
        if (is_labeled(u)) {
            auto it = sigma.find(u.label);
            if (it == sigma.end())
                throw std::invalid_argument("relabel: label not in sigma's domain");
            r.label = it->second;
        }
        for (const auto& c : u.children) r.children.push_back(self(self, c));
        return r;
    };
    return go(go, t);
}

// ---------------------------------------------------------------------------
// Enumeration of admissible trees over a given label set, one representative
// per isomorphism class (the automorphism group of a labeled planar tree is
// trivial, so "representative" simply means the tree itself).
//
// Recursion: a tree over label set S either has a labeled root l in S, with
// the remaining labels split into an ordered sequence of >= 0 blocks carrying
// the subtrees, or a non-labeled root with >= 2 ordered blocks.  Every leaf
// is labeled and non-labeled vertices branch >= 2 ways, which bounds the
// vertex count by 2n-1 non-labeled plus n labeled and makes the recursion
// finite.
// ---------------------------------------------------------------------------
namespace detail {

inline void ordered_partitions(const std::vector<int>& s, size_t min_blocks,
                               std::vector<std::vector<std::vector<int>>>& out) {
    // All set partitions of s, then all orderings of the blocks.
    std::vector<std::vector<std::vector<int>>> parts;
    auto rec = [&](auto&& self, std::vector<int> rest,
                   std::vector<std::vector<int>> acc) -> void {
        if (rest.empty()) {
            parts.push_back(acc);
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
    rec(rec, s, {});
    for (auto& p : parts) {
        if (p.size() < min_blocks) continue;
        std::sort(p.begin(), p.end());
        do {
            out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

inline std::vector<PlanarTree> trees_over(const std::vector<int>& s);

inline void cartesian(const std::vector<std::vector<int>>& blocks, size_t i,
                      std::vector<PlanarTree>& acc, int root_label,
                      std::vector<PlanarTree>& out) {
    if (i == blocks.size()) {
        PlanarTree t;
        t.label = root_label;
        t.children = acc;
        out.push_back(t);
        return;
    }
    for (const auto& sub : trees_over(blocks[i])) {
        acc.push_back(sub);
        cartesian(blocks, i + 1, acc, root_label, out);
        acc.pop_back();
    }
}

inline std::vector<PlanarTree> trees_over(const std::vector<int>& s) {
    std::vector<PlanarTree> out;
    // Labeled root.
    for (int l : s) {
        std::vector<int> rest;
        for (int x : s)
            if (x != l) rest.push_back(x);
        if (rest.empty()) {
            out.push_back(labeled_leaf(l));
            continue;
        }
        std::vector<std::vector<std::vector<int>>> parts;
        ordered_partitions(rest, 1, parts);
        for (const auto& p : parts) {
            std::vector<PlanarTree> acc;
            cartesian(p, 0, acc, l, out);
        }
    }
    // Non-labeled root: needs >= 2 blocks.
    if (s.size() >= 2) {
        std::vector<std::vector<std::vector<int>>> parts;
        ordered_partitions(s, 2, parts);
        for (const auto& p : parts) {
            std::vector<PlanarTree> acc;
            cartesian(p, 0, acc, 0, out);
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<PlanarTree> enumerate_admissible_over(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    auto out = detail::trees_over(labels);
    std::sort(out.begin(), out.end());
    return out;
}

// Basis of M_n: admissible trees over {1..n}; n == 0 yields the empty list
// (M_0 = 0).
inline std::vector<PlanarTree> enumerate_admissible(int n) {
    if (n <= 0) return {};
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    return enumerate_admissible_over(labels);
}

// The unit tree T_e: a single labeled vertex.
inline PlanarTree unit_tree(int label = 1) { return labeled_leaf(label); }

// ---------------------------------------------------------------------------
// AbstractTree: the raw parent-map presentation, validated against the
// defining axioms.  Used as the audited front door for tree data coming from
// outside; internally everything runs on PlanarTree.
// ---------------------------------------------------------------------------
struct AbstractTree {
    int n_vertices = 0;
    int root = 0;                 // index of the root vertex
    std::vector<int> parent;      // parent[v] = N(v); N(root) == root
    std::vector<bool> is_tail_v;  // tail vertices (must be leaves of N)
};

struct Validity {
    bool ok = true;
    std::string violation;  // first violated axiom, empty when ok
};

inline Validity validate(const AbstractTree& t) {
    auto fail = [](std::string m) { return Validity{false, std::move(m)}; };
    int n = t.n_vertices;
    if (n <= 0) return fail("empty vertex set");
    if (static_cast<int>(t.parent.size()) != n ||
        static_cast<int>(t.is_tail_v.size()) != n)
        return fail("partition broken: field sizes disagree with vertex count");
    if (t.root < 0 || t.root >= n) return fail("root outside vertex set");
    if (t.parent[t.root] != t.root) return fail("N(root) != root");
    if (t.is_tail_v[t.root]) return fail("partition broken: root marked as tail");
    // No cycles: every vertex reaches the root.
    for (int v = 0; v < n; ++v) {
        int u = v;
        for (int steps = 0; u != t.root; ++steps) {
            if (t.parent[u] < 0 || t.parent[u] >= n)
                return fail("parent map leaves vertex set");
            if (steps > n) return fail("no cycles: N^k(v) never reaches root");
            u = t.parent[u];
        }
    }
    // No vertex maps to a tail vertex.
    for (int v = 0; v < n; ++v)
        if (v != t.root && t.is_tail_v[t.parent[v]])
            return fail("tail has preimage");
    // Exactly one vertex != root with N(v) == root.
    int root_children = 0;
    for (int v = 0; v < n; ++v)
        if (v != t.root && t.parent[v] == t.root) ++root_children;
    if (root_children != 1 && n > 1)
        return fail("multiple root children (unique root edge violated)");
    if (n > 1 && root_children == 0) return fail("root has no child");
    return {};
}

}  // namespace minop
