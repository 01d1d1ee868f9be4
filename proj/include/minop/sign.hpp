#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace minop {

// ---------------------------------------------------------------------------
// Koszul sign bookkeeping.
//
// Basis elements are oriented by tensor words in the graded lines L1 (degree
// -1) and L2 (degree -2) and their duals: one factor per generator identity
// (an edge, a label, or a global factor).  Only the parity of each factor
// matters for signs; we carry the integer degree anyway so that the word's
// total degree can be cross-checked against the combinatorial degree formula.
// ---------------------------------------------------------------------------
struct OrientationFactor {
    std::string id;  // generator identity: which edge / which label / global
    int degree = 0;  // +1 for L1*, -1 for L1, +2 for L2*, -2 for L2
};

using OrientationWord = std::vector<OrientationFactor>;

inline int total_degree(const OrientationWord& w) {
    int d = 0;
    for (const auto& f : w) d += f.degree;
    return d;
}

// Parity of a permutation given as the image sequence perm[i] = position in
// the source the i-th target factor comes from, restricted to odd positions.
// Quadratic inversion count; word lengths here are tiny.
inline int permutation_parity(const std::vector<int>& perm) {
    int s = 1;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) s = -s;
    return s;
}

// Sign of reordering the word by pi (pi[i] = source position of the i-th
// factor of the reordered word): the parity of pi restricted to odd-degree
// factors.  Multiplicative in pi.
inline int koszul_sign(const OrientationWord& w, const std::vector<int>& pi) {
    if (pi.size() != w.size())
        throw std::invalid_argument("koszul_sign: length mismatch");
    std::vector<int> odd_positions;
    for (int src : pi) {
        if (src < 0 || src >= static_cast<int>(w.size()))
            throw std::invalid_argument("koszul_sign: invalid permutation");
        if (w[src].degree % 2 != 0) odd_positions.push_back(src);
    }
    return permutation_parity(odd_positions);
}

// Convenience used by tree composition: the Koszul sign of reordering a word
// of all-odd factors identified by integer keys.  src and tgt list the same
// keys in two orders.
inline int odd_word_reorder_sign(const std::vector<int>& src,
                                 const std::vector<int>& tgt) {
    if (src.size() != tgt.size())
        throw std::invalid_argument("odd_word_reorder_sign: length mismatch");
    std::vector<int> pos(0);
    std::vector<int> perm;
    perm.reserve(tgt.size());
    for (int key : tgt) {
        int p = -1;
        for (size_t i = 0; i < src.size(); ++i)
            if (src[i] == key) {
                p = static_cast<int>(i);
                break;
            }
        if (p < 0) throw std::invalid_argument("odd_word_reorder_sign: key mismatch");
        perm.push_back(p);
    }
    return permutation_parity(perm);
}

// Contract a dual pair at positions i (dual factor) and j (its partner):
// returns the Koszul sign of moving them adjacent and the word with both
// factors removed.
struct PairResult {
    int sign = 1;
    OrientationWord contracted;
};

inline PairResult pair(const OrientationWord& w, size_t i, size_t j) {
    if (i >= w.size() || j >= w.size() || i == j)
        throw std::invalid_argument("pair: invalid positions");
    if (w[i].degree + w[j].degree != 0)
        throw std::invalid_argument("pair: factors are not dual");
    size_t lo = std::min(i, j), hi = std::max(i, j);
    // Move the factor at hi left until it sits next to lo; each swap with an
    // intermediate factor costs (-1)^{deg(hi) * deg(mid)}.
    int s = 1;
    if (w[hi].degree % 2 != 0) {
        for (size_t k = lo + 1; k < hi; ++k)
            if (w[k].degree % 2 != 0) s = -s;
    }
    PairResult r;
    r.sign = s;
    for (size_t k = 0; k < w.size(); ++k)
        if (k != i && k != j) r.contracted.push_back(w[k]);
    return r;
}

}  // namespace minop
