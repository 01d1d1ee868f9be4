#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minop/rational.hpp"

namespace minop {

// ---------------------------------------------------------------------------
// Finite-dimensional graded vector space with a named basis.
// ---------------------------------------------------------------------------
struct GradedSpace {
    std::vector<std::string> names;  // basis element names
    std::vector<int> degrees;        // degrees[i] = |e_i|

    int dim() const { return static_cast<int>(degrees.size()); }
    int deg(int i) const { return degrees.at(i); }
};

inline GradedSpace make_space(std::vector<int> degrees) {
    GradedSpace s;
    s.degrees = std::move(degrees);
    for (size_t i = 0; i < s.degrees.size(); ++i) s.names.push_back("e" + std::to_string(i));
    return s;
}

// ---------------------------------------------------------------------------
// Hochschild cochains with an arity cap.
//
// A cochain is an arity-indexed family of multilinear maps A^{ox k} -> A
// stored as sparse tables keyed by (input basis tuple, output basis index).
// The *total* degree of a homogeneous cochain is map_degree + arity: this is
// the [-n]-shifted grading of C(A,A) = prod_n Hom(A^{ox n}, A)[-n], fixed
// once and used everywhere.  The shifted (Lie) degree is total_degree - 1.
//
// Components of arity > cap are unknown, not zero: `exact_up_to` records the
// largest output arity whose table is known exactly, and truncation-aware
// operations propagate it conservatively.
// ---------------------------------------------------------------------------
struct Cochain {
    using Key = std::pair<std::vector<int>, int>;  // (inputs, output)
    using Table = std::map<Key, Rational>;

    int total_degree = 0;
    int cap = 0;
    int exact_up_to = 0;  // components with arity <= exact_up_to are exact
    std::map<int, Table> tables;

    int shifted_degree() const { return total_degree - 1; }
};

inline Cochain make_cochain(int total_degree, int cap) {
    Cochain c;
    c.total_degree = total_degree;
    c.cap = cap;
    c.exact_up_to = cap;
    return c;
}

inline void cochain_set(Cochain& c, const std::vector<int>& inputs, int output,
                        const Rational& v) {
    int k = static_cast<int>(inputs.size());
    if (k > c.cap) throw std::invalid_argument("cochain_set: arity above cap");
    if (v == 0)
        c.tables[k].erase({inputs, output});
    else
        c.tables[k][{inputs, output}] = v;
}

// Smallest arity carrying a nonzero component (cap + 1 when identically zero
// on the known range); used for truncation bookkeeping.
inline int min_arity(const Cochain& c) {
    for (const auto& [k, tab] : c.tables)
        if (!tab.empty()) return k;
    return c.cap + 1;
}

inline bool cochain_is_zero(const Cochain& c, int up_to_arity) {
    for (const auto& [k, tab] : c.tables)
        if (k <= up_to_arity && !tab.empty()) return false;
    return true;
}

inline Cochain cochain_add(const Cochain& a, const Cochain& b, const Rational& s) {
    Cochain out = a;
    out.exact_up_to = std::min(a.exact_up_to, b.exact_up_to);
    for (const auto& [k, tab] : b.tables) {
        auto& tgt = out.tables[k];
        for (const auto& [key, v] : tab) {
            Rational& slot = tgt[key];
            slot += s * v;
            if (slot == 0) tgt.erase(key);
        }
    }
    return out;
}

inline Cochain cochain_scale(const Cochain& a, const Rational& s) {
    Cochain out = a;
    if (s == 0) {
        out.tables.clear();
        return out;
    }
    for (auto& [k, tab] : out.tables)
        for (auto& [key, v] : tab) v *= s;
    return out;
}

// Checks degree homogeneity of the stored tables against total_degree:
// an entry gamma_k[(a, o)] must satisfy |o| - sum |a_i| = total_degree - k.
inline bool cochain_is_homogeneous(const GradedSpace& A, const Cochain& c) {
    for (const auto& [k, tab] : c.tables)
        for (const auto& [key, v] : tab) {
            int in = 0;
            for (int b : key.first) in += A.deg(b);
            if (A.deg(key.second) - in != c.total_degree - k) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Suspension calculus.  hat(gamma) is the same family of maps regarded as
// operations on A[1]; its tables differ from gamma's by the Koszul signs of
// the desuspension factors:
//   hat(g)_k[(a,o)]   = (-1)^{sum_i (k-1-i)(|a_i|-1)} g_k[(a,o)],
//   unhat(G)_k[(a,o)] = (-1)^{sum_i (k-1-i)|a_i| + k(k-1)/2} G_k[(a,o)],
// and hat(unhat(G)) = unhat(hat(g)) = identity.  circle is computed in the
// hat frame, where the insertion sign is the plain A[1] Koszul sign.
// ---------------------------------------------------------------------------
inline Cochain hat_tables(const GradedSpace& A, const Cochain& c) {
    Cochain out = c;
    for (auto& [k, tab] : out.tables)
        for (auto& [key, v] : tab) {
            long s = 0;
            for (int i = 0; i < k; ++i) s += (k - 1 - i) * (A.deg(key.first[i]) - 1);
            if (s % 2 != 0) v = -v;
        }
    return out;
}

inline Cochain unhat_tables(const GradedSpace& A, const Cochain& c) {
    Cochain out = c;
    for (auto& [k, tab] : out.tables)
        for (auto& [key, v] : tab) {
            long s = static_cast<long>(k) * (k - 1) / 2;
            for (int i = 0; i < k; ++i) s += (k - 1 - i) * A.deg(key.first[i]);
            if (s % 2 != 0) v = -v;
        }
    return out;
}

namespace detail {

// Strict insertion composition in End(A[1]): h1 with h2 inserted at every
// position, signed by (-1)^{sh(h2) * sum of shifted degrees of the inputs
// consumed before the insertion slot}.
inline Cochain circle_hat_raw(const GradedSpace& A, const Cochain& h1, const Cochain& h2) {
    int cap = h1.cap;
    Cochain out = make_cochain(h1.total_degree + h2.total_degree - 1, cap);
    int sh2 = h2.shifted_degree();
    for (const auto& [k1, tab1] : h1.tables) {
        for (const auto& [k2, tab2] : h2.tables) {
            int k = k1 + k2 - 1;
            if (k < 0 || k > cap) continue;
            auto& tgt = out.tables[k];
            for (int pos = 0; pos < k1; ++pos) {
                for (const auto& [key1, v1] : tab1) {
                    for (const auto& [key2, v2] : tab2) {
                        if (key1.first[pos] != key2.second) continue;
                        std::vector<int> ins(key1.first.begin(), key1.first.begin() + pos);
                        ins.insert(ins.end(), key2.first.begin(), key2.first.end());
                        ins.insert(ins.end(), key1.first.begin() + pos + 1, key1.first.end());
                        long pre = 0;
                        for (int i = 0; i < pos; ++i) pre += A.deg(key1.first[i]) - 1;
                        Rational term = v1 * v2;
                        if ((static_cast<long>(sh2) * pre) % 2 != 0) term = -term;
                        Cochain::Key key{std::move(ins), key1.second};
                        Rational& slot = tgt[key];
                        slot += term;
                        if (slot == 0) tgt.erase(key);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace detail

// Gerstenhaber pre-composition: unhat(hat(c1) circ hat(c2)).  Exactness
// bound: the output component at arity k needs c1 at arities <= k + 1 -
// min_arity(c2) and c2 at arities <= k + 1 - min_arity(c1).
inline Cochain circle(const GradedSpace& A, const Cochain& c1, const Cochain& c2) {
    if (c1.cap != c2.cap) throw std::invalid_argument("circle: cap mismatch");
    Cochain out = unhat_tables(
        A, detail::circle_hat_raw(A, hat_tables(A, c1), hat_tables(A, c2)));
    int bound = std::min(c1.exact_up_to + min_arity(c2) - 1,
                         c2.exact_up_to + min_arity(c1) - 1);
    out.exact_up_to = std::min(c1.cap, bound);
    return out;
}

// [c1, c2] = c1 o c2 - (-1)^{sh(c1) sh(c2)} c2 o c1.
inline Cochain bracket(const GradedSpace& A, const Cochain& c1, const Cochain& c2) {
    Cochain a = circle(A, c1, c2);
    Cochain b = circle(A, c2, c1);
    int s = (c1.shifted_degree() * c2.shifted_degree()) % 2 != 0 ? 1 : -1;
    return cochain_add(a, b, s);
}

// d_m = [m, .]; raises total degree by 1.
inline Cochain hochschild_differential(const GradedSpace& A, const Cochain& m,
                                       const Cochain& gamma) {
    return bracket(A, m, gamma);
}

// Maurer-Cartan check: all computable components of [m, m] vanish.
struct MCVerdict {
    bool holds = true;
    int verified_up_to = 0;  // arity bound up to which [m,m] = 0 was checked
};

inline MCVerdict is_maurer_cartan(const GradedSpace& A, const Cochain& m) {
    // A Maurer-Cartan element has degree +1 in the shifted (Lie) grading of
    // C(A,A)[1], i.e. total degree 2: the binary product of an ungraded
    // algebra (arity 2, map degree 0) is the model case.
    if (m.total_degree != 2)
        throw std::invalid_argument(
            "is_maurer_cartan: m must have shifted degree +1 (total degree 2)");
    Cochain b = bracket(A, m, m);
    MCVerdict v;
    v.verified_up_to = b.exact_up_to;
    v.holds = cochain_is_zero(b, b.exact_up_to);
    return v;
}

// Compares two cochains on all components of arity <= bound.
inline bool cochain_equal_up_to(const Cochain& a, const Cochain& b, int bound) {
    Cochain diff = cochain_add(a, b, -1);
    return cochain_is_zero(diff, bound);
}

}  // namespace minop
