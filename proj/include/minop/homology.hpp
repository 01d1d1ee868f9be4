#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minop/minimal_operad.hpp"
#include "minop/resolution.hpp"

namespace minop {

// ---------------------------------------------------------------------------
// Exact homology of finite cochain complexes over Q.
//
// A complex is stored degreewise: a canonical basis per degree and the sparse
// rational matrix of the degree +1 differential.  Ranks are computed exactly
// by fraction-free Gaussian elimination (Bareiss) over arbitrary-precision
// integers after clearing denominators, so Betti numbers are exact.
// ---------------------------------------------------------------------------
struct ChainComplexData {
    // basis[q] = names of the basis elements in degree q.
    std::map<int, std::vector<std::string>> basis;
    // diff[q] = matrix of d: C_q -> C_{q+1}; entry {row=index in C_{q+1},
    // col=index in C_q} -> coefficient.
    std::map<int, std::map<std::pair<int, int>, Rational>> diff;
};

namespace detail {

inline long bareiss_rank(std::vector<std::vector<Integer>> a) {
    long rows = static_cast<long>(a.size());
    long cols = rows ? static_cast<long>(a[0].size()) : 0;
    long rank = 0;
    Integer prev = 1;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (long r = rank + 1; r < rows; ++r) {
            for (long cc = c + 1; cc < cols; ++cc)
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline long matrix_rank(const std::map<std::pair<int, int>, Rational>& m, long rows,
                        long cols) {
    if (rows == 0 || cols == 0 || m.empty()) return 0;
    // Clear denominators columnwise; column scaling preserves rank.
    std::vector<Integer> lcm_col(cols, 1);
    for (const auto& [rc, v] : m) {
        const Integer d = boost::multiprecision::denominator(v);
        Integer& l = lcm_col[rc.second];
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, 0));
    for (const auto& [rc, v] : m)
        a[rc.first][rc.second] = boost::multiprecision::numerator(v) *
                                 (lcm_col[rc.second] / boost::multiprecision::denominator(v));
    return bareiss_rank(std::move(a));
}

}  // namespace detail

// Checks d(d(x)) = 0 on every basis element by composing the stored
// matrices; throws naming the offending element otherwise.
inline void verify_complex(const ChainComplexData& cx) {
    for (const auto& [q, dq] : cx.diff) {
        auto it = cx.diff.find(q + 1);
        if (it == cx.diff.end()) continue;
        const auto& dq1 = it->second;
        long nc = cx.basis.count(q) ? static_cast<long>(cx.basis.at(q).size()) : 0;
        for (long col = 0; col < nc; ++col) {
            std::map<int, Rational> sq;  // row in C_{q+2} -> coefficient
            for (const auto& [rc, v] : dq) {
                if (rc.second != col) continue;
                for (const auto& [rc1, w] : dq1)
                    if (rc1.second == rc.first) sq[rc1.first] += v * w;
            }
            for (const auto& [r, v] : sq)
                if (v != 0)
                    throw std::logic_error("verify_complex: d^2 != 0 on basis element " +
                                           cx.basis.at(q)[col] + " in degree " +
                                           std::to_string(q));
        }
    }
}

// Betti numbers per degree: dim ker(d_q) - rank(d_{q-1}).
inline std::map<int, long> betti(const ChainComplexData& cx) {
    std::map<int, long> rank;  // rank of d: C_q -> C_{q+1}
    for (const auto& [q, names] : cx.basis) {
        long cols = static_cast<long>(names.size());
        long rows = cx.basis.count(q + 1) ? static_cast<long>(cx.basis.at(q + 1).size()) : 0;
        auto it = cx.diff.find(q);
        rank[q] = (it == cx.diff.end()) ? 0 : detail::matrix_rank(it->second, rows, cols);
    }
    std::map<int, long> out;
    for (const auto& [q, names] : cx.basis) {
        long r_in = rank.count(q - 1) ? rank.at(q - 1) : 0;
        out[q] = static_cast<long>(names.size()) - rank.at(q) - r_in;
    }
    return out;
}

inline long euler_characteristic(const ChainComplexData& cx) {
    long chi = 0;
    for (const auto& [q, names] : cx.basis)
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(names.size());
    return chi;
}

// ---------------------------------------------------------------------------
// Complex builders.
// ---------------------------------------------------------------------------

// (M_n, d_M) on the admissible-tree basis.
inline ChainComplexData complex_M(int n) {
    ChainComplexData cx;
    std::map<int, std::map<PlanarTree, int>> index;
    for (const auto& t : enumerate_admissible(n)) {
        int q = degree(t);
        index[q][t] = static_cast<int>(cx.basis[q].size());
        cx.basis[q].push_back(encode(t));
    }
    for (const auto& [q, trees] : index) {
        for (const auto& [t, col] : trees) {
            for (const auto& [u, c] : differential(t)) {
                int row = index.at(q + 1).at(u);
                cx.diff[q][{row, col}] = c;
            }
        }
    }
    return cx;
}

// (P_{R,n}, d_P) on the meta-tree basis.
inline ChainComplexData complex_P(BaseOperad r, int n) {
    ChainComplexData cx;
    std::map<int, std::map<MetaTree, int>> index;
    for (const auto& mt : basis_P(r, n)) {
        int q = degree(mt);
        index[q][mt] = static_cast<int>(cx.basis[q].size());
        cx.basis[q].push_back(encode(mt));
    }
    for (const auto& [q, mts] : index) {
        for (const auto& [mt, col] : mts) {
            for (const auto& [u, c] : d_P(mt)) {
                int row = index.at(q + 1).at(u);
                cx.diff[q][{row, col}] = c;
            }
        }
    }
    return cx;
}

// Cells of the associahedron K_4: meta-trees in P_{As,4} whose planar tail
// order is the identity, graded by the number of finite edges.
struct CellCounts {
    std::vector<long> by_finite_edges;  // index = number of finite edges
};

inline CellCounts k4_cell_counts() {
    CellCounts out;
    std::map<int, long> cells;
    for (const auto& mt : basis_P(BaseOperad::As, 4)) {
        auto ord = planar_tail_order(mt);
        bool id = true;
        for (int i = 0; i < static_cast<int>(ord.size()); ++i) id = id && ord[i] == i + 1;
        if (!id) continue;
        int fe = 0;
        for (const auto& [e, m] : mt.marks)
            if (m == Mark::finite) ++fe;
        cells[fe]++;
    }
    int maxf = cells.empty() ? -1 : cells.rbegin()->first;
    out.by_finite_edges.assign(maxf + 1, 0);
    for (const auto& [fe, c] : cells) out.by_finite_edges[fe] = c;
    return out;
}

}  // namespace minop
