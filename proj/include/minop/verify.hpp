#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "minop/action.hpp"
#include "minop/homology.hpp"
#include "minop/orders.hpp"

namespace minop {

// ---------------------------------------------------------------------------
// Check suites shared by the CLI and the acceptance driver.  Every suite is
// deterministic: sampled checks draw from a seeded mt19937_64 and report
// entries are sorted by check id, so identical configuration (including the
// seed) yields byte-identical JSON reports.
// ---------------------------------------------------------------------------
struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline nlohmann::json report_to_json(const SuiteReport& r) {
    auto sorted = r.checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : sorted)
        checks.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"pass", r.all_pass()}, {"checks", checks}};
}

struct VerifyOptions {
    int max_arity_m = 4;       // d_M and Betti range for M
    int max_arity_p_m = 3;     // P over M
    int max_arity_p_as = 4;    // P over As
    int cochain_cap = 5;       // arity cap for Hochschild checks
    std::uint64_t seed = 2026;
    int samples = 200;
};

// ---------------------------------------------------------------------------
// Test algebras.
// ---------------------------------------------------------------------------
struct TestAlgebra {
    std::string name;
    GradedSpace space;
    Cochain mc;  // the structure cochain, total degree 2
};

// k[x]/x^3 with |x| = -1 and the plain product.
inline TestAlgebra algebra_kx3(int cap) {
    TestAlgebra a;
    a.name = "kx3";
    a.space = make_space({0, -1, -2});
    a.mc = make_cochain(2, cap);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) cochain_set(a.mc, {i, j}, i + j, 1);
    return a;
}

// k[x]/x^2 with |x| = -1.
inline TestAlgebra algebra_kx2(int cap) {
    TestAlgebra a;
    a.name = "kx2";
    a.space = make_space({0, -1});
    a.mc = make_cochain(2, cap);
    cochain_set(a.mc, {0, 0}, 0, 1);
    cochain_set(a.mc, {0, 1}, 1, 1);
    cochain_set(a.mc, {1, 0}, 1, 1);
    return a;
}

// Two-dimensional space with a single ternary operation m3(e0,e0,e0) = e1.
inline TestAlgebra algebra_m3(int cap) {
    TestAlgebra a;
    a.name = "m3";
    a.space = make_space({0, -1});
    a.mc = make_cochain(2, cap);
    cochain_set(a.mc, {0, 0, 0}, 1, 1);
    return a;
}

// Negative control: the k[x]/x^3 product with the (1, x^2) entry removed —
// homogeneous but genuinely non-associative, so Maurer-Cartan fails.
inline TestAlgebra algebra_non_mc(int cap) {
    TestAlgebra a;
    a.name = "kx3-broken";
    a.space = make_space({0, -1, -2});
    a.mc = make_cochain(2, cap);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3 && !(i == 0 && j == 2)) cochain_set(a.mc, {i, j}, i + j, 1);
    return a;
}

// A random homogeneous cochain of the given total degree: every admissible
// table entry of arity <= cap gets a small integer coefficient.
inline Cochain random_cochain(const GradedSpace& S, int total, int cap,
                              std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Cochain c = make_cochain(total, cap);
    for (int k = 0; k <= cap; ++k) {
        std::vector<std::vector<int>> tuples{{}};
        for (int step = 0; step < k; ++step) {
            std::vector<std::vector<int>> next;
            for (const auto& t : tuples)
                for (int i = 0; i < S.dim(); ++i) {
                    auto u = t;
                    u.push_back(i);
                    next.push_back(std::move(u));
                }
            tuples = std::move(next);
        }
        for (const auto& ins : tuples)
            for (int o = 0; o < S.dim(); ++o) {
                int s = 0;
                for (int i : ins) s += S.deg(i);
                if (S.deg(o) - s == total - k) cochain_set(c, ins, o, coeff(rng));
            }
    }
    return c;
}

namespace detail {

inline void chain_add(MChainElement& a, const MChainElement& b, const Rational& s) {
    for (const auto& [t, c] : b) {
        a[t] += s * c;
        if (a[t] == 0) a.erase(t);
    }
}

inline MChainElement chain_compose(const MChainElement& x, int v, const MChainElement& y) {
    MChainElement out;
    for (const auto& [t1, c1] : x)
        for (const auto& [t2, c2] : y) chain_add(out, compose(t1, v, t2), c1 * c2);
    return out;
}

inline PlanarTree shift_labels(const PlanarTree& t, int n, int offset) {
    std::map<int, int> rl;
    for (int i = 1; i <= n; ++i) rl[i] = offset + i;
    return relabel(t, rl);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suite: d-squared.  d_M^2 = 0 on every basis tree up to the M bound, and
// d_P^2 = 0 (plus the degree +1 check) on every meta-tree up to the P bounds.
// ---------------------------------------------------------------------------
inline SuiteReport suite_d_squared(const VerifyOptions& opt) {
    SuiteReport rep{"d-squared", {}};
    for (int n = 1; n <= opt.max_arity_m; ++n) {
        long bad = 0, total = 0;
        for (const auto& t : enumerate_admissible(n)) {
            ++total;
            MChainElement dd = differential(differential(t));
            if (!dd.empty()) ++bad;
            for (const auto& [u, c] : differential(t))
                if (degree(u) != degree(t) + 1) ++bad;
        }
        rep.checks.push_back({"dM-squared-n" + std::to_string(n), bad == 0,
                              std::to_string(total) + " trees, " + std::to_string(bad) +
                                  " failures"});
    }
    auto check_p = [&](BaseOperad r, int n) {
        long bad = 0, total = 0;
        for (const auto& mt : basis_P(r, n)) {
            ++total;
            PChainElement dd;
            for (const auto& [u, c] : d_P(mt)) {
                if (degree(u) != degree(mt) + 1) ++bad;
                for (const auto& [w, c2] : d_P(u)) {
                    dd[w] += c * c2;
                    if (dd[w] == 0) dd.erase(w);
                }
            }
            if (!dd.empty()) ++bad;
        }
        std::string base = r == BaseOperad::M ? "M" : "As";
        rep.checks.push_back({"dP-squared-" + base + "-n" + std::to_string(n), bad == 0,
                              std::to_string(total) + " meta-trees, " + std::to_string(bad) +
                                  " failures"});
    };
    for (int n = 2; n <= opt.max_arity_p_as; ++n) check_p(BaseOperad::As, n);
    for (int n = 2; n <= opt.max_arity_p_m; ++n) check_p(BaseOperad::M, n);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: leibniz.  The differential is a derivation of the composition:
// d(T1 o_v T2) = d(T1) o_v T2 + (-1)^{deg T1} T1 o_v d(T2); exhaustive up to
// total label count 3, then seeded samples at 4.  Also the Gerstenhaber
// bracket identities on random cochains: graded Jacobi and d_m^2 = 0 for the
// intrinsic differentials of the Maurer-Cartan test algebras.
// ---------------------------------------------------------------------------
namespace detail {

inline bool leibniz_case(const PlanarTree& t1, int v, const PlanarTree& t2) {
    MChainElement e1{{t1, 1}}, e2{{t2, 1}};
    MChainElement lhs;
    for (const auto& [t, c] : chain_compose(e1, v, e2))
        chain_add(lhs, differential(t), c);
    MChainElement rhs = chain_compose(differential(t1), v, e2);
    chain_add(rhs, chain_compose(e1, v, differential(t2)),
              degree(t1) % 2 == 0 ? 1 : -1);
    chain_add(lhs, rhs, -1);
    return lhs.empty();
}

}  // namespace detail

inline SuiteReport suite_leibniz(const VerifyOptions& opt) {
    SuiteReport rep{"leibniz", {}};
    long bad = 0, total = 0;
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n1 + n2 - 1 <= 3; ++n2)
            for (const auto& t1 : enumerate_admissible(n1))
                for (const auto& t2r : enumerate_admissible(n2)) {
                    PlanarTree t2 = detail::shift_labels(t2r, n2, n1);
                    for (int v = 1; v <= n1; ++v) {
                        ++total;
                        if (!detail::leibniz_case(t1, v, t2)) ++bad;
                    }
                }
    rep.checks.push_back({"leibniz-exhaustive-le3", bad == 0,
                          std::to_string(total) + " cases, " + std::to_string(bad) +
                              " failures"});

    std::mt19937_64 rng(opt.seed);
    bad = 0;
    std::vector<std::pair<int, int>> splits{{1, 4}, {2, 3}, {3, 2}, {4, 1}};
    std::vector<std::vector<PlanarTree>> bases;
    for (int n = 1; n <= 4; ++n) bases.push_back(enumerate_admissible(n));
    for (int s = 0; s < opt.samples; ++s) {
        auto [n1, n2] = splits[rng() % splits.size()];
        const auto& b1 = bases[n1 - 1];
        const auto& b2 = bases[n2 - 1];
        PlanarTree t1 = b1[rng() % b1.size()];
        PlanarTree t2 = detail::shift_labels(b2[rng() % b2.size()], n2, n1);
        int v = 1 + static_cast<int>(rng() % n1);
        if (!detail::leibniz_case(t1, v, t2)) ++bad;
    }
    rep.checks.push_back({"leibniz-sampled-4", bad == 0,
                          std::to_string(opt.samples) + " samples, " + std::to_string(bad) +
                              " failures"});

    // Gerstenhaber identities on seeded random triples.
    int cap = opt.cochain_cap;
    for (TestAlgebra alg : {algebra_kx2(cap), algebra_m3(cap)}) {
        auto mc = is_maurer_cartan(alg.space, alg.mc);
        rep.checks.push_back({"mc-" + alg.name, mc.holds,
                              "verified up to arity " + std::to_string(mc.verified_up_to)});
        long jac_bad = 0, dsq_bad = 0;
        int triples = std::max(100, opt.samples / 2);
        std::uniform_int_distribution<int> degd(0, 2);
        for (int s = 0; s < triples; ++s) {
            Cochain a = random_cochain(alg.space, degd(rng), cap, rng);
            Cochain b = random_cochain(alg.space, degd(rng), cap, rng);
            Cochain c = random_cochain(alg.space, degd(rng), cap, rng);
            // [a,[b,c]] = [[a,b],c] + (-1)^{sh_a sh_b} [b,[a,c]]
            Cochain lhs = bracket(alg.space, a, bracket(alg.space, b, c));
            Cochain r1 = bracket(alg.space, bracket(alg.space, a, b), c);
            Cochain r2 = bracket(alg.space, b, bracket(alg.space, a, c));
            int sg = (a.shifted_degree() * b.shifted_degree()) % 2 == 0 ? 1 : -1;
            Cochain diff = cochain_add(lhs, cochain_add(r1, r2, sg), -1);
            int bound = std::min({lhs.exact_up_to, r1.exact_up_to, r2.exact_up_to});
            if (!cochain_is_zero(diff, bound)) ++jac_bad;
            // d_m^2 = 0 given Maurer-Cartan.
            Cochain d1 = hochschild_differential(alg.space, alg.mc, a);
            Cochain d2 = hochschild_differential(alg.space, alg.mc, d1);
            if (!cochain_is_zero(d2, d2.exact_up_to)) ++dsq_bad;
        }
        rep.checks.push_back({"jacobi-" + alg.name, jac_bad == 0,
                              std::to_string(triples) + " triples, " +
                                  std::to_string(jac_bad) + " failures"});
        rep.checks.push_back({"dm-squared-" + alg.name, dsq_bad == 0,
                              std::to_string(triples) + " cochains, " +
                                  std::to_string(dsq_bad) + " failures"});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: operad-axioms.  Unit, sequential and parallel composition axioms
// with Koszul signs, exhaustive over total label count <= bound.
// ---------------------------------------------------------------------------
inline SuiteReport suite_operad_axioms(const VerifyOptions& opt, int max_total_labels = 5) {
    SuiteReport rep{"operad-axioms", {}};
    long ubad = 0, utotal = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_admissible(n)) {
            for (int v = 1; v <= n; ++v) {
                ++utotal;
                PlanarTree u = detail::shift_labels(unit_tree(), 1, n);
                MChainElement got = compose(t, v, u);
                std::map<int, int> rl;
                for (int i = 1; i <= n; ++i) rl[i] = i;
                rl[v] = n + 1;
                MChainElement want{{relabel(t, rl), 1}};
                detail::chain_add(got, want, -1);
                if (!got.empty()) ++ubad;
            }
            ++utotal;
            MChainElement got = compose(unit_tree(), 1, t);
            MChainElement want{{t, 1}};
            detail::chain_add(got, want, -1);
            if (!got.empty()) ++ubad;
        }
    rep.checks.push_back({"unit", ubad == 0,
                          std::to_string(utotal) + " cases, " + std::to_string(ubad) +
                              " failures"});

    long sbad = 0, stotal = 0, pbad = 0, ptotal = 0;
    for (int n1 = 1; n1 <= max_total_labels; ++n1)
        for (int n2 = 1; n1 + n2 <= max_total_labels + 1; ++n2)
            for (int n3 = 1; n1 + n2 + n3 <= max_total_labels + 2; ++n3) {
                if (n1 + n2 + n3 - 2 > max_total_labels) continue;
                for (const auto& t1 : enumerate_admissible(n1))
                    for (const auto& t2r : enumerate_admissible(n2))
                        for (const auto& t3r : enumerate_admissible(n3)) {
                            PlanarTree t2 = detail::shift_labels(t2r, n2, 10);
                            PlanarTree t3 = detail::shift_labels(t3r, n3, 20);
                            MChainElement e1{{t1, 1}}, e2{{t2, 1}}, e3{{t3, 1}};
                            for (int u = 1; u <= n1; ++u) {
                                for (int w = 11; w <= 10 + n2; ++w) {
                                    ++stotal;
                                    MChainElement a = detail::chain_compose(
                                        detail::chain_compose(e1, u, e2), w, e3);
                                    detail::chain_add(
                                        a, detail::chain_compose(
                                               e1, u, detail::chain_compose(e2, w, e3)),
                                        -1);
                                    if (!a.empty()) ++sbad;
                                }
                                for (int v = u + 1; v <= n1; ++v) {
                                    ++ptotal;
                                    MChainElement a = detail::chain_compose(
                                        detail::chain_compose(e1, u, e2), v, e3);
                                    MChainElement b = detail::chain_compose(
                                        detail::chain_compose(e1, v, e3), u, e2);
                                    int sg = (degree(t2) * degree(t3)) % 2 == 0 ? 1 : -1;
                                    detail::chain_add(a, b, -sg);
                                    if (!a.empty()) ++pbad;
                                }
                            }
                        }
            }
    rep.checks.push_back({"sequential", sbad == 0,
                          std::to_string(stotal) + " cases, " + std::to_string(sbad) +
                              " failures"});
    rep.checks.push_back({"parallel", pbad == 0,
                          std::to_string(ptotal) + " cases, " + std::to_string(pbad) +
                              " failures"});
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: action-axioms.  act(T1 o_v T2) matches the routed composite of the
// actions, across enumerated small (T1, v, T2) configurations over the
// Maurer-Cartan test algebras.
// ---------------------------------------------------------------------------
namespace detail {

// Deterministic homogeneous gamma inputs: single-entry cochains of small
// arity, with total degree cycling over a fixed pattern.
inline std::vector<Cochain> standard_gammas(const GradedSpace& S, int n, int cap) {
    static const int degs[4] = {1, 0, 2, 1};
    std::vector<Cochain> out;
    for (int i = 0; i < n; ++i) {
        int tot = degs[i % 4];
        std::vector<Cochain> candidates;
        for (int k = 0; k <= 1; ++k) {
            std::vector<std::vector<int>> tuples;
            if (k == 0)
                tuples.push_back({});
            else
                for (int a = 0; a < S.dim(); ++a) tuples.push_back({a});
            for (const auto& ins : tuples)
                for (int o = 0; o < S.dim(); ++o) {
                    int s = 0;
                    for (int a : ins) s += S.deg(a);
                    if (S.deg(o) - s == tot - k) {
                        Cochain c = make_cochain(tot, cap);
                        cochain_set(c, ins, o, 1);
                        candidates.push_back(std::move(c));
                    }
                }
        }
        if (candidates.empty()) return {};
        out.push_back(candidates[i % candidates.size()]);
    }
    return out;
}

}  // namespace detail

inline SuiteReport suite_action_axioms(const VerifyOptions& opt) {
    SuiteReport rep{"action-axioms", {}};
    int cap = std::min(opt.cochain_cap, 4);  // act cost grows fast with the cap
    for (TestAlgebra alg : {algebra_kx3(cap), algebra_m3(cap)}) {
        long bad = 0, total = 0;
        for (int n1 = 1; n1 <= 2; ++n1)
            for (int n2 = 1; n2 <= 3 - n1; ++n2)
                for (const auto& t1 : enumerate_admissible(n1))
                    for (const auto& t2 : enumerate_admissible(n2))
                        for (int v = 1; v <= n1; ++v) {
                            auto gs = detail::standard_gammas(alg.space, n1 + n2 - 1, cap);
                            if (gs.empty()) continue;
                            ++total;
                            if (!check_action_axiom_case(alg.space, t1, v, t2, gs, alg.mc,
                                                         cap - 2))
                                ++bad;
                        }
        // The unit acts as the identity.
        auto gs = detail::standard_gammas(alg.space, 1, cap);
        Cochain u = act(alg.space, unit_tree(), {gs[0]}, alg.mc);
        bool unit_ok = cochain_equal_up_to(u, gs[0], cap);
        rep.checks.push_back({"action-axiom-" + alg.name, bad == 0,
                              std::to_string(total) + " cases, " + std::to_string(bad) +
                                  " failures"});
        rep.checks.push_back({"action-unit-" + alg.name, unit_ok, ""});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: dg-compat.  d_m(act(T, gamma)) equals the routed sum of act(d_M T)
// and act with one differentiated input, for every basis tree with at most 3
// labels over both Maurer-Cartan algebras; plus a negative control with a
// non-associative product where the identity must break.
// ---------------------------------------------------------------------------
inline SuiteReport suite_dg_compat(const VerifyOptions& opt) {
    SuiteReport rep{"dg-compat", {}};
    int cap = std::min(opt.cochain_cap, 4);
    for (TestAlgebra alg : {algebra_kx3(cap), algebra_m3(cap)}) {
        long bad = 0, total = 0;
        for (int n = 1; n <= 3; ++n)
            for (const auto& t : enumerate_admissible(n)) {
                auto gs = detail::standard_gammas(alg.space, n, cap);
                if (gs.empty()) continue;
                ++total;
                if (!check_dg_compatibility(alg.space, t, gs, alg.mc, cap - 2)) ++bad;
            }
        rep.checks.push_back({"dg-compat-" + alg.name, bad == 0,
                              std::to_string(total) + " trees, " + std::to_string(bad) +
                                  " failures"});
    }
    // Negative control: a homogeneous but non-associative product.  The
    // Maurer-Cartan verdict must fail and the induced operator [m, -] must
    // visibly fail to square to zero on random cochains.
    TestAlgebra broken = algebra_non_mc(cap);
    bool mc_fails = !is_maurer_cartan(broken.space, broken.mc).holds;
    long breaks = 0;
    std::mt19937_64 rng(opt.seed);
    for (int s = 0; s < 20; ++s) {
        Cochain a = random_cochain(broken.space, s % 3, cap, rng);
        Cochain d1 = hochschild_differential(broken.space, broken.mc, a);
        Cochain d2 = hochschild_differential(broken.space, broken.mc, d1);
        if (!cochain_is_zero(d2, d2.exact_up_to)) ++breaks;
    }
    rep.checks.push_back({"negative-control", mc_fails && breaks > 0,
                          std::string("mc fails: ") + (mc_fails ? "yes" : "no") +
                              ", d_m^2 != 0 on " + std::to_string(breaks) +
                              "/20 random cochains"});
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: orders.  For every generator of P_{M,n}: the two tail relations are
// strict partial orders forming a complementary pair, the two combined
// relations are total orders recovering the pair, and the minimal element is
// unique.
// ---------------------------------------------------------------------------
inline SuiteReport suite_orders(const VerifyOptions& opt) {
    SuiteReport rep{"orders", {}};
    for (int n = 2; n <= opt.max_arity_p_as; ++n) {
        long bad = 0, total = 0;
        for (const auto& g : generators(BaseOperad::M, n)) {
            ++total;
            try {
                OrderPair p = tail_orders(g);
                if (!is_complementary(p) || !is_strict_partial_order(p.h) ||
                    !is_strict_partial_order(p.v)) {
                    ++bad;
                    continue;
                }
                CombinedOrders c = combined_orders(p);
                OrderPair q = reconstruct(c);
                if (q.h != p.h || q.v != p.v) ++bad;
                if (c.plus[0] != minimal_element(p)) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
        rep.checks.push_back({"orders-n" + std::to_string(n), bad == 0,
                              std::to_string(total) + " generators, " + std::to_string(bad) +
                                  " failures"});
    }
    return rep;
}

}  // namespace minop
