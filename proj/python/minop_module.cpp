// Python bindings.  The API is JSON-in / JSON-out: every operation takes and
// returns JSON strings in the same schemas the CLI uses, which keeps the
// binding layer thin and the formats identical across entry points.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minop/json_io.hpp"
#include "minop/verify.hpp"

namespace py = pybind11;
using namespace minop;
using nlohmann::json;

namespace {

BaseOperad parse_base(const std::string& s) {
    if (s == "M") return BaseOperad::M;
    if (s == "As") return BaseOperad::As;
    throw std::invalid_argument("base operad must be 'M' or 'As'");
}

std::string py_basis_m(int n) {
    json out = json::array();
    for (const auto& t : enumerate_admissible(n))
        out.push_back({{"encoding", encode(t)}, {"degree", degree(t)},
                       {"tree", tree_to_json(t)}});
    return out.dump();
}

std::string py_basis_p(const std::string& base, int n) {
    json out = json::array();
    for (const auto& mt : basis_P(parse_base(base), n))
        out.push_back({{"encoding", encode(mt)}, {"degree", degree(mt)},
                       {"meta_tree", meta_tree_to_json(mt)}});
    return out.dump();
}

std::string py_differential(const std::string& tree_json) {
    PlanarTree t = tree_from_json(json::parse(tree_json));
    return chain_to_json(differential(t)).dump();
}

std::string py_compose(const std::string& t1_json, int label, const std::string& t2_json) {
    PlanarTree t1 = tree_from_json(json::parse(t1_json));
    PlanarTree t2 = tree_from_json(json::parse(t2_json));
    return chain_to_json(compose(t1, label, t2)).dump();
}

std::string py_d_p(const std::string& meta_json) {
    MetaTree mt = meta_tree_from_json(json::parse(meta_json));
    json out = json::array();
    for (const auto& [u, c] : d_P(mt))
        out.push_back({{"coeff", rational_to_string(c)},
                       {"meta_tree", meta_tree_to_json(u)}});
    return out.dump();
}

std::string py_act(const std::string& algebra_json, const std::string& tree_json,
                   const std::vector<std::string>& cochain_jsons) {
    json aj = json::parse(algebra_json);
    GradedSpace A = space_from_json(aj.at("space"));
    Cochain m = cochain_from_json(aj.at("mc"), A);
    PlanarTree t = tree_from_json(json::parse(tree_json));
    std::vector<Cochain> gs;
    for (const auto& s : cochain_jsons) gs.push_back(cochain_from_json(json::parse(s), A));
    return cochain_to_json(act(A, t, gs, m), A).dump();
}

std::string py_betti(const std::string& operad, int n) {
    ChainComplexData cx = operad == "M" ? complex_M(n)
                          : operad == "P-M" ? complex_P(BaseOperad::M, n)
                          : operad == "P-As" ? complex_P(BaseOperad::As, n)
                                             : throw std::invalid_argument(
                                                   "operad must be M, P-M or P-As");
    verify_complex(cx);
    json dims = json::object(), bettis = json::object();
    for (const auto& [q, names] : cx.basis) dims[std::to_string(q)] = names.size();
    for (const auto& [q, b] : betti(cx)) bettis[std::to_string(q)] = b;
    return json{{"dimensions", dims},
                {"betti", bettis},
                {"euler_characteristic", euler_characteristic(cx)}}
        .dump();
}

std::string py_verify(const std::string& suite, std::uint64_t seed, int samples) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.samples = samples;
    SuiteReport r;
    if (suite == "d-squared")
        r = suite_d_squared(opt);
    else if (suite == "leibniz")
        r = suite_leibniz(opt);
    else if (suite == "operad-axioms")
        r = suite_operad_axioms(opt);
    else if (suite == "action-axioms")
        r = suite_action_axioms(opt);
    else if (suite == "dg-compat")
        r = suite_dg_compat(opt);
    else if (suite == "orders")
        r = suite_orders(opt);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    return report_to_json(r).dump();
}

std::string py_is_maurer_cartan(const std::string& algebra_json) {
    json aj = json::parse(algebra_json);
    GradedSpace A = space_from_json(aj.at("space"));
    Cochain m = cochain_from_json(aj.at("mc"), A);
    auto v = is_maurer_cartan(A, m);
    return json{{"holds", v.holds}, {"verified_up_to", v.verified_up_to}}.dump();
}

std::string py_tail_orders(const std::string& meta_json) {
    MetaTree mt = meta_tree_from_json(json::parse(meta_json));
    OrderPair p = tail_orders(mt);
    CombinedOrders c = combined_orders(p);
    json h = json::array(), v = json::array();
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            if (p.lt_h(i, j)) h.push_back({i, j});
            if (p.lt_v(i, j)) v.push_back({i, j});
        }
    return json{{"horizontal", h},
                {"vertical", v},
                {"plus", c.plus},
                {"minus", c.minus},
                {"minimal", minimal_element(p)}}
        .dump();
}

std::string py_poset(int n, int dmin, int dmax) {
    MetaTreePoset p = meta_tree_poset(n, dmin, dmax);
    json elems = json::array(), covers = json::array();
    for (const auto& mt : p.elements)
        elems.push_back({{"encoding", encode(mt)}, {"degree", degree(mt)}});
    for (const auto& [a, b] : p.covers) covers.push_back({a, b});
    return json{{"elements", elems}, {"covers", covers}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact computations in the minimal operad on Hochschild cochains "
                "and its free resolutions (JSON string API)";
    mod.def("basis_m", &py_basis_m, py::arg("n"),
            "Admissible-tree basis of M_n with degrees, as JSON");
    mod.def("basis_p", &py_basis_p, py::arg("base"), py::arg("n"),
            "Meta-tree basis of the resolution P over base 'M' or 'As', as JSON");
    mod.def("differential", &py_differential, py::arg("tree_json"),
            "d_M of a basis tree, as a JSON chain element");
    mod.def("compose", &py_compose, py::arg("tree1_json"), py::arg("label"),
            py::arg("tree2_json"), "Operadic composition at a labeled vertex");
    mod.def("d_p", &py_d_p, py::arg("meta_tree_json"),
            "Resolution differential of a meta-tree");
    mod.def("act", &py_act, py::arg("algebra_json"), py::arg("tree_json"),
            py::arg("cochain_jsons"), "Action of a tree on Hochschild cochains");
    mod.def("betti", &py_betti, py::arg("operad"), py::arg("n"),
            "Exact Betti numbers of M_n, P_{M,n} or P_{As,n}");
    mod.def("verify", &py_verify, py::arg("suite"), py::arg("seed") = 2026,
            py::arg("samples") = 200, "Run a check suite; returns the JSON report");
    mod.def("is_maurer_cartan", &py_is_maurer_cartan, py::arg("algebra_json"),
            "Maurer-Cartan verdict for an algebra JSON");
    mod.def("tail_orders", &py_tail_orders, py::arg("meta_tree_json"),
            "Complementary tail orders of a P-generator over M");
    mod.def("poset", &py_poset, py::arg("n"), py::arg("min_degree") = -100,
            py::arg("max_degree") = 100, "Meta-tree poset over M");
    mod.def("encode_tree", [](const std::string& tree_json) {
        return encode(tree_from_json(json::parse(tree_json)));
    });
    mod.def("decode_tree", [](const std::string& enc) {
        return tree_to_json(decode(enc)).dump();
    });
}
