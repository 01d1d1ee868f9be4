#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "minop/hochschild.hpp"
#include "minop/minimal_operad.hpp"
#include "minop/resolution.hpp"
#include "minop/tree.hpp"

namespace minop {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Tree JSON: a node is {label: integer|null, children: [nodes]}.  Labeled
// vertices carry their positive label; non-labeled vertices carry null.
// Tails (only meaningful inside meta-trees) serialize as {tail: k}.
// ---------------------------------------------------------------------------
inline json tree_to_json(const PlanarTree& t) {
    json j;
    if (t.label < 0) {
        j["tail"] = -t.label;
        return j;
    }
    if (t.label > 0)
        j["label"] = t.label;
    else
        j["label"] = nullptr;
    j["children"] = json::array();
    for (const auto& c : t.children) j["children"].push_back(tree_to_json(c));
    return j;
}

inline PlanarTree tree_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("tree JSON: node must be an object");
    PlanarTree t;
    if (j.contains("tail")) {
        t.label = -j.at("tail").get<int>();
        return t;
    }
    if (!j.contains("label"))
        throw std::invalid_argument("tree JSON: node missing 'label'");
    if (!j.at("label").is_null()) t.label = j.at("label").get<int>();
    if (j.contains("children"))
        for (const auto& c : j.at("children")) t.children.push_back(tree_from_json(c));
    return t;
}

// MChainElement: array of {coeff: "p/q", tree: tree-JSON}, sorted by the
// canonical tree order so output is deterministic.
inline json chain_to_json(const MChainElement& x) {
    json j = json::array();
    for (const auto& [t, c] : x) {
        if (c == 0) continue;
        j.push_back({{"coeff", rational_to_string(c)}, {"tree", tree_to_json(t)}});
    }
    return j;
}

inline MChainElement chain_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("chain JSON: array expected");
    MChainElement out;
    for (const auto& e : j)
        out[tree_from_json(e.at("tree"))] +=
            rational_from_string(e.at("coeff").get<std::string>());
    return out;
}

// GradedSpace: {basis: [{name, degree}]}.
inline json space_to_json(const GradedSpace& s) {
    json basis = json::array();
    for (int i = 0; i < s.dim(); ++i)
        basis.push_back({{"name", s.names[i]}, {"degree", s.degrees[i]}});
    return json{{"basis", basis}};
}

inline GradedSpace space_from_json(const json& j) {
    GradedSpace s;
    for (const auto& b : j.at("basis")) {
        s.names.push_back(b.at("name").get<std::string>());
        s.degrees.push_back(b.at("degree").get<int>());
    }
    return s;
}

// Cochain: {total_degree, cap, exact_up_to, entries: [{arity, inputs:
// [basis names], output: basis name, coeff: "p/q"}]}.
inline json cochain_to_json(const Cochain& c, const GradedSpace& s) {
    json entries = json::array();
    for (const auto& [k, table] : c.tables)
        for (const auto& [key, v] : table) {
            if (v == 0) continue;
            json inputs = json::array();
            for (int i : key.first) inputs.push_back(s.names.at(i));
            entries.push_back({{"arity", k},
                               {"inputs", inputs},
                               {"output", s.names.at(key.second)},
                               {"coeff", rational_to_string(v)}});
        }
    return json{{"total_degree", c.total_degree},
                {"cap", c.cap},
                {"exact_up_to", c.exact_up_to},
                {"entries", entries}};
}

inline Cochain cochain_from_json(const json& j, const GradedSpace& s) {
    auto index_of = [&](const std::string& name) {
        auto it = std::find(s.names.begin(), s.names.end(), name);
        if (it == s.names.end())
            throw std::invalid_argument("cochain JSON: unknown basis name '" + name + "'");
        return static_cast<int>(it - s.names.begin());
    };
    Cochain c = make_cochain(j.at("total_degree").get<int>(), j.at("cap").get<int>());
    if (j.contains("exact_up_to")) c.exact_up_to = j.at("exact_up_to").get<int>();
    for (const auto& e : j.at("entries")) {
        std::vector<int> inputs;
        for (const auto& name : e.at("inputs")) inputs.push_back(index_of(name));
        if (static_cast<int>(inputs.size()) != e.at("arity").get<int>())
            throw std::invalid_argument("cochain JSON: arity/inputs mismatch");
        cochain_set(c, inputs, index_of(e.at("output").get<std::string>()),
                    rational_from_string(e.at("coeff").get<std::string>()));
    }
    return c;
}

// Meta-tree: tree JSON on the base shape, each internal node additionally
// carrying {inscription: tree-JSON} and each internal child edge a
// {mark: "finite"|"infinite"} on the child node.
namespace detail {

inline json shape_to_json(const Shape& sh, const MetaTree& mt) {
    json j;
    if (sh.tail > 0) {
        j["tail"] = sh.tail;
        return j;
    }
    j["label"] = nullptr;
    j["inscription"] = tree_to_json(mt.ins.at(shape_tails(sh)));
    j["children"] = json::array();
    for (const auto& c : sh.children) {
        json cj = shape_to_json(c, mt);
        if (c.tail == 0)
            cj["mark"] = mt.marks.at(shape_tails(c)) == Mark::finite ? "finite" : "infinite";
        j["children"].push_back(cj);
    }
    return j;
}

inline Shape shape_from_json(const json& j, MetaTree& mt) {
    if (j.contains("tail")) {
        Shape s;
        s.tail = j.at("tail").get<int>();
        return s;
    }
    Shape s;
    for (const auto& cj : j.at("children")) {
        Shape c = shape_from_json(cj, mt);
        if (c.tail == 0) {
            const std::string m = cj.at("mark").get<std::string>();
            if (m != "finite" && m != "infinite")
                throw std::invalid_argument("meta-tree JSON: bad mark '" + m + "'");
            mt.marks[shape_tails(c)] = m == "finite" ? Mark::finite : Mark::infinite;
        }
        s.children.push_back(std::move(c));
    }
    std::sort(s.children.begin(), s.children.end(),
              [](const Shape& a, const Shape& b) { return min_tail(a) < min_tail(b); });
    mt.ins[shape_tails(s)] = tree_from_json(j.at("inscription"));
    return s;
}

}  // namespace detail

inline json meta_tree_to_json(const MetaTree& mt) {
    json j = detail::shape_to_json(mt.base, mt);
    j["base_operad"] = mt.r == BaseOperad::M ? "M" : "As";
    return j;
}

inline MetaTree meta_tree_from_json(const json& j) {
    MetaTree mt;
    const std::string r = j.at("base_operad").get<std::string>();
    if (r != "M" && r != "As")
        throw std::invalid_argument("meta-tree JSON: bad base_operad '" + r + "'");
    mt.r = r == "M" ? BaseOperad::M : BaseOperad::As;
    mt.base = detail::shape_from_json(j, mt);
    return mt;
}

}  // namespace minop
