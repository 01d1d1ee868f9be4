// Command-line front end: basis enumeration, exact Betti numbers, check
// suites, cochain actions, the meta-tree poset, and JSON export.  Every
// command emits a machine-readable JSON report (stdout by default); exit
// status is 0 iff every check in the report passed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "minop/json_io.hpp"
#include "minop/verify.hpp"

using namespace minop;
using nlohmann::json;

namespace {

struct Limits {
    int max_m = 4;
    int max_p_m = 3;
    int max_p_as = 4;
};

// Known basis sizes; growth factors extrapolate the refusal estimate.
long known_dim(const std::string& operad, int n) {
    if (operad == "M") {
        static const long dims[] = {1, 4, 48, 960};
        if (n >= 1 && n <= 4) return dims[n - 1];
        long d = 960;
        for (int k = 5; k <= n; ++k) d *= 24;
        return d;
    }
    if (operad == "P-M") {
        static const long dims[] = {1, 4, 144};
        if (n >= 1 && n <= 3) return dims[n - 1];
        long d = 144;
        for (int k = 4; k <= n; ++k) d *= 60;
        return d;
    }
    static const long dims[] = {1, 2, 30, 744};
    if (n >= 1 && n <= 4) return dims[n - 1];
    long d = 744;
    for (int k = 5; k <= n; ++k) d *= 30;
    return d;
}

bool check_limit(const std::string& operad, int n, const Limits& lim, json& report) {
    int max = operad == "M" ? lim.max_m : operad == "P-M" ? lim.max_p_m : lim.max_p_as;
    if (n <= max) return true;
    report["error"] = "resource-bound refusal";
    report["detail"] = "arity " + std::to_string(n) + " exceeds the configured limit " +
                       std::to_string(max) + " for operad " + operad +
                       "; estimated basis size ~" + std::to_string(known_dim(operad, n)) +
                       " elements";
    return false;
}

json run_basis(const std::string& operad, int n) {
    json out;
    out["command"] = "basis";
    out["operad"] = operad;
    out["arity"] = n;
    json elems = json::array();
    if (operad == "M") {
        for (const auto& t : enumerate_admissible(n))
            elems.push_back({{"encoding", encode(t)},
                             {"degree", degree(t)},
                             {"tree", tree_to_json(t)}});
    } else {
        BaseOperad r = operad == "P-M" ? BaseOperad::M : BaseOperad::As;
        for (const auto& mt : basis_P(r, n))
            elems.push_back({{"encoding", encode(mt)},
                             {"degree", degree(mt)},
                             {"meta_tree", meta_tree_to_json(mt)}});
    }
    out["dimension"] = elems.size();
    out["elements"] = std::move(elems);
    return out;
}

json run_betti(const std::string& operad, int n) {
    ChainComplexData cx = operad == "M" ? complex_M(n)
                          : operad == "P-M" ? complex_P(BaseOperad::M, n)
                                            : complex_P(BaseOperad::As, n);
    verify_complex(cx);
    json out;
    out["command"] = "betti";
    out["operad"] = operad;
    out["arity"] = n;
    json dims = json::object(), bettis = json::object();
    for (const auto& [q, names] : cx.basis) dims[std::to_string(q)] = names.size();
    for (const auto& [q, b] : betti(cx)) bettis[std::to_string(q)] = b;
    out["dimensions"] = dims;
    out["betti"] = bettis;
    out["euler_characteristic"] = euler_characteristic(cx);
    return out;
}

json run_poset(int n, int dmin, int dmax) {
    MetaTreePoset p = meta_tree_poset(n, dmin, dmax);
    json out;
    out["command"] = "poset";
    out["arity"] = n;
    json elems = json::array();
    for (const auto& mt : p.elements)
        elems.push_back({{"encoding", encode(mt)}, {"degree", degree(mt)}});
    json covers = json::array(), closure = json::array();
    for (const auto& [a, b] : p.covers) covers.push_back({a, b});
    for (const auto& [a, b] : p.closure) closure.push_back({a, b});
    json counts = json::object();
    for (const auto& [d, c] : p.count_by_degree) counts[std::to_string(d)] = c;
    out["elements"] = std::move(elems);
    out["covers"] = std::move(covers);
    out["closure"] = std::move(closure);
    out["count_by_degree"] = std::move(counts);
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void print_table(const json& report) {
    if (report.contains("checks")) {
        for (const auto& c : report.at("checks"))
            std::fprintf(stderr, "  %-32s %s  %s\n",
                         c.at("id").get<std::string>().c_str(),
                         c.at("pass").get<bool>() ? "pass" : "FAIL",
                         c.at("detail").get<std::string>().c_str());
    } else if (report.contains("betti")) {
        for (const auto& [q, b] : report.at("betti").items())
            std::fprintf(stderr, "  betti[%s] = %ld\n", q.c_str(), b.get<long>());
    } else if (report.contains("dimension")) {
        std::fprintf(stderr, "  dimension = %ld\n", report.at("dimension").get<long>());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minop: the minimal operad on Hochschild cochains, its free "
                 "resolutions, and exact homology"};
    app.require_subcommand(1);

    Limits lim;
    std::string format = "json";
    std::string output_path;
    app.add_option("--format", format, "Output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", output_path, "Write the JSON report to this file");
    app.add_option("--limit-m", lim.max_m, "Arity limit for M (default 4)");
    app.add_option("--limit-p-m", lim.max_p_m, "Arity limit for P over M (default 3)");
    app.add_option("--limit-p-as", lim.max_p_as, "Arity limit for P over As (default 4)");

    std::string operad = "M";
    int arity = 2;
    auto add_operad_opts = [&](CLI::App* cmd) {
        cmd->add_option("--operad", operad, "Operad: M | P-M | P-As")
            ->check(CLI::IsMember({"M", "P-M", "P-As"}));
        cmd->add_option("--arity", arity, "Number of tails / labels")->required();
    };

    CLI::App* basis = app.add_subcommand("basis", "Enumerate a basis with degrees");
    add_operad_opts(basis);

    CLI::App* betti_cmd = app.add_subcommand("betti", "Exact Betti numbers over Q");
    add_operad_opts(betti_cmd);

    CLI::App* verify = app.add_subcommand("verify", "Run a check suite");
    std::string suite = "d-squared";
    VerifyOptions vopt;
    verify->add_option("--suite", suite, "Suite name or 'all'")
        ->check(CLI::IsMember({"d-squared", "leibniz", "operad-axioms", "action-axioms",
                               "dg-compat", "orders", "all"}));
    verify->add_option("--seed", vopt.seed, "Seed for sampled checks (default 2026)");
    verify->add_option("--samples", vopt.samples, "Sample count (default 200)");
    verify->add_option("--cap", vopt.cochain_cap, "Cochain arity cap (default 5)");
    verify->add_option("--max-arity", vopt.max_arity_m, "M arity bound (default 4)");

    CLI::App* act_cmd = app.add_subcommand("act", "Apply a tree to cochains");
    std::string algebra_path, tree_path;
    std::vector<std::string> cochain_paths;
    act_cmd->add_option("--algebra", algebra_path,
                        "Algebra JSON: {space: GradedSpace, mc: Cochain}")->required();
    act_cmd->add_option("--tree", tree_path, "Tree JSON file")->required();
    act_cmd->add_option("--cochain", cochain_paths,
                        "Cochain JSON file, one per tree label")->required();

    CLI::App* poset_cmd = app.add_subcommand("poset", "Meta-tree poset over M");
    int poset_n = 2, dmin = -100, dmax = 100;
    poset_cmd->add_option("--arity", poset_n, "Number of tails")->required();
    poset_cmd->add_option("--min-degree", dmin, "Lower degree bound");
    poset_cmd->add_option("--max-degree", dmax, "Upper degree bound");

    CLI::App* export_cmd =
        app.add_subcommand("export", "Basis plus differential matrix as JSON");
    add_operad_opts(export_cmd);

    CLI11_PARSE(app, argc, argv);

    json report;
    bool ok = true;
    try {
        if (basis->parsed()) {
            if (check_limit(operad, arity, lim, report))
                report = run_basis(operad, arity);
            else
                ok = false;
        } else if (betti_cmd->parsed()) {
            if (check_limit(operad, arity, lim, report))
                report = run_betti(operad, arity);
            else
                ok = false;
        } else if (verify->parsed()) {
            vopt.max_arity_p_m = std::min(vopt.max_arity_p_m, lim.max_p_m);
            vopt.max_arity_p_as = std::min(vopt.max_arity_p_as, lim.max_p_as);
            std::vector<SuiteReport> reps;
            if (suite == "all" || suite == "d-squared") reps.push_back(suite_d_squared(vopt));
            if (suite == "all" || suite == "leibniz") reps.push_back(suite_leibniz(vopt));
            if (suite == "all" || suite == "operad-axioms")
                reps.push_back(suite_operad_axioms(vopt));
            if (suite == "all" || suite == "action-axioms")
                reps.push_back(suite_action_axioms(vopt));
            if (suite == "all" || suite == "dg-compat") reps.push_back(suite_dg_compat(vopt));
            if (suite == "all" || suite == "orders") reps.push_back(suite_orders(vopt));
            report["command"] = "verify";
            report["seed"] = vopt.seed;
            json checks = json::array();
            for (const auto& r : reps) {
                json rj = report_to_json(r);
                ok = ok && r.all_pass();
                for (const auto& c : rj.at("checks")) {
                    json cc = c;
                    cc["id"] = r.suite + "/" + c.at("id").get<std::string>();
                    checks.push_back(cc);
                }
            }
            std::sort(checks.begin(), checks.end(), [](const json& a, const json& b) {
                return a.at("id").get<std::string>() < b.at("id").get<std::string>();
            });
            report["checks"] = std::move(checks);
            report["pass"] = ok;
        } else if (act_cmd->parsed()) {
            json aj = load_json(algebra_path);
            GradedSpace A = space_from_json(aj.at("space"));
            Cochain m = cochain_from_json(aj.at("mc"), A);
            PlanarTree t = tree_from_json(load_json(tree_path));
            std::vector<Cochain> gs;
            for (const auto& p : cochain_paths) gs.push_back(cochain_from_json(load_json(p), A));
            Cochain result = act(A, t, gs, m);
            report["command"] = "act";
            report["tree"] = encode(t);
            report["result"] = cochain_to_json(result, A);
        } else if (poset_cmd->parsed()) {
            if (check_limit("P-M", poset_n, lim, report))
                report = run_poset(poset_n, dmin, dmax);
            else
                ok = false;
        } else if (export_cmd->parsed()) {
            if (check_limit(operad, arity, lim, report)) {
                ChainComplexData cx = operad == "M" ? complex_M(arity)
                                      : operad == "P-M" ? complex_P(BaseOperad::M, arity)
                                                        : complex_P(BaseOperad::As, arity);
                verify_complex(cx);
                report["command"] = "export";
                report["operad"] = operad;
                report["arity"] = arity;
                json basis_j = json::object(), diff_j = json::object();
                for (const auto& [q, names] : cx.basis) basis_j[std::to_string(q)] = names;
                for (const auto& [q, m] : cx.diff) {
                    json entries = json::array();
                    for (const auto& [rc, v] : m)
                        entries.push_back(
                            {{"row", rc.first}, {"col", rc.second},
                             {"coeff", rational_to_string(v)}});
                    diff_j[std::to_string(q)] = std::move(entries);
                }
                report["basis"] = std::move(basis_j);
                report["differential"] = std::move(diff_j);
            } else {
                ok = false;
            }
        }
    } catch (const std::exception& e) {
        report["error"] = e.what();
        ok = false;
    }

    std::string text = report.dump(2) + "\n";
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        out << text;
    } else {
        std::cout << text;
    }
    if (format == "table") print_table(report);
    return ok ? 0 : 1;
}
