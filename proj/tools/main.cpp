// Command-line front end: operator-expression parsing, dispatch to the
// library, and deterministic text/JSON result documents.

#include <CLI11.hpp>
#include <json.hpp>

#include "weyl/centralizer.hpp"
#include "weyl/error.hpp"
#include "weyl/expr.hpp"
#include "weyl/filtration.hpp"
#include "weyl/spectral.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace weyl;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "weyl 0.1.0";

/// `@file` indirection for operator arguments. The .op format is UTF-8,
/// one expression, with '#' line comments.
std::string resolve_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) fail(Err::SyntaxError, "cannot open operator file " + arg.substr(1));
    std::string text, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        text += line;
        text += '\n';
    }
    return text;
}

PolyDiffOp op_arg(const std::string& arg) { return parse_operator(resolve_arg(arg)); }

struct Document {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> outputs;
    std::vector<std::pair<std::string, std::string>> provenance;

    void render(bool as_json, std::ostream& os) const {
        if (as_json) {
            ordered_json j;
            j["command"] = command;
            j["inputs"] = ordered_json::object();
            for (const auto& [k, v] : inputs) j["inputs"][k] = v;
            j["outputs"] = ordered_json::object();
            for (const auto& [k, v] : outputs) j["outputs"][k] = v;
            j["provenance"] = ordered_json::object();
            for (const auto& [k, v] : provenance) j["provenance"][k] = v;
            os << j.dump(2) << "\n";
        } else {
            os << "command: " << command << "\n";
            for (const auto& [k, v] : inputs) os << "input." << k << ": " << v << "\n";
            for (const auto& [k, v] : outputs) os << "output." << k << ": " << v << "\n";
            for (const auto& [k, v] : provenance) os << "provenance." << k << ": " << v << "\n";
        }
    }
};

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

/// Working-directory cache for spectral curves, keyed by a content hash of
/// the canonical inputs. Enabled by WEYL_CACHE_DIR.
struct CurveCache {
    std::string dir;
    CurveCache() {
        const char* env = std::getenv("WEYL_CACHE_DIR");
        if (env && *env) dir = env;
    }
    std::string path(const std::string& key) const {
        return dir + "/weyl-curve-" + hex64(fnv1a64(key)) + ".json";
    }
    bool load(const std::string& key, ordered_json* out) const {
        if (dir.empty()) return false;
        std::ifstream in(path(key));
        if (!in) return false;
        try {
            in >> *out;
        } catch (...) {
            return false;
        }
        return true;
    }
    void store(const std::string& key, const ordered_json& j) const {
        if (dir.empty()) return;
        std::ofstream out(path(key));
        if (out) out << j.dump(2) << "\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for commuting ordinary differential operators"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable document");

    std::string arg_l, arg_m, arg_h, arg_lambda, arg_mu;
    bool exact = false;
    int arg_k = 0, arg_order = 0;
    long arg_p = -1, arg_q = -1;
    std::vector<long> arg_bounds;

    auto* c_mul = app.add_subcommand("mul", "compose two operators");
    c_mul->add_option("--L", arg_l)->required();
    c_mul->add_option("--M", arg_m)->required();

    auto* c_comm = app.add_subcommand("commutator", "commutator [L, M]");
    c_comm->add_option("--L", arg_l)->required();
    c_comm->add_option("--M", arg_m)->required();

    auto* c_res = app.add_subcommand("resultant", "determinant of the order-0 extended system");
    c_res->add_option("--L", arg_l)->required();
    c_res->add_option("--M", arg_m)->required();
    c_res->add_flag("--exact", exact, "force fraction-free determinants");

    auto* c_curve = app.add_subcommand("spectral-curve", "curve of a commuting pair");
    c_curve->add_option("--L", arg_l)->required();
    c_curve->add_option("--M", arg_m)->required();
    c_curve->add_flag("--exact", exact, "force fraction-free determinants");

    auto* c_sub = app.add_subcommand("subresultant", "subresultant operator of index k");
    c_sub->add_option("--L", arg_l)->required();
    c_sub->add_option("--M", arg_m)->required();
    c_sub->add_option("--k", arg_k)->required();

    auto* c_gcd = app.add_subcommand("gcd-at-point", "common right divisor over a curve point");
    c_gcd->add_option("--L", arg_l)->required();
    c_gcd->add_option("--M", arg_m)->required();
    c_gcd->add_option("--lambda", arg_lambda)->required();
    c_gcd->add_option("--mu", arg_mu)->required();
    c_gcd->add_flag("--exact", exact, "force fraction-free determinants");

    auto* c_dix = app.add_subcommand("dixmier-test", "symbol power proportionality test");
    c_dix->add_option("--L", arg_l)->required();
    c_dix->add_option("--M", arg_m)->required();
    c_dix->add_option("--p", arg_p, "filtration weight of x (default: test filtration of L)");
    c_dix->add_option("--q", arg_q, "filtration weight of D");

    auto* c_newton = app.add_subcommand("newton", "lattice support of an operator");
    c_newton->add_option("--L", arg_l)->required();

    auto* c_oc = app.add_subcommand("order-constraints", "admissible commutant orders modulo ord L");
    c_oc->add_option("--L", arg_l)->required();

    auto* c_cs = app.add_subcommand("centralizer-search", "monic commuting ansatz of a given order");
    c_cs->add_option("--L", arg_l)->required();
    c_cs->add_option("--order", arg_order)->required();
    c_cs->add_option("--degbound", arg_bounds, "per-coefficient x-degree bounds (low to high)");

    auto* c_triv = app.add_subcommand("triviality-test", "is M a polynomial in L?");
    c_triv->add_option("--L", arg_l)->required();
    c_triv->add_option("--M", arg_m)->required();

    auto* c_bc = app.add_subcommand("bc-pair", "generator search for an order-4 operator");
    c_bc->add_option("--L", arg_l)->required();
    c_bc->add_option("--M", arg_m)->required();

    auto* c_ver = app.add_subcommand("verify-relation", "check h(L, M) = 0");
    c_ver->add_option("--L", arg_l)->required();
    c_ver->add_option("--M", arg_m)->required();
    c_ver->add_option("--curve", arg_h, "curve polynomial in lambda, mu")->required();

    for (auto* sc : app.get_subcommands({})) sc->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Document doc;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (c_mul->parsed()) {
            doc.command = "mul";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            doc.outputs = {{"result", op_to_string(l * m)}};
        } else if (c_comm->parsed()) {
            doc.command = "commutator";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            doc.outputs = {{"result", op_to_string(commutator(l, m))}};
        } else if (c_res->parsed()) {
            doc.command = "resultant";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            MPoly f = diff_resultant(l, m, exact ? DetPath::FractionFree : DetPath::Auto);
            doc.outputs = {{"resultant", f.to_string()}};
            doc.provenance.emplace_back("det_path", exact ? "fraction-free" : "auto");
        } else if (c_curve->parsed()) {
            doc.command = "spectral-curve";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            CurveCache cache;
            std::string key =
                op_to_string(l) + "\x1f" + op_to_string(m) + (exact ? "\x1f" "exact" : "");
            ordered_json cached;
            if (cache.load(key, &cached)) {
                doc.outputs = {{"f", cached["f"]},
                               {"h", cached["h"]},
                               {"r", cached["r"]},
                               {"c", cached["c"]}};
                doc.provenance.emplace_back("det_path", "cache");
            } else {
                PlaneCurve curve = spectral_curve(l, m, exact);
                doc.outputs = {{"f", curve.f.to_string()},
                               {"h", curve.h.to_string()},
                               {"r", std::to_string(curve.r)},
                               {"c", curve.c.to_string()}};
                doc.provenance.emplace_back("det_path", exact ? "fraction-free" : "interpolated");
                ordered_json j;
                for (const auto& [k, v] : doc.outputs) j[k] = v;
                cache.store(key, j);
            }
        } else if (c_sub->parsed()) {
            doc.command = "subresultant";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)},
                          {"M", op_to_string(m)},
                          {"k", std::to_string(arg_k)}};
            doc.outputs = {{"operator", op_to_string(subresultant_op(l, m, arg_k))}};
        } else if (c_gcd->parsed()) {
            doc.command = "gcd-at-point";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            GaussRat l0 = parse_gaussrat(arg_lambda), m0 = parse_gaussrat(arg_mu);
            doc.inputs = {{"L", op_to_string(l)},
                          {"M", op_to_string(m)},
                          {"lambda", l0.to_string()},
                          {"mu", m0.to_string()}};
            PlaneCurve curve = spectral_curve(l, m, exact);
            PolyDiffOp g = gcd_at_point(l, m, curve, l0, m0,
                                        exact ? DetPath::FractionFree : DetPath::Auto);
            doc.outputs = {{"operator", op_to_string(g)},
                           {"h", curve.h.to_string()},
                           {"r", std::to_string(curve.r)}};
            doc.provenance.emplace_back("det_path", exact ? "fraction-free" : "interpolated");
        } else if (c_dix->parsed()) {
            doc.command = "dixmier-test";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            Filtration f;
            if (arg_p >= 0 && arg_q >= 0) {
                f = Filtration{arg_p, arg_q};
            } else {
                f = test_filtration(l);
            }
            DixmierVerdict v = dixmier_test(l, m, f);
            doc.outputs = {
                {"filtration", "(" + std::to_string(f.p) + ", " + std::to_string(f.q) + ")"},
                {"verdict", v.pass ? "candidate admitted" : "candidate excluded"},
                {"c", v.pass ? v.c.to_string() : "-"}};
        } else if (c_newton->parsed()) {
            doc.command = "newton";
            PolyDiffOp l = op_arg(arg_l);
            doc.inputs = {{"L", op_to_string(l)}};
            NewtonDiagram nd = newton_diagram(l);
            std::ostringstream os;
            for (const auto& [i, j] : nd.points) os << "(" << i << ", " << j << ") ";
            std::string pts = os.str();
            if (!pts.empty()) pts.pop_back();
            doc.outputs = {{"points", pts}};
        } else if (c_oc->parsed()) {
            doc.command = "order-constraints";
            PolyDiffOp l = op_arg(arg_l);
            doc.inputs = {{"L", op_to_string(l)}};
            try {
                OrderConstraints oc = order_constraints(l);
                std::ostringstream rs;
                for (std::size_t i = 0; i < oc.residues.size(); ++i)
                    rs << (i ? ", " : "") << oc.residues[i];
                doc.outputs = {{"filtration",
                                "(" + std::to_string(oc.filtration.p) + ", " +
                                    std::to_string(oc.filtration.q) + ")"},
                               {"symbol_base", oc.base.to_string()},
                               {"symbol_power", std::to_string(oc.power)},
                               {"modulus", std::to_string(oc.modulus)},
                               {"residues", "{" + rs.str() + "}"}};
            } catch (const Error& e) {
                if (e.code != Err::NotAPower) throw;
                doc.outputs = {{"residues", "{0}"},
                               {"note", "symbol is not a perfect power; centralizer is C[L] only"}};
            }
        } else if (c_cs->parsed()) {
            doc.command = "centralizer-search";
            PolyDiffOp l = op_arg(arg_l);
            doc.inputs = {{"L", op_to_string(l)}, {"order", std::to_string(arg_order)}};
            CentralizerFamily fam = centralizer_search(l, arg_order, arg_bounds);
            doc.outputs.emplace_back("found", fam.found ? "true" : "false");
            if (fam.found) {
                doc.outputs.emplace_back("particular", op_to_string(fam.particular));
                doc.outputs.emplace_back("basis_dim", std::to_string(fam.basis.size()));
                for (std::size_t i = 0; i < fam.basis.size(); ++i)
                    doc.outputs.emplace_back("basis." + std::to_string(i),
                                             op_to_string(fam.basis[i]));
            }
        } else if (c_triv->parsed()) {
            doc.command = "triviality-test";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            TrivialityResult t = triviality_test(l, m);
            doc.outputs = {{"trivial", t.trivial ? "true" : "false"}};
            if (t.trivial) doc.outputs.emplace_back("p0", t.p0.to_string());
        } else if (c_bc->parsed()) {
            doc.command = "bc-pair";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}};
            BCReport rep = bc_pair(l, m);
            const char* verdict = rep.verdict == BCReport::Verdict::TrivialInCL ? "trivial-in-CL"
                                  : rep.verdict == BCReport::Verdict::AlreadyBCPair
                                      ? "already-bc-pair"
                                      : "new-generator";
            doc.outputs.emplace_back("verdict", verdict);
            if (rep.verdict == BCReport::Verdict::TrivialInCL) {
                doc.outputs.emplace_back("p0", rep.p0.to_string());
            } else {
                doc.outputs.emplace_back("g", std::to_string(rep.g));
                doc.outputs.emplace_back("order", std::to_string(rep.order));
                doc.outputs.emplace_back("B", op_to_string(rep.b));
                doc.outputs.emplace_back("h", rep.h.to_string());
                doc.outputs.emplace_back("b0", rep.b0.to_string());
                doc.outputs.emplace_back("b1", rep.b1.to_string());
                doc.outputs.emplace_back("p", rep.p.to_string());
                std::ostringstream sol;
                for (std::size_t i = 0; i < rep.solution.size(); ++i)
                    sol << (i ? ", " : "") << rep.solution[i].to_string();
                doc.outputs.emplace_back("solution", "(" + sol.str() + ")");
                doc.outputs.emplace_back("irreducibility_assumed",
                                         rep.irreducibility_assumed ? "true" : "false");
            }
        } else if (c_ver->parsed()) {
            doc.command = "verify-relation";
            PolyDiffOp l = op_arg(arg_l), m = op_arg(arg_m);
            MPoly h = parse_poly(resolve_arg(arg_h), {"lambda", "mu"});
            doc.inputs = {{"L", op_to_string(l)}, {"M", op_to_string(m)}, {"h", h.to_string()}};
            doc.outputs = {{"holds", verify_bc_relation(l, m, h) ? "true" : "false"}};
        }
    } catch (const Error& e) {
        std::cerr << "error[" << err_name(e.code) << "]: " << e.what() << "\n";
        return (e.code == Err::SyntaxError || e.code == Err::NonIntegerExponent) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto t1 = std::chrono::steady_clock::now();
    doc.provenance.emplace_back("version", kVersion);
    doc.provenance.emplace_back(
        "timing_us",
        std::to_string(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()));
    doc.render(as_json, std::cout);
    return 0;
}
