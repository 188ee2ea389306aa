// iwg: exact Jacobians of graphs and their growth along cyclic voltage
// p-towers of covers.

#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iwg/errors.hpp"
#include "iwg/graph.hpp"
#include "iwg/iwasawa.hpp"
#include "iwg/jacobian.hpp"
#include "iwg/numutil.hpp"
#include "iwg/tower.hpp"
#include "iwg/voltage.hpp"

namespace {

struct CommonOpts {
    std::string graph_path;
    std::string voltage_path;
    long long p = 0;
    long long levels = -1;
    std::string format;
    std::size_t max_vertices = iwg::kDefaultMaxVertices;
    int removed_vertex = 1;
    bool verbose = false;
    std::vector<long long> seed_example1;  // [n, p]
    std::string exponents;
    long long n = 0;
};

void add_guard_option(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--max-vertices", o.max_vertices, "Largest derived graph allowed per level")
        ->envname("IWG_MAX_VERTICES");
}

void add_format_option(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

// --format is shared between subcommands; empty means the command default.
std::string format_or(const CommonOpts& o, const char* dflt) {
    return o.format.empty() ? dflt : o.format;
}

void add_voltage_input_options(CLI::App* cmd, CommonOpts& o, bool levels_required) {
    cmd->add_option("--graph", o.graph_path, "Graph file (line 1: n; then edges 'i j')");
    cmd->add_option("--voltages", o.voltage_path, "Voltage file (lines 'i j a'; absent edges carry 0)");
    cmd->add_option("--p", o.p, "Prime p of the tower");
    auto* lv = cmd->add_option("--levels", o.levels, "Tower depth M (levels 0..M)");
    if (levels_required) lv->required();
    cmd->add_option("--seed-example1", o.seed_example1,
                    "n p: use the complete graph K_n with voltage 1 on edge (1,2)")
        ->expected(2);
}

// Resolves --graph/--voltages/--p vs --seed-example1 into an assignment.
iwg::VoltageAssignment resolve_voltage_input(const CommonOpts& o) {
    if (!o.seed_example1.empty()) {
        if (!o.graph_path.empty() || !o.voltage_path.empty())
            throw iwg::input_error("--seed-example1 conflicts with --graph/--voltages");
        const long long n = o.seed_example1[0];
        const long long p = o.seed_example1[1];
        if (n < 3) throw iwg::input_error("--seed-example1: n must be at least 3");
        if (o.p != 0 && o.p != p) throw iwg::input_error("--p conflicts with --seed-example1");
        return iwg::make_voltage_assignment(iwg::complete_graph(static_cast<int>(n)), {{{1, 2}, 1}}, p);
    }
    if (o.graph_path.empty()) throw iwg::input_error("missing --graph (or --seed-example1)");
    if (o.p == 0) throw iwg::input_error("missing --p");
    iwg::Graph base = iwg::load_graph_file(o.graph_path);
    if (o.voltage_path.empty()) throw iwg::input_error("this command requires --voltages (or --seed-example1)");
    return iwg::load_voltage_file(std::move(base), o.voltage_path, o.p);
}

void reject_csv(const std::string& format, const char* cmd) {
    if (format == "csv")
        throw iwg::input_error(std::string(cmd) + ": csv output is only available for 'tower'");
}

void verbose_stamp(const CommonOpts& o, const std::string& what) {
    if (!o.verbose) return;
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&now));
    std::cerr << "[iwg " << buf << "Z] " << what << "\n";
}

std::string factor_display(const iwg::InvariantFactors& f) {
    if (f.factors.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (i) out += " × ";
        out += "Z/" + f.factors[i].get_str();
    }
    return out;
}

int run_jacobian(const CommonOpts& o) {
    const std::string format = format_or(o, "text");
    reject_csv(format, "jacobian");
    iwg::Graph g = iwg::load_graph_file(o.graph_path);
    verbose_stamp(o, "jacobian of " + o.graph_path);
    iwg::InvariantFactors f = iwg::jacobian(g, o.removed_vertex);
    mpz_class trees = iwg::spanning_tree_count(g);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"invariant_factors\":[";
        for (size_t i = 0; i < f.factors.size(); ++i)
            out << (i ? "," : "") << '"' << f.factors[i].get_str() << '"';
        out << "],\"rank_of_free_part\":" << f.rank_of_free_part << ",\"spanning_trees\":\""
            << trees.get_str() << "\"}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "J(X) ≅ " << factor_display(f) << ", spanning trees = " << trees.get_str() << "\n";
    }
    return 0;
}

int run_derive(const CommonOpts& o) {
    const std::string format = format_or(o, "text");
    reject_csv(format, "derive");
    iwg::VoltageAssignment va = resolve_voltage_input(o);
    iwg::DerivedGraph dg = iwg::derive(va, o.levels, o.max_vertices);
    verbose_stamp(o, "derived level " + std::to_string(o.levels));
    if (format == "json") {
        std::ostringstream out;
        out << "{\"n\":" << dg.graph.vertex_count() << ",\"edges\":[";
        bool first = true;
        for (const auto& [i, j] : dg.graph.edges()) {
            out << (first ? "" : ",") << "[" << i << "," << j << "]";
            first = false;
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << iwg::format_graph(dg.graph);
    }
    return 0;
}

int run_tower(const CommonOpts& o) {
    iwg::VoltageAssignment va = resolve_voltage_input(o);
    iwg::TowerSpec spec{std::move(va), o.levels, o.max_vertices, o.verbose};
    verbose_stamp(o, "tower to level " + std::to_string(o.levels));
    iwg::TowerReport report = iwg::analyze_tower(spec);
    const std::string format = format_or(o, "json");
    if (format == "csv")
        std::cout << iwg::tower_report_csv(report);
    else if (format == "text")
        std::cout << iwg::tower_report_text(report);
    else
        std::cout << iwg::tower_report_json(report, 2) << "\n";
    if (report.truncated_at_level) {
        std::cerr << "iwg: tower truncated at level " << *report.truncated_at_level
                  << " (vertex guard " << o.max_vertices << ")\n";
        return 1;
    }
    return 0;
}

std::vector<long long> parse_exponent_list(const std::string& csv) {
    std::vector<long long> e;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            e.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw iwg::input_error("--exponents: cannot parse '" + item + "' as an integer");
        }
    }
    if (e.empty()) throw iwg::input_error("--exponents: empty list");
    return e;
}

int run_fit(const CommonOpts& o) {
    const std::string format = format_or(o, "json");
    reject_csv(format, "fit");
    std::vector<long long> e;
    long long p = o.p;
    if (!o.exponents.empty()) {
        if (p == 0) throw iwg::input_error("missing --p");
        e = parse_exponent_list(o.exponents);
    } else {
        iwg::VoltageAssignment va = resolve_voltage_input(o);
        if (o.levels < 0) throw iwg::input_error("missing --levels for the tower run");
        p = va.prime;
        iwg::TowerSpec spec{std::move(va), o.levels, o.max_vertices};
        iwg::TowerReport report = iwg::analyze_tower(spec);
        if (report.truncated_at_level)
            throw iwg::guard_error("fit: tower truncated at level " +
                                   std::to_string(*report.truncated_at_level));
        for (const auto& rec : report.levels) {
            if (!rec.e_m)
                throw iwg::math_error("fit: level " + std::to_string(rec.m) +
                                      " is disconnected; no exponent sequence to fit");
            e.push_back(*rec.e_m);
        }
    }
    verbose_stamp(o, "fitting " + std::to_string(e.size()) + " exponents");
    iwg::IwasawaFit fit = iwg::fit_invariants(e, p);
    if (format == "text") {
        std::cout << "μ=" << fit.mu << " λ=" << fit.lambda << " ν=" << fit.nu << " m0=" << fit.m0
                  << " (" << fit.verified_levels << " levels verified)\n";
    } else {
        std::cout << iwg::fit_json(fit) << "\n";
    }
    return 0;
}

int run_theta(const CommonOpts& o) {
    const std::string format = format_or(o, "json");
    reject_csv(format, "theta");
    iwg::VoltageAssignment va = resolve_voltage_input(o);
    std::vector<long long> reduction_levels;
    for (long long m = 0; m <= o.levels; ++m) reduction_levels.push_back(m);
    verbose_stamp(o, "stickelberger element");
    iwg::StickelbergerReport report = iwg::stickelberger(va, reduction_levels);
    if (format == "text") {
        std::cout << "Θ = " << report.theta.to_string() << "\n";
        std::cout << "content valuation v_" << report.p << " = "
                  << (report.content_valuation ? std::to_string(*report.content_valuation) : "inf")
                  << "\n";
        std::cout << "verdict: " << iwg::to_string(report.verdict) << "\n";
        for (const auto& [m, theta_m] : report.level_reductions)
            std::cout << "theta mod (x^" << report.p << "^" << m << " - 1) = " << theta_m.to_string()
                      << "\n";
    } else {
        std::cout << iwg::stickelberger_json(report) << "\n";
    }
    return 0;
}

int run_verify_example1(const CommonOpts& o) {
    const std::string format = format_or(o, "text");
    reject_csv(format, "verify-example1");
    if (o.n == 0) throw iwg::input_error("missing --n");
    if (o.p == 0) throw iwg::input_error("missing --p");
    if (o.levels < 0) throw iwg::input_error("missing --levels");
    verbose_stamp(o, "verify-example1");
    iwg::Example1Result r = iwg::verify_example1(o.n, o.p, o.levels, o.max_vertices);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"pass\":" << (r.pass ? "true" : "false") << ",\"expected_mu\":" << r.expected.mu
            << ",\"expected_lambda\":" << r.expected.lambda;
        if (r.fit)
            out << ",\"mu\":" << r.fit->mu << ",\"lambda\":" << r.fit->lambda << ",\"nu\":" << r.fit->nu
                << ",\"m0\":" << r.fit->m0;
        out << ",\"difference_check\":" << (r.difference_check ? "true" : "false") << ",\"exponents\":[";
        for (size_t i = 0; i < r.exponents.size(); ++i) out << (i ? "," : "") << r.exponents[i];
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        const char* tag = r.pass ? "PASS" : "FAIL";
        if (r.fit) {
            std::cout << tag << ": μ=" << r.fit->mu << " λ=" << r.fit->lambda << " (expected μ="
                      << r.expected.mu << " λ=" << r.expected.lambda << ")\n";
        } else if (r.difference_check) {
            std::cout << tag << ": first differences match μ=" << r.expected.mu << " λ="
                      << r.expected.lambda << " on " << (r.exponents.size() - 1) << " level pairs\n";
        } else {
            std::cout << tag << "\n";
        }
        if (!r.pass && !r.detail.empty()) std::cout << "  " << r.detail << "\n";
    }
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jacobians of graphs along cyclic voltage p-towers of covers"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* jac = app.add_subcommand("jacobian", "Invariant factors and spanning-tree count");
    jac->add_option("--graph", o.graph_path)->required();
    jac->add_option("--removed-vertex", o.removed_vertex, "Vertex deleted from the Laplacian");
    add_format_option(jac, o);

    auto* der = app.add_subcommand("derive", "Level-m derived cover as an edge list");
    add_voltage_input_options(der, o, true);
    add_format_option(der, o);
    add_guard_option(der, o);

    auto* tow = app.add_subcommand("tower", "Per-level Jacobian p-data of the tower");
    add_voltage_input_options(tow, o, true);
    add_format_option(tow, o);
    add_guard_option(tow, o);

    auto* fit = app.add_subcommand("fit", "Fit e_m = mu*p^m + lambda*m + nu to exponents");
    add_voltage_input_options(fit, o, false);
    fit->add_option("--exponents", o.exponents, "Comma-separated e_0,e_1,...");
    add_format_option(fit, o);
    add_guard_option(fit, o);

    auto* the = app.add_subcommand("theta", "Reduced Stickelberger element and rank verdict");
    add_voltage_input_options(the, o, false);
    add_format_option(the, o);

    auto* ver = app.add_subcommand("verify-example1", "Check the K_n closed form against a tower run");
    ver->add_option("--n", o.n, "Number of vertices of the complete base graph");
    ver->add_option("--p", o.p, "Prime p");
    ver->add_option("--levels", o.levels, "Tower depth M");
    add_format_option(ver, o);
    add_guard_option(ver, o);

    for (auto* cmd : {jac, der, tow, fit, the, ver})
        cmd->add_flag("--verbose", o.verbose, "Run notes on stderr; tower adds |J| per level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(jac)) return run_jacobian(o);
        if (app.got_subcommand(der)) return run_derive(o);
        if (app.got_subcommand(tow)) return run_tower(o);
        if (app.got_subcommand(fit)) return run_fit(o);
        if (app.got_subcommand(the)) return run_theta(o);
        if (app.got_subcommand(ver)) return run_verify_example1(o);
    } catch (const iwg::input_error& e) {
        std::cerr << "iwg: " << e.what() << "\n";
        return 2;
    } catch (const iwg::math_error& e) {
        std::cerr << "iwg: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "iwg: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
