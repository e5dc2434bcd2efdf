// covercycle: exact counting of covering cycles, Euler cycles, and the
// determinant-product identity in small multigraphs.
//
// Exit codes: 0 success, 1 parse error, 2 precondition violation,
// 3 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "covercycle/covercycle.hpp"
#include "json.hpp"

using namespace covercycle;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string graph_path;
    std::string builtin;
    std::string length_spec = "1";
    int order = -1;  // -1: default 2|E| + 4
    std::string sign = "both";
    std::string route = "exp";
    int subset_limit = 20;
    std::uint64_t oracle_cap = 10'000'000;
    std::string format = "json";
};

struct LengthRange {
    unsigned lo = 1, hi = 1;
};

LengthRange parse_length(const std::string& spec) {
    LengthRange r;
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(spec));
        } else {
            r.lo = static_cast<unsigned>(std::stoul(spec.substr(0, dots)));
            r.hi = static_cast<unsigned>(std::stoul(spec.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        throw ParseError("bad length spec '" + spec + "' (expected INT or INT..INT)");
    }
    if (r.lo < 1 || r.hi < r.lo) throw PreconditionError("length range must satisfy 1 <= lo <= hi");
    return r;
}

MultiGraph builtin_graph(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    int param = 0;
    if (colon != std::string::npos) {
        try {
            param = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad builtin parameter in '" + spec + "'");
        }
    }
    if (kind == "rose" && param >= 1) return rose(param);
    if (kind == "theta") return theta_graph();
    if (kind == "cycle" && param >= 1) return cycle_graph(param);
    if (kind == "dircycle" && param >= 1) return directed_cycle(param);
    throw ParseError("unknown builtin '" + spec + "' (expected rose:R | theta | cycle:n | dircycle:n)");
}

MultiGraph load_graph(const RunConfig& cfg) {
    MultiGraph g;
    if (!cfg.builtin.empty()) {
        g = builtin_graph(cfg.builtin);
    } else if (!cfg.graph_path.empty()) {
        std::ifstream in(cfg.graph_path);
        if (!in) throw ParseError("cannot open graph file '" + cfg.graph_path + "'");
        g = parse_graph(in);
    } else {
        g = parse_graph(std::cin);
    }
    g.validate();
    if (!g.directed) {
        const MultiGraph pruned = prune_leaves(g);
        if (pruned.edges.size() != g.edges.size()) {
            std::cerr << "warning: removed " << g.edges.size() - pruned.edges.size()
                      << " leaf edge(s); counts refer to the pruned edge set\n";
            g = pruned;
        }
    }
    return g;
}

int effective_order(const RunConfig& cfg, const MultiGraph& g) {
    const int order = cfg.order > 0 ? cfg.order : default_series_order(g);
    if (order < g.edge_count()) throw PreconditionError("--order must be at least |E|");
    return order;
}

std::string rat_str(const Rat& r) { return r.str(); }

ordered_json coefficients_json(const std::vector<Rat>& d, int order) {
    ordered_json out = ordered_json::object();
    for (int i = 1; i <= order; ++i) out[std::to_string(i)] = rat_str(d[static_cast<std::size_t>(i)]);
    return out;
}

ordered_json polynomial_json(const Polynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

ordered_json graph_json(const MultiGraph& g) {
    return ordered_json{{"vertices", g.vertex_count},
                        {"edges", g.edge_count()},
                        {"directed", g.directed}};
}

void emit(const RunConfig& cfg, const ordered_json& doc) {
    if (cfg.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // Flat human-oriented table; not stability-guaranteed.
    std::ostringstream out;
    std::function<void(const std::string&, const ordered_json&)> walk =
        [&](const std::string& prefix, const ordered_json& node) {
            if (node.is_object()) {
                for (const auto& [key, value] : node.items())
                    walk(prefix.empty() ? key : prefix + "." + key, value);
            } else if (node.is_array()) {
                out << prefix << " = " << node.dump() << "\n";
            } else {
                out << prefix << " = " << (node.is_string() ? node.get<std::string>() : node.dump())
                    << "\n";
            }
        };
    walk("", doc);
    std::cout << out.str();
}

int run_census(const RunConfig& cfg) {
    const MultiGraph g = load_graph(cfg);
    const LengthRange range = parse_length(cfg.length_spec);
    CensusOptions opts;
    opts.subset_limit = cfg.subset_limit;
    const CensusTable table = compute_census(g, range.hi, opts);
    ordered_json omega_out = ordered_json::object();
    ordered_json theta_out = ordered_json::object();
    for (unsigned n = range.lo; n <= range.hi; ++n) {
        omega_out[std::to_string(n)] = table.omega_at(n).str();
        theta_out[std::to_string(n)] = table.theta_at(n).str();
    }
    emit(cfg, ordered_json{{"graph", graph_json(g)}, {"omega", omega_out}, {"theta", theta_out}});
    return 0;
}

int run_euler(const RunConfig& cfg) {
    const MultiGraph g = load_graph(cfg);
    CensusOptions opts;
    opts.subset_limit = cfg.subset_limit;
    if (!g.directed) {
        emit(cfg, ordered_json{{"graph", graph_json(g)},
                               {"euler_cycles", euler_count(g, opts).str()}});
        return 0;
    }
    const HamiltonianReport rep = hamiltonian_count(g, opts);
    if (!rep.halved_integral)
        std::cerr << "warning: theta(|V|)/2 is not an integer; reporting the class count "
                     "alongside the halved value\n";
    emit(cfg, ordered_json{{"graph", graph_json(g)},
                           {"hamiltonian_marked", rep.marked_count.str()},
                           {"hamiltonian_classes", rep.classes.str()},
                           {"section4_halved", rat_str(rep.paper_halved)},
                           {"halved_integral", rep.halved_integral}});
    return 0;
}

int run_series(const RunConfig& cfg) {
    const MultiGraph g = load_graph(cfg);
    const int order = effective_order(cfg, g);
    CensusOptions opts;
    opts.subset_limit = cfg.subset_limit;

    auto compute = [&](Sign sign) -> std::vector<Rat> {
        if (cfg.route == "exp") {
            const CensusTable census = compute_census(g, static_cast<unsigned>(order), opts);
            return d_from_exp(h_series(census, order), sign);
        }
        if (cfg.route == "partition") {
            const CensusTable census = compute_census(g, static_cast<unsigned>(order), opts);
            std::vector<Rat> d(static_cast<std::size_t>(order) + 1);
            for (int i = 1; i <= order; ++i)
                d[static_cast<std::size_t>(i)] =
                    d_from_partitions(census, static_cast<unsigned>(i), sign);
            return d;
        }
        if (cfg.route == "determinant") return d_from_determinants(g, order, sign, opts);
        throw ParseError("unknown route '" + cfg.route + "'");
    };

    ordered_json doc{{"graph", graph_json(g)}, {"order", order}, {"route", cfg.route}};
    if (cfg.sign == "plus" || cfg.sign == "both")
        doc["d_plus"] = coefficients_json(compute(Sign::plus), order);
    if (cfg.sign == "minus" || cfg.sign == "both")
        doc["d_minus"] = coefficients_json(compute(Sign::minus), order);
    emit(cfg, doc);
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const MultiGraph g = load_graph(cfg);
    const int order = effective_order(cfg, g);
    CensusOptions opts;
    opts.subset_limit = cfg.subset_limit;
    const IdentityReport rep = verify_identity(g, order, opts);
    ordered_json doc{
        {"graph", graph_json(g)},
        {"order", rep.order},
        {"n0", rep.n0},
        {"d_plus", coefficients_json(rep.d_plus, order)},
        {"d_minus", coefficients_json(rep.d_minus, order)},
        {"det_product",
         ordered_json{{"numerator", polynomial_json(rep.product.numerator)},
                      {"denominator", polynomial_json(rep.product.denominator)}}},
        {"routes_agree", rep.routes_agree},
        {"all_integral", rep.all_integral},
        {"infinite_product", rep.infinite_product_ok},
        {"items",
         ordered_json{{"a", rep.item_a},
                      {"b", rep.item_b},
                      {"c", rep.item_c},
                      {"d", rep.item_d},
                      {"e", rep.item_e},
                      {"f", rep.item_f},
                      {"g", rep.item_g}}},
        {"recurrences_below_n0", rep.recurrences_below_n0},
        {"euler_from_d", rep.euler_from_d.str()},
        {"euler_consistent", rep.euler_consistent},
        {"passed", rep.passed()},
    };
    emit(cfg, doc);
    if (!rep.routes_agree || !rep.all_integral)
        throw ConsistencyError("d-coefficient routes disagree");
    return rep.passed() ? 0 : 3;
}

int run_oracle(const RunConfig& cfg) {
    const MultiGraph g = load_graph(cfg);
    const LengthRange range = parse_length(cfg.length_spec);
    CensusOptions opts;
    opts.subset_limit = cfg.subset_limit;
    OracleOptions oracle_opts;
    oracle_opts.cap = cfg.oracle_cap;

    const CensusTable table = compute_census(g, range.hi, opts);
    const IntMatrix t = g.directed ? directed_edge_matrix(g)
                                   : edge_adjacency_matrix(symmetrize(g));
    ordered_json rows = ordered_json::array();
    bool all_match = true;
    for (unsigned n = range.lo; n <= range.hi; ++n) {
        const Int closed = count_closed_walks(g, n, oracle_opts);
        const Int covering = count_covering_walks(g, n, oracle_opts);
        const Int classes = count_nonperiodic_classes(g, n, oracle_opts);
        const Int tr = trace_power(t, n);
        const bool match =
            closed == tr && covering == table.omega_at(n) && classes == table.theta_at(n);
        all_match = all_match && match;
        rows.push_back(ordered_json{{"N", n},
                                    {"trace", tr.str()},
                                    {"closed_walks", closed.str()},
                                    {"omega", table.omega_at(n).str()},
                                    {"covering_walks", covering.str()},
                                    {"theta", table.theta_at(n).str()},
                                    {"nonperiodic_classes", classes.str()},
                                    {"match", match}});
    }
    emit(cfg, ordered_json{{"graph", graph_json(g)}, {"rows", rows}, {"all_match", all_match}});
    if (!all_match) throw ConsistencyError("oracle disagrees with the matrix route");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact covering-cycle, Euler-cycle, and determinant-identity calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("-g,--graph", cfg.graph_path, "graph file (default: stdin)");
    app.add_option("--builtin", cfg.builtin, "builtin graph: rose:R | theta | cycle:n | dircycle:n");
    app.add_option("-N,--length", cfg.length_spec, "cycle length or range INT[..INT]");
    app.add_option("--order", cfg.order, "series truncation order (default 2|E|+4)");
    app.add_option("--sign", cfg.sign, "plus | minus | both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    app.add_option("--route", cfg.route, "series route: exp | partition | determinant")
        ->check(CLI::IsMember({"exp", "partition", "determinant"}));
    app.add_option("--subset-limit", cfg.subset_limit, "max |E| for inclusion-exclusion")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-cap", cfg.oracle_cap, "brute-force partial-walk cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* census_cmd = app.add_subcommand("census", "omega(N) and theta(N) over a length range");
    auto* euler_cmd = app.add_subcommand("euler", "Euler cycle count (undirected) or Hamiltonian report (directed)");
    auto* series_cmd = app.add_subcommand("series", "d coefficients through the truncation order");
    auto* verify_cmd = app.add_subcommand("verify", "full identity report: three routes plus theorem items");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counts versus the matrix route");

    CLI11_PARSE(app, argc, argv);

    try {
        if (census_cmd->parsed()) return run_census(cfg);
        if (euler_cmd->parsed()) return run_euler(cfg);
        if (series_cmd->parsed()) return run_series(cfg);
        if (verify_cmd->parsed()) return run_verify(cfg);
        if (oracle_cmd->parsed()) return run_oracle(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
