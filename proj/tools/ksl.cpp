// ksl: command-line front end for Kloosterman-Salem computations.
//
//   ksl compute --ring SPEC [--format json|csv]
//   ksl scan    --family PATTERN [--format csv|json]
//   ksl graph   --ring SPEC [--format json|edges] [--edges PATH]
//   ksl verify  [SUITE] [--seed S] [--format json|text]
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 guard exceeded,
// 4 internal invariant failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksl/char_sums.hpp"
#include "ksl/extremal.hpp"
#include "ksl/ring.hpp"
#include "ksl/ring_spec.hpp"
#include "ksl/sgraph.hpp"
#include "ksl/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string ring;
    std::string family;
    std::string suite = "all";
    std::string format;
    std::string out;
    std::string edges;
    double tol = 1e-9;
    std::uint64_t guard = ksl::kDefaultSizeGuard;
    unsigned jobs = 1;
    std::uint64_t seed = 42;
};

// Values pass through 12 significant digits so output does not depend on
// the last bits of floating arithmetic.
double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ksl::InvalidParameter("cannot open output file " + cfg.out);
    f << text;
}

ksl::KSOptions ks_options(const RunConfig& cfg) {
    ksl::KSOptions o;
    o.tolerance = cfg.tol;
    o.jobs = cfg.jobs;
    return o;
}

ksl::RingOptions ring_options(const RunConfig& cfg) { return ksl::RingOptions{cfg.guard}; }

Json ledger_json(const ksl::BoundLedger& ledger) {
    Json arr = Json::array();
    for (const auto& r : ledger.records)
        arr.push_back({{"name", r.name},
                       {"source", r.source},
                       {"inequality", r.inequality},
                       {"lhs", num(r.lhs)},
                       {"rhs", num(r.rhs)},
                       {"pass", r.pass}});
    return arr;
}

int cmd_compute(const RunConfig& cfg) {
    const ksl::Ring ring(ksl::parse_ring_spec(cfg.ring), ring_options(cfg));
    auto opts = ks_options(cfg);
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    if (format == "csv") {
        opts.record_table = true;
        const auto rep = ksl::kloosterman_salem(ring, opts);
        std::ostringstream os;
        os << "m,n,K_real,K_imag,K_abs\n";
        const auto q = rep.size;
        // Rounding residue of exact zeros would otherwise print as 1e-16.
        const double eps = opts.tolerance * std::sqrt(static_cast<double>(rep.units));
        auto snap = [&](double x) { return std::abs(x) < eps ? 0.0 : x; };
        for (std::uint64_t m = 0; m < q; ++m)
            for (std::uint64_t n = 0; n < q; ++n) {
                const auto k = rep.table[m * q + n];
                os << m << "," << n << "," << fmt12(snap(k.real())) << "," << fmt12(snap(k.imag())) << ","
                   << fmt12(snap(std::abs(k))) << "\n";
            }
        emit(cfg, os.str());
        return 0;
    }
    if (format != "json") throw ksl::InvalidParameter("compute supports --format json or csv");
    const auto rep = ksl::kloosterman_salem(ring, opts);
    const auto cert = ksl::is_extremal(ring);
    ksl::LedgerOptions lo;
    lo.ks = opts;
    const auto ledger = ksl::bound_ledger(ring, rep, lo);
    Json argmax = Json::array();
    for (const auto& [m, n] : rep.argmax) argmax.push_back({m, n});
    Json j{{"schema", 1},
           {"ring", rep.ring},
           {"size", rep.size},
           {"units", rep.units},
           {"C", num(rep.C)},
           {"C_squared", num(rep.C * rep.C)},
           {"sqrt_units", num(rep.sqrt_units())},
           {"argmax", argmax},
           {"extremal", cert.extremal},
           {"bounds", ledger_json(ledger)}};
    emit(cfg, j.dump(2) + "\n");
    return ledger.all_pass() ? 0 : 4;
}

// fields:N, zmod:N, boolean:N, list:SPEC;SPEC;...
std::vector<ksl::RingSpec> expand_family(const std::string& pattern) {
    const auto colon = pattern.find(':');
    if (colon == std::string::npos) throw ksl::ParseError(0, "family must look like kind:argument");
    const std::string kind = pattern.substr(0, colon), arg = pattern.substr(colon + 1);
    std::vector<ksl::RingSpec> out;
    if (kind == "list") {
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(ksl::parse_ring_spec(item));
        if (out.empty()) throw ksl::ParseError(colon + 1, "empty ring list");
        return out;
    }
    std::uint64_t bound = 0;
    try {
        std::size_t used = 0;
        bound = std::stoull(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw ksl::ParseError(colon + 1, "expected an integer bound");
    }
    if (kind == "fields") {
        for (std::uint64_t q = 2; q <= bound; ++q)
            if (ksl::prime_power(q)) out.push_back(ksl::galois(q));
    } else if (kind == "zmod") {
        for (std::uint64_t n = 2; n <= bound; ++n) out.push_back(ksl::zmod(n));
    } else if (kind == "boolean") {
        if (bound > 64) throw ksl::ParseError(colon + 1, "boolean power must be <= 64");
        for (std::uint64_t n = 1; n <= bound; ++n) out.push_back(ksl::power(ksl::galois(2), n));
    } else {
        throw ksl::ParseError(0, "unknown family kind '" + kind + "'");
    }
    if (out.empty()) throw ksl::ParseError(colon + 1, "family is empty");
    return out;
}

int cmd_scan(const RunConfig& cfg) {
    const auto family = expand_family(cfg.family);
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    if (format != "csv" && format != "json") throw ksl::InvalidParameter("scan supports --format csv or json");
    std::ostringstream os;
    Json rows = Json::array();
    if (format == "csv") os << "ring,size,units,C,C_over_sqrt_units,extremal,is_field,is_boolean\n";
    for (const auto& spec : family) {
        const ksl::Ring ring(spec, ring_options(cfg));
        const auto rep = ksl::kloosterman_salem(ring, ks_options(cfg));
        const bool extremal = ksl::is_extremal(ring).extremal;
        const double ratio = rep.C / rep.sqrt_units();
        if (format == "csv") {
            // Ring names can contain commas inside polynomials.
            os << '"' << rep.ring << "\"," << rep.size << "," << rep.units << "," << fmt12(rep.C) << ","
               << fmt12(ratio) << "," << extremal << "," << ring.is_field() << "," << ring.is_boolean() << "\n";
        } else {
            rows.push_back({{"ring", rep.ring},
                            {"size", rep.size},
                            {"units", rep.units},
                            {"C", num(rep.C)},
                            {"C_over_sqrt_units", num(ratio)},
                            {"extremal", extremal},
                            {"is_field", ring.is_field()},
                            {"is_boolean", ring.is_boolean()}});
        }
    }
    if (format == "json") os << Json{{"schema", 1}, {"family", cfg.family}, {"rows", rows}}.dump(2) << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_graph(const RunConfig& cfg) {
    const ksl::Ring ring(ksl::parse_ring_spec(cfg.ring), ring_options(cfg));
    const ksl::SGraph g = ksl::hyperbola_graph(ring);
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    if (format != "json" && format != "edges") throw ksl::InvalidParameter("graph supports --format json or edges");
    if (!cfg.edges.empty()) {
        std::ofstream f(cfg.edges, std::ios::binary);
        if (!f) throw ksl::InvalidParameter("cannot open edge file " + cfg.edges);
        ksl::write_edge_list(g, f);
    }
    if (format == "edges") {
        std::ostringstream os;
        ksl::write_edge_list(g, os);
        emit(cfg, os.str());
        return 0;
    }
    const auto rep = ksl::spectrum(g, cfg.jobs, cfg.tol);
    const auto ks = ksl::kloosterman_salem(ring, ks_options(cfg));
    const bool extremal = ksl::is_extremal(ring).extremal;
    const auto conn = ksl::connectivity_report(g, rep);
    const auto gap = ksl::spectral_gap(g, rep, ks.C, extremal);
    Json j{{"schema", 1},
           {"ring", ring.name()},
           {"vertices", g.vertex_count()},
           {"degree", g.degree()},
           {"edges", ksl::edge_count(g)},
           {"C", num(ks.C)},
           {"extremal", extremal},
           {"components", rep.components},
           {"connected", rep.connected},
           {"bipartite", rep.bipartite},
           {"traversal_agrees", conn.consistent},
           {"lambda2", num(rep.lambda2)},
           {"second_eigenvalue", num(rep.second_eigenvalue)},
           {"gap", num(rep.gap)},
           {"epsilon", num(rep.epsilon)},
           {"ramanujan", rep.ramanujan}};
    if (extremal) {
        j["gap_formula"] = nullptr;
        j["gap_flag"] = "extremal ring: gap formula inapplicable";
    } else {
        const auto ex = ksl::expander_and_ramanujan(g, ks.C, false, &rep);
        j["gap_formula"] = num(gap.formula);
        j["gap_agrees"] = gap.agrees;
        j["epsilon_formula"] = num(ex.epsilon);
        j["ramanujan_formula"] = ex.ramanujan;
    }
    emit(cfg, j.dump(2) + "\n");
    return conn.consistent && gap.agrees ? 0 : 4;
}

Json suite_json(const ksl::SuiteResult& s, const RunConfig& cfg) {
    Json crit = Json::array();
    for (const auto& c : s.criteria) {
        Json inst = Json::array();
        for (const auto& r : c.instances) {
            Json values = Json::object();
            for (const auto& [k, v] : r.values) values[k] = num(v);
            inst.push_back({{"claim", r.claim}, {"instance", r.instance}, {"pass", r.pass}, {"values", values}});
        }
        crit.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass()}, {"instances", inst}});
    }
    return Json{{"schema", 1}, {"suite", s.suite}, {"seed", cfg.seed}, {"pass", s.pass()}, {"criteria", crit}};
}

std::string suite_text(const ksl::SuiteResult& s) {
    std::ostringstream os;
    for (const auto& c : s.criteria) {
        char line[256];
        std::snprintf(line, sizeof line, "[%s] %2d %s (%zu instances, %.3f s)\n", c.pass() ? "PASS" : "FAIL", c.id,
                      c.title.c_str(), c.instances.size(), c.seconds);
        os << line;
        for (const auto& r : c.instances) {
            if (r.pass) continue;
            os << "       failed: " << r.instance << " -- " << r.claim;
            for (const auto& [k, v] : r.values) os << " " << k << "=" << fmt12(v);
            os << "\n";
        }
    }
    char tail[128];
    std::snprintf(tail, sizeof tail, "suite %s: %s (%.3f s)\n", s.suite.c_str(), s.pass() ? "PASS" : "FAIL",
                  s.seconds);
    os << tail;
    return os.str();
}

int cmd_verify(const RunConfig& cfg) {
    ksl::VerifyConfig vc;
    vc.seed = cfg.seed;
    vc.jobs = cfg.jobs;
    vc.tolerance = cfg.tol;
    const auto s = ksl::run_suite(cfg.suite, vc);
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    if (format == "json") {
        emit(cfg, suite_json(s, cfg).dump(2) + "\n");
        std::cerr << suite_text(s);
    } else if (format == "text") {
        emit(cfg, suite_text(s));
    } else {
        throw ksl::InvalidParameter("verify supports --format json or text");
    }
    return s.pass() ? 0 : 1;
}

std::uint64_t default_guard() {
    if (const char* env = std::getenv("KSL_GUARD")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "ksl: ignoring invalid KSL_GUARD='" << env << "'\n";
        }
    }
    return ksl::kDefaultSizeGuard;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kloosterman-Salem numbers of finite rings"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.guard = default_guard();

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format");
        sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
        sub->add_option("--tol", cfg.tol, "Tolerance for floating comparisons")->check(CLI::PositiveNumber);
        sub->add_option("--guard", cfg.guard, "Maximum ring size (overrides KSL_GUARD)");
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
        sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    };

    auto* compute = app.add_subcommand("compute", "C_R, argmax pairs, extremality and the bound ledger");
    compute->add_option("--ring", cfg.ring, "Ring spec, e.g. 'GF(9)' or 'Z/4 x GF(2)'")->required();
    common(compute);

    auto* scan = app.add_subcommand("scan", "Table of C_R over a family of rings");
    scan->add_option("--family", cfg.family, "fields:N | zmod:N | boolean:N | list:SPEC;SPEC;...")->required();
    common(scan);

    auto* graph = app.add_subcommand("graph", "Hyperbola graph spectrum and edge list");
    graph->add_option("--ring", cfg.ring, "Ring spec")->required();
    graph->add_option("--edges", cfg.edges, "Also write the edge list to this file");
    common(graph);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", cfg.suite, "bounds | extremal-fields | products | pullback | graphs | counting | matrix | all");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compute) return cmd_compute(cfg);
        if (*scan) return cmd_scan(cfg);
        if (*graph) return cmd_graph(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const ksl::ParseError& e) {
        std::cerr << "ksl: " << e.what() << "\n";
        return 2;
    } catch (const ksl::GuardExceeded& e) {
        std::cerr << "ksl: guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ksl::InvariantFailure& e) {
        std::cerr << "ksl: invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const ksl::Error& e) {
        std::cerr << "ksl: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
