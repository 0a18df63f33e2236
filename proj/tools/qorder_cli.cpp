// qorder: command-line front end for the extremal Q-index library.
// Exit codes: 0 pass / success, 1 mathematical failure, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qorder/bounds.hpp"
#include "qorder/canonical.hpp"
#include "qorder/enumeration.hpp"
#include "qorder/exactpoly.hpp"
#include "qorder/families.hpp"
#include "qorder/graph6.hpp"
#include "qorder/partitions.hpp"
#include "qorder/spectral.hpp"

using nlohmann::json;
using namespace qorder;

namespace {

struct RunConfig {
    double tol = kDefaultTol;
    double tie_gap = kTieTol;
    int enum_cap = kDefaultEnumCap;
    std::string format = "text";  // text|json|csv
    std::string out;              // empty = stdout
};

// flat key=value file; unknown keys are an error so typos surface
void load_config_file(RunConfig& cfg, const std::string& path, bool must_exist) {
    std::ifstream in(path);
    if (!in) {
        if (must_exist) throw CLI::ValidationError("config", "cannot open " + path);
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("config", "expected key=value: " + line);
        const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "tolerance") cfg.tol = std::stod(val);
        else if (key == "tie_gap") cfg.tie_gap = std::stod(val);
        else if (key == "enum_cap") cfg.enum_cap = std::stoi(val);
        else if (key == "format") cfg.format = val;
        else if (key == "out") cfg.out = val;
        else throw CLI::ValidationError("config", "unknown key: " + key);
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.tol <= 0 || cfg.tie_gap <= 0)
        throw CLI::ValidationError("config", "tolerances must be positive");
    if (cfg.enum_cap > kHardEnumCap)
        throw CLI::ValidationError("config", "enum_cap exceeds hard cap 13");
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
        throw CLI::ValidationError("config", "format must be text|json|csv");
}

std::ostream& output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw CLI::ValidationError("out", "cannot open " + cfg.out);
    return file;
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
}

ClassFilter parse_girth_arg(const std::string& s) {
    if (s == "any") return ClassFilter::any();
    if (s.rfind(">=", 0) == 0) return ClassFilter::at_least(std::stoi(s.substr(2)));
    if (s.rfind('=', 0) == 0) return ClassFilter::equal(std::stoi(s.substr(1)));
    throw CLI::ValidationError("girth", "expected any, =g or >=g");
}

std::string girth_text(GirthValue g) {
    return g.is_acyclic() ? std::string("acyclic") : std::to_string(g.value());
}

json verdict_json(const VerdictReport& r) {
    return json{{"id", r.id},
                {"params", r.params},
                {"expected", r.expected},
                {"observed", r.observed},
                {"pass", r.pass},
                {"warning", r.warning},
                {"min_gap", r.min_gap},
                {"enumerated", r.enumerated},
                {"in_class", r.in_class},
                {"notes", r.notes}};
}

json rank_json(const RankTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"rank", r.rank},
                        {"q", r.q},
                        {"gap", r.gap},
                        {"tied_with_next", r.tied_with_next},
                        {"graph6", r.graph6},
                        {"family", r.family ? format_spec(*r.family) : ""},
                        {"delta", r.delta},
                        {"girth", girth_text(r.girth)}});
    return json{{"m", t.m},
                {"filter", t.filter.to_string()},
                {"class_size", t.class_size},
                {"truncated", t.truncated},
                {"rows", rows}};
}

json bound_json(const BoundReport& r) {
    return json{{"bound", r.bound_name}, {"inputs", r.inputs},
                {"bound_value", r.bound_value}, {"observed", r.observed_value},
                {"holds", r.holds}, {"slack", r.slack}};
}

// ----- sweeps for the `bounds` command -----

// Lemma 2.5 over every Perron entry of every connected graph with <= m edges
std::vector<BoundReport> sweep_entry(int m, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    for (int k = 1; k <= m; ++k)
        for (const auto& g : enumerate_graphs(k, ClassFilter::any(), cfg.enum_cap)) {
            const auto pp = q_index(g, cfg.tol);
            double worst = 1e9;
            int worst_u = 0;
            for (int u = 0; u < g.order(); ++u) {
                const double slack = entry_bound(pp.q, g.degree(u)) - pp.x[u];
                if (slack < worst) {
                    worst = slack;
                    worst_u = u;
                }
            }
            BoundReport r;
            r.bound_name = "entry";
            r.inputs = emit_graph6(g) + " u=" + std::to_string(worst_u);
            r.bound_value = entry_bound(pp.q, g.degree(worst_u));
            r.observed_value = pp.x[worst_u];
            r.slack = worst;
            r.holds = worst >= -cfg.tie_gap;
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<BoundReport> sweep_feng(int m, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    for (int k = 1; k <= m; ++k)
        for (const auto& g : enumerate_graphs(k, ClassFilter::any(), cfg.enum_cap)) {
            BoundReport r;
            r.bound_name = "feng";
            r.inputs = emit_graph6(g);
            r.bound_value = feng_bound(g);
            r.observed_value = q_index(g, cfg.tol).q;
            r.slack = r.bound_value - r.observed_value;
            r.holds = r.slack >= -cfg.tie_gap;
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<BoundReport> sweep_gi_bracket(int m, int g, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    const auto [lo, hi] = gi_bracket(m, g);
    for (int i = 1; i <= g / 2; ++i) {
        const double q = q_index(build(gi_spec(m, g, i)).graph, cfg.tol).q;
        BoundReport r;
        r.bound_name = "gi-bracket";
        r.inputs = format_spec(gi_spec(m, g, i));
        r.bound_value = hi;
        r.observed_value = q;
        r.slack = std::min(q - lo, hi - q);
        r.holds = q > lo + cfg.tie_gap && q <= hi + cfg.tie_gap;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> sweep_x0(int m, int g, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    for (int i = 1; i <= g / 2; ++i) {
        const auto pp = q_index(build(gi_spec(m, g, i)).graph, cfg.tol);
        const auto rep = x0_lower_bound(m, g, pp.q);
        BoundReport r;
        r.bound_name = "x0";
        r.inputs = format_spec(gi_spec(m, g, i));
        r.bound_value = rep.bound;
        r.observed_value = pp.x[0] * pp.x[0];
        r.slack = r.observed_value - r.bound_value;
        r.holds = rep.h1_positive && rep.h2_positive && rep.h3_positive &&
                  r.observed_value > rep.bound && r.observed_value > 0.5;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> sweep_degree(int m, int s, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    const double cap = degree_bound_upper(m, s);
    for (const auto& g : enumerate_graphs(m, ClassFilter::any(), cfg.enum_cap)) {
        if (g.max_degree() > s) continue;
        BoundReport r;
        r.bound_name = "degree-upper";
        r.inputs = emit_graph6(g) + " delta=" + std::to_string(g.max_degree());
        r.bound_value = cap;
        r.observed_value = q_index(g, cfg.tol).q;
        r.slack = cap - r.observed_value;
        r.holds = r.slack >= -cfg.tie_gap;
        out.push_back(std::move(r));
    }
    return out;
}

int emit_bound_reports(const std::vector<BoundReport>& rows, const RunConfig& cfg) {
    std::ofstream file;
    auto& os = output(cfg, file);
    bool all = true;
    for (const auto& r : rows) all = all && r.holds;
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& r : rows) j.push_back(bound_json(r));
        os << json{{"holds", all}, {"rows", j}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "bound,inputs,bound_value,observed,holds,slack\n";
        for (const auto& r : rows)
            os << r.bound_name << ',' << r.inputs << ',' << fmt(r.bound_value) << ','
               << fmt(r.observed_value) << ',' << (r.holds ? 1 : 0) << ',' << fmt(r.slack)
               << '\n';
    } else {
        for (const auto& r : rows)
            os << r.bound_name << " " << r.inputs << ": bound=" << fmt(r.bound_value)
               << " observed=" << fmt(r.observed_value) << (r.holds ? " ok" : " VIOLATED")
               << "\n";
        os << (all ? "all bounds hold" : "violations found") << " (" << rows.size()
           << " rows)\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Q-index orderings of girth-constrained graphs: families, exact "
                 "polynomials, bounds, enumeration"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    RunConfig cfg;
    if (const char* env = std::getenv("QORDER_CONFIG")) {
        try {
            load_config_file(cfg, env, true);
        } catch (const CLI::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--tol", cfg.tol, "power-iteration residual tolerance");
    app.add_option("--tie-gap", cfg.tie_gap, "strictness gap for comparisons");
    app.add_option("--enum-cap", cfg.enum_cap, "enumeration edge cap (<= 13)");
    app.add_option("--format", cfg.format, "text|json|csv");
    app.add_option("--out", cfg.out, "output path (default stdout)");

    // family
    auto* cmd_family = app.add_subcommand("family", "build a named family graph");
    std::string spec_text, emit_mode = "text";
    cmd_family->add_option("--spec", spec_text, "e.g. \"G0(m=12,g=4)\"")->required();
    cmd_family->add_option("--emit", emit_mode, "graph6|text");

    // qindex
    auto* cmd_qindex = app.add_subcommand("qindex", "Q-index of a graph6 graph");
    std::string g6_line;
    bool from_stdin = false, show_perron = false;
    cmd_qindex->add_option("--graph6", g6_line, "graph6 line");
    cmd_qindex->add_flag("--stdin", from_stdin, "read graph6 lines from stdin");
    cmd_qindex->add_flag("--perron", show_perron, "print the Perron vector");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a theorem / lemma / corollary");
    std::string thm_id;
    int vm = 0, vg = 0, vg2 = 0;
    cmd_verify->add_option("--theorem", thm_id, "thm-1.1..thm-1.4, lem-3.*, cor-2.*")
        ->required();
    cmd_verify->add_option("--m", vm, "edge count")->required();
    cmd_verify->add_option("--g", vg, "girth parameter");
    cmd_verify->add_option("--g2", vg2, "second girth (cor-2.3)");

    // identity
    auto* cmd_identity = app.add_subcommand("identity", "verify an exact polynomial identity");
    std::string identity_id;
    cmd_identity->add_option("--id", identity_id, "eq2-odd-g, eq2-g4, eq4..eq7, phi*-quotient, or all")
        ->required();

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "bound conformance sweeps");
    std::string sweep_name;
    int bm = 9, bg = 4, bs = 0;
    cmd_bounds->add_option("--sweep", sweep_name, "entry|feng|gi-bracket|x0|degree")
        ->required();
    cmd_bounds->add_option("--m", bm, "edge count (max for entry/feng)");
    cmd_bounds->add_option("--g", bg, "girth (gi-bracket, x0)");
    cmd_bounds->add_option("--s", bs, "degree cap (degree sweep)");

    // rank
    auto* cmd_rank = app.add_subcommand("rank", "top-k Q-index ranking");
    int rm = 0, rk = 5;
    std::string rgirth = "any";
    cmd_rank->add_option("--m", rm, "edge count")->required();
    cmd_rank->add_option("--girth", rgirth, "any | =g | >=g");
    cmd_rank->add_option("--top", rk, "rows to print");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list one graph6 line per class");
    int em = 0;
    std::string egirth = "any";
    cmd_enum->add_option("--m", em, "edge count")->required();
    cmd_enum->add_option("--girth", egirth, "any | =g | >=g");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            // flags win: re-parse after seeding defaults from the file
            RunConfig file_cfg;
            load_config_file(file_cfg, config_path, true);
            RunConfig flag_cfg = cfg;
            cfg = file_cfg;
            // CLI11 already stored explicitly-passed values into flag_cfg
            for (const auto* opt : {app.get_option("--tol"), app.get_option("--tie-gap"),
                                    app.get_option("--enum-cap"), app.get_option("--format"),
                                    app.get_option("--out")}) {
                if (opt->count() == 0) continue;
                if (opt->get_name() == "--tol") cfg.tol = flag_cfg.tol;
                if (opt->get_name() == "--tie-gap") cfg.tie_gap = flag_cfg.tie_gap;
                if (opt->get_name() == "--enum-cap") cfg.enum_cap = flag_cfg.enum_cap;
                if (opt->get_name() == "--format") cfg.format = flag_cfg.format;
                if (opt->get_name() == "--out") cfg.out = flag_cfg.out;
            }
        }
        validate(cfg);

        std::ofstream file;
        if (*cmd_family) {
            const auto built = build(parse_spec(spec_text));
            auto& os = output(cfg, file);
            const std::string g6 = emit_graph6(built.graph);
            if (emit_mode == "graph6") {
                os << g6 << "\n";
                return 0;
            }
            const auto pp = q_index(built.graph, cfg.tol);
            if (cfg.format == "json") {
                json labels;
                for (const auto& [k, v] : built.labels) labels[k] = v;
                os << json{{"spec", format_spec(built.spec)},
                           {"graph6", g6},
                           {"n", built.graph.order()},
                           {"m", built.graph.size()},
                           {"delta", built.graph.max_degree()},
                           {"girth", girth_text(girth(built.graph))},
                           {"q", pp.q},
                           {"residual", pp.residual},
                           {"labels", labels}}
                          .dump(2)
                   << "\n";
            } else {
                os << format_spec(built.spec) << "\n"
                   << "graph6:   " << g6 << "\n"
                   << "order:    " << built.graph.order() << "\n"
                   << "size:     " << built.graph.size() << "\n"
                   << "delta:    " << built.graph.max_degree() << "\n"
                   << "girth:    " << girth_text(girth(built.graph)) << "\n"
                   << "q:        " << fmt(pp.q) << "\n";
            }
            return 0;
        }
        if (*cmd_qindex) {
            std::vector<std::string> lines;
            if (from_stdin) {
                std::string line;
                while (std::getline(std::cin, line))
                    if (!line.empty()) lines.push_back(line);
            } else if (!g6_line.empty()) {
                lines.push_back(g6_line);
            } else {
                throw CLI::ValidationError("qindex", "need --graph6 or --stdin");
            }
            auto& os = output(cfg, file);
            for (const auto& line : lines) {
                const Graph g = parse_graph6(line);
                if (!is_connected(g))
                    throw CLI::ValidationError(
                        "qindex", "graph is disconnected (" +
                                      std::to_string(component_count(g)) + " components)");
                const auto pp = q_index(g, cfg.tol);
                if (cfg.format == "json") {
                    json j{{"graph6", line}, {"q", pp.q}, {"residual", pp.residual}};
                    if (show_perron) j["perron"] = pp.x;
                    os << j.dump(2) << "\n";
                } else {
                    os << line << " q=" << fmt(pp.q) << " residual=" << fmt(pp.residual);
                    if (show_perron) {
                        os << " x=[";
                        for (std::size_t i = 0; i < pp.x.size(); ++i)
                            os << (i ? "," : "") << fmt(pp.x[i]);
                        os << "]";
                    }
                    os << "\n";
                }
            }
            return 0;
        }
        if (*cmd_verify) {
            const auto r = verify_theorem(thm_id, vm, vg, vg2, cfg.enum_cap);
            auto& os = output(cfg, file);
            if (cfg.format == "json") {
                os << verdict_json(r).dump(2) << "\n";
            } else {
                os << r.id << " (" << r.params << "): " << (r.pass ? "PASS" : "FAIL")
                   << (r.warning ? " (warning: small gap)" : "") << "\n"
                   << "min gap: " << fmt(r.min_gap) << "\n";
                for (std::size_t i = 0; i < r.expected.size(); ++i)
                    os << "  expected " << r.expected[i] << " | observed "
                       << (i < r.observed.size() ? r.observed[i] : "(missing)") << "\n";
                for (const auto& n : r.notes) os << "  note: " << n << "\n";
            }
            return r.pass ? 0 : 1;
        }
        if (*cmd_identity) {
            std::vector<std::string> ids =
                identity_id == "all" ? identity_ids() : std::vector<std::string>{identity_id};
            auto& os = output(cfg, file);
            bool all = true;
            json rows = json::array();
            for (const auto& id : ids) {
                const bool ok = verify_identity(id);
                all = all && ok;
                if (cfg.format == "json")
                    rows.push_back({{"id", id}, {"holds", ok}});
                else
                    os << id << ": " << (ok ? "holds" : "FAILS") << "\n";
            }
            if (cfg.format == "json") os << json{{"holds", all}, {"rows", rows}}.dump(2) << "\n";
            return all ? 0 : 1;
        }
        if (*cmd_bounds) {
            std::vector<BoundReport> rows;
            if (sweep_name == "entry") rows = sweep_entry(bm, cfg);
            else if (sweep_name == "feng") rows = sweep_feng(bm, cfg);
            else if (sweep_name == "gi-bracket") rows = sweep_gi_bracket(bm, bg, cfg);
            else if (sweep_name == "x0") rows = sweep_x0(bm, bg, cfg);
            else if (sweep_name == "degree") rows = sweep_degree(bm, bs, cfg);
            else throw CLI::ValidationError("bounds", "unknown sweep " + sweep_name);
            return emit_bound_reports(rows, cfg);
        }
        if (*cmd_rank) {
            const auto t = rank_top_k(rm, parse_girth_arg(rgirth), rk, cfg.enum_cap);
            auto& os = output(cfg, file);
            if (cfg.format == "json") os << rank_json(t).dump(2) << "\n";
            else if (cfg.format == "csv") os << rank_table_csv(t);
            else {
                os << "class size " << t.class_size << " (" << t.filter.to_string() << ")\n";
                for (const auto& r : t.rows)
                    os << r.rank << ". q=" << fmt(r.q) << " gap=" << fmt(r.gap) << " "
                       << r.graph6 << " "
                       << (r.family ? format_spec(*r.family) : std::string("-"))
                       << " delta=" << r.delta << " girth=" << girth_text(r.girth) << "\n";
            }
            return 0;
        }
        if (*cmd_enum) {
            auto& os = output(cfg, file);
            for (const auto& g : enumerate_graphs(em, parse_girth_arg(egirth), cfg.enum_cap))
                os << emit_graph6(g) << "\n";
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // CLI11 help paths exit 0; usage errors map to 2
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
