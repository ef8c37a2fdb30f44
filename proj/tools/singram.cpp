#include "singram/singram.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace singram;
namespace fs = std::filesystem;

namespace {

enum Exit
{
    ok = 0,
    violated = 1,
    input_error = 2,
    incomplete = 3
};

struct Run
{
    fs::path out_dir;
    bool timing = true;
    int jobs = 0;
    std::uint64_t seed = 1;
    RunManifest manifest;
    std::string stem = "singram";

    auto emit(const std::string & name, const std::string & text) -> void { manifest.outputs.push_back(write_output(out_dir / name, text)); }

    auto adopt(const fs::path & path) -> void { manifest.outputs.push_back({path.string(), file_digest(path)}); }
};

auto safe(std::string s) -> std::string
{
    for (char & c : s)
        if (! std::isalnum(static_cast<unsigned char>(c)))
            c = c == '+' ? 'u' : '-';
    return s;
}

auto dump(const ojson & j) -> std::string { return j.dump(2) + "\n"; }

auto join_args(int argc, char ** argv) -> std::string
{
    std::string s;
    for (int i = 0; i < argc; ++i)
        s += (i ? " " : "") + std::string(argv[i]);
    return s;
}

/// A pattern name, else a graph6 string.
auto graph_arg(const std::string & text) -> Graph
{
    try {
        return parse_pattern(text);
    }
    catch (const SpecError &) {
        return g6_decode(text);
    }
}

auto cmd_build(Run & run, const std::string & name, const std::map<std::string, int> & given) -> int
{
    const auto & reg = construction_registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::string known;
        for (const auto & [n, info] : reg)
            known += " " + n;
        throw std::invalid_argument("unknown builder '" + name + "'; known:" + known);
    }
    std::map<std::string, int> params;
    for (const auto & p : it->second.params) {
        auto g = given.find(p);
        if (g == given.end())
            throw std::invalid_argument("builder " + name + " needs --" + p);
        params[p] = g->second;
    }
    auto report = it->second.build(params);
    run.stem = "build_" + name;
    for (const auto & [k, v] : report.params)
        run.stem += "_" + k + std::to_string(v);
    run.emit(run.stem + ".g6", g6_encode(report.graph) + "\n");
    run.emit(run.stem + ".json", dump(to_json(report)));
    const bool good = report.verified_sr && (report.expected_classes.empty() || report.classes_match);
    std::cout << report.name << ": order " << report.graph.order() << ", edges " << report.graph.edge_count() << ", classes " << report.actual_classes.size()
              << ", classes_match " << (report.classes_match ? "yes" : "no") << ", verified_sr " << (report.verified_sr ? "yes" : "no") << "\n";
    return good ? ok : violated;
}

auto cmd_check(Run & run, const std::string & file, const std::string & f1_name, const std::string & f2_name, int k) -> int
{
    if (k < 1)
        throw std::invalid_argument("--k must be >= 1");
    run.stem = "check_" + safe(fs::path(file).stem().string());
    const Graph f1 = parse_pattern(f1_name);
    const Graph f2 = parse_pattern(f2_name.empty() ? f1_name : f2_name);
    const auto graphs = read_g6_file(file);
    if (graphs.empty())
        throw Graph6Error("no graphs in " + file);
    ojson results = ojson::array();
    bool all = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph & g = graphs[i];
        ojson r;
        r["index"] = i;
        r["order"] = g.order();
        std::optional<SingularWitness> w = find_singular_copy(g, f1, k);
        std::string side = "graph";
        if (! w) {
            w = find_singular_copy(complement(g), f2, k);
            side = "complement";
        }
        r["sr"] = ! w.has_value();
        if (w) {
            all = false;
            r["side"] = side;
            r["vertices"] = w->vertices;
            r["degrees"] = w->host_degrees;
            std::cout << "graph " << i << ": singular " << (side == "graph" ? f1_name : (f2_name.empty() ? f1_name : f2_name)) << " in the " << side << " on vertices";
            for (int v : w->vertices)
                std::cout << ' ' << v;
            std::cout << " (degrees";
            for (int d : w->host_degrees)
                std::cout << ' ' << d;
            std::cout << ")\n";
        }
        else
            std::cout << "graph " << i << ": SR-graph (order " << g.order() << ")\n";
        results.push_back(r);
    }
    ojson j;
    j["file"] = file;
    j["patterns"] = {f1_name, f2_name.empty() ? f1_name : f2_name};
    j["k"] = k;
    j["results"] = results;
    run.emit(run.stem + ".json", dump(j));
    return all ? ok : violated;
}

auto cmd_certify(Run & run, const std::string & f1, const std::string & f2, int k, SearchConfig cfg) -> int
{
    cfg.jobs = run.jobs;
    cfg.seed = run.seed;
    auto cert = certify_rs(f1, f2, k, cfg);
    run.stem = "certify_" + safe(cert.f1) + "_" + safe(cert.f2) + "_k" + std::to_string(k);
    run.emit(run.stem + ".json", dump(to_json(cert, run.timing)));
    std::cout << "Rs(" << cert.f1 << "," << cert.f2 << "," << k << "): ";
    if (cert.complete)
        std::cout << "= " << cert.value;
    else
        std::cout << ">= " << cert.value << ", <= " << cert.upper;
    std::cout << " (R = " << cert.ramsey << ", quadratic bound " << cert.quadratic_bound << ", complete " << (cert.complete ? "yes" : "no") << ")\n";
    if (! cert.witnesses.empty())
        std::cout << "  witness order " << cert.witnesses[0].order() << " from " << cert.witness_source << "\n";
    for (const auto & r : cert.sweep)
        std::cout << "  n=" << r.n << " " << r.method << " " << r.outcome << (r.detail.empty() ? "" : " [" + r.detail + "]") << "\n";
    return cert.complete ? ok : incomplete;
}

auto cmd_turan(Run & run, int n, int n_to, const std::string & pattern, int k, const std::string & mode) -> int
{
    if (k < 1)
        throw std::invalid_argument("--k must be >= 1");
    run.stem = "turan_" + mode + "_" + safe(to_string(parse_spec(pattern))) + "_n" + std::to_string(n) + (n_to > n ? "-" + std::to_string(n_to) : "");
    if (mode == "gap") {
        auto rows = ts_gap_report(pattern, n, std::max(n, n_to));
        std::string csv = gap_csv_header() + "\n";
        ojson j = ojson::array();
        for (const auto & r : rows) {
            csv += gap_csv_row(pattern, r) + "\n";
            j.push_back({{"n", r.n}, {"ex", r.ex}, {"lower", r.lower}, {"gap", r.gap}, {"bound", r.bound}, {"status", r.status}, {"source", r.source}});
            std::cout << "n=" << r.n << " ex=" << r.ex << " lower=" << r.lower;
            if (r.status == "construction degenerate")
                std::cout << " (construction degenerate)\n";
            else
                std::cout << " gap=" << r.gap << " " << r.status << "\n";
        }
        run.emit(run.stem + ".csv", csv);
        run.emit(run.stem + ".json", dump(j));
        return ok;
    }
    if (mode != "exact" && mode != "lower")
        throw std::invalid_argument("--mode must be exact, lower or gap");
    std::string csv = ts_csv_header() + "\n";
    ojson j = ojson::array();
    std::string g6;
    for (int m = n; m <= std::max(n, n_to); ++m) {
        TsResult r;
        if (mode == "exact") {
            if (m > 9)
                throw ExhaustionBoundExceeded("exact mode is limited to n <= 9; use --mode lower for n = " + std::to_string(m));
            r = ts_exact(m, pattern, k, run.jobs);
        }
        else {
            if (k != 1)
                throw std::invalid_argument("lower mode constructions are for k = 1");
            r = ts_lower(m, pattern);
        }
        csv += ts_csv_row(r) + "\n";
        j.push_back(to_json(r));
        for (const auto & g : r.witnesses)
            g6 += g6_encode(g) + "\n";
        std::cout << "Ts(" << m << "," << r.pattern << "," << k << ") " << (mode == "exact" ? "= " : ">= ") << r.value << " (" << r.witnesses.size() << " witness"
                  << (r.witnesses.size() == 1 ? "" : "es") << ")\n";
    }
    run.emit(run.stem + ".csv", csv);
    run.emit(run.stem + ".json", dump(j));
    run.emit(run.stem + ".g6", g6);
    return ok;
}

auto cmd_enum(Run & run, int n, const std::string & f1_name, const std::string & f2_name, const std::string & stability) -> int
{
    const std::string f2n = f2_name.empty() ? f1_name : f2_name;
    const Graph f1 = parse_pattern(f1_name);
    const Graph f2 = parse_pattern(f2n);
    if (! stability.empty()) {
        const Graph h = graph_arg(stability);
        auto rep = ramsey_stability(h, f1, f2);
        run.stem = "stability_" + safe(stability) + "_" + safe(f1_name) + "_" + safe(f2n);
        ojson j;
        j["graph6"] = g6_encode(h);
        j["patterns"] = {f1_name, f2n};
        j["stable"] = rep.stable;
        ojson vs = ojson::array();
        for (const auto & v : rep.vertices)
            vs.push_back({{"vertex", v.vertex}, {"rExtensions", v.r_extensions}, {"alternatives", v.alternatives}});
        j["vertices"] = vs;
        run.emit(run.stem + ".json", dump(j));
        std::cout << stability << " for (" << f1_name << "," << f2n << "): " << (rep.stable ? "stable" : "unstable") << "\n";
        for (const auto & v : rep.vertices)
            if (! v.alternatives.empty()) {
                std::cout << "  vertex " << v.vertex << ": " << v.r_extensions << " R-extensions, e.g. neighbourhood {";
                for (std::size_t i = 0; i < v.alternatives[0].size(); ++i)
                    std::cout << (i ? "," : "") << v.alternatives[0][i];
                std::cout << "}\n";
            }
        return ok;
    }
    if (n < 0)
        throw std::invalid_argument("enum needs --n or --stability");
    if (n > 10)
        throw ExhaustionBoundExceeded("catalogs are limited to n <= 10");
    auto cat = enumerate_r_graphs(n, f1, f2, run.jobs);
    run.stem = "catalog_n" + std::to_string(n) + "_" + safe(f1_name) + "_" + safe(f2n);
    fs::create_directories(run.out_dir);
    const auto base = run.out_dir / run.stem;
    write_catalog(cat, base.string(), f1_name, f2n);
    run.adopt(base.string() + ".g6");
    run.adopt(base.string() + ".json");
    std::cout << cat.graphs.size() << " R-graph" << (cat.graphs.size() == 1 ? "" : "s") << " of order " << n << " for (" << f1_name << "," << f2n << ")\n";
    for (const auto & g : cat.graphs)
        std::cout << "  " << g6_encode(g) << " edges " << g.edge_count() << (is_regular(g) ? " regular" : "") << "\n";
    return ok;
}

} // namespace

int main(int argc, char ** argv)
{
    const auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"Singular Ramsey and Turán numbers for small graphs"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    app.fallthrough();

    Run run;
    std::string out_dir;
    bool no_timing = false;
    app.add_option("--out", out_dir, "Output directory (default: $SINGRAM_OUT or .)");
    app.add_option("--jobs", run.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", run.seed, "Deterministic seed recorded in outputs");
    app.add_flag("--no-timing", no_timing, "Zero all timing fields so outputs are byte-identical across runs");

    auto * build = app.add_subcommand("build", "Build a named construction and verify it");
    std::string builder;
    std::map<std::string, int> bparams;
    build->add_option("name", builder, "Builder name")->required();
    for (const char * p : {"k", "n", "s", "q", "p"})
        build->add_option_function<int>(std::string("--") + p, [&bparams, p](int v) { bparams[p] = v; }, std::string("Builder parameter ") + p);

    auto * check = app.add_subcommand("check", "Check every graph of a graph6 file for the SR property");
    std::string check_file, f1, f2;
    int k = 1;
    check->add_option("file", check_file, "graph6 file")->required();
    check->add_option("--f1", f1, "First pattern")->required();
    check->add_option("--f2", f2, "Second pattern (default: f1)");
    check->add_option("--k", k, "Singularity parameter");

    auto * certify = app.add_subcommand("certify", "Certify Rs(f1, f2, k)");
    SearchConfig cfg;
    certify->add_option("--f1", f1, "First pattern")->required();
    certify->add_option("--f2", f2, "Second pattern (default: f1)");
    certify->add_option("--k", k, "Singularity parameter");
    certify->add_option("--node-budget", cfg.node_budget, "csp decisions per branch");
    certify->add_option("--time-budget", cfg.time_budget, "csp seconds per profile");
    certify->add_option("--exhaustive-max-n", cfg.exhaustive_max_n, "Largest order closed by exhaustive sweep");
    certify->add_option("--corroborate-max-n", cfg.corroborate_max_n, "Largest profile-infeasible order also swept");

    auto * turan = app.add_subcommand("turan", "Singular Turán numbers");
    int tn = 0, tn_to = 0;
    std::string tpattern, mode = "exact";
    turan->add_option("--n", tn, "Order (start of range)")->required();
    turan->add_option("--to", tn_to, "End of the order range");
    turan->add_option("--pattern", tpattern, "Forbidden pattern")->required();
    turan->add_option("--k", k, "Singularity parameter");
    turan->add_option("--mode", mode, "exact | lower | gap")->check(CLI::IsMember({"exact", "lower", "gap"}));

    auto * en = app.add_subcommand("enum", "R-graph catalogs and Ramsey-stability");
    int en_n = -1;
    std::string stability;
    en->add_option("--n", en_n, "Catalog order");
    en->add_option("--f1", f1, "First pattern")->required();
    en->add_option("--f2", f2, "Second pattern (default: f1)");
    en->add_option("--stability", stability, "Test this graph (pattern name or graph6) for Ramsey-stability");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    run.out_dir = out_dir.empty() ? default_output_dir() : fs::path(out_dir);
    run.timing = ! no_timing;
    run.manifest.command_line = join_args(argc, argv);
    run.manifest.seed = run.seed;

    int code = ok;
    try {
        if (*build)
            code = cmd_build(run, builder, bparams);
        else if (*check)
            code = cmd_check(run, check_file, f1, f2, k);
        else if (*certify)
            code = cmd_certify(run, f1, f2, k, cfg);
        else if (*turan)
            code = cmd_turan(run, tn, tn_to, tpattern, k, mode);
        else if (*en)
            code = cmd_enum(run, en_n, f1, f2, stability);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        code = input_error;
    }

    run.manifest.exit_code = code;
    run.manifest.wall_millis = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    try {
        write_output(run.out_dir / (run.stem + ".manifest.json"), dump(to_json(run.manifest, run.timing)));
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return code;
}
