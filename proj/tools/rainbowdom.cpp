// Command-line front end: generators, solvers, certificate constructions,
// law checks, domatic bounds, sweeps, and manifest replay.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbowdom/rainbowdom.hpp"

namespace rd = rainbowdom;
using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string & path, const std::string & content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path);
    out << content;
    if (!out)
        throw IoError("write failed: " + path);
}

// A manifest sits next to the first output of a command and records enough
// to replay it byte-for-byte, independent of the environment.
void write_manifest(const std::string & command, const json & params,
                    const std::vector<std::string> & inputs,
                    const std::vector<std::string> & outputs,
                    std::optional<std::uint64_t> seed)
{
    if (outputs.empty())
        return;
    json m;
    m["command"] = command;
    m["parameters"] = params;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["tool_version"] = rd::kVersion;
    if (seed)
        m["seed"] = *seed;
    else
        m["seed"] = nullptr;
    write_file(outputs[0] + ".manifest.json", m.dump(2) + "\n");
}

// Graph source shared by solve and check: either an edge-list file or a
// generated family.
struct GraphSource {
    std::string file;
    std::string kind;
    int n = -1;
    int t = -1;
    int p = -1;
    int q = -1;
    int r = -1;
    std::optional<std::uint64_t> seed;

    void add_options(CLI::App * cmd, bool positional)
    {
        if (positional)
            cmd->add_option("graph", file, "edge-list file");
        cmd->add_option("--kind", kind, "generate a named family instead of reading a file");
        cmd->add_option("--n", n, "order parameter");
        cmd->add_option("--t", t, "star / spider arm count");
        cmd->add_option("--p", p, "double star left leaf count");
        cmd->add_option("--q", q, "double star right leaf count");
        cmd->add_option("--r", r, "spider subdivided arm count");
        cmd->add_option("--seed", seed, "seed for random_tree");
    }

    json to_params() const
    {
        json p_;
        if (!file.empty()) {
            p_["file"] = file;
            return p_;
        }
        if (kind.empty())
            throw rd::DomainError("provide a graph file or --kind");
        p_["kind"] = kind;
        if (n >= 0)
            p_["n"] = n;
        if (t >= 0)
            p_["t"] = t;
        if (p >= 0)
            p_["p"] = p;
        if (q >= 0)
            p_["q"] = q;
        if (r >= 0)
            p_["r"] = r;
        if (seed)
            p_["seed"] = *seed;
        return p_;
    }
};

std::vector<int> family_params(const std::string & kind, const json & p)
{
    auto get = [&p](const char * key) {
        if (!p.contains(key))
            throw rd::DomainError(std::string("missing parameter --") + key);
        return p[key].get<int>();
    };
    if (kind == "star")
        return {get("t")};
    if (kind == "double_star")
        return {get("p"), get("q")};
    if (kind == "spider")
        return {get("t"), get("r")};
    return {get("n")};
}

rd::Graph graph_from_params(const json & p)
{
    if (p.contains("file"))
        return rd::parse_graph(read_file(p["file"].get<std::string>()));
    std::string kind = p["kind"].get<std::string>();
    std::optional<std::uint64_t> seed;
    if (p.contains("seed"))
        seed = p["seed"].get<std::uint64_t>();
    return rd::generate(kind, family_params(kind, p), seed);
}

rd::LinearKind linear_kind(const std::string & kind)
{
    if (kind == "path")
        return rd::LinearKind::path;
    if (kind == "cycle")
        return rd::LinearKind::cycle;
    throw rd::DomainError("kind must be path or cycle, got " + kind);
}

// --- command runners (shared by the CLI layer and manifest replay) ---

void run_gen(const json & params, const std::vector<std::string> & outputs)
{
    rd::Graph g = graph_from_params(params);
    std::string text = rd::serialize_graph(g);
    if (!outputs.empty())
        write_file(outputs[0], text);
    else
        std::cout << text;
}

void run_solve(const json & params, const std::vector<std::string> & outputs)
{
    std::string method = params.value("method", std::string("bnb"));
    int k = params.value("k", 3);
    bool middle = params.value("middle", false);
    bool as_json = params.value("json", false);
    int cap = params.value("cap", -1);
    if (method == "dp") {
        if (!params.contains("graph") || !params["graph"].contains("kind"))
            throw rd::DomainError("dp method requires --kind path|cycle");
        if (k != 3)
            throw rd::DomainError("dp method supports k = 3 only");
        if (!outputs.empty())
            throw rd::DomainError("dp method does not produce a certificate file");
        const json & gp = params["graph"];
        long long value =
            rd::dp_middle(linear_kind(gp["kind"].get<std::string>()), gp["n"].get<long long>());
        if (as_json) {
            json out;
            out["value"] = value;
            out["method"] = "dp";
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "value " << value << "\n";
        }
        return;
    }
    rd::Graph g = graph_from_params(params["graph"]);
    if (method == "brute") {
        if (!outputs.empty())
            throw rd::DomainError("brute method does not produce a certificate file");
        int value = middle ? rd::brute_force_krdf(rd::middle_graph(g).host(), k)
                           : rd::brute_force_krdf(g, k);
        if (as_json) {
            json out;
            out["value"] = value;
            out["method"] = "brute";
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "value " << value << "\n";
        }
        return;
    }
    if (method != "bnb")
        throw rd::DomainError("method must be bnb, dp, or brute, got " + method);
    rd::SolveResult res = middle ? rd::solve_middle(g, k, cap) : rd::solve_krdf(g, k, cap);
    if (as_json) {
        json cert = json::array();
        auto labels = middle ? rd::elements_of(g) : std::vector<rd::Element>();
        for (std::size_t i = 0; i < res.certificate.values.size(); ++i) {
            std::string key = middle ? labels[i].key() : "v" + std::to_string(i);
            cert.push_back({key, res.certificate.values[i].to_string()});
        }
        json out;
        out["value"] = res.value;
        out["certificate"] = cert;
        out["stats"] = {{"nodes", res.stats.nodes}, {"elapsed_ms", res.stats.elapsed_ms}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "value " << res.value << "\n";
    }
    if (!outputs.empty()) {
        std::string text = "value " + std::to_string(res.value) + "\n" +
                           rd::serialize_assignment(res.certificate, g);
        write_file(outputs[0], text);
    }
}

void run_construct(const json & params, const std::vector<std::string> & outputs)
{
    std::string family = params["family"].get<std::string>();
    int n = params["n"].get<int>();
    rd::RainbowAssignment f = rd::construct_m3rdf(family, n);
    rd::Graph g = rd::generate(family, {n});
    std::cout << "value " << rd::weight(f) << "\n";
    if (!outputs.empty()) {
        std::string text =
            "value " + std::to_string(rd::weight(f)) + "\n" + rd::serialize_assignment(f, g);
        write_file(outputs[0], text);
    }
}

void run_verify(const json & params)
{
    rd::Graph g = rd::parse_graph(read_file(params["graph"].get<std::string>()));
    rd::RainbowAssignment f =
        rd::parse_assignment(read_file(params["assignment"].get<std::string>()), g);
    if (params.contains("k") && params["k"].get<int>() != f.k)
        throw rd::DomainError("assignment header has k=" + std::to_string(f.k) +
                              ", --k asked for " + std::to_string(params["k"].get<int>()));
    rd::VerificationReport report = rd::verify_assignment(g, f);
    std::cout << "valid " << (report.valid ? "true" : "false") << "\n";
    std::cout << "weight " << rd::weight(f) << "\n";
    for (const rd::Violation & v : report.violations)
        std::cout << "violation " << v.key << " seen " << v.seen.to_string() << "\n";
}

void run_domatic(const json & params, const std::vector<std::string> & outputs)
{
    std::string kind = params["kind"].get<std::string>();
    int n = params["n"].get<int>();
    rd::LinearKind lk = linear_kind(kind);
    long long gamma = lk == rd::LinearKind::path ? rd::gamma_star_r3_path(n)
                                                 : rd::gamma_star_r3_cycle(n);
    std::optional<rd::RainbowFamily> fam;
    if (lk == rd::LinearKind::cycle || n % 2 == 0)
        fam = rd::construct_family(lk, n);
    rd::Graph host = fam ? fam->host
                         : rd::middle_graph(lk == rd::LinearKind::path ? rd::path_graph(n)
                                                                       : rd::cycle_graph(n))
                               .host();
    rd::DomaticBounds bounds = rd::domatic_bounds(host, 3, fam ? &*fam : nullptr, gamma);
    std::cout << "kind " << kind << "\n";
    std::cout << "n " << n << "\n";
    std::cout << "members " << (fam ? fam->members.size() : 0) << "\n";
    std::cout << "lower " << bounds.lower << "\n";
    std::cout << "upper " << bounds.upper << "\n";
    std::cout << "upper_source " << bounds.upper_source << "\n";
    if (bounds.exact)
        std::cout << "exact " << *bounds.exact << "\n";
    else
        std::cout << "exact -\n";
    if (!outputs.empty()) {
        if (!fam)
            throw rd::DomainError("no family to write for odd path n");
        write_file(outputs[0], rd::serialize_family(*fam));
    }
}

void run_check(const json & params)
{
    std::string law = params["law"].get<std::string>();
    int k = params.value("k", 3);
    int cap = params.value("cap", -1);
    if (law == "prop22") {
        int max_n = params.value("max_n", 4);
        rd::LawReport r = rd::characterize_weight_three(max_n, cap);
        // classes counted in r.lhs after the colon
        std::string classes = r.lhs.substr(r.lhs.find(": ") + 2);
        std::cout << "holds: " << (r.holds ? "true" : "false")
                  << "; classes attaining 3: " << classes << "\n";
        return;
    }
    rd::Graph g = graph_from_params(params["graph"]);
    rd::LawReport r;
    if (law == "lowerbound") {
        r = rd::check_observation_lower(g, k, cap);
    } else if (law == "vdel") {
        if (!params.contains("vertex"))
            throw rd::DomainError("vdel requires --vertex");
        r = rd::check_vertex_deletion(g, params["vertex"].get<int>(), k, cap);
    } else if (law == "eperturb") {
        if (!params.contains("edge") || params["edge"].size() != 2)
            throw rd::DomainError("eperturb requires --edge u v");
        std::string mode = params.value("mode", std::string("add"));
        if (mode != "add" && mode != "delete")
            throw rd::DomainError("mode must be add or delete, got " + mode);
        r = rd::check_edge_perturbation(g, params["edge"][0].get<int>(),
                                        params["edge"][1].get<int>(), k,
                                        mode == "add" ? rd::PerturbMode::add
                                                      : rd::PerturbMode::erase,
                                        cap);
    } else if (law == "treebounds") {
        r = rd::check_tree_bounds(g, cap);
    } else if (law == "pendant") {
        rd::RainbowAssignment f =
            params.contains("cert")
                ? rd::parse_assignment(read_file(params["cert"].get<std::string>()), g)
                : rd::solve_middle(g, 3, cap).certificate;
        r = rd::check_pendant_path_lemma(g, f, cap);
    } else {
        throw rd::DomainError(
            "unknown law: " + law +
            " (expected lowerbound, prop22, vdel, eperturb, treebounds, or pendant)");
    }
    std::cout << rd::law_report_text(r);
}

void run_sweep(const json & params, const std::vector<std::string> & outputs)
{
    std::string kind = params["kind"].get<std::string>();
    rd::LinearKind lk = linear_kind(kind);
    long long from = params["from"].get<long long>();
    long long to = params["to"].get<long long>();
    int k = params.value("k", 3);
    int cap = params.value("cap", -1);
    if (k != 3)
        throw rd::DomainError("sweep supports k = 3 only (formula and dp are 3-color)");
    if (from > to)
        throw rd::DomainError("sweep range is empty");
    // The sweep's solver column is a spot check, not a deep run: attempts are
    // limited to 15 elements (paths n <= 8, cycles n <= 7) regardless of cap,
    // so long tables stay interactive. Use `solve` directly for bigger cases.
    int active_cap = std::min(rd::solver_cap(cap), 15);
    std::string csv;
    for (long long n = from; n <= to; ++n) {
        long long formula = rd::formula_gamma_star_r3(kind, {n});
        long long dp = rd::dp_middle(lk, n);
        long long elements = lk == rd::LinearKind::path ? 2 * n - 1 : 2 * n;
        std::string solver_col = "-";
        bool match = formula == dp;
        if (elements <= active_cap) {
            rd::Graph g = lk == rd::LinearKind::path ? rd::path_graph(static_cast<int>(n))
                                                     : rd::cycle_graph(static_cast<int>(n));
            long long solved = rd::solve_middle(g, 3, active_cap).value;
            solver_col = std::to_string(solved);
            match = match && solved == formula;
        }
        csv += std::to_string(n) + "," + std::to_string(formula) + "," + std::to_string(dp) +
               "," + solver_col + "," + (match ? "true" : "false") + "\n";
    }
    if (!outputs.empty())
        write_file(outputs[0], csv);
    else
        std::cout << csv;
}

void run_replay(const std::string & manifest_path)
{
    json m = json::parse(read_file(manifest_path));
    std::string command = m["command"].get<std::string>();
    json params = m["parameters"];
    std::vector<std::string> outputs;
    for (const auto & o : m["outputs"])
        outputs.push_back(o.get<std::string>());
    if (command == "gen")
        run_gen(params, outputs);
    else if (command == "solve")
        run_solve(params, outputs);
    else if (command == "construct")
        run_construct(params, outputs);
    else if (command == "domatic")
        run_domatic(params, outputs);
    else if (command == "sweep")
        run_sweep(params, outputs);
    else
        throw rd::DomainError("manifest has no replayable command: " + command);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"exact rainbow domination on middle graphs"};
    app.require_subcommand(1);

    // gen
    auto * gen = app.add_subcommand("gen", "generate a named graph family");
    GraphSource gen_src;
    std::string gen_out;
    gen_src.add_options(gen, false);
    gen->get_option("--kind")->required();
    gen->add_option("--out", gen_out, "output edge-list file");

    // solve
    auto * solve = app.add_subcommand("solve", "compute gamma_rk exactly");
    GraphSource solve_src;
    int solve_k = 3;
    bool solve_middle_flag = false;
    std::string solve_method = "bnb";
    int solve_cap = -1;
    bool solve_json = false;
    std::string solve_out;
    solve_src.add_options(solve, true);
    solve->add_option("--k", solve_k, "number of colors (default 3)");
    solve->add_flag("--middle", solve_middle_flag, "solve on the middle graph of the input");
    solve->add_option("--method", solve_method, "bnb | dp | brute (default bnb)");
    solve->add_option("--cap", solve_cap, "override the solver instance cap");
    solve->add_flag("--json", solve_json, "machine-readable output");
    solve->add_option("--out", solve_out, "certificate file");

    // construct
    auto * construct = app.add_subcommand("construct", "emit a closed-form optimal certificate");
    std::string construct_family_name;
    int construct_n = 0;
    std::string construct_out;
    construct->add_option("--family", construct_family_name, "path | cycle | complete")
        ->required();
    construct->add_option("--n", construct_n, "order")->required();
    construct->add_option("--out", construct_out, "certificate file");

    // verify
    auto * verify = app.add_subcommand("verify", "verify an assignment file against a graph");
    std::string verify_graph;
    std::string verify_assignment;
    int verify_k = -1;
    verify->add_option("graph", verify_graph, "edge-list file")->required();
    verify->add_option("assignment", verify_assignment, "assignment file")->required();
    verify->add_option("--k", verify_k, "expected color count");

    // domatic
    auto * domatic = app.add_subcommand("domatic", "domatic family construction and bounds");
    std::string domatic_kind;
    int domatic_n = 0;
    std::string domatic_out;
    domatic->add_option("--kind", domatic_kind, "path | cycle")->required();
    domatic->add_option("--n", domatic_n, "order")->required();
    domatic->add_option("--out", domatic_out, "family file");

    // check
    auto * check = app.add_subcommand("check", "run a law check");
    GraphSource check_src;
    std::string check_law;
    int check_k = 3;
    int check_cap = -1;
    int check_vertex = -1;
    std::vector<int> check_edge;
    std::string check_mode = "add";
    int check_max_n = 4;
    std::string check_cert;
    check_src.add_options(check, true);
    check->add_option("--law", check_law,
                      "lowerbound | prop22 | vdel | eperturb | treebounds | pendant")
        ->required();
    check->add_option("--k", check_k, "number of colors (default 3)");
    check->add_option("--cap", check_cap, "override the solver instance cap");
    check->add_option("--vertex", check_vertex, "vertex for vdel");
    check->add_option("--edge", check_edge, "edge endpoints for eperturb")->expected(2);
    check->add_option("--mode", check_mode, "add | delete (for eperturb)");
    check->add_option("--max-n", check_max_n, "scan bound for prop22");
    check->add_option("--cert", check_cert, "certificate file for pendant");

    // sweep
    auto * sweep = app.add_subcommand("sweep", "formula/dp/solver agreement table");
    std::string sweep_kind;
    long long sweep_from = 0;
    long long sweep_to = 0;
    int sweep_k = 3;
    int sweep_cap = -1;
    std::string sweep_out;
    sweep->add_option("--kind", sweep_kind, "path | cycle")->required();
    sweep->add_option("--from", sweep_from, "first n")->required();
    sweep->add_option("--to", sweep_to, "last n")->required();
    sweep->add_option("--k", sweep_k, "number of colors (must be 3)");
    sweep->add_option("--cap", sweep_cap,
                      "override the solver instance cap (sweep attempts at most 15 elements)");
    sweep->add_option("--out", sweep_out, "CSV output file");

    // replay
    auto * replay = app.add_subcommand("replay", "re-run a recorded manifest");
    std::string replay_manifest;
    replay->add_option("manifest", replay_manifest, "manifest file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            json params = gen_src.to_params();
            std::vector<std::string> outputs;
            if (!gen_out.empty())
                outputs.push_back(gen_out);
            run_gen(params, outputs);
            write_manifest("gen", params, {}, outputs, gen_src.seed);
        } else if (solve->parsed()) {
            json params;
            params["graph"] = solve_src.to_params();
            params["k"] = solve_k;
            params["middle"] = solve_middle_flag;
            params["method"] = solve_method;
            params["json"] = solve_json;
            if (solve_method == "bnb")
                params["cap"] = rd::solver_cap(solve_cap); // resolve now for replay
            std::vector<std::string> inputs;
            if (!solve_src.file.empty())
                inputs.push_back(solve_src.file);
            std::vector<std::string> outputs;
            if (!solve_out.empty())
                outputs.push_back(solve_out);
            run_solve(params, outputs);
            write_manifest("solve", params, inputs, outputs, solve_src.seed);
        } else if (construct->parsed()) {
            json params;
            params["family"] = construct_family_name;
            params["n"] = construct_n;
            std::vector<std::string> outputs;
            if (!construct_out.empty())
                outputs.push_back(construct_out);
            run_construct(params, outputs);
            write_manifest("construct", params, {}, outputs, std::nullopt);
        } else if (verify->parsed()) {
            json params;
            params["graph"] = verify_graph;
            params["assignment"] = verify_assignment;
            if (verify_k >= 0)
                params["k"] = verify_k;
            run_verify(params);
        } else if (domatic->parsed()) {
            json params;
            params["kind"] = domatic_kind;
            params["n"] = domatic_n;
            std::vector<std::string> outputs;
            if (!domatic_out.empty())
                outputs.push_back(domatic_out);
            run_domatic(params, outputs);
            write_manifest("domatic", params, {}, outputs, std::nullopt);
        } else if (check->parsed()) {
            json params;
            params["law"] = check_law;
            params["k"] = check_k;
            if (check_cap >= 0)
                params["cap"] = check_cap;
            if (check_law != "prop22")
                params["graph"] = check_src.to_params();
            if (check_vertex >= 0)
                params["vertex"] = check_vertex;
            if (!check_edge.empty())
                params["edge"] = check_edge;
            params["mode"] = check_mode;
            params["max_n"] = check_max_n;
            if (!check_cert.empty())
                params["cert"] = check_cert;
            run_check(params);
        } else if (sweep->parsed()) {
            json params;
            params["kind"] = sweep_kind;
            params["from"] = sweep_from;
            params["to"] = sweep_to;
            params["k"] = sweep_k;
            params["cap"] = rd::solver_cap(sweep_cap);
            std::vector<std::string> outputs;
            if (!sweep_out.empty())
                outputs.push_back(sweep_out);
            run_sweep(params, outputs);
            write_manifest("sweep", params, {}, outputs, std::nullopt);
        } else if (replay->parsed()) {
            run_replay(replay_manifest);
        }
    } catch (const rd::ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rd::CapacityError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rd::DomainError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
