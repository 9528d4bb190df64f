#include "acceptance.hpp"

#include "holescope/certificate.hpp"
#include "holescope/chroma.hpp"
#include "holescope/constructions.hpp"
#include "holescope/generators.hpp"
#include "holescope/graph_io.hpp"
#include "holescope/holes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace holescope;
using nlohmann::json;

namespace {

constexpr const char* report_schema = "holescope.report/1";

enum Exit { ok = 0, violations = 1, usage = 2, budget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool looks_like_edge_list(const std::string& text)
{
    for (char c : text)
        if (c == ' ' || c == '\t')
            return true;
    return text.find_first_not_of("0123456789\r\n") == std::string::npos && !text.empty();
}

struct Input {
    std::string source;
    std::vector<Graph> graphs;
};

// graph6 one graph per line, or a single whitespace edge list.
Input read_graphs(const std::string& path, bool from_stdin)
{
    if (from_stdin == !path.empty())
        throw UsageError("give exactly one of --in and --stdin");
    Input in{from_stdin ? "stdin" : path, {}};
    std::string text;
    if (from_stdin) {
        std::ostringstream s;
        s << std::cin.rdbuf();
        text = s.str();
    }
    else {
        text = slurp(path);
    }
    if (looks_like_edge_list(text)) {
        in.graphs.push_back(parse_edge_list(text));
        return in;
    }
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            in.graphs.push_back(parse_graph6(line));
    }
    if (in.graphs.empty())
        throw UsageError("no graph in " + in.source);
    return in;
}

Graph read_one_graph(const std::string& path)
{
    auto in = read_graphs(path, false);
    if (in.graphs.size() != 1)
        throw UsageError(path + " holds " + std::to_string(in.graphs.size()) + " graphs, expected one");
    return in.graphs.front();
}

json distance_json(const Distance& d) { return d.is_finite() ? json(d.value()) : json("inf"); }

template <typename W>
json outcome_json(const ConstructionResult<W>& r)
{
    json out{{"outcome", outcome_name(r)}};
    if (r.outcome() == ConstructionResult<W>::Outcome::threshold_not_met)
        out["stage"] = r.threshold().stage;
    if (!r.ok())
        out["detail"] = r.detail();
    return out;
}

json hole_json(const ConstructionResult<VertexSeq>& r)
{
    auto out = outcome_json(r);
    if (r.ok()) {
        out["witness"] = r.witness();
        out["length"] = r.witness().size();
    }
    return out;
}

// Every witness is checked before it is reported.
void require_hole(const Graph& g, const ConstructionResult<VertexSeq>& r)
{
    if (r.ok() && !is_induced_cycle(g, r.witness()))
        throw std::logic_error("construction returned a non-induced cycle");
}

struct AnalyzeOptions {
    std::string in;
    bool from_stdin = false;
    int rho = 2;
    int numax = 2;
    int lmax = 12;
    std::uint64_t seed = 1;
    std::optional<std::string> phi;
};

json analyze_graph(const Graph& g, const AnalyzeOptions& o, Budget b)
{
    json out;
    out["n"] = g.order();
    out["m"] = g.size();
    out["graph6"] = emit_graph6(g);
    const bool tf = is_triangle_free(g);
    out["triangle_free"] = tf;
    out["girth"] = distance_json(girth(g));
    out["chi"] = chromatic_number(g, b);
    json table = json::object();
    for (int r = 1; r <= o.rho; ++r)
        table[std::to_string(r)] = chi_rho(g, r, b);
    out["chi_rho"] = table;

    auto spectrum = hole_spectrum(g, o.lmax, b);
    json witnesses = json::object();
    for (const auto& [len, w] : spectrum.witnesses())
        witnesses[std::to_string(len)] = w;
    out["spectrum"] = {{"cap", spectrum.cap()},
                       {"complete", spectrum.complete()},
                       {"lengths", spectrum.lengths()},
                       {"witnesses", witnesses}};
    auto density = spectrum_density(spectrum.lengths());
    out["density"] = {{"count", density.count},
                      {"min", density.min ? json(*density.min) : json(nullptr)},
                      {"max", density.max ? json(*density.max) : json(nullptr)},
                      {"largest_gap", density.largest_gap}};
    json intervals = json::object();
    for (int nu = 1; nu <= o.numax; ++nu) {
        auto iv = hole_interval(spectrum, nu);
        intervals[std::to_string(nu)] = iv ? json{{"t", iv->t}, {"holes", iv->holes}} : json(nullptr);
    }
    out["intervals"] = intervals;

    if (o.phi) {
        auto phi = PhiTable::from_json(*o.phi, PhiTable::Policy::clamp);
        ControlOptions co;
        co.seed = o.seed;
        co.budget = b;
        auto report = check_controlled(g, o.rho, phi, co);
        json vs = json::array();
        for (const auto& v : report.violations)
            vs.push_back({{"subset", v.subset}, {"chi", v.chi}, {"chi_rho", v.chi_rho}});
        out["control"] = {{"checked", report.checked}, {"exhaustive", report.exhaustive}, {"violations", vs}};
    }

    json cons = json::object();
    if (!g.empty()) {
        auto l = build_levelling(g, b);
        cons["build_levelling"] = {{"levels", l.levels}, {"chi_base", chi_of_set(g, l.base(), b)}};
    }
    if (tf) {
        auto five = find_5_hole(g, b);
        auto six = find_6_hole(g, b);
        require_hole(g, five);
        require_hole(g, six);
        cons["find_5_hole"] = hole_json(five);
        cons["find_6_hole"] = hole_json(six);
    }
    out["constructions"] = cons;
    return out;
}

json report_header(const std::string& command)
{
    return {{"schema", report_schema}, {"version", HOLESCOPE_VERSION}, {"command", command}};
}

int run_analyze(const AnalyzeOptions& o, Budget b)
{
    if (o.rho < 0 || o.numax < 1 || o.lmax < 4)
        throw UsageError("need --rho >= 0, --numax >= 1 and --lmax >= 4");
    auto in = read_graphs(o.in, o.from_stdin);
    int status = ok;
    for (std::size_t i = 0; i < in.graphs.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        json line = report_header("analyze");
        line["input"] = {{"source", in.source}, {"index", i}};
        line["seed"] = o.seed;
        line["params"] = {{"rho", o.rho}, {"numax", o.numax}, {"lmax", o.lmax}, {"budget", b.max_nodes}};
        try {
            line["result"] = analyze_graph(in.graphs[i], o, b);
        }
        catch (const BudgetExhausted& e) {
            line["error"] = e.what();
            status = budget;
        }
        line["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << line.dump() << '\n';
    }
    return status;
}

int run_verify(const std::string& graph_path, const std::string& cert_path)
{
    Graph g = read_one_graph(graph_path);
    Certificate c = certificate_from_json(std::string_view(slurp(cert_path)));
    json line = report_header("verify");
    try {
        line["result"] = verify_certificate(g, c);
    }
    catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    catch (const std::out_of_range& e) {
        throw SchemaError(e.what());
    }
    std::cout << line.dump() << '\n';
    return line["result"]["valid"].get<bool>() ? ok : violations;
}

struct ConstructOptions {
    std::string name;
    std::string in;
    std::string cert;
    int ell = 5;
    int k = 1;
    int t = 1;
    int tau = 0;
    int m = 3;
    int n = 3;
    std::string phi;
};

template <typename T>
T load_cert(const std::string& path)
{
    if (path.empty())
        throw UsageError("this construction needs --cert");
    auto c = certificate_from_json(std::string_view(slurp(path)));
    if (auto p = std::get_if<T>(&c))
        return *p;
    throw SchemaError("certificate kind " + certificate_kind(c) + " does not fit this construction");
}

int run_construct(const ConstructOptions& o, Budget b)
{
    Graph g = read_one_graph(o.in);
    json line = report_header("construct");
    line["procedure"] = o.name;
    json result;
    bool exhausted = false;
    auto note = [&](const auto& r) {
        exhausted = r.outcome() == std::decay_t<decltype(r)>::Outcome::budget_exhausted;
    };
    if (o.name == "levelling") {
        result = {{"outcome", "success"}, {"witness", to_json(build_levelling(g, b))}};
    }
    else if (o.name == "5-hole" || o.name == "6-hole" || o.name == "ell-hole") {
        auto r = o.name == "5-hole"   ? find_5_hole(g, b)
                 : o.name == "6-hole" ? find_6_hole(g, b)
                                      : find_ell_hole_c4free(g, o.ell, b);
        require_hole(g, r);
        note(r);
        result = hole_json(r);
    }
    else if (o.name == "trellis-hole") {
        auto r = hole_from_extended_trellis(g, load_cert<TrellisEmbedding>(o.cert), o.k, o.ell);
        require_hole(g, r);
        result = hole_json(r);
    }
    else if (o.name == "uniform-trellis") {
        auto r = uniform_sub_trellis(g, load_cert<TrellisEmbedding>(o.cert), o.t, b);
        note(r);
        result = outcome_json(r);
        if (r.ok())
            result.update({{"k", r.witness().k}, {"witness", to_json(r.witness().trellis)}});
    }
    else if (o.name == "type2-hole") {
        auto r = hole_from_type2_cable(g, load_cert<Cable>(o.cert));
        require_hole(g, r);
        result = hole_json(r);
    }
    else if (o.name == "subcable") {
        auto r = monochromatic_subcable(g, load_cert<Cable>(o.cert), o.m, o.n, b);
        note(r);
        result = outcome_json(r);
        if (r.ok())
            result.update({{"type", r.witness().type}, {"witness", to_json(r.witness().cable)}});
    }
    else if (o.name == "multicover") {
        result = {{"outcome", "success"}, {"witness", to_json(cable_type1_to_multicover(g, load_cert<Cable>(o.cert)))}};
    }
    else if (o.name == "grow-cable") {
        if (o.phi.empty())
            throw UsageError("grow-cable needs --phi");
        auto r = grow_cable(g, o.t, o.tau, PhiTable::from_json(o.phi), b);
        note(r);
        result = outcome_json(r);
        if (r.ok())
            result["witness"] = to_json(r.witness());
    }
    else {
        throw UsageError("unknown construction " + o.name);
    }
    line["result"] = result;
    std::cout << line.dump() << '\n';
    return exhausted ? budget : ok;
}

int run_generate(const std::string& spec, bool edges)
{
    Graph g = generate(spec);
    if (edges)
        std::cout << emit_edge_list(g);
    else
        std::cout << emit_graph6(g) << '\n';
    return ok;
}

int run_corpus(bool as_json)
{
    bool all = true;
    if (!as_json)
        std::cout << "id,name,pass,seconds,detail\n";
    for (int id = 1; id <= acceptance::criterion_count; ++id) {
        auto r = acceptance::run_criterion(id);
        all = all && r.pass;
        if (as_json) {
            json line = report_header("corpus");
            line["result"] = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
            line["wall_ms"] = r.seconds * 1000.0;
            std::cout << line.dump() << '\n';
        }
        else {
            std::string detail = r.detail;
            for (std::size_t p = 0; (p = detail.find('"', p)) != std::string::npos; p += 2)
                detail.insert(p, "\"");
            std::printf("%d,%s,%s,%.3f,\"%s\"\n", r.id, r.name.c_str(), r.pass ? "true" : "false", r.seconds,
                        detail.c_str());
        }
        std::cout.flush();
    }
    return all ? ok : violations;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Holes, chromatic number and structure certificates for small graphs"};
    app.require_subcommand(1);

    std::uint64_t budget_nodes = budget_from_environment().max_nodes;
    app.add_option("--budget", budget_nodes, "Node-expansion cap per search (default HOLESCOPE_BUDGET)");
    bool json_out = true, csv_out = false;

    AnalyzeOptions ao;
    auto* analyze = app.add_subcommand("analyze", "Spectrum, chi, chi^rho, girth and hole intervals");
    analyze->add_option("--in", ao.in, "graph6 lines or an edge list");
    analyze->add_flag("--stdin", ao.from_stdin, "Read graphs from standard input");
    analyze->add_option("--rho", ao.rho, "Largest radius for the chi^rho table")->capture_default_str();
    analyze->add_option("--numax", ao.numax, "Largest hole interval length")->capture_default_str();
    analyze->add_option("--lmax", ao.lmax, "Longest hole searched")->capture_default_str();
    analyze->add_option("--seed", ao.seed, "Seed for sampled control checks")->capture_default_str();
    analyze->add_option("--phi", ao.phi, "JSON array phi(0..K) for a control check");
    analyze->add_option("--budget", budget_nodes, "Node-expansion cap per search");
    analyze->add_flag("--json", json_out, "JSON lines (default)");

    std::string graph_path, cert_path;
    auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
    verify->add_option("--graph", graph_path, "graph6 or edge-list file")->required();
    verify->add_option("--cert", cert_path, "Certificate JSON")->required();
    verify->add_flag("--json", json_out, "JSON output (default)");

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "Run a construction on a graph");
    construct
        ->add_option("procedure", co.name,
                     "levelling, 5-hole, 6-hole, ell-hole, uniform-trellis, trellis-hole, type2-hole, subcable, "
                     "multicover, grow-cable")
        ->required();
    construct->add_option("--in", co.in, "graph6 or edge-list file")->required();
    construct->add_option("--cert", co.cert, "Input certificate JSON");
    construct->add_option("--ell", co.ell, "Hole length")->capture_default_str();
    construct->add_option("--k", co.k, "Trellis type")->capture_default_str();
    construct->add_option("--t", co.t, "Cable length or trellis block size")->capture_default_str();
    construct->add_option("--tau", co.tau, "Final chromatic threshold")->capture_default_str();
    construct->add_option("--m", co.m, "Type-1 subcable size")->capture_default_str();
    construct->add_option("--n", co.n, "Type-2 subcable size")->capture_default_str();
    construct->add_option("--phi", co.phi, "JSON array phi(0..K)");
    construct->add_option("--budget", budget_nodes, "Node-expansion cap per search");
    construct->add_flag("--json", json_out, "JSON output (default)");

    std::string spec;
    bool edges = false;
    auto* gen = app.add_subcommand("generate", "Print a family member as graph6");
    gen->add_option("spec", spec, "e.g. cycle:5, mycielski:cycle:5, kneser:5:2, rtf:n=30:seed=7")->required();
    gen->add_flag("--edges", edges, "Edge list instead of graph6");

    auto* corpus = app.add_subcommand("corpus", "Run the acceptance suite");
    corpus->add_flag("--csv", csv_out, "CSV summary (default)");
    bool corpus_json = false;
    corpus->add_flag("--json", corpus_json, "JSON lines instead of CSV");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    Budget b{budget_nodes};
    try {
        if (*analyze)
            return run_analyze(ao, b);
        if (*verify)
            return run_verify(graph_path, cert_path);
        if (*construct)
            return run_construct(co, b);
        if (*gen)
            return run_generate(spec, edges);
        if (*corpus)
            return run_corpus(corpus_json);
    }
    catch (const BudgetExhausted& e) {
        std::cerr << "holescope: " << e.what() << '\n';
        return budget;
    }
    catch (const UsageError& e) {
        std::cerr << "holescope: " << e.what() << '\n';
        return usage;
    }
    catch (const SchemaError& e) {
        std::cerr << "holescope: schema: " << e.what() << '\n';
        return usage;
    }
    catch (const FormatError& e) {
        std::cerr << "holescope: input: " << e.what() << '\n';
        return usage;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "holescope: " << e.what() << '\n';
        return usage;
    }
    catch (const std::out_of_range& e) {
        std::cerr << "holescope: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
