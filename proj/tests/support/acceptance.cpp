#include "acceptance.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "holescope/chroma.hpp"
#include "holescope/constructions.hpp"
#include "holescope/generators.hpp"
#include "holescope/graph_io.hpp"
#include "holescope/holes.hpp"
#include "holescope/random.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

namespace holescope::acceptance {

std::vector<NamedGraph> corpus()
{
    std::vector<NamedGraph> out;
    for (int n = 4; n <= 12; ++n)
        out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
    out.push_back({"petersen", petersen_graph()});
    out.push_back({"groetzsch", groetzsch_graph()});
    std::string spec = "complete:2";
    for (Graph g = complete_graph(2); g.order() <= 23; g = mycielskian(g)) {
        out.push_back({spec, g});
        spec = "mycielski:" + spec;
    }
    for (int seed = 1; seed <= 50; ++seed) {
        std::string name = "rtf:n=" + std::to_string(12 + seed % 19) + ":seed=" + std::to_string(seed);
        out.push_back({name, generate(name)});
    }
    return out;
}

namespace {

// Collects the first few failures of a criterion.
class Tally {
  public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok)
            return;
        if (failures_++ < 5)
            notes_ += (notes_.empty() ? "" : "; ") + what;
    }

    CheckResult result(int id, std::string name, const std::string& summary) const
    {
        std::string detail = failures_ == 0 ? summary
                                            : std::to_string(failures_) + "/" + std::to_string(checks_) +
                                                  " checks failed: " + notes_;
        return {id, std::move(name), failures_ == 0 && checks_ > 0, detail, 0.0};
    }

    int checks() const { return checks_; }

  private:
    int checks_ = 0;
    int failures_ = 0;
    std::string notes_;
};

std::string seq_text(const VertexSeq& s)
{
    std::string out;
    for (Vertex v : s)
        out += (out.empty() ? "" : "-") + std::to_string(v);
    return out;
}

Graph random_graph(std::uint64_t seed)
{
    Rng rng(seed);
    const int n = 4 + static_cast<int>(seed % 7);
    const int percent = 20 + static_cast<int>(rng.below(50));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < percent)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

CheckResult spectrum_oracle()
{
    Tally t;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = random_graph(seed);
        auto spectrum = hole_spectrum(g, g.order());
        auto lengths = spectrum.lengths();
        auto expected = oracle::hole_lengths(g);
        t.check(std::set<int>(lengths.begin(), lengths.end()) == expected,
                "seed " + std::to_string(seed) + " spectrum differs from the oracle");
        for (const auto& [len, w] : spectrum.witnesses())
            t.check(oracle::is_hole(g, w) && static_cast<int>(w.size()) == len,
                    "seed " + std::to_string(seed) + " bad witness " + seq_text(w));
    }
    return t.result(1, "spectrum oracle", "200 random graphs with n <= 10 match subset enumeration");
}

CheckResult trellis_assembly()
{
    Tally t;
    for (int ell = 8; ell <= 20; ++ell)
        for (int k = 1; k <= 2; ++k)
            for (bool adjacent : {false, true}) {
                if (adjacent && !(ell == 11 && k == 1))
                    continue;
                std::string tag = "l=" + std::to_string(ell) + " k=" + std::to_string(k) + (adjacent ? " adj" : "");
                auto f = canonical_extended_trellis(ell, k, adjacent);
                auto r = hole_from_extended_trellis(f.graph, f.trellis, k, ell);
                if (!r.ok()) {
                    t.check(false, tag + ": " + outcome_name(r));
                    continue;
                }
                const auto& hole = r.witness();
                t.check(is_induced_cycle(f.graph, hole) && oracle::is_hole(f.graph, hole), tag + " not induced");
                t.check(static_cast<int>(hole.size()) == ell, tag + " length " + std::to_string(hole.size()));
            }
    return t.result(2, "trellis assembly", std::to_string(t.checks() / 2) + " holes of exact length, l = 8..20");
}

CheckResult cable_assembly()
{
    Tally t;
    for (int len = 2; len <= 9; ++len) {
        auto f = canonical_cable(len, 2);
        auto r = hole_from_type2_cable(f.graph, f.cable);
        std::string tag = "t=" + std::to_string(len);
        if (!r.ok()) {
            t.check(false, tag + ": " + outcome_name(r));
            continue;
        }
        t.check(oracle::is_hole(f.graph, r.witness()) && is_induced_cycle(f.graph, r.witness()), tag + " not induced");
        t.check(static_cast<int>(r.witness().size()) == len + 3, tag + " length " + std::to_string(r.witness().size()));
    }
    return t.result(3, "type-2 cable assembly", "holes of length t+3 for t = 2..9");
}

CheckResult ramsey_subcable()
{
    Tally t;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            pairs.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        PairTyping typing;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            typing[pairs[p]] = (mask >> p) & 1 ? 2 : 1;
        auto f = typed_cable(6, typing);
        auto r = monochromatic_subcable(f.graph, f.cable, 3, 3);
        std::string tag = "typing " + std::to_string(mask);
        if (!r.ok()) {
            t.check(false, tag + ": " + outcome_name(r));
            continue;
        }
        const auto& [sub, type] = r.witness();
        auto cls = classify_cable(f.graph, sub);
        bool homogeneous = cls.valid() && sub.length() == 3 && cls.pair_types.size() == 3;
        for (const auto& [key, pt] : cls.pair_types)
            homogeneous = homogeneous && pt == type;
        t.check(homogeneous, tag + " subcable does not re-verify");
    }
    return t.result(4, "Ramsey subcable", "all 32768 typings of t=6 give a verified homogeneous 3-subcable");
}

CheckResult levelling_guarantee()
{
    Tally t;
    int count = 0;
    for (const auto& [name, g] : corpus()) {
        ++count;
        auto l = build_levelling(g);
        auto vs = verify_levelling(g, l);
        t.check(vs.empty(), name + ": " + (vs.empty() ? "" : vs.front().rule));
        const int chi = chromatic_number(g), base = chi_of_set(g, l.base());
        t.check(2 * base >= chi, name + ": 2*" + std::to_string(base) + " < " + std::to_string(chi));
    }
    return t.result(5, "levelling guarantee", std::to_string(count) + " corpus graphs verify with 2 chi(base) >= chi");
}

CheckResult exact_chi()
{
    Tally t;
    auto expect = [&](const std::string& name, const Graph& g, int want) {
        int got = chromatic_number(g);
        t.check(got == want, name + ": chi " + std::to_string(got) + " != " + std::to_string(want));
        if (g.order() <= 11)
            t.check(oracle::chromatic_number(g) == got, name + ": oracle disagrees");
    };
    for (int k = 1; k <= 10; ++k)
        expect("C" + std::to_string(2 * k + 1), cycle_graph(2 * k + 1), 3);
    expect("petersen", petersen_graph(), 3);
    Graph g = complete_graph(2);
    int previous = 0;
    for (int i = 0; i <= 3; ++i) {
        std::string name = "M^" + std::to_string(i) + "(K2)";
        expect(name, g, i + 2);
        if (i > 0)
            t.check(chromatic_number(g) == previous + 1, name + " breaks chi(M(g)) = chi(g) + 1");
        previous = chromatic_number(g);
        g = mycielskian(g);
    }
    return t.result(6, "exact chromatic number", "odd cycles, Petersen and Mycielski chain to 23 vertices");
}

CheckResult verifier_fuzz()
{
    Tally t;
    std::ostringstream summary;
    for (const auto& kind : fixtures::fuzz_kinds()) {
        int caught = 0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            std::string tag = kind + " seed " + std::to_string(seed);
            try {
                auto p = fixtures::pristine(kind, seed);
                t.check(verify_certificate(p.graph, p.certificate).at("valid").get<bool>(), tag + " pristine invalid");
                auto m = fixtures::mutate(kind, seed);
                bool flagged = !verify_certificate(m.graph, m.certificate).at("valid").get<bool>();
                caught += flagged;
                t.check(flagged, tag + " " + m.family + " undetected");
            }
            catch (const std::exception& e) {
                t.check(false, tag + " threw: " + e.what());
            }
        }
        summary << (summary.tellp() ? ", " : "") << kind << " " << caught << "/100";
    }
    return t.result(7, "verifier fuzz", summary.str());
}

CheckResult jetset_oracle()
{
    Tally t;
    for (auto [kind, want] : {std::pair<const char*, std::set<int>>{"c6_basic", {3}}, {"two_jet", {3, 4}}}) {
        auto f = canonical_shower_fixture(kind);
        auto got = jetset(f.graph, f.shower, std::nullopt, f.graph.order());
        t.check(got == want, std::string(kind) + " jetset mismatch");
        auto all = levels_vertex_set(f.shower.levels);
        t.check(oracle::induced_path_lengths(f.graph, all, f.shower.head(), f.shower.drain) == want,
                std::string(kind) + " path oracle mismatch");
    }
    t.check(solidity({3, 4}).max_solid == 2, "solidity {3,4}");
    t.check(solidity({3, 6}).max_solid >= 1, "solidity {3,6} not 1-solid");
    return t.result(8, "jetset oracle", "c6_basic {3}, two_jet {3,4}, {3,4} 2-solid, {3,6} 1-solid");
}

CheckResult small_holes()
{
    Tally t;
    auto five = [&](const std::string& name, const Graph& g) {
        auto r = find_5_hole(g);
        t.check(r.ok() && oracle::is_hole(g, r.witness()) && r.witness().size() == 5, name + ": no verified 5-hole");
    };
    five("C5", cycle_graph(5));
    five("petersen", petersen_graph());
    five("groetzsch", groetzsch_graph());
    int bipartite = 0;
    auto graphs = corpus();
    graphs.push_back({"C4", cycle_graph(4)});
    for (const auto& [name, g] : graphs) {
        if (chromatic_number(g) > 2)
            continue;
        ++bipartite;
        auto r = find_5_hole(g);
        t.check(r.outcome() == ConstructionResult<VertexSeq>::Outcome::threshold_not_met,
                name + ": " + outcome_name(r));
    }
    auto six = find_6_hole(petersen_graph());
    t.check(six.ok() && oracle::is_hole(petersen_graph(), six.witness()) && six.witness().size() == 6,
            "petersen: no verified 6-hole");
    return t.result(9, "5- and 6-hole procedures",
                    "5-holes on C5, Petersen, Groetzsch; threshold_not_met on " + std::to_string(bipartite) +
                        " bipartite graphs; 6-hole on Petersen");
}

CheckResult format_fidelity()
{
    Tally t;
    int count = 0;
    for (const auto& [name, g] : corpus()) {
        ++count;
        auto text = emit_graph6(g);
        t.check(parse_graph6(text) == g, name + " does not round-trip");
        t.check(text == oracle::graph6(g), name + " differs from the reference encoder");
    }
    auto c5 = emit_graph6(cycle_graph(5));
    t.check(c5 == "Dhc" && c5 == oracle::graph6(cycle_graph(5)), "C5 bytes " + c5);
    return t.result(10, "graph6 fidelity", std::to_string(count) + " corpus graphs round-trip; C5 is \"Dhc\"");
}

}  // namespace

CheckResult run_criterion(int id)
{
    static const std::vector<std::function<CheckResult()>> checks{
        spectrum_oracle, trellis_assembly, cable_assembly, ramsey_subcable, levelling_guarantee,
        exact_chi,       verifier_fuzz,    jetset_oracle,  small_holes,     format_fidelity};
    if (id < 1 || id > criterion_count)
        throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = checks[id - 1]();
    }
    catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), 0.0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckResult> run_acceptance()
{
    std::vector<CheckResult> out;
    for (int id = 1; id <= criterion_count; ++id)
        out.push_back(run_criterion(id));
    return out;
}

std::string format_line(const CheckResult& r)
{
    char time[32];
    std::snprintf(time, sizeof time, "%.2f", r.seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
           " (" + time + " s)";
}

}  // namespace holescope::acceptance
