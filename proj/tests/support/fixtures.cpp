#include "fixtures.hpp"

#include "holescope/constructions.hpp"
#include "holescope/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace holescope::fixtures {

Graph add_edge(const Graph& g, Vertex u, Vertex v)
{
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v)
{
    if (!g.adjacent(u, v))
        throw std::logic_error("fixture edge to remove is absent");
    auto edges = g.edges();
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    return Graph(g.order(), edges);
}

Levelling bfs_levelling(const Graph& g)
{
    std::vector<int> depth(g.order(), -1);
    Levels levels{{0}};
    depth[0] = 0;
    while (true) {
        VertexSeq next;
        for (Vertex u : levels.back())
            for (Vertex w : g.neighbours(u))
                if (depth[w] < 0) {
                    depth[w] = 1;
                    next.push_back(w);
                }
        if (next.empty())
            return {levels};
        levels.push_back(make_set(next));
    }
}

BendFixture bend_fixture(int base_length, int tail, WUBend::Kind kind)
{
    if (base_length < 2 || tail < 0)
        throw std::invalid_argument("bend fixture needs a base of two or more vertices");
    const int m = base_length;
    // h = 0, p = 1, q_i = i for i = 2..m, b_i = m + i, then w, tail, s.
    const Vertex h = 0, p = 1;
    auto q = [](int i) { return i; };
    auto b = [&](int i) { return m + i; };
    const Vertex w = 2 * m + 1;
    std::vector<Edge> edges{{h, p}, {p, b(1)}, {p, w}};
    VertexSet parents{p}, base;
    for (int i = 2; i <= m; ++i) {
        parents.push_back(q(i));
        edges.emplace_back(h, q(i));
        edges.emplace_back(q(i), b(i));
    }
    for (int i = 1; i <= m; ++i) {
        base.push_back(b(i));
        if (i < m)
            edges.emplace_back(b(i), b(i + 1));
    }
    VertexSeq u{w};
    for (int i = 0; i <= tail; ++i) {
        edges.emplace_back(u.back(), w + 1 + i);
        u.push_back(w + 1 + i);
    }
    BendFixture f;
    f.graph = Graph(w + tail + 2, edges);
    f.bend.levels = {{h}, parents, base};
    f.bend.u_path = u;
    f.bend.kind = kind;
    f.attachment = p;
    return f;
}

ShowerFixture detour_fixture()
{
    ShowerFixture f;
    f.names = {{"z", 0}, {"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}, {"g", 6}, {"f", 7}, {"s", 8}};
    f.graph = Graph(9, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {5, 4}, {4, 7}, {6, 5}, {6, 7}, {7, 8}});
    f.shower = {{{0}, {1, 2}, {3, 4}, {5, 6, 7, 8}}, 8};
    return f;
}

ShowerFixture wand_fixture()
{
    ShowerFixture f;
    f.names = {{"h", 0},  {"w1", 1}, {"a1", 2}, {"w2", 3}, {"u", 4},
               {"w3", 5}, {"p3", 6}, {"p4", 7}, {"m", 8},  {"s", 9}};
    f.graph = Graph(10, {{0, 1}, {0, 2}, {1, 3}, {3, 5}, {2, 4}, {4, 5}, {4, 6}, {6, 7}, {7, 8}, {8, 9}});
    f.shower = {{{0}, {1, 2}, {3, 4}, {5, 6}, {7}, {8, 9}}, 9};
    return f;
}

Wand wand_of(const ShowerFixture& f)
{
    return Wand{{{f.names.at("h")}, {f.names.at("w1")}, {f.names.at("w2")}, {f.names.at("w3")}}};
}

const std::vector<std::string>& fuzz_kinds()
{
    static const std::vector<std::string> kinds{"levelling", "shower",  "trellis",  "multicover",
                                                "cable",     "wubend",  "sprinkler"};
    return kinds;
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    if (v.empty())
        throw std::logic_error("fixture pick from an empty list");
    return v[rng.below(v.size())];
}

int between(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(hi - lo + 1)); }

VertexSeq parents_of(const Graph& g, Vertex v, const VertexSet& level) { return set_intersection(g.neighbours(v), level); }

struct Case {
    Graph graph;
    Certificate cert;
};

Case levelling_case(Rng& rng)
{
    std::vector<Graph> graphs;
    for (int n = 7; n <= 14; ++n)
        graphs.push_back(cycle_graph(n));
    graphs.push_back(petersen_graph());
    graphs.push_back(groetzsch_graph());
    graphs.push_back(path_graph(9));
    Graph g = pick(rng, graphs);
    return {g, bfs_levelling(g)};
}

Case shower_case(Rng& rng)
{
    ShowerFixture f;
    switch (rng.below(4)) {
    case 0:
        f = canonical_shower_fixture("c6_basic");
        break;
    case 1:
        f = canonical_shower_fixture("two_jet");
        break;
    case 2:
        f = canonical_shower_fixture("comb_sprinkler", between(rng, 1, 5));
        break;
    default:
        f = detour_fixture();
    }
    return {f.graph, ShowerCert{f.shower, Stability::none()}};
}

Case trellis_case(Rng& rng)
{
    int t = between(rng, 1, 4);
    int k = between(rng, 1, 2);
    bool adj = t >= 2 && rng.coin();
    auto f = canonical_extended_trellis(t, k, adj);
    return {f.graph, f.trellis};
}

Case multicover_case(Rng& rng)
{
    auto f = canonical_cable(between(rng, 1, 4), 1, between(rng, 1, 3));
    auto m = cable_type1_to_multicover(f.graph, f.cable);
    m.stable = rng.coin();
    return {f.graph, m};
}

Case cable_case(Rng& rng)
{
    const int t = between(rng, 2, 4);
    PairTyping typing;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            typing[{i, j}] = between(rng, 1, 2);
    auto f = typed_cable(t, typing, between(rng, 1, 3));
    return {f.graph, f.cable};
}

Case bend_case(Rng& rng)
{
    auto kind = rng.coin() ? WUBend::Kind::u_bend : WUBend::Kind::w_bend;
    auto f = bend_fixture(between(rng, 2, 5), between(rng, 0, 2), kind);
    return {f.graph, f.bend};
}

Case sprinkler_case(Rng& rng)
{
    int nu = between(rng, 1, 6);
    auto f = canonical_shower_fixture("comb_sprinkler", nu);
    return {f.graph, SprinklerCert{f.shower, nu}};
}

Case make_case(const std::string& kind, Rng& rng)
{
    if (kind == "levelling")
        return levelling_case(rng);
    if (kind == "shower")
        return shower_case(rng);
    if (kind == "trellis")
        return trellis_case(rng);
    if (kind == "multicover")
        return multicover_case(rng);
    if (kind == "cable")
        return cable_case(rng);
    if (kind == "wubend")
        return bend_case(rng);
    if (kind == "sprinkler")
        return sprinkler_case(rng);
    throw std::invalid_argument("unknown fuzz kind \"" + kind + "\"");
}

Mutant mutate_levelling(Graph g, Levelling l, Rng& rng)
{
    const int k = l.depth();
    auto family = rng.below(5);
    if (family == 2 && k < 3)
        family = 0;
    switch (family) {
    case 0: {
        std::vector<Edge> candidates;
        for (int i = 0; i <= k; ++i)
            for (int j = i + 2; j <= k; ++j)
                for (Vertex u : l.levels[i])
                    for (Vertex w : l.levels[j])
                        if (!g.adjacent(u, w))
                            candidates.emplace_back(u, w);
        auto [u, w] = pick(rng, candidates);
        return {"add-skip-edge", add_edge(g, u, w), l};
    }
    case 1: {
        std::vector<Edge> candidates;
        for (int i = 1; i <= k; ++i)
            for (Vertex v : l.levels[i])
                if (auto ps = parents_of(g, v, l.levels[i - 1]); ps.size() == 1)
                    candidates.emplace_back(v, ps.front());
        auto [v, p] = pick(rng, candidates);
        return {"remove-sole-parent", remove_edge(g, v, p), l};
    }
    case 2: {
        int i = between(rng, 1, k - 2);
        Vertex v = pick(rng, l.levels[i]);
        l.levels[i] = set_difference(l.levels[i], {v});
        l.levels[i + 2] = set_union(l.levels[i + 2], {v});
        return {"move-down-two", g, l};
    }
    case 3: {
        Vertex v = pick(rng, l.levels[1]);
        l.levels[1] = set_difference(l.levels[1], {v});
        l.levels[0] = set_union(l.levels[0], {v});
        return {"second-head", g, l};
    }
    default: {
        int i = between(rng, 1, k);
        int j = static_cast<int>(rng.below(k));
        if (j >= i)
            ++j;
        Vertex v = pick(rng, l.levels[i]);
        l.levels[j] = set_union(l.levels[j], {v});
        return {"repeat-vertex", g, l};
    }
    }
}

Mutant mutate_shower(Graph g, ShowerCert s, Rng& rng)
{
    auto& sh = s.shower;
    const int k = sh.depth();
    switch (rng.below(5)) {
    case 0: {
        sh.drain = pick(rng, sh.levels[between(rng, 0, k - 1)]);
        return {"drain-off-base", g, s};
    }
    case 1: {
        std::vector<Edge> base_edges;
        for (auto [u, v] : g.edges())
            if (set_contains(sh.base(), u) && set_contains(sh.base(), v))
                base_edges.emplace_back(u, v);
        auto [u, v] = pick(rng, base_edges);
        return {"cut-base", remove_edge(g, u, v), s};
    }
    case 2: {
        std::vector<Edge> candidates;
        for (int i = 1; i < k; ++i)
            for (Vertex v : sh.levels[i])
                if (auto ps = parents_of(g, v, sh.levels[i - 1]); ps.size() == 1)
                    candidates.emplace_back(v, ps.front());
        auto [v, p] = pick(rng, candidates);
        return {"remove-sole-parent", remove_edge(g, v, p), s};
    }
    case 3: {
        Vertex b = pick(rng, sh.levels[between(rng, 2, k)]);
        return {"head-skip-edge", add_edge(g, sh.head(), b), s};
    }
    default: {
        Vertex v = pick(rng, sh.levels[1]);
        sh.levels[1] = set_difference(sh.levels[1], {v});
        sh.levels[0] = set_union(sh.levels[0], {v});
        return {"second-head", g, s};
    }
    }
}

Mutant mutate_trellis(Graph g, TrellisEmbedding t, Rng& rng)
{
    std::vector<Vertex> named(t.x.begin(), t.x.end());
    std::vector<Edge> allowed;
    for (int j = 0; j <= t.columns(); ++j) {
        named.push_back(t.a[j]);
        named.push_back(t.b[j]);
        for (int r = 0; r < t.rows(); ++r) {
            named.push_back(t.a_map[r][j]);
            named.push_back(t.b_map[r][j]);
            for (int r2 = 0; r2 < t.rows(); ++r2)
                allowed.emplace_back(std::minmax(t.a_map[r][j], t.b_map[r2][j]));
        }
    }
    named.push_back(t.c0);
    auto family = rng.below(4);
    if (family == 1 && t.rows() < 2)
        family = 0;
    switch (family) {
    case 0: {
        std::vector<Edge> required{{t.a[0], t.c0}, {t.c0, t.b[0]}};
        for (int j = 0; j <= t.columns(); ++j) {
            if (j > 0)
                required.emplace_back(t.a[j], t.b[j]);
            for (int r = 0; r < t.rows(); ++r) {
                required.emplace_back(t.x[r], t.a_map[r][j]);
                required.emplace_back(t.x[r], t.b_map[r][j]);
                required.emplace_back(t.a_map[r][j], t.a[j]);
                required.emplace_back(t.b_map[r][j], t.b[j]);
            }
        }
        auto [u, v] = pick(rng, required);
        return {"remove-required", remove_edge(g, u, v), t};
    }
    case 1: {
        int r = static_cast<int>(rng.below(t.rows()));
        int r2 = static_cast<int>(rng.below(t.rows() - 1));
        if (r2 >= r)
            ++r2;
        return {"join-apexes", add_edge(g, t.x[r], t.x[r2]), t};
    }
    case 2: {
        while (true) {
            Vertex u = pick(rng, named), v = pick(rng, named);
            if (u == v || g.adjacent(u, v))
                continue;
            if (std::find(allowed.begin(), allowed.end(), Edge(std::minmax(u, v))) != allowed.end())
                continue;
            return {"add-forbidden", add_edge(g, u, v), t};
        }
    }
    default: {
        int r = static_cast<int>(rng.below(t.rows()));
        int j = between(rng, 0, t.columns());
        t.a_map[r][j] = t.b_map[r][j];
        return {"reuse-vertex", g, t};
    }
    }
}

Mutant mutate_multicover(Graph g, MulticoverCert m, Rng& rng)
{
    const int t = static_cast<int>(m.covers.size());
    auto family = rng.below(6);
    if ((family == 3 || family == 4) && t < 2)
        family = 0;
    const auto& cover = pick(rng, m.covers);
    switch (family) {
    case 0:
        return {"base-apex-edge", add_edge(g, pick(rng, m.base), cover.x), m};
    case 1: {
        Vertex c = pick(rng, m.base);
        Vertex y = set_intersection(g.neighbours(c), cover.n).front();
        return {"undominate", remove_edge(g, c, y), m};
    }
    case 2:
        return {"cut-spoke", remove_edge(g, cover.x, pick(rng, cover.n)), m};
    case 3:
    case 4: {
        const Cover* other = &cover;
        while (other->x == cover.x)
            other = &pick(rng, m.covers);
        if (family == 3)
            return {"apex-reaches-cover", add_edge(g, other->x, pick(rng, cover.n)), m};
        m.stable = true;
        return {"cross-cover-edge", add_edge(g, pick(rng, cover.n), pick(rng, other->n)), m};
    }
    default:
        m.base = set_union(m.base, {cover.x});
        return {"apex-in-base", g, m};
    }
}

Mutant mutate_cable(const Graph& g, Cable c, Rng& rng)
{
    const int t = c.length();
    auto cls = classify_cable(g, c);
    int i = static_cast<int>(rng.below(t - 1));
    int j = between(rng, i + 1, t - 1);
    switch (rng.below(6)) {
    case 0:
        return {"base-apex-edge", add_edge(g, pick(rng, c.base), c.x[i]), c};
    case 1: {
        Vertex v = pick(rng, c.base);
        Vertex y = set_intersection(g.neighbours(v), c.y[i]).front();
        return {"drop-base-link", remove_edge(g, v, y), c};
    }
    case 2:
        return {"join-apexes", add_edge(g, c.x[i], c.x[j]), c};
    case 3:
        return {"cut-spoke", remove_edge(g, c.x[i], pick(rng, c.n[i])), c};
    case 4: {
        for (const auto& [key, type] : cls.pair_types)
            if (type == 1)
                return {"late-apex-to-y", add_edge(g, c.x[key.second], pick(rng, c.y[key.first])), c};
        const auto& zs = c.z.begin()->second;
        return {"base-z-edge", add_edge(g, pick(rng, c.base), pick(rng, zs)), c};
    }
    default:
        return {"apex-to-later-n", add_edge(g, c.x[i], pick(rng, c.n[j])), c};
    }
}

Mutant mutate_bend(const Graph& g, WUBend b, Rng& rng)
{
    const VertexSet& base = b.levels.back();
    const VertexSet& above = b.levels[1];
    const Vertex w = b.u_path.front();
    Vertex p = set_intersection(g.neighbours(w), above).front();
    auto family = rng.below(6);
    if (family == 1 && base.size() < 3)
        family = 0;
    switch (family) {
    case 0:
        return {"u-base-edge", add_edge(g, pick(rng, b.u_path), pick(rng, base)), b};
    case 1: {
        int i = static_cast<int>(rng.below(base.size() - 2));
        int j = between(rng, i + 2, static_cast<int>(base.size()) - 1);
        auto path = *as_induced_path(g, base);
        return {"base-chord", add_edge(g, path[i], path[j]), b};
    }
    case 2: {
        VertexSeq rest(b.u_path.begin() + 1, b.u_path.end());
        return {"parent-to-u", add_edge(g, p, pick(rng, rest)), b};
    }
    case 3: {
        Vertex v = pick(rng, base);
        return {"remove-base-parent", remove_edge(g, v, set_intersection(g.neighbours(v), above).front()), b};
    }
    case 4: {
        if (b.kind == WUBend::Kind::u_bend && above.size() > 1) {
            Vertex q = p;
            while (q == p)
                q = pick(rng, above);
            return {"second-w-parent", add_edge(g, w, q), b};
        }
        b.levels.back() = set_union(base, {b.u_path.back()});
        return {"drain-into-levels", g, b};
    }
    default:
        return {"detach-w", remove_edge(g, p, w), b};
    }
}

Mutant mutate_sprinkler(const Graph& g, SprinklerCert s, Rng& rng)
{
    auto path = *as_induced_path(g, s.shower.base(), s.shower.drain);
    const int n = static_cast<int>(path.size());
    const int i = between(rng, n - s.nu, n - 1);
    const Vertex parent = set_intersection(g.neighbours(path[i]), s.shower.levels[1]).front();
    switch (rng.below(6)) {
    case 0: {
        int j = static_cast<int>(rng.below(n - 1));
        if (j >= i)
            ++j;
        return {"share-parent", add_edge(g, parent, path[j]), s};
    }
    case 1:
        return {"early-parent", add_edge(g, parent, path[rng.below(n - s.nu)]), s};
    case 2:
        return {"drop-private-parent", remove_edge(g, parent, path[i]), s};
    case 3:
        s.shower.drain = path[between(rng, 1, n - 2)];
        return {"drain-mid-path", g, s};
    case 4: {
        int j = static_cast<int>(rng.below(n - 1));
        return {"cut-base", remove_edge(g, path[j], path[j + 1]), s};
    }
    default:
        s.nu = n + 1;
        return {"nu-too-large", g, s};
    }
}

}  // namespace

Mutant pristine(const std::string& kind, std::uint64_t seed)
{
    Rng rng(seed);
    auto c = make_case(kind, rng);
    return {"none", c.graph, c.cert};
}

Mutant mutate(const std::string& kind, std::uint64_t seed)
{
    Rng rng(seed);
    auto c = make_case(kind, rng);
    if (kind == "levelling")
        return mutate_levelling(c.graph, std::get<Levelling>(c.cert), rng);
    if (kind == "shower")
        return mutate_shower(c.graph, std::get<ShowerCert>(c.cert), rng);
    if (kind == "trellis")
        return mutate_trellis(c.graph, std::get<TrellisEmbedding>(c.cert), rng);
    if (kind == "multicover")
        return mutate_multicover(c.graph, std::get<MulticoverCert>(c.cert), rng);
    if (kind == "cable")
        return mutate_cable(c.graph, std::get<Cable>(c.cert), rng);
    if (kind == "wubend")
        return mutate_bend(c.graph, std::get<WUBend>(c.cert), rng);
    return mutate_sprinkler(c.graph, std::get<SprinklerCert>(c.cert), rng);
}

}  // namespace holescope::fixtures
