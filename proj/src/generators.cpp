#include "holescope/generators.hpp"

#include "holescope/random.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <stdexcept>

namespace holescope {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

void lex_subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i < n; ++i) {
        cur.push_back(i);
        lex_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view s, std::string_view what)
{
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    require(ec == std::errc{} && ptr == s.data() + s.size(),
            "bad " + std::string(what) + " \"" + std::string(s) + "\"");
    return value;
}

}  // namespace

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    require(n >= 0, "path order must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_graph(int n)
{
    require(n >= 0, "complete graph order must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph empty_graph(int n)
{
    require(n >= 0, "order must be nonnegative");
    return Graph(n);
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 0 && b >= 0, "part sizes must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph petersen_graph()
{
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph groetzsch_graph() { return mycielskian(cycle_graph(5)); }

Graph mycielskian(const Graph& g)
{
    const int n = g.order();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(n + u, v);
        edges.emplace_back(u, n + v);
    }
    for (int i = 0; i < n; ++i)
        edges.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, edges);
}

Graph kneser_graph(int n, int k)
{
    require(k >= 1 && n >= 2 * k, "kneser needs k >= 1 and n >= 2k");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    lex_subsets(n, k, 0, cur, subsets);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(subsets[i].begin(), subsets[i].end(), subsets[j].begin(), subsets[j].end(),
                                  std::back_inserter(common));
            if (common.empty())
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(subsets.size()), edges);
}

Graph shift_graph(int n)
{
    require(n >= 2, "shift graph needs n >= 2");
    std::vector<std::vector<int>> pairs;
    std::vector<int> cur;
    lex_subsets(n, 2, 0, cur, pairs);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (pairs[i][1] == pairs[j][0])
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(pairs.size()), edges);
}

Graph random_triangle_free(int n, std::uint64_t seed, std::optional<int> max_edges)
{
    require(n >= 0, "order must be nonnegative");
    require(!max_edges || *max_edges >= 0, "edge cap must be nonnegative");
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    Rng rng(seed);
    rng.shuffle(pairs);

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        if (max_edges && static_cast<int>(edges.size()) >= *max_edges)
            break;
        bool closes = false;
        for (int w = 0; w < n && !closes; ++w)
            closes = adj[u][w] && adj[v][w];
        if (closes)
            continue;
        adj[u][v] = adj[v][u] = true;
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

FamilySpec parse_family(std::string_view text)
{
    auto colon = text.find(':');
    FamilySpec spec;
    spec.family = std::string(text.substr(0, colon));
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (spec.family == "random_triangle_free")
        spec.family = "rtf";
    if (spec.family == "mycielski") {
        require(!rest.empty(), "mycielski needs an inner family");
        spec.inner = std::make_shared<FamilySpec>(parse_family(rest));
        return spec;
    }
    if (spec.family == "rtf") {
        std::optional<int> n, m;
        for (auto part : split(rest, ':')) {
            auto eq = part.find('=');
            require(eq != std::string_view::npos, "rtf parameters are key=value");
            auto key = part.substr(0, eq), value = part.substr(eq + 1);
            if (key == "n")
                n = parse_number<int>(value, "n");
            else if (key == "seed")
                spec.seed = parse_number<std::uint64_t>(value, "seed");
            else if (key == "m")
                m = parse_number<int>(value, "m");
            else
                throw std::invalid_argument("unknown rtf parameter \"" + std::string(key) + "\"");
        }
        require(n.has_value(), "rtf needs n=");
        spec.params.push_back(*n);
        if (m)
            spec.params.push_back(*m);
        if (!spec.seed)
            spec.seed = 0;
        return spec;
    }

    if (!rest.empty())
        for (auto part : split(rest, ':'))
            spec.params.push_back(parse_number<int>(part, spec.family + " parameter"));

    static const std::map<std::string, std::size_t> arity{
        {"cycle", 1}, {"path", 1},     {"complete", 1},  {"empty", 1}, {"complete_bipartite", 2},
        {"petersen", 0}, {"groetzsch", 0}, {"kneser", 2}, {"shift", 1}};
    auto it = arity.find(spec.family);
    require(it != arity.end(), "unknown family \"" + spec.family + "\"");
    require(spec.params.size() == it->second, spec.family + " takes " + std::to_string(it->second) + " parameters");
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    if (spec.family == "mycielski")
        return "mycielski:" + to_string(*spec.inner);
    std::string out = spec.family;
    if (spec.family == "rtf") {
        out += ":n=" + std::to_string(spec.params.at(0)) + ":seed=" + std::to_string(spec.seed.value_or(0));
        if (spec.params.size() > 1)
            out += ":m=" + std::to_string(spec.params[1]);
        return out;
    }
    for (int p : spec.params)
        out += ":" + std::to_string(p);
    return out;
}

Graph generate(const FamilySpec& spec)
{
    const auto& f = spec.family;
    const auto& p = spec.params;
    if (f == "mycielski") {
        require(spec.inner != nullptr, "mycielski needs an inner family");
        return mycielskian(generate(*spec.inner));
    }
    if (f == "cycle")
        return cycle_graph(p.at(0));
    if (f == "path")
        return path_graph(p.at(0));
    if (f == "complete")
        return complete_graph(p.at(0));
    if (f == "empty")
        return empty_graph(p.at(0));
    if (f == "complete_bipartite")
        return complete_bipartite(p.at(0), p.at(1));
    if (f == "petersen")
        return petersen_graph();
    if (f == "groetzsch")
        return groetzsch_graph();
    if (f == "kneser")
        return kneser_graph(p.at(0), p.at(1));
    if (f == "shift")
        return shift_graph(p.at(0));
    if (f == "rtf")
        return random_triangle_free(p.at(0), spec.seed.value_or(0),
                                    p.size() > 1 ? std::optional<int>(p[1]) : std::nullopt);
    throw std::invalid_argument("unknown family \"" + f + "\"");
}

Graph generate(std::string_view text) { return generate(parse_family(text)); }

TrellisFixture canonical_extended_trellis(int t, int k, bool ell11_adjacent)
{
    require(t >= 1, "trellis needs t >= 1");
    require(k == 1 || k == 2, "trellis type must be 1 or 2");
    require(!ell11_adjacent || t >= 2, "the row-0 cross edge needs two rows");
    TrellisEmbedding emb;
    emb.extended = true;
    int next = 0;
    for (int r = 0; r < t; ++r)
        emb.x.push_back(next++);
    for (int j = 0; j <= t; ++j) {
        emb.a.push_back(next++);
        emb.b.push_back(next++);
    }
    emb.a_map.assign(t, VertexSeq(t + 1));
    emb.b_map.assign(t, VertexSeq(t + 1));
    for (int r = 0; r < t; ++r)
        for (int j = 0; j <= t; ++j) {
            emb.a_map[r][j] = next++;
            emb.b_map[r][j] = next++;
        }
    emb.c0 = next++;

    std::vector<Edge> edges{{emb.a[0], emb.c0}, {emb.c0, emb.b[0]}};
    for (int j = 0; j <= t; ++j) {
        if (j > 0)
            edges.emplace_back(emb.a[j], emb.b[j]);
        for (int r = 0; r < t; ++r) {
            edges.emplace_back(emb.x[r], emb.a_map[r][j]);
            edges.emplace_back(emb.x[r], emb.b_map[r][j]);
            edges.emplace_back(emb.a_map[r][j], emb.a[j]);
            edges.emplace_back(emb.b_map[r][j], emb.b[j]);
            if (k == 2 && j > 0)
                for (int r2 = 0; r2 < t; ++r2)
                    if (r2 != r)
                        edges.emplace_back(emb.a_map[r][j], emb.b_map[r2][j]);
        }
    }
    if (ell11_adjacent)
        edges.emplace_back(emb.a_map[0][0], emb.b_map[1][0]);
    return {Graph(next, edges), emb};
}

CableFixture typed_cable(int t, const PairTyping& typing, int base_size)
{
    require(t >= 1 && base_size >= 1, "cable needs t >= 1 and a nonempty base");
    auto type_of = [&](int i, int j) {
        auto it = typing.find({i, j});
        int type = it == typing.end() ? 1 : it->second;
        require(type == 1 || type == 2, "pair types are 1 or 2");
        return type;
    };

    Cable c;
    int next = 0;
    for (int i = 0; i < t; ++i)
        c.x.push_back(next++);
    for (int b = 0; b < base_size; ++b)
        c.base.push_back(next++);
    std::vector<Edge> edges;
    c.y.resize(t);
    for (int i = 0; i < t; ++i)
        for (Vertex base : c.base) {
            Vertex y = next++;
            c.y[i].push_back(y);
            edges.emplace_back(c.x[i], y);
            edges.emplace_back(y, base);
        }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (type_of(i, j) == 2) {
                Vertex z = next++;
                c.z[{i, j}] = {z};
                edges.emplace_back(c.x[i], z);
            }
    c.n.resize(t);
    for (int j = 0; j < t; ++j) {
        c.n[j] = c.y[j];
        for (int k = j + 1; k < t; ++k)
            c.n[j] = set_union(c.n[j], c.z_of(j, k));
    }
    for (const auto& [key, zs] : c.z)
        for (Vertex w : c.n[key.second])
            edges.emplace_back(zs.front(), w);
    return {Graph(next, edges), c};
}

CableFixture canonical_cable(int t, int type, int base_size)
{
    require(type == 1 || type == 2, "cable type must be 1 or 2");
    PairTyping typing;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            typing[{i, j}] = type;
    return typed_cable(t, typing, base_size);
}

ShowerFixture canonical_shower_fixture(std::string_view kind, int nu)
{
    ShowerFixture f;
    auto& names = f.names;
    if (kind == "c6_basic") {
        names = {{"z0", 0}, {"a", 1}, {"b", 2}, {"c", 3}, {"s", 4}, {"d", 5}};
        f.graph = Graph(6, {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 0}});
        f.shower = {{{0}, {1, 2}, {3, 4, 5}}, 4};
    }
    else if (kind == "two_jet") {
        names = {{"z0", 0}, {"a", 1}, {"b", 2}, {"c", 3}, {"s", 4}, {"e", 5}, {"d", 6}};
        f.graph = Graph(7, {{0, 1}, {0, 2}, {1, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 6}});
        f.shower = {{{0}, {1, 2}, {3, 4, 5, 6}}, 4};
    }
    else if (kind == "comb_sprinkler") {
        require(nu >= 1, "comb_sprinkler needs nu >= 1");
        // z0 = 0, parents p_3..p_{nu+2} = 1..nu, path v_1..v_{nu+2} = nu+1..2nu+2.
        const int path_start = nu + 1, length = nu + 2;
        std::vector<Edge> edges;
        VertexSet parents, base;
        for (int i = 0; i < nu; ++i) {
            parents.push_back(1 + i);
            edges.emplace_back(0, 1 + i);
            edges.emplace_back(1 + i, path_start + 2 + i);
        }
        for (int i = 0; i < length; ++i) {
            base.push_back(path_start + i);
            if (i + 1 < length)
                edges.emplace_back(path_start + i, path_start + i + 1);
        }
        f.graph = Graph(path_start + length, edges);
        f.shower = {{{0}, parents, base}, path_start};
        names = {{"z0", 0}, {"s", path_start}};
    }
    else {
        throw std::invalid_argument("unknown shower fixture \"" + std::string(kind) + "\"");
    }
    return f;
}

}  // namespace holescope
