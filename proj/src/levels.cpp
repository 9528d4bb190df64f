#include "holescope/levels.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace holescope {

std::vector<int> level_index(const Graph& g, const Levels& levels)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (Vertex v : levels[i]) {
            require_vertex(g, v);
            if (index[v] < 0)
                index[v] = static_cast<int>(i);
        }
    return index;
}

VertexSet levels_vertex_set(const Levels& levels)
{
    std::vector<Vertex> all;
    for (const auto& level : levels)
        all.insert(all.end(), level.begin(), level.end());
    return make_set(std::move(all));
}

namespace {

// Axioms shared by levellings and showers. Vertices of levels 1..parents_until
// need a parent.
void check_layers(const Graph& g, const Levels& levels, int parents_until, Violations& out)
{
    auto index = level_index(g, levels);
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (Vertex v : levels[i])
            if (index[v] != static_cast<int>(i))
                out.push_back({"levels-not-disjoint", {v}, "vertex appears in levels " + std::to_string(index[v]) +
                                                               " and " + std::to_string(i)});
    if (levels.front().size() != 1)
        out.push_back({"head-not-unique", levels.front(), "first level has " + std::to_string(levels.front().size()) +
                                                             " vertices"});

    for (int i = 1; i <= parents_until && i < static_cast<int>(levels.size()); ++i)
        for (Vertex v : levels[i]) {
            const auto& nbrs = g.neighbours(v);
            bool parent = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return index[w] == i - 1; });
            if (!parent)
                out.push_back({"missing-parent", {v}, "no neighbour in level " + std::to_string(i - 1)});
        }

    for (std::size_t j = 0; j < levels.size(); ++j)
        for (Vertex v : levels[j])
            for (Vertex w : g.neighbours(v))
                if (v < w && index[w] >= 0 && std::abs(index[w] - static_cast<int>(j)) >= 2)
                    out.push_back({"skip-edge", {v, w}, "levels " + std::to_string(j) + " and " +
                                                            std::to_string(index[w])});
}

std::optional<Edge> first_edge_within(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return Edge{s[i], s[j]};
    return std::nullopt;
}

bool has_neighbour_in(const Graph& g, Vertex v, const VertexSet& s)
{
    const auto& nbrs = g.neighbours(v);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return set_contains(s, w); });
}

VertexSet neighbours_in(const Graph& g, Vertex v, const VertexSet& s)
{
    return set_intersection(g.neighbours(v), s);
}

}  // namespace

Violations verify_levelling(const Graph& g, const Levelling& levelling)
{
    if (levelling.levels.empty())
        return {{"no-levels", {}, "a levelling needs at least one level"}};
    Violations out;
    check_layers(g, levelling.levels, levelling.depth(), out);
    return out;
}

Violations verify_shower(const Graph& g, const Shower& shower, Stability stability)
{
    if (shower.levels.empty())
        return {{"no-levels", {}, "a shower needs at least one level"}};
    Violations out;
    const int k = shower.depth();
    check_layers(g, shower.levels, k - 1, out);
    require_vertex(g, shower.drain);
    if (!set_contains(shower.base(), shower.drain))
        out.push_back({"drain-outside-base", {shower.drain}, "drain is not in the last level"});
    if (shower.base().empty() || !is_connected_set(g, shower.base()))
        out.push_back({"base-not-connected", {}, "last level does not induce a connected subgraph"});

    int from = k, to = k - 1;
    if (stability.mode == Stability::Mode::top) {
        if (k < stability.lambda)
            out.push_back({"too-few-levels", {}, "depth " + std::to_string(k) + " below lambda " +
                                                     std::to_string(stability.lambda)});
        from = std::max(0, k - stability.lambda);
    }
    else if (stability.mode == Stability::Mode::full) {
        from = 0;
    }
    for (int i = from; i <= to; ++i)
        if (auto e = first_edge_within(g, shower.levels[i]))
            out.push_back({"level-not-stable", {e->first, e->second}, "edge inside level " + std::to_string(i)});
    return out;
}

VertexSet shower_floor(const Graph& g, const Shower& shower)
{
    if (shower.levels.size() < 2)
        return {};
    const auto& above = shower.levels[shower.levels.size() - 2];
    VertexSet out;
    for (Vertex v : shower.base())
        if (has_neighbour_in(g, v, above))
            out.push_back(v);
    return out;
}

std::vector<std::string> shower_warnings(const Graph& g, const Shower& shower)
{
    std::vector<std::string> out;
    if (!shower.levels.empty() && shower_floor(g, shower).empty())
        out.push_back("empty floor: no vertex of the last level has a neighbour in the level above");
    return out;
}

bool verify_recirculator(const Graph& g, const Shower& shower, const VertexSeq& r)
{
    if (shower.levels.empty() || shower.levels.front().size() != 1)
        throw std::invalid_argument("recirculator needs a shower with a unique head");
    const Vertex head = shower.head(), drain = shower.drain;
    if (r.size() < 2 ||
        !((r.front() == drain && r.back() == head) || (r.front() == head && r.back() == drain)))
        throw std::invalid_argument("recirculator must run between the drain and the head");
    if (!is_induced_path(g, r))
        return false;
    const VertexSet vertices = levels_vertex_set(shower.levels);
    const VertexSet ends = make_set({drain, head});
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (set_contains(vertices, r[i]))
            return false;
        for (Vertex w : g.neighbours(r[i]))
            if (set_contains(vertices, w) && !set_contains(ends, w))
                return false;
    }
    return true;
}

std::optional<VertexSeq> as_induced_path(const Graph& g, const VertexSet& s, std::optional<Vertex> start)
{
    if (s.empty())
        return std::nullopt;
    std::size_t edges = 0;
    std::vector<Vertex> ends;
    for (Vertex v : s) {
        auto d = neighbours_in(g, v, s).size();
        if (d > 2)
            return std::nullopt;
        if (d <= 1)
            ends.push_back(v);
        edges += d;
    }
    if (edges / 2 + 1 != s.size() || !is_connected_set(g, s))
        return std::nullopt;
    Vertex first = ends.front();
    if (start) {
        if (std::find(ends.begin(), ends.end(), *start) == ends.end())
            return std::nullopt;
        first = *start;
    }
    VertexSeq path{first};
    Vertex prev = -1;
    while (path.size() < s.size()) {
        for (Vertex w : neighbours_in(g, path.back(), s))
            if (w != prev) {
                prev = path.back();
                path.push_back(w);
                break;
            }
    }
    return path;
}

BendReport verify_wubend(const Graph& g, const WUBend& bend)
{
    BendReport report;
    auto& out = report.violations;
    out = verify_levelling(g, Levelling{bend.levels});
    if (bend.levels.size() < 2) {
        out.push_back({"too-few-levels", {}, "a bend needs at least two levels"});
        return report;
    }
    if (bend.u_path.empty()) {
        out.push_back({"u-not-induced-path", {}, "drain path is empty"});
        return report;
    }
    const int k = static_cast<int>(bend.levels.size()) - 1;
    const VertexSet& base = bend.levels[k];
    const VertexSet& above = bend.levels[k - 1];
    const VertexSet vertices = levels_vertex_set(bend.levels);
    const VertexSet u_set = make_set(bend.u_path);
    const Vertex w = bend.u_path.front();
    for (Vertex v : bend.u_path)
        require_vertex(g, v);

    auto path = as_induced_path(g, base);
    if (!path)
        out.push_back({"base-not-path", base, "last level does not induce a path"});
    else
        report.size = dist(g, path->front(), path->back()).value();

    if (!is_induced_path(g, bend.u_path))
        out.push_back({"u-not-induced-path", bend.u_path, ""});
    if (auto common = set_intersection(vertices, u_set); !common.empty())
        out.push_back({"u-meets-levelling", common, ""});

    bool attached = std::any_of(above.begin(), above.end(), [&](Vertex p) {
        return g.adjacent(p, w) && has_neighbour_in(g, p, base);
    });
    if (!attached)
        out.push_back({"no-attachment", {w}, "no vertex of level k-1 adjacent to w and to the base"});

    for (Vertex u : bend.u_path)
        for (Vertex b : neighbours_in(g, u, base))
            out.push_back({"u-touches-base", {u, b}, ""});

    const VertexSet u_rest = set_difference(u_set, {w});
    for (Vertex p : above)
        if (has_neighbour_in(g, p, base) && has_neighbour_in(g, p, u_rest))
            out.push_back({"parent-touches-u", {p}, "neighbours in the base and in U minus w"});

    if (bend.kind == WUBend::Kind::u_bend) {
        auto parents = neighbours_in(g, w, above);
        if (parents.size() != 1) {
            out.push_back({"w-parent-not-unique", parents, "w has " + std::to_string(parents.size()) +
                                                               " neighbours in level k-1"});
        }
        else {
            auto children = neighbours_in(g, parents.front(), base);
            if (children.size() != 1)
                out.push_back({"attachment-child-not-unique", children, ""});
            else if (path && children.front() != path->front() && children.front() != path->back())
                out.push_back({"attachment-child-not-end", children, ""});
        }
        for (Vertex p : above)
            if (!has_neighbour_in(g, p, base))
                out.push_back({"parent-without-child", {p}, ""});
    }
    return report;
}

Violations sprinkler_violations(const Graph& g, const Shower& shower, int nu)
{
    if (nu < 1)
        throw std::invalid_argument("sprinkler parameter must be positive");
    Violations out = verify_shower(g, shower);
    if (shower.levels.size() < 2) {
        out.push_back({"too-few-levels", {}, "a sprinkler needs at least two levels"});
        return out;
    }
    const VertexSet& base = shower.base();
    const VertexSet& above = shower.levels[shower.levels.size() - 2];
    auto path = as_induced_path(g, base, shower.drain);
    if (!path) {
        out.push_back({"base-not-path-from-drain", base, "last level is not a path ending at the drain"});
        return out;
    }
    const int n = static_cast<int>(path->size());
    if (n < nu) {
        out.push_back({"base-too-short", base, std::to_string(n) + " base vertices, need " + std::to_string(nu)});
        return out;
    }
    for (int i = 0; i < n - nu; ++i)
        for (Vertex p : neighbours_in(g, (*path)[i], above))
            out.push_back({"early-vertex-has-parent", {(*path)[i], p}, ""});
    for (int i = n - nu; i < n; ++i) {
        Vertex v = (*path)[i];
        bool private_parent = false;
        for (Vertex p : neighbours_in(g, v, above))
            if (neighbours_in(g, p, base).size() == 1)
                private_parent = true;
        if (!private_parent)
            out.push_back({"missing-private-parent", {v}, ""});
    }
    return out;
}

bool verify_sprinkler(const Graph& g, const Shower& shower, int nu) { return sprinkler_violations(g, shower, nu).empty(); }

Violations wand_violations(const Graph& g, const Shower& shower, const Wand& wand)
{
    Violations out;
    if (wand.sets.empty())
        return {{"wand-empty", {}, "a wand has at least one set"}};
    if (wand.length() > shower.depth() - 2)
        out.push_back({"wand-too-long", {}, "length " + std::to_string(wand.length()) + " exceeds k-2"});
    for (int i = 0; i <= wand.length(); ++i) {
        const auto& set = wand.sets[i];
        if (set.empty())
            out.push_back({"wand-set-empty", {}, "W_" + std::to_string(i)});
        if (i >= static_cast<int>(shower.levels.size()) || !std::includes(shower.levels[i].begin(),
                                                                          shower.levels[i].end(), set.begin(),
                                                                          set.end()))
            out.push_back({"wand-set-outside-level", set, "W_" + std::to_string(i)});
    }
    for (int i = 0; i < wand.length(); ++i)
        for (Vertex u : wand.sets[i])
            for (Vertex v : wand.sets[i + 1])
                if (!g.adjacent(u, v))
                    out.push_back({"wand-not-complete", {u, v}, ""});
    return out;
}

bool verify_wand(const Graph& g, const Shower& shower, const Wand& wand) { return wand_violations(g, shower, wand).empty(); }

namespace {

void require_wand_within(const Shower& shower, const Wand& wand)
{
    for (std::size_t i = 0; i < wand.sets.size(); ++i)
        if (i >= shower.levels.size() ||
            !std::includes(shower.levels[i].begin(), shower.levels[i].end(), wand.sets[i].begin(), wand.sets[i].end()))
            throw std::invalid_argument("wand set W_" + std::to_string(i) + " is not inside level " +
                                        std::to_string(i));
}

}  // namespace

VertexSet wand_tops(const Graph& g, const Shower& shower, const Wand& wand, int level)
{
    require_wand_within(shower, wand);
    if (level < 0 || level >= wand.length())
        return {};
    const VertexSet wand_vertices = wand.vertex_set();
    const VertexSet& below = wand.sets[level + 1];
    VertexSet out;
    for (Vertex v : shower.levels[level]) {
        if (set_contains(wand_vertices, v))
            continue;
        auto touched = neighbours_in(g, v, wand_vertices);
        if (!touched.empty() && std::includes(below.begin(), below.end(), touched.begin(), touched.end()))
            out.push_back(v);
    }
    return out;
}

VertexSet wand_shadow(const Graph& g, const Shower& shower, const Wand& wand, const VertexSet& mat)
{
    require_wand_within(shower, wand);
    const VertexSet floor = shower_floor(g, shower);
    if (!std::includes(floor.begin(), floor.end(), mat.begin(), mat.end()))
        throw std::invalid_argument("mat must be a subset of the shower floor");
    const VertexSet wand_vertices = wand.vertex_set();
    auto clean = [&](Vertex v) { return !set_contains(wand_vertices, v) && !has_neighbour_in(g, v, wand_vertices); };

    // Posts run down one level at a time; below the top every vertex is clean.
    const int k = shower.depth();
    VertexSet reached;
    for (int i = 0; i < k; ++i) {
        VertexSet sources = set_union(reached, wand_tops(g, shower, wand, i));
        VertexSet next;
        for (Vertex v : shower.levels[i + 1])
            if (clean(v) && has_neighbour_in(g, v, sources))
                next.push_back(v);
        reached = std::move(next);
    }
    return set_intersection(mat, reached);
}

bool is_jet(const Graph& g, const Shower& shower, const VertexSeq& path)
{
    if (path.empty() || shower.levels.empty() || shower.levels.front().size() != 1)
        return false;
    if (path.front() != shower.head() || path.back() != shower.drain)
        return false;
    const VertexSet vertices = levels_vertex_set(shower.levels);
    for (Vertex v : path)
        if (!set_contains(vertices, v))
            return false;
    return is_induced_path(g, path);
}

namespace {

bool crosses_outside_mat(const std::vector<int>& index, int k, const VertexSet& mat, Vertex a, Vertex b)
{
    if (index[a] == k - 1 && index[b] == k)
        std::swap(a, b);
    return index[a] == k && index[b] == k - 1 && !set_contains(mat, a);
}

}  // namespace

bool is_mat_jet(const Graph& g, const Shower& shower, const VertexSet& mat, const VertexSeq& path)
{
    if (!is_jet(g, shower, path))
        return false;
    auto index = level_index(g, shower.levels);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (crosses_outside_mat(index, shower.depth(), mat, path[i], path[i + 1]))
            return false;
    return true;
}

namespace {

class JetSearch {
  public:
    JetSearch(const Graph& g, const Shower& shower, const std::optional<VertexSet>& mat, int cap, Budget budget)
        : g_(g), shower_(shower), mat_(mat), cap_(cap), counter_(budget, "jet enumeration"),
          index_(level_index(g, shower.levels)), on_path_(g.order(), false), touch_(g.order(), 0),
          to_drain_(g.order(), -1)
    {
    }

    std::vector<VertexSeq> run()
    {
        if (shower_.levels.empty() || shower_.levels.front().size() != 1)
            throw std::invalid_argument("jets need a shower with a unique head");
        require_vertex(g_, shower_.drain);
        if (index_[shower_.drain] < 0)
            return {};
        distances_to_drain();
        const Vertex head = shower_.head();
        if (head == shower_.drain) {
            found_.push_back({head});
            return found_;
        }
        if (to_drain_[head] < 0 || to_drain_[head] > cap_)
            return {};
        push(head);
        extend();
        return found_;
    }

  private:
    void distances_to_drain()
    {
        std::deque<Vertex> queue{shower_.drain};
        to_drain_[shower_.drain] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g_.neighbours(u))
                if (index_[w] >= 0 && to_drain_[w] < 0) {
                    to_drain_[w] = to_drain_[u] + 1;
                    queue.push_back(w);
                }
        }
    }

    void push(Vertex v)
    {
        path_.push_back(v);
        on_path_[v] = true;
        for (Vertex w : g_.neighbours(v))
            ++touch_[w];
    }

    void pop()
    {
        Vertex v = path_.back();
        path_.pop_back();
        on_path_[v] = false;
        for (Vertex w : g_.neighbours(v))
            --touch_[w];
    }

    void extend()
    {
        const Vertex last = path_.back();
        const int edges = static_cast<int>(path_.size());
        for (Vertex w : g_.neighbours(last)) {
            if (index_[w] < 0 || on_path_[w] || touch_[w] != 1)
                continue;
            if (to_drain_[w] < 0 || edges + to_drain_[w] > cap_)
                continue;
            if (mat_ && crosses_outside_mat(index_, shower_.depth(), *mat_, last, w))
                continue;
            counter_.charge();
            push(w);
            if (w == shower_.drain)
                found_.push_back(path_);
            else
                extend();
            pop();
        }
    }

    const Graph& g_;
    const Shower& shower_;
    const std::optional<VertexSet>& mat_;
    int cap_;
    NodeCounter counter_;
    std::vector<int> index_;
    std::vector<bool> on_path_;
    std::vector<int> touch_;
    std::vector<int> to_drain_;
    VertexSeq path_;
    std::vector<VertexSeq> found_;
};

}  // namespace

std::vector<VertexSeq> enumerate_jets(const Graph& g, const Shower& shower, const std::optional<VertexSet>& mat,
                                      int cap, Budget budget)
{
    return JetSearch(g, shower, mat, cap, budget).run();
}

std::set<int> jetset(const Graph& g, const Shower& shower, const std::optional<VertexSet>& mat, int cap,
                     Budget budget)
{
    std::set<int> out;
    for (const auto& jet : enumerate_jets(g, shower, mat, cap, budget))
        out.insert(static_cast<int>(jet.size()) - 1);
    return out;
}

JetMetrics jet_metrics(const Graph& g, const Shower& shower, const VertexSeq& jet)
{
    if (!is_jet(g, shower, jet))
        throw std::invalid_argument("not a jet of the shower");
    const int k = shower.depth();
    if (k < 1)
        throw std::invalid_argument("jet metrics need a shower with at least two levels");
    auto index = level_index(g, shower.levels);

    int tail_start = -1;
    for (int i = static_cast<int>(jet.size()) - 1; i >= 0; --i)
        if (index[jet[i]] == k - 1) {
            tail_start = i;
            break;
        }
    const int edges = static_cast<int>(jet.size()) - 1;
    const int tail_length = edges - tail_start;

    int outside_tail = 0;
    for (int i = 0; i < tail_start; ++i)
        if (index[jet[i]] != k || index[jet[i + 1]] != k)
            ++outside_tail;

    std::vector<int> per_level(k + 1, 0);
    for (Vertex v : jet)
        ++per_level[index[v]];
    int monotone_top = 0;
    while (monotone_top < k && per_level[monotone_top] == 1)
        ++monotone_top;

    return {tail_length, outside_tail - (k - 1), k - monotone_top};
}

Solidity solidity(const std::set<int>& values)
{
    Solidity out{true, 0};
    if (values.empty())
        return out;
    int run = 1, longest = 1;
    bool differ_by_three = false;
    for (auto it = std::next(values.begin()); it != values.end(); ++it) {
        int gap = *it - *std::prev(it);
        if (gap >= 3)
            out.dense = false;
        run = gap == 1 ? run + 1 : 1;
        longest = std::max(longest, run);
    }
    for (int a : values)
        if (values.contains(a + 3))
            differ_by_three = true;
    if (longest >= 2)
        out.max_solid = longest;
    else if (differ_by_three)
        out.max_solid = 1;
    return out;
}

}  // namespace holescope
