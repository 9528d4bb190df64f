#include "holescope/constructions.hpp"

#include "holescope/holes.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <stdexcept>

namespace holescope {

const char* outcome_name(int outcome)
{
    switch (outcome) {
    case 0:
        return "success";
    case 1:
        return "threshold_not_met";
    default:
        return "budget_exhausted";
    }
}

namespace {

void require_triangle_free(const Graph& g)
{
    if (!is_triangle_free(g))
        throw std::invalid_argument("graph must be triangle-free");
}

template <typename W, typename F>
ConstructionResult<W> guarded(F&& body)
{
    try {
        return body();
    }
    catch (const BudgetExhausted& e) {
        return OutOfBudget{e.what()};
    }
}

std::optional<Vertex> first_common(const Graph& g, const VertexSet& s, Vertex v)
{
    for (Vertex w : g.neighbours(v))
        if (set_contains(s, w))
            return w;
    return std::nullopt;
}

std::vector<VertexSet> bfs_layers(const Graph& g, Vertex root)
{
    std::vector<int> depth(g.order(), -1);
    std::vector<VertexSet> layers{{root}};
    depth[root] = 0;
    while (true) {
        VertexSeq next;
        for (Vertex u : layers.back())
            for (Vertex w : g.neighbours(u))
                if (depth[w] < 0) {
                    depth[w] = static_cast<int>(layers.size());
                    next.push_back(w);
                }
        if (next.empty())
            return layers;
        layers.push_back(make_set(std::move(next)));
    }
}

VertexSeq to_host(const InducedSubgraph& h, const VertexSeq& local)
{
    VertexSeq out;
    for (Vertex v : local)
        out.push_back(h.to_host[v]);
    return out;
}

// Six-hole case analysis around v for a hole p of length at least five inside
// the second neighbourhood of v.
std::optional<VertexSeq> six_hole_near(const Graph& g, Vertex v, const VertexSeq& p)
{
    const VertexSet first = g.neighbours(v);
    const int n = static_cast<int>(p.size());

    VertexSet cover;
    for (Vertex s : first)
        if (std::any_of(p.begin(), p.end(), [&](Vertex q) { return g.adjacent(s, q); }))
            cover.push_back(s);
    auto private_vertices = [&](Vertex s) {
        VertexSeq out;
        for (Vertex q : p)
            if (g.adjacent(s, q) && set_intersection(g.neighbours(q), cover).size() == 1)
                out.push_back(q);
        return out;
    };
    for (std::size_t i = 0; i < cover.size();) {
        if (private_vertices(cover[i]).empty())
            cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }

    for (Vertex s3 : cover)
        for (Vertex priv : private_vertices(s3))
            for (int dir : {1, -1}) {
                const int at = static_cast<int>(std::find(p.begin(), p.end(), priv) - p.begin());
                // p_1..p_5 around p_3 = priv.
                auto pv = [&](int i) { return p[((at + dir * (i - 3)) % n + n) % n]; };
                auto sv = [&](int i) { return i == 3 ? s3 : *first_common(g, cover, pv(i)); };
                const std::vector<VertexSeq> shapes{
                    {v, sv(1), pv(1), pv(2), pv(3), s3},
                    {v, sv(2), pv(2), pv(3), pv(4), sv(4)},
                    {s3, pv(1), pv(2), sv(2), pv(4), pv(5)},
                    {s3, pv(1), pv(2), sv(4), pv(4), pv(5)},
                };
                for (const auto& c : shapes)
                    if (is_induced_cycle(g, c) && c.size() == 6)
                        return c;
            }
    return std::nullopt;
}

VertexSet inclusion_minimal_above(const Graph& g, VertexSet x, int bound, Budget budget)
{
    for (std::size_t i = 0; i < x.size();) {
        VertexSet without = x;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (chi_of_set(g, without, budget) > bound)
            x = std::move(without);
        else
            ++i;
    }
    return x;
}

}  // namespace

Levelling build_levelling(const Graph& g, Budget budget)
{
    if (g.empty())
        throw std::invalid_argument("build_levelling needs a nonnull graph");
    VertexSet best;
    int best_chi = -1;
    for (const auto& comp : components(g)) {
        int chi = chi_of_set(g, comp, budget);
        if (chi > best_chi) {
            best_chi = chi;
            best = comp;
        }
    }
    auto layers = bfs_layers(g, best.front());
    std::size_t cut = 0;
    int cut_chi = -1;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        int chi = chi_of_set(g, layers[i], budget);
        if (chi > cut_chi) {
            cut_chi = chi;
            cut = i;
        }
    }
    layers.resize(cut + 1);
    return Levelling{layers};
}

ConstructionResult<VertexSeq> find_5_hole(const Graph& g, Budget budget)
{
    require_triangle_free(g);
    return guarded<VertexSeq>([&]() -> ConstructionResult<VertexSeq> {
        NodeCounter counter(budget, "find_5_hole");
        for (Vertex v = 0; v < g.order(); ++v) {
            const VertexSet second = neighbourhood(g, v, 2, false);
            for (Vertex x : second)
                for (Vertex y : g.neighbours(x)) {
                    counter.charge();
                    if (y <= x || !set_contains(second, y))
                        continue;
                    Vertex s1 = *first_common(g, g.neighbours(v), x);
                    Vertex s2 = *first_common(g, g.neighbours(v), y);
                    VertexSeq hole{v, s1, x, y, s2};
                    if (!is_induced_cycle(g, hole))
                        throw std::logic_error("find_5_hole assembled a non-hole");
                    return hole;
                }
        }
        return ThresholdNotMet{0, "no vertex has an edge inside its second neighbourhood"};
    });
}

ConstructionResult<VertexSeq> find_6_hole(const Graph& g, Budget budget)
{
    require_triangle_free(g);
    return guarded<VertexSeq>([&]() -> ConstructionResult<VertexSeq> {
        // First pass: the odd hole guaranteed when chi(N^2(v)) > 2.
        for (Vertex v = 0; v < g.order(); ++v) {
            const VertexSet second = neighbourhood(g, v, 2, false);
            if (chi_of_set(g, second, budget) <= 2)
                continue;
            auto h = induced_subgraph(g, second);
            if (auto p = odd_hole_min_length(h.graph, 5, h.graph.order(), budget))
                if (auto hole = six_hole_near(g, v, to_host(h, *p)))
                    return *hole;
        }
        // Second pass: the case analysis only needs a hole of length >= 5.
        for (Vertex v = 0; v < g.order(); ++v) {
            const VertexSet second = neighbourhood(g, v, 2, false);
            auto h = induced_subgraph(g, second);
            for (int len = 5; len <= h.graph.order(); ++len)
                if (auto p = find_hole_of_length(h.graph, len, budget)) {
                    if (auto hole = six_hole_near(g, v, to_host(h, *p)))
                        return *hole;
                    break;
                }
        }
        return ThresholdNotMet{0, "no second neighbourhood has chromatic number above 2 or a hole of length >= 5"};
    });
}

ConstructionResult<VertexSeq> find_ell_hole_c4free(const Graph& g, int ell, Budget budget)
{
    if (ell < 5)
        throw std::invalid_argument("hole length must be at least 5");
    require_triangle_free(g);
    if (find_hole_of_length(g, 4, budget))
        throw std::invalid_argument("graph must have no 4-hole");
    return guarded<VertexSeq>([&]() -> ConstructionResult<VertexSeq> {
        const int bound = 2 * ell - 9;
        const int want = ell - 3;
        bool stalled = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            const VertexSet second = neighbourhood(g, v, 2, false);
            if (chi_of_set(g, second, budget) <= bound)
                continue;
            std::vector<Vertex> parent(g.order(), -1);
            for (Vertex u : second)
                parent[u] = *first_common(g, g.neighbours(v), u);
            const VertexSet x = inclusion_minimal_above(g, second, bound, budget);

            for (Vertex start : x) {
                VertexSeq path{start};
                while (static_cast<int>(path.size()) < want) {
                    std::optional<Vertex> next;
                    for (Vertex y : g.neighbours(path.back())) {
                        if (!set_contains(x, y))
                            continue;
                        bool fresh = std::none_of(path.begin(), path.end(), [&](Vertex q) {
                            return q == y || parent[q] == parent[y] || (q != path.back() && g.adjacent(q, y));
                        });
                        if (fresh) {
                            next = y;
                            break;
                        }
                    }
                    if (!next)
                        break;
                    path.push_back(*next);
                }
                if (static_cast<int>(path.size()) < want) {
                    stalled = true;
                    continue;
                }
                VertexSeq hole{v, parent[path.front()]};
                hole.insert(hole.end(), path.begin(), path.end());
                hole.push_back(parent[path.back()]);
                if (!is_induced_cycle(g, hole) || static_cast<int>(hole.size()) != ell)
                    throw std::logic_error("find_ell_hole_c4free assembled a non-hole");
                return hole;
            }
        }
        if (stalled)
            return ThresholdNotMet{1, "greedy path extension stalled below length " + std::to_string(want)};
        return ThresholdNotMet{0, "no second neighbourhood has chromatic number above " + std::to_string(bound)};
    });
}

ConstructionResult<UniformTrellis> uniform_sub_trellis(const Graph& g, const TrellisEmbedding& t, int size,
                                                       Budget budget)
{
    if (size < 1)
        throw std::invalid_argument("uniform block size must be positive");
    return guarded<UniformTrellis>([&]() -> ConstructionResult<UniformTrellis> {
        NodeCounter counter(budget, "uniform_sub_trellis");
        const int rows = t.rows(), cols = t.columns();
        auto column_uniform = [&](const std::vector<int>& r, int j, bool adjacent) {
            for (std::size_t p = 0; p < r.size(); ++p)
                for (std::size_t q = p + 1; q < r.size(); ++q)
                    if (g.adjacent(t.a_map[r[p]][j], t.b_map[r[q]][j]) != adjacent)
                        return false;
            return true;
        };
        if (cols < size)
            return ThresholdNotMet{0, "trellis has fewer than " + std::to_string(size) + " columns"};
        for (int r = rows; r >= size; --r) {
            std::vector<bool> pick(rows, false);
            std::fill(pick.begin(), pick.begin() + r, true);
            do {
                counter.charge();
                std::vector<int> chosen;
                for (int i = 0; i < rows; ++i)
                    if (pick[i])
                        chosen.push_back(i);
                for (int k : {1, 2}) {
                    std::vector<int> uniform;
                    for (int j = 1; j <= cols; ++j)
                        if (column_uniform(chosen, j, k == 2))
                            uniform.push_back(j);
                    if (static_cast<int>(uniform.size()) >= size)
                        return UniformTrellis{sub_trellis(t, chosen, uniform), k};
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        return ThresholdNotMet{0, "no uniform block with " + std::to_string(size) + " rows and columns"};
    });
}

ConstructionResult<VertexSeq> hole_from_extended_trellis(const Graph& g, const TrellisEmbedding& t, int k, int ell)
{
    if (ell < 8)
        throw std::invalid_argument("trellis holes need length at least 8");
    if (k != 1 && k != 2)
        throw std::invalid_argument("uniform type must be 1 or 2");
    // 1-based accessors.
    auto x = [&](int i) { return t.x.at(i - 1); };
    auto a = [&](int j) { return t.a.at(j); };
    auto b = [&](int j) { return t.b.at(j); };
    auto ax = [&](int i, int j) { return t.a_map.at(i - 1).at(j); };
    auto bx = [&](int i, int j) { return t.b_map.at(i - 1).at(j); };

    auto need = [&](int n) {
        if (t.rows() < n || t.columns() < n)
            throw std::invalid_argument("trellis needs " + std::to_string(n) + " rows and columns for length " +
                                        std::to_string(ell));
    };
    // Interior vertices of P_i and Q_i.
    auto p_inner = [&](int i) { return VertexSeq{ax(i, i + 1), a(i + 1), ax(i + 1, i + 1)}; };
    auto q_inner = [&](int i) {
        if (k == 1)
            return VertexSeq{ax(i, i + 1), a(i + 1), b(i + 1), bx(i + 1, i + 1)};
        return VertexSeq{ax(i, i + 1), bx(i + 1, i + 1)};
    };

    VertexSeq hole;
    auto walk = [&](int from, int to, int q) {
        for (int i = from; i < to; ++i) {
            hole.push_back(x(i));
            auto inner = i < q ? q_inner(i) : p_inner(i);
            hole.insert(hole.end(), inner.begin(), inner.end());
        }
        hole.push_back(x(to));
    };

    if (ell % 4 == 0) {
        const int p = ell / 4;
        need(p);
        walk(1, p, 0);
        hole.insert(hole.end(), {ax(p, 1), a(1), ax(1, 1)});
    }
    else if (k == 1 && ell == 11) {
        if (!t.extended)
            throw std::invalid_argument("length 11 with type 1 needs an extended trellis");
        need(2);
        if (!g.adjacent(ax(1, 0), bx(2, 0))) {
            walk(1, 2, 2);
            hole.insert(hole.end(), {bx(2, 0), b(0), t.c0, a(0), ax(1, 0)});
        }
        else {
            need(3);
            hole = {x(1), ax(1, 0), bx(2, 0)};
            walk(2, 3, 0);
            hole.insert(hole.end(), {ax(3, 1), a(1), ax(1, 1)});
        }
    }
    else {
        const int step = k == 1 ? 5 : 3;
        int q = 1;
        while ((ell - step * q) % 4 != 0)
            ++q;
        const int p = (ell - step * q) / 4;
        need(p + q);
        walk(1, p + q, q);
        if (k == 1)
            hole.insert(hole.end(), {bx(p + q, 1), b(1), a(1), ax(1, 1)});
        else
            hole.insert(hole.end(), {bx(p + q, 1), ax(1, 1)});
    }

    if (static_cast<int>(hole.size()) != ell || !is_induced_cycle(g, hole))
        throw std::invalid_argument("trellis is not uniform of type " + std::to_string(k) +
                                    " on the indices this hole uses");
    return hole;
}

ConstructionResult<VertexSeq> hole_from_type2_cable(const Graph& g, const Cable& c)
{
    const int t = c.length();
    if (t < 2)
        throw std::invalid_argument("type 2 cable holes need t >= 2");
    if (c.base.empty())
        throw std::invalid_argument("cable base is empty");
    auto cls = classify_cable(g, c);
    if (!cls.valid())
        throw std::invalid_argument("invalid cable: " + cls.violations.front().rule);
    for (const auto& [key, type] : cls.pair_types)
        if (type != 2)
            throw std::invalid_argument("cable pair (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ") is not type 2");

    const Vertex v = c.base.front();
    VertexSeq chain{*first_common(g, c.y[t - 1], v)};
    for (int i = t - 2; i >= 0; --i)
        chain.push_back(*first_common(g, c.z_of(i, i + 1), chain.back()));
    VertexSeq hole{c.x[0]};
    hole.insert(hole.end(), chain.rbegin(), chain.rend());
    hole.push_back(v);
    hole.push_back(*first_common(g, c.y[0], v));
    if (static_cast<int>(hole.size()) != t + 3 || !is_induced_cycle(g, hole))
        throw std::logic_error("hole_from_type2_cable assembled a non-hole");
    return hole;
}

ConstructionResult<TypedCable> monochromatic_subcable(const Graph& g, const Cable& c, int m, int n, Budget budget)
{
    auto cls = classify_cable(g, c);
    if (!cls.valid())
        throw std::invalid_argument("invalid cable: " + cls.violations.front().rule);
    return guarded<TypedCable>([&]() -> ConstructionResult<TypedCable> {
        NodeCounter counter(budget, "monochromatic_subcable");
        const int t = c.length();
        for (auto [size, type] : {std::pair{m, 1}, std::pair{n, 2}}) {
            if (size < 0 || size > t)
                continue;
            std::vector<bool> pick(t, false);
            std::fill(pick.begin(), pick.begin() + size, true);
            do {
                counter.charge();
                std::vector<int> chosen;
                for (int i = 0; i < t; ++i)
                    if (pick[i])
                        chosen.push_back(i);
                bool uniform = true;
                for (std::size_t p = 0; p < chosen.size() && uniform; ++p)
                    for (std::size_t q = p + 1; q < chosen.size() && uniform; ++q)
                        uniform = cls.pair_types.at({chosen[p], chosen[q]}) == type;
                if (uniform)
                    return TypedCable{subcable(c, chosen), type};
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        return ThresholdNotMet{0, "no type 1 set of size " + std::to_string(m) + " and no type 2 set of size " +
                                      std::to_string(n)};
    });
}

MulticoverCert cable_type1_to_multicover(const Graph& g, const Cable& c)
{
    auto cls = classify_cable(g, c);
    if (!cls.valid())
        throw std::invalid_argument("invalid cable: " + cls.violations.front().rule);
    for (const auto& [key, type] : cls.pair_types)
        if (type != 1)
            throw std::invalid_argument("cable pair (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ") is not type 1");
    MulticoverCert out;
    for (int i = 0; i < c.length(); ++i)
        out.covers.push_back({c.x[i], c.y[i]});
    out.base = c.base;
    return out;
}

std::vector<long> cable_thresholds(int t, int tau, const PhiTable& phi)
{
    if (t < 0 || tau < 0)
        throw std::invalid_argument("cable length and threshold must be nonnegative");
    std::vector<long> out(t + 1);
    out[t] = tau;
    for (int s = t - 1; s >= 0; --s) {
        if (s >= 62 || out[s + 1] > (LONG_MAX - 1) >> s)
            throw PhiRangeError("stage " + std::to_string(s) + " threshold argument overflows");
        out[s] = phi((out[s + 1] << s) + 1);
    }
    return out;
}

ConstructionResult<Cable> grow_cable(const Graph& g, int t, int tau, const PhiTable& phi, Budget budget)
{
    require_triangle_free(g);
    std::vector<long> thresholds;
    try {
        thresholds = cable_thresholds(t, tau, phi);
    }
    catch (const PhiRangeError& e) {
        return ThresholdNotMet{-1, std::string("phi range exceeded: ") + e.what()};
    }
    return guarded<Cable>([&]() -> ConstructionResult<Cable> {
        Cable cable;
        VertexSet base(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            base[v] = v;
        cable.base = base;

        for (int s = 0;; ++s) {
            const int chi = chi_of_set(g, base, budget);
            if (chi <= thresholds[s])
                return ThresholdNotMet{s, "stage " + std::to_string(s) + ": base chromatic number " +
                                              std::to_string(chi) + " does not exceed " +
                                              std::to_string(thresholds[s])};
            if (s == t)
                break;

            auto h = induced_subgraph(g, base);
            const auto balls = ball_chromatic_numbers(h.graph, 2, budget);
            const int local = static_cast<int>(std::max_element(balls.begin(), balls.end()) - balls.begin());
            const Vertex apex = h.to_host[local];
            VertexSet far;
            for (Vertex u : neighbourhood(h.graph, local, 2, false))
                far.push_back(h.to_host[u]);
            far = make_set(std::move(far));
            if (far.empty())
                return ThresholdNotMet{s + 1, "stage " + std::to_string(s + 1) + ": apex has no second neighbourhood"};

            std::map<std::vector<int>, VertexSeq> classes;
            for (Vertex v : far) {
                std::vector<int> key(s);
                for (int i = 0; i < s; ++i) {
                    key[i] = 2;
                    for (Vertex y : set_intersection(g.neighbours(v), cable.y[i]))
                        if (!g.adjacent(y, apex))
                            key[i] = 1;
                }
                classes[key].push_back(v);
            }
            std::vector<int> best_key;
            VertexSet best;
            int best_chi = -1;
            for (const auto& [key, members] : classes) {
                int c = chi_of_set(g, members, budget);
                if (c > best_chi) {
                    best_chi = c;
                    best_key = key;
                    best = members;
                }
            }

            const VertexSet link = set_intersection(g.neighbours(apex), base);
            for (int i = 0; i < s; ++i) {
                const VertexSet touching = set_intersection(cable.y[i], g.neighbours(apex));
                if (best_key[i] == 1) {
                    cable.y[i] = set_difference(cable.y[i], touching);
                }
                else {
                    VertexSet z = set_difference(cable.y[i], touching);
                    if (!z.empty())
                        cable.z[{i, s}] = z;
                    cable.y[i] = touching;
                }
            }
            cable.x.push_back(apex);
            cable.n.push_back(link);
            cable.y.push_back(link);
            cable.base = best;
            base = best;
        }
        if (auto cls = classify_cable(g, cable); !cls.valid())
            throw std::logic_error("grow_cable built an invalid cable: " + cls.violations.front().rule);
        return cable;
    });
}

}  // namespace holescope
