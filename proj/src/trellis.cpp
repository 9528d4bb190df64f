#include "holescope/trellis.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace holescope {

namespace {

enum class Kind { x, a, b, ax, bx, c0 };

struct Role {
    Kind kind;
    int row = -1;
    int column = -1;
};

std::string describe(const Role& r)
{
    switch (r.kind) {
    case Kind::x:
        return "x" + std::to_string(r.row);
    case Kind::a:
        return "a" + std::to_string(r.column);
    case Kind::b:
        return "b" + std::to_string(r.column);
    case Kind::ax:
        return "a(" + std::to_string(r.row) + "," + std::to_string(r.column) + ")";
    case Kind::bx:
        return "b(" + std::to_string(r.row) + "," + std::to_string(r.column) + ")";
    case Kind::c0:
        return "c0";
    }
    return "?";
}

void check_shape(const TrellisEmbedding& t)
{
    const auto width = t.a.size();
    if (width == 0 || t.b.size() != width)
        throw std::invalid_argument("trellis needs a and b lists of equal length t+1");
    if (t.a_map.size() != t.x.size() || t.b_map.size() != t.x.size())
        throw std::invalid_argument("trellis maps need one row per apex");
    for (std::size_t r = 0; r < t.x.size(); ++r)
        if (t.a_map[r].size() != width || t.b_map[r].size() != width)
            throw std::invalid_argument("trellis map row " + std::to_string(r) + " is incomplete");
    if (t.extended && t.c0 < 0)
        throw std::invalid_argument("extended trellis needs c0");
}

}  // namespace

Violations verify_trellis(const Graph& g, const TrellisEmbedding& t)
{
    check_shape(t);
    Violations out;
    std::vector<std::optional<Role>> role(g.order());
    auto name = [&](Vertex v, Role r) {
        require_vertex(g, v);
        if (role[v])
            out.push_back({"duplicate-vertex", {v}, describe(*role[v]) + " and " + describe(r)});
        else
            role[v] = r;
    };

    const int first = t.first_column();
    for (int r = 0; r < t.rows(); ++r)
        name(t.x[r], {Kind::x, r});
    for (int j = first; j <= t.columns(); ++j) {
        name(t.a[j], {Kind::a, -1, j});
        name(t.b[j], {Kind::b, -1, j});
        for (int r = 0; r < t.rows(); ++r) {
            name(t.a_map[r][j], {Kind::ax, r, j});
            name(t.b_map[r][j], {Kind::bx, r, j});
        }
    }
    if (t.extended)
        name(t.c0, {Kind::c0});
    if (!out.empty())
        return out;

    std::vector<Edge> required;
    for (int j = first; j <= t.columns(); ++j) {
        if (j > 0)
            required.emplace_back(t.a[j], t.b[j]);
        for (int r = 0; r < t.rows(); ++r) {
            required.emplace_back(t.x[r], t.a_map[r][j]);
            required.emplace_back(t.x[r], t.b_map[r][j]);
            required.emplace_back(t.a_map[r][j], t.a[j]);
            required.emplace_back(t.b_map[r][j], t.b[j]);
        }
    }
    if (t.extended) {
        required.emplace_back(t.a[0], t.c0);
        required.emplace_back(t.c0, t.b[0]);
    }
    for (auto [u, v] : required)
        if (!g.adjacent(u, v))
            out.push_back({"missing-edge", {u, v}, describe(*role[u]) + "-" + describe(*role[v])});

    Graph h(g.order(), required);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!role[u])
            continue;
        for (Vertex v : g.neighbours(u)) {
            if (v < u || !role[v] || h.adjacent(u, v))
                continue;
            const Role &ru = *role[u], &rv = *role[v];
            if (ru.kind == Kind::x && rv.kind == Kind::x) {
                out.push_back({"x-not-stable", {u, v}, ""});
                continue;
            }
            bool cross = ru.column == rv.column && ((ru.kind == Kind::ax && rv.kind == Kind::bx) ||
                                                    (ru.kind == Kind::bx && rv.kind == Kind::ax));
            if (!cross)
                out.push_back({"forbidden-edge", {u, v}, describe(ru) + "-" + describe(rv)});
        }
    }
    return out;
}

TrellisEmbedding sub_trellis(const TrellisEmbedding& t, const std::vector<int>& rows, const std::vector<int>& columns)
{
    check_shape(t);
    TrellisEmbedding out;
    out.extended = t.extended;
    out.c0 = t.c0;
    std::vector<int> cols{0};
    cols.insert(cols.end(), columns.begin(), columns.end());
    for (int j : cols) {
        if (j < 0 || j > t.columns())
            throw std::out_of_range("trellis column " + std::to_string(j));
        out.a.push_back(t.a[j]);
        out.b.push_back(t.b[j]);
    }
    for (int r : rows) {
        if (r < 0 || r >= t.rows())
            throw std::out_of_range("trellis row " + std::to_string(r));
        out.x.push_back(t.x[r]);
        VertexSeq arow, brow;
        for (int j : cols) {
            arow.push_back(t.a_map[r][j]);
            brow.push_back(t.b_map[r][j]);
        }
        out.a_map.push_back(std::move(arow));
        out.b_map.push_back(std::move(brow));
    }
    return out;
}

}  // namespace holescope
